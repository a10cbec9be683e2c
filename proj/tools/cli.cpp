#include "cli.hpp"

#include "koszul/complex.hpp"
#include "koszul/error.hpp"
#include "koszul/functors.hpp"
#include "koszul/session.hpp"
#include "koszul/torpairs.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#ifndef KOSZUL_VERSION
#define KOSZUL_VERSION "0.0.0"
#endif

namespace koszul::cli {

namespace {

using json = nlohmann::json;

struct Options {
  std::string session_path;
  std::optional<std::size_t> max_length;
  std::string format;
  bool timing = false;
  std::string module;
  std::string prime;
  std::string left;
  std::string right;
  std::size_t degree = 0;
  bool degree_given = false;
  std::size_t shift = 0;
  std::string filter = "none";
  bool allow_large = false;
  std::vector<std::string> generators;
  std::vector<std::string> testset;
};

/// Shared state of one command: the session, the budget and whether any
/// answer came back indeterminate.
struct Context {
  Session session;
  std::size_t max_length = 0;
  bool indeterminate = false;
  bool failed = false;

  const PresentedModule& module(const std::string& name) const { return session.module(name); }
  const PrimeEntry& prime(const std::string& name) const { return session.primes[session.primes.index_of(name)]; }
};

json number(const ExtendedNat& v, const char* provenance) {
  json j{{"provenance", provenance}, {"exact", true}};
  if (v.is_infinite()) {
    j["value"] = "inf";
  } else {
    j["value"] = v.value();
  }
  return j;
}

json number(const DepthResult& d, const char* provenance, Context& ctx) {
  json j = number(d.value, provenance);
  j["exact"] = d.exact;
  if (!d.exact) ctx.indeterminate = true;
  return j;
}

json truth(Truth t, Context& ctx) {
  if (t == Truth::unknown) ctx.indeterminate = true;
  return to_string(t);
}

json verdict(const MembershipVerdict& v, const char* provenance, Context& ctx) {
  json j{{"member", truth(v.truth, ctx)}, {"provenance", provenance}};
  if (v.witness) j["witness"] = {{"prime", v.witness->prime}, {"index", v.witness->index}, {"detail", v.witness->detail}};
  return j;
}

json phi_json(const PhiFunction& phi, const PrimeTable& table) {
  json j = json::object();
  for (std::size_t i = 0; i < table.size(); ++i) j[table[i].name()] = phi[i];
  return j;
}

PhiFunction session_phi(Context& ctx) {
  if (!ctx.session.phi) throw DomainError("the session declares no phi");
  PhiFunction phi = *ctx.session.phi;
  const auto profile = depth_table(ctx.session.primes, ctx.max_length);
  const auto violations = validate_phi(phi, profile);
  if (!violations.empty()) {
    std::string where;
    for (const auto& v : violations) where += (where.empty() ? "" : ", ") + v.prime;
    throw DomainError("phi exceeds depth at " + where);
  }
  return phi;
}

std::vector<std::string> module_names(const Context& ctx, const std::string& only) {
  if (!only.empty()) {
    ctx.module(only);
    return {only};
  }
  std::vector<std::string> names;
  for (const auto& [name, M] : ctx.session.modules) names.push_back(name);
  return names;
}

// A module argument may be omitted, in which case the ring itself is used.
std::pair<std::string, PresentedModule> module_or_ring(const Context& ctx, const std::string& name) {
  if (name.empty()) return {"R", PresentedModule::free(ctx.session.ring, 1)};
  return {name, ctx.module(name)};
}

json cmd_depth(Context& ctx, const Options& o) {
  const auto [name, M] = module_or_ring(ctx, o.module);
  const auto& table = ctx.session.primes;
  json rows = json::array();
  std::optional<DepthProfile> profile;
  if (o.module.empty()) profile = depth_table(table, ctx.max_length);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& p = table[i];
    json row{{"prime", p.name()}};
    const DepthResult via_ext = profile ? profile->entries[i].depth : local_depth(M, p, ctx.max_length);
    row["depth"] = number(via_ext, "ext", ctx);
    row["depth_koszul"] = number(local_depth_koszul(M, p), "koszul");
    row["grade"] = number(profile ? profile->entries[i].grade : grade(p.ideal().generators, M), "koszul");
    if (profile && profile->entries[i].height) row["height"] = *profile->entries[i].height;
    if (via_ext.exact && via_ext.value != local_depth_koszul(M, p)) ctx.failed = true;
    rows.push_back(std::move(row));
  }
  return {{"module", name}, {"primes", rows}};
}

json cmd_grade(Context& ctx, const Options& o) {
  const auto [name, M] = module_or_ring(ctx, o.module);
  std::vector<std::size_t> which;
  if (o.prime.empty()) {
    for (std::size_t i = 0; i < ctx.session.primes.size(); ++i) which.push_back(i);
  } else {
    which.push_back(ctx.session.primes.index_of(o.prime));
  }
  json rows = json::array();
  for (auto i : which) {
    const auto& J = ctx.session.primes[i].ideal().generators;
    const ExtendedNat k = grade(J, M);
    const DepthResult e = grade_via_ext(J, M, ctx.max_length);
    if (e.exact && e.value != k) ctx.failed = true;
    rows.push_back({{"prime", ctx.session.primes[i].name()}, {"grade", number(k, "koszul")}, {"grade_ext", number(e, "ext", ctx)}});
  }
  return {{"module", name}, {"ideals", rows}};
}

json cmd_koszul(Context& ctx, const Options& o) {
  if (o.prime.empty()) throw DomainError("--prime is required");
  const auto [name, M] = module_or_ring(ctx, o.module);
  const auto& x = ctx.prime(o.prime).ideal().generators;
  const ChainComplex chain = koszul_chain(x, M);
  const ChainComplex cochain = koszul_cochain(x, M);
  json rows = json::array();
  for (std::size_t i = 0; i <= x.size(); ++i) {
    const PresentedModule h = homology_at(chain, static_cast<int>(i)).pruned();
    const PresentedModule hc = homology_at(cochain, static_cast<int>(i)).pruned();
    rows.push_back({{"index", i},
                    {"H_i_zero", h.is_zero()},
                    {"H_i_generators", h.rank()},
                    {"H^i_zero", hc.is_zero()},
                    {"H^i_generators", hc.rank()},
                    {"provenance", "koszul"}});
  }
  return {{"module", name}, {"prime", o.prime}, {"length", x.size()}, {"homology", rows}};
}

// Tor_i or Ext^i for i = 0..degree, with vanishing at each table prime.
json cmd_functor(Context& ctx, const Options& o, bool is_tor) {
  if (o.left.empty() || o.right.empty()) throw DomainError("--left and --right are required");
  const PresentedModule& A = ctx.module(o.left);
  const PresentedModule& B = ctx.module(o.right);
  const std::size_t top = o.degree_given ? o.degree : ctx.session.ring->nvars();
  const char* provenance = is_tor ? "tor-oracle" : "ext";
  const std::size_t length = std::min(top + 1, ctx.max_length);
  const ResolutionPrefix res = free_resolution(A, length, ctx.max_length);
  json rows = json::array();
  for (std::size_t i = 0; i <= top; ++i) {
    json row{{"index", i}, {"provenance", provenance}};
    if (!res.knows(i + 1)) {
      row["zero"] = "unknown";
      ctx.indeterminate = true;
      rows.push_back(std::move(row));
      continue;
    }
    const SubQuotient h = is_tor ? tor_subquotient(res, B, i) : ext_subquotient(res, B, i);
    row["zero"] = h.is_zero();
    json local = json::object();
    for (const auto& p : ctx.session.primes.entries()) local[p.name()] = h.vanishes_at(p);
    row["vanishes_at"] = std::move(local);
    rows.push_back(std::move(row));
  }
  return {{"left", o.left}, {"right", o.right}, {is_tor ? "tor" : "ext", rows}};
}

json cmd_classify(Context& ctx, const Options& o) {
  const auto profile = depth_table(ctx.session.primes, ctx.max_length);
  if (!ctx.session.phi) throw DomainError("the session declares no phi");
  std::vector<std::pair<std::string, PresentedModule>> modules;
  for (const auto& name : module_names(ctx, o.module)) modules.emplace_back(name, ctx.module(name));
  const auto report = classify(*ctx.session.phi, ctx.session.primes, profile, modules, ctx.max_length);
  const auto& table = ctx.session.primes;
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"prime", v.prime}, {"phi", v.phi}, {"depth", number(v.depth, "ext", ctx)}});
  }
  json j{{"phi", phi_json(report.phi, table)},
         {"violations", violations},
         {"order_preserving", report.order_preserving},
         {"cotilting", report.cotilting},
         {"almost_cm", {{"verdict", truth(report.almost_cm.truth, ctx)}, {"witnesses", report.almost_cm.witnesses}}}};
  j["both_definable"] = report.both_definable ? json(*report.both_definable) : json(nullptr);
  j["dual"] = report.dual ? phi_json(*report.dual, table) : json(nullptr);
  json chain = json::array();
  for (const auto& level : report.chain.levels) {
    json names = json::array();
    for (auto i : level) names.push_back(table[i].name());
    chain.push_back(names);
  }
  j["subset_chain"] = chain;
  json rows = json::array();
  for (const auto& m : report.modules) {
    const bool both_known = m.membership.truth != Truth::unknown && m.oracle.truth != Truth::unknown;
    if (both_known && m.membership.truth != m.oracle.truth) ctx.failed = true;
    rows.push_back({{"module", m.module},
                    {"depth_test", verdict(m.membership, "ext", ctx)},
                    {"tor_test", verdict(m.oracle, "tor-oracle", ctx)}});
  }
  j["modules"] = rows;
  return j;
}

json cmd_membership(Context& ctx, const Options& o) {
  const PhiFunction phi = session_phi(ctx);
  const auto generators = generator_set(phi, ctx.session.primes, ctx.max_length);
  json rows = json::array();
  for (const auto& name : module_names(ctx, o.module)) {
    const auto& M = ctx.module(name);
    const auto a = class_membership(M, phi, ctx.session.primes, o.shift, ctx.max_length);
    json row{{"module", name}, {"depth_test", verdict(a, "ext", ctx)}};
    if (o.shift == 0) {
      const auto b = tor_oracle_membership(M, generators);
      if (a.truth != Truth::unknown && b.truth != Truth::unknown && a.truth != b.truth) ctx.failed = true;
      row["tor_test"] = verdict(b, "tor-oracle", ctx);
    }
    rows.push_back(std::move(row));
  }
  return {{"phi", phi_json(phi, ctx.session.primes)}, {"shift", o.shift}, {"modules", rows}};
}

json cmd_verify(Context& ctx, const Options& o) {
  const auto& table = ctx.session.primes;
  const auto profile = depth_table(table, ctx.max_length);
  std::vector<PhiFunction> phis;
  if (ctx.session.phi) {
    phis.push_back(session_phi(ctx));
  } else {
    phis = enumerate_phi(profile, table, PhiFilter::none, o.allow_large);
  }
  std::size_t agree = 0, disagree = 0, undecided = 0, trips = 0, broken = 0;
  json disagreements = json::array();
  json broken_trips = json::array();
  for (const auto& phi : phis) {
    const auto generators = generator_set(phi, table, ctx.max_length);
    for (const auto& [name, M] : ctx.session.modules) {
      const auto a = class_membership(M, phi, table, 0, ctx.max_length);
      const auto b = tor_oracle_membership(M, generators);
      if (a.truth == Truth::unknown || b.truth == Truth::unknown) {
        ++undecided;
      } else if (a.truth == b.truth) {
        ++agree;
      } else {
        ++disagree;
        disagreements.push_back({{"phi", phi.to_string()}, {"module", name}});
      }
    }
    ++trips;
    const auto back = recover_phi(as_inputs(generators), table, ctx.max_length);
    if (!(back == phi)) {
      ++broken;
      broken_trips.push_back({{"phi", phi.to_string()}, {"recovered", back.to_string()}});
    }
  }
  if (disagree || broken) ctx.failed = true;
  if (undecided) ctx.indeterminate = true;
  const auto status = [](std::size_t bad, std::size_t unknown) {
    return bad ? "fail" : (unknown ? "indeterminate" : "pass");
  };
  json oracle{{"property", "tor oracle equals depth membership"},
              {"status", status(disagree, undecided)},
              {"agreements", agree},
              {"disagreements", disagreements},
              {"undecided", undecided},
              {"provenance", "tor-oracle"}};
  json trip{{"property", "recover_phi inverts generator_set"},
            {"status", status(broken, 0)},
            {"functions", trips},
            {"mismatches", broken_trips},
            {"provenance", "tor-oracle"}};
  return {{"functions", phis.size()}, {"modules", ctx.session.modules.size()}, {"properties", {oracle, trip}}};
}

json cmd_recover(Context& ctx, const Options& o) {
  const auto& table = ctx.session.primes;
  std::vector<GeneratorInput> inputs;
  std::optional<PhiFunction> source;
  if (o.generators.empty()) {
    source = session_phi(ctx);
    inputs = as_inputs(generator_set(*source, table, ctx.max_length));
  } else {
    for (const auto& arg : o.generators) {
      const auto at = arg.find('@');
      GeneratorInput in{ctx.module(arg.substr(0, at)), std::nullopt, std::nullopt};
      if (at != std::string::npos) in.localize_at = table.index_of(arg.substr(at + 1));
      inputs.push_back(std::move(in));
    }
  }
  const PhiFunction phi = recover_phi(inputs, table, ctx.max_length);
  json j{{"phi", phi_json(phi, table)}, {"generators", inputs.size()}, {"provenance", "tor-oracle"}};
  if (source) {
    j["round_trip"] = (phi == *source);
    if (!(phi == *source)) ctx.failed = true;
  }
  return j;
}

json cmd_enumerate(Context& ctx, const Options& o) {
  const auto& table = ctx.session.primes;
  const auto profile = depth_table(table, ctx.max_length);
  const auto phis = enumerate_phi(profile, table, phi_filter_from_string(o.filter), o.allow_large);
  json list = json::array();
  for (const auto& phi : phis) list.push_back(phi.to_string());
  json order = json::array();
  for (const auto& p : table.entries()) order.push_back(p.name());
  return {{"filter", o.filter}, {"count", phis.size()}, {"prime_order", order}, {"functions", list}};
}

json cmd_rfd(Context& ctx, const Options& o) {
  const auto& table = ctx.session.primes;
  const auto profile = depth_table(table, ctx.max_length);
  std::vector<PresentedModule> testset;
  const auto test_names = o.testset.empty() ? module_names(ctx, "") : o.testset;
  for (const auto& name : test_names) testset.push_back(ctx.module(name));
  json rows = json::array();
  for (const auto& name : module_names(ctx, o.module)) {
    const auto& M = ctx.module(name);
    const auto r = rfd(M, table, profile, ctx.max_length);
    const auto small = rfd_small_lower(M, testset, ctx.max_length);
    if (!r.exact) ctx.indeterminate = true;
    json row{{"module", name},
             {"rfd", {{"value", r.value}, {"exact", r.exact}, {"provenance", "ext"}}},
             {"rfd_small_lower", {{"value", small.value}, {"exact", true}, {"provenance", "tor-oracle"}}}};
    if (r.prime) row["attained_at"] = *r.prime;
    json skipped = json::array();
    for (auto i : small.skipped) skipped.push_back(test_names[i]);
    row["skipped_test_modules"] = skipped;
    if (r.exact && small.value > r.value) ctx.failed = true;
    rows.push_back(std::move(row));
  }
  return {{"test_modules", test_names}, {"modules", rows}};
}

json cmd_dual(Context& ctx, const Options&) {
  const auto& table = ctx.session.primes;
  const PhiFunction phi = session_phi(ctx);
  PhiFunction psi = regular_dual(phi, table);
  const auto profile = depth_table(table, ctx.max_length);
  const bool validated = validate_phi(psi, profile).empty();
  if (!validated) ctx.failed = true;
  return {{"phi", phi_json(phi, table)},
          {"dual", phi_json(psi, table)},
          {"dual_validated", validated},
          {"double_dual_is_phi", regular_dual(psi, table) == phi}};
}

// Text rendering. Provenance-tagged numbers print as "2 [ext]".
bool is_number_cell(const json& j) { return j.is_object() && j.contains("value") && j.contains("provenance"); }

std::string cell(const json& j) {
  if (is_number_cell(j)) {
    std::string v = j["value"].is_string() ? j["value"].get<std::string>() : j["value"].dump();
    if (!j.value("exact", true)) v = ">=" + v;
    return v + " [" + j["provenance"].get<std::string>() + "]";
  }
  if (j.is_object() && j.contains("member")) {
    std::string v = j["member"].get<std::string>() + " [" + j["provenance"].get<std::string>() + "]";
    if (j.contains("witness")) {
      const auto& w = j["witness"];
      v += " at " + w["prime"].get<std::string>() + " (" + w["detail"].get<std::string>() + ")";
    }
    return v;
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(std::ostream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && !is_number_cell(value)) {
      out << pad << key << ":\n";
      render(out, value, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& row : value) {
        out << pad << "  -";
        bool first = true;
        for (const auto& [k, v] : row.items()) {
          out << (first ? " " : ", ") << k << " " << cell(v);
          first = false;
        }
        out << "\n";
      }
    } else {
      out << pad << key << ": " << cell(value) << "\n";
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Depth, Koszul homology and Tor-pair classification over quotients of polynomial rings", "koszul"};
  app.set_version_flag("--version", KOSZUL_VERSION);
  app.require_subcommand(1);
  Options o;

  using Handler = std::function<json(Context&, const Options&)>;
  std::map<std::string, Handler> handlers;
  const auto add = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--session", o.session_path, "Session file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--max-resolution-length", o.max_length, "Longest free resolution to build (default: vars + 4)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--format", o.format, "Output format, overriding the session")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--timing", o.timing, "Add wall-clock timing to the report (breaks byte stability)");
    handlers[name] = std::move(h);
    return sub;
  };

  auto* depth_cmd = add("depth", "Depth profile at the declared primes", cmd_depth);
  depth_cmd->add_option("--module", o.module, "Module name (default: the ring)");
  auto* grade_cmd = add("grade", "grade(p; M) via Koszul cohomology and via Ext", cmd_grade);
  grade_cmd->add_option("--module", o.module, "Module name (default: the ring)");
  grade_cmd->add_option("--prime", o.prime, "Prime name (default: every prime)");
  auto* koszul_cmd = add("koszul", "Koszul homology and cohomology on the generators of a prime", cmd_koszul);
  koszul_cmd->add_option("--module", o.module, "Module name (default: the ring)");
  koszul_cmd->add_option("--prime", o.prime, "Prime name")->required();
  for (const bool is_tor : {true, false}) {
    auto* sub = add(is_tor ? "tor" : "ext", is_tor ? "Tor_i(left, right)" : "Ext^i(left, right)",
                    [is_tor](Context& c, const Options& opt) { return cmd_functor(c, opt, is_tor); });
    sub->add_option("--left", o.left, "Module resolved")->required();
    sub->add_option("--right", o.right, "Coefficient module")->required();
    sub->add_option("--degree", o.degree, "Highest degree (default: number of variables)");
  }
  auto* classify_cmd = add("classify", "Classify the session phi against the declared modules", cmd_classify);
  classify_cmd->add_option("--module", o.module, "Only this module");
  auto* membership_cmd = add("membership", "M in C_(i) for the session phi", cmd_membership);
  membership_cmd->add_option("--module", o.module, "Only this module");
  membership_cmd->add_option("--shift", o.shift, "Shift i of the class C_(i)");
  auto* verify_cmd = add("verify", "Run the Tor oracle and round trip suites on the session", cmd_verify);
  verify_cmd->add_flag("--allow-large-enumeration", o.allow_large, "Permit enumerations above the guard");
  auto* recover_cmd = add("recover", "Recover phi from generators", cmd_recover);
  recover_cmd->add_option("--generator", o.generators, "NAME or NAME@PRIME (localized); default: the phi generators");
  auto* enumerate_cmd = add("enumerate", "All phi <= depth on the prime table", cmd_enumerate);
  enumerate_cmd->add_option("--filter", o.filter, "none, order-preserving or both-definable")
      ->check(CLI::IsMember({"none", "order-preserving", "both-definable"}));
  enumerate_cmd->add_flag("--allow-large-enumeration", o.allow_large, "Permit enumerations above the guard");
  auto* rfd_cmd = add("rfd", "Restricted flat dimension and its small lower bound", cmd_rfd);
  rfd_cmd->add_option("--module", o.module, "Only this module");
  rfd_cmd->add_option("--testset", o.testset, "Test modules for the lower bound (default: every module)");
  add("dual", "Regular dual psi = height - phi", cmd_dual);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }
  const CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  if (command == "tor" || command == "ext") o.degree_given = chosen->count("--degree") > 0;

  Context ctx;
  try {
    ctx.session = load_session(o.session_path);
  } catch (const Error& e) {
    err << "error: loading session: " << e.what() << "\n";
    return kExitError;
  }
  ctx.max_length = o.max_length ? *o.max_length : ctx.session.max_resolution_length();
  const std::string format = o.format.empty() ? ctx.session.config.format : o.format;

  json results;
  const auto start = std::chrono::steady_clock::now();
  try {
    results = handlers.at(command)(ctx, o);
  } catch (const BudgetExceeded& e) {
    err << "indeterminate: " << command << ": " << e.what() << "\n";
    ctx.indeterminate = true;
    results = {{"budget_exceeded", e.what()}};
  } catch (const Error& e) {
    err << "error: " << command << ": " << e.what() << "\n";
    return kExitError;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json doc{{"schema", kSchema},
           {"tool", {{"name", "koszul"}, {"version", KOSZUL_VERSION}}},
           {"session", {{"digest", session_digest(ctx.session)}, {"max_resolution_length", ctx.max_length}}},
           {"command", command},
           {"results", results},
           {"indeterminate", ctx.indeterminate},
           {"failed", ctx.failed}};
  if (o.timing) doc["timing_ms"] = ms;

  if (format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    render(out, doc, 0);
  }
  if (ctx.failed) return kExitError;
  return ctx.indeterminate ? kExitIndeterminate : kExitOk;
}

}  // namespace koszul::cli
