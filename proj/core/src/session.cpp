#include "koszul/session.hpp"

#include "koszul/error.hpp"
#include "koszul/expression.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace koszul {

using json = nlohmann::ordered_json;

const PresentedModule& Session::module(const std::string& name) const {
  for (const auto& [n, m] : modules) {
    if (n == name) return m;
  }
  throw DomainError("unknown module '" + name + "'");
}

std::size_t Session::max_resolution_length() const {
  return config.max_resolution_length.value_or(ring->nvars() + 4);
}

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Offset of the first character of the token that ends at `last`.
std::size_t token_start(std::string_view text, std::size_t last) {
  if (last >= text.size()) return last;
  if (text[last] == '"') {
    for (std::size_t i = last; i-- > 0;) {
      if (text[i] == '"' && (i == 0 || text[i - 1] != '\\')) return i;
    }
    return last;
  }
  auto literal = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+'; };
  if (!literal(text[last])) return last;
  std::size_t i = last;
  while (i > 0 && literal(text[i - 1])) --i;
  return i;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

void allow_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(where, "expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : keys) known = known || item.key() == k;
    if (!known) fail(where, "unknown key '" + item.key() + "'");
  }
}

const json& require(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::uint64_t as_count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    fail(where, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

Polynomial parse_poly(const json& j, const PolyRing& ring, const std::string& where) {
  std::string text = as_string(j, where);
  try {
    return canonical_poly(text, ring);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

MonomialOrder parse_order(const json& j, const std::vector<std::string>& vars) {
  if (j.is_string()) return MonomialOrder(order_kind_from_string(j.get<std::string>()), vars.size());
  allow_keys(j, "ring.order", {"kind", "precedence"});
  OrderKind kind = order_kind_from_string(as_string(require(j, "ring.order", "kind"), "ring.order.kind"));
  auto it = j.find("precedence");
  if (it == j.end()) return MonomialOrder(kind, vars.size());
  if (!it->is_array()) fail("ring.order.precedence", "expected a list of variable names");
  std::vector<std::uint8_t> prec;
  for (const auto& v : *it) {
    const std::string name = as_string(v, "ring.order.precedence");
    auto pos = std::find(vars.begin(), vars.end(), name);
    if (pos == vars.end()) fail("ring.order.precedence", "unknown variable '" + name + "'");
    prec.push_back(static_cast<std::uint8_t>(pos - vars.begin()));
  }
  return MonomialOrder(kind, std::move(prec));
}

RingPtr parse_ring(const json& j) {
  allow_keys(j, "ring", {"char", "vars", "order", "relations", "equidimensional"});
  const std::uint64_t p = as_count(require(j, "ring", "char"), "ring.char");
  const json& jv = require(j, "ring", "vars");
  if (!jv.is_array()) fail("ring.vars", "expected a list of names");
  std::vector<std::string> vars;
  for (const auto& v : jv) vars.push_back(as_string(v, "ring.vars"));
  PrimeField field(p);
  MonomialOrder order = j.contains("order") ? parse_order(j["order"], vars) : MonomialOrder(OrderKind::grevlex, vars.size());
  auto poly = std::make_shared<const PolyRing>(field, vars, order);
  Ideal rels;
  if (j.contains("relations")) {
    const json& jr = j["relations"];
    if (!jr.is_array()) fail("ring.relations", "expected a list of polynomials");
    for (std::size_t i = 0; i < jr.size(); ++i) {
      rels.generators.push_back(parse_poly(jr[i], *poly, "ring.relations[" + std::to_string(i) + "]"));
    }
  }
  RingOptions options;
  if (j.contains("equidimensional")) {
    if (!j["equidimensional"].is_boolean()) fail("ring.equidimensional", "expected a boolean");
    options.equidimensional = j["equidimensional"].get<bool>();
  }
  return std::make_shared<const QuotientRing>(poly, std::move(rels), options);
}

PresentedModule parse_module(const json& j, const RingPtr& ring, const std::string& where) {
  allow_keys(j, where, {"generators", "relations"});
  const auto n = static_cast<std::size_t>(as_count(require(j, where, "generators"), where + ".generators"));
  std::vector<Vec> columns;
  ModuleOrder order(ring->poly().order());
  if (j.contains("relations")) {
    const json& jr = j["relations"];
    if (!jr.is_array()) fail(where + ".relations", "expected a list of relation vectors");
    for (std::size_t r = 0; r < jr.size(); ++r) {
      const std::string at = where + ".relations[" + std::to_string(r) + "]";
      if (!jr[r].is_array() || jr[r].size() != n) {
        fail(at, "expected a list of " + std::to_string(n) + " polynomials");
      }
      Vec v;
      for (std::size_t c = 0; c < n; ++c) {
        Polynomial f = ring->reduce(parse_poly(jr[r][c], ring->poly(), at + "[" + std::to_string(c) + "]"));
        for (const auto& t : f.terms()) v.push_back(VecTerm{t.mon, static_cast<std::uint32_t>(c), t.coeff});
      }
      columns.push_back(VecArith(ring->poly(), order).normalize(std::move(v)));
    }
  }
  return PresentedModule(ring, n, Matrix::from_columns(ring, n, columns));
}

PrimeEntry parse_prime(const json& j, const RingPtr& ring, std::size_t index) {
  const std::string where = "primes[" + std::to_string(index) + "]";
  allow_keys(j, where, {"name", "generators", "zero_ideal"});
  std::string name = as_string(require(j, where, "name"), where + ".name");
  Ideal ideal;
  if (j.contains("generators")) {
    const json& jg = j["generators"];
    if (!jg.is_array()) fail(where + ".generators", "expected a list of polynomials");
    for (std::size_t i = 0; i < jg.size(); ++i) {
      ideal.generators.push_back(parse_poly(jg[i], ring->poly(), where + ".generators[" + std::to_string(i) + "]"));
    }
  }
  bool zero = false;
  if (j.contains("zero_ideal")) {
    if (!j["zero_ideal"].is_boolean()) fail(where + ".zero_ideal", "expected a boolean");
    zero = j["zero_ideal"].get<bool>();
  }
  try {
    return PrimeEntry(name, ring, std::move(ideal), zero);
  } catch (const DomainError& e) {
    throw DomainError(where + ": " + e.what());
  }
}

// Duplicate object keys are legal JSON but would silently drop a definition.
json parse_document(std::string_view text) {
  std::vector<std::set<std::string>> open;
  auto callback = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start: open.emplace_back(); break;
      case json::parse_event_t::object_end: open.pop_back(); break;
      case json::parse_event_t::key: {
        const auto key = parsed.get<std::string>();
        if (!open.back().insert(key).second) throw ParseError("duplicate name '" + key + "'");
        break;
      }
      default: break;
    }
    return true;
  };
  try {
    return json::parse(text.begin(), text.end(), callback);
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, token_start(text, e.byte == 0 ? 0 : e.byte - 1));
    std::string msg = e.what();
    // drop the library's own "[json.exception.parse_error.101] parse error at line L, column C: " prefix
    if (auto pos = msg.find(": "); pos != std::string::npos) msg = msg.substr(pos + 2);
    if (msg.rfind("syntax error", 0) != 0) msg = "syntax error: " + msg;
    throw ParseError(msg, line, column);
  }
}

}  // namespace

Session parse_session(std::string_view text) {
  json doc = parse_document(text);
  allow_keys(doc, "session", {"ring", "modules", "primes", "phi", "config"});
  Session s;
  s.ring = parse_ring(require(doc, "session", "ring"));
  if (doc.contains("modules")) {
    const json& jm = doc["modules"];
    if (!jm.is_object()) fail("modules", "expected an object mapping names to modules");
    for (const auto& item : jm.items()) {
      s.modules.emplace_back(item.key(), parse_module(item.value(), s.ring, "modules." + item.key()));
    }
  }
  std::vector<PrimeEntry> primes;
  if (doc.contains("primes")) {
    const json& jp = doc["primes"];
    if (!jp.is_array()) fail("primes", "expected a list of primes");
    for (std::size_t i = 0; i < jp.size(); ++i) primes.push_back(parse_prime(jp[i], s.ring, i));
  }
  s.primes = PrimeTable(s.ring, std::move(primes));
  if (doc.contains("phi")) {
    const json& jf = doc["phi"];
    if (!jf.is_object()) fail("phi", "expected an object mapping prime names to integers");
    std::map<std::string, std::size_t> values;
    for (const auto& item : jf.items()) {
      values[item.key()] = static_cast<std::size_t>(as_count(item.value(), "phi." + item.key()));
    }
    s.phi = PhiFunction::from_map(s.primes, values);
  }
  if (doc.contains("config")) {
    const json& jc = doc["config"];
    allow_keys(jc, "config", {"max_resolution_length", "format"});
    if (jc.contains("max_resolution_length")) {
      s.config.max_resolution_length =
          static_cast<std::size_t>(as_count(jc["max_resolution_length"], "config.max_resolution_length"));
    }
    if (jc.contains("format")) {
      s.config.format = as_string(jc["format"], "config.format");
      if (s.config.format != "text" && s.config.format != "json") {
        fail("config.format", "expected \"text\" or \"json\"");
      }
    }
  }
  return s;
}

Session load_session(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read session file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str());
}

std::string serialize(const Session& s) {
  const QuotientRing& R = *s.ring;
  const PolyRing& P = R.poly();
  json ring;
  ring["char"] = R.field().characteristic();
  ring["vars"] = P.variables();
  json order;
  order["kind"] = to_string(P.order().kind());
  json prec = json::array();
  for (auto i : P.order().precedence()) prec.push_back(P.variables()[i]);
  order["precedence"] = prec;
  ring["order"] = order;
  json rels = json::array();
  for (const auto& g : R.relations().generators) rels.push_back(P.to_string(g));
  ring["relations"] = rels;
  if (R.options().equidimensional) ring["equidimensional"] = true;

  json doc;
  doc["ring"] = ring;
  json modules = json::object();
  for (const auto& [name, M] : s.modules) {
    json m;
    m["generators"] = M.rank();
    json columns = json::array();
    for (std::size_t c = 0; c < M.relations().cols(); ++c) {
      json col = json::array();
      for (std::size_t r = 0; r < M.rank(); ++r) col.push_back(P.to_string(M.relations().at(r, c)));
      columns.push_back(col);
    }
    m["relations"] = columns;
    modules[name] = m;
  }
  doc["modules"] = modules;
  json primes = json::array();
  for (const auto& p : s.primes.entries()) {
    json e;
    e["name"] = p.name();
    json gens = json::array();
    for (const auto& g : p.ideal().generators) gens.push_back(P.to_string(g));
    e["generators"] = gens;
    if (p.zero_ideal()) e["zero_ideal"] = true;
    primes.push_back(e);
  }
  doc["primes"] = primes;
  if (s.phi) {
    json phi = json::object();
    for (std::size_t i = 0; i < s.primes.size(); ++i) phi[s.primes[i].name()] = (*s.phi)[i];
    doc["phi"] = phi;
  }
  json config = json::object();
  if (s.config.max_resolution_length) config["max_resolution_length"] = *s.config.max_resolution_length;
  config["format"] = s.config.format;
  doc["config"] = config;
  return doc.dump(2) + "\n";
}

std::string session_digest(const Session& session) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize(session)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace koszul
