#include <doctest.h>

#include "cli.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

using json = nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = koszul::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string session(const std::string& name) { return std::string(KOSZUL_SESSIONS_DIR) + "/" + name; }

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const Run r = run(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return json::parse(r.out);
}

/// Every provenance tag anywhere in the document.
void collect_provenance(const json& j, std::set<std::string>& tags, std::size_t& numbers) {
  if (j.is_object()) {
    if (j.contains("provenance")) {
      tags.insert(j["provenance"].get<std::string>());
      ++numbers;
    }
    for (const auto& [k, v] : j.items()) collect_provenance(v, tags, numbers);
  } else if (j.is_array()) {
    for (const auto& v : j) collect_provenance(v, tags, numbers);
  }
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("depth profile of the plane") {
    const json doc = run_json({"depth", "--session", session("r2.json")});
    CHECK(doc["schema"] == koszul::cli::kSchema);
    CHECK(doc["command"] == "depth");
    CHECK(doc["session"]["digest"].get<std::string>().size() == 16);
    const auto& rows = doc["results"]["primes"];
    REQUIRE(rows.size() == 4);
    const std::vector<std::size_t> depths{0, 1, 1, 2};
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(rows[i]["depth"]["value"] == depths[i]);
      CHECK(rows[i]["depth"]["provenance"] == "ext");
      CHECK(rows[i]["depth_koszul"]["value"] == depths[i]);
      CHECK(rows[i]["depth_koszul"]["provenance"] == "koszul");
      CHECK(rows[i]["height"] == depths[i]);
    }
  }

  TEST_CASE("verify passes on the coordinate cross") {
    const json doc = run_json({"verify", "--session", session("r3.json")});
    const auto& props = doc["results"]["properties"];
    REQUIRE(props.size() == 2);
    for (const auto& p : props) CHECK(p["status"] == "pass");
    CHECK(props[0]["agreements"].get<std::size_t>() > 0);
    CHECK(doc["failed"] == false);
  }

  TEST_CASE("order-preserving enumeration on the plane") {
    const json doc = run_json({"enumerate", "--session", session("r2.json"), "--filter", "order-preserving"});
    CHECK(doc["results"]["count"] == 9);
    CHECK(doc["results"]["functions"].size() == 9);
    const json all = run_json({"enumerate", "--session", session("r2.json")});
    CHECK(all["results"]["count"] == 12);
  }

  TEST_CASE("tor over the cross alternates") {
    // R/(x) over k[x,y]/(xy) has the periodic resolution R <-x- R <-y- R <-x- ...
    // so Tor_i(R/(x), R/(x)) is k, k, 0, k for i = 0..3
    const json doc = run_json({"tor", "--session", session("r3.json"), "--left", "R/(x)", "--right", "R/(x)", "--degree", "3"});
    const auto& rows = doc["results"]["tor"];
    REQUIRE(rows.size() == 4);
    CHECK(rows[0]["zero"] == false);
    CHECK(rows[1]["zero"] == false);
    CHECK(rows[2]["zero"] == true);
    CHECK(rows[3]["zero"] == false);
    CHECK(rows[1]["vanishes_at"]["m"] == false);
    CHECK(rows[1]["vanishes_at"]["(x)"] == true);
  }

  TEST_CASE("classification of the session phi") {
    const json doc = run_json({"classify", "--session", session("r2.json")});
    const auto& r = doc["results"];
    CHECK(r["order_preserving"] == true);
    CHECK(r["dual"] == json{{"(0)", 0}, {"(x)", 0}, {"(y)", 1}, {"m", 0}});
    for (const auto& m : r["modules"]) CHECK(m["depth_test"]["member"] == m["tor_test"]["member"]);
  }

  TEST_CASE("every number names its computation path") {
    for (const auto& cmd : std::vector<std::vector<std::string>>{
             {"depth", "--session", session("r2.json")},
             {"grade", "--session", session("r3.json")},
             {"classify", "--session", session("r2.json")},
             {"rfd", "--session", session("r2.json")},
             {"ext", "--session", session("r2.json"), "--left", "k", "--right", "R"}}) {
      const json doc = run_json(cmd);
      std::set<std::string> tags;
      std::size_t numbers = 0;
      collect_provenance(doc["results"], tags, numbers);
      CHECK(numbers > 0);
      for (const auto& t : tags) CHECK(std::set<std::string>{"koszul", "ext", "tor-oracle"}.count(t) == 1);
    }
  }

  TEST_CASE("json output is byte stable") {
    const std::vector<std::string> args{"classify", "--session", session("r2.json"), "--format", "json"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("timing_ms") == std::string::npos);
    auto timed = args;
    timed.push_back("--timing");
    CHECK(run(timed).out.find("timing_ms") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    const Run budget = run({"depth", "--session", session("r2.json"), "--max-resolution-length", "1"});
    CHECK(budget.code == koszul::cli::kExitIndeterminate);
    CHECK(budget.out.find(">=1") != std::string::npos);

    const Run unknown = run({"classify", "--session", session("r2.json"), "--module", "nope"});
    CHECK(unknown.code == koszul::cli::kExitError);
    CHECK(unknown.err.find("classify") != std::string::npos);
    CHECK(unknown.err.find("nope") != std::string::npos);

    const Run no_phi = run({"dual", "--session", session("r3.json")});
    CHECK(no_phi.code == koszul::cli::kExitError);
    CHECK(no_phi.err.find("phi") != std::string::npos);

    CHECK(run({"depth"}).code == koszul::cli::kExitError);
    CHECK(run({"depth", "--session", session("missing.json")}).code == koszul::cli::kExitError);
    CHECK(run({"enumerate", "--session", session("r2.json"), "--filter", "sideways"}).code == koszul::cli::kExitError);
    CHECK(run({"--help"}).code == koszul::cli::kExitOk);
  }

  TEST_CASE("text output") {
    const Run r = run({"rfd", "--session", session("r2.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("rfd 2 [ext]") != std::string::npos);
    CHECK(r.out.find("rfd_small_lower 2 [tor-oracle]") != std::string::npos);
  }
}
