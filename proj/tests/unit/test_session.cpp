#include <doctest.h>

#include "fixtures.hpp"
#include "koszul/error.hpp"
#include "koszul/session.hpp"

#include <random>

using namespace koszul;

namespace {

const char* kPlane = R"json({
  "ring": {"char": 101, "vars": ["x", "y"]},
  "modules": {
    "R": {"generators": 1},
    "k": {"generators": 1, "relations": [["x"], ["y"]]},
    "S1": {"generators": 2, "relations": [["x", "y"]]}
  },
  "primes": [
    {"name": "(0)", "generators": [], "zero_ideal": true},
    {"name": "(x)", "generators": ["x"]},
    {"name": "(y)", "generators": ["y"]},
    {"name": "m", "generators": ["x", "y"]}
  ],
  "phi": {"(0)": 0, "(x)": 1, "(y)": 0, "m": 2},
  "config": {"max_resolution_length": 5, "format": "json"}
})json";

std::string error_of(const std::string& text) {
  try {
    parse_session(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("session parsing") {
  TEST_CASE("well-formed ring") {
    auto s = parse_session(R"({"ring": {"char": 101, "vars": ["x", "y"], "relations": ["x*y"]}})");
    CHECK(s.ring->nvars() == 2);
    CHECK(s.ring->field().characteristic() == 101);
    CHECK(s.ring->relations().generators.size() == 1);
    CHECK(s.modules.empty());
    CHECK(s.primes.empty());
    CHECK_FALSE(s.phi.has_value());
    CHECK(s.max_resolution_length() == 6);
    CHECK(s.config.format == "text");
  }

  TEST_CASE("full document") {
    auto s = parse_session(kPlane);
    CHECK(s.modules.size() == 3);
    CHECK(s.module("S1").rank() == 2);
    CHECK(s.module("k").relations().cols() == 2);
    CHECK_THROWS_AS(s.module("nope"), DomainError);
    CHECK(s.primes.size() == 4);
    CHECK(s.primes[0].zero_ideal());
    REQUIRE(s.phi.has_value());
    CHECK(s.phi->values == std::vector<std::size_t>{0, 1, 0, 2});
    CHECK_FALSE(s.phi->validated);
    CHECK(s.max_resolution_length() == 5);
    CHECK(s.config.format == "json");
  }

  TEST_CASE("semantic errors") {
    CHECK(error_of(R"({"ring": {"char": 4, "vars": ["x"]}})").find("characteristic not prime") != std::string::npos);
    CHECK(error_of(R"({"ring": {"char": 101, "vars": ["x"], "relations": ["1"]}})").find("unit relation ideal") !=
          std::string::npos);
    CHECK(error_of(R"({"ring": {"char": 101, "vars": ["x"], "relations": ["x*z"]}})").find("unknown variable 'z'") !=
          std::string::npos);
    CHECK(error_of(R"({"ring": {"char": 101, "vars": ["x"], "relations": ["x*z"]}})").find("ring.relations[0]") !=
          std::string::npos);
    CHECK(error_of(R"({"ring": {"char": 101, "vars": ["x", "x"]}})").find("duplicate variable") != std::string::npos);
    CHECK(error_of(R"({"ring": {"char": 101, "vars": ["x"]}, "primes": [{"name": "p", "generators": ["x"]},
                     {"name": "p", "generators": ["x + 1"]}]})")
              .find("duplicate") != std::string::npos);
    CHECK(error_of(R"({"ring": {"char": 101, "vars": ["x"]}, "modules": {"M": {"generators": 2, "relations": [["x"]]}}})")
              .find("expected a list of 2 polynomials") != std::string::npos);
    CHECK(error_of(R"({"ring": {"char": 101, "vars": ["x"]}, "primes": [{"name": "p", "generators": ["x"]}],
                     "phi": {"q": 1}})")
              .find("unknown prime 'q'") != std::string::npos);
    CHECK(error_of(R"({"ring": {"char": 101, "vars": ["x"]}, "extra": 1})").find("unknown key 'extra'") !=
          std::string::npos);
    CHECK(error_of(R"({"ring": {"char": 101, "vars": ["x"]}, "config": {"format": "xml"}})").find("config.format") !=
          std::string::npos);
    CHECK(error_of(R"({"ring": {"char": 101, "vars": ["x"]}, "primes": [{"name": "u", "generators": ["1"]}]})")
              .find("primes[0]") != std::string::npos);
    CHECK(error_of(R"({"ring": {"char": 101, "vars": ["x"], "order": "weird"}})").find("weird") != std::string::npos);
  }

  TEST_CASE("duplicate names within an object are rejected") {
    auto msg = error_of(R"({"ring": {"char": 101, "vars": ["x"]},
      "modules": {"M": {"generators": 1}, "M": {"generators": 2}}})");
    CHECK(msg.find("duplicate name 'M'") != std::string::npos);
  }

  TEST_CASE("syntax errors carry line and column") {
    try {
      parse_session("{\n  \"ring\": {\"char\": 101,\n   \"vars\": [\"x\" \"y\"]}\n}");
      FAIL("expected a syntax error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("syntax error") != std::string::npos);
      CHECK(e.line() == 3);
      CHECK(e.column() == 17);
    }
    try {
      parse_session("{\"ring\": }");
      FAIL("expected a syntax error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 10);
    }
  }

  TEST_CASE("structured order with precedence") {
    auto s = parse_session(
        R"({"ring": {"char": 7, "vars": ["x", "y", "z"], "order": {"kind": "lex", "precedence": ["z", "x", "y"]}}})");
    CHECK(s.ring->poly().order().kind() == OrderKind::lex);
    CHECK(s.ring->poly().order().precedence() == std::vector<std::uint8_t>{2, 0, 1});
    CHECK(error_of(R"({"ring": {"char": 7, "vars": ["x"], "order": {"kind": "lex", "precedence": ["q"]}}})")
              .find("unknown variable 'q'") != std::string::npos);
  }

  TEST_CASE("load from a missing file") {
    CHECK_THROWS_AS(load_session("/nonexistent/session.json"), Error);
  }
}

TEST_SUITE("serialization") {
  TEST_CASE("round trip is the identity on the canonical form") {
    auto s = parse_session(kPlane);
    const std::string once = serialize(s);
    auto back = parse_session(once);
    CHECK(serialize(back) == once);
    CHECK(session_digest(back) == session_digest(s));
    CHECK(back.modules.size() == s.modules.size());
    for (std::size_t i = 0; i < s.modules.size(); ++i) {
      CHECK(back.modules[i].first == s.modules[i].first);
      CHECK(back.modules[i].second.fingerprint() == s.modules[i].second.fingerprint());
    }
    CHECK(back.phi->values == s.phi->values);
    CHECK(back.primes.size() == s.primes.size());
    CHECK(back.config.max_resolution_length == s.config.max_resolution_length);
  }

  TEST_CASE("equal sessions written differently serialize identically") {
    auto a = parse_session(R"({"ring": {"char": 101, "vars": ["x", "y"], "relations": ["y*x + x*y - x*y"]},
                               "modules": {"M": {"generators": 1, "relations": [["x^2 + 0*y"]]}}})");
    auto b = parse_session(R"({"modules": {"M": {"relations": [["x^2"]], "generators": 1}},
                               "ring": {"relations": ["x*y"], "vars": ["x", "y"], "char": 101, "order": "grevlex"}})");
    CHECK(serialize(a) == serialize(b));
    CHECK(session_digest(a).size() == 16);
  }

  TEST_CASE("digest changes with content") {
    auto a = parse_session(R"({"ring": {"char": 101, "vars": ["x"]}})");
    auto b = parse_session(R"({"ring": {"char": 103, "vars": ["x"]}})");
    CHECK(session_digest(a) != session_digest(b));
  }

  TEST_CASE("random sessions round trip") {
    std::mt19937 rng(47);
    const std::vector<std::string> pool{"x", "y", "x*y", "x^2 - y", "3*x + 5", "y^3", "x*y^2 - 7*x", "0"};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> small(1, 3);
    for (int trial = 0; trial < 40; ++trial) {
      std::string doc = R"({"ring": {"char": 101, "vars": ["x", "y"]}, "modules": {)";
      const int nmod = small(rng);
      for (int m = 0; m < nmod; ++m) {
        const int gens = small(rng);
        doc += (m ? "," : "") + std::string("\"M") + std::to_string(m) + "\": {\"generators\": " + std::to_string(gens) +
               ", \"relations\": [";
        const int nrel = small(rng) - 1;
        for (int r = 0; r < nrel; ++r) {
          doc += r ? ",[" : "[";
          for (int c = 0; c < gens; ++c) doc += (c ? ",\"" : "\"") + pool[pick(rng)] + "\"";
          doc += "]";
        }
        doc += "]}";
      }
      doc += R"(}, "primes": [{"name": "m", "generators": ["x", "y"]}], "phi": {"m": )" +
             std::to_string(small(rng) - 1) + "}}";
      auto s = parse_session(doc);
      const std::string text = serialize(s);
      CHECK(serialize(parse_session(text)) == text);
    }
  }
}
