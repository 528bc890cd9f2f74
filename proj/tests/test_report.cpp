#include <doctest.h>

#include <json.hpp>

#include "sclkit/rational.hpp"
#include "sclkit/report.hpp"

using namespace sclkit::cli;

TEST_CASE("digest matches the standard 64-bit FNV-1a vectors") {
  CHECK(fnv1a("") == 14695981039346656037ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
  CHECK(fnv1a("x") != fnv1a("y"));
}

TEST_CASE("reports render deterministically and keep insertion order") {
  auto build = [](double timing) {
    RunReport r;
    r.subcommand = "demo";
    r.inputs_digest = fnv1a("payload");
    r.seed = 7;
    r.timing_ms = timing;
    r.add_constant("zeta", "1");
    r.add_constant("alpha", "2");
    r.add_result("value", "3/4");
    r.add_verdict("bound", "1/48");
    return r;
  };

  auto a = build(0.0);
  auto b = build(987.5);  // timing must not leak into either rendering
  CHECK(a.text() == b.text());
  CHECK(a.json() == b.json());

  // Insertion order survives; no alphabetical reshuffle.
  auto text = a.text();
  CHECK(text.find("zeta") != std::string::npos);
  CHECK(text.find("zeta") < text.find("alpha"));

  auto parsed = nlohmann::json::parse(a.json());
  CHECK(parsed["subcommand"] == "demo");
  CHECK(parsed["seed"] == 7);
  CHECK(parsed["constants"]["zeta"] == "1");
  CHECK(parsed["results"]["value"] == "3/4");
  CHECK(parsed["verdicts"]["bound"] == "1/48");
}

TEST_CASE("rational formatting round-trips") {
  using sclkit::Rational;
  CHECK(sclkit::rational_str(Rational(247, 6000)) == "247/6000");
  CHECK(sclkit::rational_str(Rational(4, 2)) == "2");
  CHECK(sclkit::rational_str(Rational(-1, 3)) == "-1/3");
  CHECK(sclkit::parse_rational("247/6000") == Rational(247, 6000));
  CHECK(sclkit::parse_rational("-5") == Rational(-5));
  CHECK_THROWS(sclkit::parse_rational("1/0"));
  CHECK_THROWS(sclkit::parse_rational("abc"));
}
