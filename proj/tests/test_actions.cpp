#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "sclkit/action.hpp"
#include "sclkit/format_error.hpp"
#include "sclkit/word.hpp"

using namespace sclkit::actions;
using sclkit::words::ReducedWord;

namespace {

// Rotation and a reflection of the 4-cycle.
const char* kC4Action =
    "v 4\n"
    "e 0 1\ne 1 2\ne 2 3\ne 0 3\n"
    "perm 1 2 3 0\n"
    "perm 0 3 2 1\n";

}  // namespace

TEST_CASE("classification on the Cayley tree") {
  GraphAction act{CayleyTreeBackend{2}};
  auto ab = classify_isometry(act, ReducedWord::parse("ab"));
  REQUIRE(std::holds_alternative<HyperbolicTau>(ab));
  CHECK(std::get<HyperbolicTau>(ab).tau == 2);

  auto abA = classify_isometry(act, ReducedWord::parse("abA"));
  REQUIRE(std::holds_alternative<HyperbolicTau>(abA));
  CHECK(std::get<HyperbolicTau>(abA).tau == 1);

  auto aabb = classify_isometry(act, ReducedWord::parse("aabb"));
  REQUIRE(std::holds_alternative<HyperbolicTau>(aabb));
  CHECK(std::get<HyperbolicTau>(aabb).tau == 4);

  auto id = classify_isometry(act, ReducedWord::identity(2));
  REQUIRE(std::holds_alternative<Elliptic>(id));
  CHECK(std::get<Elliptic>(id).orbit_diameter == 0);
}

TEST_CASE("explicit finite action: load, apply, classify") {
  std::istringstream in(kC4Action);
  GraphAction act = load_explicit_action(in);
  CHECK(act.rank() == 2);

  // apply composes right-to-left, like function application.
  CHECK(act.apply(ReducedWord::parse("a"), 0) == 1);
  CHECK(act.apply(ReducedWord::parse("A"), 1) == 0);
  CHECK(act.apply(ReducedWord::parse("ab"), 0) == act.apply(ReducedWord::parse("a"),
                                                            act.apply(ReducedWord::parse("b"), 0)));

  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> mag(1, 2), sign(0, 1), vx(0, 3);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> raw;
    for (int i = 0; i < 8; ++i) raw.push_back(sign(rng) ? mag(rng) : -mag(rng));
    ReducedWord w = ReducedWord::reduce(raw, 2);
    int v = vx(rng);
    int expect = v;
    for (int i = w.size() - 1; i >= 0; --i)
      expect = act.apply(ReducedWord::from_reduced({w.letter(i)}, 2), expect);
    CHECK(act.apply(w, v) == expect);
  }

  // Finite graph: everything is elliptic.
  auto rot = classify_isometry(act, ReducedWord::parse("a"));
  REQUIRE(std::holds_alternative<Elliptic>(rot));
  CHECK(std::get<Elliptic>(rot).orbit_diameter == 2);
}

TEST_CASE("explicit action validation") {
  // Not an automorphism: the map sends the edge 0-1 to the non-edge 0-2.
  std::istringstream bad("v 4\ne 0 1\ne 1 2\ne 2 3\ne 0 3\nperm 0 2 1 3\n");
  CHECK_THROWS_AS(load_explicit_action(bad), sclkit::FormatError);

  std::istringstream not_perm("v 3\ne 0 1\ne 1 2\nperm 0 0 1\n");
  CHECK_THROWS_AS(load_explicit_action(not_perm), sclkit::FormatError);

  std::istringstream junk("v 2\ne 0 1\nperm 0 x\n");
  CHECK_THROWS_AS(load_explicit_action(junk), sclkit::FormatError);

  // Disconnected graphs cannot carry a usable action.
  sclkit::hypgraph::FiniteMetricGraph two(2, {});
  CHECK_THROWS_AS(GraphAction(two, {{1, 0}}), std::invalid_argument);
}

TEST_CASE("quasi-axis data for hyperbolic elements") {
  GraphAction act{CayleyTreeBackend{2}};

  // bb(ab)BB reduces to bbaB = u (ba) u^-1 with u = b.
  ReducedWord g = ReducedWord::parse("bbaB");
  auto axis = quasi_axis(act, g);
  CHECK(axis.basepoint.str() == "b");
  CHECK(axis.period.str() == "ba");
  CHECK(axis.tau == 2);
  CHECK(cayley_distance(axis.basepoint, g.pow(2) * axis.basepoint) == 2 * axis.tau);

  // vertex_at walks the period: position tau is g . basepoint.
  CHECK(axis.vertex_at(axis.tau) == g * axis.basepoint);
  CHECK(axis.vertex_at(-axis.tau) == g.inverse() * axis.basepoint);
  CHECK(axis.vertex_at(0) == axis.basepoint);

  auto cubed = quasi_axis(act, ReducedWord::parse("ab").pow(3));
  CHECK(cubed.tau == 6);
  CHECK(cubed.primitive_root().str() == "ab");

  CHECK_THROWS_AS(quasi_axis(act, ReducedWord::identity(2)), std::invalid_argument);
}

TEST_CASE("axis points are genuinely on an invariant line") {
  GraphAction act{CayleyTreeBackend{3}};
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> mag(1, 3), sign(0, 1), len(2, 6);
  for (int t = 0; t < 50; ++t) {
    std::vector<int> raw;
    int n = len(rng);
    for (int i = 0; i < n; ++i) raw.push_back(sign(rng) ? mag(rng) : -mag(rng));
    ReducedWord g = ReducedWord::reduce(raw, 3);
    if (g.empty()) continue;
    auto cls = classify_isometry(act, g);
    REQUIRE(std::holds_alternative<HyperbolicTau>(cls));
    auto axis = quasi_axis(act, g);
    CHECK(std::get<HyperbolicTau>(cls).tau == axis.tau);
    // Consecutive axis points are adjacent; g translates by tau.
    for (long long p = -4; p < 4; ++p)
      CHECK(cayley_distance(axis.vertex_at(p), axis.vertex_at(p + 1)) == 1);
    CHECK(axis.vertex_at(7 + axis.tau) == g * axis.vertex_at(7));
  }
}
