#include <doctest.h>

#include <algorithm>
#include <random>

#include "sclkit/action.hpp"
#include "sclkit/hyperbolicity.hpp"
#include "sclkit/projection.hpp"
#include "sclkit/word.hpp"

using namespace sclkit::actions;
using sclkit::words::ReducedWord;

namespace {

ReducedWord random_nontrivial(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> mag(1, rank), sign(0, 1), len(2, max_len);
  for (;;) {
    std::vector<int> raw;
    int n = len(rng);
    for (int i = 0; i < n; ++i) raw.push_back(sign(rng) ? mag(rng) : -mag(rng));
    ReducedWord w = ReducedWord::reduce(raw, rank);
    if (!w.empty()) return w;
  }
}

}  // namespace

TEST_CASE("vertex projection onto a coordinate axis") {
  GraphAction act{CayleyTreeBackend{2}};
  auto ax = quasi_axis(act, ReducedWord::parse("a"));
  CHECK(ax.tau == 1);

  auto p1 = project_vertex_to_axis(ax, ReducedWord::parse("ab"));
  CHECK(p1.position == 1);
  CHECK(p1.distance == 1);

  auto p2 = project_vertex_to_axis(ax, ReducedWord::parse("bA"));
  CHECK(p2.position == 0);
  CHECK(p2.distance == 2);

  auto p3 = project_vertex_to_axis(ax, ReducedWord::parse("aaaaa"));
  CHECK(p3.position == 5);
  CHECK(p3.distance == 0);
}

TEST_CASE("relation between the two coordinate axes") {
  GraphAction act{CayleyTreeBackend{2}};
  auto axa = quasi_axis(act, ReducedWord::parse("a"));
  auto axb = quasi_axis(act, ReducedWord::parse("b"));
  auto rel = line_relation(axa, axb);
  CHECK_FALSE(rel.same_line);
  CHECK(rel.gap == 0);
  CHECK(rel.diameter == 0);
  CHECK(rel.lo1 == 0);
  CHECK(rel.hi1 == 0);
  CHECK(rel.lo2 == 0);
  CHECK(rel.hi2 == 0);
}

TEST_CASE("line identity is phase-sensitive") {
  GraphAction act{CayleyTreeBackend{2}};
  auto ab = quasi_axis(act, ReducedWord::parse("ab"));
  auto ab3 = quasi_axis(act, ReducedWord::parse("ab").pow(3));
  CHECK(axes_same_line(ab, ab3));
  CHECK(line_relation(ab, ab3).same_line);

  // Conjugating by a letter of the period translates the line.
  ReducedWord conj = ReducedWord::parse("a") * ReducedWord::parse("ab") *
                     ReducedWord::parse("A");
  auto shifted = quasi_axis(act, conj);
  CHECK_FALSE(axes_same_line(ab, shifted));

  auto ba = quasi_axis(act, ReducedWord::parse("ba"));
  CHECK_FALSE(axes_same_line(ab, ba));
}

TEST_CASE("closed form for line relations matches exhaustive scans") {
  GraphAction act{CayleyTreeBackend{2}};
  std::mt19937_64 rng(51);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    ReducedWord g = random_nontrivial(rng, 2, 5);
    ReducedWord h = random_nontrivial(rng, 2, 5);
    auto a1 = quasi_axis(act, g);
    auto a2 = quasi_axis(act, h);
    auto rel = line_relation(a1, a2);
    if (rel.same_line) continue;
    ++checked;

    const int W = a1.basepoint.size() + a2.basepoint.size() + a1.tau + a2.tau + 8;
    int min_dist = 1 << 30;
    long long lo1 = 0, hi1 = 0;
    bool first = true;
    for (long long s = -W; s <= W; ++s) {
      auto p = project_vertex_to_axis(a1, a2.vertex_at(s));
      min_dist = std::min(min_dist, p.distance);
      if (first) {
        lo1 = hi1 = p.position;
        first = false;
      } else {
        lo1 = std::min(lo1, p.position);
        hi1 = std::max(hi1, p.position);
      }
    }
    CHECK(rel.gap == min_dist);
    CHECK(rel.lo1 == lo1);
    CHECK(rel.hi1 == hi1);
    CHECK(rel.diameter == hi1 - lo1);
    CHECK(rel.diameter == projection_diameter(act, a1, a2, W));

    if (rel.gap == 0) {
      // Overlap window on axis2: exactly the scan positions at distance 0.
      long long lo2 = 1 << 30, hi2 = -(1LL << 30);
      for (long long s = -W; s <= W; ++s)
        if (project_vertex_to_axis(a1, a2.vertex_at(s)).distance == 0) {
          lo2 = std::min(lo2, s);
          hi2 = std::max(hi2, s);
        }
      CHECK(rel.lo2 == lo2);
      CHECK(rel.hi2 == hi2);
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("growth test separates parallel from bounded projection") {
  GraphAction act{CayleyTreeBackend{2}};
  auto ab = quasi_axis(act, ReducedWord::parse("ab"));
  auto ab3 = quasi_axis(act, ReducedWord::parse("ab").pow(3));
  auto same = project_with_growth(act, ab, ab3, 8);
  CHECK(same.parallel);
  CHECK(same.diameters[2] >= same.diameters[0]);

  auto other = quasi_axis(act, ReducedWord::parse("aabAA"));
  auto far = project_with_growth(act, ab, other, 8);
  CHECK_FALSE(far.parallel);
  CHECK(far.diameters[0] <= far.threshold);
  CHECK(far.diameters[2] <= far.threshold);
}

TEST_CASE("projection constant over a conjugator ball") {
  GraphAction act{CayleyTreeBackend{2}};
  auto res = wwpd_xi(act, ReducedWord::parse("abAB"), 2);
  CHECK(res.xi == 1);
  REQUIRE(res.parallel_conjugators.size() == 1);
  CHECK(res.parallel_conjugators[0].empty());
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->str() == "a");

  GraphAction line{CayleyTreeBackend{1}};
  auto rank1 = wwpd_xi(line, ReducedWord::parse("a", 1), 3);
  CHECK(rank1.xi == 0);
  CHECK(rank1.parallel_conjugators.size() == 7);  // whole radius-3 ball
  CHECK_FALSE(rank1.witness.has_value());
}

TEST_CASE("hand-built projection data: dpi and the overlap axiom") {
  using Window = std::pair<long long, long long>;
  std::vector<std::vector<Window>> proj(3, std::vector<Window>(3, {0, 0}));
  proj[0][1] = {0, 0};
  proj[0][2] = {10, 10};
  proj[1][0] = {0, 0};
  proj[1][2] = {10, 10};
  auto fam = ProjectionFamily::from_raw(proj, 2);
  CHECK(fam.dpi(0, 1, 2) == 10);
  CHECK(fam.dpi(2, 0, 1) == 0);
  auto viol = fam.axiom1_violation();
  REQUIRE(viol.has_value());
  CHECK(viol->first > fam.eta);
  CHECK(viol->second > fam.eta);

  // Calming member 1's view of member 2 removes the second large value.
  proj[1][2] = {0, 0};
  auto fixed = ProjectionFamily::from_raw(proj, 2);
  CHECK_FALSE(fixed.axiom1_violation().has_value());
}

TEST_CASE("promotion of raw and real families") {
  using Window = std::pair<long long, long long>;
  std::vector<std::vector<Window>> lone(1, std::vector<Window>(1, {0, 0}));
  auto fam1 = ProjectionFamily::from_raw(lone, 0);
  auto prom1 = promote_to_quasitree(fam1, default_promotion_K(0));
  CHECK(prom1.graph.connected());
  CHECK(prom1.graph.vertex_count() >= 3);
  CHECK(prom1.graph.edge_count() == prom1.graph.vertex_count() - 1);
  CHECK(sclkit::hypgraph::bottleneck_constant(prom1.graph, {}).delta == 0);
  REQUIRE(prom1.member_vertex_range.size() == 1);
  int first = prom1.member_vertex_range[0].first;
  CHECK(prom1.vertex_of(0, prom1.member_pos_offset[0]) == first);

  GraphAction act{CayleyTreeBackend{2}};
  auto fam = build_projection_family(act, ReducedWord::parse("abAB"), 2);
  CHECK(fam.eta == 3);
  CHECK(fam.members.size() >= 2);
  CHECK_FALSE(fam.axiom1_violation().has_value());
  int K = default_promotion_K(fam.eta);
  auto prom = promote_to_quasitree(fam, K);
  CHECK(prom.graph.connected());
  auto bn = sclkit::hypgraph::bottleneck_constant(prom.graph, {});
  CHECK(bn.delta <= fam.eta + K);
}
