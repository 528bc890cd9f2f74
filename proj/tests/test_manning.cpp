#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "sclkit/graph.hpp"
#include "sclkit/hyperbolicity.hpp"
#include "sclkit/manning.hpp"

using namespace sclkit::hypgraph;

namespace {

// A path with two long prongs that rejoin: thin at small scale along the
// stem, but with a genuine cycle at radius-20 resolution.
FiniteMetricGraph tuning_fork() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 25; ++i) edges.emplace_back(i, i + 1);  // stem 0..25
  edges.emplace_back(25, 26);                                 // prong A: 26..65
  for (int i = 26; i < 65; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(25, 66);                                 // prong B: 66..105
  for (int i = 66; i < 105; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(65, 106);                                // rejoin
  edges.emplace_back(105, 106);
  return FiniteMetricGraph(107, edges);
}

}  // namespace

TEST_CASE("quotient of a long path") {
  auto g = FiniteMetricGraph::path(100);
  auto tq = manning_tree(g, 1);
  CHECK(tq.radius_step == 20);
  CHECK(tq.tree.vertex_count() == 5);
  CHECK(tq.tree.edge_count() == 4);
  // Gates: nearest vertex of each piece to the base.
  CHECK(tq.beta == std::vector<int>{0, 21, 41, 61, 81});
  CHECK(tq.level == std::vector<int>{1, 2, 3, 4, 5});
  for (int v = 0; v <= 100; ++v) {
    CHECK(tq.alpha[static_cast<size_t>(v)] >= 0);
    CHECK(tq.alpha[static_cast<size_t>(v)] < 5);
  }

  auto check = verify_manning_inequalities(g, tq);
  CHECK(check.ok);
  CHECK(check.pairs_checked > 0);
  CHECK(check.worst_lower_margin == 28);
  CHECK(check.worst_upper_margin == 5);
}

TEST_CASE("quotient of a star keeps the branching") {
  auto g = FiniteMetricGraph::star(3, 50);
  auto tq = manning_tree(g, 1);
  CHECK(tq.tree.vertex_count() == 7);
  CHECK(tq.tree.edge_count() == 6);
  CHECK(tq.tree.neighbors(0).size() == 3);
  CHECK(verify_manning_inequalities(g, tq).ok);
}

TEST_CASE("small graphs collapse to one point") {
  auto g = FiniteMetricGraph::path(6);
  auto tq = manning_tree(g, 1);
  CHECK(tq.tree.vertex_count() == 1);
  auto check = verify_manning_inequalities(g, tq);
  CHECK(check.ok);
  CHECK(check.pairs_checked == 0);
}

TEST_CASE("a large cycle needs its real bottleneck constant") {
  auto g = FiniteMetricGraph::cycle(100);
  // At delta 1 the two arcs form separate mid-level pieces that rejoin at
  // the antipode: the quotient has a cycle.
  CHECK_THROWS_AS(manning_tree(g, 1), NotATreeError);
  // At the measured constant the whole cycle sits inside one annulus.
  int delta = bottleneck_constant(g, {}).delta;
  CHECK(delta == 25);
  auto tq = manning_tree(g, delta);
  CHECK(tq.tree.vertex_count() == 1);
  CHECK(verify_manning_inequalities(g, tq).ok);
}

TEST_CASE("a fat rejoining fork is rejected, then passes at coarser scale") {
  auto g = tuning_fork();
  try {
    manning_tree(g, 1);
    FAIL("expected NotATreeError");
  } catch (const NotATreeError& e) {
    CHECK(e.witness.parent_a != e.witness.parent_b);
    CHECK(e.witness.component >= 0);
  }
  auto tq = manning_tree(g, 2);
  CHECK(tq.radius_step == 40);
  CHECK(tq.tree.edge_count() == tq.tree.vertex_count() - 1);
  CHECK(verify_manning_inequalities(g, tq).ok);
}

TEST_CASE("quasi-geodesic image check") {
  auto g = FiniteMetricGraph::path(100);
  auto tq = manning_tree(g, 1);

  std::vector<int> straight;
  for (int v = 0; v <= 100; ++v) straight.push_back(v);
  auto ok = quasigeodesic_image_check(g, tq, straight, 2);
  CHECK(ok.is_quasigeodesic);

  // Walk out 40 and return: the image revisits tree vertices, so the path
  // fails any reasonable additive bound.
  std::vector<int> wander;
  for (int v = 0; v <= 40; ++v) wander.push_back(v);
  for (int v = 39; v >= 0; --v) wander.push_back(v);
  for (int v = 1; v <= 100; ++v) wander.push_back(v);
  auto bad = quasigeodesic_image_check(g, tq, wander, 2);
  CHECK_FALSE(bad.is_quasigeodesic);
  CHECK(bad.violation.has_value());

  std::vector<int> jump{0, 50};
  CHECK_THROWS_AS(quasigeodesic_image_check(g, tq, jump, 2), std::invalid_argument);
}
