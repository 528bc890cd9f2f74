#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sclkit/format_error.hpp"
#include "sclkit/graph.hpp"
#include "sclkit/hyperbolicity.hpp"
#include "sclkit/random_graphs.hpp"

using namespace sclkit::hypgraph;
using sclkit::FormatError;

TEST_CASE("graph file parse, save, and error reporting") {
  std::istringstream in("v 4\ne 0 1\ne 1 2\ne 2 3\n");
  auto g = FiniteMetricGraph::parse(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.bfs_distances(0)[3] == 3);

  std::ostringstream out;
  g.save(out);
  std::istringstream back(out.str());
  auto g2 = FiniteMetricGraph::parse(back);
  CHECK(g2.vertex_count() == g.vertex_count());
  CHECK(g2.bfs_distances(0) == g.bfs_distances(0));

  auto expect_fail = [](const std::string& text, int line) {
    std::istringstream bad(text);
    try {
      FiniteMetricGraph::parse(bad);
      FAIL("expected FormatError for: ", text);
    } catch (const FormatError& e) {
      CHECK(e.line == line);
      CHECK(e.col >= 1);
    }
  };
  expect_fail("v 3\ne 0 5\n", 2);     // endpoint out of range
  expect_fail("v 3\ne 1 1\n", 2);     // self loop
  expect_fail("x 3\n", 1);            // unknown directive
  expect_fail("v 3\ne 0\n", 2);       // missing endpoint
  expect_fail("e 0 1\n", 1);          // edge before vertex count
}

TEST_CASE("builders have the expected metric") {
  auto p = FiniteMetricGraph::path(6);
  CHECK(p.vertex_count() == 7);
  CHECK(p.bfs_distances(0)[6] == 6);
  auto c = FiniteMetricGraph::cycle(12);
  CHECK(c.bfs_distances(0)[6] == 6);
  CHECK(c.bfs_distances(0)[7] == 5);
  auto s = FiniteMetricGraph::star(3, 50);
  CHECK(s.vertex_count() == 151);
  CHECK(s.neighbors(0).size() == 3);
}

TEST_CASE("canonical geodesics are geodesics") {
  std::mt19937_64 rng(31);
  auto g = random_quasi_tree(rng, QuasiTreeParams{40, 3, 4, 0});
  for (int u = 0; u < g.vertex_count(); u += 7)
    for (int v = 0; v < g.vertex_count(); v += 5) {
      auto path = g.canonical_geodesic(u, v);
      auto dist = g.bfs_distances(u);
      REQUIRE(!path.empty());
      CHECK(path.front() == u);
      CHECK(path.back() == v);
      CHECK(static_cast<int>(path.size()) == dist[static_cast<size_t>(v)] + 1);
      for (size_t i = 1; i < path.size(); ++i) {
        auto nb = g.neighbors(path[i - 1]);
        CHECK(std::find(nb.begin(), nb.end(), path[i]) != nb.end());
      }
    }
}

TEST_CASE("four-point condition on cycles and trees") {
  auto r = hyperbolicity_delta(FiniteMetricGraph::cycle(12), DeltaOptions{});
  CHECK(r.exact);
  CHECK(r.doubled == 6);
  CHECK(r.delta() == sclkit::Rational(3));
  CHECK(r.delta_int() == 3);

  std::mt19937_64 rng(32);
  auto t = random_tree(rng, 40);
  auto rt = hyperbolicity_delta(t, DeltaOptions{});
  CHECK(rt.exact);
  CHECK(rt.doubled == 0);
}

TEST_CASE("sampled four-point mode underestimates but stays close") {
  DeltaOptions opts;
  opts.exact_cap = 0;  // force sampling
  opts.samples = 3000;
  opts.seed = 1;
  auto r = hyperbolicity_delta(FiniteMetricGraph::cycle(12), opts);
  CHECK_FALSE(r.exact);
  CHECK(r.doubled <= 6);
  CHECK(r.quadruples_scanned > 0);
}

TEST_CASE("bottleneck constants of cycles, paths, and stars") {
  CHECK(bottleneck_constant(FiniteMetricGraph::cycle(8), {}).delta == 2);
  CHECK(bottleneck_constant(FiniteMetricGraph::cycle(12), {}).delta == 3);
  CHECK(bottleneck_constant(FiniteMetricGraph::cycle(16), {}).delta == 4);
  CHECK(bottleneck_constant(FiniteMetricGraph::path(30), {}).delta == 0);
  CHECK(bottleneck_constant(FiniteMetricGraph::star(3, 10), {}).delta == 0);
}

TEST_CASE("bottleneck agrees with direct pair enumeration") {
  for (int n = 4; n <= 14; ++n) {
    auto c = FiniteMetricGraph::cycle(n);
    CHECK(bottleneck_constant(c, {}).delta == oracles::direct_bottleneck(c));
  }
  std::mt19937_64 rng(33);
  for (int t = 0; t < 15; ++t) {
    QuasiTreeParams params;
    params.n = 12 + (t % 4) * 3;
    params.extra_edges = t % 3;
    params.chord_span = 2 + t % 3;
    params.attach_window = (t % 2) ? 5 : 0;
    auto g = random_quasi_tree(rng, params);
    auto lib = bottleneck_constant(g, {});
    CHECK(lib.exact);
    CHECK(lib.delta == oracles::direct_bottleneck(g));
  }
}

TEST_CASE("thin-triangle sanity on known shapes") {
  CHECK(oracles::slimness(FiniteMetricGraph::path(8)) == 0);
  CHECK(oracles::slimness(FiniteMetricGraph::star(3, 4)) == 0);
  CHECK(oracles::slimness(FiniteMetricGraph::cycle(8)) == 2);
  int slim_c12 = oracles::slimness(FiniteMetricGraph::cycle(12));
  CHECK(slim_c12 == 3);
  // Both hyperbolicity measures see the cycle's fatness at comparable scale.
  auto fp = hyperbolicity_delta(FiniteMetricGraph::cycle(12), DeltaOptions{});
  CHECK(fp.delta_int() >= slim_c12 / 2);
  CHECK(slim_c12 <= 2 * fp.delta_int());
}

TEST_CASE("random quasi-trees are connected with bounded excess") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 10; ++t) {
    QuasiTreeParams params;
    params.n = 50;
    params.extra_edges = 4;
    params.chord_span = 3;
    auto g = random_quasi_tree(rng, params);
    CHECK(g.connected());
    CHECK(g.vertex_count() == 50);
    CHECK(g.edge_count() >= 49);
    CHECK(g.edge_count() <= 53);
  }
  std::mt19937_64 rng2(35);
  auto tree = random_tree(rng2, 64);
  CHECK(tree.connected());
  CHECK(tree.edge_count() == 63);
}
