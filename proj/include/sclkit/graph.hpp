#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sclkit/format_error.hpp"

namespace sclkit::hypgraph {

using sclkit::FormatError;

// Connected undirected graph with unit edge lengths. Vertices are 0..n-1.
// Distances come from BFS; the all-pairs matrix is built lazily and cached.
class FiniteMetricGraph {
 public:
  static constexpr int kMaxVertices = 20000;
  static constexpr int kMaxCachedVertices = 8000;  // n*n uint16 cache cap (128 MB)

  FiniteMetricGraph(int n, const std::vector<std::pair<int, int>>& edges);

  // Text format: "v <n>" header then one "e <u> <w>" line per edge, 0-indexed.
  static FiniteMetricGraph parse(std::istream& in);
  void save(std::ostream& out) const;

  static FiniteMetricGraph path(int edge_count);
  static FiniteMetricGraph cycle(int n);
  static FiniteMetricGraph star(int legs, int leg_length);

  int vertex_count() const { return n_; }
  long long edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  bool connected() const;

  std::vector<int> bfs_distances(int src) const;

  // Cached all-pairs lookup. Builds the full matrix on first use; callers that
  // only need a few sources should use bfs_distances instead.
  int distance(int u, int v) const;
  bool has_distance_cache() const { return !dist_.empty(); }
  void ensure_distance_cache() const;

  // Parent assignment of the canonical BFS tree rooted at src: parent(u) is
  // the lowest-numbered neighbor of u one step closer to src. parent(src)=-1.
  std::vector<int> canonical_parents(int src) const;

  // Canonical geodesic between x and y: the path in the canonical BFS tree
  // rooted at min(x, y), listed from x to y.
  std::vector<int> canonical_geodesic(int x, int y) const;

 private:
  int n_;
  long long edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
  mutable std::vector<uint16_t> dist_;  // row-major n*n when built
};

}  // namespace sclkit::hypgraph
