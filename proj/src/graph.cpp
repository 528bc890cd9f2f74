#include "sclkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

namespace sclkit::hypgraph {

FiniteMetricGraph::FiniteMetricGraph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxVertices) + "]");
  adj_.resize(static_cast<size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += static_cast<long long>(nbrs.size());
  }
  edge_count_ /= 2;
}

FiniteMetricGraph FiniteMetricGraph::parse(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    // Strip comments and blank lines.
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      if (n != -1) throw FormatError(lineno, 1, "duplicate 'v' header");
      if (!(ls >> n)) throw FormatError(lineno, 3, "expected vertex count after 'v'");
    } else if (tag == "e") {
      if (n == -1) throw FormatError(lineno, 1, "'e' line before 'v' header");
      int u, w;
      if (!(ls >> u >> w)) throw FormatError(lineno, 3, "expected two vertex ids after 'e'");
      if (u < 0 || u >= n || w < 0 || w >= n)
        throw FormatError(lineno, 3, "edge endpoint out of range");
      if (u == w) throw FormatError(lineno, 3, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(u, w);
    } else {
      throw FormatError(lineno, 1, "unknown directive '" + tag + "'");
    }
  }
  if (n == -1) throw FormatError(lineno + 1, 1, "missing 'v' header");
  try {
    return FiniteMetricGraph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw FormatError(lineno + 1, 1, e.what());
  }
}

void FiniteMetricGraph::save(std::ostream& out) const {
  out << "v " << n_ << "\n";
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<size_t>(u)])
      if (u < v) out << "e " << u << " " << v << "\n";
}

FiniteMetricGraph FiniteMetricGraph::path(int edge_count) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < edge_count; ++i) edges.emplace_back(i, i + 1);
  return FiniteMetricGraph(edge_count + 1, edges);
}

FiniteMetricGraph FiniteMetricGraph::cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return FiniteMetricGraph(n, edges);
}

FiniteMetricGraph FiniteMetricGraph::star(int legs, int leg_length) {
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  for (int l = 0; l < legs; ++l) {
    int prev = 0;
    for (int i = 0; i < leg_length; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return FiniteMetricGraph(next, edges);
}

bool FiniteMetricGraph::connected() const {
  auto d = bfs_distances(0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

std::vector<int> FiniteMetricGraph::bfs_distances(int src) const {
  std::vector<int> dist(static_cast<size_t>(n_), -1);
  std::deque<int> queue{src};
  dist[static_cast<size_t>(src)] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj_[static_cast<size_t>(u)])
      if (dist[static_cast<size_t>(v)] == -1) {
        dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

void FiniteMetricGraph::ensure_distance_cache() const {
  if (!dist_.empty()) return;
  if (n_ > kMaxCachedVertices)
    throw std::invalid_argument("all-pairs cache refused for n = " + std::to_string(n_) +
                                " > " + std::to_string(kMaxCachedVertices));
  if (!connected()) throw std::invalid_argument("graph is not connected");
  dist_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0);
  for (int s = 0; s < n_; ++s) {
    auto d = bfs_distances(s);
    for (int v = 0; v < n_; ++v)
      dist_[static_cast<size_t>(s) * static_cast<size_t>(n_) + static_cast<size_t>(v)] =
          static_cast<uint16_t>(d[static_cast<size_t>(v)]);
  }
}

int FiniteMetricGraph::distance(int u, int v) const {
  ensure_distance_cache();
  return dist_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v)];
}

std::vector<int> FiniteMetricGraph::canonical_parents(int src) const {
  auto dist = bfs_distances(src);
  std::vector<int> parent(static_cast<size_t>(n_), -1);
  for (int u = 0; u < n_; ++u) {
    if (u == src || dist[static_cast<size_t>(u)] <= 0) continue;
    for (int w : adj_[static_cast<size_t>(u)])  // adjacency sorted: first hit is lowest id
      if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(u)] - 1) {
        parent[static_cast<size_t>(u)] = w;
        break;
      }
  }
  return parent;
}

std::vector<int> FiniteMetricGraph::canonical_geodesic(int x, int y) const {
  int src = std::min(x, y), far = std::max(x, y);
  auto parent = canonical_parents(src);
  std::vector<int> rev;
  for (int v = far; v != -1; v = parent[static_cast<size_t>(v)]) rev.push_back(v);
  if (rev.back() != src) throw std::invalid_argument("vertices are in different components");
  if (far != y) return rev;  // already runs x..y
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace sclkit::hypgraph
