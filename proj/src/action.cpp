#include "sclkit/action.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace sclkit::actions {

namespace {

void check_automorphism(const hypgraph::FiniteMetricGraph& g, const std::vector<int>& p, int index) {
  const int n = g.vertex_count();
  if ((int)p.size() != n)
    throw std::invalid_argument("generator map " + std::to_string(index) + ": wrong size");
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("generator map " + std::to_string(index) + ": value out of range");
    if (seen[v])
      throw std::invalid_argument("generator map " + std::to_string(index) + ": not a bijection");
    seen[v] = 1;
  }
  // A bijection mapping edges to edges is an automorphism (edge sets are
  // finite and equinumerous, so the image of the edge set is the edge set).
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) {
      if (u > v) continue;
      const auto& nb = g.neighbors(p[u]);
      if (!std::binary_search(nb.begin(), nb.end(), p[v]))
        throw std::invalid_argument("generator map " + std::to_string(index) +
                                    ": does not preserve adjacency");
    }
}

std::vector<int> invert_permutation(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = (int)i;
  return inv;
}

}  // namespace

GraphAction::GraphAction(CayleyTreeBackend backend) : backend_(std::move(backend)) {
  if (std::get<CayleyTreeBackend>(backend_).rank < 1)
    throw std::invalid_argument("GraphAction: rank must be >= 1");
}

GraphAction::GraphAction(hypgraph::FiniteMetricGraph graph, std::vector<std::vector<int>> generator_maps)
    : backend_(ExplicitBackend{std::move(graph), std::move(generator_maps)}) {
  auto& b = std::get<ExplicitBackend>(backend_);
  if (b.generator_maps.empty())
    throw std::invalid_argument("GraphAction: at least one generator map required");
  if (!b.graph.connected())
    throw std::invalid_argument("GraphAction: explicit backend graph must be connected");
  for (size_t i = 0; i < b.generator_maps.size(); ++i)
    check_automorphism(b.graph, b.generator_maps[i], (int)i);
}

int GraphAction::rank() const {
  if (auto* c = std::get_if<CayleyTreeBackend>(&backend_)) return c->rank;
  return (int)std::get<ExplicitBackend>(backend_).generator_maps.size();
}

const hypgraph::FiniteMetricGraph& GraphAction::graph() const {
  if (auto* e = std::get_if<ExplicitBackend>(&backend_)) return e->graph;
  throw std::logic_error("GraphAction::graph: Cayley-tree backend has no finite graph");
}

int GraphAction::apply(const ReducedWord& g, int vertex) const {
  auto* e = std::get_if<ExplicitBackend>(&backend_);
  if (!e) throw std::logic_error("GraphAction::apply: explicit backend required");
  if (g.rank() > (int)e->generator_maps.size())
    throw std::invalid_argument("GraphAction::apply: word uses more generators than the action");
  int x = vertex;
  // Left action: the rightmost letter acts first.
  const auto& ls = g.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    int letter = *it;
    int gen = std::abs(letter) - 1;
    if (letter > 0) {
      x = e->generator_maps[gen][x];
    } else {
      // Cache-free inverse walk: find preimage via the inverse permutation.
      static thread_local std::vector<std::vector<int>> inv_cache;
      static thread_local const ExplicitBackend* cached_for = nullptr;
      if (cached_for != e) {
        inv_cache.clear();
        for (const auto& p : e->generator_maps) inv_cache.push_back(invert_permutation(p));
        cached_for = e;
      }
      x = inv_cache[gen][x];
    }
  }
  return x;
}

GraphAction load_explicit_action(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> perms;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      if (n != -1) throw hypgraph::FormatError(lineno, 1, "duplicate 'v' header");
      if (!(ls >> n)) throw hypgraph::FormatError(lineno, 3, "expected vertex count after 'v'");
    } else if (tag == "e") {
      if (n == -1) throw hypgraph::FormatError(lineno, 1, "'e' line before 'v' header");
      int u, w;
      if (!(ls >> u >> w)) throw hypgraph::FormatError(lineno, 3, "expected two vertex ids after 'e'");
      edges.emplace_back(u, w);
    } else if (tag == "perm") {
      if (n == -1) throw hypgraph::FormatError(lineno, 1, "'perm' line before 'v' header");
      std::vector<int> p;
      int x;
      while (ls >> x) p.push_back(x);
      if ((int)p.size() != n)
        throw hypgraph::FormatError(lineno, 6, "perm must list exactly " + std::to_string(n) +
                                                   " images, got " + std::to_string(p.size()));
      perms.push_back(std::move(p));
    } else {
      throw hypgraph::FormatError(lineno, 1, "unknown directive '" + tag + "'");
    }
  }
  if (n == -1) throw hypgraph::FormatError(lineno + 1, 1, "missing 'v' header");
  if (perms.empty())
    throw hypgraph::FormatError(lineno + 1, 1, "explicit action needs at least one 'perm' line");
  try {
    return GraphAction(hypgraph::FiniteMetricGraph(n, edges), std::move(perms));
  } catch (const std::invalid_argument& e) {
    throw hypgraph::FormatError(lineno + 1, 1, e.what());
  }
}

int cayley_distance(const ReducedWord& x, const ReducedWord& y) {
  return (int)(x.inverse() * y).size();
}

IsometryClass classify_isometry(const GraphAction& act, const ReducedWord& g, int n_max) {
  if (n_max < 4) throw std::invalid_argument("classify_isometry: n_max must be >= 4");
  if (act.is_cayley_tree()) {
    words::CyclicWord cyc = words::CyclicWord::of(g);
    if (cyc.length() == 0) return Elliptic{0};
    // On a tree the translation length equals the cyclic-reduction length;
    // d(x0, g^n x0) = n * tau exactly along the axis, so the limit is exact.
    return HyperbolicTau{(int)cyc.length()};
  }
  // Finite graph: enumerate the orbit of vertex 0 under powers of g.
  std::vector<int> orbit;
  std::set<int> seen;
  int x = 0;
  while (!seen.count(x)) {
    seen.insert(x);
    orbit.push_back(x);
    x = act.apply(g, x);
  }
  int diam = 0;
  const auto& graph = act.graph();
  for (size_t i = 0; i < orbit.size(); ++i)
    for (size_t j = i + 1; j < orbit.size(); ++j)
      diam = std::max(diam, graph.distance(orbit[i], orbit[j]));
  return Elliptic{diam};
}

ReducedWord QuasiAxis::vertex_at(long long t) const {
  std::vector<int> letters = basepoint.letters();
  const auto& c = period.letters();
  if (t >= 0) {
    for (long long i = 0; i < t; ++i) letters.push_back(c[i % (long long)c.size()]);
  } else {
    // Walk the inverse direction: letters of c^{-1} repeated.
    std::vector<int> cinv(c.rbegin(), c.rend());
    for (auto& l : cinv) l = -l;
    for (long long i = 0; i < -t; ++i) letters.push_back(cinv[i % (long long)cinv.size()]);
  }
  // No cancellation occurs: u*c and u*c^{-1} are reduced junctions and c is
  // cyclically reduced, so the spliced letters are already a reduced word.
  return ReducedWord::from_reduced(letters, std::max(basepoint.rank(), period.rank()));
}

ReducedWord QuasiAxis::primitive_root() const {
  const auto& c = period.letters();
  const int n = (int)c.size();
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int i = d; i < n && ok; ++i)
      if (c[i] != c[i - d]) ok = false;
    if (ok) return ReducedWord::from_reduced(std::vector<int>(c.begin(), c.begin() + d), period.rank());
  }
  return period;
}

QuasiAxis quasi_axis(const GraphAction& act, const ReducedWord& g) {
  if (!act.is_cayley_tree())
    throw std::invalid_argument("quasi_axis: hyperbolic isometries require the Cayley-tree backend");
  words::CyclicWord cyc = words::CyclicWord::of(g);
  if (cyc.length() == 0) throw std::invalid_argument("quasi_axis: element is elliptic");
  QuasiAxis axis;
  axis.owner = g;
  axis.basepoint = cyc.conjugator();
  axis.period = cyc.axis_word();
  axis.tau = (int)cyc.length();
  return axis;
}

}  // namespace sclkit::actions
