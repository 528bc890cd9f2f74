#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sclkit/graph.hpp"
#include "sclkit/word.hpp"

namespace sclkit::actions {

using words::ReducedWord;

// Rank-k free group acting on its Cayley tree by left multiplication.
// Vertices are reduced words; distances are word-metric distances.
struct CayleyTreeBackend {
  int rank = 2;
};

// Free group acting on a finite graph through one automorphism per
// generator. Every isometry of a finite graph is elliptic.
struct ExplicitBackend {
  hypgraph::FiniteMetricGraph graph;
  std::vector<std::vector<int>> generator_maps;  // one permutation per generator
};

class GraphAction {
 public:
  explicit GraphAction(CayleyTreeBackend backend);
  // Validates that every generator map is a graph automorphism.
  GraphAction(hypgraph::FiniteMetricGraph graph, std::vector<std::vector<int>> generator_maps);

  bool is_cayley_tree() const { return std::holds_alternative<CayleyTreeBackend>(backend_); }
  int rank() const;
  const hypgraph::FiniteMetricGraph& graph() const;  // explicit backends only

  // Explicit backends: image of `vertex` under the element `g`.
  int apply(const ReducedWord& g, int vertex) const;

 private:
  std::variant<CayleyTreeBackend, ExplicitBackend> backend_;
};

// Explicit-action file: the graph format of FiniteMetricGraph::parse plus
// one `perm <p0> <p1> ... <p_{n-1}>` line per generator. Throws FormatError.
GraphAction load_explicit_action(std::istream& in);

// d(x, y) in the Cayley tree = length of x^{-1} y.
int cayley_distance(const ReducedWord& x, const ReducedWord& y);

struct Elliptic {
  int orbit_diameter = 0;
};
struct HyperbolicTau {
  int tau = 0;  // exact translation length (tree backends)
};
// Reserved for backends where displacement growth cannot be decided within
// n_max; unreachable with the two exact backends above but kept so callers
// never mistake "could not decide" for a verdict.
struct Inconclusive {
  std::string reason;
};
using IsometryClass = std::variant<Elliptic, HyperbolicTau, Inconclusive>;

IsometryClass classify_isometry(const GraphAction& act, const ReducedWord& g, int n_max = 16);

// Invariant g-line through a minimal-displacement vertex of the Cayley tree.
// Writing g = u c u^{-1} with c cyclically reduced, the axis is u * (the
// bi-infinite line spelled by powers of c), and vertex_at(t) walks it:
// vertex_at(0) = u, vertex_at(t+tau) = g * vertex_at(t).
struct QuasiAxis {
  ReducedWord owner;
  ReducedWord basepoint;  // u: shortlex-least minimal-displacement vertex
  ReducedWord period;     // c: cyclically reduced, |c| = tau
  int tau = 0;

  ReducedWord vertex_at(long long t) const;
  // Smallest p with period = p^k; phase-sensitive line identity lives here.
  ReducedWord primitive_root() const;
};

// Throws std::invalid_argument when g is elliptic or the backend is not a
// Cayley tree.
QuasiAxis quasi_axis(const GraphAction& act, const ReducedWord& g);

}  // namespace sclkit::actions
