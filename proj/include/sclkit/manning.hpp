#pragma once

#include <optional>
#include <vector>

#include "sclkit/graph.hpp"
#include "sclkit/rational.hpp"

namespace sclkit::hypgraph {

// Quotient of a graph by the path components of concentric annuli around a
// base vertex, radius step R = 20 * Delta. When the input has the bottleneck
// property with constant Delta, the quotient is a tree.
struct TreeQuotient {
  FiniteMetricGraph tree;
  std::vector<int> alpha;  // graph vertex -> tree vertex (surjective)
  std::vector<int> beta;   // tree vertex -> gate: the component vertex nearest
                           // the base (lowest id among ties)
  std::vector<int> level;  // tree vertex -> annulus index (1-based)
  int radius_step = 0;     // R
  int delta_used = 0;
  int base = 0;
};

struct QuotientCycleWitness {
  int component;               // tree vertex with two distinct lower neighbors
  int parent_a, parent_b;      // the two lower tree vertices
  std::pair<int, int> edge_a;  // graph edges realizing the two descents
  std::pair<int, int> edge_b;
};

class NotATreeError : public std::runtime_error {
 public:
  NotATreeError(QuotientCycleWitness w, const std::string& msg)
      : std::runtime_error(msg), witness(w) {}
  QuotientCycleWitness witness;
};

// bottleneck_delta must be >= 1 (callers clamp: max(bottleneck_constant, 1)).
// Throws NotATreeError with a witness cycle if the annulus quotient is not a
// tree, i.e. the input lacks the bottleneck property at this constant.
TreeQuotient manning_tree(const FiniteMetricGraph& g, int bottleneck_delta, int base = 0);

// Verification companion: both comparison inequalities between tree distance
// (scaled by the construction constants) and graph distance of the gates,
// checked over all tree-vertex pairs:
//   8*Delta*d_T(x,y) - 16*Delta <= d_Q(beta x, beta y) <= 26*Delta*d_T(x,y).
struct ManningCheck {
  bool ok = true;
  long long pairs_checked = 0;
  std::optional<std::pair<int, int>> violating_pair;
  int worst_lower_margin = 0;  // min over pairs of d_Q - (8 D d_T - 16 D)
  int worst_upper_margin = 0;  // min over pairs of 26 D d_T - d_Q
};

ManningCheck verify_manning_inequalities(const FiniteMetricGraph& g, const TreeQuotient& tq);

struct QuasiGeodesicCheck {
  bool is_quasigeodesic = true;                   // (2, additive) lower bound held
  std::optional<std::pair<int, int>> violation;   // index pair if not
  int epsilon = 0;  // max tree-distance of the image from the image geodesic
};

// Verifies `path` (a graph vertex walk) is a (2, additive)-quasi-geodesic,
// then measures how far its image in the quotient tree strays from the tree
// geodesic between the image endpoints.
QuasiGeodesicCheck quasigeodesic_image_check(const FiniteMetricGraph& g,
                                             const TreeQuotient& tq,
                                             const std::vector<int>& path, int additive);

}  // namespace sclkit::hypgraph
