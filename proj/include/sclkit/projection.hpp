#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sclkit/action.hpp"

namespace sclkit::actions {

// Nearest-point projection of a vertex onto an axis line. `position` is in
// the axis coordinates of QuasiAxis::vertex_at; `distance` is the tree
// distance from the vertex to the line.
struct VertexProjection {
  long long position = 0;
  int distance = 0;
};
VertexProjection project_vertex_to_axis(const QuasiAxis& axis, const ReducedWord& v);

// Exact relation between two axis lines, computed in closed form from the
// V-shaped distance profile along `axis2` (distance to a convex set along a
// geodesic has slopes -1, 0, +1 in a tree).
struct LineRelation {
  bool same_line = false;
  int gap = 0;         // tree distance between the lines (0 when they meet)
  long long lo2 = 0;   // overlap window in axis2 coordinates (gap == 0 only)
  long long hi2 = 0;
  long long lo1 = 0;   // projection window of axis2 onto axis1, axis1 coords
  long long hi1 = 0;
  int diameter = 0;    // hi1 - lo1; 0 when the lines diverge at a point
};
LineRelation line_relation(const QuasiAxis& axis1, const QuasiAxis& axis2);

// Phase-sensitive identity of lines: equal basepoint and equal primitive
// root up to inversion.
bool axes_same_line(const QuasiAxis& a, const QuasiAxis& b);

// Diameter of the nearest-point projection onto axis1 of the segment of
// axis2 with positions in [-window, window], by exhaustive scan. Stabilizes
// at the overlap length once the window passes the overlap.
int projection_diameter(const GraphAction& act, const QuasiAxis& axis1, const QuasiAxis& axis2,
                        int window);

// Growth test distinguishing parallel axes from bounded projection: compute
// windowed diameters at window, 2*window, 4*window and compare against
// 3*max(tau) + 20*delta + 20. The verdict is recorded alongside the data it
// came from.
struct ProjectionOutcome {
  bool parallel = false;
  std::array<int, 3> diameters{0, 0, 0};
  int threshold = 0;
  int window = 0;
};
ProjectionOutcome project_with_growth(const GraphAction& act, const QuasiAxis& axis1,
                                      const QuasiAxis& axis2, int window = 0, int delta = 0);

// xi = max projection of a non-parallel conjugate axis onto axis(g), over
// conjugators in the radius-`conj_radius` ball. Parallel conjugators are the
// recorded coset data of the axis stabilizer.
struct WwpdResult {
  int xi = 0;
  std::vector<ReducedWord> parallel_conjugators;
  std::optional<ReducedWord> witness;  // conjugator realizing xi
};
WwpdResult wwpd_xi(const GraphAction& act, const ReducedWord& g, int conj_radius);

struct AxiomWitness {
  int a = 0, b = 0, c = 0;       // member indices of the violating triple
  int first = 0, second = 0;     // the two projection values exceeding eta
};

class AxiomViolationError : public std::runtime_error {
 public:
  AxiomViolationError(const AxiomWitness& w, int eta);
  AxiomWitness witness;
};

// Family of pairwise-distinct lines with projection windows. proj[a][b] is
// the projection interval of member b's line on member a's line, in member
// a's coordinates (undefined for a == b).
class ProjectionFamily {
 public:
  std::vector<QuasiAxis> members;
  std::vector<std::vector<std::pair<long long, long long>>> proj;
  int eta = 0;

  // d^pi_A(B, C): diameter of the union of the two projection windows on A.
  int dpi(int a, int b, int c) const;
  // First triple with two projection values above eta, if any.
  std::optional<AxiomWitness> axiom1_violation() const;
  // Hand-built family (adversarial tests); members stay empty.
  static ProjectionFamily from_raw(std::vector<std::vector<std::pair<long long, long long>>> proj,
                                   int eta);
};

// Distinct parallelism classes of conjugate axes within the conjugator ball,
// with projection data and eta = xi + 2. Throws AxiomViolationError if the
// triple check fails.
ProjectionFamily build_projection_family(const GraphAction& act, const ReducedWord& g,
                                         int conj_radius);

class PromotionError : public std::runtime_error {
 public:
  explicit PromotionError(const std::string& what) : std::runtime_error(what) {}
};

// Quasi-tree built from the family: one subdivided representative segment per
// member, plus an edge joining members A, B whenever every third member C
// sees d^pi_C(A,B) <= K. Disconnection (K too small) is an error.
struct PromotedGraph {
  hypgraph::FiniteMetricGraph graph;
  std::vector<std::pair<int, int>> member_vertex_range;  // (first id, count)
  std::vector<long long> member_pos_offset;              // position of first id

  int vertex_of(int member, long long pos) const;
};
PromotedGraph promote_to_quasitree(const ProjectionFamily& fam, int K);
inline int default_promotion_K(int eta) { return 4 * eta + 4; }

}  // namespace sclkit::actions
