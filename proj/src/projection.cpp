#include "sclkit/projection.hpp"

#include <algorithm>
#include <cstdlib>

#include "sclkit/cl_search.hpp"

namespace sclkit::actions {

namespace {

// Longest common prefix of `w` with the infinite repetition of `pattern`.
int lcp_with_power(const std::vector<int>& w, const std::vector<int>& pattern) {
  if (pattern.empty()) return 0;
  int i = 0;
  const int n = (int)w.size();
  while (i < n && w[(size_t)i] == pattern[(size_t)(i % (int)pattern.size())]) ++i;
  return i;
}

long long floor_half(long long x) { return (x >= 0 || x % 2 == 0) ? x / 2 : x / 2 - 1; }

}  // namespace

VertexProjection project_vertex_to_axis(const QuasiAxis& axis, const ReducedWord& v) {
  // Rebase so the line runs through the identity: the line is then exactly
  // the prefixes of c^inf (positive side) and of (c^-1)^inf (negative side),
  // and the projection is the deepest prefix of u^-1 v on either ray.
  ReducedWord w = axis.basepoint.inverse() * v;
  const auto& c = axis.period.letters();
  std::vector<int> cinv(c.rbegin(), c.rend());
  for (auto& l : cinv) l = -l;
  int fwd = lcp_with_power(w.letters(), c);
  int bwd = lcp_with_power(w.letters(), cinv);
  VertexProjection out;
  if (fwd >= bwd) {
    out.position = fwd;
    out.distance = w.size() - fwd;
  } else {
    out.position = -(long long)bwd;
    out.distance = w.size() - bwd;
  }
  return out;
}

bool axes_same_line(const QuasiAxis& a, const QuasiAxis& b) {
  if (!(a.basepoint == b.basepoint)) return false;
  ReducedWord pa = a.primitive_root();
  ReducedWord pb = b.primitive_root();
  return pa == pb || pa == pb.inverse();
}

LineRelation line_relation(const QuasiAxis& axis1, const QuasiAxis& axis2) {
  LineRelation rel;
  if (axes_same_line(axis1, axis2)) {
    rel.same_line = true;
    return rel;
  }
  // Distance from vertex_at(t) on axis2 to the line of axis1 is exactly
  // |t - c| + gap outside the overlap window (V-profile in a tree), and the
  // overlap is shorter than tau1 + tau2 for distinct lines (a longer shared
  // segment would force the owners to commute, hence share the line). So a
  // probe beyond |u1| + |u2| + tau1 + tau2 sees both slopes.
  const long long T = axis1.basepoint.size() + axis2.basepoint.size() + axis1.tau + axis2.tau + 2;
  const long long d_pos = project_vertex_to_axis(axis1, axis2.vertex_at(T)).distance;
  const long long d_neg = project_vertex_to_axis(axis1, axis2.vertex_at(-T)).distance;
  const long long excess = d_pos + d_neg - 2 * T;
  if (excess > 0) {
    rel.gap = (int)(excess / 2);
    const long long gate = (d_neg - d_pos) / 2;
    rel.lo2 = rel.hi2 = gate;
    auto p = project_vertex_to_axis(axis1, axis2.vertex_at(gate));
    rel.lo1 = rel.hi1 = p.position;
    rel.diameter = 0;
    return rel;
  }
  rel.gap = 0;
  rel.lo2 = d_neg - T;
  rel.hi2 = T - d_pos;
  const long long pa = project_vertex_to_axis(axis1, axis2.vertex_at(rel.lo2)).position;
  const long long pb = project_vertex_to_axis(axis1, axis2.vertex_at(rel.hi2)).position;
  rel.lo1 = std::min(pa, pb);
  rel.hi1 = std::max(pa, pb);
  rel.diameter = (int)(rel.hi1 - rel.lo1);
  return rel;
}

int projection_diameter(const GraphAction& act, const QuasiAxis& axis1, const QuasiAxis& axis2,
                        int window) {
  if (!act.is_cayley_tree())
    throw std::invalid_argument("projection_diameter: Cayley-tree backend required");
  long long lo = 0, hi = 0;
  bool first = true;
  for (long long t = -window; t <= window; ++t) {
    long long p = project_vertex_to_axis(axis1, axis2.vertex_at(t)).position;
    if (first) {
      lo = hi = p;
      first = false;
    } else {
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
  }
  return (int)(hi - lo);
}

ProjectionOutcome project_with_growth(const GraphAction& act, const QuasiAxis& axis1,
                                      const QuasiAxis& axis2, int window, int delta) {
  ProjectionOutcome out;
  out.threshold = 3 * std::max(axis1.tau, axis2.tau) + 20 * delta + 20;
  out.window = window > 0 ? window : out.threshold + 1;
  out.diameters[0] = projection_diameter(act, axis1, axis2, out.window);
  out.diameters[1] = projection_diameter(act, axis1, axis2, 2 * out.window);
  out.diameters[2] = projection_diameter(act, axis1, axis2, 4 * out.window);
  out.parallel = out.diameters[2] > out.threshold;
  return out;
}

WwpdResult wwpd_xi(const GraphAction& act, const ReducedWord& g, int conj_radius) {
  QuasiAxis axis_g = quasi_axis(act, g);
  WwpdResult res;
  for (const ReducedWord& gamma : words::ball(act.rank(), conj_radius)) {
    ReducedWord h = gamma * g * gamma.inverse();
    QuasiAxis axis_h = quasi_axis(act, h);
    if (axes_same_line(axis_g, axis_h)) {
      res.parallel_conjugators.push_back(gamma);
      continue;
    }
    int d = line_relation(axis_g, axis_h).diameter;
    if (d > res.xi) {
      res.xi = d;
      res.witness = gamma;
    }
  }
  return res;
}

AxiomViolationError::AxiomViolationError(const AxiomWitness& w, int eta)
    : std::runtime_error("projection axiom 1 violated on member triple (" + std::to_string(w.a) +
                         "," + std::to_string(w.b) + "," + std::to_string(w.c) + "): values " +
                         std::to_string(w.first) + " and " + std::to_string(w.second) +
                         " both exceed eta=" + std::to_string(eta)),
      witness(w) {}

int ProjectionFamily::dpi(int a, int b, int c) const {
  const auto& ib = proj[(size_t)a][(size_t)b];
  const auto& ic = proj[(size_t)a][(size_t)c];
  return (int)(std::max(ib.second, ic.second) - std::min(ib.first, ic.first));
}

std::optional<AxiomWitness> ProjectionFamily::axiom1_violation() const {
  const int m = (int)proj.size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        int vals[3] = {dpi(i, j, k), dpi(j, i, k), dpi(k, i, j)};
        int over = 0;
        for (int v : vals) over += v > eta;
        if (over >= 2) {
          AxiomWitness w;
          w.a = i;
          w.b = j;
          w.c = k;
          int picked = 0;
          for (int v : vals)
            if (v > eta && picked < 2) (picked++ ? w.second : w.first) = v;
          return w;
        }
      }
  return std::nullopt;
}

ProjectionFamily ProjectionFamily::from_raw(
    std::vector<std::vector<std::pair<long long, long long>>> proj, int eta) {
  ProjectionFamily fam;
  fam.proj = std::move(proj);
  fam.eta = eta;
  return fam;
}

ProjectionFamily build_projection_family(const GraphAction& act, const ReducedWord& g,
                                         int conj_radius) {
  WwpdResult wwpd = wwpd_xi(act, g, conj_radius);
  ProjectionFamily fam;
  fam.eta = wwpd.xi + 2;
  for (const ReducedWord& gamma : words::ball(act.rank(), conj_radius)) {
    QuasiAxis axis = quasi_axis(act, gamma * g * gamma.inverse());
    bool fresh = true;
    for (const QuasiAxis& m : fam.members)
      if (axes_same_line(m, axis)) {
        fresh = false;
        break;
      }
    if (fresh) fam.members.push_back(axis);
  }
  const int m = (int)fam.members.size();
  fam.proj.assign((size_t)m, std::vector<std::pair<long long, long long>>((size_t)m, {0, 0}));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      LineRelation rel = line_relation(fam.members[(size_t)a], fam.members[(size_t)b]);
      fam.proj[(size_t)a][(size_t)b] = {rel.lo1, rel.hi1};
    }
  if (auto w = fam.axiom1_violation()) throw AxiomViolationError(*w, fam.eta);
  return fam;
}

int PromotedGraph::vertex_of(int member, long long pos) const {
  const auto& range = member_vertex_range[(size_t)member];
  long long idx = pos - member_pos_offset[(size_t)member];
  if (idx < 0 || idx >= range.second)
    throw std::out_of_range("PromotedGraph::vertex_of: position outside member segment");
  return range.first + (int)idx;
}

PromotedGraph promote_to_quasitree(const ProjectionFamily& fam, int K) {
  const int m = (int)fam.proj.size();
  if (m == 0) throw PromotionError("promote_to_quasitree: empty family");
  if (auto w = fam.axiom1_violation()) throw AxiomViolationError(*w, fam.eta);

  std::vector<std::pair<int, int>> ranges;
  std::vector<long long> offsets;
  int next_id = 0;
  for (int a = 0; a < m; ++a) {
    long long lo = 0, hi = 0;
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      lo = std::min(lo, fam.proj[(size_t)a][(size_t)b].first);
      hi = std::max(hi, fam.proj[(size_t)a][(size_t)b].second);
    }
    int count = (int)((hi + 1) - (lo - 1) + 1);
    ranges.emplace_back(next_id, count);
    offsets.push_back(lo - 1);
    next_id += count;
  }
  auto vertex_at = [&](int member, long long pos) {
    return ranges[(size_t)member].first + (int)(pos - offsets[(size_t)member]);
  };

  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < m; ++a) {
    auto [first, count] = ranges[(size_t)a];
    for (int i = 1; i < count; ++i) edges.emplace_back(first + i - 1, first + i);
  }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      bool join = true;
      for (int c = 0; c < m && join; ++c) {
        if (c == a || c == b) continue;
        if (fam.dpi(c, a, b) > K) join = false;
      }
      if (!join) continue;
      const auto& iab = fam.proj[(size_t)a][(size_t)b];
      const auto& iba = fam.proj[(size_t)b][(size_t)a];
      edges.emplace_back(vertex_at(a, floor_half(iab.first + iab.second)),
                         vertex_at(b, floor_half(iba.first + iba.second)));
    }

  PromotedGraph out{hypgraph::FiniteMetricGraph(next_id, edges), std::move(ranges),
                    std::move(offsets)};
  if (!out.graph.connected())
    throw PromotionError("promote_to_quasitree: K too small, promoted graph is disconnected");
  return out;
}

}  // namespace sclkit::actions
