#include "sclkit/pipeline.hpp"

#include <variant>

namespace sclkit::actions {

PipelineResult scl_pipeline(const GraphAction& act, const ReducedWord& g,
                            const PipelineBudgets& budgets) {
  IsometryClass cls = classify_isometry(act, g);
  if (auto* e = std::get_if<Elliptic>(&cls))
    throw PipelineError("classify", "element is elliptic (orbit diameter " +
                                        std::to_string(e->orbit_diameter) +
                                        "); only Cayley-tree backends carry hyperbolic isometries");
  if (std::holds_alternative<Inconclusive>(cls))
    throw PipelineError("classify", "displacement growth inconclusive");

  PipelineResult res;
  res.tau = std::get<HyperbolicTau>(cls).tau;

  WwpdResult wwpd = wwpd_xi(act, g, budgets.conj_radius);
  res.xi = wwpd.xi;

  // The backend is a tree: bottleneck constant 0, floored to 1 so the derived
  // constants below stay positive.
  res.delta_quasi_tree = 1;
  res.M = res.delta_quasi_tree + 1;
  res.R = res.xi + res.M;

  // tau_{g^N} = N * tau must reach R, and must also strictly exceed M: the
  // counting quasi-morphism ignores words of length <= M, so the axis period
  // it counts has to be longer than that.
  res.N = 0;
  for (int n = 1; n <= budgets.max_power; ++n)
    if ((long long)n * res.tau >= res.R && (long long)n * res.tau > res.M) {
      res.N = n;
      break;
    }
  if (res.N == 0)
    throw PipelineError("power", "no N <= " + std::to_string(budgets.max_power) +
                                     " reaches tau_{g^N} >= " + std::to_string(res.R));

  ReducedWord gN = g.pow(res.N);
  QuasiAxis axis = quasi_axis(act, gN);
  qm::CountingQM qm = qm::CountingQM::with_basepoint(axis.period, axis.basepoint, res.M);

  res.report = qm::build_report(qm, gN, budgets.n_max, budgets.sample_pairs, budgets.seed);
  res.homogenized_per_g = {res.report.homogenized.lo / res.N, res.report.homogenized.hi / res.N};

  res.scl_defined = g.in_commutator_subgroup();
  Rational lo = res.report.homogenized.lo;
  if (res.scl_defined && lo > 0)
    res.lower_bound = lo / (2 * qm::kCertifiedDefectBound * res.N);
  return res;
}

}  // namespace sclkit::actions
