#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "sclkit/acceptance.hpp"
#include "sclkit/cl_search.hpp"
#include "sclkit/counting.hpp"
#include "sclkit/format_error.hpp"
#include "sclkit/graph.hpp"
#include "sclkit/hyperbolicity.hpp"
#include "sclkit/manning.hpp"
#include "sclkit/nt.hpp"
#include "sclkit/pipeline.hpp"
#include "sclkit/projection.hpp"
#include "sclkit/rational.hpp"
#include "sclkit/report.hpp"
#include "sclkit/word.hpp"

namespace {

using sclkit::FormatError;
using sclkit::Rational;
using sclkit::rational_str;
using sclkit::cli::RunReport;
using sclkit::words::ReducedWord;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(0, 0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string interval_str(const sclkit::qm::RationalInterval& iv) {
  return "[" + rational_str(iv.lo) + ", " + rational_str(iv.hi) + "]";
}

std::string window_str(long long lo, long long hi) {
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

void emit(const RunReport& rep, bool json) {
  std::fputs((json ? rep.json() : rep.text()).c_str(), stdout);
  std::fprintf(stderr, "timing: %.1f ms\n", rep.timing_ms);
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

// --- qm-eval -----------------------------------------------------------------

struct QmEvalArgs {
  std::string w, g, basepoint = "1";
  int rank = 0, m = 0, n_max = 1000;
  long long pairs = 2000;
  uint64_t seed = 0;
  bool json = false;
};

int run_qm_eval(const QmEvalArgs& a) {
  Timer timer;
  ReducedWord w0 = ReducedWord::parse(a.w, a.rank);
  ReducedWord g0 = ReducedWord::parse(a.g, a.rank);
  ReducedWord x0 = ReducedWord::parse(a.basepoint, a.rank);
  int rank = std::max({w0.rank(), g0.rank(), x0.rank(), a.rank});
  ReducedWord w = ReducedWord::parse(a.w, rank);
  ReducedWord g = ReducedWord::parse(a.g, rank);
  ReducedWord basepoint = ReducedWord::parse(a.basepoint, rank);

  auto qm = sclkit::qm::CountingQM::with_basepoint(w, basepoint, a.m);
  auto report = sclkit::qm::build_report(qm, g, a.n_max, a.pairs, a.seed);

  RunReport rep;
  rep.subcommand = "qm-eval";
  rep.seed = a.seed;
  rep.inputs_digest = sclkit::cli::fnv1a("w=" + w.str() + ";g=" + g.str() + ";x0=" +
                                         basepoint.str() + ";m=" + std::to_string(a.m) +
                                         ";n_max=" + std::to_string(a.n_max) +
                                         ";pairs=" + std::to_string(a.pairs));
  rep.add_constant("rank", std::to_string(rank));
  rep.add_constant("M", std::to_string(a.m));
  rep.add_constant("epsilon", std::to_string(report.epsilon));
  rep.add_constant("defect_certified", rational_str(report.defect_certified));
  rep.add_constant("n_max", std::to_string(a.n_max));
  rep.add_constant("pairs_sampled", std::to_string(report.pairs_sampled));
  rep.add_result("value", std::to_string(report.value));
  rep.add_result("defect_observed", std::to_string(report.defect_observed));
  rep.add_result("hhat_interval", interval_str(report.homogenized));
  if (report.bavard.kind == sclkit::qm::BavardOutcome::Bound)
    rep.add_result("bavard_lower", rational_str(report.bavard.value));
  else
    rep.add_result("bavard_lower", "undefined: homomorphism obstruction, |hhat| = " +
                                       rational_str(report.bavard.value));
  rep.timing_ms = timer.ms();
  emit(rep, a.json);
  return 0;
}

// --- graph -------------------------------------------------------------------

struct GraphArgs {
  std::string mode, in;
  int base = 0;
  int delta_override = 0;  // manning: 0 = derive from the bottleneck constant
  int exact_cap = -1;      // delta: -1 = library default
  long long samples = -1;
  uint64_t seed = 0;
  bool json = false;
};

int run_graph(const GraphArgs& a) {
  Timer timer;
  std::string bytes = slurp(a.in);
  std::istringstream in(bytes);
  auto g = sclkit::hypgraph::FiniteMetricGraph::parse(in);

  RunReport rep;
  rep.subcommand = "graph " + a.mode;
  rep.seed = a.seed;
  rep.inputs_digest = sclkit::cli::fnv1a(bytes);
  rep.add_constant("vertices", std::to_string(g.vertex_count()));
  rep.add_constant("edges", std::to_string(g.edge_count()));

  if (a.mode == "delta") {
    sclkit::hypgraph::DeltaOptions opts;
    if (a.exact_cap >= 0) opts.exact_cap = a.exact_cap;
    if (a.samples >= 0) opts.samples = a.samples;
    opts.seed = a.seed;
    auto dr = sclkit::hypgraph::hyperbolicity_delta(g, opts);
    rep.add_constant("exact", dr.exact ? "true" : "false");
    rep.add_result("delta", rational_str(dr.delta()));
    rep.add_result("delta_int", std::to_string(dr.delta_int()));
    rep.add_result("quadruples_scanned", std::to_string(dr.quadruples_scanned));
  } else if (a.mode == "bottleneck") {
    sclkit::hypgraph::BottleneckOptions opts;
    opts.seed = a.seed;
    auto bn = sclkit::hypgraph::bottleneck_constant(g, opts);
    rep.add_constant("exact", bn.exact ? "true" : "false");
    rep.add_result("Delta", std::to_string(bn.delta));
  } else {  // manning
    int delta = a.delta_override;
    if (delta <= 0) {
      sclkit::hypgraph::BottleneckOptions opts;
      opts.seed = a.seed;
      auto bn = sclkit::hypgraph::bottleneck_constant(g, opts);
      rep.add_constant("bottleneck_Delta", std::to_string(bn.delta));
      delta = std::max(bn.delta, 1);
    }
    rep.add_constant("Delta_used", std::to_string(delta));
    rep.add_constant("radius_step", std::to_string(20 * delta));
    rep.add_constant("base", std::to_string(a.base));
    try {
      auto tq = sclkit::hypgraph::manning_tree(g, delta, a.base);
      auto chk = sclkit::hypgraph::verify_manning_inequalities(g, tq);
      int max_level = 0;
      for (int lv : tq.level) max_level = std::max(max_level, lv);
      rep.add_result("tree_vertices", std::to_string(tq.tree.vertex_count()));
      rep.add_result("levels", std::to_string(max_level));
      rep.add_result("pairs_checked", std::to_string(chk.pairs_checked));
      if (chk.pairs_checked > 0) {
        rep.add_result("worst_lower_margin", std::to_string(chk.worst_lower_margin));
        rep.add_result("worst_upper_margin", std::to_string(chk.worst_upper_margin));
      }
      rep.add_verdict("manning", chk.ok ? "verified" : "inequality violated");
    } catch (const sclkit::hypgraph::NotATreeError& e) {
      rep.add_verdict("manning", std::string("not a tree: ") + e.what());
    }
  }
  rep.timing_ms = timer.ms();
  emit(rep, a.json);
  return 0;
}

// --- action ------------------------------------------------------------------

struct ActionArgs {
  std::string mode, backend = "cayley:2", g, h;
  int radius = 2;
  int K = -1;  // promote: -1 = 4*eta + 4
  int window = 0;
  int n_max = 1000;
  uint64_t seed = 0;
  bool json = false;
};

sclkit::actions::GraphAction load_backend(const std::string& backend_arg, std::string* digest_src) {
  if (backend_arg.rfind("cayley:", 0) == 0) {
    int rank = std::stoi(backend_arg.substr(7));
    *digest_src = backend_arg;
    return sclkit::actions::GraphAction(sclkit::actions::CayleyTreeBackend{rank});
  }
  std::string bytes = slurp(backend_arg);
  *digest_src = bytes;
  std::istringstream in(bytes);
  return sclkit::actions::load_explicit_action(in);
}

int run_action(const ActionArgs& a) {
  Timer timer;
  std::string digest_src;
  auto act = load_backend(a.backend, &digest_src);
  ReducedWord g = ReducedWord::parse(a.g, act.rank());

  RunReport rep;
  rep.subcommand = "action " + a.mode;
  rep.seed = a.seed;
  rep.inputs_digest = sclkit::cli::fnv1a(digest_src + ";g=" + g.str() + ";h=" + a.h +
                                         ";radius=" + std::to_string(a.radius));
  rep.add_constant("backend", a.backend);
  rep.add_constant("rank", std::to_string(act.rank()));
  int exit_code = 0;

  if (a.mode == "classify") {
    auto cls = sclkit::actions::classify_isometry(act, g);
    if (auto* e = std::get_if<sclkit::actions::Elliptic>(&cls))
      rep.add_verdict("class", "elliptic (orbit diameter " + std::to_string(e->orbit_diameter) + ")");
    else if (auto* h = std::get_if<sclkit::actions::HyperbolicTau>(&cls))
      rep.add_verdict("class", "hyperbolic (tau " + std::to_string(h->tau) + ")");
    else
      rep.add_verdict("class", "inconclusive: " + std::get<sclkit::actions::Inconclusive>(cls).reason);
  } else if (a.mode == "axis") {
    auto axis = sclkit::actions::quasi_axis(act, g);
    rep.add_result("basepoint", axis.basepoint.str());
    rep.add_result("period", axis.period.str());
    rep.add_result("tau", std::to_string(axis.tau));
    rep.add_result("primitive_root", axis.primitive_root().str());
  } else if (a.mode == "project") {
    if (a.h.empty()) throw std::invalid_argument("project needs --other");
    ReducedWord h = ReducedWord::parse(a.h, act.rank());
    auto axis_g = sclkit::actions::quasi_axis(act, g);
    auto axis_h = sclkit::actions::quasi_axis(act, h);
    auto rel = sclkit::actions::line_relation(axis_g, axis_h);
    rep.add_result("same_line", rel.same_line ? "true" : "false");
    if (!rel.same_line) {
      rep.add_result("gap", std::to_string(rel.gap));
      rep.add_result("projection_window", window_str(rel.lo1, rel.hi1));
      rep.add_result("projection_diameter", std::to_string(rel.diameter));
      if (rel.gap == 0) rep.add_result("overlap_window", window_str(rel.lo2, rel.hi2));
    }
    auto growth = sclkit::actions::project_with_growth(act, axis_g, axis_h, a.window);
    rep.add_result("growth_diameters",
                   std::to_string(growth.diameters[0]) + ", " + std::to_string(growth.diameters[1]) +
                       ", " + std::to_string(growth.diameters[2]));
    rep.add_constant("growth_threshold", std::to_string(growth.threshold));
    rep.add_verdict("parallel", growth.parallel ? "true" : "false");
  } else if (a.mode == "wwpd") {
    auto res = sclkit::actions::wwpd_xi(act, g, a.radius);
    rep.add_constant("conj_radius", std::to_string(a.radius));
    rep.add_result("xi", std::to_string(res.xi));
    rep.add_result("parallel_conjugators", std::to_string(res.parallel_conjugators.size()));
    rep.add_result("witness", res.witness ? res.witness->str() : "-");
  } else if (a.mode == "promote") {
    try {
      auto fam = sclkit::actions::build_projection_family(act, g, a.radius);
      int K = a.K >= 0 ? a.K : sclkit::actions::default_promotion_K(fam.eta);
      rep.add_constant("conj_radius", std::to_string(a.radius));
      rep.add_constant("eta", std::to_string(fam.eta));
      rep.add_constant("K", std::to_string(K));
      auto pg = sclkit::actions::promote_to_quasitree(fam, K);
      auto bn = sclkit::hypgraph::bottleneck_constant(pg.graph, {});
      rep.add_result("members", std::to_string(fam.members.size()));
      rep.add_result("vertices", std::to_string(pg.graph.vertex_count()));
      rep.add_result("edges", std::to_string(pg.graph.edge_count()));
      rep.add_result("bottleneck_Delta", std::to_string(bn.delta));
      rep.add_verdict("promotion", "quasi-tree built");
    } catch (const sclkit::actions::AxiomViolationError& e) {
      rep.add_verdict("promotion", std::string("projection axiom violated: ") + e.what());
    } catch (const sclkit::actions::PromotionError& e) {
      rep.add_verdict("promotion", std::string("failed: ") + e.what());
    }
  } else {  // pipeline
    sclkit::actions::PipelineBudgets budgets;
    budgets.conj_radius = a.radius;
    budgets.n_max = a.n_max;
    budgets.seed = a.seed;
    try {
      auto pr = sclkit::actions::scl_pipeline(act, g, budgets);
      rep.add_constant("delta_quasi_tree", std::to_string(pr.delta_quasi_tree));
      rep.add_constant("M", std::to_string(pr.M));
      rep.add_constant("xi", std::to_string(pr.xi));
      rep.add_constant("R", std::to_string(pr.R));
      rep.add_constant("tau", std::to_string(pr.tau));
      rep.add_constant("N", std::to_string(pr.N));
      rep.add_constant("defect_certified", rational_str(pr.report.defect_certified));
      rep.add_constant("n_max", std::to_string(a.n_max));
      rep.add_result("value", std::to_string(pr.report.value));
      rep.add_result("defect_observed", std::to_string(pr.report.defect_observed));
      rep.add_result("hhat_interval_per_g", interval_str(pr.homogenized_per_g));
      rep.add_result("lower_bound", rational_str(pr.lower_bound));
      if (!pr.scl_defined)
        rep.add_verdict("certificate", "none: g is outside the commutator subgroup");
      else if (pr.lower_bound > 0)
        rep.add_verdict("certificate", "scl(g) >= " + rational_str(pr.lower_bound));
      else
        rep.add_verdict("certificate", "none: homogenized interval does not clear zero");
    } catch (const sclkit::actions::PipelineError& e) {
      rep.add_verdict("certificate", std::string("none: ") + e.what());
    }
  }
  rep.timing_ms = timer.ms();
  emit(rep, a.json);
  return exit_code;
}

// --- classify ------------------------------------------------------------------

struct ClassifyArgs {
  std::string in;
  bool level_mode = false;
  bool witness = false;
  bool json = false;
};

int run_classify(const ClassifyArgs& a) {
  Timer timer;
  std::string bytes = slurp(a.in);
  std::istringstream in(bytes);
  auto d = sclkit::nt::NTDecomposition::parse(in);

  RunReport rep;
  rep.subcommand = "classify";
  rep.inputs_digest = sclkit::cli::fnv1a(bytes);
  rep.add_constant("N", std::to_string(d.N));
  rep.add_constant("components", std::to_string(d.components.size()));
  rep.add_constant("level_mode", a.level_mode ? "on" : "off");
  int exit_code = 0;

  auto chi = sclkit::nt::chi_vector(d);
  for (const auto& [repid, val] : chi) rep.add_result("chi[" + repid + "]", rational_str(val));

  if (a.level_mode) {
    bool positive = sclkit::nt::exponential_growth_verdict(d, true);
    rep.add_verdict("scl", positive ? "positive" : "zero");
    exit_code = positive ? 10 : 0;
  } else {
    auto v = sclkit::nt::scl_verdict(d);
    if (v.kind == sclkit::nt::SclVerdict::Positive) {
      rep.add_verdict("scl", "positive");
      rep.add_verdict("witness_class", v.witness_rep);
      rep.add_verdict("witness_n_gamma", rational_str(v.witness_n_gamma));
      rep.add_verdict("witness_complexity", std::to_string(v.witness_complexity));
      rep.add_verdict("recipe",
                      "a counting quasi-morphism on a quasi-axis of the class part of '" +
                          v.witness_rep + "' gives scl >= 1/48 per acting power via the "
                          "homogenized Bavard bound");
      exit_code = 10;
    } else {
      rep.add_verdict("scl", "zero");
      int i = 0;
      for (const auto& cert : v.certificates) {
        std::string reason = cert.reason == sclkit::nt::SclVerdict::Certificate::AchiralComponent
                                 ? "achiral component"
                                 : "class sum " + rational_str(cert.sum);
        rep.add_verdict("certificate[" + std::to_string(i++) + "]", cert.id + ": " + reason);
      }
      auto wb = sclkit::nt::commutator_witness(d);
      rep.add_result("witness_power", std::to_string(wb.N));
      rep.add_result("witness_commutators", std::to_string(wb.B));
      bool all_verified = true;
      if (a.witness) {
        int j = 0;
        for (const auto& w : wb.witnesses) {
          std::string head = "witness[" + std::to_string(j++) + "]";
          rep.add_result(head, w.id + ": power " + std::to_string(w.power) + ", " +
                                   std::to_string(w.commutators) + " commutators, " +
                                   (w.verified ? "verified" : "NOT VERIFIED"));
          rep.add_result(head + ".letters", w.substitution);
          rep.add_result(head + ".expression", w.expression);
          rep.add_result(head + ".target", w.target);
        }
      }
      for (const auto& w : wb.witnesses) all_verified = all_verified && w.verified;
      if (!all_verified) throw std::logic_error("commutator witness failed free-reduction check");
      exit_code = 0;
    }
  }
  rep.timing_ms = timer.ms();
  emit(rep, a.json);
  return exit_code;
}

// --- selftest --------------------------------------------------------------------

int run_selftest(uint64_t seed, bool json) {
  auto rows = sclkit::accept::run_all(seed);
  int failed = 0;
  for (const auto& r : rows)
    if (!r.pass) ++failed;
  if (json) {
    RunReport rep;
    rep.subcommand = "selftest";
    rep.seed = seed;
    rep.inputs_digest = sclkit::cli::fnv1a("selftest;seed=" + std::to_string(seed));
    for (const auto& r : rows)
      rep.add_result(std::to_string(r.id) + ". " + r.name,
                     std::string(r.pass ? "PASS" : "FAIL") + ": " + r.detail);
    rep.add_verdict("selftest", failed == 0 ? "all criteria passed"
                                            : std::to_string(failed) + " criteria failed");
    std::fputs(rep.json().c_str(), stdout);
  } else {
    std::fputs(sclkit::accept::format_table(rows).c_str(), stdout);
  }
  return failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scl positivity toolkit: counting quasi-morphisms, quasi-tree geometry, "
               "group actions, and the symbolic decomposition classifier"};
  app.require_subcommand(1);

  QmEvalArgs qa;
  auto* qm = app.add_subcommand("qm-eval", "evaluate a counting quasi-morphism");
  qm->add_option("--w", qa.w, "base word")->required();
  qm->add_option("--g", qa.g, "element to evaluate")->required();
  qm->add_option("--rank", qa.rank, "free-group rank (0 = infer)");
  qm->add_option("--m", qa.m, "minimum-length threshold M");
  qm->add_option("--basepoint", qa.basepoint, "basepoint word (default identity)");
  qm->add_option("--n-max", qa.n_max, "homogenization power");
  qm->add_option("--pairs", qa.pairs, "defect sample pairs");
  qm->add_option("--seed", qa.seed, "random seed");
  qm->add_flag("--json", qa.json, "machine-readable report");

  GraphArgs ga;
  auto* gr = app.add_subcommand("graph", "finite-graph geometry");
  gr->add_option("mode", ga.mode, "delta | bottleneck | manning")
      ->required()
      ->check(CLI::IsMember({"delta", "bottleneck", "manning"}));
  gr->add_option("--in", ga.in, "graph file")->required();
  gr->add_option("--base", ga.base, "base vertex (manning)");
  gr->add_option("--delta", ga.delta_override, "bottleneck constant override (manning)");
  gr->add_option("--exact-cap", ga.exact_cap, "largest n for exhaustive delta");
  gr->add_option("--samples", ga.samples, "sampled quadruples when over the cap");
  gr->add_option("--seed", ga.seed, "random seed");
  gr->add_flag("--json", ga.json, "machine-readable report");

  ActionArgs aa;
  auto* ac = app.add_subcommand("action", "group actions on trees and graphs");
  ac->add_option("mode", aa.mode, "classify | axis | project | wwpd | promote | pipeline")
      ->required()
      ->check(CLI::IsMember({"classify", "axis", "project", "wwpd", "promote", "pipeline"}));
  ac->add_option("--backend", aa.backend, "cayley:<rank> or an action file");
  ac->add_option("--g", aa.g, "acting element")->required();
  ac->add_option("--other", aa.h, "second element (project)");
  ac->add_option("--radius", aa.radius, "conjugator ball radius");
  ac->add_option("--K", aa.K, "promotion threshold (default 4*eta+4)");
  ac->add_option("--window", aa.window, "projection growth window (0 = auto)");
  ac->add_option("--n-max", aa.n_max, "homogenization power (pipeline)");
  ac->add_option("--seed", aa.seed, "random seed");
  ac->add_flag("--json", aa.json, "machine-readable report");

  ClassifyArgs ca;
  auto* cl = app.add_subcommand("classify", "scl positivity of a symbolic decomposition");
  cl->add_option("--in", ca.in, "decomposition file")->required();
  cl->add_flag("--level-mode", ca.level_mode, "level-subgroup context");
  cl->add_flag("--witness", ca.witness, "print the commutator witnesses");
  cl->add_flag("--json", ca.json, "machine-readable report");

  uint64_t st_seed = 0;
  bool st_json = false;
  auto* st = app.add_subcommand("selftest", "run the release criteria");
  st->add_option("--seed", st_seed, "random seed");
  st->add_flag("--json", st_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (qm->parsed()) return run_qm_eval(qa);
    if (gr->parsed()) return run_graph(ga);
    if (ac->parsed()) return run_action(aa);
    if (cl->parsed()) return run_classify(ca);
    if (st->parsed()) return run_selftest(st_seed, st_json);
  } catch (const FormatError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());  // what() carries line and column
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid request: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 1;  // unreachable with require_subcommand(1)
}
