#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sclkit/rational.hpp"
#include "sclkit/word.hpp"

namespace sclkit::qm {

using words::ReducedWord;

// Greedy left-to-right count of non-overlapping copies of `w` inside the
// oriented geodesic word `path`. Greedy is exact for interval scheduling on a
// line: it realizes the maximum non-overlapping count.
int count_nonoverlapping_in_word(const ReducedWord& w, const ReducedWord& path);

// Copies of w contained in the oriented geodesic [from, to] of the Cayley
// tree; the geodesic spells reduce(from^-1 * to).
int count_nonoverlapping(const ReducedWord& w, const ReducedWord& from, const ReducedWord& to);

// Counting difference quasi-morphism F(a) = N_w(x0, a x0) - N_{w^-1}(x0, a x0)
// over a free-group tree model. Exact containment (epsilon = 0).
struct CountingQM {
  ReducedWord base;       // w; must satisfy |w| > min_length_threshold
  ReducedWord basepoint;  // x0 (identity vertex in the pure word model)
  int min_length_threshold = 0;  // M
  int epsilon = 0;               // slack; 0 = exact oriented containment

  static CountingQM word_model(ReducedWord w, int min_length_threshold = 0);
  static CountingQM with_basepoint(ReducedWord w, ReducedWord x0,
                                   int min_length_threshold);
};

int qm_value(const CountingQM& qm, const ReducedWord& alpha);

// max |F(xy) - F(x) - F(y)| over the given pairs.
int defect_estimate(const CountingQM& qm,
                    const std::vector<std::pair<ReducedWord, ReducedWord>>& pairs);

struct RationalInterval {
  Rational lo, hi;
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  Rational width() const { return hi - lo; }
};

// Interval certain to contain the homogenization lim F(g^n)/n, namely
// [F(g^n)/n - D/n, F(g^n)/n + D/n] at n = n_max with D = defect_bound.
RationalInterval homogenize(const CountingQM& qm, const ReducedWord& g, int n_max,
                            const Rational& defect_bound);

struct BavardOutcome {
  enum Kind { Bound, HomomorphismObstruction } kind;
  Rational value;  // Bound: the scl lower bound. Homomorphism: |hhat_lo| itself.
};

// scl lower bound |hhat_lo| / (2 * defect_bound). defect_bound == 0 means F is
// a homomorphism; a nonzero homogeneous value then obstructs scl entirely
// (infinite-order obstruction), reported as a distinct outcome.
BavardOutcome bavard_bound(const Rational& hhat_lo, const Rational& defect_bound);

// Defect bound certified for counting quasi-morphisms on quasi-tree models.
inline constexpr int kCertifiedDefectBound = 12;

struct QMReport {
  std::string base_word;
  std::string basepoint;
  int value = 0;            // F(g)
  int defect_observed = 0;  // max over the sampled pairs
  Rational defect_certified = kCertifiedDefectBound;
  RationalInterval homogenized{0, 0};
  BavardOutcome bavard{BavardOutcome::Bound, 0};
  int n_max = 0;
  int min_length_threshold = 0;  // M, recorded
  int epsilon = 0;
  long long pairs_sampled = 0;
};

// Evaluates F(g), samples the defect over `sample_pairs` random reduced-word
// pairs (seeded), homogenizes at n_max with the certified defect bound, and
// derives the Bavard lower bound.
QMReport build_report(const CountingQM& qm, const ReducedWord& g, int n_max,
                      long long sample_pairs, uint64_t seed);

}  // namespace sclkit::qm
