#include "sclkit/counting.hpp"

#include <random>
#include <stdexcept>

namespace sclkit::qm {

int count_nonoverlapping_in_word(const ReducedWord& w, const ReducedWord& path) {
  if (w.empty()) throw std::invalid_argument("count: base segment is empty");
  const auto& pat = w.letters();
  const auto& txt = path.letters();
  int n = static_cast<int>(txt.size()), m = static_cast<int>(pat.size());
  int count = 0;
  for (int i = 0; i + m <= n;) {
    bool hit = true;
    for (int j = 0; j < m; ++j)
      if (txt[static_cast<size_t>(i + j)] != pat[static_cast<size_t>(j)]) {
        hit = false;
        break;
      }
    if (hit) {
      ++count;
      i += m;
    } else {
      ++i;
    }
  }
  return count;
}

int count_nonoverlapping(const ReducedWord& w, const ReducedWord& from, const ReducedWord& to) {
  return count_nonoverlapping_in_word(w, from.inverse() * to);
}

CountingQM CountingQM::word_model(ReducedWord w, int min_length_threshold) {
  return with_basepoint(std::move(w), ReducedWord::identity(0), min_length_threshold);
}

CountingQM CountingQM::with_basepoint(ReducedWord w, ReducedWord x0, int min_length_threshold) {
  if (w.size() <= min_length_threshold)
    throw std::invalid_argument("counting qm: |w| = " + std::to_string(w.size()) +
                                " does not exceed the minimum-length threshold M = " +
                                std::to_string(min_length_threshold));
  CountingQM qm;
  qm.base = std::move(w);
  qm.basepoint = std::move(x0);
  qm.min_length_threshold = min_length_threshold;
  return qm;
}

int qm_value(const CountingQM& qm, const ReducedWord& alpha) {
  ReducedWord geod = qm.basepoint.empty()
                         ? alpha
                         : qm.basepoint.inverse() * alpha * qm.basepoint;
  return count_nonoverlapping_in_word(qm.base, geod) -
         count_nonoverlapping_in_word(qm.base.inverse(), geod);
}

int defect_estimate(const CountingQM& qm,
                    const std::vector<std::pair<ReducedWord, ReducedWord>>& pairs) {
  int worst = 0;
  for (const auto& [x, y] : pairs) {
    int d = qm_value(qm, x * y) - qm_value(qm, x) - qm_value(qm, y);
    worst = std::max(worst, d < 0 ? -d : d);
  }
  return worst;
}

RationalInterval homogenize(const CountingQM& qm, const ReducedWord& g, int n_max,
                            const Rational& defect_bound) {
  if (n_max < 1) throw std::invalid_argument("homogenize: n_max must be >= 1");
  Rational center(qm_value(qm, g.pow(n_max)), n_max);
  Rational slack = defect_bound / n_max;
  return RationalInterval{center - slack, center + slack};
}

BavardOutcome bavard_bound(const Rational& hhat_lo, const Rational& defect_bound) {
  if (defect_bound < 0) throw std::invalid_argument("bavard_bound: negative defect bound");
  Rational mag = hhat_lo < 0 ? Rational(-hhat_lo) : hhat_lo;
  if (defect_bound == 0) return {BavardOutcome::HomomorphismObstruction, mag};
  return {BavardOutcome::Bound, mag / (2 * defect_bound)};
}

QMReport build_report(const CountingQM& qm, const ReducedWord& g, int n_max,
                      long long sample_pairs, uint64_t seed) {
  QMReport rep;
  rep.base_word = qm.base.str();
  rep.basepoint = qm.basepoint.str();
  rep.value = qm_value(qm, g);
  rep.n_max = n_max;
  rep.min_length_threshold = qm.min_length_threshold;
  rep.epsilon = qm.epsilon;
  rep.pairs_sampled = sample_pairs;

  int rank = std::max(1, std::max(qm.base.rank(), g.rank()));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(0, 2 * std::max(8, qm.base.size()));
  std::uniform_int_distribution<int> gen_dist(1, rank);
  auto random_word = [&]() {
    int len = len_dist(rng);
    std::vector<int> letters;
    letters.reserve(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) {
      int letter;
      do {
        letter = gen_dist(rng) * (rng() % 2 ? 1 : -1);
      } while (!letters.empty() && letters.back() == -letter);
      letters.push_back(letter);
    }
    return ReducedWord::from_reduced(std::move(letters), rank);
  };
  std::vector<std::pair<ReducedWord, ReducedWord>> pairs;
  pairs.reserve(static_cast<size_t>(sample_pairs));
  for (long long i = 0; i < sample_pairs; ++i) pairs.emplace_back(random_word(), random_word());
  rep.defect_observed = defect_estimate(qm, pairs);

  rep.homogenized = homogenize(qm, g, n_max, rep.defect_certified);
  // Certified magnitude of the homogenization: the interval edge nearer zero,
  // or zero when the interval straddles it.
  Rational mag = 0;
  if (rep.homogenized.lo > 0)
    mag = rep.homogenized.lo;
  else if (rep.homogenized.hi < 0)
    mag = -rep.homogenized.hi;
  rep.bavard = bavard_bound(mag, rep.defect_certified);
  return rep;
}

}  // namespace sclkit::qm
