#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "sclkit/counting.hpp"
#include "sclkit/word.hpp"

using sclkit::Rational;
using sclkit::words::ReducedWord;
namespace qm = sclkit::qm;

namespace {

ReducedWord random_word(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> mag(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> raw;
  for (int i = 0; i < len; ++i) raw.push_back(sign(rng) ? mag(rng) : -mag(rng));
  return ReducedWord::reduce(raw, rank);
}

}  // namespace

TEST_CASE("disjoint occurrence counts match the DP oracle") {
  CHECK(qm::count_nonoverlapping(ReducedWord::parse("aa"), ReducedWord::identity(1),
                                 ReducedWord::parse("aaaaa")) == 2);
  CHECK(qm::count_nonoverlapping(ReducedWord::parse("ab"), ReducedWord::identity(2),
                                 ReducedWord::parse("abab")) == 2);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> wl(1, 4), pl(0, 40);
  for (int t = 0; t < 2000; ++t) {
    ReducedWord w = random_word(rng, 2, wl(rng));
    if (w.empty()) continue;
    ReducedWord path = random_word(rng, 2, pl(rng));
    CHECK(qm::count_nonoverlapping_in_word(w, path) ==
          oracles::dp_disjoint_count(path.letters(), w.letters()));
  }
}

TEST_CASE("counting difference is antisymmetric") {
  std::mt19937_64 rng(22);
  auto f = qm::CountingQM::word_model(ReducedWord::parse("ab"));
  for (int t = 0; t < 300; ++t) {
    ReducedWord alpha = random_word(rng, 2, 12);
    CHECK(qm::qm_value(f, alpha.inverse()) == -qm::qm_value(f, alpha));
  }
}

TEST_CASE("basepoint change is conjugation on the argument") {
  std::mt19937_64 rng(23);
  auto plain = qm::CountingQM::word_model(ReducedWord::parse("ab"));
  for (int t = 0; t < 200; ++t) {
    ReducedWord x0 = random_word(rng, 2, 5);
    ReducedWord alpha = random_word(rng, 2, 10);
    auto moved = qm::CountingQM::with_basepoint(ReducedWord::parse("ab"), x0, 0);
    CHECK(qm::qm_value(moved, alpha) ==
          qm::qm_value(plain, x0.inverse() * alpha * x0));
  }
  CHECK_THROWS_AS(qm::CountingQM::with_basepoint(ReducedWord::parse("ab"),
                                                 ReducedWord::identity(2), 2),
                  std::invalid_argument);
}

TEST_CASE("length filter zeroes short-period input") {
  auto f = qm::CountingQM::with_basepoint(ReducedWord::parse("abAB"),
                                          ReducedWord::identity(2), 2);
  for (int n = 1; n <= 50; ++n)
    CHECK(qm::qm_value(f, ReducedWord::parse("b").pow(n)) == 0);
  for (int n = 1; n <= 64; ++n)
    CHECK(qm::qm_value(f, ReducedWord::parse("abAB").pow(n)) == n);
}

TEST_CASE("homogenization interval for a power counter") {
  auto f = qm::CountingQM::word_model(ReducedWord::parse("aa"));
  auto iv = qm::homogenize(f, ReducedWord::parse("a"), 1000, 12);
  CHECK(iv.lo == Rational(488, 1000));
  CHECK(iv.hi == Rational(512, 1000));
  CHECK(iv.contains(Rational(1, 2)));
  CHECK(iv.width() == Rational(24, 1000));
}

TEST_CASE("lower bound from the defect") {
  auto b = qm::bavard_bound(Rational(1, 2), 12);
  CHECK(b.kind == qm::BavardOutcome::Bound);
  CHECK(b.value == Rational(1, 48));
  CHECK(qm::bavard_bound(Rational(3), 12).value == Rational(1, 8));
  auto h = qm::bavard_bound(Rational(7, 2), 0);
  CHECK(h.kind == qm::BavardOutcome::HomomorphismObstruction);
  CHECK(h.value == Rational(7, 2));
}

TEST_CASE("full report is exact and symmetric under inversion of g") {
  auto ra = qm::build_report(qm::CountingQM::word_model(ReducedWord::parse("aa")),
                             ReducedWord::parse("a"), 1000, 64, 5);
  auto rA = qm::build_report(qm::CountingQM::word_model(ReducedWord::parse("aa")),
                             ReducedWord::parse("A"), 1000, 64, 5);
  CHECK(ra.bavard.kind == qm::BavardOutcome::Bound);
  CHECK(ra.bavard.value == Rational(61, 3000));
  CHECK(rA.bavard.value == Rational(61, 3000));
  CHECK(ra.defect_observed <= 12);
  CHECK(ra.defect_certified == Rational(12));
  CHECK(ra.n_max == 1000);
}

TEST_CASE("observed defect never exceeds the certified bound") {
  std::mt19937_64 rng(24);
  for (const char* base : {"ab", "aab", "abAB"}) {
    auto f = qm::CountingQM::word_model(ReducedWord::parse(base));
    std::vector<std::pair<ReducedWord, ReducedWord>> pairs;
    for (int t = 0; t < 400; ++t)
      pairs.emplace_back(random_word(rng, 2, 8), random_word(rng, 2, 8));
    CHECK(qm::defect_estimate(f, pairs) <= 12);
  }
}
