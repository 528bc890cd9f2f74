#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "sclkit/cl_search.hpp"
#include "sclkit/word.hpp"

using sclkit::words::ReducedWord;
namespace words = sclkit::words;

namespace {

std::vector<int> random_raw(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> mag(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> raw;
  raw.reserve(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) raw.push_back(sign(rng) ? mag(rng) : -mag(rng));
  return raw;
}

}  // namespace

TEST_CASE("free reduction agrees with a fixpoint reducer") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(0, 30);
  for (int t = 0; t < 500; ++t) {
    auto raw = random_raw(rng, 3, len(rng));
    CHECK(ReducedWord::reduce(raw, 3).letters() == oracles::fixpoint_reduce(raw));
  }
  CHECK(ReducedWord::reduce({1, -1}, 2).empty());
  CHECK(ReducedWord::reduce({1, 2, -2, -1, 1}, 2).str() == "a");
}

TEST_CASE("parse and print round-trip") {
  CHECK(ReducedWord::parse("abAB").str() == "abAB");
  CHECK(ReducedWord::parse("abAB").rank() == 2);
  CHECK(ReducedWord::parse("abAB", 5).rank() == 5);
  CHECK(ReducedWord::parse("1").empty());
  CHECK(ReducedWord::parse("e").empty());
  CHECK(ReducedWord::identity(2).str() == "1");
  CHECK(ReducedWord::parse("aA").empty());  // parse reduces
  CHECK_THROWS_AS(ReducedWord::parse("ab!"), std::invalid_argument);
  CHECK_THROWS_AS(ReducedWord::parse("abc", 2), std::invalid_argument);

  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> len(0, 20);
  for (int t = 0; t < 200; ++t) {
    ReducedWord w = ReducedWord::reduce(random_raw(rng, 4, len(rng)), 4);
    CHECK(ReducedWord::parse(w.str(), 4) == w);
  }
}

TEST_CASE("group algebra identities") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> len(0, 12);
  for (int t = 0; t < 200; ++t) {
    ReducedWord x = ReducedWord::reduce(random_raw(rng, 2, len(rng)), 2);
    ReducedWord y = ReducedWord::reduce(random_raw(rng, 2, len(rng)), 2);
    CHECK((x * y).inverse() == y.inverse() * x.inverse());
    CHECK((x * x.inverse()).empty());
    CHECK(x.pow(-2) == x.inverse() * x.inverse());
    CHECK(x.pow(3) == x * x * x);
    CHECK(ReducedWord::commutator(x, y) == x * y * x.inverse() * y.inverse());
    CHECK(ReducedWord::commutator(x, y).inverse() == ReducedWord::commutator(y, x));
  }
  ReducedWord w = ReducedWord::parse("abaB");
  CHECK(w.prefix(2).str() == "ab");
  CHECK(w.prefix(0).empty());
  CHECK(w.prefix(4) == w);
}

TEST_CASE("shortlex ball enumeration") {
  auto b2 = words::ball(2, 2);
  CHECK(b2.size() == 17);
  CHECK(b2[0].empty());
  CHECK(b2[1].str() == "a");
  CHECK(b2[2].str() == "A");
  CHECK(b2[3].str() == "b");
  CHECK(b2[4].str() == "B");
  for (size_t i = 1; i < b2.size(); ++i) CHECK(ReducedWord::shortlex_less(b2[i - 1], b2[i]));
  CHECK(words::ball(2, 5).size() == 485);
  CHECK(words::ball(1, 3).size() == 7);
}

TEST_CASE("abelianization and commutator membership") {
  CHECK(ReducedWord::parse("abAB").in_commutator_subgroup());
  CHECK(ReducedWord::parse("abAB").abelianization() == std::vector<long long>{0, 0});
  CHECK_FALSE(ReducedWord::parse("aab").in_commutator_subgroup());
  CHECK(ReducedWord::parse("aab").abelianization() == std::vector<long long>{2, 1});
  CHECK(ReducedWord::identity(3).in_commutator_subgroup());
}

TEST_CASE("cyclic canonical form splits conjugator and cyclic part") {
  auto cw = words::CyclicWord::of(ReducedWord::parse("AbaaBa"));
  CHECK(cw.conjugator().str() == "Ab");
  CHECK(cw.axis_word().str() == "aa");
  CHECK(cw.length() == 2);
  auto cw2 = words::CyclicWord::of(ReducedWord::parse("ba"));
  CHECK(cw2.canonical().str() == "ab");  // least rotation
  CHECK(words::CyclicWord::of(ReducedWord::parse("abAB")).conjugator().empty());
}

TEST_CASE("commutator length search") {
  using namespace sclkit::words;
  ReducedWord c = ReducedWord::commutator(ReducedWord::parse("a", 2), ReducedWord::parse("b", 2));

  auto found = cl_search(c, 2, 2);
  REQUIRE(std::holds_alternative<ClFound>(found));
  CHECK(std::get<ClFound>(found).cl == 1);
  auto& wit = std::get<ClFound>(found).witness;
  ReducedWord prod = ReducedWord::identity(2);
  for (auto& [x, y] : wit) prod = prod * ReducedWord::commutator(x, y);
  CHECK(prod == c);

  // cl([a,b]^2) = 2, so a genus-1 search can never succeed.
  auto miss = cl_search(c.pow(2), 1, 4);
  CHECK(std::holds_alternative<ClNotFoundWithin>(miss));

  // Nonzero abelianization: no power is a product of commutators.
  CHECK(std::holds_alternative<ClInfinite>(cl_search(ReducedWord::parse("a"), 2, 2)));
}

TEST_CASE("stable upper bounds from powers") {
  using namespace sclkit::words;
  ReducedWord c = ReducedWord::commutator(ReducedWord::parse("a", 2), ReducedWord::parse("b", 2));
  auto res = scl_upper(c, 2, 2, 2);
  REQUIRE(res.bound.has_value());
  CHECK(*res.bound == sclkit::Rational(1));
  CHECK(res.best_n == 1);
  CHECK(res.best_cl == 1);

  // [[a,b], c] in rank 3 is a single commutator of longer words.
  ReducedWord g = ReducedWord::commutator(
      ReducedWord::parse(c.str(), 3), ReducedWord::parse("c", 3));
  auto res3 = scl_upper(g, 1, 1, 4);
  REQUIRE(res3.bound.has_value());
  CHECK(*res3.bound <= sclkit::Rational(1));

  CHECK_THROWS_AS(scl_upper(ReducedWord::parse("aab"), 2, 2, 2), std::invalid_argument);
}
