#include "sclkit/cl_search.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace sclkit::words {

namespace {

void ball_rec(std::vector<int>& cur, int rank, int left, std::vector<ReducedWord>& out) {
  if (left == 0) return;
  // Children in letter_key order: a, a^-1, b, b^-1, ...
  for (int gen = 1; gen <= rank; ++gen) {
    for (int sign = 0; sign < 2; ++sign) {
      int letter = sign == 0 ? gen : -gen;
      if (!cur.empty() && cur.back() == -letter) continue;
      cur.push_back(letter);
      out.push_back(ReducedWord::from_reduced(cur, rank));
      ball_rec(cur, rank, left - 1, out);
      cur.pop_back();
    }
  }
}

}  // namespace

std::vector<ReducedWord> ball(int rank, int radius) {
  std::vector<ReducedWord> out;
  out.push_back(ReducedWord::identity(rank));
  std::vector<int> cur;
  ball_rec(cur, rank, radius, out);
  // Depth-first emission is lex but not shortlex; sort to get shortlex order.
  std::sort(out.begin(), out.end(), ReducedWord::shortlex_less);
  return out;
}

ClOutcome cl_search(const ReducedWord& g, int max_cl, int radius) {
  if (!g.in_commutator_subgroup()) return ClInfinite{};
  if (g.empty()) return ClFound{0, {}};
  if (max_cl < 1) return ClNotFoundWithin{max_cl, radius};

  auto words = ball(g.rank(), radius);

  // One level: scan pairs in shortlex-lex order.
  for (int c = 1; c <= max_cl; ++c) {
    if (c == 1) {
      for (const auto& x : words)
        for (const auto& y : words) {
          if (2 * (x.size() + y.size()) < g.size()) continue;  // too short to spell g
          if (ReducedWord::commutator(x, y) == g)
            return ClFound{1, {{x, y}}};
        }
      continue;
    }
    // c >= 2: enumerate the first c-1 commutators, close with a map lookup.
    // The map keeps the first (shortlex-least) witness pair per value.
    static thread_local std::unordered_map<ReducedWord,
                                           std::pair<ReducedWord, ReducedWord>,
                                           ReducedWord::Hash>* memo = nullptr;
    static thread_local int memo_rank = -1, memo_radius = -1;
    if (memo == nullptr || memo_rank != g.rank() || memo_radius != radius) {
      delete memo;
      memo = new std::unordered_map<ReducedWord, std::pair<ReducedWord, ReducedWord>,
                                    ReducedWord::Hash>();
      memo_rank = g.rank();
      memo_radius = radius;
      for (const auto& x : words)
        for (const auto& y : words)
          memo->emplace(ReducedWord::commutator(x, y), std::make_pair(x, y));
    }

    std::vector<std::pair<ReducedWord, ReducedWord>> stack;
    ReducedWord acc = ReducedWord::identity(g.rank());
    // Recursive enumeration of c-1 leading commutators.
    std::function<std::optional<ClFound>(int, const ReducedWord&)> rec =
        [&](int depth, const ReducedWord& partial) -> std::optional<ClFound> {
      if (depth == c - 1) {
        auto it = memo->find(partial.inverse() * g);
        if (it == memo->end()) return std::nullopt;
        auto witness = stack;
        witness.push_back(it->second);
        return ClFound{c, witness};
      }
      for (const auto& x : words)
        for (const auto& y : words) {
          stack.emplace_back(x, y);
          auto found = rec(depth + 1, partial * ReducedWord::commutator(x, y));
          if (found) return found;
          stack.pop_back();
        }
      return std::nullopt;
    };
    auto found = rec(0, acc);
    if (found) return *found;
  }
  return ClNotFoundWithin{max_cl, radius};
}

SclUpperResult scl_upper(const ReducedWord& g, int n_max, int max_cl, int radius) {
  if (!g.in_commutator_subgroup())
    throw std::invalid_argument("scl_upper: g has nonzero abelianization, scl is undefined");
  SclUpperResult res;
  for (int n = 1; n <= n_max; ++n) {
    auto outcome = cl_search(g.pow(n), max_cl, radius);
    if (auto* found = std::get_if<ClFound>(&outcome)) {
      Rational cand(found->cl, n);
      if (!res.bound || cand < *res.bound) {
        res.bound = cand;
        res.best_n = n;
        res.best_cl = found->cl;
        res.witness = found->witness;
      }
    }
  }
  return res;
}

}  // namespace sclkit::words
