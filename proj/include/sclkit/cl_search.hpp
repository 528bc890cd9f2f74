#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "sclkit/rational.hpp"
#include "sclkit/word.hpp"

namespace sclkit::words {

struct ClFound {
  int cl;
  std::vector<std::pair<ReducedWord, ReducedWord>> witness;  // [x1,y1]...[xc,yc]
};
struct ClNotFoundWithin {
  int max_cl;
  int radius;
};
struct ClInfinite {};  // nonzero abelianization: not in the commutator subgroup

using ClOutcome = std::variant<ClFound, ClNotFoundWithin, ClInfinite>;

// Exhaustive search for the least c <= max_cl such that g is a product of c
// commutators with all witness entries of length <= radius. Enumeration is in
// shortlex order, so the returned witness is deterministic. This is a
// brute-force oracle: cost grows as (#words <= radius)^(2 max(1, c-1)).
ClOutcome cl_search(const ReducedWord& g, int max_cl, int radius);

struct SclUpperResult {
  std::optional<Rational> bound;  // min over n of found_cl(g^n) / n; empty if nothing found
  int best_n = 0;
  int best_cl = 0;
  std::vector<std::pair<ReducedWord, ReducedWord>> witness;
};

// min over 1 <= n <= n_max of cl_search(g^n)/n, using found values only.
// Throws std::invalid_argument if g has nonzero abelianization.
SclUpperResult scl_upper(const ReducedWord& g, int n_max, int max_cl, int radius);

// Shortlex-ordered list of all reduced words of length <= radius (identity first).
std::vector<ReducedWord> ball(int rank, int radius);

}  // namespace sclkit::words
