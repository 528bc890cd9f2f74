#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sclkit::words {

// Letters are nonzero ints: +i is the i-th generator (1-based), -i its inverse.
// Text form uses a..z for generators and A..Z for inverses, so rank <= 26.
//
// Letter order for all lexicographic comparisons puts each generator just
// before its own inverse: a < a^-1 < b < b^-1 < ...
inline int letter_key(int letter) {
  int gen = letter > 0 ? letter : -letter;
  return 2 * (gen - 1) + (letter < 0 ? 1 : 0);
}

class ReducedWord {
 public:
  ReducedWord() = default;

  // Free reduction of an arbitrary letter string. Throws std::invalid_argument
  // on a zero letter or one outside [-rank, rank].
  static ReducedWord reduce(const std::vector<int>& raw, int rank);

  // Parse "abAB" style text. rank 0 means: infer as the largest generator
  // mentioned (at least 1). Explicit rank must cover every letter.
  static ReducedWord parse(std::string_view text, int rank = 0);

  static ReducedWord identity(int rank) { return ReducedWord({}, rank); }

  // Trusted constructor: `letters` must already be freely reduced.
  static ReducedWord from_reduced(std::vector<int> letters, int rank);

  const std::vector<int>& letters() const { return letters_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int letter(int i) const { return letters_[static_cast<size_t>(i)]; }

  ReducedWord inverse() const;
  ReducedWord operator*(const ReducedWord& rhs) const;  // concat + reduce
  ReducedWord pow(long long n) const;
  ReducedWord prefix(int len) const;

  // [x, y] = x y x^-1 y^-1. Operands must have equal rank.
  static ReducedWord commutator(const ReducedWord& x, const ReducedWord& y);

  // Signed letter counts, one entry per generator.
  std::vector<long long> abelianization() const;
  bool in_commutator_subgroup() const;

  std::string str() const;  // "" prints as "1"

  bool operator==(const ReducedWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const ReducedWord& o) const { return !(*this == o); }

  // Shortlex: length first, then letter_key order.
  static bool shortlex_less(const ReducedWord& a, const ReducedWord& b);

  struct Hash {
    size_t operator()(const ReducedWord& w) const;
  };

 private:
  ReducedWord(std::vector<int> letters, int rank)
      : letters_(std::move(letters)), rank_(rank) {}

  std::vector<int> letters_;
  int rank_ = 0;
};

// Cyclic data of g: the decomposition g = u c u^-1 with c cyclically reduced
// (c as it sits inside g), plus the canonical conjugacy-class form = the
// rotation of c that is least in letter_key order.
class CyclicWord {
 public:
  static CyclicWord of(const ReducedWord& g);

  const ReducedWord& canonical() const { return canonical_; }
  const ReducedWord& conjugator() const { return conjugator_; }  // u
  const ReducedWord& axis_word() const { return axis_word_; }    // c
  int length() const { return axis_word_.size(); }

  bool operator==(const CyclicWord& o) const { return canonical_ == o.canonical_; }

 private:
  ReducedWord canonical_, conjugator_, axis_word_;
};

}  // namespace sclkit::words
