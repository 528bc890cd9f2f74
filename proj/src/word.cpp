#include "sclkit/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace sclkit::words {

namespace {

void check_letter(int letter, int rank) {
  if (letter == 0 || letter > rank || letter < -rank)
    throw std::invalid_argument("letter " + std::to_string(letter) +
                                " out of range for rank " + std::to_string(rank));
}

// Stack-based free reduction; cancels adjacent inverse pairs until none remain.
std::vector<int> reduce_letters(const std::vector<int>& raw) {
  std::vector<int> out;
  out.reserve(raw.size());
  for (int x : raw) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

}  // namespace

ReducedWord ReducedWord::reduce(const std::vector<int>& raw, int rank) {
  if (rank < 0 || rank > 26) throw std::invalid_argument("rank must be in [0, 26]");
  for (int x : raw) check_letter(x, rank);
  return ReducedWord(reduce_letters(raw), rank);
}

ReducedWord ReducedWord::parse(std::string_view text, int rank) {
  std::vector<int> raw;
  raw.reserve(text.size());
  int seen = 0;
  if (text == "1" || text == "e") text = "";  // identity spellings
  for (char ch : text) {
    int letter;
    if (ch >= 'a' && ch <= 'z')
      letter = ch - 'a' + 1;
    else if (ch >= 'A' && ch <= 'Z')
      letter = -(ch - 'A' + 1);
    else
      throw std::invalid_argument(std::string("bad word character '") + ch + "'");
    seen = std::max(seen, letter > 0 ? letter : -letter);
    raw.push_back(letter);
  }
  if (rank == 0) rank = std::max(seen, 1);
  if (seen > rank)
    throw std::invalid_argument("word uses generator " + std::to_string(seen) +
                                " beyond rank " + std::to_string(rank));
  return reduce(raw, rank);
}

ReducedWord ReducedWord::from_reduced(std::vector<int> letters, int rank) {
  for (size_t i = 0; i + 1 < letters.size(); ++i)
    if (letters[i] == -letters[i + 1])
      throw std::invalid_argument("from_reduced: letters are not freely reduced");
  for (int x : letters) check_letter(x, rank);
  return ReducedWord(std::move(letters), rank);
}

ReducedWord ReducedWord::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& x : inv) x = -x;
  return ReducedWord(std::move(inv), rank_);
}

ReducedWord ReducedWord::operator*(const ReducedWord& rhs) const {
  int rank = std::max(rank_, rhs.rank_);
  std::vector<int> cat = letters_;
  cat.insert(cat.end(), rhs.letters_.begin(), rhs.letters_.end());
  return ReducedWord(reduce_letters(cat), rank);
}

ReducedWord ReducedWord::pow(long long n) const {
  if (n == 0) return identity(rank_);
  ReducedWord base = n > 0 ? *this : inverse();
  long long k = n > 0 ? n : -n;
  // g^k = u (c^k) u^-1 computed without repeated cancellation scans.
  CyclicWord cyc = CyclicWord::of(base);
  const auto& u = cyc.conjugator().letters();
  const auto& c = cyc.axis_word().letters();
  std::vector<int> out;
  out.reserve(u.size() * 2 + c.size() * static_cast<size_t>(k));
  out.insert(out.end(), u.begin(), u.end());
  for (long long i = 0; i < k; ++i) out.insert(out.end(), c.begin(), c.end());
  for (auto it = u.rbegin(); it != u.rend(); ++it) out.push_back(-*it);
  return ReducedWord(std::move(out), rank_);
}

ReducedWord ReducedWord::prefix(int len) const {
  if (len < 0 || len > size()) throw std::invalid_argument("prefix length out of range");
  return ReducedWord(std::vector<int>(letters_.begin(), letters_.begin() + len), rank_);
}

ReducedWord ReducedWord::commutator(const ReducedWord& x, const ReducedWord& y) {
  if (x.rank() != y.rank())
    throw std::invalid_argument("commutator: rank mismatch (" + std::to_string(x.rank()) +
                                " vs " + std::to_string(y.rank()) + ")");
  return x * y * x.inverse() * y.inverse();
}

std::vector<long long> ReducedWord::abelianization() const {
  std::vector<long long> counts(static_cast<size_t>(rank_), 0);
  for (int x : letters_) {
    if (x > 0)
      ++counts[static_cast<size_t>(x - 1)];
    else
      --counts[static_cast<size_t>(-x - 1)];
  }
  return counts;
}

bool ReducedWord::in_commutator_subgroup() const {
  auto ab = abelianization();
  return std::all_of(ab.begin(), ab.end(), [](long long c) { return c == 0; });
}

std::string ReducedWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (int x : letters_)
    s.push_back(x > 0 ? static_cast<char>('a' + x - 1) : static_cast<char>('A' - x - 1));
  return s;
}

bool ReducedWord::shortlex_less(const ReducedWord& a, const ReducedWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = 0; i < a.size(); ++i) {
    int ka = letter_key(a.letters_[static_cast<size_t>(i)]);
    int kb = letter_key(b.letters_[static_cast<size_t>(i)]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

size_t ReducedWord::Hash::operator()(const ReducedWord& w) const {
  // FNV-1a over the letter stream.
  uint64_t h = 1469598103934665603ull;
  for (int x : w.letters()) {
    h ^= static_cast<uint64_t>(static_cast<uint32_t>(x));
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

CyclicWord CyclicWord::of(const ReducedWord& g) {
  const auto& w = g.letters();
  int lo = 0, hi = static_cast<int>(w.size());
  while (hi - lo >= 2 && w[static_cast<size_t>(lo)] == -w[static_cast<size_t>(hi - 1)]) {
    ++lo;
    --hi;
  }
  CyclicWord res;
  res.conjugator_ =
      ReducedWord::from_reduced(std::vector<int>(w.begin(), w.begin() + lo), g.rank());
  std::vector<int> core(w.begin() + lo, w.begin() + hi);
  res.axis_word_ = ReducedWord::from_reduced(core, g.rank());

  // Least rotation in letter_key order (naive scan; desk-scale lengths).
  int n = static_cast<int>(core.size());
  int best = 0;
  for (int s = 1; s < n; ++s) {
    for (int i = 0; i < n; ++i) {
      int ks = letter_key(core[static_cast<size_t>((s + i) % n)]);
      int kb = letter_key(core[static_cast<size_t>((best + i) % n)]);
      if (ks != kb) {
        if (ks < kb) best = s;
        break;
      }
    }
  }
  std::vector<int> rot;
  rot.reserve(core.size());
  for (int i = 0; i < n; ++i) rot.push_back(core[static_cast<size_t>((best + i) % n)]);
  res.canonical_ = ReducedWord::from_reduced(std::move(rot), g.rank());
  return res;
}

}  // namespace sclkit::words
