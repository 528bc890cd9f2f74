#include "sclkit/nt.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "sclkit/word.hpp"

namespace sclkit::nt {

namespace {

struct Token {
  std::string text;
  int col = 1;  // 1-based start column
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace((unsigned char)line[i])) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace((unsigned char)line[i]) && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), (int)start + 1});
  }
  return out;
}

long long parse_int(const Token& tok, int line) {
  size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(tok.text, &used);
  } catch (const std::exception&) {
    throw FormatError(line, tok.col, "expected integer, got '" + tok.text + "'");
  }
  if (used != tok.text.size())
    throw FormatError(line, tok.col, "expected integer, got '" + tok.text + "'");
  return value;
}

// Shared semantic checks; `lines[i]` is the source line of component i (0 for
// hand-built data).
void check_semantics(const NTDecomposition& d, const std::vector<int>& lines) {
  if (d.N < 1) throw FormatError(lines.empty() ? 0 : 1, 1, "N must be >= 1");
  std::map<std::string, size_t> by_id;
  for (size_t i = 0; i < d.components.size(); ++i) {
    const PureComponent& c = d.components[i];
    const int line = i < lines.size() ? lines[i] : 0;
    if (c.id.empty()) throw FormatError(line, 1, "component id must be nonempty");
    if (by_id.count(c.id))
      throw FormatError(line, 1, "duplicate component id '" + c.id + "'");
    by_id[c.id] = i;
    if (!c.pseudo_anosov && c.twist_power == 0)
      throw FormatError(line, 1, "twist power must be nonzero");
    if (!c.pseudo_anosov && !c.chiral)
      throw FormatError(line, 1,
                        "component '" + c.id + "': a twist power is never conjugate to its inverse");
    if (c.support_complexity < 0)
      throw FormatError(line, 1, "component '" + c.id + "': complexity must be >= 0");
    if (c.class_rep) {
      if (c.class_rep->m == 0 || c.class_rep->r == 0)
        throw FormatError(line, 1, "component '" + c.id + "': rep exponents must be nonzero");
      if (c.class_rep->rep_id == c.id && c.class_rep->m != c.class_rep->r)
        throw FormatError(line, 1,
                          "component '" + c.id + "': self-conjugacy g^m ~ g^r of a chiral element forces m = r");
    }
  }
  // Representatives that are themselves listed components must be chiral and
  // must not point at a different representative (the relation is flat).
  for (size_t i = 0; i < d.components.size(); ++i) {
    const PureComponent& c = d.components[i];
    if (!c.chiral || !c.class_rep) continue;
    auto it = by_id.find(c.class_rep->rep_id);
    if (it == by_id.end()) continue;
    const PureComponent& rep = d.components[it->second];
    const int line = i < lines.size() ? lines[i] : 0;
    if (!rep.chiral)
      throw FormatError(line, 1,
                        "component '" + c.id + "': representative '" + rep.id + "' is achiral");
    if (rep.class_rep && rep.class_rep->rep_id != rep.id)
      throw FormatError(line, 1, "component '" + c.id + "': representative '" + rep.id +
                                     "' declares a different representative");
  }
}

std::string power_str(const std::string& base, long long e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

}  // namespace

ClassRep PureComponent::effective_rep() const {
  if (class_rep) return *class_rep;
  return ClassRep{id, 1, 1};
}

NTDecomposition NTDecomposition::parse(std::istream& in) {
  NTDecomposition d;
  std::vector<int> comp_lines;
  bool saw_n = false;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::vector<Token> toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;
    auto need = [&](size_t count, const char* what) {
      if (toks.size() < count)
        throw FormatError(line, toks.back().col, std::string("truncated line: expected ") + what);
    };
    if (head == "N") {
      need(2, "N <int>");
      if (saw_n) throw FormatError(line, toks[0].col, "duplicate N line");
      saw_n = true;
      d.N = parse_int(toks[1], line);
      if (d.N < 1) throw FormatError(line, toks[1].col, "N must be >= 1");
      if (toks.size() > 2) throw FormatError(line, toks[2].col, "trailing tokens after N");
    } else if (head == "comp") {
      need(6, "comp <id> pa|twist:<n> complexity <c> chiral|achiral");
      PureComponent c;
      c.id = toks[1].text;
      const std::string& kind = toks[2].text;
      if (kind == "pa") {
        c.pseudo_anosov = true;
      } else if (kind.rfind("twist:", 0) == 0) {
        c.pseudo_anosov = false;
        Token sub{kind.substr(6), toks[2].col + 6};
        c.twist_power = parse_int(sub, line);
      } else {
        throw FormatError(line, toks[2].col, "kind must be pa or twist:<n>, got '" + kind + "'");
      }
      if (toks[3].text != "complexity")
        throw FormatError(line, toks[3].col, "expected 'complexity', got '" + toks[3].text + "'");
      c.support_complexity = (int)parse_int(toks[4], line);
      if (toks[5].text == "chiral") {
        c.chiral = true;
      } else if (toks[5].text == "achiral") {
        c.chiral = false;
      } else {
        throw FormatError(line, toks[5].col, "expected chiral or achiral, got '" + toks[5].text + "'");
      }
      if (toks.size() > 6) {
        if (toks.size() != 12 || toks[6].text != "rep" || toks[8].text != "m" ||
            toks[10].text != "r")
          throw FormatError(line, toks[6].col, "expected rep <rep_id> m <int> r <int>");
        ClassRep rep;
        rep.rep_id = toks[7].text;
        rep.m = parse_int(toks[9], line);
        rep.r = parse_int(toks[11], line);
        c.class_rep = rep;
      }
      d.components.push_back(std::move(c));
      comp_lines.push_back(line);
    } else if (head == "curve") {
      need(6, "curve <sep|nonsep> class <label> power <int>");
      CurveData cd;
      if (toks[1].text == "sep") {
        cd.separating = true;
      } else if (toks[1].text == "nonsep") {
        cd.separating = false;
      } else {
        throw FormatError(line, toks[1].col, "expected sep or nonsep, got '" + toks[1].text + "'");
      }
      if (toks[2].text != "class")
        throw FormatError(line, toks[2].col, "expected 'class', got '" + toks[2].text + "'");
      cd.homology_class = toks[3].text;
      if (toks[4].text != "power")
        throw FormatError(line, toks[4].col, "expected 'power', got '" + toks[4].text + "'");
      cd.power = parse_int(toks[5], line);
      if (toks.size() > 6) throw FormatError(line, toks[6].col, "trailing tokens after curve");
      d.curves.push_back(std::move(cd));
    } else {
      throw FormatError(line, toks[0].col, "unknown directive '" + head + "'");
    }
  }
  check_semantics(d, comp_lines);
  return d;
}

NTDecomposition NTDecomposition::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(0, 0, "cannot open '" + path + "'");
  return parse(in);
}

void NTDecomposition::validate() const { check_semantics(*this, {}); }

Partition partition_classes(const NTDecomposition& d) {
  d.validate();
  Partition out;
  std::map<std::string, size_t> class_index;
  for (const PureComponent& c : d.components) {
    if (!c.chiral) {
      out.achiral.push_back(c);
      continue;
    }
    ClassRep rep = c.effective_rep();
    auto it = class_index.find(rep.rep_id);
    if (it == class_index.end()) {
      class_index.emplace(rep.rep_id, out.classes.size());
      out.classes.push_back(ChiralClass{rep.rep_id, {}, 0, false, 1, 0});
      it = class_index.find(rep.rep_id);
    }
    ChiralClass& cls = out.classes[it->second];
    cls.members.push_back(ClassMember{c.id, rep.m, rep.r, c.support_complexity});
    cls.max_complexity = std::max(cls.max_complexity, c.support_complexity);
  }
  for (ChiralClass& cls : out.classes) {
    long long L = 1;
    for (const ClassMember& m : cls.members) L = std::lcm(L, std::abs(m.r));
    Rational sum = 0;
    long long power = 1;
    for (const ClassMember& m : cls.members) {
      long long Mi = m.m * (L / m.r);  // member^{Mi} ~ rep^L
      sum += Rational(1) / Mi;
      power = std::lcm(power, std::abs(m.m));
    }
    cls.inverse_power_sum = sum;
    cls.essential = sum != 0;
    cls.power_lcm = power;
  }
  return out;
}

SclVerdict scl_verdict(const NTDecomposition& d) {
  Partition part = partition_classes(d);
  SclVerdict verdict;
  bool found = false;
  for (const ChiralClass& cls : part.classes) {
    if (!cls.essential) continue;
    Rational n_gamma = 0;
    for (const ClassMember& m : cls.members) n_gamma += Rational(m.r) / m.m;
    n_gamma /= d.N;
    Rational mag = n_gamma < 0 ? -n_gamma : n_gamma;
    Rational best_mag = verdict.witness_n_gamma < 0 ? -verdict.witness_n_gamma : verdict.witness_n_gamma;
    bool better = !found || cls.max_complexity > verdict.witness_complexity ||
                  (cls.max_complexity == verdict.witness_complexity &&
                   (mag > best_mag ||
                    (mag == best_mag && cls.rep_id < verdict.witness_rep)));
    if (better) {
      found = true;
      verdict.witness_rep = cls.rep_id;
      verdict.witness_n_gamma = n_gamma;
      verdict.witness_complexity = cls.max_complexity;
    }
  }
  if (found) {
    verdict.kind = SclVerdict::Positive;
    return verdict;
  }
  verdict.kind = SclVerdict::Zero;
  for (const PureComponent& c : part.achiral)
    verdict.certificates.push_back({SclVerdict::Certificate::AchiralComponent, c.id, 0});
  for (const ChiralClass& cls : part.classes)
    verdict.certificates.push_back(
        {SclVerdict::Certificate::ZeroSum, cls.rep_id, cls.inverse_power_sum});
  return verdict;
}

ChiVector chi_vector(const NTDecomposition& d) {
  d.validate();
  ChiVector chi;
  for (const PureComponent& c : d.components) {
    if (!c.chiral) continue;
    ClassRep rep = c.effective_rep();
    chi[rep.rep_id] += Rational(rep.r) / rep.m;
  }
  for (auto it = chi.begin(); it != chi.end();) {
    it->second /= d.N;
    if (it->second == 0) {
      it = chi.erase(it);
    } else {
      ++it;
    }
  }
  return chi;
}

ChiVector chi_of_chain(const std::vector<std::pair<Rational, NTDecomposition>>& chain) {
  ChiVector total;
  for (const auto& [coeff, d] : chain)
    for (const auto& [rep, val] : chi_vector(d)) total[rep] += coeff * val;
  for (auto it = total.begin(); it != total.end();)
    it = it->second == 0 ? total.erase(it) : std::next(it);
  return total;
}

int qm_dimension(const std::vector<ChiVector>& vectors) {
  std::set<std::string> keys;
  for (const ChiVector& v : vectors)
    for (const auto& [rep, val] : v) keys.insert(rep);
  std::vector<std::string> cols(keys.begin(), keys.end());
  const size_t m = cols.size();
  // Clear denominators per row; rank is unchanged.
  std::vector<std::vector<BigInt>> rows;
  for (const ChiVector& v : vectors) {
    BigInt denom_lcm = 1;
    for (const auto& [rep, val] : v)
      denom_lcm = boost::multiprecision::lcm(denom_lcm, BigInt(boost::multiprecision::denominator(val)));
    std::vector<BigInt> row(m, 0);
    bool nonzero = false;
    for (size_t j = 0; j < m; ++j) {
      auto it = v.find(cols[j]);
      if (it == v.end()) continue;
      row[j] = BigInt(boost::multiprecision::numerator(it->second)) *
               (denom_lcm / BigInt(boost::multiprecision::denominator(it->second)));
      nonzero = nonzero || row[j] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  // Fraction-free (Bareiss) elimination: every division below is exact.
  int rank = 0;
  BigInt prev = 1;
  size_t row_at = 0;
  for (size_t col = 0; col < m && row_at < rows.size(); ++col) {
    size_t pivot = row_at;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[row_at], rows[pivot]);
    const BigInt piv = rows[row_at][col];
    for (size_t i = row_at + 1; i < rows.size(); ++i) {
      for (size_t j = col + 1; j < m; ++j)
        rows[i][j] = (rows[i][j] * piv - rows[i][col] * rows[row_at][j]) / prev;
      rows[i][col] = 0;
    }
    prev = piv;
    ++row_at;
    ++rank;
  }
  return rank;
}

int qm_dimension(const std::vector<NTDecomposition>& ds) {
  std::vector<ChiVector> vectors;
  vectors.reserve(ds.size());
  for (const NTDecomposition& d : ds) vectors.push_back(chi_vector(d));
  return qm_dimension(vectors);
}

CharacteristicRatio characteristic_ratio(const NTDecomposition& d1, const NTDecomposition& d2) {
  if (scl_verdict(d1).kind != SclVerdict::Positive || scl_verdict(d2).kind != SclVerdict::Positive)
    throw std::invalid_argument("characteristic_ratio: both verdicts must be Positive");
  ChiVector c1 = chi_vector(d1), c2 = chi_vector(d2);
  CharacteristicRatio out;
  for (const auto& [rep, val] : c1)
    if (!c2.count(rep)) {
      out.kind = CharacteristicRatio::Undefined;
      out.witness_a = rep;
      return out;
    }
  for (const auto& [rep, val] : c2)
    if (!c1.count(rep)) {
      out.kind = CharacteristicRatio::Undefined;
      out.witness_a = rep;
      return out;
    }
  bool have = false;
  std::string first_rep;
  for (const auto& [rep, val] : c1) {
    Rational ratio = val / c2.at(rep);
    if (!have) {
      out.value = ratio;
      first_rep = rep;
      have = true;
    } else if (ratio != out.value) {
      out.kind = CharacteristicRatio::Inconsistent;
      out.witness_a = first_rep;
      out.witness_b = rep;
      return out;
    }
  }
  out.kind = CharacteristicRatio::Ratio;
  return out;
}

WitnessBundle commutator_witness(const NTDecomposition& d) {
  SclVerdict verdict = scl_verdict(d);
  if (verdict.kind != SclVerdict::Zero)
    throw std::invalid_argument("commutator_witness: verdict is Positive, no witness exists");
  Partition part = partition_classes(d);
  WitnessBundle bundle;

  using words::ReducedWord;
  for (const PureComponent& c : part.achiral) {
    CommutatorWitness w;
    w.kind = CommutatorWitness::Achiral;
    w.id = c.id;
    w.power = 2;
    w.commutators = 1;
    w.expression = "[g, h^-1]";
    w.target = "g . (h^-1 g^-1 h)";
    w.substitution = "g = " + c.id + "; h the achirality conjugator (h^-1 g^-1 h = g), so the target is g^2";
    // Free identity in F(g, h): [g, h^-1] = g h^-1 g^-1 h.
    ReducedWord g = ReducedWord::parse("a", 2), h = ReducedWord::parse("b", 2);
    ReducedWord target = g * h.inverse() * g.inverse() * h;
    ReducedWord expr = ReducedWord::commutator(g, h.inverse());
    w.verified = expr == target;
    bundle.witnesses.push_back(std::move(w));
    bundle.B += 1;
    bundle.N = std::lcm(bundle.N, 2LL);
  }

  for (const ChiralClass& cls : part.classes) {
    const int p = (int)cls.members.size();
    if (p < 2)
      throw std::logic_error("commutator_witness: inessential class with fewer than 2 members");
    if (p + 1 > 26)
      throw std::invalid_argument("commutator_witness: class too large for abstract letters");
    // Exponents after raising to lcm|m_i|: member_i contributes rep^{e_i}
    // with e_i = r_i * (L / m_i); inessentiality says they sum to zero.
    const long long L = cls.power_lcm;
    std::vector<long long> e;
    long long total = 0;
    for (const ClassMember& m : cls.members) {
      e.push_back(m.r * (L / m.m));
      total += e.back();
    }
    if (total != 0) throw std::logic_error("commutator_witness: exponents of a zero-sum class do not cancel");

    // Letters: 1 = h (the representative), 2..p = gamma_2..gamma_p (the
    // conjugators moving member 1's conjugate to member i's).
    const int rank = p;
    ReducedWord h = ReducedWord::from_reduced({1}, rank);
    auto gamma = [&](int i) { return ReducedWord::from_reduced({i}, rank); };

    ReducedWord target = ReducedWord::identity(rank);
    ReducedWord k = ReducedWord::identity(rank);  // k_i = gamma_i ... gamma_2
    std::vector<ReducedWord> ks{k};
    for (int i = 1; i <= p; ++i) {
      if (i >= 2) {
        k = gamma(i) * k;
        ks.push_back(k);
      }
      target = target * ks[(size_t)(i - 1)] * h.pow(e[(size_t)(i - 1)]) * ks[(size_t)(i - 1)].inverse();
    }

    ReducedWord expr = ReducedWord::identity(rank);
    std::string expr_str;
    long long s = 0;
    for (int j = 1; j <= p - 1; ++j) {
      s += e[(size_t)(j - 1)];
      ReducedWord hj = ks[(size_t)(j - 1)] * h * ks[(size_t)(j - 1)].inverse();
      expr = expr * ReducedWord::commutator(hj.pow(s), gamma(j + 1));
      expr_str += "[" + power_str("h_" + std::to_string(j), s) + ", gamma_" + std::to_string(j + 1) + "]";
    }

    CommutatorWitness w;
    w.kind = CommutatorWitness::InessentialClass;
    w.id = cls.rep_id;
    w.power = L;
    w.commutators = p - 1;
    w.expression = expr_str;
    {
      std::string t;
      for (int i = 1; i <= p; ++i) {
        if (i > 1) t += " . ";
        t += "k_" + std::to_string(i) + " " + power_str("h", e[(size_t)(i - 1)]) + " k_" +
             std::to_string(i) + "^-1";
      }
      w.target = t;
    }
    w.substitution =
        "h = " + cls.rep_id + "; k_i = gamma_i ... gamma_2 (k_1 = 1); h_j = k_j h k_j^-1";
    w.verified = expr == target;
    bundle.witnesses.push_back(std::move(w));
    bundle.B += p - 1;
    bundle.N = std::lcm(bundle.N, L);
  }
  return bundle;
}

bool multitwist_verdict(const std::vector<CurveData>& curves) {
  std::map<std::string, long long> sums;
  for (const CurveData& c : curves) {
    if (c.separating) return true;
    sums[c.homology_class] += c.power;
  }
  for (const auto& [cls, sum] : sums)
    if (sum != 0) return true;
  return false;
}

bool exponential_growth_verdict(const NTDecomposition& d, bool level_subgroup_mode) {
  if (!level_subgroup_mode)
    throw std::invalid_argument("exponential_growth_verdict: enable level_subgroup_mode or call scl_verdict");
  d.validate();
  if (d.components.empty()) return false;
  bool any_pa = false;
  for (const PureComponent& c : d.components) any_pa = any_pa || c.pseudo_anosov;
  if (any_pa) {
    // Level-subgroup context: every pA component is chiral and its own class.
    NTDecomposition forced = d;
    for (PureComponent& c : forced.components) {
      c.chiral = true;
      c.class_rep.reset();
    }
    return scl_verdict(forced).kind == SclVerdict::Positive;
  }
  if (!d.curves.empty()) return multitwist_verdict(d.curves);
  return scl_verdict(d).kind == SclVerdict::Positive;
}

}  // namespace sclkit::nt
