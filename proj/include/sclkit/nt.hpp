#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sclkit/format_error.hpp"
#include "sclkit/rational.hpp"

namespace sclkit::nt {

// Conjugacy declaration: component^m is conjugate to rep^r.
struct ClassRep {
  std::string rep_id;
  long long m = 1;
  long long r = 1;
};

struct PureComponent {
  std::string id;
  bool pseudo_anosov = true;   // false: power of a Dehn twist
  long long twist_power = 0;   // nonzero iff !pseudo_anosov
  int support_complexity = 0;  // annuli are the smallest supports
  bool chiral = true;          // conjugate to its own inverse when false
  std::optional<ClassRep> class_rep;

  // Chiral components with no declared rep represent themselves with (1,1).
  ClassRep effective_rep() const;
};

struct CurveData {
  bool separating = false;
  std::string homology_class;
  long long power = 0;
};

// Symbolic decomposition: commuting pure components supported on disjoint
// pieces, already raised to the arotational power N. `curves` carries the
// optional multitwist description used by multitwist_verdict.
struct NTDecomposition {
  long long N = 1;
  std::vector<PureComponent> components;
  std::vector<CurveData> curves;

  // Line format: `N <int>`, `comp <id> pa|twist:<n> complexity <c>
  // chiral|achiral [rep <rep_id> m <int> r <int>]`, `curve <sep|nonsep>
  // class <label> power <int>`. '#' comments. Throws FormatError.
  static NTDecomposition parse(std::istream& in);
  static NTDecomposition parse_file(const std::string& path);

  // Semantic validation (duplicate ids, achiral twists, zero exponents,
  // self-rep exponent mismatch, rep flatness). Throws FormatError with
  // line 0 when invoked on hand-built data.
  void validate() const;
};

struct ClassMember {
  std::string component_id;
  long long m = 1;
  long long r = 1;
  int support_complexity = 0;
};

// Equivalence class of chiral components sharing a representative. The
// essentiality sum normalizes mixed r exponents: with L = lcm|r_i| and
// M_i = m_i * L / r_i (so member^{M_i} ~ rep^L), the class is essential iff
// sum of 1/M_i is nonzero; this equals (1/L) * sum r_i/m_i, so it agrees
// with the plain sum 1/m_i whenever all r_i = 1.
struct ChiralClass {
  std::string rep_id;
  std::vector<ClassMember> members;
  Rational inverse_power_sum = 0;
  bool essential = false;
  long long power_lcm = 1;  // lcm |m_i|: members' class part lives in rep powers of g^{power_lcm}
  int max_complexity = 0;
};

struct Partition {
  std::vector<ChiralClass> classes;          // ordered by first appearance
  std::vector<PureComponent> achiral;
};
Partition partition_classes(const NTDecomposition& d);

struct SclVerdict {
  enum Kind { Positive, Zero } kind = Zero;
  // Positive: witness class, chosen by max complexity, then max |n_gamma|,
  // then least rep id.
  std::string witness_rep;
  Rational witness_n_gamma = 0;
  int witness_complexity = 0;
  // Zero: one certificate per achiral component and per (inessential) class.
  struct Certificate {
    enum Reason { AchiralComponent, ZeroSum } reason = ZeroSum;
    std::string id;
    Rational sum = 0;
  };
  std::vector<Certificate> certificates;
};
SclVerdict scl_verdict(const NTDecomposition& d);

// Sparse chi vector: rep -> n_gamma = (1/N) sum r_i/m_i, nonzero entries
// only; achiral components contribute nothing. Computed straight from the
// component list, independently of partition_classes.
using ChiVector = std::map<std::string, Rational>;
ChiVector chi_vector(const NTDecomposition& d);
ChiVector chi_of_chain(const std::vector<std::pair<Rational, NTDecomposition>>& chain);

// Rank over the rationals of the given chi vectors, by fraction-free
// (Bareiss) elimination over big integers.
int qm_dimension(const std::vector<ChiVector>& vectors);
int qm_dimension(const std::vector<NTDecomposition>& ds);

struct CharacteristicRatio {
  enum Kind { Ratio, Undefined, Inconsistent } kind = Undefined;
  Rational value = 0;        // Ratio: the common n_gamma(d1)/n_gamma(d2)
  std::string witness_a;     // Undefined: a one-sided class; Inconsistent: first class
  std::string witness_b;     // Inconsistent: second class with a different ratio
};
// Requires Positive verdicts on both inputs.
CharacteristicRatio characteristic_ratio(const NTDecomposition& d1, const NTDecomposition& d2);

// Commutator witness, machine-verified as a free-group identity in abstract
// letters. For an achiral component the identity is target = g h^-1 g^-1 h
// with expression [g, h^-1]; the substitution note records that
// h^-1 g^-1 h = g turns the target into g^2. For an inessential class of
// size p the identity is the telescoping product of p-1 commutators.
struct CommutatorWitness {
  enum Case { Achiral, InessentialClass } kind = Achiral;
  std::string id;           // component id or rep id
  long long power = 2;      // the power of the (class part of) g witnessed
  int commutators = 1;
  std::string expression;   // product of commutators in the abstract letters
  std::string target;       // target expansion in the same letters
  std::string substitution; // meaning of the abstract letters
  bool verified = false;    // expression == target after free reduction
};
struct WitnessBundle {
  std::vector<CommutatorWitness> witnesses;
  long long N = 1;  // lcm of the witnessed powers
  long long B = 0;  // total number of commutators
};
// Requires a Zero verdict; throws std::invalid_argument otherwise.
WitnessBundle commutator_witness(const NTDecomposition& d);

// True iff some curve separates or some homology class has nonzero power sum.
bool multitwist_verdict(const std::vector<CurveData>& curves);

// Level-subgroup mode: every pseudo-Anosov component is chiral and its own
// class, so any pA forces Positive; pure multitwists fall through to
// multitwist_verdict when curve data is present. Throws when mode is off.
bool exponential_growth_verdict(const NTDecomposition& d, bool level_subgroup_mode);

}  // namespace sclkit::nt
