#pragma once

#include <optional>

#include "orbitkit/ncpoly.hpp"

namespace orbitkit {

/// Numeric parameter: kept symbolic, exact rational, or double.
struct ParamValue {
  enum class Kind { symbolic, exact, approx };
  Kind kind = Kind::symbolic;
  Rational x = 0;
  double d = 0.0;

  static ParamValue sym() { return {}; }
  static ParamValue from_rational(const Rational& v) {
    return {Kind::exact, v, to_double(v)};
  }
  static ParamValue from_double(double v) { return {Kind::approx, 0, v}; }

  bool is_numeric() const { return kind != Kind::symbolic; }
  bool is_exact() const { return kind == Kind::exact; }
  double value() const { return kind == Kind::exact ? to_double(x) : d; }
};

/// A rewrite rule l -> r with l a two-letter word; every preset system is
/// terminating and confluent (checked by check_confluence).
struct RewriteRule {
  int32_t a, b;  // lhs word (a, b)
  NcPolynomial rhs;
};

/// One of the three preset Z-graded *-algebras, with its rewrite system,
/// the commutative degree-0 generators and the module generators a_n.
class GradedStarAlgebra {
 public:
  std::string id;    // "qosc" | "podles" | "uq"
  std::string title; // human-readable
  std::vector<GeneratorSymbol> gens;
  // star image of each generator as a word; single-letter except E* = FK,
  // F* = K^-1 E, where star-squared is the identity only modulo normal_form
  std::vector<Word> star_words;
  std::vector<RewriteRule> rules;
  // named degree-0 polynomials accepted by the parser (N, C_q)
  std::vector<std::pair<std::string, NcPolynomial>> aliases;
  // generators of B = A_0 as a commutative algebra
  std::vector<std::pair<std::string, NcPolynomial>> b_generators;
  // defining relations as (lhs, rhs) pairs, used by the verification suites
  std::vector<std::pair<std::string, std::pair<NcPolynomial, NcPolynomial>>> relations;
  ParamValue q, r;

  int find(const std::string& name) const;
  const RewriteRule* rule_for(int32_t a, int32_t b) const;
  /// a_n with A_n = a_n B  (a^n / a*^n, b^n / b*^n, E^n / F^n).
  NcPolynomial module_generator(long n) const;
  Word module_generator_word(long n) const;

  // parameter plumbing for Scalar evaluation
  double q_d() const { return q.value(); }
  double r_d() const { return r.value(); }
  bool exact_params() const;

 private:
  mutable std::map<std::pair<int32_t, int32_t>, size_t> rule_index_;
  void build_rule_index() const;
};

GradedStarAlgebra make_q_oscillator(ParamValue q);
GradedStarAlgebra make_podles(ParamValue q, ParamValue r);
GradedStarAlgebra make_uq_su2(ParamValue q);
GradedStarAlgebra make_algebra(const std::string& id, ParamValue q, ParamValue r);

enum class ProductKind { raising_then_lowering, lowering_then_raising, commutator };

/// The paper's closed-form product identities, expanded in the normal-form
/// word basis WITHOUT the rewriting engine (direct products of degree-0
/// factors plus a triangular change of basis). Independent oracle for
/// normal_form.
NcPolynomial closed_form_product(const GradedStarAlgebra& alg, ProductKind kind, long k);

/// Quantum Casimir element C_q = EF + (q^{-1}K + qK^{-1})/(q - q^{-1})^2.
NcPolynomial casimir(const GradedStarAlgebra& alg);

/// [K;l] = (q^l K - q^{-l} K^{-1})/(q - q^{-1}) as an NcPolynomial (U_q only).
NcPolynomial bracket_K(const GradedStarAlgebra& alg, long l);

/// Normalizes all critical overlaps (words of length 3 built from pairs of
/// rules) both ways and compares; true iff every pair agrees.
bool check_confluence(const GradedStarAlgebra& alg, std::string* detail = nullptr);

}  // namespace orbitkit
