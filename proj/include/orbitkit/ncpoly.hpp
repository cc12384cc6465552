#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orbitkit/scalar.hpp"

namespace orbitkit {

class GradedStarAlgebra;

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  size_t position;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One generator of a graded *-algebra.
struct GeneratorSymbol {
  std::string name;
  int degree = 0;
  int star = -1;     // index of the star partner (possibly self)
  int inverse = -1;  // index of the multiplicative inverse, if any (K <-> K^-1)
};

/// A word in the generators; empty word is the unit.
using Word = std::vector<int32_t>;

/// Finite linear combination of generator words with Scalar coefficients.
/// Canonical: no zero coefficients, words stored in a deterministic order.
class NcPolynomial {
 public:
  NcPolynomial() = default;
  explicit NcPolynomial(Scalar c);  // c * unit word
  static NcPolynomial unit() { return NcPolynomial(Scalar(1)); }
  static NcPolynomial single(Word w, Scalar c = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Word, Scalar>& terms() const { return terms_; }

  void add_term(const Word& w, const Scalar& c);

  NcPolynomial operator+(const NcPolynomial& o) const;
  NcPolynomial operator-(const NcPolynomial& o) const;
  NcPolynomial operator*(const NcPolynomial& o) const;  // concatenation product
  NcPolynomial operator*(const Scalar& c) const;
  NcPolynomial operator-() const;
  bool operator==(const NcPolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const NcPolynomial& o) const { return !(*this == o); }

  NcPolynomial pow(unsigned k) const;

 private:
  std::map<Word, Scalar> terms_;
};

int word_degree(const Word& w, const GradedStarAlgebra& alg);

/// Parses the expression grammar (see README): generator names, postfix `*`
/// for the involution, `^` integer powers, `+ - * /` and juxtaposition,
/// scalars `q`, `r`, integers, fractions, `[[k]]` and `[n]` q-numbers.
NcPolynomial parse(const std::string& text, const GradedStarAlgebra& alg);

NcPolynomial multiply(const NcPolynomial& p, const NcPolynomial& s);
NcPolynomial star(const NcPolynomial& p, const GradedStarAlgebra& alg);
/// Unique irreducible form under the preset rewrite system. Throws
/// BudgetExceeded after `budget` rule applications.
NcPolynomial normal_form(const NcPolynomial& p, const GradedStarAlgebra& alg,
                         long budget = 1000000);
NcPolynomial degree_component(const NcPolynomial& p, int n, const GradedStarAlgebra& alg);
NcPolynomial bimodule_project(const NcPolynomial& p, const GradedStarAlgebra& alg);

bool is_normal_form(const NcPolynomial& p, const GradedStarAlgebra& alg);

std::string to_string(const Word& w, const GradedStarAlgebra& alg);
std::string to_string(const NcPolynomial& p, const GradedStarAlgebra& alg);

}  // namespace orbitkit
