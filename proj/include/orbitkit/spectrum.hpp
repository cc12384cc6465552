#pragma once

#include <functional>

#include "orbitkit/algebra.hpp"

namespace orbitkit {

/// Real number that stays exact (rational) as long as every input is exact,
/// and degrades to double otherwise. Square roots always go to double unless
/// the radicand is a perfect rational square.
class Real {
 public:
  Real() : exact_(true), x_(0), d_(0) {}
  Real(long v) : exact_(true), x_(v), d_(static_cast<double>(v)) {}  // NOLINT
  Real(const Rational& v) : exact_(true), x_(v), d_(to_double(v)) {}  // NOLINT
  static Real approx(double v) {
    Real r;
    r.exact_ = false;
    r.d_ = v;
    return r;
  }

  bool is_exact() const { return exact_; }
  double value() const { return exact_ ? to_double(x_) : d_; }
  const Rational& exact() const {
    if (!exact_) throw DomainError("value is not exact");
    return x_;
  }

  Real operator+(const Real& o) const;
  Real operator-(const Real& o) const;
  Real operator*(const Real& o) const;
  Real operator/(const Real& o) const;
  Real operator-() const;
  Real pow(long k) const;
  bool operator==(const Real& o) const;

  int sign() const;                      // exact sign when exact, else sign of double
  bool is_zero(double tol = 0.0) const;  // |x| <= tol for the float path, == 0 exact
  bool geq_zero(double tol = 0.0) const;

 private:
  bool exact_;
  Rational x_;
  double d_;
};

Real real_sqrt(const Real& v);  // exact for perfect rational squares
/// Evaluate a Scalar at the algebra's parameters (exact when they are exact).
Real eval_scalar(const Scalar& s, const GradedStarAlgebra& alg);

// q-number helpers at the algebra's parameters
Real real_q(const GradedStarAlgebra& alg);
Real real_q_power(const GradedStarAlgebra& alg, long k);
Real real_bracket_geo(const GradedStarAlgebra& alg, long k);   // [[k]]_q
Real real_bracket_sym(const GradedStarAlgebra& alg, long n);   // [n]_q
Real real_r(const GradedStarAlgebra& alg);

/// Symbolic label of a character, used for exact index arithmetic under the
/// partial action; `none` marks unlabeled numeric probes.
struct CharacterLabel {
  enum class Kind { none, qosc_ladder, qosc_fixed, qosc_gamma, podles_disc, podles_inf, uq };
  Kind kind = Kind::none;
  long m = 0;        // qosc ladder index / podles index / uq m
  long n = 0;        // uq n
  int sign = 1;      // podles / uq sign
  double gamma = 0;  // qosc gamma family parameter

  bool operator==(const CharacterLabel&) const = default;
};

/// Real-valued multiplicative functional on B, given by its values on the
/// b-generators (q-osc: N -> t; Podles: a -> t; U_q: C_q -> s, K -> t,
/// K^-1 derived as 1/t).
struct Character {
  std::string algebra;
  CharacterLabel label;
  Real t;  // N / a / K value
  Real s;  // C_q value (U_q only)

  std::string str() const;
};

// ------------------------------------------------------------ constructors
Character qosc_ladder_character(const GradedStarAlgebra& alg, long k);
Character qosc_fixed_character(const GradedStarAlgebra& alg);           // t = 1/(1-q)
Character qosc_gamma_character(const GradedStarAlgebra& alg, double gamma);
Character qosc_character(const GradedStarAlgebra& alg, Real t);         // unlabeled probe
Character podles_character(const GradedStarAlgebra& alg, long m, int sign);
Character podles_inf_character(const GradedStarAlgebra& alg);           // t = 0
Character podles_probe(const GradedStarAlgebra& alg, Real t);
Character uq_character(const GradedStarAlgebra& alg, long m, long n, int sign);
Character uq_probe(const GradedStarAlgebra& alg, Real s, Real t);

/// lambda_{+-} = 1/2 +- sqrt(r + 1/4)
Real podles_lambda(const GradedStarAlgebra& alg, int sign);

/// chi(a_g^* a_g) for the module generator a_g; the workhorse shared by
/// positivity scans, domain predicates and the induced-matrix formula.
Real module_norm_sq(const GradedStarAlgebra& alg, const Character& chi, long g);

/// Multiplicative extension of chi to a degree-0 polynomial in normal form.
Real evaluate(const GradedStarAlgebra& alg, const Character& chi, const NcPolynomial& b);

struct PositivityScan {
  bool positive;
  double min_value;    // smallest product value encountered
  long witness_depth;  // |g| at which the minimum occurred
};
PositivityScan is_positive_detail(const GradedStarAlgebra& alg, const Character& chi,
                                  int depth, double tol = 1e-9);
/// Lemma-1.1 truncation: chi(a_g^* a_g) >= 0 for all 1 <= |g| <= depth.
bool is_positive(const GradedStarAlgebra& alg, const Character& chi, int depth,
                 double tol = 1e-9);

/// Closed-form description of the positive spectrum: discrete families plus
/// (for the q-oscillator with q < 1) a continuous ray.
struct SpectrumDescription {
  std::string algebra;
  ParamValue q, r;
  std::vector<std::string> discrete_families;
  std::vector<std::string> continuous_components;
  bool has_ray = false;
  double ray_start = 0;  // [ray_start, infinity)

  bool contains(const Character& chi, double tol = 1e-9) const;
  std::vector<Character> enumerate(long max_index) const;
};
SpectrumDescription positive_spectrum(const GradedStarAlgebra& alg);

/// A set meeting every orbit exactly once; the gamma family is reported as a
/// descriptor plus sample points.
struct Section {
  std::vector<Character> points;
  bool has_gamma_family = false;
  std::string gamma_description;
  std::vector<double> gamma_samples;
  bool has_phase_family = false;  // one-dimensional phi circle over a fixed point
  std::string phase_description;
};
Section section(const GradedStarAlgebra& alg, long uq_max_n = 12,
                const std::vector<double>& gamma_samples = {0.25, 0.5, 0.75, 1.0});

}  // namespace orbitkit
