#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbitkit {

using Rational = mpq_class;

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "3", "-7", "1/2", "-22/7". Throws DomainError on anything else.
Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& x);
double to_double(const Rational& x);

/// Dense univariate polynomial over Q in the deformation parameter q.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);                       // NOLINT(google-explicit-constructor)
  QPoly(const Rational& c);            // NOLINT(google-explicit-constructor)
  static QPoly variable();             // q
  static QPoly monomial(const Rational& c, unsigned k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c_.empty(); }
  Rational coeff(unsigned k) const;
  const Rational& leading() const;

  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator-() const;
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  // Euclidean division; remainder returned, quotient via out-param.
  QPoly divmod(const QPoly& divisor, QPoly* quotient) const;
  // Exact division; throws DomainError if the remainder is nonzero.
  QPoly div_exact(const QPoly& divisor) const;
  static QPoly gcd(QPoly a, QPoly b);  // monic

  Rational eval(const Rational& q) const;
  double eval(double q) const;
  std::string str(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<Rational> c_;  // c_[k] * q^k
};

/// Polynomial in r with QPoly coefficients (sparse in the r-exponent).
class QRPoly {
 public:
  QRPoly() = default;
  QRPoly(const QPoly& p);              // NOLINT(google-explicit-constructor)
  static QRPoly variable_r();

  bool is_zero() const { return t_.empty(); }
  int degree_r() const;
  bool r_free() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
  const std::map<unsigned, QPoly>& terms() const { return t_; }
  QPoly q_part() const;                // requires r_free()
  QPoly content_q() const;             // gcd of all q-coefficients

  QRPoly operator+(const QRPoly& o) const;
  QRPoly operator-(const QRPoly& o) const;
  QRPoly operator*(const QRPoly& o) const;
  QRPoly operator-() const;
  bool operator==(const QRPoly& o) const { return t_ == o.t_; }

  QRPoly div_exact(const QPoly& divisor) const;
  QRPoly scale(const Rational& c) const;

  Rational eval(const Rational& q, const Rational& r) const;
  double eval(double q, double r) const;
  std::string str() const;

 private:
  void trim();
  std::map<unsigned, QPoly> t_;  // r-exponent -> coefficient in q
};

/// Rational function num(q,r)/den(q) with exact rational coefficients.
/// Canonical form: den monic, gcd(content_q(num), den) = 1; zero is 0/1.
/// Equality is decidable by direct comparison of canonical forms.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long c) : num_(QPoly(c)), den_(1) {}      // NOLINT
  Scalar(const Rational& c) : num_(QPoly(c)), den_(1) {}  // NOLINT
  Scalar(QRPoly num, QPoly den);

  static Scalar q();
  static Scalar r();
  static Scalar q_power(long k);       // q^k, k in Z
  /// [[k]]_q = (q^k - 1)/(q - 1) for k in Z  (1 + q + ... + q^{k-1} for k >= 0).
  static Scalar bracket_geo(long k);
  /// [n]_q = (q^n - q^{-n})/(q - q^{-1}) for n in Z.
  static Scalar bracket_sym(long n);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  const QRPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Division; the divisor's numerator must be r-free (true for every
  /// structure constant of the preset algebras), else DomainError.
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar pow(long k) const;

  /// Exact evaluation; throws DomainError when the denominator vanishes.
  Rational eval_exact(const Rational& q, const Rational& r = 0) const;
  double eval(double q, double r = 0) const;

  std::string str() const;
  /// (num, den) as integer-coefficient polynomial strings (common scaling).
  std::pair<std::string, std::string> integer_pair_str() const;

 private:
  void reduce();
  QRPoly num_;
  QPoly den_;
};

}  // namespace orbitkit
