#include "orbitkit/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace orbitkit {

Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' '; }), s.end());
  if (s.empty()) throw DomainError("empty rational literal");
  auto ok = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string numer = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string denom = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  if (!ok(numer) || !ok(denom) || denom == "0" || denom == "-0")
    throw DomainError("bad rational literal: " + text);
  Rational x(numer + "/" + denom);
  x.canonicalize();
  return x;
}

std::string rational_str(const Rational& x) { return x.get_str(); }

double to_double(const Rational& x) { return x.get_d(); }

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(long c) {
  if (c != 0) c_.assign(1, Rational(c));
}
QPoly::QPoly(const Rational& c) {
  if (c != 0) c_.assign(1, c);
}
QPoly QPoly::variable() { return monomial(1, 1); }
QPoly QPoly::monomial(const Rational& c, unsigned k) {
  QPoly p;
  if (c != 0) {
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = c;
  }
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational QPoly::coeff(unsigned k) const {
  return k < c_.size() ? c_[k] : Rational(0);
}

const Rational& QPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly out;
  out.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) out.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) out.c_[i] += o.c_[i];
  out.trim();
  return out;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly out;
  if (is_zero() || o.is_zero()) return out;
  out.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
  out.trim();
  return out;
}

QPoly QPoly::divmod(const QPoly& divisor, QPoly* quotient) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  QPoly rem = *this, quo;
  quo.c_.assign(c_.size(), Rational(0));
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    unsigned shift = static_cast<unsigned>(rem.degree() - divisor.degree());
    Rational f = rem.leading() / divisor.leading();
    quo.c_[shift] += f;
    rem = rem - divisor * monomial(f, shift);
  }
  quo.trim();
  if (quotient) *quotient = quo;
  return rem;
}

QPoly QPoly::div_exact(const QPoly& divisor) const {
  QPoly quo;
  QPoly rem = divmod(divisor, &quo);
  if (!rem.is_zero()) throw DomainError("inexact polynomial division");
  return quo;
}

namespace {
// scale to an integer-primitive representative; keeps Euclid from blowing up
void make_primitive(std::vector<Rational>& c) {
  if (c.empty()) return;
  mpz_class g(0), l(1);
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  }
  if (g == 0) return;
  Rational scale(l, g);
  scale.canonicalize();
  for (auto& x : c) x *= scale;
}
}  // namespace

QPoly QPoly::gcd(QPoly a, QPoly b) {
  if (a.is_zero()) std::swap(a, b);
  if (a.is_zero()) return a;  // both zero
  if (!b.is_zero() && (a.degree() == 0 || b.degree() == 0)) return QPoly(1);
  if (!b.is_zero()) {
    make_primitive(a.c_);
    make_primitive(b.c_);
    while (!b.is_zero()) {
      QPoly r = a.divmod(b, nullptr);
      make_primitive(r.c_);
      a = b;
      b = r;
    }
  }
  Rational lead = a.leading();
  for (auto& c : a.c_) c /= lead;
  return a;
}

Rational QPoly::eval(const Rational& q) const {
  Rational v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * q + *it;
  return v;
}

double QPoly::eval(double q) const {
  double v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * q + it->get_d();
  return v;
}

std::string QPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeff(static_cast<unsigned>(k));
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (k == 0 || a != 1) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

// --------------------------------------------------------------- QRPoly

QRPoly::QRPoly(const QPoly& p) {
  if (!p.is_zero()) t_[0] = p;
}

QRPoly QRPoly::variable_r() {
  QRPoly p;
  p.t_[1] = QPoly(1);
  return p;
}

void QRPoly::trim() {
  for (auto it = t_.begin(); it != t_.end();)
    it = it->second.is_zero() ? t_.erase(it) : std::next(it);
}

int QRPoly::degree_r() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first); }

QPoly QRPoly::q_part() const {
  if (is_zero()) return QPoly();
  if (!r_free()) throw DomainError("polynomial depends on r");
  return t_.begin()->second;
}

QPoly QRPoly::content_q() const {
  QPoly g;
  for (const auto& [e, c] : t_) g = QPoly::gcd(g, c);
  return g;
}

QRPoly QRPoly::operator+(const QRPoly& o) const {
  QRPoly out = *this;
  for (const auto& [e, c] : o.t_) {
    auto it = out.t_.find(e);
    if (it == out.t_.end()) out.t_[e] = c;
    else it->second = it->second + c;
  }
  out.trim();
  return out;
}

QRPoly QRPoly::operator-() const {
  QRPoly out = *this;
  for (auto& [e, c] : out.t_) c = -c;
  return out;
}

QRPoly QRPoly::operator-(const QRPoly& o) const { return *this + (-o); }

QRPoly QRPoly::operator*(const QRPoly& o) const {
  QRPoly out;
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) {
      auto it = out.t_.find(e1 + e2);
      if (it == out.t_.end()) out.t_[e1 + e2] = c1 * c2;
      else it->second = it->second + c1 * c2;
    }
  out.trim();
  return out;
}

QRPoly QRPoly::div_exact(const QPoly& divisor) const {
  QRPoly out;
  for (const auto& [e, c] : t_) out.t_[e] = c.div_exact(divisor);
  return out;
}

QRPoly QRPoly::scale(const Rational& c) const {
  QRPoly out;
  if (c == 0) return out;
  for (const auto& [e, p] : t_) out.t_[e] = p * QPoly(c);
  return out;
}

Rational QRPoly::eval(const Rational& q, const Rational& r) const {
  Rational v(0), rp(1);
  unsigned last = 0;
  for (const auto& [e, c] : t_) {
    for (; last < e; ++last) rp *= r;
    v += c.eval(q) * rp;
  }
  return v;
}

double QRPoly::eval(double q, double r) const {
  double v = 0;
  for (const auto& [e, c] : t_) v += c.eval(q) * std::pow(r, e);
  return v;
}

std::string QRPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    if (it->first == 0) {
      os << it->second.str();
    } else {
      os << "(" << it->second.str() << ")*r";
      if (it->first > 1) os << "^" << it->first;
    }
    first = false;
  }
  return os.str();
}

// --------------------------------------------------------------- Scalar

Scalar::Scalar(QRPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  reduce();
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    // q^k denominators are the common case: cancel the shared q-power cheaply
    bool monomial = true;
    for (int k = 0; k < den_.degree(); ++k)
      if (den_.coeff(static_cast<unsigned>(k)) != 0) {
        monomial = false;
        break;
      }
    if (monomial) {
      int trail = den_.degree();
      for (const auto& [e, c] : num_.terms()) {
        int t = 0;
        while (t <= c.degree() && c.coeff(static_cast<unsigned>(t)) == 0) ++t;
        trail = std::min(trail, t);
        if (trail == 0) break;
      }
      if (trail > 0) {
        QPoly qt = QPoly::monomial(1, static_cast<unsigned>(trail));
        num_ = num_.div_exact(qt);
        den_ = den_.div_exact(qt);
      }
    } else {
      QPoly g = QPoly::gcd(num_.content_q(), den_);
      if (g.degree() > 0) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
      }
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    den_ = den_ * QPoly(Rational(1) / lead);
    num_ = num_.scale(Rational(1) / lead);
  }
}

Scalar Scalar::q() { return Scalar(QRPoly(QPoly::variable()), QPoly(1)); }
Scalar Scalar::r() { return Scalar(QRPoly::variable_r(), QPoly(1)); }

Scalar Scalar::q_power(long k) {
  if (k >= 0) return Scalar(QRPoly(QPoly::monomial(1, static_cast<unsigned>(k))), QPoly(1));
  return Scalar(QRPoly(QPoly(1)), QPoly::monomial(1, static_cast<unsigned>(-k)));
}

Scalar Scalar::bracket_geo(long k) {
  if (k == 0) return Scalar(0);
  if (k > 0) {
    QPoly p;
    for (long j = 0; j < k; ++j) p = p + QPoly::monomial(1, static_cast<unsigned>(j));
    return Scalar(QRPoly(p), QPoly(1));
  }
  // [[-m]] = -[[m]] / q^m
  long m = -k;
  QPoly p;
  for (long j = 0; j < m; ++j) p = p + QPoly::monomial(-1, static_cast<unsigned>(j));
  return Scalar(QRPoly(p), QPoly::monomial(1, static_cast<unsigned>(m)));
}

Scalar Scalar::bracket_sym(long n) {
  if (n == 0) return Scalar(0);
  long m = std::abs(n);
  // [m] = (q^{2m} - 1)/(q^{m-1}(q^2 - 1)) = sum_{i=0}^{m-1} q^{2i} / q^{m-1}
  QPoly p;
  for (long i = 0; i < m; ++i) p = p + QPoly::monomial(1, static_cast<unsigned>(2 * i));
  Scalar s(QRPoly(p), QPoly::monomial(1, static_cast<unsigned>(m - 1)));
  return n > 0 ? s : -s;
}

bool Scalar::is_one() const {
  return den_.degree() == 0 && !den_.is_zero() && num_ == QRPoly(QPoly(1));
}

Scalar Scalar::operator+(const Scalar& o) const {
  return Scalar(num_ * QRPoly(o.den_) + o.num_ * QRPoly(den_), den_ * o.den_);
}
Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }
Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = -out.num_;
  return out;
}
Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw DomainError("scalar division by zero");
  if (!o.num_.r_free())
    throw DomainError("division by a scalar with r-dependent numerator is unsupported");
  QPoly n2 = o.num_.q_part();
  // keep the denominator sign convention stable; reduce() re-normalizes
  return Scalar(num_ * QRPoly(o.den_), den_ * n2);
}

Scalar Scalar::pow(long k) const {
  if (k < 0) return Scalar(1) / pow(-k);
  Scalar out(1), base = *this;
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

Rational Scalar::eval_exact(const Rational& q, const Rational& r) const {
  Rational d = den_.eval(q);
  if (d == 0) throw DomainError("scalar denominator vanishes at q=" + rational_str(q));
  return num_.eval(q, r) / d;
}

double Scalar::eval(double q, double r) const {
  return num_.eval(q, r) / den_.eval(q);
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string n = num_.str();
  if (den_.degree() == 0) return n;
  return "(" + n + ")/(" + den_.str() + ")";
}

std::pair<std::string, std::string> Scalar::integer_pair_str() const {
  mpz_class lcm_all(1);
  auto fold = [&lcm_all](const Rational& c) {
    mpz_class d = c.get_den(), g;
    mpz_gcd(g.get_mpz_t(), lcm_all.get_mpz_t(), d.get_mpz_t());
    lcm_all = lcm_all / g * d;
  };
  for (int k = 0; k <= den_.degree(); ++k) fold(den_.coeff(static_cast<unsigned>(k)));
  for (const auto& [e, c] : num_.terms())
    for (int k = 0; k <= c.degree(); ++k) fold(c.coeff(static_cast<unsigned>(k)));
  Rational s(lcm_all);
  return {num_.scale(s).str(), (den_ * QPoly(s)).str()};
}

}  // namespace orbitkit
