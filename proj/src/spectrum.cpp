#include "orbitkit/spectrum.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace orbitkit {

// ------------------------------------------------------------------- Real

Real Real::operator+(const Real& o) const {
  if (exact_ && o.exact_) return Real(Rational(x_ + o.x_));
  return approx(value() + o.value());
}
Real Real::operator-(const Real& o) const { return *this + (-o); }
Real Real::operator-() const {
  if (exact_) return Real(Rational(-x_));
  return approx(-d_);
}
Real Real::operator*(const Real& o) const {
  if (exact_ && o.exact_) return Real(Rational(x_ * o.x_));
  return approx(value() * o.value());
}
Real Real::operator/(const Real& o) const {
  if (exact_ && o.exact_) {
    if (o.x_ == 0) throw DomainError("division by zero");
    return Real(Rational(x_ / o.x_));
  }
  return approx(value() / o.value());
}
Real Real::pow(long k) const {
  if (k < 0) return Real(1) / pow(-k);
  Real out(1), base = *this;
  while (k > 0) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}
bool Real::operator==(const Real& o) const {
  if (exact_ && o.exact_) return x_ == o.x_;
  return value() == o.value();
}
int Real::sign() const {
  if (exact_) return x_ < 0 ? -1 : (x_ > 0 ? 1 : 0);
  return d_ < 0 ? -1 : (d_ > 0 ? 1 : 0);
}
bool Real::is_zero(double tol) const {
  if (exact_) return x_ == 0;
  return std::abs(d_) <= tol;
}
bool Real::geq_zero(double tol) const {
  if (exact_) return x_ >= 0;
  return d_ >= -tol;
}

Real real_sqrt(const Real& v) {
  if (v.sign() < 0) throw DomainError("square root of a negative value");
  if (v.is_exact()) {
    const Rational& x = v.exact();
    mpz_class num = x.get_num(), den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
      mpz_class sn, sd;
      mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
      return Real(Rational(sn, sd));
    }
  }
  return Real::approx(std::sqrt(v.value()));
}

Real eval_scalar(const Scalar& s, const GradedStarAlgebra& alg) {
  if (!alg.q.is_numeric())
    throw DomainError("operation requires numeric algebra parameters");
  if (alg.exact_params() && (alg.id != "podles" || alg.r.is_numeric()))
    return Real(s.eval_exact(alg.q.x, alg.r.x));
  return Real::approx(s.eval(alg.q_d(), alg.r_d()));
}

Real real_q(const GradedStarAlgebra& alg) {
  if (!alg.q.is_numeric()) throw DomainError("operation requires a numeric q");
  return alg.q.is_exact() ? Real(alg.q.x) : Real::approx(alg.q.d);
}

Real real_q_power(const GradedStarAlgebra& alg, long k) { return real_q(alg).pow(k); }

Real real_bracket_geo(const GradedStarAlgebra& alg, long k) {
  Real q = real_q(alg);
  if ((q - Real(1)).is_zero()) return Real(k);
  return (q.pow(k) - Real(1)) / (q - Real(1));
}

Real real_bracket_sym(const GradedStarAlgebra& alg, long n) {
  if (n == 0) return Real(0);
  Real q = real_q(alg);
  if ((q - Real(1)).is_zero()) return Real(n);
  return (q.pow(n) - q.pow(-n)) / (q - q.pow(-1));
}

Real real_r(const GradedStarAlgebra& alg) {
  if (!alg.r.is_numeric()) throw DomainError("operation requires a numeric r");
  return alg.r.is_exact() ? Real(alg.r.x) : Real::approx(alg.r.d);
}

namespace {

void require_algebra(const GradedStarAlgebra& alg, const std::string& id) {
  if (alg.id != id) throw DomainError("operation requires the " + id + " preset");
}

// chi([K; l]) = (q^l t - q^-l t^-1)/(q - q^-1)
Real kappa(const GradedStarAlgebra& alg, const Real& t, long l) {
  Real qm = real_q(alg) - real_q_power(alg, -1);
  return (real_q_power(alg, l) * t - real_q_power(alg, -l) / t) / qm;
}

// chi(EF) = s - (q^-1 t + q t^-1)/(q - q^-1)^2
Real ef_value(const GradedStarAlgebra& alg, const Character& chi) {
  Real qm = real_q(alg) - real_q_power(alg, -1);
  return chi.s - (real_q_power(alg, -1) * chi.t + real_q(alg) / chi.t) / (qm * qm);
}

}  // namespace

std::string Character::str() const {
  std::ostringstream os;
  switch (label.kind) {
    case CharacterLabel::Kind::qosc_ladder:
      os << "chi_[[" << label.m << "]]";
      break;
    case CharacterLabel::Kind::qosc_fixed:
      os << "chi_{1/(1-q)}";
      break;
    case CharacterLabel::Kind::qosc_gamma:
      os << "chi_gamma(" << label.gamma << ")";
      break;
    case CharacterLabel::Kind::podles_disc:
      os << "chi_{" << label.m << "," << (label.sign > 0 ? "+" : "-") << "}";
      break;
    case CharacterLabel::Kind::podles_inf:
      os << "chi_infinity";
      break;
    case CharacterLabel::Kind::uq:
      os << "chi_{" << label.m << "," << label.n << "," << (label.sign > 0 ? "+" : "-") << "}";
      break;
    case CharacterLabel::Kind::none:
      os << "chi_probe";
      break;
  }
  os << " (t=" << t.value();
  if (algebra == "uq") os << ", s=" << s.value();
  os << ")";
  return os.str();
}

// ----------------------------------------------------------- constructors

Character qosc_ladder_character(const GradedStarAlgebra& alg, long k) {
  require_algebra(alg, "qosc");
  if (k < 0) throw DomainError("ladder index must be nonnegative");
  Character chi;
  chi.algebra = alg.id;
  chi.label = {CharacterLabel::Kind::qosc_ladder, k, 0, 1, 0};
  chi.t = real_bracket_geo(alg, k);
  return chi;
}

Character qosc_fixed_character(const GradedStarAlgebra& alg) {
  require_algebra(alg, "qosc");
  if (alg.q.value() >= 1) throw DomainError("the fixed point 1/(1-q) requires q < 1");
  Character chi;
  chi.algebra = alg.id;
  chi.label = {CharacterLabel::Kind::qosc_fixed, 0, 0, 1, 0};
  chi.t = Real(1) / (Real(1) - real_q(alg));
  return chi;
}

Character qosc_gamma_character(const GradedStarAlgebra& alg, double gamma) {
  require_algebra(alg, "qosc");
  if (alg.q.value() >= 1) throw DomainError("the gamma family requires q < 1");
  Character chi;
  chi.algebra = alg.id;
  chi.label = {CharacterLabel::Kind::qosc_gamma, 0, 0, 1, gamma};
  double qd = alg.q_d();
  chi.t = Real::approx((1.0 + std::pow(qd, gamma)) / (1.0 - qd));
  return chi;
}

Character qosc_character(const GradedStarAlgebra& alg, Real t) {
  require_algebra(alg, "qosc");
  Character chi;
  chi.algebra = alg.id;
  chi.t = t;
  return chi;
}

Real podles_lambda(const GradedStarAlgebra& alg, int sign) {
  require_algebra(alg, "podles");
  Real root = real_sqrt(real_r(alg) + Real(Rational(1, 4)));
  Real half = Real(Rational(1, 2));
  return sign > 0 ? half + root : half - root;
}

Character podles_character(const GradedStarAlgebra& alg, long m, int sign) {
  require_algebra(alg, "podles");
  if (m < 0) throw DomainError("Podles index must be nonnegative");
  Character chi;
  chi.algebra = alg.id;
  chi.label = {CharacterLabel::Kind::podles_disc, m, 0, sign, 0};
  chi.t = real_q_power(alg, 2 * m) * podles_lambda(alg, sign);
  return chi;
}

Character podles_inf_character(const GradedStarAlgebra& alg) {
  require_algebra(alg, "podles");
  Character chi;
  chi.algebra = alg.id;
  chi.label = {CharacterLabel::Kind::podles_inf, 0, 0, 1, 0};
  chi.t = Real(0);
  return chi;
}

Character podles_probe(const GradedStarAlgebra& alg, Real t) {
  require_algebra(alg, "podles");
  Character chi;
  chi.algebra = alg.id;
  chi.t = t;
  return chi;
}

Character uq_character(const GradedStarAlgebra& alg, long m, long n, int sign) {
  require_algebra(alg, "uq");
  if (m < 0 || n < 0) throw DomainError("U_q indices must be nonnegative");
  Character chi;
  chi.algebra = alg.id;
  chi.label = {CharacterLabel::Kind::uq, m, n, sign, 0};
  Real sgn(sign > 0 ? 1 : -1);
  chi.t = sgn * real_q_power(alg, m - n);
  Real qm = real_q(alg) - real_q_power(alg, -1);
  chi.s = sgn * (real_q_power(alg, m + n + 1) + real_q_power(alg, -m - n - 1)) / (qm * qm);
  return chi;
}

Character uq_probe(const GradedStarAlgebra& alg, Real s, Real t) {
  require_algebra(alg, "uq");
  if (t.is_zero()) throw DomainError("U_q characters require t != 0");
  Character chi;
  chi.algebra = alg.id;
  chi.s = s;
  chi.t = t;
  return chi;
}

// -------------------------------------------------------- module_norm_sq

Real module_norm_sq(const GradedStarAlgebra& alg, const Character& chi, long g) {
  if (g == 0) return Real(1);
  long n = std::labs(g);
  if (alg.id == "qosc") {
    Real prod(1);
    if (g > 0) {
      // chi(a*^n a^n) = prod_{j=0}^{n-1} (q^-j t + [[-j]])
      for (long j = 0; j < n; ++j)
        prod = prod * (real_q_power(alg, -j) * chi.t + real_bracket_geo(alg, -j));
    } else {
      // chi(a^n a*^n) = prod_{j=1}^{n} (q^j t + [[j]])
      for (long j = 1; j <= n; ++j)
        prod = prod * (real_q_power(alg, j) * chi.t + real_bracket_geo(alg, j));
    }
    return prod;
  }
  if (alg.id == "podles") {
    Real prod(1);
    Real t2 = chi.t * chi.t;
    if (g > 0) {
      for (long j = 1; j <= n; ++j)
        prod = prod *
               (real_q_power(alg, -2 * (j - 1)) * chi.t - real_q_power(alg, -4 * (j - 1)) * t2 + real_r(alg));
    } else {
      for (long j = 1; j <= n; ++j)
        prod = prod * (real_q_power(alg, 2 * j) * chi.t - real_q_power(alg, 4 * j) * t2 + real_r(alg));
    }
    return prod;
  }
  require_algebra(alg, "uq");
  Real x = ef_value(alg, chi);
  Real prod(1);
  if (g > 0) {
    // chi(E^{*n} E^n) = q^{n(n+1)} t^n prod_{j=1}^n (x - [j] kappa(j-1))
    for (long j = 1; j <= n; ++j)
      prod = prod * (x - real_bracket_sym(alg, j) * kappa(alg, chi.t, j - 1));
    return real_q_power(alg, n * (n + 1)) * chi.t.pow(n) * prod;
  }
  // chi(F^{*n} F^n) = q^{n(n-1)} t^-n prod_{j=1}^n (x + [j-1] kappa(-j))
  for (long j = 1; j <= n; ++j)
    prod = prod * (x + real_bracket_sym(alg, j - 1) * kappa(alg, chi.t, -j));
  return real_q_power(alg, n * (n - 1)) * chi.t.pow(-n) * prod;
}

// --------------------------------------------------------------- evaluate

Real evaluate(const GradedStarAlgebra& alg, const Character& chi, const NcPolynomial& b) {
  Real out(0);
  for (const auto& [w, c] : b.terms()) {
    if (word_degree(w, alg) != 0)
      throw DomainError("evaluate requires a degree-0 element");
    Real wv(1);
    if (alg.id == "qosc") {
      // normal B-words are a*^i a^i
      long i = 0;
      size_t p = 0;
      while (p < w.size() && alg.gens[static_cast<size_t>(w[p])].name == "a*") ++p, ++i;
      if (2 * static_cast<size_t>(i) != w.size())
        throw DomainError("evaluate requires normal form (word " + to_string(w, alg) + ")");
      for (long j = 0; j < i; ++j)
        wv = wv * (real_q_power(alg, -j) * chi.t + real_bracket_geo(alg, -j));
    } else if (alg.id == "podles") {
      // normal B-words are a^l
      for (int32_t g : w)
        if (alg.gens[static_cast<size_t>(g)].name != "a")
          throw DomainError("evaluate requires normal form (word " + to_string(w, alg) + ")");
      wv = chi.t.pow(static_cast<long>(w.size()));
    } else {
      // normal B-words are E^i K^j F^i with value q^{-2ij} H_i(x, t) t^j
      long i = 0, kexp = 0, f = 0;
      size_t p = 0;
      auto name = [&](size_t idx) {
        return alg.gens[static_cast<size_t>(w[idx])].name;
      };
      while (p < w.size() && name(p) == "E") ++p, ++i;
      while (p < w.size() && (name(p) == "K" || name(p) == "K^-1"))
        kexp += (name(p) == "K") ? 1 : -1, ++p;
      while (p < w.size() && name(p) == "F") ++p, ++f;
      if (p != w.size() || i != f)
        throw DomainError("evaluate requires normal form (word " + to_string(w, alg) + ")");
      Real x = ef_value(alg, chi);
      for (long j = 1; j <= i; ++j)
        wv = wv * (x + real_bracket_sym(alg, j - 1) * kappa(alg, chi.t, -j));
      wv = wv * real_q_power(alg, -2 * i * kexp) * chi.t.pow(kexp);
    }
    out = out + wv * eval_scalar(c, alg);
  }
  return out;
}

// ------------------------------------------------------------- positivity

PositivityScan is_positive_detail(const GradedStarAlgebra& alg, const Character& chi,
                                  int depth, double tol) {
  PositivityScan scan{true, std::numeric_limits<double>::infinity(), 0};
  // depth counts products in the paper's indexing prod_{j=0}^{depth}, which
  // reaches the module generators a_g with |g| = depth + 1
  for (long g = -(depth + 1L); g <= depth + 1L; ++g) {
    if (g == 0) continue;
    Real v = module_norm_sq(alg, chi, g);
    double vd = v.value();
    if (vd < scan.min_value) {
      scan.min_value = vd;
      scan.witness_depth = std::labs(g);
    }
    // scaled tolerance: |g| factors can grow like |largest factor|^{|g|}
    double scale = 1.0 + std::pow(std::max(1.0, std::abs(chi.t.value()) + 2.0),
                                  static_cast<double>(std::labs(g)));
    if (!v.geq_zero(tol * scale)) scan.positive = false;
  }
  return scan;
}

bool is_positive(const GradedStarAlgebra& alg, const Character& chi, int depth, double tol) {
  return is_positive_detail(alg, chi, depth, tol).positive;
}

// ---------------------------------------------------- spectrum description

SpectrumDescription positive_spectrum(const GradedStarAlgebra& alg) {
  if (!alg.q.is_numeric())
    throw DomainError("positive_spectrum requires numeric parameters");
  SpectrumDescription d;
  d.algebra = alg.id;
  d.q = alg.q;
  d.r = alg.r;
  if (alg.id == "qosc") {
    d.discrete_families = {"t = [[k]]_q, k >= 0"};
    if (alg.q.value() < 1) {
      d.has_ray = true;
      d.ray_start = 1.0 / (1.0 - alg.q.value());
      d.continuous_components = {"[1/(1-q), infinity)"};
    }
  } else if (alg.id == "podles") {
    d.discrete_families = {"t = q^{2m} lambda_+, m >= 0", "t = q^{2m} lambda_-, m >= 0",
                           "t = 0"};
  } else {
    d.discrete_families = {
        "(s,t) = (+(q^{m+n+1}+q^{-m-n-1})/(q-q^{-1})^2, +q^{m-n}), m,n >= 0",
        "(s,t) = (-(q^{m+n+1}+q^{-m-n-1})/(q-q^{-1})^2, -q^{m-n}), m,n >= 0"};
  }
  return d;
}

namespace {

bool match_qosc_ladder(const GradedStarAlgebra& alg, const Real& t, double tol) {
  double qd = alg.q_d();
  double limit = qd < 1 ? 1.0 / (1.0 - qd) : std::numeric_limits<double>::infinity();
  for (long k = 0; k <= 4096; ++k) {
    Real lk = real_bracket_geo(alg, k);
    if ((t - lk).is_zero(tol)) return true;
    if (qd >= 1 && lk.value() > t.value() + 1) return false;
    if (qd < 1 && lk.value() > limit - 1e-15) return false;
  }
  return false;
}

}  // namespace

bool SpectrumDescription::contains(const Character& chi, double tol) const {
  GradedStarAlgebra alg = make_algebra(algebra, q, r);
  if (algebra == "qosc") {
    if (has_ray && chi.t.value() >= ray_start - tol) return true;
    return match_qosc_ladder(alg, chi.t, tol);
  }
  if (algebra == "podles") {
    if (chi.t.is_zero(tol)) return true;
    for (int sign : {+1, -1}) {
      Real lambda = podles_lambda(alg, sign);
      for (long m = 0; m <= 4096; ++m) {
        Real pt = real_q_power(alg, 2 * m) * lambda;
        if ((chi.t - pt).is_zero(tol)) return true;
        if (std::abs(pt.value()) < std::abs(chi.t.value()) - tol) break;
      }
    }
    return false;
  }
  // uq: t = +-q^{m-n}, s = +-(q^{m+n+1}+q^{-m-n-1})/(q-q^{-1})^2, same sign
  int sign = chi.t.sign();
  if (sign == 0 || chi.s.sign() != sign) return false;
  Real at = sign > 0 ? chi.t : -chi.t;
  bool found = false;
  long dfound = 0;
  for (long dd = -2048; dd <= 2048 && !found; ++dd)
    if ((at - real_q_power(alg, dd)).is_zero(tol)) {
      dfound = dd;
      found = true;
    }
  if (!found) return false;
  Real qm = real_q(alg) - real_q_power(alg, -1);
  Real target = (sign > 0 ? chi.s : -chi.s) * (qm * qm);
  for (long sigma = std::labs(dfound); sigma <= std::labs(dfound) + 4096; sigma += 2) {
    Real h = real_q_power(alg, sigma + 1) + real_q_power(alg, -sigma - 1);
    if ((target - h).is_zero(tol)) return true;
    if (h.value() > target.value() + tol) return false;
  }
  return false;
}

std::vector<Character> SpectrumDescription::enumerate(long max_index) const {
  GradedStarAlgebra alg = make_algebra(algebra, q, r);
  std::vector<Character> out;
  if (algebra == "qosc") {
    for (long k = 0; k <= max_index; ++k) out.push_back(qosc_ladder_character(alg, k));
    if (has_ray) {
      out.push_back(qosc_fixed_character(alg));
      for (double gamma : {0.25, 0.5, 0.75, 1.0})
        out.push_back(qosc_gamma_character(alg, gamma));
      out.push_back(qosc_character(alg, Real::approx(ray_start * 3.0)));
    }
  } else if (algebra == "podles") {
    for (int sign : {+1, -1})
      for (long m = 0; m <= max_index; ++m) out.push_back(podles_character(alg, m, sign));
    out.push_back(podles_inf_character(alg));
  } else {
    for (int sign : {+1, -1})
      for (long m = 0; m <= max_index; ++m)
        for (long n = 0; n <= max_index; ++n) out.push_back(uq_character(alg, m, n, sign));
  }
  return out;
}

// ----------------------------------------------------------------- section

Section section(const GradedStarAlgebra& alg, long uq_max_n,
                const std::vector<double>& gamma_samples) {
  if (!alg.q.is_numeric()) throw DomainError("section requires numeric parameters");
  Section s;
  if (alg.id == "qosc") {
    s.points.push_back(qosc_ladder_character(alg, 0));
    if (alg.q.value() < 1) {
      s.points.push_back(qosc_fixed_character(alg));
      s.has_gamma_family = true;
      s.gamma_description = "t = (1 + q^gamma)/(1 - q), gamma in (0, 1]";
      s.gamma_samples = gamma_samples;
      for (double g : gamma_samples) {
        if (!(g > 0) || g > 1) throw DomainError("gamma samples must lie in (0,1]");
        s.points.push_back(qosc_gamma_character(alg, g));
      }
      s.has_phase_family = true;
      s.phase_description =
          "one-dimensional family over t = 1/(1-q): pi_phi(a) = e^{i phi} (1-q)^{-1/2}, "
          "phi in [0, 2 pi)";
    }
  } else if (alg.id == "podles") {
    s.points.push_back(podles_character(alg, 0, +1));
    s.points.push_back(podles_character(alg, 0, -1));
    s.points.push_back(podles_inf_character(alg));
    s.has_phase_family = true;
    s.phase_description =
        "one-dimensional family over t = 0: pi_phi(b) = e^{i phi} r^{1/2}, phi in [0, 2 pi)";
  } else {
    for (long n = 0; n <= uq_max_n; ++n) {
      s.points.push_back(uq_character(alg, 0, n, +1));
      s.points.push_back(uq_character(alg, 0, n, -1));
    }
  }
  return s;
}

}  // namespace orbitkit
