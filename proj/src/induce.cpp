#include "orbitkit/induce.hpp"

#include <cmath>

namespace orbitkit {

long InducedRep::index_of(long label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return -1;
  return static_cast<long>(it - labels.begin());
}

const Matrix& InducedRep::mat(const std::string& generator) const {
  for (const auto& [name, m] : generator_matrices)
    if (name == generator) return m;
  throw DomainError("no matrix for generator " + generator);
}

bool InducedRep::is_interior(long index) const {
  if (index < 0 || index >= dim()) return false;
  if (truncated_lo && index < interior_margin) return false;
  if (truncated_hi && index >= dim() - interior_margin) return false;
  return true;
}

std::vector<long> InducedRep::interior() const {
  std::vector<long> out;
  for (long i = 0; i < dim(); ++i)
    if (is_interior(i)) out.push_back(i);
  return out;
}

namespace {

double sqrt_nonneg(const Real& v, const char* what) {
  if (v.is_exact()) {
    if (v.sign() < 0)
      throw DomainError(std::string(what) + ": negative radicand (character not positive?)");
    return real_sqrt(v).value();
  }
  double d = v.value();
  if (d < -1e-9)
    throw DomainError(std::string(what) + ": negative radicand (character not positive?)");
  return d <= 0 ? 0.0 : std::sqrt(d);
}

Real kappa_val(const GradedStarAlgebra& alg, const Real& t, long l) {
  Real qm = real_q(alg) - real_q_power(alg, -1);
  return (real_q_power(alg, l) * t - real_q_power(alg, -l) / t) / qm;
}

Real ef_val(const GradedStarAlgebra& alg, const Character& chi) {
  Real qm = real_q(alg) - real_q_power(alg, -1);
  return chi.s - (real_q_power(alg, -1) * chi.t + real_q(alg) / chi.t) / (qm * qm);
}

// entry of the degree-(+1) module generator from label g to g+1: the Prop-16
// quotient chi(a_{g+1}^* X a_g) / (S(g+1) S(g))^{1/2} in closed form, with
// S(g) = chi(a_g^* a_g)
double raising_entry(const GradedStarAlgebra& alg, const Character& base, long g) {
  if (alg.id == "qosc") {
    // = sqrt(chi^g(N)) for every g
    Character fg = act(alg, base, g);
    return sqrt_nonneg(fg.t, "q-oscillator raising entry");
  }
  if (alg.id == "podles") {
    // = sqrt(t_g - t_g^2 + r) with t_g = chi^g(a)
    Character fg = act(alg, base, g);
    Real v = fg.t - fg.t * fg.t + real_r(alg);
    return sqrt_nonneg(v, "Podles raising entry");
  }
  // U_q
  Real x = ef_val(alg, base);
  Real t = base.t;
  if (g >= 0) {
    // sqrt(S(g+1)/S(g)) = sqrt(q^{2(g+1)} t (x - [g+1] kappa(g)))
    Real ratio = real_q_power(alg, 2 * (g + 1)) * t *
                 (x - real_bracket_sym(alg, g + 1) * kappa_val(alg, t, g));
    return sqrt_nonneg(ratio, "U_q raising entry");
  }
  // g <= -1: chi(a_{g+1}^* E a_g) = q^{-2(n-1)} t S(g) with n = -g, so the
  // entry is q^{-2(n-1)} t sqrt(S(g)/S(g+1))
  long n = -g;
  Real ratio = real_q_power(alg, 2 * (n - 1)) / t *
               (x + real_bracket_sym(alg, n - 1) * kappa_val(alg, t, -n));
  double root = sqrt_nonneg(ratio, "U_q raising entry");
  return (real_q_power(alg, -2 * (n - 1)) * t).value() * root;
}

InducedRep preset_base(const GradedStarAlgebra& alg, const std::string& family) {
  InducedRep rep;
  rep.algebra = alg.id;
  rep.family = family;
  rep.q = alg.q;
  rep.r = alg.r;
  return rep;
}

}  // namespace

InducedRep induce(const GradedStarAlgebra& alg, const Character& chi, long T) {
  if (T < 1) throw DomainError("truncation must be at least 1");
  if (chi.algebra != alg.id) throw DomainError("character belongs to a different algebra");
  if (stabilizer(alg, chi) == Stabilizer::all_of_Z)
    throw DomainError("character has stabilizer Z; use induce_one_dimensional with a phase");
  if (!is_positive(alg, chi, 8))
    throw DomainError("character is not in the positive spectrum");

  Orbit orb = orbit(alg, chi, T);
  InducedRep rep;
  rep.algebra = alg.id;
  rep.family = "induced";
  rep.base = chi;
  rep.q = alg.q;
  rep.r = alg.r;
  rep.truncated_lo = orb.truncated_lo;
  rep.truncated_hi = orb.truncated_hi;
  for (const auto& [g, c] : orb.points) {
    rep.labels.push_back(g);
    rep.fiber.push_back(c);
  }
  long n = rep.dim();

  auto diag_matrix = [&](auto&& value) {
    Matrix m = Matrix::Zero(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = value(rep.fiber[static_cast<size_t>(i)]);
    return m;
  };

  Matrix up = Matrix::Zero(n, n);
  for (long i = 0; i + 1 < n; ++i) {
    long g = rep.labels[static_cast<size_t>(i)];
    up(i + 1, i) = raising_entry(alg, chi, g);
  }

  if (alg.id == "qosc") {
    rep.generator_matrices.emplace_back("a", up);
    rep.generator_matrices.emplace_back("a*", up.adjoint());
  } else if (alg.id == "podles") {
    rep.generator_matrices.emplace_back(
        "a", diag_matrix([](const Character& c) { return Complex(c.t.value(), 0); }));
    rep.generator_matrices.emplace_back("b", up);
    rep.generator_matrices.emplace_back("b*", up.adjoint());
  } else {
    Matrix K = diag_matrix([](const Character& c) { return Complex(c.t.value(), 0); });
    Matrix Ki =
        diag_matrix([](const Character& c) { return Complex(1.0 / c.t.value(), 0); });
    rep.generator_matrices.emplace_back("E", up);
    rep.generator_matrices.emplace_back("K^-1", Ki);
    rep.generator_matrices.emplace_back("K", K);
    // F = E* K^-1
    rep.generator_matrices.emplace_back("F", up.adjoint() * Ki);
  }
  return rep;
}

InducedRep induce_one_dimensional(const GradedStarAlgebra& alg, const Character& chi,
                                  double phi) {
  if (stabilizer(alg, chi) != Stabilizer::all_of_Z)
    throw DomainError("induce_one_dimensional requires a character with stabilizer Z");
  if (phi < 0 || phi >= 2 * M_PI) throw DomainError("phase must lie in [0, 2 pi)");
  InducedRep rep;
  rep.algebra = alg.id;
  rep.family = "one_dim";
  rep.base = chi;
  rep.q = alg.q;
  rep.r = alg.r;
  rep.phi = phi;
  rep.labels = {0};
  rep.fiber = {chi};
  Complex phase(std::cos(phi), std::sin(phi));
  Matrix m(1, 1);
  if (alg.id == "qosc") {
    double mod = 1.0 / std::sqrt(1.0 - alg.q_d());
    m(0, 0) = phase * mod;
    rep.generator_matrices.emplace_back("a", m);
    m(0, 0) = std::conj(phase) * mod;
    rep.generator_matrices.emplace_back("a*", m);
  } else if (alg.id == "podles") {
    m(0, 0) = 0;
    rep.generator_matrices.emplace_back("a", m);
    double mod = std::sqrt(real_r(alg).value());
    m(0, 0) = phase * mod;
    rep.generator_matrices.emplace_back("b", m);
    m(0, 0) = std::conj(phase) * mod;
    rep.generator_matrices.emplace_back("b*", m);
  } else {
    throw DomainError("U_q(su(2)) has no characters with stabilizer Z");
  }
  return rep;
}

// ----------------------------------------------------------------- presets

InducedRep preset_rep(const GradedStarAlgebra& alg, PresetFamily family,
                      const PresetParams& p, long T) {
  if (T < 1) throw DomainError("truncation must be at least 1");
  switch (family) {
    case PresetFamily::fock: {
      if (alg.id != "qosc") throw DomainError("fock preset requires the q-oscillator");
      // pi_F(a) e_k = [[k]]^{1/2} e_{k-1}, pi_F(a*) e_k = [[k+1]]^{1/2} e_{k+1}
      InducedRep rep = preset_base(alg, "fock");
      rep.base = qosc_ladder_character(alg, 0);
      rep.truncated_hi = true;
      long n = T + 1;
      Matrix a = Matrix::Zero(n, n);
      for (long k = 0; k <= T; ++k) {
        rep.labels.push_back(k);
        rep.fiber.push_back(qosc_ladder_character(alg, k));
        if (k >= 1) a(k - 1, k) = sqrt_nonneg(real_bracket_geo(alg, k), "fock preset");
      }
      rep.generator_matrices.emplace_back("a", a);
      rep.generator_matrices.emplace_back("a*", a.adjoint());
      return rep;
    }
    case PresetFamily::gamma: {
      if (alg.id != "qosc" || alg.q.value() >= 1)
        throw DomainError("gamma preset requires the q-oscillator with q < 1");
      if (!(p.gamma > 0) || p.gamma > 1) throw DomainError("gamma must lie in (0, 1]");
      // pi(a) e_k = c(gamma+k) e_{k-1}, pi(a*) e_k = c(gamma+k+1) e_{k+1},
      // c(x) = ((1 + q^x)/(1 - q))^{1/2}
      InducedRep rep = preset_base(alg, "gamma");
      rep.base = qosc_gamma_character(alg, p.gamma);
      rep.truncated_lo = rep.truncated_hi = true;
      double qd = alg.q_d();
      auto c = [&](double x) { return std::sqrt((1.0 + std::pow(qd, x)) / (1.0 - qd)); };
      long n = 2 * T + 1;
      Matrix a = Matrix::Zero(n, n);
      for (long k = -T; k <= T; ++k) {
        long i = k + T;
        rep.labels.push_back(k);
        rep.fiber.push_back(qosc_gamma_character(alg, p.gamma + static_cast<double>(k)));
        if (i >= 1) a(i - 1, i) = c(p.gamma + static_cast<double>(k));
      }
      rep.generator_matrices.emplace_back("a", a);
      rep.generator_matrices.emplace_back("a*", a.adjoint());
      return rep;
    }
    case PresetFamily::one_dim: {
      if (alg.id != "qosc") throw DomainError("one_dim preset requires the q-oscillator");
      return induce_one_dimensional(alg, qosc_fixed_character(alg), p.phi);
    }
    case PresetFamily::podles_plus:
    case PresetFamily::podles_minus: {
      if (alg.id != "podles") throw DomainError("podles presets require the Podles sphere");
      int sign = family == PresetFamily::podles_plus ? +1 : -1;
      // pi(a) e_k = q^{2k} lambda e_k,
      // pi(b) e_k = (q^{2k} lambda - (q^{2k} lambda)^2 + r)^{1/2} e_{k-1}
      InducedRep rep = preset_base(alg, sign > 0 ? "podles_plus" : "podles_minus");
      rep.base = podles_character(alg, 0, sign);
      rep.truncated_hi = true;
      long n = T + 1;
      Matrix am = Matrix::Zero(n, n), b = Matrix::Zero(n, n);
      Real rv = real_r(alg);
      for (long k = 0; k <= T; ++k) {
        rep.labels.push_back(k);
        Character ck = podles_character(alg, k, sign);
        rep.fiber.push_back(ck);
        am(k, k) = ck.t.value();
        if (k >= 1) b(k - 1, k) = sqrt_nonneg(ck.t - ck.t * ck.t + rv, "podles preset");
      }
      rep.generator_matrices.emplace_back("a", am);
      rep.generator_matrices.emplace_back("b", b);
      rep.generator_matrices.emplace_back("b*", b.adjoint());
      return rep;
    }
    case PresetFamily::podles_phi: {
      if (alg.id != "podles") throw DomainError("podles_phi requires the Podles sphere");
      return induce_one_dimensional(alg, podles_inf_character(alg), p.phi);
    }
    case PresetFamily::uq: {
      if (alg.id != "uq") throw DomainError("uq preset requires U_q(su(2))");
      if (p.two_l < 0) throw DomainError("l must be a nonnegative half-integer");
      if (p.omega != 1 && p.omega != -1) throw DomainError("omega must be +-1");
      // pi(K) e_m = w q^{2m} e_m, pi(E) e_m = q^{m+1} sqrt([l-m][l+m+1]) e_{m+1},
      // pi(F) e_m = w q^{-m} sqrt([l+m][l-m+1]) e_{m-1}; labels store 2m
      InducedRep rep = preset_base(alg, "uq");
      rep.base = uq_character(alg, 0, p.two_l, p.omega);
      double qd = alg.q_d();
      double l = static_cast<double>(p.two_l) / 2.0;
      long n = p.two_l + 1;
      Matrix K = Matrix::Zero(n, n), Ki = Matrix::Zero(n, n), E = Matrix::Zero(n, n),
             F = Matrix::Zero(n, n);
      auto sym = [&](double x) { return (std::pow(qd, x) - std::pow(qd, -x)) / (qd - 1.0 / qd); };
      for (long i = 0; i < n; ++i) {
        double m = -l + static_cast<double>(i);
        rep.labels.push_back(static_cast<long>(std::lround(2 * m)));
        rep.fiber.push_back(uq_character(alg, static_cast<long>(std::lround(l + m)),
                                         static_cast<long>(std::lround(l - m)), p.omega));
        K(i, i) = p.omega * std::pow(qd, 2 * m);
        Ki(i, i) = p.omega * std::pow(qd, -2 * m);
        if (i + 1 < n)
          E(i + 1, i) = std::pow(qd, m + 1) * std::sqrt(sym(l - m) * sym(l + m + 1));
        if (i >= 1)
          F(i - 1, i) = p.omega * std::pow(qd, -m) * std::sqrt(sym(l + m) * sym(l - m + 1));
      }
      rep.generator_matrices.emplace_back("E", E);
      rep.generator_matrices.emplace_back("K^-1", Ki);
      rep.generator_matrices.emplace_back("K", K);
      rep.generator_matrices.emplace_back("F", F);
      return rep;
    }
  }
  throw DomainError("unknown preset family");
}

PresetFamily preset_family_from_name(const std::string& name) {
  if (name == "fock") return PresetFamily::fock;
  if (name == "gamma") return PresetFamily::gamma;
  if (name == "one_dim") return PresetFamily::one_dim;
  if (name == "podles_plus") return PresetFamily::podles_plus;
  if (name == "podles_minus") return PresetFamily::podles_minus;
  if (name == "podles_phi") return PresetFamily::podles_phi;
  if (name == "uq") return PresetFamily::uq;
  throw DomainError("unknown preset family '" + name + "'");
}

std::string preset_family_name(PresetFamily family) {
  switch (family) {
    case PresetFamily::fock: return "fock";
    case PresetFamily::gamma: return "gamma";
    case PresetFamily::one_dim: return "one_dim";
    case PresetFamily::podles_plus: return "podles_plus";
    case PresetFamily::podles_minus: return "podles_minus";
    case PresetFamily::podles_phi: return "podles_phi";
    case PresetFamily::uq: return "uq";
  }
  return "?";
}

Matrix matrix_of(const InducedRep& rep, const NcPolynomial& p,
                 const GradedStarAlgebra& alg) {
  long n = rep.dim();
  Matrix out = Matrix::Zero(n, n);
  for (const auto& [w, c] : p.terms()) {
    Matrix m = Matrix::Identity(n, n);
    for (int32_t g : w) m = m * rep.mat(alg.gens[static_cast<size_t>(g)].name);
    out += eval_scalar(c, alg).value() * m;
  }
  return out;
}

std::vector<Triplet> coo_triplets(const Matrix& m, double drop_tol) {
  std::vector<Triplet> out;
  for (long c = 0; c < m.cols(); ++c)
    for (long r = 0; r < m.rows(); ++r) {
      Complex v = m(r, c);
      if (std::abs(v) > drop_tol) out.push_back({r, c, v.real(), v.imag()});
    }
  return out;
}

}  // namespace orbitkit
