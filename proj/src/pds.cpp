#include "orbitkit/pds.hpp"

#include <cmath>

namespace orbitkit {

bool domain_contains(const GradedStarAlgebra& alg, const Character& chi, long n,
                     double tol) {
  if (n == 0) return true;
  using K = CharacterLabel::Kind;
  switch (chi.label.kind) {
    case K::qosc_ladder:
      return n <= chi.label.m;  // chi_[[k]] in D_{-n} iff n <= k
    case K::qosc_fixed:
    case K::qosc_gamma:
    case K::podles_inf:
      return true;
    case K::podles_disc:
      return n <= chi.label.m;
    case K::uq:
      return -chi.label.m <= n && n <= chi.label.n;
    case K::none:
      return !module_norm_sq(alg, chi, n).is_zero(tol);
  }
  return false;
}

Character act(const GradedStarAlgebra& alg, const Character& chi, long n) {
  if (!domain_contains(alg, chi, n))
    throw OutOfDomain("character " + chi.str() + " is outside D_{" + std::to_string(-n) + "}");
  if (n == 0) return chi;
  Character out = chi;
  using K = CharacterLabel::Kind;
  switch (chi.label.kind) {
    case K::qosc_ladder:
      out.label.m = chi.label.m - n;
      out.t = real_bracket_geo(alg, out.label.m);
      break;
    case K::qosc_fixed:
      break;  // fixed point
    case K::qosc_gamma:
      out.label.gamma = chi.label.gamma - static_cast<double>(n);
      out.t = Real::approx((1.0 + std::pow(alg.q_d(), out.label.gamma)) / (1.0 - alg.q_d()));
      break;
    case K::podles_disc:
      out.label.m = chi.label.m - n;
      out.t = real_q_power(alg, 2 * out.label.m) * podles_lambda(alg, chi.label.sign);
      break;
    case K::podles_inf:
      break;  // fixed point
    case K::uq:
      out.label.m = chi.label.m + n;
      out.label.n = chi.label.n - n;
      out.t = real_q_power(alg, 2 * n) * chi.t;
      break;
    case K::none: {
      // closed-form one-step maps iterated numerically
      if (alg.id == "qosc") {
        // t -> F^{-n}(t) = q^{-n} t + [[-n]]
        out.t = real_q_power(alg, -n) * chi.t + real_bracket_geo(alg, -n);
      } else if (alg.id == "podles") {
        out.t = real_q_power(alg, -2 * n) * chi.t;
      } else {
        out.t = real_q_power(alg, 2 * n) * chi.t;  // s unchanged
      }
      break;
    }
  }
  return out;
}

Stabilizer stabilizer(const GradedStarAlgebra& alg, const Character& chi) {
  using K = CharacterLabel::Kind;
  if (chi.label.kind == K::qosc_fixed || chi.label.kind == K::podles_inf)
    return Stabilizer::all_of_Z;
  if (chi.label.kind == K::none) {
    // act(chi,1) defined and equal to chi?
    if (!domain_contains(alg, chi, 1)) return Stabilizer::trivial;
    Character moved = act(alg, chi, 1);
    Real diff = moved.t - chi.t;
    bool same = diff.is_zero(1e-12);
    if (alg.id == "uq") same = same && (moved.s - chi.s).is_zero(1e-12);
    return same ? Stabilizer::all_of_Z : Stabilizer::trivial;
  }
  return Stabilizer::trivial;
}

Orbit orbit(const GradedStarAlgebra& alg, const Character& chi, long max_radius) {
  if (max_radius < 0) throw DomainError("orbit radius must be nonnegative");
  Orbit o;
  o.base = chi;
  o.stab = stabilizer(alg, chi);
  if (o.stab == Stabilizer::all_of_Z) {
    // every alpha_g fixes chi; the orbit is the single point
    o.points.emplace_back(0, chi);
    return o;
  }
  long lo = 0, hi = 0;
  while (hi < max_radius && domain_contains(alg, chi, hi + 1)) ++hi;
  while (lo > -max_radius && domain_contains(alg, chi, lo - 1)) --lo;
  o.truncated_hi = (hi == max_radius) && domain_contains(alg, chi, hi + 1);
  o.truncated_lo = (lo == -max_radius) && domain_contains(alg, chi, lo - 1);
  for (long g = lo; g <= hi; ++g) o.points.emplace_back(g, act(alg, chi, g));
  return o;
}

}  // namespace orbitkit
