#pragma once

#include "orbitkit/spectrum.hpp"

namespace orbitkit {

struct OutOfDomain : DomainError {
  using DomainError::DomainError;
};

enum class Stabilizer { trivial, all_of_Z };

/// chi in D_{-n}, i.e. chi(a_n^* a_n) != 0, i.e. act(chi, n) is defined.
/// Exact index arithmetic for labeled characters, numeric (tol 1e-12)
/// fallback for probes.
bool domain_contains(const GradedStarAlgebra& alg, const Character& chi, long n,
                     double tol = 1e-12);

/// alpha_n(chi) in closed form; throws OutOfDomain outside D_{-n}.
Character act(const GradedStarAlgebra& alg, const Character& chi, long n);

Stabilizer stabilizer(const GradedStarAlgebra& alg, const Character& chi);

/// Orbit of chi: points (g, chi^g) for the contiguous label interval where
/// the action is defined, truncated at |g| <= max_radius.
struct Orbit {
  Character base;
  std::vector<std::pair<long, Character>> points;  // ascending in g
  Stabilizer stab = Stabilizer::trivial;
  bool truncated_lo = false;
  bool truncated_hi = false;

  long min_label() const { return points.front().first; }
  long max_label() const { return points.back().first; }
};

Orbit orbit(const GradedStarAlgebra& alg, const Character& chi, long max_radius);

}  // namespace orbitkit
