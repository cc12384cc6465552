#pragma once

#include <Eigen/Dense>
#include <complex>

#include "orbitkit/pds.hpp"

namespace orbitkit {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// An induced *-representation materialized as one matrix per generator over
/// a (possibly truncated) window of orbit labels. Matrices of degree-n
/// homogeneous elements are banded: label g maps into label g + n.
struct InducedRep {
  std::string algebra;
  std::string family;  // "induced", "fock", "gamma", "one_dim", "podles_plus", ...
  Character base;
  std::vector<long> labels;  // ascending
  bool truncated_lo = false;
  bool truncated_hi = false;
  int interior_margin = 4;
  std::vector<std::pair<std::string, Matrix>> generator_matrices;
  std::vector<Character> fiber;  // chi^g per label: the discretized spectral data
  ParamValue q, r;
  double phi = 0.0;

  long dim() const { return static_cast<long>(labels.size()); }
  long index_of(long label) const;  // -1 when outside the window
  const Matrix& mat(const std::string& generator) const;
  /// Indices at interior_margin distance from every truncated window end.
  std::vector<long> interior() const;
  bool is_interior(long index) const;
};

/// Explicit induced representation of a positive character with trivial
/// stabilizer, built from the orthonormal-basis matrix-element formula with
/// a_g the module generators; all character evaluations use the closed-form
/// products. Infinite orbits are truncated to |g| <= T.
InducedRep induce(const GradedStarAlgebra& alg, const Character& chi, long T);

/// The one-dimensional representations over a fixed point (stabilizer Z).
InducedRep induce_one_dimensional(const GradedStarAlgebra& alg, const Character& chi,
                                  double phi);

enum class PresetFamily { fock, gamma, one_dim, podles_plus, podles_minus, podles_phi, uq };

struct PresetParams {
  double gamma = 1.0;
  double phi = 0.0;
  int omega = +1;
  long two_l = 0;  // l in (1/2) N_0, stored as 2l
};

/// The five preset families built directly from the displayed closed forms,
/// independent of induce(); the golden oracle for the induction tests.
InducedRep preset_rep(const GradedStarAlgebra& alg, PresetFamily family,
                      const PresetParams& params, long T);

PresetFamily preset_family_from_name(const std::string& name);
std::string preset_family_name(PresetFamily family);

/// Evaluate a polynomial in the representation: words map to products of
/// generator matrices, coefficients to their numeric values.
Matrix matrix_of(const InducedRep& rep, const NcPolynomial& p, const GradedStarAlgebra& alg);

struct Triplet {
  long row, col;
  double re, im;
};
std::vector<Triplet> coo_triplets(const Matrix& m, double drop_tol = 0.0);

}  // namespace orbitkit
