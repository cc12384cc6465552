#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitkit/induce.hpp"

using namespace orbitkit;

namespace {
GradedStarAlgebra qosc(const Rational& q) {
  return make_q_oscillator(ParamValue::from_rational(q));
}
GradedStarAlgebra podles(const Rational& q, const Rational& r) {
  return make_podles(ParamValue::from_rational(q), ParamValue::from_rational(r));
}
GradedStarAlgebra uq(const Rational& q) {
  return make_uq_su2(ParamValue::from_rational(q));
}

// largest entrywise difference between two reps over the same window, with an
// optional index reversal (paper convention e_k = e_{-k})
double aligned_diff(const InducedRep& ind, const InducedRep& pre, bool reverse) {
  REQUIRE(ind.dim() == pre.dim());
  long n = ind.dim();
  auto map = [&](long i) { return reverse ? n - 1 - i : i; };
  double worst = 0;
  for (const auto& [name, mi] : ind.generator_matrices) {
    const Matrix& mp = pre.mat(name);
    for (long r = 0; r < n; ++r)
      for (long c = 0; c < n; ++c)
        worst = std::max(worst, std::abs(mi(r, c) - mp(map(r), map(c))));
  }
  return worst;
}
}  // namespace

TEST_CASE("induce: Fock ladder entries") {
  auto A = qosc(2);
  InducedRep rep = induce(A, qosc_ladder_character(A, 0), 8);
  CHECK(rep.labels.front() == -8);
  CHECK(rep.labels.back() == 0);
  CHECK(rep.truncated_lo);
  CHECK(!rep.truncated_hi);
  // entry from label -n to -n+1 is [[n]]^{1/2}; n = 3 -> sqrt 7
  const Matrix& a = rep.mat("a");
  long col = rep.index_of(-3);
  CHECK(std::abs(a(col + 1, col)) == doctest::Approx(std::sqrt(7.0)).epsilon(1e-12));
  CHECK(std::abs(a(col + 1, col) - 2.645751) < 1e-6);
  // a* is the adjoint
  Matrix diff = rep.mat("a*") - Matrix(a.adjoint());
  CHECK(diff.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("induce: Podles band entry") {
  auto P = podles(Rational(1, 2), 2);
  InducedRep rep = induce(P, podles_character(P, 0, +1), 8);
  // entry at k=1: (q^2 l - q^4 l^2 + r)^{1/2} = (0.5 - 0.25 + 2)^{1/2} = 1.5
  const Matrix& b = rep.mat("b");
  long col = rep.index_of(-1);
  CHECK(std::abs(b(col + 1, col)) == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("induce: U_q small representation") {
  auto U = uq(2);
  InducedRep rep = induce(U, uq_character(U, 0, 1, +1), 8);
  REQUIRE(rep.dim() == 2);
  CHECK(!rep.truncated_lo);
  CHECK(!rep.truncated_hi);
  const Matrix& K = rep.mat("K");
  CHECK(K(0, 0).real() == doctest::Approx(0.5));
  CHECK(K(1, 1).real() == doctest::Approx(2.0));
  const Matrix& E = rep.mat("E");
  CHECK(std::abs(E(1, 0)) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(E(1, 0) - 1.414214) < 1e-6);
  CHECK(std::abs(E(0, 1)) == 0.0);
}

TEST_CASE("induce: preconditions") {
  auto A = qosc(Rational(1, 2));
  CHECK_THROWS_AS(induce(A, qosc_fixed_character(A), 8), DomainError);
  CHECK_THROWS_AS(induce(A, qosc_ladder_character(A, 0), 0), DomainError);
  CHECK_THROWS_AS(induce(A, qosc_character(A, Real(Rational(6, 5))), 8), DomainError);  // not positive
}

TEST_CASE("induce_one_dimensional") {
  auto A = qosc(Rational(3, 4));
  InducedRep rep = induce_one_dimensional(A, qosc_fixed_character(A), 0.0);
  REQUIRE(rep.dim() == 1);
  // (1-q)^{-1/2} = 2; aa* = 1 + q a*a: 4 = 1 + 3
  CHECK(rep.mat("a")(0, 0).real() == doctest::Approx(2.0));
  double aa = std::norm(rep.mat("a")(0, 0));
  CHECK(aa == doctest::Approx(1.0 + 0.75 * aa));

  auto P = podles(Rational(1, 2), 2);
  InducedRep pp = induce_one_dimensional(P, podles_inf_character(P), M_PI);
  CHECK(pp.mat("b")(0, 0).real() == doctest::Approx(-std::sqrt(2.0)));
  CHECK(std::abs(pp.mat("b")(0, 0).imag()) < 1e-15);
  CHECK(std::abs(pp.mat("a")(0, 0)) == 0.0);

  // phi = pi/2: a is purely imaginary with |a|^2 = 1/(1-q)
  auto Ah = qosc(Rational(1, 2));
  InducedRep ri = induce_one_dimensional(Ah, qosc_fixed_character(Ah), M_PI / 2);
  CHECK(std::abs(ri.mat("a")(0, 0).real()) < 1e-15);
  CHECK(std::norm(ri.mat("a")(0, 0)) == doctest::Approx(2.0));

  CHECK_THROWS_AS(induce_one_dimensional(Ah, qosc_ladder_character(Ah, 0), 0.0),
                  DomainError);
}

TEST_CASE("preset_rep: spot values") {
  auto Ah = qosc(Rational(1, 2));
  InducedRep gamma = preset_rep(Ah, PresetFamily::gamma, {.gamma = 0.5}, 6);
  // k = 0 entry of a: ((1 + q^0.5)/(1 - q))^{1/2}
  long col = gamma.index_of(0);
  double expect = std::sqrt((1.0 + std::pow(0.5, 0.5)) / 0.5);
  CHECK(std::abs(gamma.mat("a")(col - 1, col)) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(std::abs(gamma.mat("a")(col - 1, col) - 1.847759) < 1e-6);

  auto A1 = qosc(1);
  InducedRep fock = preset_rep(A1, PresetFamily::fock, {}, 6);
  for (long k = 1; k <= 6; ++k) {
    long c = fock.index_of(k);
    CHECK(std::abs(fock.mat("a")(c - 1, c)) ==
          doctest::Approx(std::sqrt(static_cast<double>(k))).epsilon(1e-12));
  }

  auto U = uq(2);
  InducedRep neg = preset_rep(U, PresetFamily::uq, {.omega = -1, .two_l = 1}, 6);
  CHECK(neg.mat("K")(0, 0).real() == doctest::Approx(-0.5));
  CHECK(neg.mat("K")(1, 1).real() == doctest::Approx(-2.0));
  // pi(F) e_{1/2} = w q^{-1/2} [1] e_{-1/2} = -2^{-1/2}
  CHECK(neg.mat("F")(0, 1).real() == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK_THROWS_AS(preset_rep(U, PresetFamily::uq, {.omega = 2, .two_l = 1}, 6), DomainError);
  CHECK_THROWS_AS(preset_rep(Ah, PresetFamily::gamma, {.gamma = 1.5}, 6), DomainError);
}

TEST_CASE("matrix_of: diagonals and the Casimir scalar") {
  auto A = qosc(Rational(1, 2));
  InducedRep fock = preset_rep(A, PresetFamily::fock, {}, 10);
  Matrix N = matrix_of(fock, parse("N", A), A);
  for (long k = 0; k <= 10; ++k) {
    double expect = real_bracket_geo(A, k).value();
    CHECK(std::abs(N(k, k).real() - expect) < 1e-13);
  }
  // off-diagonal must vanish
  for (long r = 0; r <= 10; ++r)
    for (long c = 0; c <= 10; ++c)
      if (r != c) CHECK(std::abs(N(r, c)) == 0.0);

  Matrix one = matrix_of(fock, NcPolynomial::unit(), A);
  CHECK((one - Matrix::Identity(11, 11)).cwiseAbs().maxCoeff() == 0.0);

  auto U = uq(2);
  InducedRep rep = preset_rep(U, PresetFamily::uq, {.omega = +1, .two_l = 1}, 6);
  Matrix cq = matrix_of(rep, casimir(U), U);
  double s = 17.0 / 9.0;
  CHECK(std::abs(cq(0, 0).real() - s) < 1e-12);
  CHECK(std::abs(cq(1, 1).real() - s) < 1e-12);
  CHECK(std::abs(cq(0, 1)) < 1e-12);
  CHECK(std::abs(cq(1, 0)) < 1e-12);
  CHECK(rep.base.s.value() == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("oracle equality: induce matches the preset closed forms") {
  // q-oscillator Fock, q on both sides of 1
  for (const Rational& q : {Rational(1, 2), Rational(2), Rational(1)}) {
    auto A = qosc(q);
    InducedRep ind = induce(A, qosc_ladder_character(A, 0), 24);
    InducedRep pre = preset_rep(A, PresetFamily::fock, {}, 24);
    CHECK(aligned_diff(ind, pre, true) < 1e-12);
  }
  // gamma family
  auto Ah = qosc(Rational(1, 2));
  for (double g : {0.25, 0.5, 0.75, 1.0}) {
    InducedRep ind = induce(Ah, qosc_gamma_character(Ah, g), 16);
    InducedRep pre = preset_rep(Ah, PresetFamily::gamma, {.gamma = g}, 16);
    CHECK(aligned_diff(ind, pre, true) < 1e-12);
  }
  // Podles plus/minus
  auto P = podles(Rational(1, 2), 2);
  for (int sign : {+1, -1}) {
    InducedRep ind = induce(P, podles_character(P, 0, sign), 24);
    InducedRep pre = preset_rep(
        P, sign > 0 ? PresetFamily::podles_plus : PresetFamily::podles_minus, {}, 24);
    CHECK(aligned_diff(ind, pre, true) < 1e-12);
  }
  // U_q: same index order, no reversal
  for (const Rational& q : {Rational(1, 2), Rational(2)}) {
    auto U = uq(q);
    for (long two_l : {0L, 1L, 2L, 3L, 7L})
      for (int omega : {+1, -1}) {
        InducedRep ind = induce(U, uq_character(U, 0, two_l, omega), 64);
        InducedRep pre =
            preset_rep(U, PresetFamily::uq, {.omega = omega, .two_l = two_l}, 64);
        CHECK(aligned_diff(ind, pre, false) < 1e-12);
      }
  }
}

TEST_CASE("band structure and dimensions") {
  auto U = uq(2);
  for (long two_l : {0L, 2L, 5L}) {
    InducedRep rep = preset_rep(U, PresetFamily::uq, {.omega = +1, .two_l = two_l}, 8);
    CHECK(rep.dim() == two_l + 1);  // 2l + 1 basis labels
  }
  auto A = qosc(Rational(1, 2));
  InducedRep rep = induce(A, qosc_gamma_character(A, 0.5), 10);
  // homogeneous degree n is supported on the n-th band
  for (int n = -3; n <= 3; ++n) {
    NcPolynomial an = A.module_generator(n);
    Matrix m = matrix_of(rep, an, A);
    for (long r = 0; r < rep.dim(); ++r)
      for (long c = 0; c < rep.dim(); ++c)
        if (r - c != n) CHECK(std::abs(m(r, c)) == 0.0);
  }
}

TEST_CASE("induced representation from a non-section U_q point") {
  // inducing from an interior orbit point gives the same representation as
  // the section point, up to the label shift
  auto U = uq(2);
  InducedRep from_mid = induce(U, uq_character(U, 2, 1, -1), 16);
  InducedRep from_sec = induce(U, uq_character(U, 0, 3, -1), 16);
  REQUIRE(from_mid.dim() == from_sec.dim());
  // K diagonals agree as multisets ordered by label
  for (long i = 0; i < from_mid.dim(); ++i)
    CHECK(std::abs(from_mid.mat("K")(i, i) - from_sec.mat("K")(i, i)) < 1e-12);
  // E entries agree in magnitude (the Prop-16 gauge fixes phases per point)
  for (long i = 0; i + 1 < from_mid.dim(); ++i)
    CHECK(std::abs(std::abs(from_mid.mat("E")(i + 1, i)) -
                   std::abs(from_sec.mat("E")(i + 1, i))) < 1e-12);
}

TEST_CASE("coo triplets") {
  auto A = qosc(2);
  InducedRep rep = preset_rep(A, PresetFamily::fock, {}, 4);
  auto tr = coo_triplets(rep.mat("a"));
  CHECK(tr.size() == 4);
  for (const auto& t : tr) CHECK(t.row + 1 == t.col);
}
