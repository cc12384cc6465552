#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orbitkit/spectrum.hpp"

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
}  // namespace

TEST_CASE("Real exactness propagation") {
  Real a(Rational(1, 3)), b(Rational(2, 3));
  CHECK((a + b).is_exact());
  CHECK((a + b).exact() == 1);
  Real c = Real::approx(0.5);
  CHECK(!(a * c).is_exact());
  CHECK(real_sqrt(Real(Rational(9, 4))).exact() == Rational(3, 2));
  CHECK(!real_sqrt(Real(2)).is_exact());
  CHECK(real_sqrt(Real(2)).value() == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(real_sqrt(Real(-1)), DomainError);
}

TEST_CASE("evaluate: multiplicative extension") {
  auto A = qosc(2);
  Character chi = qosc_character(A, Real(3));
  NcPolynomial n2 = normal_form(parse("N N", A), A);
  CHECK(evaluate(A, chi, n2).exact() == 9);
  CHECK(evaluate(A, chi, parse("N", A)).exact() == 3);
  CHECK_THROWS_AS(evaluate(A, chi, parse("a", A)), DomainError);

  auto P = podles(Rational(1, 2), 2);
  Character inf = podles_inf_character(P);
  for (long n = 1; n <= 4; ++n) {
    NcPolynomial bn = normal_form(P.module_generator(-n) * P.module_generator(n), P);
    CHECK(evaluate(P, inf, bn).exact() == Real(2).pow(n).exact());
    NcPolynomial bn2 = normal_form(P.module_generator(n) * P.module_generator(-n), P);
    CHECK(evaluate(P, inf, bn2).exact() == Real(2).pow(n).exact());
  }

  auto U = uq(2);
  Character st = uq_probe(U, Real(Rational(5)), Real(Rational(3)));
  // [K;1] -> (q t - q^-1 t^-1)/(q - q^-1) = (6 - 1/6)/(3/2) = 35/9
  NcPolynomial k1 = normal_form(bracket_K(U, 1), U);
  CHECK(evaluate(U, st, k1).exact() == Rational(35, 9));
  // multiplicativity on B: chi(b1 b2) = chi(b1) chi(b2)
  NcPolynomial b1 = normal_form(parse("C_q K", U), U);
  Real v1 = evaluate(U, st, b1);
  CHECK(v1.exact() == Rational(15));
}

TEST_CASE("evaluate: consistency of the Casimir value") {
  auto U = uq(2);
  for (long m = 0; m <= 2; ++m)
    for (long n = 0; n <= 2; ++n)
      for (int sign : {+1, -1}) {
        Character chi = uq_character(U, m, n, sign);
        NcPolynomial cq = normal_form(casimir(U), U);
        Real v = evaluate(U, chi, cq);
        CHECK(v.value() == doctest::Approx(chi.s.value()).epsilon(1e-12));
      }
}

TEST_CASE("is_positive: spec spot cases") {
  auto A2 = qosc(2);
  // t = 3 = [[2]]_2: a zero factor keeps every product >= 0
  Character ok = qosc_character(A2, Real(3));
  for (int depth : {1, 2, 5, 25}) CHECK(is_positive(A2, ok, depth));
  // t = 2: the paper product (2-0)(2-1)(2-3) < 0 shows up at depth 2
  Character bad = qosc_character(A2, Real(2));
  CHECK(is_positive(A2, bad, 1));
  CHECK(!is_positive(A2, bad, 2));
  // q < 1: everything at or above 1/(1-q) is positive
  auto Ah = qosc(Rational(1, 2));
  CHECK(is_positive(Ah, qosc_character(Ah, Real(Rational(5, 2))), 25));
  CHECK(is_positive(Ah, qosc_character(Ah, Real(2)), 25));  // exactly 1/(1-q)
  CHECK(!is_positive(Ah, qosc_character(Ah, Real(Rational(19, 10))), 25));
}

TEST_CASE("positive_spectrum: q-oscillator") {
  auto A = qosc(2);
  auto d = positive_spectrum(A);
  CHECK(!d.has_ray);
  auto pts = d.enumerate(4);
  REQUIRE(pts.size() == 5);
  long expected[] = {0, 1, 3, 7, 15};
  for (size_t i = 0; i < 5; ++i) CHECK(pts[i].t.exact() == expected[i]);
  for (const auto& chi : pts) CHECK(d.contains(chi));
  CHECK(!d.contains(qosc_character(A, Real(2))));
  CHECK(!d.contains(qosc_character(A, Real(Rational(100)))));

  auto Ah = qosc(Rational(1, 2));
  auto dh = positive_spectrum(Ah);
  CHECK(dh.has_ray);
  CHECK(dh.ray_start == doctest::Approx(2.0));
  CHECK(dh.contains(qosc_character(Ah, Real(7))));           // in the ray
  CHECK(dh.contains(qosc_character(Ah, Real(Rational(3, 2)))));  // [[2]]
  CHECK(!dh.contains(qosc_character(Ah, Real(Rational(8, 5)))));
}

TEST_CASE("positive_spectrum: Podles") {
  auto P = podles(Rational(1, 2), 2);
  CHECK(podles_lambda(P, +1).exact() == 2);
  CHECK(podles_lambda(P, -1).exact() == -1);
  auto d = positive_spectrum(P);
  auto pts = d.enumerate(2);
  // lambda_+ ladder: 2, 1/2, 1/8; lambda_- ladder: -1, -1/4, -1/16; plus 0
  REQUIRE(pts.size() == 7);
  CHECK(pts[0].t.exact() == 2);
  CHECK(pts[1].t.exact() == Rational(1, 2));
  CHECK(pts[2].t.exact() == Rational(1, 8));
  CHECK(pts[3].t.exact() == -1);
  CHECK(pts[4].t.exact() == Rational(-1, 4));
  CHECK(pts[6].t.exact() == 0);
  for (const auto& chi : pts) {
    CHECK(d.contains(chi));
    CHECK(is_positive(P, chi, 25));
  }
  CHECK(!d.contains(podles_probe(P, Real(1))));
  CHECK(!d.contains(podles_probe(P, Real(Rational(-1, 2)))));
}

TEST_CASE("positive_spectrum: U_q") {
  auto U = uq(2);
  Character c00 = uq_character(U, 0, 0, +1);
  CHECK(c00.t.exact() == 1);
  CHECK(c00.s.exact() == Rational(10, 9));  // (q + q^-1)/(q - q^-1)^2 = 2.5/2.25
  CHECK(c00.s.value() == doctest::Approx(1.111111).epsilon(1e-5));
  auto d = positive_spectrum(U);
  for (const auto& chi : d.enumerate(3)) {
    CHECK(d.contains(chi));
    CHECK(is_positive(U, chi, 25));
  }
  // right t, wrong s
  CHECK(!d.contains(uq_probe(U, Real(Rational(7, 2)), Real(1))));
  // t not a power of q
  CHECK(!d.contains(uq_probe(U, c00.s, Real(3))));
  // mismatched signs
  CHECK(!d.contains(uq_probe(U, -c00.s, c00.t)));
}

TEST_CASE("section") {
  auto A2 = qosc(2);
  auto s2 = section(A2);
  REQUIRE(s2.points.size() == 1);
  CHECK(s2.points[0].t.exact() == 0);
  CHECK(!s2.has_gamma_family);

  auto Ah = qosc(Rational(1, 2));
  auto sh = section(Ah);
  CHECK(sh.has_gamma_family);
  CHECK(sh.has_phase_family);
  // gamma = 1 sample: t = (1+q)/(1-q) = 3
  bool found_t3 = false;
  for (const auto& chi : sh.points)
    if (chi.label.kind == CharacterLabel::Kind::qosc_gamma && chi.label.gamma == 1.0)
      found_t3 = chi.t.value() == doctest::Approx(3.0);
  CHECK(found_t3);

  auto P = podles(Rational(1, 2), 2);
  auto sp = section(P);
  REQUIRE(sp.points.size() == 3);
  CHECK(sp.points[0].t.exact() == 2);
  CHECK(sp.points[1].t.exact() == -1);
  CHECK(sp.points[2].t.exact() == 0);

  auto U = uq(2);
  auto su = section(U, 3);
  CHECK(su.points.size() == 8);  // n = 0..3, both signs
}

TEST_CASE("grid consistency: emitted points pass, probes fail (reduced grid)") {
  std::vector<GradedStarAlgebra> algs;
  for (const Rational& q : {Rational(1, 2), Rational(2)}) algs.push_back(qosc(q));
  algs.push_back(podles(Rational(1, 2), 2));
  algs.push_back(uq(Rational(1, 2)));
  std::mt19937 rng(5);
  for (const auto& alg : algs) {
    auto d = positive_spectrum(alg);
    for (const auto& chi : d.enumerate(6)) CHECK(is_positive(alg, chi, 25));
    // off-family probes must fail by depth 25
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    int checked = 0;
    for (int i = 0; checked < 100 && i < 1000; ++i) {
      double t = u(rng);
      Character probe;
      if (alg.id == "qosc")
        probe = qosc_character(alg, Real::approx(t));
      else if (alg.id == "podles")
        probe = podles_probe(alg, Real::approx(t));
      else {
        double s = u(rng);
        probe = uq_probe(alg, Real::approx(s), Real::approx(t == 0 ? 0.7 : t));
      }
      if (d.contains(probe, 1e-7)) continue;  // resample: landed on the family
      ++checked;
      CHECK(!is_positive(alg, probe, 25));
    }
    CHECK(checked >= 100);
  }
}
