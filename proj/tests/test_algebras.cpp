#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitkit/algebra.hpp"

using namespace orbitkit;

namespace {
GradedStarAlgebra qosc() { return make_q_oscillator(ParamValue::sym()); }
GradedStarAlgebra podles() { return make_podles(ParamValue::sym(), ParamValue::sym()); }
GradedStarAlgebra uq() { return make_uq_su2(ParamValue::sym()); }
}  // namespace

TEST_CASE("preset constructors validate parameter domains") {
  CHECK_THROWS_AS(make_q_oscillator(ParamValue::from_rational(Rational(-1))), DomainError);
  CHECK_THROWS_AS(make_q_oscillator(ParamValue::from_rational(Rational(0))), DomainError);
  CHECK_NOTHROW(make_q_oscillator(ParamValue::from_rational(Rational(1))));  // q=1 CCR is fine
  CHECK_THROWS_AS(make_podles(ParamValue::from_rational(Rational(2)),
                              ParamValue::from_rational(Rational(1))), DomainError);
  CHECK_THROWS_AS(make_podles(ParamValue::from_rational(Rational(1, 2)),
                              ParamValue::from_rational(Rational(0))), DomainError);
  CHECK_THROWS_AS(make_uq_su2(ParamValue::from_rational(Rational(1))), DomainError);
  CHECK_THROWS_AS(make_algebra("nope", ParamValue::sym(), ParamValue::sym()), DomainError);
}

TEST_CASE("grading of the presets") {
  auto A = qosc();
  CHECK(A.gens[static_cast<size_t>(A.find("a"))].degree == 1);
  CHECK(A.gens[static_cast<size_t>(A.find("a*"))].degree == -1);
  auto U = uq();
  CHECK(U.gens[static_cast<size_t>(U.find("E"))].degree == 1);
  CHECK(U.gens[static_cast<size_t>(U.find("K"))].degree == 0);
  for (const auto& alg : {qosc(), podles(), uq()})
    for (const auto& g : alg.gens) {
      // star flips degree
      int d = 0;
      for (int32_t s : alg.star_words[static_cast<size_t>(alg.find(g.name))])
        d += alg.gens[static_cast<size_t>(s)].degree;
      CHECK(d == -g.degree);
    }
}

TEST_CASE("B is commutative") {
  for (const auto& alg : {qosc(), podles(), uq()}) {
    for (const auto& [n1, b1] : alg.b_generators)
      for (const auto& [n2, b2] : alg.b_generators)
        CHECK(normal_form(b1 * b2 - b2 * b1, alg).is_zero());
  }
}

TEST_CASE("A_n = a_n B on short homogeneous words") {
  // every homogeneous word of length <= 4 reduces to a_n times a B-element:
  // after normalization, each monomial starts with the module generator word
  for (const auto& alg : {qosc(), podles(), uq()}) {
    int ng = static_cast<int>(alg.gens.size());
    std::vector<Word> words{{}};
    for (int len = 1; len <= 4; ++len) {
      std::vector<Word> next;
      for (const auto& w : words)
        if (static_cast<int>(w.size()) == len - 1)
          for (int32_t g = 0; g < ng; ++g) {
            Word e = w;
            e.push_back(g);
            next.push_back(e);
          }
      for (const auto& w : next) {
        int n = word_degree(w, alg);
        Word gen = alg.module_generator_word(n);
        NcPolynomial nf = normal_form(NcPolynomial::single(w), alg);
        for (const auto& [mw, c] : nf.terms()) {
          REQUIRE(mw.size() >= gen.size());
          // a_n B = B a_n: the module generator word shows up as a prefix or
          // a suffix of every normal monomial, with a degree-0 complement
          bool prefix = std::equal(gen.begin(), gen.end(), mw.begin());
          bool suffix = std::equal(gen.rbegin(), gen.rend(), mw.rbegin());
          CHECK((prefix || suffix));
          Word rest;
          if (prefix)
            rest.assign(mw.begin() + static_cast<long>(gen.size()), mw.end());
          else
            rest.assign(mw.begin(), mw.end() - static_cast<long>(gen.size()));
          CHECK(word_degree(rest, alg) == 0);
        }
      }
      words = std::move(next);
    }
  }
}

TEST_CASE("closed-form oracle equality, k <= 6 (exact over rational functions)") {
  auto A = qosc();
  for (long k = 1; k <= 6; ++k) {
    NcPolynomial lit = A.module_generator(k) * A.module_generator(-k);  // a^k a*^k
    CHECK(normal_form(lit, A) == closed_form_product(A, ProductKind::raising_then_lowering, k));
    NcPolynomial lit2 = A.module_generator(-k) * A.module_generator(k);
    CHECK(normal_form(lit2, A) == closed_form_product(A, ProductKind::lowering_then_raising, k));
  }
  auto P = podles();
  for (long n = 1; n <= 6; ++n) {
    NcPolynomial lit = P.module_generator(n) * P.module_generator(-n);  // b^n b*^n
    CHECK(normal_form(lit, P) == closed_form_product(P, ProductKind::raising_then_lowering, n));
    NcPolynomial lit2 = P.module_generator(-n) * P.module_generator(n);
    CHECK(normal_form(lit2, P) == closed_form_product(P, ProductKind::lowering_then_raising, n));
    // a b^n = q^{-2n} b^n a
    NcPolynomial ab = parse("a", P) * P.module_generator(n);
    NcPolynomial ba = P.module_generator(n) * parse("a", P);
    CHECK(normal_form(ab, P) == normal_form(ba * Scalar::q_power(-2 * n), P));
  }
  auto U = uq();
  for (long n = 1; n <= 6; ++n) {
    NcPolynomial lit = U.module_generator(n) * U.module_generator(-n);  // E^n F^n
    CHECK(normal_form(lit, U) == closed_form_product(U, ProductKind::raising_then_lowering, n));
    NcPolynomial lit2 = U.module_generator(-n) * U.module_generator(n);
    CHECK(normal_form(lit2, U) == closed_form_product(U, ProductKind::lowering_then_raising, n));
    // commutator [E, F^n] = [n] F^{n-1} [K; 1-n]
    NcPolynomial comm = parse("E", U) * U.module_generator(-n) -
                        U.module_generator(-n) * parse("E", U);
    CHECK(normal_form(comm, U) == closed_form_product(U, ProductKind::commutator, n));
    // the mirrored form [E^n, F] = [n] E^{n-1} [K; n-1]
    NcPolynomial comm2 = U.module_generator(n) * parse("F", U) -
                         parse("F", U) * U.module_generator(n);
    NcPolynomial rhs2 = U.module_generator(n - 1) * bracket_K(U, n - 1) * Scalar::bracket_sym(n);
    CHECK(normal_form(comm2, U) == normal_form(rhs2, U));
  }
}

TEST_CASE("closed_form_product rejects unsupported kinds") {
  CHECK_THROWS_AS(closed_form_product(qosc(), ProductKind::commutator, 2), DomainError);
  CHECK_THROWS_AS(closed_form_product(podles(), ProductKind::commutator, 2), DomainError);
  CHECK_THROWS_AS(closed_form_product(uq(), ProductKind::raising_then_lowering, 0), DomainError);
}

TEST_CASE("spec spot values") {
  // q-osc, lowering_then_raising k=2: a*^2 a^2 = N (q^-1 N - q^-1) = q^-1 N(N-1)
  auto A = qosc();
  NcPolynomial target = normal_form(parse("q^-1 N (N - 1)", A), A);
  CHECK(closed_form_product(A, ProductKind::lowering_then_raising, 2) == target);

  // Podles raising_then_lowering n=1: q^2 a - q^4 a^2 + r
  auto P = podles();
  CHECK(closed_form_product(P, ProductKind::raising_then_lowering, 1) ==
        parse("q^2 a - q^4 a a + r", P));

  // U_q lowering_then_raising n=1: F E = EF - (K - K^-1)/(q - q^-1)
  auto U = uq();
  CHECK(closed_form_product(U, ProductKind::lowering_then_raising, 1) ==
        normal_form(parse("E F - (K - K^-1)/(q - q^-1)", U), U));
}

TEST_CASE("Casimir element") {
  auto U = uq();
  NcPolynomial cq = casimir(U);
  for (const char* g : {"E", "F", "K", "K^-1"}) {
    NcPolynomial x = parse(g, U);
    CHECK(normal_form(cq * x - x * cq, U).is_zero());
  }
  CHECK(normal_form(star(cq, U), U) == normal_form(cq, U));  // formally self-adjoint
  // (q - q^-1)^2 at q=2 evaluates to 2.25
  Scalar d = (Scalar::q() - Scalar::q_power(-1)).pow(2);
  CHECK(d.eval_exact(Rational(2)) == Rational(9, 4));
  CHECK_THROWS_AS(casimir(qosc()), DomainError);
}

TEST_CASE("[K;l] identity, l in [-6,6]") {
  auto U = uq();
  // [K;l] at K -> t equals (q^l t - q^-l t^-1)/(q - q^-1); check symbolically by
  // multiplying out: [K;l] * (q - q^-1) * K = q^l K^2 - q^-l
  for (long l = -6; l <= 6; ++l) {
    NcPolynomial lhs = normal_form(
        bracket_K(U, l) * (Scalar::q() - Scalar::q_power(-1)) * parse("K", U), U);
    NcPolynomial rhs = normal_form(
        parse("K K", U) * Scalar::q_power(l) - NcPolynomial::unit() * Scalar::q_power(-l), U);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("q=1 CCR substitution") {
  auto A = make_q_oscillator(ParamValue::from_rational(Rational(1)));
  NcPolynomial nf = normal_form(parse("a a*", A), A);
  // aa* = q a*a + 1; the rule set is symbolic, evaluate the coefficient at q=1
  CHECK(nf.terms().at({1, 0}).eval_exact(Rational(1)) == 1);
}
