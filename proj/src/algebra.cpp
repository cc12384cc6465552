#include "orbitkit/algebra.hpp"

#include <algorithm>
#include <cassert>

namespace orbitkit {

int GradedStarAlgebra::find(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i].name == name) return static_cast<int>(i);
  return -1;
}

void GradedStarAlgebra::build_rule_index() const {
  for (size_t i = 0; i < rules.size(); ++i)
    rule_index_[{rules[i].a, rules[i].b}] = i;
}

const RewriteRule* GradedStarAlgebra::rule_for(int32_t a, int32_t b) const {
  if (rule_index_.empty() && !rules.empty()) build_rule_index();
  auto it = rule_index_.find({a, b});
  return it == rule_index_.end() ? nullptr : &rules[it->second];
}

bool GradedStarAlgebra::exact_params() const {
  bool ok = q.kind != ParamValue::Kind::approx;
  if (id == "podles") ok = ok && r.kind != ParamValue::Kind::approx;
  return ok;
}

Word GradedStarAlgebra::module_generator_word(long n) const {
  int up, down;
  if (id == "qosc") {
    up = find("a");
    down = find("a*");
  } else if (id == "podles") {
    up = find("b");
    down = find("b*");
  } else {
    up = find("E");
    down = find("F");
  }
  Word w;
  int32_t g = n >= 0 ? up : down;
  for (long i = 0; i < std::labs(n); ++i) w.push_back(g);
  return w;
}

NcPolynomial GradedStarAlgebra::module_generator(long n) const {
  return NcPolynomial::single(module_generator_word(n));
}

namespace {

Scalar q_minus_qinv() { return Scalar::q() - Scalar::q_power(-1); }

void check_positive(const ParamValue& p, const std::string& what) {
  if (p.kind == ParamValue::Kind::exact && p.x <= 0)
    throw DomainError(what + " must be positive");
  if (p.kind == ParamValue::Kind::approx && !(p.d > 0))
    throw DomainError(what + " must be positive");
}

}  // namespace

GradedStarAlgebra make_q_oscillator(ParamValue q) {
  check_positive(q, "q");
  GradedStarAlgebra alg;
  alg.id = "qosc";
  alg.title = "q-oscillator algebra, a a* = q a* a + 1";
  alg.q = q;
  alg.gens = {
      {"a", 1, 1, -1},
      {"a*", -1, 0, -1},
  };
  alg.star_words = {{1}, {0}};
  const int32_t A = 0, AS = 1;
  // a a* -> q a* a + 1
  NcPolynomial rhs = NcPolynomial::single({AS, A}, Scalar::q()) + NcPolynomial::unit();
  alg.rules = {{A, AS, rhs}};
  NcPolynomial N = NcPolynomial::single({AS, A});
  alg.aliases = {{"N", N}};
  alg.b_generators = {{"N", N}};
  alg.relations = {{"a a* - q a* a - 1",
                    {NcPolynomial::single({A, AS}),
                     NcPolynomial::single({AS, A}, Scalar::q()) + NcPolynomial::unit()}}};
  return alg;
}

GradedStarAlgebra make_podles(ParamValue q, ParamValue r) {
  check_positive(q, "q");
  check_positive(r, "r");
  if (q.kind == ParamValue::Kind::exact && q.x >= 1)
    throw DomainError("Podles sphere requires q in (0,1)");
  if (q.kind == ParamValue::Kind::approx && q.d >= 1)
    throw DomainError("Podles sphere requires q in (0,1)");
  GradedStarAlgebra alg;
  alg.id = "podles";
  alg.title = "Podles sphere O(S_qr^2), 0 < q < 1, 0 < r < inf";
  alg.q = q;
  alg.r = r;
  alg.gens = {
      {"a", 0, 0, -1},
      {"b", 1, 2, -1},
      {"b*", -1, 1, -1},
  };
  alg.star_words = {{0}, {2}, {1}};
  const int32_t A = 0, B = 1, BS = 2;
  Scalar q2 = Scalar::q_power(2), q4 = Scalar::q_power(4);
  NcPolynomial a = NcPolynomial::single({A});
  NcPolynomial a2 = NcPolynomial::single({A, A});
  NcPolynomial runit = NcPolynomial(Scalar::r());
  alg.rules = {
      {A, B, NcPolynomial::single({B, A}, Scalar::q_power(-2))},
      {A, BS, NcPolynomial::single({BS, A}, q2)},
      {B, BS, a * q2 - a2 * q4 + runit},
      {BS, B, a - a2 + runit},
  };
  alg.b_generators = {{"a", a}};
  alg.relations = {
      {"a b - q^-2 b a",
       {NcPolynomial::single({A, B}), NcPolynomial::single({B, A}, Scalar::q_power(-2))}},
      {"a b* - q^2 b* a",
       {NcPolynomial::single({A, BS}), NcPolynomial::single({BS, A}, q2)}},
      {"b* b - (a - a^2 + r)", {NcPolynomial::single({BS, B}), a - a2 + runit}},
      {"b b* - (q^2 a - q^4 a^2 + r)", {NcPolynomial::single({B, BS}), a * q2 - a2 * q4 + runit}},
  };
  return alg;
}

GradedStarAlgebra make_uq_su2(ParamValue q) {
  check_positive(q, "q");
  if (q.kind == ParamValue::Kind::exact && q.x == 1)
    throw DomainError("U_q(su(2)) requires q != 1");
  if (q.kind == ParamValue::Kind::approx && q.d == 1.0)
    throw DomainError("U_q(su(2)) requires q != 1");
  GradedStarAlgebra alg;
  alg.id = "uq";
  alg.title = "q-deformed enveloping algebra U_q(su(2)), q > 0, q != 1";
  alg.q = q;
  alg.gens = {
      {"E", 1, -1, -1},
      {"K^-1", 0, 1, 2},
      {"K", 0, 2, 1},
      {"F", -1, -1, -1},
  };
  const int32_t E = 0, KI = 1, K = 2, F = 3;
  // E* = F K, F* = K^-1 E, K* = K
  alg.star_words = {{F, K}, {KI}, {K}, {KI, E}};

  Scalar qm = q_minus_qinv();
  Scalar c = Scalar(1) / qm;
  // normal-form words are E^i K^j F^k, matching A_n = Lin{E^{n+l} K^m F^l}
  alg.rules = {
      {K, KI, NcPolynomial::unit()},
      {KI, K, NcPolynomial::unit()},
      {K, E, NcPolynomial::single({E, K}, Scalar::q_power(2))},
      {KI, E, NcPolynomial::single({E, KI}, Scalar::q_power(-2))},
      {F, K, NcPolynomial::single({K, F}, Scalar::q_power(2))},
      {F, KI, NcPolynomial::single({KI, F}, Scalar::q_power(-2))},
      {F, E,
       NcPolynomial::single({E, F}) + NcPolynomial::single({K}, -c) +
           NcPolynomial::single({KI}, c)},
  };
  alg.b_generators = {
      {"C_q", casimir(alg)},
      {"K", NcPolynomial::single({K})},
      {"K^-1", NcPolynomial::single({KI})},
  };
  alg.aliases = {{"C_q", casimir(alg)}, {"C", casimir(alg)}};
  NcPolynomial one = NcPolynomial::unit();
  alg.relations = {
      {"K K^-1 - 1", {NcPolynomial::single({K, KI}), one}},
      {"K^-1 K - 1", {NcPolynomial::single({KI, K}), one}},
      {"K E K^-1 - q^2 E",
       {NcPolynomial::single({K, E, KI}), NcPolynomial::single({E}, Scalar::q_power(2))}},
      {"K F K^-1 - q^-2 F",
       {NcPolynomial::single({K, F, KI}), NcPolynomial::single({F}, Scalar::q_power(-2))}},
      {"E F - F E - (K - K^-1)/(q - q^-1)",
       {NcPolynomial::single({E, F}) - NcPolynomial::single({F, E}),
        NcPolynomial::single({K}, c) + NcPolynomial::single({KI}, -c)}},
  };
  return alg;
}

GradedStarAlgebra make_algebra(const std::string& id, ParamValue q, ParamValue r) {
  if (id == "qosc") return make_q_oscillator(q);
  if (id == "podles") return make_podles(q, r);
  if (id == "uq") return make_uq_su2(q);
  throw DomainError("unknown algebra '" + id + "' (expected qosc, podles or uq)");
}

// ------------------------------------------------- closed-form machinery

namespace {

// dense polynomial in a single commutative variable over Scalar
using CPoly = std::vector<Scalar>;

CPoly cp_mul(const CPoly& a, const CPoly& b) {
  if (a.empty() || b.empty()) return {};
  CPoly out(a.size() + b.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

void cp_trim(CPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Laurent polynomial in K over Scalar
using LaurentK = std::map<long, Scalar>;

LaurentK lk_scalar(const Scalar& s) {
  LaurentK out;
  if (!s.is_zero()) out[0] = s;
  return out;
}

LaurentK lk_add(const LaurentK& a, const LaurentK& b) {
  LaurentK out = a;
  for (const auto& [e, c] : b) {
    auto it = out.find(e);
    if (it == out.end()) out[e] = c;
    else {
      it->second = it->second + c;
      if (it->second.is_zero()) out.erase(it);
    }
  }
  return out;
}

LaurentK lk_mul(const LaurentK& a, const LaurentK& b) {
  LaurentK out;
  for (const auto& [e1, c1] : a)
    for (const auto& [e2, c2] : b) {
      Scalar v = c1 * c2;
      auto it = out.find(e1 + e2);
      if (it == out.end()) out[e1 + e2] = v;
      else {
        it->second = it->second + v;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  return out;
}

LaurentK lk_neg(const LaurentK& a) {
  LaurentK out;
  for (const auto& [e, c] : a) out[e] = -c;
  return out;
}

// polynomial in x = EF with LaurentK coefficients
using CKPoly = std::vector<LaurentK>;

CKPoly ck_mul(const CKPoly& a, const CKPoly& b) {
  if (a.empty() || b.empty()) return {};
  CKPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = lk_add(out[i + j], lk_mul(a[i], b[j]));
  return out;
}

// [K;l] as a LaurentK value
LaurentK bracket_K_laurent(long l) {
  Scalar c = Scalar(1) / q_minus_qinv();
  LaurentK out;
  out[1] = Scalar::q_power(l) * c;
  out[-1] = -(Scalar::q_power(-l) * c);
  return out;
}

Word repeated(int32_t g, long n) { return Word(static_cast<size_t>(n), g); }

}  // namespace

NcPolynomial casimir(const GradedStarAlgebra& alg) {
  if (alg.id != "uq") throw DomainError("Casimir element is defined for the U_q preset only");
  const int32_t E = 0, KI = 1, K = 2, F = 3;
  Scalar d = q_minus_qinv() * q_minus_qinv();
  return NcPolynomial::single({E, F}) +
         NcPolynomial::single({K}, Scalar::q_power(-1) / d) +
         NcPolynomial::single({KI}, Scalar::q() / d);
}

NcPolynomial bracket_K(const GradedStarAlgebra& alg, long l) {
  if (alg.id != "uq") throw DomainError("[K;l] is defined for the U_q preset only");
  Scalar c = Scalar(1) / q_minus_qinv();
  return NcPolynomial::single({2}, Scalar::q_power(l) * c) +
         NcPolynomial::single({1}, -(Scalar::q_power(-l) * c));
}

NcPolynomial closed_form_product(const GradedStarAlgebra& alg, ProductKind kind, long k) {
  if (k < 1) throw DomainError("closed_form_product requires k >= 1");

  if (alg.id == "qosc") {
    const int32_t A = 0, AS = 1;
    if (kind == ProductKind::lowering_then_raising) {
      // a*^k a^k is already the normal-form word
      Word w = repeated(AS, k);
      Word a = repeated(A, k);
      w.insert(w.end(), a.begin(), a.end());
      return NcPolynomial::single(w);
    }
    if (kind == ProductKind::raising_then_lowering) {
      // P(N) = prod_{j=1}^k (q^j N + [[j]]), then change basis onto
      // G_i(N) = prod_{j=0}^{i-1} (q^-j N + [[-j]]) whose normal form is a*^i a^i.
      CPoly P{Scalar(1)};
      for (long j = 1; j <= k; ++j)
        P = cp_mul(P, CPoly{Scalar::bracket_geo(j), Scalar::q_power(j)});
      std::vector<CPoly> G{CPoly{Scalar(1)}};
      for (long i = 1; i <= k; ++i)
        G.push_back(cp_mul(G.back(), CPoly{Scalar::bracket_geo(1 - i), Scalar::q_power(1 - i)}));
      NcPolynomial out;
      for (long i = k; i >= 0; --i) {
        cp_trim(P);
        if (static_cast<long>(P.size()) - 1 < i) continue;
        Scalar ci = P[static_cast<size_t>(i)] / G[static_cast<size_t>(i)][static_cast<size_t>(i)];
        if (ci.is_zero()) continue;
        for (size_t m = 0; m < G[static_cast<size_t>(i)].size(); ++m)
          P[m] = P[m] - ci * G[static_cast<size_t>(i)][m];
        Word w = repeated(AS, i);
        Word a = repeated(A, i);
        w.insert(w.end(), a.begin(), a.end());
        out.add_term(w, ci);
      }
      cp_trim(P);
      if (!P.empty()) throw DomainError("internal: G-basis conversion left a remainder");
      return out;
    }
    throw DomainError("commutator closed form is not defined for the q-oscillator");
  }

  if (alg.id == "podles") {
    const int32_t A = 0;
    if (kind == ProductKind::commutator)
      throw DomainError("commutator closed form is not defined for the Podles sphere");
    CPoly P{Scalar(1)};
    for (long j = 1; j <= k; ++j) {
      Scalar lin, quad;
      if (kind == ProductKind::raising_then_lowering) {  // b^n b*^n
        lin = Scalar::q_power(2 * j);
        quad = -Scalar::q_power(4 * j);
      } else {  // b*^n b^n
        lin = Scalar::q_power(-2 * (j - 1));
        quad = -Scalar::q_power(-4 * (j - 1));
      }
      P = cp_mul(P, CPoly{Scalar::r(), lin, quad});
    }
    NcPolynomial out;
    for (size_t m = 0; m < P.size(); ++m)
      if (!P[m].is_zero()) out.add_term(repeated(A, static_cast<long>(m)), P[m]);
    return out;
  }

  // U_q
  const int32_t E = 0, KI = 1, K = 2, F = 3;
  if (kind == ProductKind::commutator) {
    // [E, F^k] = [k] F^{k-1} [K; 1-k] = [k] [K; k-1] F^{k-1} in normal order
    Scalar br = Scalar::bracket_sym(k);
    NcPolynomial out;
    LaurentK kb = bracket_K_laurent(k - 1);
    for (const auto& [e, c] : kb) {
      Word w = repeated(e > 0 ? K : KI, std::labs(e));
      Word fw = repeated(F, k - 1);
      w.insert(w.end(), fw.begin(), fw.end());
      out.add_term(w, br * c);
    }
    return out;
  }
  if (kind == ProductKind::raising_then_lowering) {
    // E^k F^k is already the normal-form word
    Word w = repeated(E, k);
    Word f = repeated(F, k);
    w.insert(w.end(), f.begin(), f.end());
    return NcPolynomial::single(w);
  }
  // F^k E^k = prod_{j=1}^k (x - [j][K;j-1]), x = EF; change basis onto
  // H_i(x,K) = prod_{j=1}^i (x + [j-1][K;-j]) = E^i F^i, monic in x.
  CKPoly P{lk_scalar(Scalar(1))};
  for (long j = 1; j <= k; ++j) {
    LaurentK c0 = bracket_K_laurent(j - 1);
    for (auto& [e, c] : c0) c = c * Scalar::bracket_sym(j);
    P = ck_mul(P, CKPoly{lk_neg(c0), lk_scalar(Scalar(1))});
  }
  std::vector<CKPoly> H{CKPoly{lk_scalar(Scalar(1))}};
  for (long i = 1; i <= k; ++i) {
    LaurentK c0;
    if (i >= 2) {
      c0 = bracket_K_laurent(-i);
      for (auto& [e, c] : c0) c = c * Scalar::bracket_sym(i - 1);
    }
    H.push_back(ck_mul(H.back(), CKPoly{c0, lk_scalar(Scalar(1))}));
  }
  NcPolynomial out;
  for (long i = k; i >= 0; --i) {
    while (!P.empty() && P.back().empty()) P.pop_back();
    if (static_cast<long>(P.size()) - 1 < i) continue;
    LaurentK ci = P[static_cast<size_t>(i)];  // H_i is monic in x
    if (ci.empty()) continue;
    const CKPoly& Hi = H[static_cast<size_t>(i)];
    for (size_t m = 0; m < Hi.size(); ++m)
      P[m] = lk_add(P[m], lk_neg(lk_mul(ci, Hi[m])));
    // H_i K^j = q^{2ij} E^i K^j F^i
    for (const auto& [j, c] : ci) {
      Word w = repeated(E, i);
      Word kw = repeated(j > 0 ? K : KI, std::labs(j));
      Word fw = repeated(F, i);
      w.insert(w.end(), kw.begin(), kw.end());
      w.insert(w.end(), fw.begin(), fw.end());
      out.add_term(w, c * Scalar::q_power(2 * i * j));
    }
  }
  while (!P.empty() && P.back().empty()) P.pop_back();
  if (!P.empty()) throw DomainError("internal: H-basis conversion left a remainder");
  return out;
}

bool check_confluence(const GradedStarAlgebra& alg, std::string* detail) {
  for (const auto& r1 : alg.rules)
    for (const auto& r2 : alg.rules) {
      if (r1.b != r2.a) continue;
      // overlap word (r1.a, r1.b, r2.b)
      NcPolynomial left = r1.rhs * NcPolynomial::single({r2.b});
      NcPolynomial right = NcPolynomial::single({r1.a}) * r2.rhs;
      if (normal_form(left, alg) != normal_form(right, alg)) {
        if (detail) {
          *detail = "critical pair (" + alg.gens[static_cast<size_t>(r1.a)].name + ", " +
                    alg.gens[static_cast<size_t>(r1.b)].name + ", " +
                    alg.gens[static_cast<size_t>(r2.b)].name + ") does not converge";
        }
        return false;
      }
    }
  return true;
}

}  // namespace orbitkit
