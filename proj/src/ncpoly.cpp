#include "orbitkit/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

#include "orbitkit/algebra.hpp"

namespace orbitkit {

NcPolynomial::NcPolynomial(Scalar c) {
  if (!c.is_zero()) terms_[Word{}] = std::move(c);
}

NcPolynomial NcPolynomial::single(Word w, Scalar c) {
  NcPolynomial p;
  if (!c.is_zero()) p.terms_[std::move(w)] = std::move(c);
  return p;
}

void NcPolynomial::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_[w] = c;
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NcPolynomial NcPolynomial::operator+(const NcPolynomial& o) const {
  NcPolynomial out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

NcPolynomial NcPolynomial::operator-() const {
  NcPolynomial out;
  for (const auto& [w, c] : terms_) out.terms_[w] = -c;
  return out;
}

NcPolynomial NcPolynomial::operator-(const NcPolynomial& o) const { return *this + (-o); }

NcPolynomial NcPolynomial::operator*(const NcPolynomial& o) const {
  NcPolynomial out;
  for (const auto& [w1, c1] : terms_)
    for (const auto& [w2, c2] : o.terms_) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      out.add_term(w, c1 * c2);
    }
  return out;
}

NcPolynomial NcPolynomial::operator*(const Scalar& c) const {
  NcPolynomial out;
  if (c.is_zero()) return out;
  for (const auto& [w, k] : terms_) out.terms_[w] = k * c;
  return out;
}

NcPolynomial NcPolynomial::pow(unsigned k) const {
  NcPolynomial out = unit();
  for (unsigned i = 0; i < k; ++i) out = out * (*this);
  return out;
}

int word_degree(const Word& w, const GradedStarAlgebra& alg) {
  int d = 0;
  for (int32_t g : w) d += alg.gens[static_cast<size_t>(g)].degree;
  return d;
}

NcPolynomial multiply(const NcPolynomial& p, const NcPolynomial& s) { return p * s; }

NcPolynomial star(const NcPolynomial& p, const GradedStarAlgebra& alg) {
  NcPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    Word sw;
    sw.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const Word& img = alg.star_words[static_cast<size_t>(*it)];
      sw.insert(sw.end(), img.begin(), img.end());
    }
    // scalar coefficients are real rational functions, so conjugation is the identity
    out.add_term(sw, c);
  }
  return out;
}

NcPolynomial normal_form(const NcPolynomial& p, const GradedStarAlgebra& alg, long budget) {
  NcPolynomial done, cur = p;
  long steps = 0;
  // whole-polynomial sweeps so that coinciding intermediate words merge,
  // keeping the term count polynomial in the input length
  while (!cur.is_zero()) {
    NcPolynomial next;
    for (const auto& [w, c] : cur.terms()) {
      const RewriteRule* rule = nullptr;
      size_t pos = 0;
      for (size_t i = 0; i + 1 < w.size(); ++i) {
        rule = alg.rule_for(w[i], w[i + 1]);
        if (rule) {
          pos = i;
          break;
        }
      }
      if (!rule) {
        done.add_term(w, c);
        continue;
      }
      if (++steps > budget)
        throw BudgetExceeded("normal_form exceeded the rewriting step budget of " +
                             std::to_string(budget));
      Word prefix(w.begin(), w.begin() + static_cast<long>(pos));
      Word suffix(w.begin() + static_cast<long>(pos) + 2, w.end());
      for (const auto& [rw, rc] : rule->rhs.terms()) {
        Word nw = prefix;
        nw.insert(nw.end(), rw.begin(), rw.end());
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        next.add_term(nw, c * rc);
      }
    }
    cur = std::move(next);
  }
  return done;
}

bool is_normal_form(const NcPolynomial& p, const GradedStarAlgebra& alg) {
  for (const auto& [w, c] : p.terms())
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (alg.rule_for(w[i], w[i + 1])) return false;
  return true;
}

NcPolynomial degree_component(const NcPolynomial& p, int n, const GradedStarAlgebra& alg) {
  NcPolynomial out;
  for (const auto& [w, c] : p.terms())
    if (word_degree(w, alg) == n) out.add_term(w, c);
  return out;
}

NcPolynomial bimodule_project(const NcPolynomial& p, const GradedStarAlgebra& alg) {
  return degree_component(p, 0, alg);
}

std::string to_string(const Word& w, const GradedStarAlgebra& alg) {
  if (w.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << " ";
    os << alg.gens[static_cast<size_t>(w[i])].name;
  }
  return os.str();
}

std::string to_string(const NcPolynomial& p, const GradedStarAlgebra& alg) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    if (!w.empty()) os << "*" << to_string(w, alg);
    first = false;
  }
  return os.str();
}

// ------------------------------------------------------------------ parser

namespace {

struct Token {
  enum class Kind { ident, number, qq_bracket, q_bracket, plus, minus, times, divide,
                    caret, star, lparen, rparen, end };
  Kind kind;
  std::string text;
  long value = 0;    // bracket argument
  size_t pos = 0;
  bool glued = false;  // token starts immediately after the previous one
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    bool glued = true;
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      ++i_;
      glued = false;
    }
    tok_ = Token{Token::Kind::end, "", 0, i_, glued};
    if (i_ >= s_.size()) return;
    char c = s_[i_];
    auto simple = [&](Token::Kind k) {
      tok_.kind = k;
      tok_.text = std::string(1, c);
      ++i_;
    };
    if (c == '+') return simple(Token::Kind::plus);
    if (c == '-') return simple(Token::Kind::minus);
    if (c == '*') return simple(Token::Kind::star);
    if (c == '/') return simple(Token::Kind::divide);
    if (c == '^') return simple(Token::Kind::caret);
    if (c == '(') return simple(Token::Kind::lparen);
    if (c == ')') return simple(Token::Kind::rparen);
    // UTF-8 middle dot as an explicit product sign
    if (static_cast<unsigned char>(c) == 0xC2 && i_ + 1 < s_.size() &&
        static_cast<unsigned char>(s_[i_ + 1]) == 0xB7) {
      tok_.kind = Token::Kind::times;
      tok_.text = "*";
      i_ += 2;
      return;
    }
    if (c == '[') {
      bool dbl = i_ + 1 < s_.size() && s_[i_ + 1] == '[';
      size_t j = i_ + (dbl ? 2 : 1);
      size_t start = j;
      if (j < s_.size() && (s_[j] == '-' || s_[j] == '+')) ++j;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      if (j == start) throw ParseError("expected integer inside bracket", i_);
      long v = std::stol(s_.substr(start, j - start));
      if (dbl) {
        if (j + 1 >= s_.size() || s_[j] != ']' || s_[j + 1] != ']')
          throw ParseError("unterminated [[k]]", i_);
        i_ = j + 2;
        tok_.kind = Token::Kind::qq_bracket;
      } else {
        if (j >= s_.size() || s_[j] != ']') throw ParseError("unterminated [n]", i_);
        i_ = j + 1;
        tok_.kind = Token::Kind::q_bracket;
      }
      tok_.value = v;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_.kind = Token::Kind::number;
      tok_.text = s_.substr(i_, j - i_);
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      tok_.kind = Token::Kind::ident;
      tok_.text = s_.substr(i_, j - i_);
      i_ = j;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i_);
  }

  const std::string& s_;
  size_t i_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(const std::string& text, const GradedStarAlgebra& alg) : lex_(text), alg_(alg) {}

  NcPolynomial parse_expr() {
    NcPolynomial v = parse_term();
    while (true) {
      auto k = lex_.peek().kind;
      if (k == Token::Kind::plus) {
        lex_.next();
        v = v + parse_term();
      } else if (k == Token::Kind::minus) {
        lex_.next();
        v = v - parse_term();
      } else {
        return v;
      }
    }
  }

  void expect_end() {
    if (lex_.peek().kind != Token::Kind::end)
      throw ParseError("unexpected trailing input", lex_.peek().pos);
  }

 private:
  bool starts_factor(const Token& t) const {
    switch (t.kind) {
      case Token::Kind::ident:
      case Token::Kind::number:
      case Token::Kind::qq_bracket:
      case Token::Kind::q_bracket:
      case Token::Kind::lparen:
        return true;
      default:
        return false;
    }
  }

  NcPolynomial parse_term() {
    bool neg = false;
    while (lex_.peek().kind == Token::Kind::minus || lex_.peek().kind == Token::Kind::plus) {
      if (lex_.next().kind == Token::Kind::minus) neg = !neg;
    }
    NcPolynomial v = parse_postfix();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Kind::times) {
        lex_.next();
        v = v * parse_postfix();
      } else if (t.kind == Token::Kind::star) {
        // '*' between operands is multiplication (postfix star was already consumed)
        lex_.next();
        v = v * parse_postfix();
      } else if (t.kind == Token::Kind::divide) {
        size_t pos = t.pos;
        lex_.next();
        NcPolynomial d = parse_postfix();
        v = v * scalar_inverse(d, pos);
      } else if (starts_factor(t)) {
        v = v * parse_postfix();
      } else {
        break;
      }
    }
    return neg ? -v : v;
  }

  static Scalar scalar_of(const NcPolynomial& p, size_t pos) {
    if (p.is_zero()) return Scalar(0);
    if (p.term_count() != 1 || !p.terms().begin()->first.empty())
      throw ParseError("expected a scalar expression", pos);
    return p.terms().begin()->second;
  }

  static NcPolynomial scalar_inverse(const NcPolynomial& p, size_t pos) {
    Scalar s = scalar_of(p, pos);
    if (s.is_zero()) throw ParseError("division by zero", pos);
    return NcPolynomial(Scalar(1) / s);
  }

  NcPolynomial parse_postfix() {
    size_t pos = lex_.peek().pos;
    NcPolynomial v = parse_primary();
    while (true) {
      const Token& t = lex_.peek();
      if (t.kind == Token::Kind::star && t.glued) {
        // postfix involution: binds only when written directly after the operand
        lex_.next();
        v = star(v, alg_);
      } else if (t.kind == Token::Kind::caret) {
        lex_.next();
        long e = parse_int_exponent();
        v = power(v, e, pos);
      } else {
        return v;
      }
    }
  }

  long parse_int_exponent() {
    bool neg = false;
    if (lex_.peek().kind == Token::Kind::minus) {
      lex_.next();
      neg = true;
    } else if (lex_.peek().kind == Token::Kind::plus) {
      lex_.next();
    }
    Token t = lex_.next();
    if (t.kind != Token::Kind::number) throw ParseError("expected integer exponent", t.pos);
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  NcPolynomial power(const NcPolynomial& v, long e, size_t pos) {
    if (e >= 0) return v.pow(static_cast<unsigned>(e));
    // negative powers: scalars invert; single invertible generators use the partner
    if (v.term_count() == 1 && v.terms().begin()->first.empty())
      return NcPolynomial(Scalar(1) / v.terms().begin()->second.pow(-e));
    if (v.term_count() == 1 && v.terms().begin()->first.size() == 1 &&
        v.terms().begin()->second.is_one()) {
      int32_t g = v.terms().begin()->first[0];
      int inv = alg_.gens[static_cast<size_t>(g)].inverse;
      if (inv >= 0) {
        Word w(static_cast<size_t>(-e), inv);
        return NcPolynomial::single(w);
      }
    }
    throw ParseError("negative power of a non-invertible element", pos);
  }

  NcPolynomial parse_primary() {
    Token t = lex_.next();
    switch (t.kind) {
      case Token::Kind::number:
        return NcPolynomial(Scalar(parse_rational(t.text)));
      case Token::Kind::qq_bracket:
        return NcPolynomial(Scalar::bracket_geo(t.value));
      case Token::Kind::q_bracket:
        return NcPolynomial(Scalar::bracket_sym(t.value));
      case Token::Kind::lparen: {
        NcPolynomial v = parse_expr();
        Token close = lex_.next();
        if (close.kind != Token::Kind::rparen)
          throw ParseError("expected ')'", close.pos);
        return v;
      }
      case Token::Kind::ident: {
        if (t.text == "q") return NcPolynomial(Scalar::q());
        if (t.text == "r") return NcPolynomial(Scalar::r());
        int g = alg_.find(t.text);
        if (g >= 0) return NcPolynomial::single(Word{g});
        for (const auto& [name, p] : alg_.aliases)
          if (name == t.text) return p;
        throw ParseError("unknown generator name '" + t.text + "'", t.pos);
      }
      default:
        throw ParseError("unexpected token", t.pos);
    }
  }

  Lexer lex_;
  const GradedStarAlgebra& alg_;
};

}  // namespace

NcPolynomial parse(const std::string& text, const GradedStarAlgebra& alg) {
  Parser p(text, alg);
  NcPolynomial v = p.parse_expr();
  p.expect_end();
  return v;
}

}  // namespace orbitkit
