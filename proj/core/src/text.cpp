#include "gsr/text.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace gsr {

parse_error::parse_error(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)),
      position(pos) {}

namespace {

constexpr int kMaxExponent = 4096;

// Recursive-descent evaluator over +, -, *, ^, parentheses, integer
// literals, x, and (under ring ZY) y.  Everything is evaluated directly in
// the polynomial domain, which merges like terms and drops zeros for free.
class Parser {
 public:
  Parser(std::string_view s, Ring ring) : s_(s), ring_(ring) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Poly expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly acc = product();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + product();
      else if (eat('-'))
        acc = acc - product();
      else
        return acc;
    }
  }

  Poly product() {
    Poly acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (!eat('^')) return base;
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected exponent");
    long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + (s_[pos_] - '0');
      if (e > kMaxExponent) fail("exponent too large");
      ++pos_;
    }
    return pow(base, static_cast<int>(e));
  }

  Poly atom() {
    char c = peek();
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) {
        pos_ = open;
        fail("unbalanced parenthesis");
      }
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return shift(Poly::one(ring_), 1);
    }
    if (c == 'y') {
      if (ring_ != Ring::ZY) fail("variable y requires ring zy");
      ++pos_;
      return Poly::constant(RingElem::ypoly({Int(0), Int(1)}));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        digits.push_back(s_[pos_++]);
      Int v;
      mpz_set_str(v.get_mpz_t(), digits.c_str(), 10);
      return Poly::constant(RingElem::integer(ring_, std::move(v)));
    }
    fail("expected a term");
  }

  std::string_view s_;
  Ring ring_;
  std::size_t pos_ = 0;
};

// Sum of signed monomial pieces in one variable, descending powers.
// coefficient_text must render positive-led values without an outer sign.
template <typename CoeffText>
std::string render_terms(int degree, CoeffText&& piece) {
  std::string out;
  for (int k = degree; k >= 0; --k) {
    auto [present, negative, text] = piece(k);
    if (!present) continue;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    out += text;
  }
  return out.empty() ? "0" : out;
}

std::string int_term(const Int& v, char var, int k) {
  Int a = abs(v);
  std::string t;
  if (a != 1 || k == 0) t = a.get_str();
  if (k > 0) {
    if (!t.empty()) t += "*";
    t += var;
    if (k > 1) t += "^" + std::to_string(k);
  }
  return t;
}

std::string ypoly_text(const RingElem& a) {
  return render_terms(a.ydeg(), [&](int k) {
    const Int& v = a.coeffs()[static_cast<size_t>(k)];
    return std::tuple<bool, bool, std::string>{v != 0, v < 0,
                                               int_term(v, 'y', k)};
  });
}

// A Z[y] coefficient prints bare when it is a single monomial and
// parenthesized otherwise, so output always re-parses to the same value.
std::string coeff_text(const RingElem& a, int k, bool& negative) {
  negative = a.lead_int() < 0;
  RingElem c = negative ? -a : a;
  if (c.ring() == Ring::Z || c.ydeg() == 0)
    return int_term(c.coeffs()[0], 'x', k);

  int terms = 0;
  for (const Int& v : c.coeffs())
    if (v != 0) ++terms;
  std::string t = terms == 1 ? ypoly_text(c) : "(" + ypoly_text(c) + ")";
  if (k > 0) {
    t += "*x";
    if (k > 1) t += "^" + std::to_string(k);
  }
  return t;
}

}  // namespace

Poly parse_poly(std::string_view text, Ring ring) {
  return Parser(text, ring).run();
}

std::string to_string(const RingElem& a) {
  if (a.is_zero()) return "0";
  if (a.ring() == Ring::Z || a.ydeg() == 0) return a.coeffs()[0].get_str();
  return ypoly_text(a);
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  return render_terms(p.degree(), [&](int k) {
    const RingElem& c = p.coeff(k);
    if (c.is_zero()) return std::tuple<bool, bool, std::string>{false, false, {}};
    bool neg = false;
    std::string t = coeff_text(c, k, neg);
    return std::tuple<bool, bool, std::string>{true, neg, std::move(t)};
  });
}

}  // namespace gsr
