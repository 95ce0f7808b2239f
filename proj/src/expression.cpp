#include "fmes/expression.hpp"

#include "fmes/balanced.hpp"
#include "fmes/derivations.hpp"
#include "fmes/qshuffle.hpp"
#include "fmes/swap.hpp"

#include <algorithm>
#include <cctype>

namespace fmes {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip();
    return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
  }

  std::string digits() {
    if (!peek_digit()) fail("expected a number");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  int small_int() {
    const std::string d = digits();
    if (d.size() > 6) fail("index too large");
    return std::stoi(d);
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Expr sum() {
    Expr e = product();
    for (;;) {
      if (accept('+')) {
        e = Expr{.kind = Expr::Kind::sum, .args = {std::move(e), product()}};
      } else if (accept('-')) {
        e = Expr{.kind = Expr::Kind::difference, .args = {std::move(e), product()}};
      } else {
        return e;
      }
    }
  }

  Expr product() {
    Expr e = unary();
    while (accept('*')) e = Expr{.kind = Expr::Kind::product, .args = {std::move(e), unary()}};
    return e;
  }

  Expr unary() {
    if (accept('-')) return Expr{.kind = Expr::Kind::negate, .args = {unary()}};
    return power();
  }

  Expr power() {
    Expr e = primary();
    if (accept('^')) {
      Expr p{.kind = Expr::Kind::power, .args = {std::move(e)}};
      p.exponent = small_int();
      return p;
    }
    return e;
  }

  std::vector<int> int_list(char close) {
    std::vector<int> out;
    if (accept(close)) return out;
    do out.push_back(small_int());
    while (accept(','));
    expect(close);
    return out;
  }

  Expr generator() {
    expect('[');
    Expr e{.kind = Expr::Kind::generator};
    if (accept('{')) {
      const auto ks = int_list('}');
      expect(',');
      expect('{');
      const auto ds = int_list('}');
      expect(']');
      if (ks.size() != ds.size()) fail("index lists differ in length");
      for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ks[i] < 1) fail("k index must be positive");
        e.word.letters.push_back(Letter{ks[i], ds[i]});
      }
      return e;
    }
    for (int k : int_list(']')) {
      if (k < 1) fail("k index must be positive");
      e.word.letters.push_back(Letter{k, 0});
    }
    return e;
  }

  bool peek_bletter() {
    skip();
    return pos_ + 1 < s_.size() && s_[pos_] == 'b' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]));
  }

  Expr balanced() {
    Expr e{.kind = Expr::Kind::balanced};
    while (peek_bletter()) {
      ++pos_;
      e.bword.letters.push_back(BLetter{small_int()});
    }
    if (e.bword.letters.front().i == 0) fail("balanced word starts with b0");
    return e;
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Expr e = sum();
      expect(')');
      return e;
    }
    if (peek_digit()) {
      Integer num(digits());
      Integer den(1);
      if (accept('/')) {
        den = Integer(digits());
        if (den == 0) fail("zero denominator");
      }
      Expr e{.kind = Expr::Kind::number};
      e.value = Rational(num, den);
      e.value.canonicalize();
      return e;
    }
    if (peek_bletter()) return balanced();
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name.empty()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    if (name == "G") return generator();
    const auto& ops = operator_names();
    if (std::find(ops.begin(), ops.end(), name) == ops.end()) {
      pos_ = start;
      fail("unknown operator '" + name + "'");
    }
    expect('(');
    Expr e{.kind = Expr::Kind::apply, .op = name, .args = {sum()}};
    expect(')');
    return e;
  }
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::sum:
    case Expr::Kind::difference:
      return 1;
    case Expr::Kind::product:
      return 2;
    case Expr::Kind::negate:
      return 3;
    case Expr::Kind::power:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  const std::string s = print(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::number:
      return to_string(e.value);
    case Expr::Kind::generator: {
      std::vector<int> ks, ds;
      bool flat = true;
      for (const auto& a : e.word) {
        ks.push_back(a.k);
        ds.push_back(a.d);
        flat = flat && a.d == 0;
      }
      if (flat) return "G[" + join_ints(ks) + "]";
      return "G[{" + join_ints(ks) + "},{" + join_ints(ds) + "}]";
    }
    case Expr::Kind::balanced:
      return to_string(e.bword);
    case Expr::Kind::sum:
      return wrap(e.args[0], 1) + " + " + wrap(e.args[1], 2);
    case Expr::Kind::difference:
      return wrap(e.args[0], 1) + " - " + wrap(e.args[1], 2);
    case Expr::Kind::product:
      return wrap(e.args[0], 2) + " * " + wrap(e.args[1], 3);
    case Expr::Kind::negate:
      return "-" + wrap(e.args[0], 3);
    case Expr::Kind::power:
      return wrap(e.args[0], 5) + "^" + std::to_string(e.exponent);
    case Expr::Kind::apply:
      return e.op + "(" + print(e.args[0]) + ")";
  }
  return {};
}

const std::vector<std::string>& operator_names() {
  static const std::vector<std::string> names{"D", "W", "delta", "omega", "t", "swap"};
  return names;
}

Element apply_operator(const std::string& name, const Element& x) {
  if (name == "D") return apply_D(x);
  if (name == "W") return apply_W(x);
  if (name == "delta") return apply_delta(x);
  if (name == "omega") return apply_omega(x);
  if (name == "t") return apply_t(x);
  if (name == "swap") return swap(x);
  throw std::invalid_argument("unknown operator '" + name + "'");
}

Element evaluate(const Expr& e, int cutoff) {
  auto guard = [cutoff](Element x) {
    if (!x.is_zero() && max_weight(x) > cutoff)
      throw CutoffExceeded("weight " + std::to_string(max_weight(x)) + " exceeds the cutoff " + std::to_string(cutoff));
    return x;
  };
  switch (e.kind) {
    case Expr::Kind::number:
      return Element::scalar(e.value);
    case Expr::Kind::generator:
      return guard(Element(e.word));
    case Expr::Kind::balanced:
      return guard(phi_iso(e.bword));
    case Expr::Kind::sum:
      return evaluate(e.args[0], cutoff) + evaluate(e.args[1], cutoff);
    case Expr::Kind::difference:
      return evaluate(e.args[0], cutoff) - evaluate(e.args[1], cutoff);
    case Expr::Kind::product:
      return guard(stuffle(evaluate(e.args[0], cutoff), evaluate(e.args[1], cutoff)));
    case Expr::Kind::power: {
      const Element base = evaluate(e.args[0], cutoff);
      Element out = unit_element();
      for (int i = 0; i < e.exponent; ++i) out = guard(stuffle(out, base));
      return out;
    }
    case Expr::Kind::negate:
      return -evaluate(e.args[0], cutoff);
    case Expr::Kind::apply:
      return guard(apply_operator(e.op, evaluate(e.args[0], cutoff)));
  }
  return {};
}

}  // namespace fmes
