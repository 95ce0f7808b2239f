#pragma once

#include "fmes/lincomb.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fmes {

struct Expr {
  enum class Kind { number, generator, balanced, sum, difference, product, power, negate, apply };
  Kind kind = Kind::number;
  Rational value;            // number
  Word word;                 // generator
  BWord bword;               // balanced
  std::string op;            // apply: D, W, delta, omega, t, swap
  int exponent = 0;          // power
  std::vector<Expr> args;    // operands
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// The evaluated result leaves the weight cutoff.
class CutoffExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Expr parse_expression(std::string_view text);
std::string print(const Expr& e);
inline std::string normalize(std::string_view text) { return print(parse_expression(text)); }

// `*` is the stuffle product; balanced words enter through the isomorphism to the A-alphabet.
Element evaluate(const Expr& e, int cutoff);

const std::vector<std::string>& operator_names();
Element apply_operator(const std::string& name, const Element& x);

}  // namespace fmes
