#pragma once

#include "fmes/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace fmes {

using Exponents = std::vector<int>;

// Sparse polynomial with rational coefficients in a fixed number of variables.
class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);
  // sum_i coeffs[i] * v_i
  static Poly linear(const std::vector<Rational>& coeffs);

  [[nodiscard]] int nvars() const { return nvars_; }
  [[nodiscard]] const std::map<Exponents, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const Exponents& e) const;
  [[nodiscard]] int degree() const;

  void add_term(const Exponents& e, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b, -1); }
  friend bool operator==(const Poly&, const Poly&) = default;

  // Product dropping monomials of total degree above max_degree (no limit if negative).
  static Poly multiply(const Poly& a, const Poly& b, int max_degree);
  [[nodiscard]] Poly pow(int n, int max_degree = -1) const;
  [[nodiscard]] Poly derivative(int index) const;

  // Replaces variable i by images[i]; all images share one variable count.
  [[nodiscard]] Poly substitute(const std::vector<Poly>& images, int max_degree = -1) const;

  [[nodiscard]] std::string render(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  std::map<Exponents, Rational> terms_;
};

int total_degree(const Exponents& e);

}  // namespace fmes
