#pragma once

#include "fmes/lincomb.hpp"
#include "fmes/poly.hpp"
#include "fmes/rational.hpp"

#include <string>
#include <vector>

namespace fmes {

// Power series c_0 + c_1 q + ... + c_N q^N; arithmetic truncates at the smaller order.
class QSeries {
 public:
  explicit QSeries(int order = 0);
  static QSeries constant(int order, const Rational& c);

  [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const Rational& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Rational& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] QSeries truncate(int order) const;
  // q d/dq
  [[nodiscard]] QSeries q_derivative() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& s);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries& a, const QSeries& b);

 private:
  std::vector<Rational> coeffs_;
};

std::string to_string(const QSeries& s);

// Σ_{m_1>...>m_r>0, n_i>0} Π n_i^{k_i-1} m_i^{d_i}/(k_i-1)! q^{Σ m_i n_i}
QSeries g_series(const Word& w, int order);
QSeries g_series(const Element& x, int order);

// -B_k/(2 k!) + 1/(k-1)! Σ m^{k-1} q^{mn}
QSeries eisenstein_G(int k, int order);
// Evaluates a polynomial in G(2), G(4), G(6).
QSeries evaluate_qmf(const Poly& p, int order);
// q Π (1 - q^n)^24
QSeries eta_delta(int order);

struct SeriesCheck {
  std::string name;
  int order = 0;
  bool holds = false;
};

bool check_swap_invariance_g(const Word& w, int order);
bool check_D_intertwining(const Word& w, int order);
// g[k;d] = d!/(k-1)! g[d+1;k-1]
bool check_depth1_symmetry(int k, int d, int order);
// g[2;1] g[3;2] = g[2,3;1,2] + g[3,2;2,1] + g[5;3] - g[3;3]/12
bool check_lower_weight_stuffle(int order);
// The plain stuffle image differs from the product by exactly g[3;3]/12.
QSeries lower_weight_defect(int order);

std::vector<SeriesCheck> quasimodular_series_checks(int order);
bool check_quasimodular_qseries(int order);

// Rank of the coefficient matrix of G(2), G(4), G(6) at q^1..q^3.
std::size_t eisenstein_coefficient_rank();

}  // namespace fmes
