#include "fmes/qseries.hpp"

#include "fmes/derivations.hpp"
#include "fmes/echelon.hpp"
#include "fmes/modular.hpp"
#include "fmes/qshuffle.hpp"
#include "fmes/swap.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fmes {

QSeries::QSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

QSeries QSeries::constant(int order, const Rational& c) {
  QSeries s(order);
  s[0] = c;
  return s;
}

QSeries QSeries::truncate(int order) const {
  QSeries s(std::min(order, this->order()));
  std::copy_n(coeffs_.begin(), s.coeffs_.size(), s.coeffs_.begin());
  return s;
}

QSeries QSeries::q_derivative() const {
  QSeries s = *this;
  for (int n = 0; n <= order(); ++n) s[n] *= n;
  return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (o.order() < order()) *this = truncate(o.order());
  for (int n = 0; n <= order(); ++n) (*this)[n] += o[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  if (o.order() < order()) *this = truncate(o.order());
  for (int n = 0; n <= order(); ++n) (*this)[n] -= o[n];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.order(), b.order());
  QSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int i = 0; i <= n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::string to_string(const QSeries& s) {
  std::ostringstream os;
  for (int n = 0; n <= s.order(); ++n) os << n << ": " << to_string(s[n]) << '\n';
  return os.str();
}

namespace {

Integer ipow(long base, int e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

// Letters are placed from the smallest m (last letter) upwards.
void enumerate_g(const Word& w, int pos, long m_floor, long budget, long used, const Integer& weight,
                 std::vector<Integer>& acc) {
  if (pos < 0) {
    acc[static_cast<std::size_t>(used)] += weight;
    return;
  }
  const Letter& a = w[static_cast<std::size_t>(pos)];
  // Each remaining letter above needs m > the current one, so at least pos more units of m.
  for (long m = m_floor + 1;; ++m) {
    long reserve = 0;
    for (long j = 1; j <= pos; ++j) reserve += m + j;
    if (m + reserve > budget) break;
    for (long n = 1; m * n + reserve <= budget; ++n)
      enumerate_g(w, pos - 1, m, budget - m * n, used + m * n, weight * ipow(n, a.k - 1) * ipow(m, a.d), acc);
  }
}

}  // namespace

QSeries g_series(const Word& w, int order) {
  QSeries out(order);
  if (w.empty()) {
    out[0] = 1;
    return out;
  }
  std::vector<Integer> acc(static_cast<std::size_t>(order) + 1, Integer(0));
  enumerate_g(w, static_cast<int>(w.size()) - 1, 0, order, 0, Integer(1), acc);
  Integer denom = 1;
  for (const auto& a : w) denom *= factorial(a.k - 1);
  for (int n = 0; n <= order; ++n) {
    out[n] = Rational(acc[static_cast<std::size_t>(n)], denom);
    out[n].canonicalize();
  }
  return out;
}

QSeries g_series(const Element& x, int order) {
  QSeries out(order);
  for (const auto& [w, c] : x) out += c * g_series(w, order);
  return out;
}

QSeries eisenstein_G(int k, int order) {
  if (k < 2) throw std::invalid_argument("Eisenstein series needs k >= 2");
  QSeries out(order);
  out[0] = -bernoulli(k) / Rational(2 * factorial(k));
  out[0].canonicalize();
  const Integer denom = factorial(k - 1);
  for (long m = 1; m <= order; ++m) {
    const Integer mk = ipow(m, k - 1);
    for (long n = 1; m * n <= order; ++n) out[static_cast<int>(m * n)] += Rational(mk, denom);
  }
  for (int n = 1; n <= order; ++n) out[n].canonicalize();
  return out;
}

QSeries evaluate_qmf(const Poly& p, int order) {
  const std::vector<QSeries> gens{eisenstein_G(2, order), eisenstein_G(4, order), eisenstein_G(6, order)};
  QSeries out(order);
  for (const auto& [e, c] : p.terms()) {
    QSeries term = QSeries::constant(order, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) term = term * gens.at(i);
    out += term;
  }
  return out;
}

QSeries eta_delta(int order) {
  QSeries prod = QSeries::constant(order, 1);
  for (int n = 1; n <= order; ++n) {
    QSeries factor = QSeries::constant(order, 1);
    factor[n] = -1;
    for (int i = 0; i < 24; ++i) prod = prod * factor;
  }
  QSeries out(order);
  for (int n = 1; n <= order; ++n) out[n] = prod[n - 1];
  return out;
}

bool check_swap_invariance_g(const Word& w, int order) { return g_series(w, order) == g_series(swap_word(w), order); }

bool check_D_intertwining(const Word& w, int order) {
  return g_series(w, order).q_derivative() == g_series(apply_D(Element(w)), order);
}

bool check_depth1_symmetry(int k, int d, int order) {
  Rational c(factorial(d), factorial(k - 1));
  c.canonicalize();
  return g_series(make_word({k}, {d}), order) == c * g_series(make_word({d + 1}, {k - 1}), order);
}

QSeries lower_weight_defect(int order) {
  const Word a = make_word({2}, {1}), b = make_word({3}, {2});
  return g_series(a, order) * g_series(b, order) - g_series(stuffle(a, b), order);
}

bool check_lower_weight_stuffle(int order) {
  const QSeries lhs = g_series(make_word({2}, {1}), order) * g_series(make_word({3}, {2}), order);
  const QSeries rhs = g_series(make_word({2, 3}, {1, 2}), order) + g_series(make_word({3, 2}, {2, 1}), order) +
                      g_series(make_word({5}, {3}), order) - Rational(1, 12) * g_series(make_word({3}, {3}), order);
  return lhs == rhs;
}

std::vector<SeriesCheck> quasimodular_series_checks(int order) {
  std::vector<SeriesCheck> out;
  for (int k : {2, 4, 6}) {
    const Poly g = qmf_generator(k);
    out.push_back({"ramanujan D G(" + std::to_string(k) + ")", order,
                   evaluate_qmf(g, order).q_derivative() == evaluate_qmf(qmf_D(g), order)});
  }
  const QSeries u0 = eisenstein_G(2, order), u1 = u0.q_derivative(), u2 = u1.q_derivative();
  out.push_back({"chazy", order, u2.q_derivative() == Rational(-24) * (u0 * u2) + Rational(36) * (u1 * u1)});
  const QSeries g4 = eisenstein_G(4, order);
  out.push_back({"G(8) = 6/7 G(4)^2", order, eisenstein_G(8, order) == Rational(6, 7) * (g4 * g4)});
  const QSeries delta = evaluate_qmf(delta_cusp_form(), order);
  out.push_back({"cusp form product", order, delta == eta_delta(order)});
  out.push_back({"cusp form derivative", order,
                 delta.q_derivative() == eisenstein_normalisation(2) * (u0 * delta)});
  return out;
}

bool check_quasimodular_qseries(int order) {
  const auto checks = quasimodular_series_checks(order);
  return std::all_of(checks.begin(), checks.end(), [](const SeriesCheck& c) { return c.holds; });
}

std::size_t eisenstein_coefficient_rank() {
  std::vector<SparseRow> rows;
  for (int k : {2, 4, 6}) {
    const QSeries g = eisenstein_G(k, 3);
    SparseRow r;
    for (int n = 1; n <= 3; ++n)
      if (g[n] != 0) r.emplace_back(n - 1, g[n]);
    rows.push_back(r);
  }
  return echelon_serial(3, rows).rank();
}

}  // namespace fmes
