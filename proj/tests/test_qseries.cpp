#include "doctest.h"

#include "fmes/derivations.hpp"
#include "fmes/enumerate.hpp"
#include "fmes/modular.hpp"
#include "fmes/qseries.hpp"
#include "fmes/swap.hpp"

#include <map>
#include <random>

using namespace fmes;

namespace {

// Direct sum over all tuples (m_i, n_i) with Σ m_i n_i ≤ N and no pruning.
std::vector<Rational> brute_g(const Word& w, int order) {
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
  const std::size_t r = w.size();
  std::vector<int> m(r, 1), n(r, 1);
  auto advance = [&](std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (++v[i] <= order) return true;
      v[i] = 1;
    }
    return false;
  };
  do {
    bool decreasing = true;
    for (std::size_t i = 1; i < r; ++i) decreasing = decreasing && m[i - 1] > m[i];
    if (!decreasing) continue;
    do {
      long e = 0;
      for (std::size_t i = 0; i < r; ++i) e += static_cast<long>(m[i]) * n[i];
      if (e > order) continue;
      Rational t = 1;
      for (std::size_t i = 0; i < r; ++i) {
        for (int j = 0; j < w[i].k - 1; ++j) t *= n[i];
        for (int j = 0; j < w[i].d; ++j) t *= m[i];
        t /= Rational(factorial(w[i].k - 1));
      }
      out[static_cast<std::size_t>(e)] += t;
    } while (advance(n));
  } while (advance(m));
  return out;
}

std::vector<Rational> sigma(int s, int order) {
  std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int n = 1; n <= order; ++n)
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) {
        Integer p = 1;
        for (int j = 0; j < s; ++j) p *= d;
        out[static_cast<std::size_t>(n)] += Rational(p);
      }
  return out;
}

}  // namespace

TEST_CASE("g-series coefficients") {
  const QSeries g10 = g_series(make_word({1}, {0}), 6);
  CHECK(g10[1] == 1);
  CHECK(g10[2] == 2);
  const QSeries g20 = g_series(make_word({2}, {0}), 8);
  CHECK(g20[1] == 1);
  CHECK(g20[2] == 3);
  CHECK(g20[3] == 4);
  CHECK(g20[4] == 7);
  CHECK(g20.coefficients() == sigma(1, 8));
  CHECK(g_series(make_word({1}, {1}), 8) == g20);
  for (const Word& w : {make_word({2, 1}, {0, 1}), make_word({1, 1, 1}, {0, 0, 0}), make_word({3, 1}, {1, 0})})
    CHECK(g_series(w, 9).coefficients() == brute_g(w, 9));
  CHECK(g_series(Word{}, 5) == QSeries::constant(5, 1));
}

TEST_CASE("Eisenstein series") {
  const QSeries g2 = eisenstein_G(2, 6);
  CHECK(g2[0] == Rational(-1, 24));
  CHECK(g2[1] == 1);
  CHECK(g2[4] == 7);
  CHECK(eisenstein_G(4, 4)[0] == Rational(1, 1440));
  for (int k = 2; k <= 8; ++k) {
    QSeries tail = eisenstein_G(k, 20);
    tail[0] = 0;
    CHECK(tail == g_series(make_word({k}, {0}), 20));
    QSeries expected(20);
    const auto s = sigma(k - 1, 20);
    for (int n = 1; n <= 20; ++n) expected[n] = s[static_cast<std::size_t>(n)] / Rational(factorial(k - 1));
    CHECK(tail == expected);
  }
  CHECK_THROWS_AS(eisenstein_G(1, 3), std::invalid_argument);
  CHECK(eisenstein_coefficient_rank() == 3);
}

TEST_CASE("series arithmetic") {
  QSeries a(3), b(5);
  a[1] = 1;
  b[0] = 2;
  b[2] = 3;
  const QSeries p = a * b;
  CHECK(p.order() == 3);
  CHECK(p[1] == 2);
  CHECK(p[3] == 3);
  CHECK((a + b).order() == 3);
  CHECK(b.q_derivative()[2] == 6);
  CHECK_THROWS_AS(QSeries(-1), std::invalid_argument);
}

TEST_CASE("swap invariance of g") {
  CHECK(g_series(make_word({3}, {0}), 30) == Rational(1, 2) * g_series(make_word({1}, {2}), 30));
  CHECK(g_series(make_word({2, 1}, {0, 0}), 30) == g_series(make_word({1, 1}, {0, 1}), 30));
  for (int k = 0; k <= 6; ++k)
    for (const auto& w : words_of_weight(k)) REQUIRE(check_swap_invariance_g(w, 25));
  for (int k = 1; k <= 7; ++k)
    for (int d = 0; k + d <= 7; ++d) CHECK(check_depth1_symmetry(k, d, 25));
}

TEST_CASE("q-derivative intertwines D") {
  for (int k = 0; k <= 6; ++k)
    for (const auto& w : words_of_weight(k)) REQUIRE(check_D_intertwining(w, 25));
}

TEST_CASE("product modulo lower weight") {
  CHECK(check_lower_weight_stuffle(25));
  CHECK(lower_weight_defect(25) == Rational(-1, 12) * g_series(make_word({3}, {3}), 25));
  CHECK_FALSE(g_series(make_word({3}, {3}), 25)[1] == 0);
}

TEST_CASE("quasimodular identities as series") {
  const QSeries delta = eta_delta(25);
  CHECK(delta[1] == 1);
  CHECK(delta[2] == -24);
  CHECK(delta[3] == 252);
  CHECK(delta[4] == -1472);
  for (const auto& c : quasimodular_series_checks(30)) CHECK_MESSAGE(c.holds, c.name);
  CHECK(check_quasimodular_qseries(25));
  // A perturbed Ramanujan identity must fail.
  const Poly g2 = qmf_generator(2);
  CHECK_FALSE(evaluate_qmf(g2, 10).q_derivative() == evaluate_qmf(qmf_D(g2) + qmf_generator(4), 10));
}
