#include "doctest.h"

#include "fmes/derivations.hpp"
#include "fmes/modular.hpp"
#include "fmes/qshuffle.hpp"
#include "fmes/swap.hpp"

using namespace fmes;

namespace {

QuotientEngine& engine() {
  static QuotientEngine e(EngineOptions{.max_weight = 8});
  return e;
}

Element Gk(int k) { return G(make_word({k}, {0})); }

}  // namespace

TEST_CASE("depth-two double shuffle") {
  for (int n = 2; n <= 7; ++n)
    for (int k1 = 1; k1 < n; ++k1)
      for (int k2 = 1; k1 + k2 <= n; ++k2)
        for (int d1 = 0; k1 + k2 + d1 <= n; ++d1) {
          const int d2 = n - k1 - k2 - d1;
          const auto c = verify_depth2_dsh(engine(), k1, k2, d1, d2);
          CHECK_MESSAGE(c.holds, c.name);
          // The second expansion is the conjugated product taken literally.
          const Element a = G(make_word({k1}, {d1})), b = G(make_word({k2}, {d2}));
          CHECK(depth2_swap_side(k1, k2, d1, d2) == swap(stuffle(swap(a), swap(b))));
        }
  CHECK(verify_depth2_dsh(engine(), 2, 3, 1, 2).holds);
  CHECK_THROWS_AS(verify_depth2_dsh(engine(), 0, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("even-weight relations and product corollaries") {
  for (int k = 4; k <= 8; k += 2)
    for (int k1 = 1; k1 < k; ++k1) {
      const auto c = verify_relpevevk(engine(), k1, k - k1);
      CHECK_MESSAGE(c.holds, c.name << " residual " << to_string(c.residual));
    }
  CHECK_THROWS_AS(relpevevk_difference(2, 3), std::invalid_argument);
  for (int k : {4, 6, 8}) CHECK(verify_mfprod_first(engine(), k).holds);
  for (int k : {6, 8}) CHECK(verify_mfprod_second(engine(), k).holds);
  CHECK(engine().in_ideal(Gk(8) - Rational(6, 7) * stuffle(Gk(4), Gk(4)), IdealKind::swap, 8));
  CHECK_FALSE(engine().in_ideal(Gk(8) - stuffle(Gk(4), Gk(4)), IdealKind::swap, 8));
}

TEST_CASE("Euler coefficients and decompositions") {
  CHECK(euler_coefficient(1) == 1);
  CHECK(euler_coefficient(2) == Rational(2, 5));
  CHECK(euler_coefficient(3) == Rational(8, 35));
  for (int m = 1; m <= 4; ++m) {
    const auto e = euler_decomposition(engine(), m);
    CHECK_MESSAGE(e.check.holds, e.check.name);
  }
  const auto e2 = euler_decomposition(engine(), 2);
  CHECK(e2.potential == Rational(1, 5) * qmf_generator(2));
}

TEST_CASE("Ramanujan and Chazy") {
  for (const auto& c : verify_ramanujan(engine())) CHECK_MESSAGE(c.holds, c.name);
  CHECK(verify_chazy(engine()).holds);
  // The polynomial model of D is an sl2 partner of W.
  const Poly g2 = qmf_generator(2), g4 = qmf_generator(4), g6 = qmf_generator(6);
  for (const Poly& p : {g2, g4 * g6, g2 * g2 * g4, g6 * g6})
    CHECK(qmf_W(qmf_D(p)) - qmf_D(qmf_W(p)) == Rational(2) * qmf_D(p));
}

TEST_CASE("the weight-12 cusp form") {
  CHECK(2400 * factorial(6) == 1728000);
  CHECK(420 * factorial(7) == 2116800);
  const Poly e4 = eisenstein_normalisation(4) * qmf_generator(4);
  const Poly e6 = eisenstein_normalisation(6) * qmf_generator(6);
  CHECK(delta_cusp_form() == Rational(1, 1728) * (e4.pow(3) - e6.pow(2)));
  CHECK(eisenstein_normalisation(2) == -24);
  const auto cert = verify_cusp_properties(engine());
  CHECK(cert.matches_display);
  CHECK(cert.free_of_pure_power);
  CHECK(cert.derivative_identity);
  for (const auto& c : cert.supporting) CHECK_MESSAGE(c.holds, c.name);
  CHECK(cert.holds());
}

TEST_CASE("Rankin-Cohen brackets") {
  CHECK(rankin_cohen(Gk(4), Gk(6), 0, 4, 6) == stuffle(Gk(4), Gk(6)));
  CHECK(rankin_cohen(Gk(4), Gk(4), 1, 4, 4).is_zero());
  CHECK_THROWS_AS(rankin_cohen(Gk(4), Gk(6), 1, 6, 6), std::invalid_argument);
  for (int n = 0; n <= 4; ++n) CHECK(verify_rc_delta_closure(engine(), n).holds);
  // The polynomial model of the bracket agrees with the quotient.
  const Element bracket = rankin_cohen(Gk(4), Gk(2), 1, 4, 2);
  CHECK(max_weight(bracket) == 8);
  const Poly rc = rankin_cohen(qmf_generator(4), qmf_generator(2), 1);
  CHECK(engine().in_ideal(bracket - expand_qmf(rc), IdealKind::swap, 8));
}

TEST_CASE("modular forms split off the cusp forms") {
  for (int k : {4, 6, 8}) {
    const auto d = modular_decomposition(engine(), k);
    CHECK(d.checked_in_quotient);
    CHECK(d.verified);
    CHECK(d.modular_dim == 1);
    CHECK(d.cusp_dim == 0);
  }
  const auto d10 = modular_decomposition(engine(), 10);
  CHECK_FALSE(d10.checked_in_quotient);
  CHECK(d10.cusp_dim == 0);
  CHECK(modular_decomposition(engine(), 12).cusp_dim == 1);
}
