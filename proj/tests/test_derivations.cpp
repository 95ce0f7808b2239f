#include "doctest.h"

#include "fmes/derivations.hpp"
#include "fmes/enumerate.hpp"
#include "fmes/swap.hpp"

#include <random>

using namespace fmes;

namespace {

Word w0(std::vector<int> ks) { return lwt0_word(ks); }
Element one() { return unit_element(); }

template <class Fn>
void for_words(int max_weight, Fn&& fn) {
  for (int n = 0; n <= max_weight; ++n)
    for (const auto& w : words_of_weight(n)) fn(w);
}

void check_leibniz_exhaustive(const Derivation& d, int max_weight) {
  for (int n = 0; n <= max_weight; ++n)
    for (int m = 0; m <= max_weight - n; ++m)
      for (const auto& u : words_of_weight(n))
        for (const auto& v : words_of_weight(m)) {
          if (v < u) continue;
          const Element lhs = d(stuffle(u, v));
          const Element rhs = stuffle(d(G(u)), G(v)) + stuffle(G(u), d(G(v)));
          REQUIRE_MESSAGE(lhs == rhs, d.name << " on " << to_string(u) << " * " << to_string(v));
        }
}

}  // namespace

TEST_CASE("D, W and omega on examples") {
  CHECK(apply_D(G(w0({1}))) == G(make_word({2}, {1})));
  CHECK(apply_D(G(w0({1, 2}))) == G(make_word({2, 2}, {1, 0})) + G(make_word({1, 3}, {0, 1}), 2));
  CHECK(apply_D(one()).is_zero());
  CHECK(apply_W(G(make_word({2}, {1}))) == G(make_word({2}, {1}), 3));
  CHECK(apply_W(one()).is_zero());
  CHECK(apply_W(G(w0({1, 1}))) == G(w0({1, 1}), 2));
  CHECK(apply_omega(G(w0({1}))) == one());
  CHECK(apply_omega(G(w0({2}))).is_zero());
  CHECK(apply_omega(G(w0({1, 1}))) == G(w0({1})));
}

TEST_CASE("delta on examples") {
  CHECK(apply_delta(G(w0({2}))) == one() * rational(-1, 2));
  CHECK(apply_delta(G(make_word({2}, {1}))) == G(w0({1})));
  CHECK(apply_delta(G(make_word({1}, {1}))) == one() * rational(-1, 2));
  CHECK(apply_delta_lwt0(w0({2})) == one() * rational(-1, 2));
  CHECK(apply_delta_lwt0(w0({1, 1})) == one() * rational(1, 4));
  CHECK(apply_delta_lwt0(w0({1, 2})) == G(w0({1}), rational(1, 2)));
  CHECK_THROWS_AS(apply_delta_lwt0(make_word({2}, {1})), std::invalid_argument);
}

TEST_CASE("closed lower-weight-zero forms") {
  for_words(7, [](const Word& w) {
    if (lower_weight(w) == 0) REQUIRE(apply_delta_lwt0(w) == apply_delta(G(w)));
  });
  CHECK(apply_D_lwt0(w0({1})) == G(w0({3})) - G(w0({2, 1})));
  CHECK(apply_D_lwt0(w0({3})) == G(w0({5})) - G(w0({3, 2}), 2) - G(w0({4, 1}), 6));
}

TEST_CASE("mould form of delta and omega agrees with the coefficient form") {
  const auto dm = delta_mould();
  const auto om = omega_mould();
  for (int n = 0; n <= 6; ++n)
    for (const auto& w : words_of_weight(n)) {
      if (w.depth() > 3) continue;
      REQUIRE(apply_mould(dm, w) == apply_delta(G(w)));
      REQUIRE(apply_mould(om, w) == apply_omega(G(w)));
    }
}

TEST_CASE("constructed derivations agree with the coefficient form") {
  const auto omega = omega_constructed();
  const auto delta = delta_constructed();
  for_words(6, [&](const Word& w) {
    REQUIRE(omega(w) == apply_omega(G(w)));
    for (int i = 1; i <= 5; ++i) REQUIRE(delta_component_constructed(i)(w) == apply_delta_component(i, G(w)));
    REQUIRE(delta(w) == apply_delta(G(w)));
  });
}

TEST_CASE("Leibniz rule") {
  for (const auto& d : {op_D(), op_W(), op_omega(), op_delta()}) check_leibniz_exhaustive(d, 6);
  for (int i = 1; i <= 5; ++i) check_leibniz_exhaustive(op_delta_component(i), 5);
}

TEST_CASE("swap equivariance") {
  for (const auto& d : {op_D(), op_W(), op_omega(), op_delta()})
    for_words(6, [&](const Word& w) { REQUIRE_MESSAGE(swap(d(w)) == d(swap_word(w)), d.name << " " << to_string(w)); });
}

TEST_CASE("sl2 relations") {
  const auto D = op_D(), W = op_W(), delta = op_delta();
  for_words(6, [&](const Word& w) {
    REQUIRE(commutator(W, D)(w) == D(w) * Rational(2));
    REQUIRE(commutator(W, delta)(w) == delta(w) * Rational(-2));
    REQUIRE(commutator(delta, D)(w) == W(w));
  });
  for_words(5, [&](const Word& w) {
    for (int i = 1; i <= 5; ++i) {
      const auto di = op_delta_component(i);
      REQUIRE(commutator(di, W)(w) == di(w) * Rational(2));
      if (i == 1) REQUIRE(commutator(di, D)(w) == W(w));
      if (i == 2 || i == 3) REQUIRE(commutator(di, D)(w).is_zero());
    }
  });
  const auto d45 = linear_combination<Letter>({{1, op_delta_component(4)}, {1, op_delta_component(5)}}, "d45");
  for_words(6, [&](const Word& w) { REQUIRE(commutator(d45, D)(w).is_zero()); });
  // Separately the two components do not commute with D.
  CHECK(commutator(op_delta_component(4), D)(w0({1, 2})) == G(make_word({2}, {1}), -1));
  CHECK(commutator(op_delta_component(5), D)(w0({1, 2})) == G(make_word({2}, {1})));
  CHECK(commutator(delta, D)(w0({1})) == G(w0({1})));
  CHECK(commutator(W, D)(w0({2})) == G(make_word({3}, {1}), 4));
}

TEST_CASE("polynomial representation in G(1)") {
  const Element a = G(w0({1}));
  const auto omega = op_omega();
  auto parts = polynomial_representation(a, omega, a);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].is_zero());
  CHECK(parts[1] == one());
  const Element aa = G(w0({1, 1}));
  parts = polynomial_representation(aa, omega, a);
  CHECK(parts.size() == 3);
  CHECK(reconstruct(parts, a) == aa);
  for (const auto& f : parts) CHECK(omega(f).is_zero());
  parts = polynomial_representation(G(w0({2, 1})) - G(w0({3})) + G(make_word({2}, {1})), omega, a);
  CHECK(omega(parts[0]).is_zero());
  CHECK_THROWS_AS(polynomial_representation(aa, omega, G(w0({2}))), std::invalid_argument);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> coef(-3, 3), wt(1, 6);
  for (int t = 0; t < 100; ++t) {
    Element x;
    const auto& pool = words_of_weight(wt(rng));
    for (int s = 0; s < 4; ++s) x.add(pool[static_cast<std::size_t>(rng() % pool.size())], coef(rng));
    const auto rep = polynomial_representation(x, omega, a);
    REQUIRE(reconstruct(rep, a) == x);
    for (const auto& f : rep) REQUIRE(omega(f).is_zero());
  }
}

TEST_CASE("weight -3 maps") {
  const auto t = op_t();
  CHECK(t(w0({3})) == one());
  CHECK(t(w0({2, 1})) == one() * Rational(-1));
  CHECK(t(w0({1, 1, 1})) == apply_t_lwt0(w0({1, 1, 1})));
  CHECK(apply_t_lwt0(w0({1, 1, 1})).coefficient(Word{}) == rational(1, 3));
  for_words(7, [&](const Word& w) {
    if (lower_weight(w) == 0) REQUIRE(t(w) == apply_t_lwt0(w));
  });
  const auto od = op_omega_delta();
  CHECK(od(w0({1})).is_zero());
  // t(G(3)) = 1 while [omega,delta] G(3) = 0, and [omega,delta] is nonzero somewhere.
  CHECK(od(w0({3})).is_zero());
  bool od_nonzero = false;
  for_words(4, [&](const Word& w) { od_nonzero = od_nonzero || !od(w).is_zero(); });
  CHECK(od_nonzero);
}
