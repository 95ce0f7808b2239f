#include "doctest.h"
#include "oracles.hpp"

#include "fmes/enumerate.hpp"
#include "fmes/qshuffle.hpp"

#include <random>

using namespace fmes;

namespace {

Word w0(std::vector<int> ks) { return lwt0_word(ks); }

Word random_word(std::mt19937_64& rng, int max_weight) {
  std::uniform_int_distribution<int> wd(0, max_weight);
  const auto& pool = words_of_weight(wd(rng));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

Element shuffle_letters(const Element& x, const Element& y) { return quasi_shuffle(x, y, zero_diamond<Letter>()); }

void check_leibniz(const Derivation& d, int samples, int max_weight, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < samples; ++t) {
    const Word u = random_word(rng, max_weight / 2 + 1);
    const Word v = random_word(rng, max_weight - u.weight());
    const Element lhs = d(stuffle(u, v));
    const Element rhs = stuffle(d(Element(u)), Element(v)) + stuffle(Element(u), d(Element(v)));
    REQUIRE(lhs == rhs);
  }
}

LinComb<Letter> letter(int k, int d, Rational c = 1) { return LinComb<Letter>(Letter{k, d}, c); }

}  // namespace

TEST_CASE("stuffle examples") {
  CHECK(stuffle(w0({1}), w0({2})) == G(w0({1, 2})) + G(w0({2, 1})) + G(w0({3})));
  CHECK(stuffle(w0({1}), w0({1})) == G(w0({1, 1}), 2) + G(w0({2})));
  CHECK(stuffle(make_word({2}, {1}), make_word({3}, {2})) ==
        G(make_word({2, 3}, {1, 2})) + G(make_word({3, 2}, {2, 1})) + G(make_word({5}, {3})));
  CHECK(stuffle(Word{}, w0({4, 1})) == G(w0({4, 1})));
  const Word a = make_word({1}, {1}), bc = make_word({2, 3}, {0, 2});
  const Element five = G(make_word({1, 2, 3}, {1, 0, 2})) + G(make_word({2, 1, 3}, {0, 1, 2})) +
                       G(make_word({2, 3, 1}, {0, 2, 1})) + G(make_word({3, 3}, {1, 2})) +
                       G(make_word({2, 4}, {0, 3}));
  CHECK(stuffle(a, bc) == five);
}

TEST_CASE("stuffle agrees with the surjection oracle") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Word u = random_word(rng, 5), v = random_word(rng, 4);
    CHECK(stuffle(u, v) == oracle::quasi_shuffle<Letter>(u, v, stuffle_diamond()));
  }
}

TEST_CASE("products on the classical alphabet") {
  CHECK(stuffle_z(make_zword({1}), make_zword({2})) ==
        ZElement(make_zword({1, 2})) + ZElement(make_zword({2, 1})) + ZElement(make_zword({3})));
  CHECK(shuffle_z(make_zword({1}), make_zword({2})) ==
        ZElement(make_zword({1, 2})) + ZElement(make_zword({2, 1}), 2));
  CHECK(shuffle_z(make_zword({2}), make_zword({3})) ==
        ZElement(make_zword({2, 3})) + ZElement(make_zword({3, 2}), 3) + ZElement(make_zword({4, 1}), 6));
  CHECK(index_shuffle(make_zword({1}), make_zword({2})) ==
        ZElement(make_zword({1, 2})) + ZElement(make_zword({2, 1})));
  CHECK(shuffle_z(make_zword({2}), make_zword({3})) ==
        [] {
          ZElement out;
          for (const auto& [w, c] : oracle::quasi_shuffle<XY>(to_xy(make_zword({2})), to_xy(make_zword({3})),
                                                               zero_diamond<XY>()))
            out.add(from_xy(w), c);
          return out;
        }());
}

TEST_CASE("commutativity and associativity up to weight 8") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const Word u = random_word(rng, 3), v = random_word(rng, 3), w = random_word(rng, 2);
    CHECK(stuffle(u, v) == stuffle(v, u));
    CHECK(stuffle(stuffle(Element(u), Element(v)), Element(w)) ==
          stuffle(Element(u), stuffle(Element(v), Element(w))));
    const ZWord a = zwords_of_weight(3)[t % 4], b = zwords_of_weight(3)[(t / 4) % 4], c = zwords_of_weight(2)[t % 2];
    CHECK(shuffle_z(a, b) == shuffle_z(b, a));
    CHECK(shuffle_z(shuffle_z(ZElement(a), ZElement(b)), ZElement(c)) ==
          shuffle_z(ZElement(a), shuffle_z(ZElement(b), ZElement(c))));
    CHECK(stuffle_z(stuffle_z(ZElement(a), ZElement(b)), ZElement(c)) ==
          stuffle_z(ZElement(a), stuffle_z(ZElement(b), ZElement(c))));
    CHECK(index_shuffle(a, b) == index_shuffle(b, a));
  }
}

TEST_CASE("exp and log") {
  const Word aa = w0({1, 1});
  CHECK(log_diamond(w0({3}), stuffle_diamond()) == G(w0({3})));
  CHECK(log_diamond(aa, stuffle_diamond()) == G(aa) - G(w0({2}), rational(1, 2)));
  CHECK(exp_diamond(aa, stuffle_diamond()) == G(aa) + G(w0({2}), rational(1, 2)));
  for (int k = 0; k <= 6; ++k)
    for (const auto& w : words_of_weight(k)) {
      REQUIRE(exp_diamond(log_diamond(w, stuffle_diamond()), stuffle_diamond()) == G(w));
      REQUIRE(log_diamond(exp_diamond(w, stuffle_diamond()), stuffle_diamond()) == G(w));
    }
  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    const Word u = random_word(rng, 4), v = random_word(rng, 7 - u.weight());
    CHECK(log_diamond(stuffle(u, v), stuffle_diamond()) ==
          shuffle_letters(log_diamond(u, stuffle_diamond()), log_diamond(v, stuffle_diamond())));
  }
}

TEST_CASE("letterwise derivations") {
  LetterMap<Letter> phi = [](const Letter& a) { return letter(a.k + 1, a.d + 1, a.k); };
  auto theta = derivation_from_letter_map<Letter>(phi, stuffle_diamond(), default_letter_sampler(), 2, "theta");
  CHECK(theta(w0({1, 2})) == G(make_word({2, 2}, {1, 0})) + G(make_word({1, 3}, {0, 1}), 2));
  check_leibniz(theta, 200, 7, 1);
  CHECK(theta(stuffle(w0({1}), w0({1}))) ==
        stuffle(theta(G(w0({1}))), G(w0({1}))) + stuffle(G(w0({1})), theta(G(w0({1})))));

  LetterMap<Letter> zero = [](const Letter&) { return LinComb<Letter>(); };
  auto nil = derivation_from_letter_map<Letter>(zero, stuffle_diamond(), default_letter_sampler(), 0, "0");
  CHECK(nil(w0({2, 1})).is_zero());

  LetterMap<Letter> bad = [](const Letter& a) { return letter(a.k, a.d); };
  CHECK_THROWS_AS(derivation_from_letter_map<Letter>(bad, stuffle_diamond(), default_letter_sampler(), 0, "bad"),
                  HypothesisFailure);

  LetterMap<Letter> psi = [](const Letter& a) { return letter(a.k, a.d + 1, a.d + 2 * a.k); };
  auto theta_psi = derivation_from_letter_map<Letter>(psi, stuffle_diamond(), default_letter_sampler(), 1, "psi");
  LetterMap<Letter> bracket = [&](const Letter& a) {
    LinComb<Letter> out;
    for (const auto& [b, c] : psi(a)) out.add(phi(b), c);
    for (const auto& [b, c] : phi(a)) out.add(psi(b), -c);
    return out;
  };
  auto theta_bracket =
      derivation_from_letter_map<Letter>(bracket, stuffle_diamond(), default_letter_sampler(), 3, "bracket");
  const auto comm = commutator(theta, theta_psi);
  for (int k = 0; k <= 5; ++k)
    for (const auto& w : words_of_weight(k)) REQUIRE(comm(w) == theta_bracket(w));
}

TEST_CASE("gamma-corrected derivations") {
  LetterMap<Letter> phi = [](const Letter& a) {
    return a.k > 1 ? letter(a.k - 1, a.d - 1, a.d) : LinComb<Letter>();
  };
  LetterMap<Letter> phi_safe = [](const Letter& a) {
    return (a.k > 1 && a.d > 0) ? letter(a.k - 1, a.d - 1, a.d) : LinComb<Letter>();
  };
  CHECK(gamma_of(phi_safe, stuffle_diamond(), Letter{1, 1}, Letter{1, 1}) == letter(1, 1, 2));
  auto d1 = derivation_with_gamma<Letter>(phi_safe, stuffle_diamond(), default_letter_sampler(), -2, "d1");
  check_leibniz(d1, 200, 7, 2);
  LetterMap<Letter> phi_true = [](const Letter& a) { return letter(a.k + 1, a.d + 1, a.k); };
  auto plain = derivation_from_letter_map<Letter>(phi_true, stuffle_diamond(), default_letter_sampler(), 2, "p");
  auto corrected = derivation_with_gamma<Letter>(phi_true, stuffle_diamond(), default_letter_sampler(), 2, "c");
  for (const auto& w : words_of_weight(5)) REQUIRE(plain(w) == corrected(w));
  (void)phi;
}

TEST_CASE("boundary derivations") {
  auto right1 = boundary_derivation(Letter{1, 0}, Side::right, BoundaryMode::diamond, stuffle_diamond(), -1, "r1");
  CHECK(right1(w0({2, 1})) == G(w0({2})));
  auto right2 = boundary_derivation(Letter{2, 0}, Side::right, BoundaryMode::diamond, stuffle_diamond(), -2, "r2");
  CHECK(right2(w0({1, 1})) == unit_element() * rational(-1, 2));
  auto zleft = boundary_derivation(ZLetter{1}, Side::left, BoundaryMode::shuffle, zero_diamond<ZLetter>(), -1, "z");
  CHECK(zleft(make_zword({2, 1})).is_zero());
  CHECK(zleft(make_zword({1, 2})) == ZElement(make_zword({2})));
  for (Letter a : {Letter{1, 0}, Letter{2, 0}, Letter{1, 1}, Letter{2, 1}})
    for (Side side : {Side::left, Side::right}) {
      check_leibniz(boundary_derivation(a, side, BoundaryMode::diamond, stuffle_diamond(), -letter_weight(a), "b"), 60,
                    7, 4);
      auto sh = boundary_derivation(a, side, BoundaryMode::shuffle, zero_diamond<Letter>(), -letter_weight(a), "s");
      std::mt19937_64 rng(6);
      for (int t = 0; t < 60; ++t) {
        const Word u = random_word(rng, 4), v = random_word(rng, 3);
        REQUIRE(sh(shuffle_letters(G(u), G(v))) == shuffle_letters(sh(G(u)), G(v)) + shuffle_letters(G(u), sh(G(v))));
      }
    }
}

TEST_CASE("neighbour derivations") {
  auto in_s = [](const Letter& a) { return a.k == 1; };
  auto phi_a = [](const Letter& a, const Letter& b) {
    return b.k > 1 ? letter(b.k - 1, b.d + a.d) : LinComb<Letter>();
  };
  auto theta = neighbor_derivation<Letter>(in_s, phi_a, stuffle_diamond(), default_letter_sampler(), 0, "S");
  CHECK(theta(w0({1})).is_zero());
  CHECK(theta(make_word({3}, {2})).is_zero());
  check_leibniz(theta, 200, 7, 8);
  CHECK(theta(stuffle(w0({1}), w0({2}))) ==
        stuffle(theta(G(w0({1}))), G(w0({2}))) + stuffle(G(w0({1})), theta(G(w0({2})))));
  auto bad_phi = [](const Letter&, const Letter& b) { return letter(b.k, b.d); };
  CHECK_THROWS_AS(neighbor_derivation<Letter>(in_s, bad_phi, stuffle_diamond(), default_letter_sampler(), 0, "x"),
                  HypothesisFailure);
}

TEST_CASE("balanced stuffle") {
  CHECK(stuffle_b(make_bword({1}), make_bword({1})) == BElement(make_bword({1, 1}), 2) + BElement(make_bword({2})));
  CHECK(stuffle_b(make_bword({1}), make_bword({0})) == BElement(make_bword({1, 0})) + BElement(make_bword({0, 1})));
  CHECK(stuffle_b(BWord{}, make_bword({2, 0})) == BElement(make_bword({2, 0})));
}

TEST_CASE("concurrent stuffle callers share one cache") {
  clear_product_caches();
  std::vector<Element> results(8);
#pragma omp parallel for
  for (int i = 0; i < 8; ++i) results[static_cast<std::size_t>(i)] = stuffle(w0({1, 2, 1}), w0({2, 2}));
  for (const auto& r : results) CHECK(r == results.front());
  const auto stats = product_cache_stats();
  CHECK(stats.entries == 1);
}
