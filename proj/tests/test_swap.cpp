#include "doctest.h"

#include "fmes/enumerate.hpp"
#include "fmes/swap.hpp"

#include <random>

using namespace fmes;

TEST_CASE("depth-one swap") {
  for (int k = 1; k <= 6; ++k)
    for (int d = 0; k + d <= 7; ++d) {
      const Rational c(factorial(d), factorial(k - 1));
      Rational cc = c;
      cc.canonicalize();
      CHECK(swap_word(make_word({k}, {d})) == G(make_word({d + 1}, {k - 1}), cc));
    }
  CHECK(swap_word(lwt0_word({3})) == G(make_word({1}, {2}), rational(1, 2)));
  CHECK(swap_coeff_formula(make_word({1}, {1})) == G(lwt0_word({2})));
  CHECK(swap_coeff_formula(make_word({2}, {1})) == G(make_word({2}, {1})));
}

TEST_CASE("depth-two swap") {
  CHECK(swap_word(lwt0_word({1, 1})) == G(lwt0_word({1, 1})));
  CHECK(swap_word(lwt0_word({2, 1})) == G(make_word({1, 1}, {0, 1})));
  CHECK(swap(Element{}).is_zero());
  CHECK(swap_word(Word{}) == unit_element());
}

TEST_CASE("swap is a grading-compatible involution") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& w : words_of_weight(n)) {
      const Element s = swap_word(w);
      REQUIRE(swap(s) == G(w));
      for (const auto& [u, c] : s) {
        REQUIRE(u.weight() == w.weight());
        REQUIRE(u.depth() == w.depth());
        REQUIRE(lower_weight(u) == w.weight() - w.depth() - lower_weight(w));
      }
    }
}

TEST_CASE("closed coefficient formula matches the substitution") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& w : words_of_weight(n)) REQUIRE(swap_coeff_formula(w) == swap_word(w));
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> pick(0, words_of_weight(8).size() - 1);
  for (int t = 0; t < 500; ++t) {
    const Word& w = words_of_weight(7 + t % 2)[pick(rng) % words_of_weight(7 + t % 2).size()];
    REQUIRE(swap_coeff_formula(w) == swap_word(w));
  }
}

TEST_CASE("swap exchanges the two sub-alphabets") {
  CHECK(swap_restricts(G(make_word({1}, {2})), true) == G(lwt0_word({3}), 2));
  CHECK(swap_restricts(G(make_word({1, 1}, {0, 1})), false) == G(lwt0_word({2, 1})));
  CHECK(swap_restricts(Element{}, true).is_zero());
  for (int n = 1; n <= 6; ++n)
    for (const auto& w : words_of_weight(n)) {
      if (!in_upper_alphabet(w) && !in_lower_alphabet(w)) continue;
      const bool upper = in_upper_alphabet(w), lower = in_lower_alphabet(w);
      for (const auto& [u, c] : swap_restricts(G(w), true)) {
        if (upper) REQUIRE(in_lower_alphabet(u));
        if (lower) REQUIRE(in_upper_alphabet(u));
      }
      REQUIRE(swap_restricts(G(w), true) == swap_restricts(G(w), false));
    }
}
