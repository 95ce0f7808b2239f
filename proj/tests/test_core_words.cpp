#include "doctest.h"
#include "oracles.hpp"

#include "fmes/enumerate.hpp"
#include "fmes/lincomb.hpp"
#include "fmes/poly.hpp"
#include "fmes/rational.hpp"
#include "fmes/word.hpp"

#include <random>

using namespace fmes;

TEST_CASE("rational arithmetic is exact and reduced") {
  Rational a = parse_rational("6/4");
  CHECK(to_string(a) == "3/2");
  CHECK(to_string(parse_rational("-7")) == "-7");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(factorial(6) == 720);
  CHECK(bernoulli(1) == rational(-1, 2));
  CHECK(bernoulli(2) == rational(1, 6));
  CHECK(bernoulli(4) == rational(-1, 30));
  CHECK(bernoulli(12) == rational(-691, 2730));
  CHECK(bernoulli(7) == 0);
}

TEST_CASE("letters validate their indices") {
  CHECK_THROWS_AS(make_letter(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_letter(1, -1), std::invalid_argument);
  CHECK(letter_weight(make_letter(2, 1)) == 3);
}

TEST_CASE("grade of words") {
  CHECK(grade(make_word({2}, {1})) == Grade{3, 1, 1});
  CHECK(grade(lwt0_word({1, 2})) == Grade{3, 0, 2});
  CHECK(grade(Word{}) == Grade{0, 0, 0});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 20);
  for (int t = 0; t < 50; ++t) {
    const auto& pool = words_of_weight(4);
    const Word& u = pool[static_cast<std::size_t>(pick(rng)) % pool.size()];
    const Word& v = words_of_weight(3)[static_cast<std::size_t>(pick(rng)) % 8];
    const Grade gu = grade(u), gv = grade(v), g = grade(concat(u, v));
    CHECK(g == Grade{gu.weight + gv.weight, gu.lwt + gv.lwt, gu.depth + gv.depth});
  }
}

TEST_CASE("rendering") {
  CHECK(to_string(Word{}) == "1");
  CHECK(to_string(lwt0_word({2, 3})) == "G[2,3]");
  CHECK(to_string(make_word({1, 2}, {0, 1})) == "G[{1,2},{0,1}]");
  CHECK(to_string(make_zword({2, 3})) == "z[2,3]");
  CHECK(to_string(make_bword({2, 0, 3})) == "b2 b0 b3");
  Element x = G(lwt0_word({2}), 3) + G(make_word({1}, {2}), rational(-1, 2)) + unit_element();
  CHECK(to_string(x) == "1 + 3*G[2] - 1/2*G[{1},{2}]");
}

TEST_CASE("homogeneous components") {
  Element x = G(lwt0_word({2})) + G(lwt0_word({3}));
  CHECK(homogeneous_component(x, 3) == G(lwt0_word({3})));
  CHECK(homogeneous_component(Element{}, 4).is_zero());
  Element y = G(lwt0_word({1, 1}), 2);
  CHECK(homogeneous_component(y, 2) == y);
  Element sum;
  for (int k = 0; k <= 3; ++k) sum += homogeneous_component(x, k);
  CHECK(sum == x);
}

TEST_CASE("word counts") {
  CHECK(count_words(0) == 1);
  CHECK(count_words(3) == 8);
  CHECK(count_words(8) == 987);
  CHECK(count_words(12) == 46368);
  for (int k = 0; k <= 8; ++k) {
    CHECK(count_words(k) == oracle::count_words_brute(k));
    CHECK(words_of_weight(k).size() == count_words(k));
  }
  const auto& ws = words_of_weight(5);
  CHECK(std::is_sorted(ws.begin(), ws.end()));
  CHECK(std::adjacent_find(ws.begin(), ws.end()) == ws.end());
}

TEST_CASE("linear combinations form a vector space") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int t = 0; t < 30; ++t) {
    Element x, y;
    for (const auto& w : words_of_weight(4)) {
      x.add(w, coef(rng));
      y.add(w, rational(coef(rng), 3));
    }
    CHECK((x + y) - y == x);
    CHECK(x + y == y + x);
    CHECK(rational(2, 1) * (x + y) == rational(2, 1) * x + rational(2, 1) * y);
  }
  CHECK((G(lwt0_word({2})) - G(lwt0_word({2}))).is_zero());
}

TEST_CASE("xy encoding round trip") {
  for (int k = 1; k <= 6; ++k)
    for (const auto& z : zwords_of_weight(k)) CHECK(from_xy(to_xy(z)) == z);
  CHECK_THROWS(from_xy(XYWord{XY::y, XY::x}));
}

TEST_CASE("polynomials") {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly p = (x + y).pow(3);
  CHECK(p.coefficient({2, 1}) == 3);
  CHECK(Poly::multiply(p, x, 3).is_zero());
  CHECK(p.derivative(0).coefficient({1, 1}) == 6);
  Poly q = p.substitute({y, x});
  CHECK(q == p);
  CHECK((x * y).render({"X", "Y"}) == "X*Y");
}
