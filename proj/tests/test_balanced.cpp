#include "doctest.h"
#include "oracles.hpp"

#include "fmes/balanced.hpp"
#include "fmes/derivations.hpp"
#include "fmes/enumerate.hpp"
#include "fmes/qshuffle.hpp"
#include "fmes/swap.hpp"

#include <random>

using namespace fmes;

namespace {

BWord random_bword(std::mt19937_64& rng, int max_weight) {
  std::uniform_int_distribution<int> wd(1, max_weight);
  const auto& pool = bwords_of_weight(wd(rng));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

}  // namespace

TEST_CASE("balanced stuffle") {
  const BWord b1 = make_bword({1}), b0 = make_bword({0});
  const BElement p = stuffle_b(b1, b1);
  CHECK(p.coefficient(make_bword({1, 1})) == 2);
  CHECK(p.coefficient(make_bword({2})) == 1);
  CHECK(p.size() == 2);
  const BElement q = stuffle_b(b1, b0);
  CHECK(q.coefficient(make_bword({1, 0})) == 1);
  CHECK(q.coefficient(make_bword({0, 1})) == 1);
  CHECK(q.size() == 2);
  CHECK(stuffle_b(BWord{}, b1) == BElement(b1));
  for (int k = 1; k <= 5; ++k)
    for (const auto& u : bwords_of_weight(k))
      for (const auto& v : bwords_of_weight(6 - k))
        for (const auto& [w, c] : stuffle_b(u, v)) REQUIRE(w[0].i != 0);
}

TEST_CASE("tau") {
  CHECK(tau(make_bword({2})) == make_bword({1, 0}));
  CHECK(tau(make_bword({2, 0})) == make_bword({2, 0}));
  CHECK(tau(make_bword({3, 0, 1})) == make_bword({1, 2, 0, 0}));
  CHECK_THROWS_AS(tau(make_bword({0, 1})), std::invalid_argument);
  std::mt19937_64 rng(21);
  for (int s = 0; s < 200; ++s) {
    const BWord w = random_bword(rng, 8);
    REQUIRE(tau(tau(w)) == w);
    REQUIRE(tau(w).weight() == w.weight());
  }
}

TEST_CASE("the isomorphism to the A-alphabet") {
  CHECK(phi_iso(make_bword({4})) == Element(make_word({4}, {0})));
  CHECK(phi_iso(make_bword({2, 0, 0})) == Rational(1, 2) * Element(make_word({2}, {2})));
  CHECK_THROWS_AS(phi_iso(make_bword({0})), std::invalid_argument);
  for (int k = 0; k <= 6; ++k) {
    const auto& bw = bwords_of_weight(k);
    const auto& aw = words_of_weight(k);
    CHECK(bw.size() == aw.size());
    std::vector<Element> images;
    for (const auto& w : bw) {
      images.push_back(phi_iso(w));
      REQUIRE(phi_inverse(images.back()) == BElement(w));
      REQUIRE(swap(phi_iso(w)) == phi_iso(tau(w)));
    }
    CHECK(oracle::dense_rank(images, aw) == aw.size());
    for (const auto& w : aw) REQUIRE(phi_iso(phi_inverse(w)) == Element(w));
  }
}

TEST_CASE("the isomorphism respects products") {
  std::mt19937_64 rng(22);
  for (int s = 0; s < 100; ++s) {
    BWord u = random_bword(rng, 5), v = random_bword(rng, 6 - u.weight());
    const Element lhs = phi_iso(stuffle_b(u, v));
    Element rhs;
    for (const auto& [a, x] : phi_iso(u))
      for (const auto& [b, y] : phi_iso(v)) rhs.add(oracle::quasi_shuffle<Letter>(a, b, stuffle_diamond()), x * y);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("D in balanced coordinates") {
  CHECK(D_balanced(make_bword({1})) == BElement(make_bword({2, 0})));
  CHECK(D_balanced(make_bword({2})) == 2 * BElement(make_bword({3, 0})));
  std::mt19937_64 rng(23);
  for (int s = 0; s < 100; ++s) {
    const BWord w = random_bword(rng, 6);
    REQUIRE(phi_iso(D_balanced(w)) == apply_D(phi_iso(w)));
  }
}

TEST_CASE("balanced quotient dimensions") {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 7, 13};
  for (int k = 0; k <= 5; ++k) CHECK(balanced_quotient_dim(k) == expected[static_cast<std::size_t>(k)]);
}
