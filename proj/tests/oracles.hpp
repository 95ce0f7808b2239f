#pragma once

// Independent brute-force references used only by the tests.

#include "fmes/lincomb.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

using fmes::BasicWord;
using fmes::LinComb;
using fmes::Rational;

// Quasi-shuffle via order-preserving surjections: positions of u and v are sent
// strictly increasingly into slots 1..n, every slot hit once or by one letter of each.
template <class L>
LinComb<BasicWord<L>> quasi_shuffle(const BasicWord<L>& u, const BasicWord<L>& v,
                                    const std::function<std::optional<L>(const L&, const L&)>& diamond) {
  LinComb<BasicWord<L>> out;
  const std::size_t r = u.size(), s = v.size();
  std::vector<std::optional<L>> slots;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
    if (i == r && j == s) {
      BasicWord<L> w;
      for (const auto& x : slots) w.letters.push_back(*x);
      out.add(w, 1);
      return;
    }
    if (i < r) {
      slots.push_back(u[i]);
      go(i + 1, j);
      slots.pop_back();
    }
    if (j < s) {
      slots.push_back(v[j]);
      go(i, j + 1);
      slots.pop_back();
    }
    if (i < r && j < s) {
      if (auto c = diamond(u[i], v[j])) {
        slots.push_back(c);
        go(i + 1, j + 1);
        slots.pop_back();
      }
    }
  };
  go(0, 0);
  return out;
}

// Number of words of weight k by listing compositions and splitting each part as k_i + d_i.
inline std::uint64_t count_words_brute(int weight) {
  std::uint64_t n = 0;
  std::function<void(int, std::uint64_t)> go = [&](int rest, std::uint64_t mult) {
    if (rest == 0) {
      n += mult;
      return;
    }
    for (int part = 1; part <= rest; ++part) go(rest - part, mult * static_cast<std::uint64_t>(part));
  };
  go(weight, 1);
  return n;
}

// Rank by dense Gaussian elimination over the given column words.
template <class W>
std::size_t dense_rank(const std::vector<LinComb<W>>& rows, const std::vector<W>& columns) {
  std::map<W, std::size_t> index;
  for (std::size_t i = 0; i < columns.size(); ++i) index[columns[i]] = i;
  std::vector<std::vector<Rational>> m;
  for (const auto& x : rows) {
    std::vector<Rational> r(columns.size());
    for (const auto& [w, c] : x) r[index.at(w)] = c;
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns.size() && rank < m.size(); ++col) {
    std::size_t p = rank;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      const Rational f = m[i][col] / m[rank][col];
      for (std::size_t j = col; j < columns.size(); ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
