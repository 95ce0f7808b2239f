#include "fmes/balanced.hpp"

#include "fmes/echelon.hpp"
#include "fmes/enumerate.hpp"
#include "fmes/poly.hpp"
#include "fmes/qshuffle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fmes {

std::vector<std::pair<int, int>> balanced_blocks(const BWord& w) {
  std::vector<std::pair<int, int>> out;
  for (const BLetter& a : w) {
    if (a.i == 0) {
      if (out.empty()) throw std::invalid_argument("balanced word starts with b0: " + to_string(w));
      ++out.back().second;
    } else {
      out.emplace_back(a.i, 0);
    }
  }
  return out;
}

BWord from_blocks(const std::vector<std::pair<int, int>>& blocks) {
  BWord w;
  for (const auto& [k, m] : blocks) {
    w.letters.push_back(BLetter{k});
    w.letters.insert(w.letters.end(), static_cast<std::size_t>(m), BLetter{0});
  }
  return w;
}

BWord tau(const BWord& w) {
  const auto blocks = balanced_blocks(w);
  std::vector<std::pair<int, int>> out;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) out.emplace_back(it->second + 1, it->first - 1);
  return from_blocks(out);
}

BElement tau(const BElement& x) { return apply_linear(x, [](const BWord& w) { return BElement(tau(w)); }); }

namespace {

// (Y_1, Y_2 - Y_1, ...) or (Y_1, Y_1 + Y_2, ...) in r variables.
std::vector<Poly> y_images(int r, bool differences) {
  std::vector<Poly> out;
  for (int i = 0; i < r; ++i) {
    Poly p = Poly::variable(r, i);
    if (differences) {
      if (i > 0) p -= Poly::variable(r, i - 1);
    } else {
      for (int j = 0; j < i; ++j) p += Poly::variable(r, j);
    }
    out.push_back(p);
  }
  return out;
}

std::map<std::pair<int, int>, Poly> power_table(const std::vector<Poly>& ys, int max_power) {
  std::map<std::pair<int, int>, Poly> out;
  for (int i = 0; i < static_cast<int>(ys.size()); ++i)
    for (int e = 0; e <= max_power; ++e) out.emplace(std::make_pair(i, e), ys[static_cast<std::size_t>(i)].pow(e));
  return out;
}

std::vector<int> ks_of(const Word& w) {
  std::vector<int> ks;
  for (const auto& a : w) ks.push_back(a.k);
  return ks;
}

}  // namespace

namespace {

// Expands every [k;d] of one weight under Y -> (Y_1, Y_2 - Y_1, ...) and reads off b-words.
std::map<BWord, Element> phi_block(int weight) {
  std::map<BWord, Element> table;
  for (const Word& u : words_of_weight(weight)) {
    const int r = u.depth();
    const auto ys = y_images(r, true);
    Poly p = Poly::constant(r, 1);
    Rational scale = 1;
    for (int i = 0; i < r; ++i) {
      const int d = u[static_cast<std::size_t>(i)].d;
      p = p * ys[static_cast<std::size_t>(i)].pow(d);
      scale /= Rational(factorial(d));
    }
    for (const auto& [e, c] : p.terms()) {
      std::vector<std::pair<int, int>> bl;
      for (int i = 0; i < r; ++i) bl.emplace_back(u[static_cast<std::size_t>(i)].k, e[static_cast<std::size_t>(i)]);
      table[from_blocks(bl)].add(u, c * scale);
    }
  }
  return table;
}

}  // namespace

Element phi_iso(const BWord& w) {
  balanced_blocks(w);
  static std::mutex guard;
  static std::map<int, std::map<BWord, Element>> blocks;
  std::lock_guard lock(guard);
  auto it = blocks.find(w.weight());
  if (it == blocks.end()) it = blocks.emplace(w.weight(), phi_block(w.weight())).first;
  auto jt = it->second.find(w);
  return jt == it->second.end() ? Element{} : jt->second;
}

Element phi_iso(const BElement& x) {
  Element out;
  for (const auto& [w, c] : x) out.add(phi_iso(w), c);
  return out;
}

BElement phi_inverse(const Word& w) {
  // 𝔄(X; Y) = Σ_b φ(b) X^{k-1} Π (Y_1 + ... + Y_i)^{m_i}: read off the coefficient of X^{k-1} Y^d / d!.
  const int r = w.depth();
  const auto ys = y_images(r, false);
  int total = 0;
  Rational dfact = 1;
  for (const auto& a : w) {
    total += a.d;
    dfact *= Rational(factorial(a.d));
  }
  const auto powers = power_table(ys, total);
  Exponents target;
  for (const auto& a : w) target.push_back(a.d);
  BElement out;
  std::vector<int> m(static_cast<std::size_t>(r), 0);
  const std::vector<int> ks = ks_of(w);
  // All m with Σ m_i = Σ d_i.
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == r - 1 || r == 0) {
      if (r > 0) m[static_cast<std::size_t>(i)] = left;
      Poly p = Poly::constant(r, 1);
      for (int j = 0; j < r; ++j) p = p * powers.at({j, m[static_cast<std::size_t>(j)]});
      const Rational c = p.coefficient(target);
      if (c != 0) {
        std::vector<std::pair<int, int>> bl;
        for (int j = 0; j < r; ++j) bl.emplace_back(ks[static_cast<std::size_t>(j)], m[static_cast<std::size_t>(j)]);
        out.add(from_blocks(bl), c * dfact);
      }
      return;
    }
    for (int v = 0; v <= left; ++v) {
      m[static_cast<std::size_t>(i)] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

BElement phi_inverse(const Element& x) {
  BElement out;
  for (const auto& [w, c] : x) out.add(phi_inverse(w), c);
  return out;
}

BElement D_balanced(const BWord& w) {
  const auto blocks = balanced_blocks(w);
  BElement out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i; j < blocks.size(); ++j) {
      auto next = blocks;
      ++next[i].first;
      ++next[j].second;
      out.add(from_blocks(next), Rational(blocks[i].first * (blocks[j].second + 1)));
    }
  return out;
}

BElement D_balanced(const BElement& x) {
  BElement out;
  for (const auto& [w, c] : x) out.add(D_balanced(w), c);
  return out;
}

std::size_t balanced_quotient_dim(int k) {
  const auto& cols = bwords_of_weight(k);
  std::map<BWord, int> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index[cols[i]] = static_cast<int>(i);
  std::vector<SparseRow> rows;
  for (int m = 1; m <= k; ++m) {
    std::vector<BElement> diffs;
    for (const auto& u : bwords_of_weight(m)) {
      BElement d = BElement(tau(u)) - BElement(u);
      if (!d.is_zero()) diffs.push_back(std::move(d));
    }
    for (const auto& v : bwords_of_weight(k - m))
      for (const auto& d : diffs) {
        SparseRow row;
        for (const auto& [w, c] : stuffle_b(d, BElement(v))) row.emplace_back(index.at(w), c);
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  return cols.size() - echelon_parallel(cols.size(), rows).rank();
}

}  // namespace fmes
