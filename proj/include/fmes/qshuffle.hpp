#pragma once

#include "fmes/lincomb.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fmes {

// Letter product a ⋄ b; nullopt stands for 0. Extended bilinearly.
template <class L>
using Diamond = std::function<std::optional<L>(const L&, const L&)>;

template <class L>
Diamond<L> zero_diamond() {
  return [](const L&, const L&) -> std::optional<L> { return std::nullopt; };
}

Diamond<Letter> stuffle_diamond();
Diamond<ZLetter> zstuffle_diamond();
Diamond<BLetter> bstuffle_diamond();

// aw * bv = a(w * bv) + b(aw * v) + (a⋄b)(w * v), evaluated on prefixes.
template <class L>
LinComb<BasicWord<L>> quasi_shuffle(const BasicWord<L>& u, const BasicWord<L>& v, const Diamond<L>& diamond) {
  using W = BasicWord<L>;
  using Cell = std::unordered_map<W, std::uint64_t, WordHash>;
  const std::size_t r = u.size();
  const std::size_t s = v.size();
  std::vector<Cell> prev(s + 1), cur(s + 1);
  for (std::size_t j = 0; j <= s; ++j) prev[j].emplace(v.slice(0, j), 1);
  auto extend = [](Cell& into, const Cell& from, const L& a) {
    for (const auto& [w, n] : from) {
      W x = w;
      x.letters.push_back(a);
      into[x] += n;
    }
  };
  for (std::size_t i = 1; i <= r; ++i) {
    cur[0].clear();
    cur[0].emplace(u.slice(0, i), 1);
    for (std::size_t j = 1; j <= s; ++j) {
      Cell cell;
      extend(cell, prev[j], u[i - 1]);
      extend(cell, cur[j - 1], v[j - 1]);
      if (auto c = diamond(u[i - 1], v[j - 1])) extend(cell, prev[j - 1], *c);
      cur[j] = std::move(cell);
    }
    std::swap(prev, cur);
  }
  LinComb<W> out;
  for (const auto& [w, n] : prev[s]) out.add(w, Rational(static_cast<unsigned long>(n)));
  return out;
}

template <class L>
LinComb<BasicWord<L>> quasi_shuffle(const LinComb<BasicWord<L>>& x, const LinComb<BasicWord<L>>& y,
                                    const Diamond<L>& diamond) {
  return apply_bilinear(x, y, [&](const BasicWord<L>& u, const BasicWord<L>& v) { return quasi_shuffle(u, v, diamond); });
}

// Memoized stuffle on Q<A>; safe for concurrent callers.
std::shared_ptr<const Element> stuffle_shared(const Word& u, const Word& v);
Element stuffle(const Word& u, const Word& v);
Element stuffle(const Element& x, const Element& y);
Element stuffle_power(const Element& x, int n);

ZElement stuffle_z(const ZWord& u, const ZWord& v);
ZElement stuffle_z(const ZElement& x, const ZElement& y);
// Shuffle of the x,y encodings, re-encoded as z-words.
ZElement shuffle_z(const ZWord& u, const ZWord& v);
ZElement shuffle_z(const ZElement& x, const ZElement& y);
// Shuffle of z-letters as letters.
ZElement index_shuffle(const ZWord& u, const ZWord& v);
ZElement index_shuffle(const ZElement& x, const ZElement& y);

BElement stuffle_b(const BWord& u, const BWord& v);
BElement stuffle_b(const BElement& x, const BElement& y);

struct ProductCacheStats {
  std::size_t entries = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
};
ProductCacheStats product_cache_stats();
void clear_product_caches();

namespace detail {

// Block products over compositions (i_1..i_l) of r; weight(i) scales each block.
template <class L, class BlockWeight>
LinComb<BasicWord<L>> composition_sum(const BasicWord<L>& w, const Diamond<L>& diamond, BlockWeight&& block_weight) {
  LinComb<BasicWord<L>> out;
  const std::size_t r = w.size();
  if (r == 0) return LinComb<BasicWord<L>>(w);
  std::vector<std::size_t> parts;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (start == r) {
      BasicWord<L> image;
      Rational coeff = 1;
      std::size_t pos = 0;
      for (std::size_t len : parts) {
        std::optional<L> block = w[pos];
        for (std::size_t t = 1; t < len && block; ++t) block = diamond(*block, w[pos + t]);
        if (!block) return;
        image.letters.push_back(*block);
        coeff *= block_weight(len, parts.size(), r);
        pos += len;
      }
      out.add(image, coeff);
      return;
    }
    for (std::size_t len = 1; start + len <= r; ++len) {
      parts.push_back(len);
      rec(start + len);
      parts.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

template <class L>
LinComb<BasicWord<L>> log_diamond(const BasicWord<L>& w, const Diamond<L>& diamond) {
  // (-1)^{r-l} / (i_1 ... i_l); the sign is distributed as (-1)^{i-1} per block.
  return detail::composition_sum(w, diamond, [](std::size_t len, std::size_t, std::size_t) {
    Rational c(1, static_cast<unsigned long>(len));
    return (len % 2 == 0) ? Rational(-c) : c;
  });
}

template <class L>
LinComb<BasicWord<L>> exp_diamond(const BasicWord<L>& w, const Diamond<L>& diamond) {
  return detail::composition_sum(w, diamond, [](std::size_t len, std::size_t, std::size_t) {
    return Rational(Integer(1), factorial(static_cast<long>(len)));
  });
}

template <class L>
LinComb<BasicWord<L>> log_diamond(const LinComb<BasicWord<L>>& x, const Diamond<L>& diamond) {
  return apply_linear(x, [&](const BasicWord<L>& w) { return log_diamond(w, diamond); });
}

template <class L>
LinComb<BasicWord<L>> exp_diamond(const LinComb<BasicWord<L>>& x, const Diamond<L>& diamond) {
  return apply_linear(x, [&](const BasicWord<L>& w) { return exp_diamond(w, diamond); });
}

// Linear map on words with a declared weight shift.
template <class L>
struct WordOperator {
  using W = BasicWord<L>;
  using V = LinComb<W>;
  std::string name;
  int weight_shift = 0;
  std::function<V(const W&)> on_word;

  V operator()(const W& w) const { return on_word(w); }
  V operator()(const V& x) const { return apply_linear(x, on_word); }
};

using Derivation = WordOperator<Letter>;

template <class L>
WordOperator<L> commutator(const WordOperator<L>& a, const WordOperator<L>& b) {
  return WordOperator<L>{"[" + a.name + "," + b.name + "]", a.weight_shift + b.weight_shift,
                         [a, b](const BasicWord<L>& w) { return a(b(w)) - b(a(w)); }};
}

template <class L>
WordOperator<L> compose(const WordOperator<L>& a, const WordOperator<L>& b) {
  return WordOperator<L>{a.name + "∘" + b.name, a.weight_shift + b.weight_shift,
                         [a, b](const BasicWord<L>& w) { return a(b(w)); }};
}

template <class L>
WordOperator<L> linear_combination(const std::vector<std::pair<Rational, WordOperator<L>>>& parts, std::string name) {
  const int shift = parts.empty() ? 0 : parts.front().second.weight_shift;
  return WordOperator<L>{std::move(name), shift, [parts](const BasicWord<L>& w) {
                           LinComb<BasicWord<L>> out;
                           for (const auto& [c, op] : parts) out.add(op(w), c);
                           return out;
                         }};
}

template <class L>
using LetterMap = std::function<LinComb<L>(const L&)>;

template <class L>
using LetterSampler = std::function<L(std::mt19937_64&)>;

LetterSampler<Letter> default_letter_sampler(int max_weight = 6);
LetterSampler<ZLetter> default_zletter_sampler(int max_weight = 6);

class HypothesisFailure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class L>
LinComb<L> diamond_product(const LinComb<L>& x, const LinComb<L>& y, const Diamond<L>& diamond) {
  LinComb<L> out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      if (auto c = diamond(a, b)) out.add(*c, ca * cb);
  return out;
}

template <class L>
LinComb<L> diamond_product(const L& a, const LinComb<L>& y, const Diamond<L>& diamond) {
  return diamond_product(LinComb<L>(a), y, diamond);
}

template <class L>
LinComb<L> letter_map_apply(const LetterMap<L>& phi, const std::optional<L>& a) {
  return a ? phi(*a) : LinComb<L>();
}

// γ(a,b) = φ(a⋄b) - φ(a)⋄b - a⋄φ(b)
template <class L>
LinComb<L> gamma_of(const LetterMap<L>& phi, const Diamond<L>& diamond, const L& a, const L& b) {
  LinComb<L> g = letter_map_apply(phi, diamond(a, b));
  g -= diamond_product(phi(a), LinComb<L>(b), diamond);
  g -= diamond_product(LinComb<L>(a), phi(b), diamond);
  return g;
}

namespace detail {

template <class L>
LinComb<BasicWord<L>> replace_letter(const BasicWord<L>& w, std::size_t j, const LinComb<L>& image) {
  LinComb<BasicWord<L>> out;
  for (const auto& [b, c] : image) {
    BasicWord<L> x = w;
    x.letters[j] = b;
    out.add(x, c);
  }
  return out;
}

// a_1..a_{j-1} image a_{j+2}..a_r
template <class L>
LinComb<BasicWord<L>> replace_pair(const BasicWord<L>& w, std::size_t j, const LinComb<L>& image) {
  LinComb<BasicWord<L>> out;
  for (const auto& [b, c] : image) {
    BasicWord<L> x;
    x.letters.insert(x.letters.end(), w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(j));
    x.letters.push_back(b);
    x.letters.insert(x.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(j + 2), w.letters.end());
    out.add(x, c);
  }
  return out;
}

}  // namespace detail

// Θ^φ acting letterwise; φ must be a derivation of (QL, ⋄).
template <class L>
WordOperator<L> derivation_from_letter_map(const LetterMap<L>& phi, const Diamond<L>& diamond,
                                           const LetterSampler<L>& sampler, int weight_shift, std::string name,
                                           int samples = 100, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const L a = sampler(rng);
    const L b = sampler(rng);
    if (!gamma_of(phi, diamond, a, b).is_zero())
      throw HypothesisFailure("letter map is not a derivation of the letter product");
  }
  return WordOperator<L>{std::move(name), weight_shift, [phi](const BasicWord<L>& w) {
                           LinComb<BasicWord<L>> out;
                           for (std::size_t j = 0; j < w.size(); ++j) out += detail::replace_letter(w, j, phi(w[j]));
                           return out;
                         }};
}

// Θ^φ with the -1/2 γ(a_j, a_{j+1}) correction.
template <class L>
WordOperator<L> derivation_with_gamma(const LetterMap<L>& phi, const Diamond<L>& diamond,
                                      const LetterSampler<L>& sampler, int weight_shift, std::string name,
                                      int samples = 100, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  int checked = 0;
  for (int s = 0; s < 20 * samples && checked < samples; ++s) {
    const auto a = diamond(sampler(rng), sampler(rng));
    const auto b = diamond(sampler(rng), sampler(rng));
    if (!a || !b) continue;
    ++checked;
    if (!gamma_of(phi, diamond, *a, *b).is_zero())
      throw HypothesisFailure("gamma does not vanish on the image of the letter product");
  }
  for (int s = 0; s < samples; ++s) {
    const L a = sampler(rng);
    const L b = sampler(rng);
    const L c = sampler(rng);
    LinComb<L> lhs;
    if (auto ac = diamond(a, c)) lhs += gamma_of(phi, diamond, *ac, b);
    if (auto bc = diamond(b, c)) lhs += gamma_of(phi, diamond, a, *bc);
    const LinComb<L> rhs = diamond_product(gamma_of(phi, diamond, a, b), LinComb<L>(c), diamond);
    if (!(lhs == rhs)) throw HypothesisFailure("gamma violates the compatibility identity");
  }
  return WordOperator<L>{std::move(name), weight_shift, [phi, diamond](const BasicWord<L>& w) {
                           LinComb<BasicWord<L>> out;
                           for (std::size_t j = 0; j < w.size(); ++j) out += detail::replace_letter(w, j, phi(w[j]));
                           for (std::size_t j = 0; j + 1 < w.size(); ++j)
                             out.add(detail::replace_pair(w, j, gamma_of(phi, diamond, w[j], w[j + 1])), Rational(-1, 2));
                           return out;
                         }};
}

enum class Side { left, right };
enum class BoundaryMode { shuffle, diamond };

// Θ^{[a} / Θ^{a]} (shuffle) and their ⋄-versions with the (-1)^{l+1}/l sums.
template <class L>
WordOperator<L> boundary_derivation(const L& a, Side side, BoundaryMode mode, const Diamond<L>& diamond,
                                    int weight_shift, std::string name) {
  return WordOperator<L>{std::move(name), weight_shift, [a, side, mode, diamond](const BasicWord<L>& w) {
                           LinComb<BasicWord<L>> out;
                           const std::size_t r = w.size();
                           const std::size_t lmax = mode == BoundaryMode::shuffle ? std::min<std::size_t>(1, r) : r;
                           for (std::size_t l = 1; l <= lmax; ++l) {
                             const std::size_t from = side == Side::left ? 0 : r - l;
                             std::optional<L> block = w[from];
                             for (std::size_t t = 1; t < l && block; ++t) block = diamond(*block, w[from + t]);
                             if (!block || !(*block == a)) continue;
                             Rational c(1, static_cast<unsigned long>(l));
                             if (l % 2 == 0) c = -c;
                             out.add(side == Side::left ? w.slice(l, r) : w.slice(0, r - l), c);
                           }
                           return out;
                         }};
}

// Θ^{φ,a} summed over a ∈ S (neighbour replacement around an S-letter that is removed).
template <class L>
WordOperator<L> neighbor_derivation(const std::function<bool(const L&)>& in_s,
                                    const std::function<LinComb<L>(const L& a, const L& b)>& phi_a,
                                    const Diamond<L>& diamond, const LetterSampler<L>& sampler, int weight_shift,
                                    std::string name, int samples = 100, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    const L b = sampler(rng);
    const L c = sampler(rng);
    if (auto bc = diamond(b, c); bc && in_s(*bc)) throw HypothesisFailure("letter product meets S");
  }
  int checked = 0;
  for (int s = 0; s < 50 * samples && checked < samples; ++s) {
    const L a = sampler(rng);
    const L b = sampler(rng);
    const L c = sampler(rng);
    if (!in_s(a)) continue;
    ++checked;
    if (!in_s(b)) {
      LinComb<L> lhs;
      if (auto bc = diamond(b, c)) lhs = phi_a(a, *bc);
      const LinComb<L> rhs = diamond_product(phi_a(a, b), LinComb<L>(c), diamond);
      if (!(lhs == rhs)) throw HypothesisFailure("phi_a is not compatible with the letter product");
    }
    const L a2 = sampler(rng);
    if (in_s(a2)) {
      LinComb<L> lhs, rhs;
      if (auto x = diamond(a2, c)) lhs = phi_a(a, *x);
      if (auto y = diamond(a, c)) rhs = phi_a(a2, *y);
      if (!(lhs == rhs)) throw HypothesisFailure("phi_a fails the exchange identity");
    }
  }
  return WordOperator<L>{std::move(name), weight_shift, [in_s, phi_a](const BasicWord<L>& w) {
                           LinComb<BasicWord<L>> out;
                           const std::size_t r = w.size();
                           for (std::size_t j = 0; j < r; ++j) {
                             if (!in_s(w[j])) continue;
                             if (j + 1 < r) out += detail::replace_pair(w, j, phi_a(w[j], w[j + 1]));
                             if (j >= 1) out -= detail::replace_pair(w, j - 1, phi_a(w[j], w[j - 1]));
                           }
                           return out;
                         }};
}

}  // namespace fmes
