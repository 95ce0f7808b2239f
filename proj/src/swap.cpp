#include "fmes/swap.hpp"

#include "fmes/enumerate.hpp"
#include "fmes/poly.hpp"

#include <future>
#include <map>
#include <mutex>
#include <unordered_map>

namespace fmes {

namespace {

using SwapBlock = std::unordered_map<Word, Element, WordHash>;

// Coefficient table of one (weight, depth) block: block[w] = σ(w).
SwapBlock build_block(int weight, int depth) {
  const int r = depth;
  const int nv = 2 * r;
  const int max_degree = weight - r;
  std::vector<Poly> x_image(static_cast<std::size_t>(r)), y_image(static_cast<std::size_t>(r));
  for (int i = 1; i <= r; ++i) {
    Poly sy(nv);
    for (int t = 1; t <= r - i + 1; ++t) sy += Poly::variable(nv, r + t - 1);
    x_image[static_cast<std::size_t>(i - 1)] = sy;
    Poly dx = Poly::variable(nv, r - i);
    if (r - i + 2 <= r) dx -= Poly::variable(nv, r - i + 1);
    y_image[static_cast<std::size_t>(i - 1)] = dx;
  }
  SwapBlock block;
  for (const Word& u : words_of_weight_and_depth(weight, depth)) {
    Poly m = Poly::constant(nv, 1);
    Rational scale = 1;
    for (int i = 0; i < r; ++i) {
      const Letter& a = u[static_cast<std::size_t>(i)];
      m = Poly::multiply(m, x_image[static_cast<std::size_t>(i)].pow(a.k - 1, max_degree), max_degree);
      m = Poly::multiply(m, y_image[static_cast<std::size_t>(i)].pow(a.d, max_degree), max_degree);
      scale /= Rational(factorial(a.d));
    }
    for (const auto& [e, c] : m.terms()) {
      Word w;
      Rational coeff = c * scale;
      for (int i = 0; i < r; ++i) {
        const int d = e[static_cast<std::size_t>(r + i)];
        w.letters.push_back(Letter{e[static_cast<std::size_t>(i)] + 1, d});
        coeff *= Rational(factorial(d));
      }
      block[w].add(u, coeff);
    }
  }
  return block;
}

class SwapTables {
 public:
  const SwapBlock& block(int weight, int depth) {
    std::shared_future<std::shared_ptr<const SwapBlock>> fut;
    std::promise<std::shared_ptr<const SwapBlock>> prom;
    bool owner = false;
    {
      std::lock_guard lock(guard_);
      auto key = std::make_pair(weight, depth);
      auto it = table_.find(key);
      if (it == table_.end()) {
        fut = prom.get_future().share();
        table_.emplace(key, fut);
        owner = true;
      } else {
        fut = it->second;
      }
    }
    if (owner) prom.set_value(std::make_shared<const SwapBlock>(build_block(weight, depth)));
    return *fut.get();
  }

 private:
  std::mutex guard_;
  std::map<std::pair<int, int>, std::shared_future<std::shared_ptr<const SwapBlock>>> table_;
};

SwapTables& tables() {
  static SwapTables t;
  return t;
}

}  // namespace

Element swap_word(const Word& w) {
  if (w.empty()) return unit_element();
  const auto& block = tables().block(w.weight(), w.depth());
  auto it = block.find(w);
  return it == block.end() ? Element{} : it->second;
}

Element swap(const Element& x) { return apply_linear(x, [](const Word& w) { return swap_word(w); }); }

namespace {

void compositions(int total, int parts, int min_part, std::vector<int>& cur, const std::function<void()>& visit) {
  if (parts == 0) {
    if (total == 0) visit();
    return;
  }
  for (int v = min_part; v <= total - min_part * (parts - 1); ++v) {
    cur.push_back(v);
    compositions(total - v, parts - 1, min_part, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

Element swap_coeff_formula(const Word& w) {
  if (w.empty()) return unit_element();
  const int r = w.depth();
  std::vector<int> k(static_cast<std::size_t>(r)), d(static_cast<std::size_t>(r));
  int sum_k = 0, sum_d = 0;
  for (int i = 0; i < r; ++i) {
    k[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)].k;
    d[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)].d;
    sum_k += k[static_cast<std::size_t>(i)];
    sum_d += d[static_cast<std::size_t>(i)];
  }
  // 1-based partial sums s_j(l) and tail sums s^j(l) = l_{r-j+2} + ... + l_r.
  auto head = [](const std::vector<int>& l, int j) {
    int s = 0;
    for (int i = 1; i <= j; ++i) s += l[static_cast<std::size_t>(i - 1)];
    return s;
  };
  auto tail = [r](const std::vector<int>& l, int j) {
    int s = 0;
    for (int i = r - j + 2; i <= r; ++i) s += l[static_cast<std::size_t>(i - 1)];
    return s;
  };
  auto at = [](const std::vector<int>& l, int i) { return l[static_cast<std::size_t>(i - 1)]; };

  Element out;
  std::vector<int> a, b;
  compositions(sum_d + r, r, 1, a, [&] {
    compositions(sum_k - r, r, 0, b, [&] {
      Rational c = 1;
      int sign = sum_k - r;
      for (int j = 1; j <= r && c != 0; ++j) {
        c *= Rational(binomial(head(d, j) - tail(a, j) + j - 1, at(a, r - j + 1) - 1));
        c *= Rational(binomial(at(k, r - j + 1) - 1, head(b, j) - tail(k, j) + j - 1));
        c *= Rational(factorial(at(a, j) - 1), factorial(at(k, j) - 1));
        sign += head(k, j) + tail(b, j) + j;
      }
      if (c == 0) return;
      c.canonicalize();
      if (sign % 2 != 0) c = -c;
      Word image;
      for (int i = 0; i < r; ++i) image.letters.push_back(Letter{a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]});
      out.add(image, c);
    });
  });
  return out;
}

Element swap_restricts(const Element& x, bool depth_wise) {
  if (!depth_wise) return swap(x);
  std::map<int, Element> by_depth;
  for (const auto& [w, c] : x) by_depth[w.depth()].add(w, c);
  Element out;
  for (const auto& [r, part] : by_depth) out += swap(part);
  return out;
}

bool in_upper_alphabet(const Word& w) {
  for (const auto& a : w)
    if (a.k != 1) return false;
  return true;
}

bool in_lower_alphabet(const Word& w) {
  for (const auto& a : w)
    if (a.d != 0) return false;
  return true;
}

}  // namespace fmes
