#include "fmes/derivations.hpp"

#include <stdexcept>

namespace fmes {

namespace {

using Letters = std::vector<Letter>;

// w with positions [from, from+len) replaced by the given letter.
Word splice(const Word& w, std::size_t from, std::size_t len, const Letter& a) {
  Word out;
  out.letters.reserve(w.size() + 1 - len);
  out.letters.insert(out.letters.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(from));
  out.letters.push_back(a);
  out.letters.insert(out.letters.end(), w.begin() + static_cast<std::ptrdiff_t>(from + len), w.end());
  return out;
}

Word erase(const Word& w, std::size_t from, std::size_t len) {
  Word out;
  out.letters.insert(out.letters.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(from));
  out.letters.insert(out.letters.end(), w.begin() + static_cast<std::ptrdiff_t>(from + len), w.end());
  return out;
}

bool is(const Letter& a, int k, int d) { return a.k == k && a.d == d; }

Element D_word(const Word& w) {
  Element out;
  for (std::size_t j = 0; j < w.size(); ++j) out.add(splice(w, j, 1, Letter{w[j].k + 1, w[j].d + 1}), w[j].k);
  return out;
}

Element omega_word(const Word& w) {
  Element out;
  const std::size_t r = w.size();
  if (r == 0) return out;
  if (is(w[r - 1], 1, 0)) out.add(erase(w, r - 1, 1), 1);
  for (std::size_t j = 0; j + 1 < r; ++j)
    if (w[j].k == 1) out.add(splice(w, j, 2, Letter{w[j + 1].k, w[j].d + w[j + 1].d}), 1);
  for (std::size_t j = 1; j < r; ++j)
    if (w[j].k == 1) out.add(splice(w, j - 1, 2, Letter{w[j - 1].k, w[j - 1].d + w[j].d}), -1);
  return out;
}

Element delta1(const Word& w) {
  Element out;
  const std::size_t r = w.size();
  const Rational half(1, 2);
  for (std::size_t j = 0; j < r; ++j)
    if (w[j].k > 1 && w[j].d > 0) out.add(splice(w, j, 1, Letter{w[j].k - 1, w[j].d - 1}), w[j].d);
  for (std::size_t j = 0; j + 1 < r; ++j) {
    const Letter& a = w[j];
    const Letter& b = w[j + 1];
    if (b.k == 1 && b.d > 0) out.add(splice(w, j, 2, Letter{a.k, a.d + b.d - 1}), -half * b.d);
    if (a.k == 1 && a.d > 0) out.add(splice(w, j, 2, Letter{b.k, a.d + b.d - 1}), -half * a.d);
  }
  return out;
}

Element delta2(const Word& w) {
  Element out;
  const std::size_t r = w.size();
  if (r >= 1 && is(w[r - 1], 2, 0)) out.add(erase(w, r - 1, 1), 1);
  if (r >= 2 && is(w[r - 2], 1, 0) && is(w[r - 1], 1, 0)) out.add(erase(w, r - 2, 2), Rational(-1, 2));
  return out;
}

Element delta3(const Word& w) {
  Element out;
  const std::size_t r = w.size();
  if (r >= 1 && is(w[r - 1], 1, 1)) out.add(erase(w, r - 1, 1), 1);
  return out;
}

Element delta4(const Word& w) {
  Element out;
  const std::size_t r = w.size();
  for (std::size_t j = 1; j < r; ++j)
    if (w[j].k == 1 && w[j - 1].k > 1) out.add(splice(w, j - 1, 2, Letter{w[j - 1].k - 1, w[j - 1].d + w[j].d}), 1);
  for (std::size_t j = 0; j + 1 < r; ++j)
    if (w[j].k == 1 && w[j + 1].k > 1) out.add(splice(w, j, 2, Letter{w[j + 1].k - 1, w[j].d + w[j + 1].d}), -1);
  return out;
}

Element delta5(const Word& w) {
  Element out;
  const std::size_t r = w.size();
  const Rational half(1, 2);
  for (std::size_t j = 0; j + 1 < r; ++j) {
    const int dd = w[j].d + w[j + 1].d;
    if (w[j].k == 2) out.add(splice(w, j, 2, Letter{w[j + 1].k, dd}), 1);
    if (w[j + 1].k == 2) out.add(splice(w, j, 2, Letter{w[j].k, dd}), -1);
  }
  for (std::size_t j = 0; j + 2 < r; ++j) {
    const int dd = w[j].d + w[j + 1].d + w[j + 2].d;
    if (w[j + 1].k == 1 && w[j + 2].k == 1) out.add(splice(w, j, 3, Letter{w[j].k, dd}), half);
    if (w[j].k == 1 && w[j + 1].k == 1) out.add(splice(w, j, 3, Letter{w[j + 2].k, dd}), -half);
  }
  return out;
}

Element delta_component_word(int i, const Word& w) {
  switch (i) {
    case 1: return delta1(w);
    case 2: return delta2(w);
    case 3: return delta3(w);
    case 4: return delta4(w);
    case 5: return delta5(w);
    default: throw std::out_of_range("delta component index must be 1..5");
  }
}

Element delta_word(const Word& w) {
  Element out = delta1(w);
  const Rational mhalf(-1, 2);
  for (int i = 2; i <= 5; ++i) out.add(delta_component_word(i, w), mhalf);
  return out;
}

void require_lwt0(const Word& w) {
  if (lower_weight(w) != 0) throw std::invalid_argument("word has positive lower weight");
}

// Polynomial helpers on 2r variables; out-of-range indices are the zero variable.
struct Vars {
  int r;
  [[nodiscard]] Poly zero() const { return Poly(2 * r); }
  [[nodiscard]] Poly x(int i) const { return (i >= 1 && i <= r) ? Poly::variable(2 * r, i - 1) : zero(); }
  [[nodiscard]] Poly y(int i) const { return (i >= 1 && i <= r) ? Poly::variable(2 * r, r + i - 1) : zero(); }
  [[nodiscard]] Poly c(const Rational& q) const { return Poly::constant(2 * r, q); }
};

}  // namespace

Element apply_D(const Element& x) { return apply_linear(x, D_word); }

Element apply_W(const Element& x) {
  Element out;
  for (const auto& [w, c] : x) out.add(w, c * w.weight());
  return out;
}

Element apply_omega(const Element& x) { return apply_linear(x, omega_word); }
Element apply_delta(const Element& x) { return apply_linear(x, delta_word); }

Element apply_delta_component(int i, const Element& x) {
  return apply_linear(x, [i](const Word& w) { return delta_component_word(i, w); });
}

Element apply_t(const Element& x) {
  static const MouldOperator t = t_mould();
  return apply_linear(x, [](const Word& w) { return apply_mould(t, w); });
}

Element apply_delta_mould(const Element& x) {
  static const MouldOperator d = delta_mould();
  return apply_linear(x, [](const Word& w) { return apply_mould(d, w); });
}

Element apply_delta_lwt0(const Word& w) {
  require_lwt0(w);
  const std::size_t r = w.size();
  Element out;
  const Rational half(1, 2);
  if (r >= 1 && w[0].k == 2) out.add(erase(w, 0, 1), -half);
  if (r >= 2 && w[0].k == 1 && w[1].k == 1) out.add(erase(w, 0, 2), Rational(1, 4));
  for (std::size_t j = 0; j + 1 < r; ++j)
    if (w[j].k == 1 && w[j + 1].k > 1) out.add(splice(w, j, 2, Letter{w[j + 1].k - 1, 0}), half);
  for (std::size_t j = 1; j < r; ++j)
    if (w[j].k == 1 && w[j - 1].k > 1) out.add(splice(w, j - 1, 2, Letter{w[j - 1].k - 1, 0}), -half);
  return out;
}

Element apply_t_lwt0(const Word& w) {
  require_lwt0(w);
  const int r = w.depth();
  auto k = [&](int i) { return w[static_cast<std::size_t>(i - 1)].k; };
  Element out;
  // Replace positions [from, from+len) (1-based) by one entry; non-positive entries vanish.
  // A block reaching one slot past the end reads k_{r+1} as an empty slot: a zero entry
  // there is dropped, anything else vanishes.
  auto term = [&](int from, int len, int entry, const Rational& c) {
    if (c == 0 || from < 1) return;
    const int last = from + len - 1;
    if (last == r + 1) {
      if (entry == 0) out.add(w.slice(0, static_cast<std::size_t>(from - 1)), c);
      return;
    }
    if (last > r || entry <= 0) return;
    out.add(splice(w, static_cast<std::size_t>(from - 1), static_cast<std::size_t>(len), Letter{entry, 0}), c);
  };
  auto sgn = [](int e) { return e % 2 == 0 ? 1 : -1; };
  auto k_or_zero = [&](int i) { return i <= r ? k(i) : 0; };
  for (int j = 1; j <= r; ++j)
    term(j, 2, k(j) + k_or_zero(j + 1) - 3, Rational(sgn(k(j) + 1) * binomial(2, k(j) - 1)));
  for (int j = 2; j <= r; ++j) term(j - 1, 2, k(j - 1) + k(j) - 3, Rational(-sgn(k(j) + 1) * binomial(2, k(j) - 1)));
  for (int j = 1; j + 1 <= r; ++j) {
    const bool hit = (k(j) == 1 || k(j) == 2) && k(j + 1) == 1;
    if (hit) term(j, 3, k(j) + k(j + 1) + k_or_zero(j + 2) - 3, Rational(sgn(k(j) + 1)));
  }
  for (int j = 2; j <= r - 1; ++j) {
    int c = 0;
    if (k(j) == 1 && k(j + 1) == 1) c += 1;
    if (k(j) == 2 && k(j + 1) == 1) c -= 4;
    if (k(j) == 1 && k(j + 1) == 2) c += 3;
    term(j - 1, 3, k(j - 1) + k(j) + k(j + 1) - 3, Rational(-c));
  }
  if (r >= 3 && k(1) == 1 && k(2) == 1 && k(3) == 1) out.add(erase(w, 0, 3), Rational(1, 3));
  return out;
}

Element apply_D_lwt0(const Word& w) {
  require_lwt0(w);
  ZWord z;
  for (const auto& a : w) z.letters.push_back(ZLetter{a.k});
  const ZWord two = make_zword({2});
  ZElement diff = stuffle_z(two, z) - shuffle_z(two, z);
  Element out;
  for (const auto& [u, c] : diff) out.add(to_word(u), c);
  return out;
}

Derivation op_D() { return {"D", 2, D_word}; }
Derivation op_W() {
  return {"W", 0, [](const Word& w) { return G(w, w.weight()); }};
}
Derivation op_omega() { return {"omega", -1, omega_word}; }
Derivation op_delta() { return {"delta", -2, delta_word}; }
Derivation op_delta_component(int i) {
  if (i < 1 || i > 5) throw std::out_of_range("delta component index must be 1..5");
  return {"delta" + std::to_string(i), -2, [i](const Word& w) { return delta_component_word(i, w); }};
}
Derivation op_t() {
  return {"t", -3, [t = t_mould()](const Word& w) { return apply_mould(t, w); }};
}
Derivation op_omega_delta() {
  Derivation c = commutator(op_omega(), op_delta());
  c.name = "[omega,delta]";
  return c;
}

Derivation omega_constructed() {
  const auto diamond = stuffle_diamond();
  auto last = boundary_derivation(Letter{1, 0}, Side::right, BoundaryMode::diamond, diamond, -1, "omega_end");
  auto neighbours = neighbor_derivation<Letter>(
      [](const Letter& a) { return a.k == 1; },
      [](const Letter& a, const Letter& b) { return LinComb<Letter>(Letter{b.k, a.d + b.d}); }, diamond,
      default_letter_sampler(), -1, "omega_S");
  return linear_combination<Letter>({{1, last}, {1, neighbours}}, "omega");
}

Derivation delta_component_constructed(int i) {
  const auto diamond = stuffle_diamond();
  const auto sampler = default_letter_sampler();
  switch (i) {
    case 1: {
      LetterMap<Letter> phi = [](const Letter& a) {
        return (a.k > 1 && a.d > 0) ? LinComb<Letter>(Letter{a.k - 1, a.d - 1}, a.d) : LinComb<Letter>();
      };
      return derivation_with_gamma<Letter>(phi, diamond, sampler, -2, "delta1");
    }
    case 2: return boundary_derivation(Letter{2, 0}, Side::right, BoundaryMode::diamond, diamond, -2, "delta2");
    case 3: return boundary_derivation(Letter{1, 1}, Side::right, BoundaryMode::diamond, diamond, -2, "delta3");
    case 4: {
      auto s = neighbor_derivation<Letter>(
          [](const Letter& a) { return a.k == 1; },
          [](const Letter& a, const Letter& b) {
            return b.k > 1 ? LinComb<Letter>(Letter{b.k - 1, a.d + b.d}) : LinComb<Letter>();
          },
          diamond, sampler, -2, "theta_S");
      return linear_combination<Letter>({{-1, s}}, "delta4");
    }
    case 5: {
      auto inner = neighbor_derivation<Letter>(
          [](const Letter& a) { return a.k == 2; },
          [](const Letter& a, const Letter& b) { return LinComb<Letter>(Letter{b.k, a.d + b.d}); },
          zero_diamond<Letter>(), sampler, -2, "theta_a");
      return Derivation{"delta5", -2, [inner, diamond](const Word& w) {
                          return exp_diamond(inner(log_diamond(w, diamond)), diamond);
                        }};
    }
    default: throw std::out_of_range("delta component index must be 1..5");
  }
}

Derivation delta_constructed() {
  std::vector<std::pair<Rational, Derivation>> parts{{1, delta_component_constructed(1)}};
  for (int i = 2; i <= 5; ++i) parts.emplace_back(Rational(-1, 2), delta_component_constructed(i));
  return linear_combination<Letter>(parts, "delta");
}

Element apply_mould(const MouldOperator& op, const Word& w) {
  const int r = w.depth();
  Element out;
  std::vector<int> alpha(static_cast<std::size_t>(r)), beta(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    alpha[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)].k - 1;
    beta[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)].d;
  }
  Rational beta_fact = 1;
  for (int b : beta) beta_fact *= Rational(factorial(b));

  for (const MouldTerm& term : op(r)) {
    std::vector<int> xs(static_cast<std::size_t>(r));
    std::vector<std::vector<int>> ys(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      xs[static_cast<std::size_t>(i)] = i;
      ys[static_cast<std::size_t>(i)] = {i};
    }
    bool alive = true;
    for (const Contraction& c : term.chain) {
      const int level = static_cast<int>(xs.size());
      const auto j = static_cast<std::size_t>(c.j);
      if (c.plus) {
        if (c.j < 1 || c.j > level) {
          alive = false;
          break;
        }
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(j - 1));
        if (c.j < level) ys[j - 1].insert(ys[j - 1].end(), ys[j].begin(), ys[j].end());
        ys.erase(ys.begin() + static_cast<std::ptrdiff_t>(c.j < level ? j : j - 1));
      } else {
        if (c.j < 2 || c.j > level) {
          alive = false;
          break;
        }
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(j - 1));
        ys[j - 2].insert(ys[j - 2].end(), ys[j - 1].begin(), ys[j - 1].end());
        ys.erase(ys.begin() + static_cast<std::ptrdiff_t>(j - 1));
      }
    }
    if (!alive) continue;
    std::vector<char> x_used(static_cast<std::size_t>(r), 0), y_used(static_cast<std::size_t>(r), 0);
    for (int a : xs) x_used[static_cast<std::size_t>(a)] = 1;
    for (const auto& set : ys)
      for (int a : set) y_used[static_cast<std::size_t>(a)] = 1;

    for (const auto& [m, coeff] : term.prefactor.terms()) {
      std::vector<int> rx(static_cast<std::size_t>(r)), ry(static_cast<std::size_t>(r));
      bool ok = true;
      for (int a = 0; a < r && ok; ++a) {
        const auto ua = static_cast<std::size_t>(a);
        rx[ua] = alpha[ua] - m[ua];
        ry[ua] = beta[ua] - m[static_cast<std::size_t>(r + a)];
        if (rx[ua] < 0 || ry[ua] < 0) ok = false;
        if ((!x_used[ua] && rx[ua] != 0) || (!y_used[ua] && ry[ua] != 0)) ok = false;
      }
      if (!ok) continue;
      Word source;
      Rational c = coeff * beta_fact;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        int d = 0;
        for (int a : ys[i]) {
          d += ry[static_cast<std::size_t>(a)];
          c /= Rational(factorial(ry[static_cast<std::size_t>(a)]));
        }
        source.letters.push_back(Letter{rx[static_cast<std::size_t>(xs[i])] + 1, d});
      }
      out.add(source, c);
    }
  }
  return out;
}

MouldOperator delta_mould() {
  return [](int r) {
    const Vars v{r};
    std::vector<MouldTerm> terms;
    Poly xy = v.zero();
    for (int j = 1; j <= r; ++j) xy += v.x(j) * v.y(j);
    terms.push_back({xy, {}});
    const Rational h(-1, 2);
    for (int j = 1; j <= r; ++j) {
      terms.push_back({h * (v.x(j) - v.x(j + 1) + v.y(j)), {{true, j}}});
      terms.push_back({h * (v.x(j - 1) - v.x(j) + v.y(j)), {{false, j}}});
      terms.push_back({v.c(Rational(1, 4)), {{true, j}, {true, j}}});
      terms.push_back({v.c(Rational(-1, 4)), {{false, j}, {false, j}}});
    }
    return terms;
  };
}

MouldOperator omega_mould() {
  return [](int r) {
    const Vars v{r};
    std::vector<MouldTerm> terms;
    for (int j = 1; j <= r; ++j) {
      terms.push_back({v.c(1), {{true, j}}});
      terms.push_back({v.c(-1), {{false, j}}});
    }
    return terms;
  };
}

MouldOperator t_mould() {
  return [](int r) {
    const Vars v{r};
    std::vector<MouldTerm> terms;
    for (int j = 1; j <= r; ++j) {
      const Poly p = v.x(j) - v.x(j + 1) + v.y(j);
      terms.push_back({p * p, {{true, j}}});
    }
    for (int j = 2; j <= r; ++j) {
      const Poly p = v.x(j - 1) - v.x(j) - v.y(j);
      terms.push_back({v.c(-1) * (p * p), {{false, j}}});
    }
    for (int j = 1; j <= r - 1; ++j)
      terms.push_back({v.x(j + 2) - v.x(j) - v.y(j) - v.y(j + 1), {{true, j}, {true, j}}});
    for (int j = 2; j <= r - 1; ++j) {
      const Poly p = v.x(j - 1) - Rational(4) * v.x(j) + Rational(3) * v.x(j + 1) - Rational(3) * v.y(j) + v.y(j + 1);
      terms.push_back({v.c(-1) * p, {{false, j}, {false, j}}});
    }
    for (int j = 1; j <= r - 2; ++j) terms.push_back({v.c(Rational(1, 3)), {{true, j}, {true, j}, {true, j}}});
    for (int j = 2; j <= r - 2; ++j) terms.push_back({v.c(Rational(-1, 3)), {{false, j}, {false, j}, {false, j}}});
    return terms;
  };
}

namespace {

int nilpotency_depth(const Element& f, const Derivation& d) {
  int p = 0;
  Element cur = d(f);
  while (!cur.is_zero()) {
    ++p;
    cur = d(cur);
  }
  return p;
}

void peel(const Element& f, const Derivation& d, const Element& a, std::size_t shift, std::vector<Element>& parts) {
  if (f.is_zero()) return;
  const int p = nilpotency_depth(f, d);
  if (parts.size() <= shift) parts.resize(shift + 1);
  if (p == 0) {
    parts[shift] += f;
    return;
  }
  Element df = d(f);
  df *= Rational(1, p);
  Element g = f - stuffle(df, a);
  peel(g, d, a, shift, parts);
  peel(df, d, a, shift + 1, parts);
}

}  // namespace

std::vector<Element> polynomial_representation(const Element& x, const Derivation& d, const Element& a) {
  if (!(d(a) == unit_element())) throw std::invalid_argument("d(a) must equal 1");
  std::vector<Element> parts;
  peel(x, d, a, 0, parts);
  while (!parts.empty() && parts.back().is_zero()) parts.pop_back();
  return parts;
}

Element reconstruct(const std::vector<Element>& parts, const Element& a) {
  Element out;
  Element power = unit_element();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    out += stuffle(parts[i], power);
    power = stuffle(power, a);
  }
  return out;
}

}  // namespace fmes
