#include "fmes/modular.hpp"

#include "fmes/derivations.hpp"
#include "fmes/qshuffle.hpp"
#include "fmes/swap.hpp"

#include <stdexcept>

namespace fmes {

namespace {

Element Gk(int k) { return G(make_word({k}, {0})); }

Element product(const Element& a, const Element& b) { return stuffle(a, b); }

Rational sign(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational binom(long n, long k) { return Rational(binomial(n, k)); }

Exponents mono(int a, int b, int c) { return {a, b, c}; }

Poly poly_derivation(const Poly& p, const std::vector<Poly>& images) {
  Poly out(p.nvars());
  for (int i = 0; i < p.nvars(); ++i) {
    const Poly d = p.derivative(i);
    if (!d.is_zero()) out += d * images[static_cast<std::size_t>(i)];
  }
  return out;
}

Poly term(int nvars, const Exponents& e, const Rational& c) {
  Poly p(nvars);
  p.add_term(e, c);
  return p;
}

}  // namespace

IdentityCheck check_in_ideal(QuotientEngine& engine, IdealKind kind, std::string name, const Element& difference) {
  IdentityCheck out;
  out.name = std::move(name);
  out.weight = std::max(0, max_weight(difference));
  out.residual = engine.normal_form(difference, kind, out.weight);
  out.holds = out.residual.is_zero();
  return out;
}

Element depth2_stuffle_side(int k1, int k2, int d1, int d2) {
  return G(make_word({k1, k2}, {d1, d2})) + G(make_word({k2, k1}, {d2, d1})) +
         G(make_word({k1 + k2}, {d1 + d2}));
}

Element depth2_swap_side(int k1, int k2, int d1, int d2) {
  Element out;
  const int k = k1 + k2, d = d1 + d2;
  for (int l1 = 1; l1 < k; ++l1)
    for (int e1 = 0; e1 <= d; ++e1) {
      const Rational c = binom(l1 - 1, k1 - 1) * binom(d1, e1) * sign(d1 - e1) +
                         binom(l1 - 1, k2 - 1) * binom(d2, e1) * sign(d2 - e1);
      out.add(make_word({l1, k - l1}, {e1, d - e1}), c);
    }
  Rational c(factorial(d1) * factorial(d2), factorial(d + 1));
  c.canonicalize();
  out.add(make_word({k - 1}, {d + 1}), c * binom(k - 2, k1 - 1));
  return out;
}

IdentityCheck verify_depth2_dsh(QuotientEngine& engine, int k1, int k2, int d1, int d2) {
  if (k1 < 1 || k2 < 1 || d1 < 0 || d2 < 0) throw std::invalid_argument("depth-two indices out of range");
  const std::string name = "depth2_dsh(" + std::to_string(k1) + "," + std::to_string(k2) + "," +
                           std::to_string(d1) + "," + std::to_string(d2) + ")";
  const Element a = G(make_word({k1}, {d1})), b = G(make_word({k2}, {d2}));
  IdentityCheck out = check_in_ideal(engine, IdealKind::swap, name,
                                     depth2_stuffle_side(k1, k2, d1, d2) - depth2_swap_side(k1, k2, d1, d2));
  out.holds = out.holds && product(a, b) == depth2_stuffle_side(k1, k2, d1, d2);
  return out;
}

Element relpevevk_difference(int k1, int k2) {
  const int k = k1 + k2;
  if (k1 < 1 || k2 < 1 || k < 4 || k % 2 != 0) throw std::invalid_argument("weight must be even and at least 4");
  Element lhs = Gk(k) * (Rational(1, 2) * (binom(k, k2) - sign(k1)));
  Element rhs;
  for (int j = 2; j <= k - 2; j += 2) {
    const Rational c = binom(k - j - 1, k1 - 1) + binom(k - j - 1, k2 - 1) - Rational(j == k1 ? 1 : 0);
    rhs.add(product(Gk(j), Gk(k - j)), c);
  }
  const Rational c = Rational(1, 2) * (binom(k - 3, k1 - 1) + binom(k - 3, k2 - 1) + Rational(k1 == 1 ? 1 : 0) +
                                       Rational(k2 == 1 ? 1 : 0));
  rhs.add(make_word({k - 1}, {1}), c);
  return lhs - rhs;
}

IdentityCheck verify_relpevevk(QuotientEngine& engine, int k1, int k2) {
  return check_in_ideal(engine, IdealKind::swap,
                        "even_weight(" + std::to_string(k1) + "," + std::to_string(k2) + ")",
                        relpevevk_difference(k1, k2));
}

IdentityCheck verify_mfprod_first(QuotientEngine& engine, int k) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("weight must be even and at least 4");
  Element diff = Gk(k) * Rational(k + 1, 2);
  diff.add(make_word({k - 1}, {1}), -1);
  for (int a = 2; a <= k - 2; a += 2) diff.add(product(Gk(a), Gk(k - a)), -1);
  return check_in_ideal(engine, IdealKind::swap, "mfprod_i(" + std::to_string(k) + ")", diff);
}

IdentityCheck verify_mfprod_second(QuotientEngine& engine, int k) {
  if (k < 6 || k % 2 != 0) throw std::invalid_argument("weight must be even and at least 6");
  Rational c((k + 1) * (k - 1) * (k - 6), 12);
  c.canonicalize();
  Element diff = Gk(k) * c;
  for (int a = 4; a <= k - 4; a += 2) diff.add(product(Gk(a), Gk(k - a)), -Rational((a - 1) * (k - a - 1)));
  return check_in_ideal(engine, IdealKind::swap, "mfprod_ii(" + std::to_string(k) + ")", diff);
}

Poly qmf_generator(int weight) {
  switch (weight) {
    case 2: return Poly::variable(3, 0);
    case 4: return Poly::variable(3, 1);
    case 6: return Poly::variable(3, 2);
    default: throw std::invalid_argument("generators have weight 2, 4 or 6");
  }
}

int qmf_weight(const Exponents& e) { return 2 * e[0] + 4 * e[1] + 6 * e[2]; }

Element expand_qmf(const Poly& p) {
  if (p.nvars() != 3) throw std::invalid_argument("expected a polynomial in three generators");
  Element out;
  for (const auto& [e, c] : p.terms()) {
    Element m = unit_element();
    for (int i = 0; i < 3; ++i) m = stuffle(m, stuffle_power(Gk(2 * i + 2), e[static_cast<std::size_t>(i)]));
    out.add(m, c);
  }
  return out;
}

Poly qmf_D(const Poly& p) {
  const Poly g2 = qmf_generator(2), g4 = qmf_generator(4), g6 = qmf_generator(6);
  return poly_derivation(p, {
                                Rational(5) * g4 - Rational(2) * (g2 * g2),
                                Rational(14) * g6 - Rational(8) * (g2 * g4),
                                Rational(120, 7) * (g4 * g4) - Rational(12) * (g2 * g6),
                            });
}

Poly qmf_W(const Poly& p) {
  Poly out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, c * qmf_weight(e));
  return out;
}

Poly qmf_delta(const Poly& p, const Rational& delta_g2) {
  return poly_derivation(p, {Poly::constant(3, delta_g2), Poly(3), Poly(3)});
}

Rational eisenstein_normalisation(int k) {
  Rational out = Rational(-2 * factorial(k)) / bernoulli(k);
  out.canonicalize();
  return out;
}

Rational euler_coefficient(int m) {
  Rational out = -bernoulli(2 * m) / Rational(2 * factorial(2 * m));
  Integer p = 1;
  for (int i = 0; i < m; ++i) p *= -24;
  out *= Rational(p);
  out.canonicalize();
  return out;
}

EulerDecomposition euler_decomposition(QuotientEngine& engine, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  EulerDecomposition out;
  out.m = m;
  out.coefficient = euler_coefficient(m);
  const int k = 2 * m;
  const Element target = Gk(k) - out.coefficient * stuffle_power(Gk(2), m);
  std::vector<Exponents> monomials;
  for (int c = 0; 6 * c <= k - 2; ++c)
    for (int b = 0; 6 * c + 4 * b <= k - 2; ++b)
      if ((k - 2 - 6 * c - 4 * b) % 2 == 0) monomials.push_back(mono((k - 2 - 6 * c - 4 * b) / 2, b, c));
  std::vector<Element> images;
  if (k > 2)
    for (const auto& e : monomials)
      images.push_back(engine.normal_form(apply_D(expand_qmf(term(3, e, 1))), IdealKind::swap, k));
  const Element rhs = engine.normal_form(target, IdealKind::swap, k);

  // Solve rhs = Σ x_i images[i] column by column over the words that occur.
  std::map<Word, std::size_t> cols;
  for (const auto& x : images)
    for (const auto& [w, c] : x) cols.emplace(w, 0);
  for (const auto& [w, c] : rhs) cols.emplace(w, 0);
  std::size_t idx = 0;
  for (auto& [w, i] : cols) i = idx++;
  const std::size_t n = images.size();
  std::vector<std::vector<Rational>> a(cols.size(), std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [w, c] : images[j]) a[cols[w]][j] = c;
  for (const auto& [w, c] : rhs) a[cols[w]][n] = c;
  std::vector<int> pivot_of(n, -1);
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < a.size(); ++j) {
    std::size_t p = r;
    while (p < a.size() && a[p][j] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][j];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][j] == 0) continue;
      const Rational f = a[i][j];
      for (std::size_t t = 0; t <= n; ++t) a[i][t] -= f * a[r][t];
    }
    pivot_of[j] = static_cast<int>(r++);
  }
  out.potential = Poly(3);
  for (std::size_t j = 0; j < n; ++j)
    if (pivot_of[j] >= 0) out.potential.add_term(monomials[j], a[static_cast<std::size_t>(pivot_of[j])][n]);
  out.check = check_in_ideal(engine, IdealKind::swap, "euler(" + std::to_string(m) + ")",
                             target - apply_D(expand_qmf(out.potential)));
  return out;
}

std::vector<IdentityCheck> verify_ramanujan(QuotientEngine& engine) {
  std::vector<IdentityCheck> out;
  for (int k : {2, 4, 6}) {
    const Poly g = qmf_generator(k);
    out.push_back(check_in_ideal(engine, IdealKind::swap, "ramanujan(" + std::to_string(k) + ")",
                                 apply_D(Gk(k)) - expand_qmf(qmf_D(g))));
  }
  return out;
}

IdentityCheck verify_chazy(QuotientEngine& engine) {
  const Element g = Gk(2);
  const Element d1 = apply_D(g), d2 = apply_D(d1), d3 = apply_D(d2);
  return check_in_ideal(engine, IdealKind::swap, "chazy",
                        d3 + Rational(24) * product(g, d2) - Rational(36) * product(d1, d1));
}

Poly chazy_D(const Poly& p) {
  const Poly u0 = Poly::variable(3, 0), u1 = Poly::variable(3, 1), u2 = Poly::variable(3, 2);
  return poly_derivation(p, {u1, u2, Rational(-24) * (u0 * u2) + Rational(36) * (u1 * u1)});
}

Poly g4_in_derivatives() {
  const Poly u0 = Poly::variable(3, 0), u1 = Poly::variable(3, 1);
  return Rational(1, 5) * u1 + Rational(2, 5) * (u0 * u0);
}

Poly g6_in_derivatives() {
  const Poly u0 = Poly::variable(3, 0), u1 = Poly::variable(3, 1), u2 = Poly::variable(3, 2);
  return Rational(1, 70) * u2 + Rational(6, 35) * (u0 * u1) + Rational(8, 35) * u0.pow(3);
}

Poly delta_cusp_form() {
  const Poly g4 = qmf_generator(4), g6 = qmf_generator(6);
  return Rational(2400 * factorial(6)) * g4.pow(3) - Rational(420 * factorial(7)) * g6.pow(2);
}

bool CuspCertificate::holds() const {
  if (!matches_display || !free_of_pure_power || !derivative_identity) return false;
  for (const auto& c : supporting)
    if (!c.holds) return false;
  return true;
}

CuspCertificate verify_cusp_properties(QuotientEngine& engine) {
  CuspCertificate out;
  const Poly g4 = g4_in_derivatives(), g6 = g6_in_derivatives();
  const Poly delta = Rational(2400 * factorial(6)) * g4.pow(3) - Rational(420 * factorial(7)) * g6.pow(2);
  out.scaled_expansion = Rational(1, 432) * delta;

  Poly display(3);
  display.add_term(mono(2, 2, 0), 48);
  display.add_term(mono(0, 3, 0), 32);
  display.add_term(mono(3, 0, 1), -32);
  display.add_term(mono(1, 1, 1), -24);
  display.add_term(mono(0, 0, 2), -1);
  out.matches_display = out.scaled_expansion == display;
  out.free_of_pure_power = out.scaled_expansion.coefficient(mono(6, 0, 0)) == 0;

  const Rational e2 = eisenstein_normalisation(2);
  out.derivative_identity = chazy_D(delta) == Rational(e2) * (Poly::variable(3, 0) * delta);

  const Element g = Gk(2);
  const Element dg = apply_D(g), ddg = apply_D(dg);
  out.supporting.push_back(check_in_ideal(engine, IdealKind::swap, "g4_from_derivatives",
                                          Gk(4) - (Rational(1, 5) * dg + Rational(2, 5) * product(g, g))));
  out.supporting.push_back(check_in_ideal(
      engine, IdealKind::swap, "g6_from_derivatives",
      Gk(6) - (Rational(1, 70) * ddg + Rational(6, 35) * product(g, dg) + Rational(8, 35) * stuffle_power(g, 3))));
  out.supporting.push_back(verify_chazy(engine));
  out.supporting.push_back(check_in_ideal(engine, IdealKind::swap, "delta_g4", apply_delta(Gk(4))));
  out.supporting.push_back(check_in_ideal(engine, IdealKind::swap, "delta_g6", apply_delta(Gk(6))));
  IdentityCheck closure;
  closure.name = "delta_of_cusp_form";
  closure.weight = 10;
  closure.holds = qmf_delta(delta_cusp_form(), 1).is_zero();
  out.supporting.push_back(closure);
  return out;
}

Element rankin_cohen(const Element& f, const Element& g, int n, int k, int l) {
  if (n < 0) throw std::invalid_argument("negative bracket index");
  if (!f.is_zero() && (!is_homogeneous(f) || max_weight(f) != k)) throw std::invalid_argument("f is not of weight k");
  if (!g.is_zero() && (!is_homogeneous(g) || max_weight(g) != l)) throw std::invalid_argument("g is not of weight l");
  std::vector<Element> df{f}, dg{g};
  for (int i = 1; i <= n; ++i) {
    df.push_back(apply_D(df.back()));
    dg.push_back(apply_D(dg.back()));
  }
  Element out;
  for (int r = 0; r <= n; ++r) {
    const int s = n - r;
    const Rational c = sign(r) * binom(k + n - 1, s) * binom(l + n - 1, r);
    out.add(product(df[static_cast<std::size_t>(r)], dg[static_cast<std::size_t>(s)]), c);
  }
  return out;
}

Poly rankin_cohen(const Poly& f, const Poly& g, int n) {
  auto weight_of = [](const Poly& p) {
    int w = -1;
    for (const auto& [e, c] : p.terms()) {
      if (w >= 0 && qmf_weight(e) != w) throw std::invalid_argument("inhomogeneous polynomial");
      w = qmf_weight(e);
    }
    return std::max(w, 0);
  };
  const int k = weight_of(f), l = weight_of(g);
  std::vector<Poly> df{f}, dg{g};
  for (int i = 1; i <= n; ++i) {
    df.push_back(qmf_D(df.back()));
    dg.push_back(qmf_D(dg.back()));
  }
  Poly out(3);
  for (int r = 0; r <= n; ++r) {
    const int s = n - r;
    out += (sign(r) * binom(k + n - 1, s) * binom(l + n - 1, r)) *
           (df[static_cast<std::size_t>(r)] * dg[static_cast<std::size_t>(s)]);
  }
  return out;
}

IdentityCheck verify_rc_delta_closure(QuotientEngine& engine, int n) {
  IdentityCheck out;
  out.name = "rankin_cohen_delta(" + std::to_string(n) + ")";
  out.weight = 10 + 2 * n - 2;
  const Element dg2 = engine.normal_form(apply_delta(Gk(2)), IdealKind::swap, 2);
  const bool scalar = dg2.is_zero() || (dg2.size() == 1 && dg2.begin()->first.empty());
  const bool modular = engine.in_ideal(apply_delta(Gk(4)), IdealKind::swap, 2) &&
                       engine.in_ideal(apply_delta(Gk(6)), IdealKind::swap, 4);
  const Rational c = dg2.coefficient(Word{});
  const Poly bracket = rankin_cohen(qmf_generator(4), qmf_generator(6), n);
  const Poly image = qmf_delta(bracket, c);
  out.holds = scalar && modular && image.is_zero();
  if (!image.is_zero()) out.residual = expand_qmf(image);
  return out;
}

ModularDecomposition modular_decomposition(QuotientEngine& engine, int k) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("weight must be even and at least 4");
  ModularDecomposition out;
  out.weight = k;
  std::vector<std::pair<int, int>> monomials;
  for (int c = 0; 6 * c <= k; ++c)
    if ((k - 6 * c) % 4 == 0) monomials.emplace_back((k - 6 * c) / 4, c);
  out.modular_dim = monomials.size();
  // Every monomial projects onto the line through G(2)^{k/2}; G(k) itself projects to a nonzero multiple.
  out.cusp_dim = out.modular_dim - (euler_coefficient(k / 2) != 0 ? 1 : 0);
  if (k > engine.options().max_weight) return out;
  out.checked_in_quotient = true;
  out.verified = true;
  const Element power = stuffle_power(Gk(2), k / 2);
  for (const auto& [b, c] : monomials) {
    Rational lambda = 1;
    for (int i = 0; i < b; ++i) lambda *= euler_coefficient(2);
    for (int i = 0; i < c; ++i) lambda *= euler_coefficient(3);
    const Element m = stuffle(stuffle_power(Gk(4), b), stuffle_power(Gk(6), c));
    out.verified = out.verified && engine.in_ideal(m - lambda * power, IdealKind::combined, k);
  }
  out.verified = out.verified && engine.in_ideal(Gk(k) - euler_coefficient(k / 2) * power, IdealKind::combined, k);
  return out;
}

}  // namespace fmes
