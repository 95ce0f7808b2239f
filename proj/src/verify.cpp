#include "fmes/verify.hpp"

#include "fmes/balanced.hpp"
#include "fmes/bimould.hpp"
#include "fmes/derivations.hpp"
#include "fmes/enumerate.hpp"
#include "fmes/modular.hpp"
#include "fmes/mzv.hpp"
#include "fmes/qseries.hpp"
#include "fmes/qshuffle.hpp"
#include "fmes/swap.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <exception>
#include <random>
#include <sstream>

namespace fmes {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::finding:
      return "finding";
  }
  return {};
}

bool SuiteReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

const std::vector<std::size_t>& expected_fmes_dims() {
  static const std::vector<std::size_t> dims{1, 1, 2, 4, 7, 13, 23, 41, 73};
  return dims;
}

namespace {

struct Outcome {
  bool ok = false;
  std::string residual;
};

struct Check {
  std::string id;
  std::string statement;
  bool finding = false;
  std::function<Outcome()> run;
};

Outcome ok() { return {true, ""}; }
Outcome bad(std::string r) { return {false, std::move(r)}; }
Outcome from(const IdentityCheck& c) { return {c.holds, c.holds ? "" : to_string(c.residual)}; }
Outcome from_all(const std::vector<IdentityCheck>& cs) {
  for (const auto& c : cs)
    if (!c.holds) return bad(c.name + ": " + to_string(c.residual));
  return ok();
}

// First word of weight <= max_weight violating pred, as a residual.
template <class Pred>
Outcome all_words(int max_weight, Pred&& pred) {
  for (int n = 0; n <= max_weight; ++n)
    for (const auto& w : words_of_weight(n))
      if (!pred(w)) return bad(to_string(w));
  return ok();
}

Outcome leibniz(const Derivation& d, int max_weight) {
  for (int n = 0; n <= max_weight; ++n)
    for (int m = n; m <= max_weight - n; ++m)
      for (const auto& u : words_of_weight(n))
        for (const auto& v : words_of_weight(m)) {
          const Element lhs = d(stuffle(u, v));
          const Element rhs = stuffle(d(Element(u)), Element(v)) + stuffle(Element(u), d(Element(v)));
          if (lhs != rhs) return bad(to_string(u) + " * " + to_string(v));
        }
  return ok();
}

// ---- sl2 ----

std::vector<Check> sl2_checks(QuotientEngine& engine, const VerifyOptions& o) {
  const int k = o.max_weight;
  const int kc = std::min(k, 5);
  std::vector<Check> out;
  const auto D = op_D(), W = op_W(), delta = op_delta();
  out.push_back({"sl2.W_D", "[W,D] = 2D on words", false,
                 [=] { return all_words(k, [&](const Word& w) { return commutator(W, D)(w) == Rational(2) * D(w); }); }});
  out.push_back({"sl2.W_delta", "[W,delta] = -2 delta on words", false, [=] {
                   return all_words(k, [&](const Word& w) { return commutator(W, delta)(w) == Rational(-2) * delta(w); });
                 }});
  out.push_back({"sl2.delta_D", "[delta,D] = W on words", false,
                 [=] { return all_words(k, [&](const Word& w) { return commutator(delta, D)(w) == W(w); }); }});
  for (int i = 1; i <= 5; ++i) {
    const auto di = op_delta_component(i);
    const std::string n = std::to_string(i);
    out.push_back({"sl2.delta" + n + "_W", "[delta^" + n + ",W] = 2 delta^" + n, false, [=] {
                     return all_words(kc, [&](const Word& w) { return commutator(di, W)(w) == Rational(2) * di(w); });
                   }});
    if (i == 1) {
      out.push_back({"sl2.delta1_D", "[delta^1,D] = W", false,
                     [=] { return all_words(kc, [&](const Word& w) { return commutator(di, D)(w) == W(w); }); }});
    } else {
      out.push_back({"sl2.delta" + n + "_D", "[delta^" + n + ",D] = 0", false,
                     [=] { return all_words(kc, [&](const Word& w) { return commutator(di, D)(w).is_zero(); }); }});
    }
  }
  out.push_back({"sl2.delta45_D", "[delta^4 + delta^5, D] = 0", false, [=] {
                   const auto d45 = linear_combination<Letter>({{1, op_delta_component(4)}, {1, op_delta_component(5)}}, "d45");
                   return all_words(k, [&](const Word& w) { return commutator(d45, D)(w).is_zero(); });
                 }});
  for (const auto& d : {op_D(), op_W(), op_omega(), op_delta()})
    out.push_back({"sl2.leibniz_" + d.name, d.name + " is a derivation for the stuffle product", false,
                   [=] { return leibniz(d, k); }});

  // Conjecture reports.
  const auto t = op_t();
  out.push_back({"sl2.t_leibniz", "t satisfies the Leibniz rule", true, [=, &engine] {
                   const Outcome exact = leibniz(t, k);
                   if (exact.ok) return Outcome{true, "exact"};
                   for (int n = 0; n <= k; ++n)
                     for (int m = n; m <= k - n; ++m)
                       for (const auto& u : words_of_weight(n))
                         for (const auto& v : words_of_weight(m)) {
                           const Element diff = t(stuffle(u, v)) - stuffle(t(Element(u)), Element(v)) -
                                                stuffle(Element(u), t(Element(v)));
                           if (!diff.is_zero() && !engine.in_ideal(diff, IdealKind::swap, n + m - 3))
                             return bad("fails modulo the swap ideal at " + to_string(u) + " * " + to_string(v));
                         }
                   return Outcome{true, "modulo the swap ideal only; exact failure at " + exact.residual};
                 }});
  out.push_back({"sl2.t_equivariance", "[t,swap] maps into the swap ideal", true, [=, &engine] {
                   Outcome out = all_words(k, [&](const Word& w) {
                     const Element diff = t(swap_word(w)) - swap(t(Element(w)));
                     return diff.is_zero() || engine.in_ideal(diff, IdealKind::swap, w.weight() - 3);
                   });
                   if (out.ok) out.residual = "holds up to weight " + std::to_string(k);
                   return out;
                 }});
  out.push_back({"sl2.t_independent", "t and [omega,delta] are linearly independent", true, [=] {
                   const auto od = op_omega_delta();
                   std::string witness_od, witness_t;
                   for (int n = 0; n <= k && (witness_od.empty() || witness_t.empty()); ++n)
                     for (const auto& w : words_of_weight(n)) {
                       const Element a = t(w), b = od(w);
                       if (witness_od.empty() && !b.is_zero()) witness_od = to_string(w);
                       if (witness_t.empty() && !a.is_zero() && b.is_zero()) witness_t = to_string(w);
                     }
                   if (witness_od.empty() || witness_t.empty()) return bad("no witness pair");
                   return Outcome{true, "[omega,delta] nonzero on " + witness_od + "; t nonzero where [omega,delta] vanishes on " +
                                            witness_t};
                 }});
  out.push_back({"sl2.eisenstein_closure_D", "D maps G(k_1,...,k_r) with all k_i >= 2 into their span", true,
                 [=, &engine] {
                   const int top = std::max(k + 1, 7);
                   for (int n = 2; n + 2 <= top; ++n) {
                     std::vector<SparseRow> span;
                     for (const auto& w : words_of_weight(n + 2)) {
                       bool admissible = lower_weight(w) == 0;
                       for (const auto& a : w) admissible = admissible && a.k >= 2;
                       if (admissible) span.push_back(to_row(engine.normal_form(Element(w), IdealKind::swap, n + 2)));
                     }
                     const Echelon e = echelon_serial(count_words(n + 2), span);
                     for (const auto& w : words_of_weight(n)) {
                       bool admissible = lower_weight(w) == 0;
                       for (const auto& a : w) admissible = admissible && a.k >= 2;
                       if (!admissible) continue;
                       const Element image = engine.normal_form(apply_D(Element(w)), IdealKind::swap, n + 2);
                       if (!e.reduce(to_row(image)).empty()) return bad("D " + to_string(w) + " leaves the span");
                     }
                   }
                   return Outcome{true, "closed up to weight " + std::to_string(top)};
                 }});
  return out;
}

// ---- equivariance ----

std::vector<Check> equivariance_checks(const VerifyOptions& o) {
  const int k = o.max_weight;
  std::vector<Check> out;
  for (const auto& d : {op_D(), op_W(), op_omega(), op_delta()})
    out.push_back({"equivariance.swap_" + d.name, "swap commutes with " + d.name, false, [=] {
                     return all_words(k, [&](const Word& w) { return swap(d(w)) == d(swap_word(w)); });
                   }});
  out.push_back({"equivariance.involution", "swap is an involution", false,
                 [=] { return all_words(k, [](const Word& w) { return swap(swap_word(w)) == Element(w); }); }});
  out.push_back({"equivariance.two_implementations", "substitution and closed formula agree", false,
                 [=] { return all_words(k, [](const Word& w) { return swap_word(w) == swap_coeff_formula(w); }); }});
  return out;
}

// ---- relations ----

std::vector<Check> relation_checks(QuotientEngine& engine, const VerifyOptions& o) {
  const int k = o.max_weight;
  std::vector<Check> out;
  out.push_back({"relations.depth2_dsh", "depth-two double shuffle, total weight <= " + std::to_string(k + 1), false,
                 [=, &engine] {
                   for (int wt = 2; wt <= k + 1; ++wt)
                     for (int k1 = 1; k1 < wt; ++k1)
                       for (int k2 = 1; k1 + k2 <= wt; ++k2)
                         for (int d1 = 0; k1 + k2 + d1 <= wt; ++d1) {
                           const int d2 = wt - k1 - k2 - d1;
                           const auto c = verify_depth2_dsh(engine, k1, k2, d1, d2);
                           if (!c.holds) return bad(c.name + ": " + to_string(c.residual));
                         }
                   return ok();
                 }});
  for (int wt = 4; wt <= k + 2; wt += 2) {
    const std::string n = std::to_string(wt);
    out.push_back({"relations.even_weight_" + n, "even-weight binomial relations in weight " + n, false, [=, &engine] {
                     std::vector<IdentityCheck> cs;
                     for (int k1 = 1; k1 < wt; ++k1) cs.push_back(verify_relpevevk(engine, k1, wt - k1));
                     return from_all(cs);
                   }});
    out.push_back({"relations.modular_product_first_" + n, "first modular product identity in weight " + n, false,
                   [=, &engine] { return from(verify_mfprod_first(engine, wt)); }});
    if (wt >= 6)
      out.push_back({"relations.modular_product_second_" + n, "second modular product identity in weight " + n, false,
                     [=, &engine] { return from(verify_mfprod_second(engine, wt)); }});
  }
  return out;
}

// ---- euler, ramanujan, chazy, cusp ----

std::vector<Check> euler_checks(QuotientEngine& engine, const VerifyOptions& o) {
  std::vector<Check> out;
  for (int m = 1; 2 * m <= o.max_weight; ++m) {
    const std::string n = std::to_string(m);
    out.push_back({"euler.m" + n, "G(" + std::to_string(2 * m) + ") = c G(2)^" + n + " + D of a quasimodular form", false,
                   [=, &engine] {
                     const auto d = euler_decomposition(engine, m);
                     const Rational expected = euler_coefficient(m);
                     if (d.coefficient != expected) return bad("coefficient " + to_string(d.coefficient));
                     if (!d.check.holds) return bad(to_string(d.check.residual));
                     return Outcome{true, "coefficient " + to_string(d.coefficient) + ", potential " +
                                              d.potential.render({"G2", "G4", "G6"})};
                   }});
  }
  return out;
}

std::vector<Check> ramanujan_checks(QuotientEngine& engine) {
  return {{"ramanujan.equations", "Ramanujan's equations in weights 4, 6, 8", false,
           [&engine] { return from_all(verify_ramanujan(engine)); }},
          {"ramanujan.polynomial_model", "[W,D] = 2D on the quasimodular polynomial ring", false, [] {
             for (int a = 0; a <= 3; ++a)
               for (int b = 0; b <= 2; ++b)
                 for (int c = 0; c <= 1; ++c) {
                   Poly p(3);
                   p.add_term({a, b, c}, 1);
                   if (qmf_W(qmf_D(p)) - qmf_D(qmf_W(p)) != Rational(2) * qmf_D(p)) return bad(p.render({"G2", "G4", "G6"}));
                 }
             return ok();
           }}};
}

std::vector<Check> chazy_checks(QuotientEngine& engine) {
  return {{"chazy.equation", "Chazy equation for G(2) in weight 8", false, [&engine] { return from(verify_chazy(engine)); }}};
}

std::vector<Check> cusp_checks(QuotientEngine& engine) {
  std::vector<Check> out;
  out.push_back({"cusp.certificate", "cusp form expansion, kernel membership and D(Delta) = E(2) Delta", false,
                 [&engine] {
                   const auto c = verify_cusp_properties(engine);
                   if (!c.matches_display) return bad("expansion differs from the displayed polynomial");
                   if (!c.free_of_pure_power) return bad("pure power of G(2) present");
                   if (!c.derivative_identity) return bad("derivative identity fails");
                   return from_all(c.supporting);
                 }});
  out.push_back({"cusp.rankin_cohen", "delta annihilates the first Rankin-Cohen brackets of G(4), G(6)", false,
                 [&engine] { return from_all({verify_rc_delta_closure(engine, 1), verify_rc_delta_closure(engine, 2)}); }});
  return out;
}

// ---- eds ----

std::vector<Check> eds_checks(QuotientEngine& engine, const VerifyOptions& o) {
  const int k = o.max_weight;
  std::vector<Check> out;
  out.push_back({"eds.zeta3", "zeta(3) = zeta(2,1) among formal zeta values", false, [&engine] {
                   const Element d = zeta_f(engine, make_zword({3})) - zeta_f(engine, make_zword({2, 1}));
                   return d.is_zero() ? ok() : bad(to_string(d));
                 }});
  out.push_back({"eds.projection_kills_D", "the projection vanishes on the image of D", false, [=, &engine] {
                   return all_words(k - 2, [&](const Word& w) {
                     return engine.normal_form(apply_D(Element(w)), IdealKind::combined, w.weight() + 2).is_zero();
                   });
                 }});
  out.push_back({"eds.dimensions", "dim H^1_k / EDS_k = dim Z^f_k and lower-weight-zero surjectivity", false,
                 [=, &engine] {
                   std::string table;
                   for (const auto& d : compare_dims(engine, k)) {
                     table += (table.empty() ? "" : ",") + std::to_string(d.zf_dim);
                     if (!d.equal())
                       return bad("weight " + std::to_string(d.weight) + ": eds " + std::to_string(d.eds_dim) + ", zf " +
                                  std::to_string(d.zf_dim) + ", lwt0 " + std::to_string(d.lwt0_rank));
                   }
                   return Outcome{true, "dims " + table};
                 }});
  out.push_back({"eds.character", "formal zeta values satisfy the extended double shuffle relations", false,
                 [=, &engine] {
                   const int c = std::min(k, 6);
                   const auto r = eds_check(zeta_character(engine, c), CoeffRing(engine, IdealKind::combined, c));
                   if (!r.unital) return bad("not unital");
                   if (!r.stuffle_homomorphism) return bad("stuffle side fails");
                   if (!r.shuffle_homomorphism) return bad("shuffle side fails");
                   return ok();
                 }});
  return out;
}

// ---- dims ----

std::vector<Check> dims_checks(QuotientEngine& engine, const VerifyOptions& o) {
  std::vector<Check> out;
  const auto& expected = expected_fmes_dims();
  for (int n = 0; n <= o.max_weight; ++n) {
    const std::string s = std::to_string(n);
    const bool known = static_cast<std::size_t>(n) < expected.size();
    out.push_back({"dims.fmes_" + s, "dim FMES_" + s, !known, [=, &engine] {
                     const std::size_t d = engine.dim(IdealKind::swap, n);
                     if (known && d != expected[static_cast<std::size_t>(n)]) return bad(std::to_string(d));
                     return Outcome{true, std::to_string(d)};
                   }});
    out.push_back({"dims.lwt0_" + s, "dim of the single-indexed span versus dim FMES_" + s, true, [=, &engine] {
                     const std::size_t a = lwt0_span_dim(engine, n), b = engine.dim(IdealKind::swap, n);
                     return Outcome{a == b, std::to_string(a) + " of " + std::to_string(b)};
                   }});
    out.push_back({"dims.zf_" + s, "dim of the formal zeta slice in weight " + s, true,
                   [=, &engine] { return Outcome{true, std::to_string(engine.dim(IdealKind::combined, n))}; }});
  }
  return out;
}

// ---- bimould ----

Bimould random_bimould(std::mt19937_64& rng, const CoeffRing& ring, const Truncation& t, bool x_side) {
  std::uniform_int_distribution<int> coin(0, 3), val(-3, 3);
  Bimould f(ring, t);
  for (const Word& w : admitted_words(t)) {
    bool keep = true;
    for (const auto& a : w) keep = keep && (x_side ? a.d == 0 : a.k == 1);
    if (keep && coin(rng) == 0) f.set(w, Element::scalar(val(rng)));
  }
  f.set(Word{}, Element::scalar(1 + coin(rng)));
  return f;
}

std::vector<Check> bimould_checks(QuotientEngine& engine, const VerifyOptions& o) {
  std::vector<Check> out;
  const Truncation t{3, 6};
  const CoeffRing q(0);
  out.push_back({"bimould.anticommutation", "swap(F G) = swap(G) swap(F) for F in M_Y, G in M_X", false, [=] {
                   std::mt19937_64 rng(101);
                   for (int s = 0; s < 50; ++s) {
                     const Bimould f = random_bimould(rng, q, t, false), g = random_bimould(rng, q, t, true);
                     if (!(swap_b(concat(f, g)) == concat(swap_b(g), swap_b(f)))) return bad("sample " + std::to_string(s));
                   }
                   return ok();
                 }});
  out.push_back({"bimould.round_trip", "Psi(Phi(H)) = H and Phi(Psi(F)) = F", false, [=] {
                   std::mt19937_64 rng(102);
                   for (int s = 0; s < 30; ++s) {
                     const Bimould h = random_bimould(rng, q, t, true);
                     const Bimould f = phi_map(h);
                     if (!(psi_map(f) == h) || !(phi_map(psi_map(f)) == f) || !(swap_b(f) == f))
                       return bad("sample " + std::to_string(s));
                   }
                   return ok();
                 }});
  out.push_back({"bimould.coassociativity", "coassociativity of the coproduct on X^(k-1) Y^d, k + d <= 5", false, [] {
                   for (int k = 1; k <= 5; ++k)
                     for (int d = 0; k + d <= 5; ++d) {
                       const MonomialTensor start{{{Monomial{std::make_pair(k - 1, d)}}, Rational(1)}};
                       const auto once = coproduct_slot(start, 0);
                       if (coproduct_slot(once, 0) != coproduct_slot(once, 1))
                         return bad("X^" + std::to_string(k - 1) + " Y^" + std::to_string(d));
                     }
                   return ok();
                 }});
  out.push_back({"bimould.grouplike_equivalence", "group-like equivalence on the formal zeta bimould", false,
                 [=, &engine] {
                   const int c = std::min(o.max_weight, 5);
                   const auto r = check_grouplike_equivalence(zeta_bimould(engine, c));
                   if (!r.preconditions()) return bad("preconditions fail");
                   if (!r.grouplike || !r.x_part_grouplike || !r.corrected_grouplike || !r.agree())
                     return bad("grouplike " + std::to_string(r.grouplike) + ", x part " +
                                std::to_string(r.x_part_grouplike) + ", corrected " + std::to_string(r.corrected_grouplike));
                   return Outcome{true, "cutoff " + std::to_string(c)};
                 }});
  return out;
}

// ---- balanced ----

std::vector<Check> balanced_checks(QuotientEngine& engine, const VerifyOptions& o) {
  const int k = o.max_weight;
  std::vector<Check> out;
  out.push_back({"balanced.tau_swap", "swap(phi(w)) = phi(tau(w))", false, [=] {
                   for (int n = 1; n <= k; ++n)
                     for (const auto& w : bwords_of_weight(n))
                       if (swap(phi_iso(w)) != phi_iso(tau(w))) return bad(to_string(w));
                   return ok();
                 }});
  out.push_back({"balanced.homomorphism", "phi(u *_b v) = phi(u) * phi(v) on 100 random pairs", false, [=] {
                   std::mt19937_64 rng(103);
                   for (int s = 0; s < 100; ++s) {
                     std::uniform_int_distribution<int> wa(1, std::max(1, k - 1));
                     const auto& pa = bwords_of_weight(wa(rng));
                     const BWord u = pa[rng() % pa.size()];
                     std::uniform_int_distribution<int> wb(1, std::max(1, k - u.weight()));
                     const auto& pb = bwords_of_weight(wb(rng));
                     const BWord v = pb[rng() % pb.size()];
                     if (phi_iso(stuffle_b(u, v)) != stuffle(phi_iso(u), phi_iso(v)))
                       return bad(to_string(u) + " * " + to_string(v));
                   }
                   return ok();
                 }});
  out.push_back({"balanced.dimensions", "quotient by tau(w) - w has the FMES dimensions", false, [=, &engine] {
                   std::string table;
                   for (int n = 0; n <= std::min(k, 5); ++n) {
                     const std::size_t a = balanced_quotient_dim(n), b = engine.dim(IdealKind::swap, n);
                     if (a != b) return bad("weight " + std::to_string(n) + ": " + std::to_string(a) + " vs " + std::to_string(b));
                     table += (table.empty() ? "" : ",") + std::to_string(a);
                   }
                   return Outcome{true, "dims " + table};
                 }});
  return out;
}

// ---- qseries ----

std::vector<Check> qseries_checks(const VerifyOptions& o) {
  const int k = o.max_weight, n = o.q_order;
  std::vector<Check> out;
  out.push_back({"qseries.lower_weight_product", "g[2;1] g[3;2] = g[2,3;1,2] + g[3,2;2,1] + g[5;3] - g[3;3]/12", false,
                 [=] { return check_lower_weight_stuffle(n) ? ok() : bad("order " + std::to_string(n)); }});
  out.push_back({"qseries.swap_invariance", "g(w) = g(swap(w)) coefficientwise", false,
                 [=] { return all_words(k, [&](const Word& w) { return check_swap_invariance_g(w, n); }); }});
  out.push_back({"qseries.derivative", "g(D w) = q d/dq g(w)", false,
                 [=] { return all_words(k, [&](const Word& w) { return check_D_intertwining(w, n); }); }});
  for (const auto& c : {std::string("ramanujan"), std::string("chazy"), std::string("G(8)"), std::string("cusp form")}) {
    out.push_back({"qseries.quasimodular_" + c, c + " identities coefficientwise", false, [=] {
                     for (const auto& r : quasimodular_series_checks(n))
                       if (r.name.rfind(c, 0) == 0 && !r.holds) return bad(r.name);
                     return ok();
                   }});
  }
  out.push_back({"qseries.independence", "q-coefficients 1..3 of G(2), G(4), G(6) have rank 3", false, [] {
                   const auto r = eisenstein_coefficient_rank();
                   return r == 3 ? ok() : bad(std::to_string(r));
                 }});
  return out;
}

std::vector<Check> checks_for(const std::string& name, QuotientEngine& engine, const VerifyOptions& o) {
  if (name == "sl2") return sl2_checks(engine, o);
  if (name == "equivariance") return equivariance_checks(o);
  if (name == "relations") return relation_checks(engine, o);
  if (name == "euler") return euler_checks(engine, o);
  if (name == "ramanujan") return ramanujan_checks(engine);
  if (name == "chazy") return chazy_checks(engine);
  if (name == "cusp") return cusp_checks(engine);
  if (name == "eds") return eds_checks(engine, o);
  if (name == "dims") return dims_checks(engine, o);
  if (name == "bimould") return bimould_checks(engine, o);
  if (name == "balanced") return balanced_checks(engine, o);
  if (name == "qseries") return qseries_checks(o);
  if (name == "all") {
    std::vector<Check> all;
    for (const auto& s : suite_names())
      if (s != "all") {
        auto part = checks_for(s, engine, o);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      }
    return all;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"sl2",  "equivariance", "relations", "euler",    "ramanujan", "chazy", "cusp",
                                              "eds",  "dims",         "bimould",   "balanced", "qseries",   "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteReport run_suite(const std::string& name, QuotientEngine& engine, const VerifyOptions& options) {
  auto checks = checks_for(name, engine, options);
  std::sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  SuiteReport report{name, options.max_weight, options.q_order, std::vector<CheckResult>(checks.size())};
  std::vector<std::exception_ptr> errors(checks.size());
  const auto n = static_cast<long>(checks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    const auto& c = checks[static_cast<std::size_t>(i)];
    auto& r = report.checks[static_cast<std::size_t>(i)];
    r.id = c.id;
    r.statement = c.statement;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome out = c.run();
      r.status = c.finding ? CheckStatus::finding : (out.ok ? CheckStatus::pass : CheckStatus::fail);
      r.residual = out.residual;
      if (c.finding && !out.ok) r.residual = "not confirmed: " + r.residual;
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return report;
}

std::string report_json(const SuiteReport& report, bool with_timing) {
  nlohmann::ordered_json j;
  j["schema"] = "fmes-verify/1";
  j["suite"] = report.suite;
  j["max_weight"] = report.max_weight;
  j["q_order"] = report.q_order;
  j["passed"] = report.passed();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["statement"] = c.statement;
    e["status"] = to_string(c.status);
    e["residual"] = c.residual;
    if (with_timing) e["seconds"] = c.seconds;
    arr.push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    os << (c.status == CheckStatus::pass ? "PASS    " : c.status == CheckStatus::fail ? "FAIL    " : "FINDING ") << c.id;
    if (!c.residual.empty()) os << "  [" << c.residual << "]";
    os << '\n';
    failed += c.status == CheckStatus::fail;
  }
  os << report.checks.size() << " checks, " << failed << " failed\n";
  return os.str();
}

std::size_t lwt0_span_dim(QuotientEngine& engine, int k) {
  std::vector<SparseRow> rows;
  for (const auto& w : words_of_weight(k))
    if (lower_weight(w) == 0) rows.push_back(to_row(engine.normal_form(Element(w), IdealKind::swap, k)));
  return echelon_serial(count_words(k), rows).rank();
}

std::vector<DimRow> dimension_table(QuotientEngine& engine, const std::string& kind, int max_weight) {
  std::vector<DimRow> out;
  if (kind == "eds") {
    for (int n = 0; n <= max_weight; ++n) {
      const std::size_t words = zwords_of_weight(n).size();
      out.push_back({n, words, words - eds_ideal_rank(n)});
    }
    return out;
  }
  IdealKind ideal;
  if (kind == "fmes") {
    ideal = IdealKind::swap;
  } else if (kind == "zf") {
    ideal = IdealKind::combined;
  } else {
    throw std::invalid_argument("unknown ideal '" + kind + "'");
  }
  for (int n = 0; n <= max_weight; ++n) out.push_back({n, count_words(n), engine.dim(ideal, n)});
  return out;
}

std::string dims_json(const std::string& kind, const std::vector<DimRow>& rows) {
  nlohmann::ordered_json j;
  j["schema"] = "fmes-dims/1";
  j["ideal"] = kind;
  auto& arr = j["dims"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) arr.push_back({{"weight", r.weight}, {"words", r.words}, {"dim", r.dim}});
  return j.dump(2) + "\n";
}

}  // namespace fmes
