#pragma once

#include "fmes/lincomb.hpp"
#include "fmes/poly.hpp"
#include "fmes/quotient.hpp"

#include <string>
#include <vector>

namespace fmes {

// Outcome of reducing lhs - rhs in a quotient.
struct IdentityCheck {
  std::string name;
  int weight = 0;
  bool holds = false;
  Element residual;
};

IdentityCheck check_in_ideal(QuotientEngine& engine, IdealKind kind, std::string name, const Element& difference);

// The two expansions of the product of two depth-one elements.
Element depth2_stuffle_side(int k1, int k2, int d1, int d2);
Element depth2_swap_side(int k1, int k2, int d1, int d2);
IdentityCheck verify_depth2_dsh(QuotientEngine& engine, int k1, int k2, int d1, int d2);

// Both sides of the even-weight binomial relation, as lhs - rhs.
Element relpevevk_difference(int k1, int k2);
IdentityCheck verify_relpevevk(QuotientEngine& engine, int k1, int k2);

IdentityCheck verify_mfprod_first(QuotientEngine& engine, int k);
IdentityCheck verify_mfprod_second(QuotientEngine& engine, int k);

// Quasimodular polynomials: variables 0, 1, 2 stand for G(2), G(4), G(6).
Poly qmf_generator(int weight);
int qmf_weight(const Exponents& e);
Element expand_qmf(const Poly& p);
// Ramanujan's D and the weight operator on the polynomial ring.
Poly qmf_D(const Poly& p);
Poly qmf_W(const Poly& p);
// delta with delta(G(2)) = c and delta(G(4)) = delta(G(6)) = 0.
Poly qmf_delta(const Poly& p, const Rational& delta_g2);

// -2 k!/B_k, the factor turning G(k) into the series with constant term 1.
Rational eisenstein_normalisation(int k);

Rational euler_coefficient(int m);
struct EulerDecomposition {
  int m = 0;
  Rational coefficient;
  // Q = D(expand_qmf(potential)).
  Poly potential;
  IdentityCheck check;
};
EulerDecomposition euler_decomposition(QuotientEngine& engine, int m);

std::vector<IdentityCheck> verify_ramanujan(QuotientEngine& engine);
IdentityCheck verify_chazy(QuotientEngine& engine);

// Polynomials in u_i = D^i G(2), i = 0, 1, 2, with D(u_2) given by the Chazy equation.
Poly chazy_D(const Poly& p);
Poly g4_in_derivatives();
Poly g6_in_derivatives();

Poly delta_cusp_form();
struct CuspCertificate {
  Poly scaled_expansion;  // Δ/432 in u_0, u_1, u_2
  bool matches_display = false;
  bool free_of_pure_power = false;
  bool derivative_identity = false;
  std::vector<IdentityCheck> supporting;
  [[nodiscard]] bool holds() const;
};
CuspCertificate verify_cusp_properties(QuotientEngine& engine);

// Σ_{r+s=n} (-1)^r C(k+n-1, s) C(l+n-1, r) D^r f * D^s g
Element rankin_cohen(const Element& f, const Element& g, int n, int k, int l);
Poly rankin_cohen(const Poly& f, const Poly& g, int n);
// δ[G(4), G(6)]_n in the polynomial model, with δG(2) read off the quotient.
IdentityCheck verify_rc_delta_closure(QuotientEngine& engine, int n);

// M_k = Q G(k) + S_k: each modular monomial is a multiple of G(2)^{k/2} modulo the combined ideal.
struct ModularDecomposition {
  int weight = 0;
  std::size_t modular_dim = 0;
  std::size_t cusp_dim = 0;
  // False above the engine's weight limit; the dimensions then rest on the Euler coefficients alone.
  bool checked_in_quotient = false;
  bool verified = false;
};
ModularDecomposition modular_decomposition(QuotientEngine& engine, int k);

}  // namespace fmes
