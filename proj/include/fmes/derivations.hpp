#pragma once

#include "fmes/poly.hpp"
#include "fmes/qshuffle.hpp"

#include <vector>

namespace fmes {

// Word-level maps.
Element apply_D(const Element& x);
Element apply_W(const Element& x);
Element apply_omega(const Element& x);
Element apply_delta(const Element& x);
// i = 1..5
Element apply_delta_component(int i, const Element& x);
Element apply_t(const Element& x);

// Closed forms on lower-weight-zero words; both reject other input.
Element apply_delta_lwt0(const Word& w);
Element apply_t_lwt0(const Word& w);
// G(z_2 * z - z_2 ш z) for z = z_{k_1}...z_{k_r}.
Element apply_D_lwt0(const Word& w);

Derivation op_D();
Derivation op_W();
Derivation op_omega();
Derivation op_delta();
Derivation op_delta_component(int i);
Derivation op_t();
Derivation op_omega_delta();

// The same maps assembled from the generic constructors.
Derivation omega_constructed();
Derivation delta_component_constructed(int i);
Derivation delta_constructed();

// Operators acting on the generating series: a polynomial prefactor times a chain of
// contractions φ_j^±, the first acting on the outermost level.
struct Contraction {
  bool plus = true;
  int j = 1;
};

struct MouldTerm {
  Poly prefactor;  // in X_1..X_r, Y_1..Y_r (indices 0..r-1, r..2r-1)
  std::vector<Contraction> chain;
};

using MouldOperator = std::function<std::vector<MouldTerm>(int depth)>;

Element apply_mould(const MouldOperator& op, const Word& w);
MouldOperator delta_mould();
MouldOperator omega_mould();
MouldOperator t_mould();
Element apply_delta_mould(const Element& x);

// f = Σ_i parts[i] * a^{*i} with d(parts[i]) = 0.
std::vector<Element> polynomial_representation(const Element& x, const Derivation& d, const Element& a);
Element reconstruct(const std::vector<Element>& parts, const Element& a);

}  // namespace fmes
