#pragma once

#include "fmes/lincomb.hpp"

namespace fmes {

// σ via the substitution (X_i, Y_i) -> (Y_1+...+Y_{r-i+1}, X_{r-i+1} - X_{r-i+2}) on the
// depth-r generating series, read back in the X^{k-1} Y^d / d! basis. Tables are cached per
// (weight, depth) block.
Element swap_word(const Word& w);
Element swap(const Element& x);

// Closed binomial/sign expression for the same coefficients.
Element swap_coeff_formula(const Word& w);

// σ extended linearly; depth_wise groups the input by depth first.
Element swap_restricts(const Element& x, bool depth_wise);

// All letters [1;d] / all letters [k;0].
bool in_upper_alphabet(const Word& w);
bool in_lower_alphabet(const Word& w);

}  // namespace fmes
