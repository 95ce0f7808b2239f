#pragma once

#include "fmes/lincomb.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace fmes {

// b_{k_1} b_0^{m_1} ... b_{k_r} b_0^{m_r} as the pairs (k_i, m_i); throws on a leading b_0.
std::vector<std::pair<int, int>> balanced_blocks(const BWord& w);
BWord from_blocks(const std::vector<std::pair<int, int>>& blocks);

BWord tau(const BWord& w);
BElement tau(const BElement& x);

// The isomorphism (Q<B>^0, *_b) -> (Q<A>, *) and its inverse.
Element phi_iso(const BWord& w);
Element phi_iso(const BElement& x);
BElement phi_inverse(const Word& w);
BElement phi_inverse(const Element& x);

BElement D_balanced(const BWord& w);
BElement D_balanced(const BElement& x);

// dim of (Q<B>^0, *_b) / (τ(w) - w) in weight k.
std::size_t balanced_quotient_dim(int k);

}  // namespace fmes
