#include "fmes/coeff_ring.hpp"

#include "fmes/qshuffle.hpp"

namespace fmes {

Element CoeffRing::reduce(const Element& x) const {
  Element kept;
  for (const auto& [w, c] : x)
    if (w.weight() <= cutoff_) kept.add(w, c);
  if (!engine_ || kept.is_zero()) return kept;
  return engine_->normal_form(kept, kind_, std::max(0, max_weight(kept)));
}

Element CoeffRing::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [u, x] : a)
    for (const auto& [v, y] : b)
      if (u.weight() + v.weight() <= cutoff_) out.add(*stuffle_shared(u, v), x * y);
  return reduce(out);
}

std::optional<Element> CoeffRing::inverse(const Element& a) const {
  const Rational c = a.coefficient(Word{});
  if (c == 0) return std::nullopt;
  // a = c(1 - n) with n of positive weight, so a^{-1} = c^{-1} Σ n^j.
  Element n = unit_element() - Rational(1 / c) * reduce(a);
  Element term = unit_element(), out = unit_element();
  for (int j = 1; j <= cutoff_; ++j) {
    term = mul(term, n);
    if (term.is_zero()) break;
    out += term;
  }
  return Rational(1 / c) * out;
}

}  // namespace fmes
