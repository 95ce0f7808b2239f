#pragma once

#include "fmes/lincomb.hpp"
#include "fmes/quotient.hpp"

#include <optional>

namespace fmes {

// A commutative Q-algebra realised as (Q<A>, *) modulo an ideal, with everything of weight
// above the cutoff set to zero. Rationals are the weight-zero elements.
class CoeffRing {
 public:
  explicit CoeffRing(int cutoff) : cutoff_(cutoff) {}
  CoeffRing(QuotientEngine& engine, IdealKind kind, int cutoff) : engine_(&engine), kind_(kind), cutoff_(cutoff) {}

  [[nodiscard]] int cutoff() const { return cutoff_; }
  [[nodiscard]] bool is_quotient() const { return engine_ != nullptr; }

  [[nodiscard]] Element reduce(const Element& x) const;
  [[nodiscard]] Element mul(const Element& a, const Element& b) const;
  // Units are the elements with a nonzero rational part.
  [[nodiscard]] std::optional<Element> inverse(const Element& a) const;
  [[nodiscard]] bool equal(const Element& a, const Element& b) const { return reduce(a - b).is_zero(); }

  static Element one() { return unit_element(); }
  static Element scalar(const Rational& c) { return Element::scalar(c); }

 private:
  QuotientEngine* engine_ = nullptr;
  IdealKind kind_ = IdealKind::combined;
  int cutoff_;
};

}  // namespace fmes
