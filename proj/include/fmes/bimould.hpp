#pragma once

#include "fmes/coeff_ring.hpp"
#include "fmes/lincomb.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace fmes {

// Words admitted by a truncated bimould.
struct Truncation {
  int max_depth = 0;
  int max_weight = 0;
  [[nodiscard]] bool admits(const Word& w) const { return w.depth() <= max_depth && w.weight() <= max_weight; }
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

std::vector<Word> admitted_words(const Truncation& t);

// F_n = Σ_w F(w) Π X_i^{k_i-1} Y_i^{d_i}/d_i! over words w of depth n, coefficients in a CoeffRing.
class Bimould {
 public:
  Bimould(CoeffRing ring, Truncation trunc) : ring_(std::move(ring)), trunc_(trunc) {}
  static Bimould unit(CoeffRing ring, Truncation trunc);

  [[nodiscard]] const CoeffRing& ring() const { return ring_; }
  [[nodiscard]] const Truncation& truncation() const { return trunc_; }
  [[nodiscard]] const std::map<Word, Element>& values() const { return values_; }

  [[nodiscard]] Element at(const Word& w) const;
  [[nodiscard]] Element operator()(const Element& x) const;
  // Throws std::out_of_range outside the truncation; the value is reduced in the ring.
  void set(const Word& w, const Element& value);

  friend bool operator==(const Bimould& a, const Bimould& b);

 private:
  CoeffRing ring_;
  Truncation trunc_;
  std::map<Word, Element> values_;
};

// Mismatched truncations throw std::invalid_argument.
Bimould concat(const Bimould& f, const Bimould& g);
// Throws std::domain_error when F(∅) is not a unit.
Bimould concat_inverse(const Bimould& f);

Bimould swap_b(const Bimould& f);
// Constant terms of each component (words [1;0]^n).
Bimould constant_part(const Bimould& f);
// Y_i = 0 (words with all d_i = 0).
Bimould x_part(const Bimould& f);
// a_n placed on [1;0]^n.
Bimould lambda_embed(const std::vector<Element>& series, const CoeffRing& ring, Truncation trunc);

bool in_mx(const Bimould& f);
bool in_my(const Bimould& f);

// σ(H) ⊙ c(H)^{-1} ⊙ H
Bimould phi_map(const Bimould& h);
Bimould psi_map(const Bimould& f);

// Tensor slots on depth <= 1: nullopt is the unit, {a, b} the depth-one monomial X^a Y^b.
using Monomial = std::optional<std::pair<int, int>>;
using MonomialTensor = std::map<std::vector<Monomial>, Rational>;
// letter: X^0 Y^0 is a depth-one monomial and is primitive.
// identified_unit: X^0 Y^0 is identified with the unit, so Δ(1) = 1 ⊗ 1.
enum class CoproductReading { letter, identified_unit };
MonomialTensor coproduct_monomial(const Monomial& m, CoproductReading reading = CoproductReading::letter);
// Applies the coproduct to slot i of every tensor.
MonomialTensor coproduct_slot(const MonomialTensor& t, std::size_t slot,
                              CoproductReading reading = CoproductReading::letter);

// Coproduct on words in the normalised basis: the coefficient of u ⊗ v is that of w in u * v.
std::map<std::pair<Word, Word>, Rational> coproduct_word(const Word& w);
// F(∅) = 1 and Δ(F) = F ⊗ F on all pairs inside the truncation.
bool is_grouplike(const Bimould& f);

// Functionals on words of the given weight inside the subalphabet that vanish on all
// products u * v of nonempty words.
enum class Alphabet { all, x_only, y_only };
std::vector<std::map<Word, Rational>> primitive_functionals(int weight, Alphabet alphabet);
// exp of a value-primitive bimould (P(∅) = 0) under ⊙.
Bimould concat_exp(const Bimould& p);

// Σ_n a_n t^n = exp(Σ_{n≥2} (-1)^n f_{n,0} t^n / n) with f_{n,0} = F([n;0]).
std::vector<Element> correction_series(const Bimould& f);

struct GrouplikeEquivalence {
  bool swap_invariant = false;
  bool factorises = false;  // F ⊙ c_X(F)^{-1} lies in M_Y with constant part 1
  bool grouplike = false;
  bool x_part_grouplike = false;
  bool corrected_grouplike = false;  // σ(λ(F_corr) ⊙ c_X(F)) is a group-like element of M_Y
  [[nodiscard]] bool preconditions() const { return swap_invariant && factorises; }
  [[nodiscard]] bool agree() const { return grouplike == (x_part_grouplike && corrected_grouplike); }
};
GrouplikeEquivalence check_grouplike_equivalence(const Bimould& f);

// F(w) = π(G(w)) in the formal zeta quotient truncated above the cutoff.
Bimould zeta_bimould(QuotientEngine& engine, int cutoff);

}  // namespace fmes
