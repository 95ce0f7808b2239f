#pragma once

#include "fmes/coeff_ring.hpp"
#include "fmes/modular.hpp"
#include "fmes/quotient.hpp"

#include <map>
#include <vector>

namespace fmes {

// π(G(w)): the normal form modulo the swap and constant-term ideals.
Element zeta_f(QuotientEngine& engine, const Word& w);
Element zeta_f(QuotientEngine& engine, const ZWord& w);
Element zeta_f(QuotientEngine& engine, const ZElement& x);
// π(G[1,...,1; d_1,...,d_r]).
Element xi_f(QuotientEngine& engine, const std::vector<int>& ds);

// Depth-two double shuffle among formal zeta values.
IdentityCheck verify_depth2_zeta(QuotientEngine& engine, int k1, int k2);

// Spanning set of the weight slice of the ideal generated by w*v - w ш v (w in H^1, v in H^0).
std::vector<ZElement> eds_generators(int weight);
std::size_t eds_ideal_rank(int weight);

struct DimComparison {
  int weight = 0;
  std::size_t words = 0;        // 2^{k-1} compositions
  std::size_t eds_rank = 0;
  std::size_t eds_dim = 0;      // dim H^1_k / EDS_k
  std::size_t zf_dim = 0;       // dim of the formal MZV slice
  std::size_t lwt0_rank = 0;    // rank of π on lower-weight-zero words
  bool eds_in_kernel = false;   // every EDS generator maps to zero
  [[nodiscard]] bool equal() const { return eds_dim == zf_dim && lwt0_rank == zf_dim && eds_in_kernel; }
};
std::vector<DimComparison> compare_dims(QuotientEngine& engine, int max_weight);

// Linear map on z-words of weight <= cutoff, valued in a coefficient ring.
struct Character {
  int cutoff = 0;
  std::map<ZWord, Element> values;

  [[nodiscard]] Element operator()(const ZWord& w) const;
  [[nodiscard]] Element operator()(const ZElement& x) const;
};

Character unit_character(int cutoff);
// z-words ↦ ζ^f.
Character zeta_character(QuotientEngine& engine, int cutoff);
Character convolution(const Character& phi, const Character& psi, const CoeffRing& ring);
// Φ_n(X_1,...,X_n) ↦ Φ_n(X_1+...+X_n, ..., X_1) on coefficients.
Character sigma_star(const Character& phi);
// Coefficient of t^n in exp(Σ_{n>=2} (-1)^n/n φ(z_n) t^n) on z_1^n, zero elsewhere.
Character phi_corr(const Character& phi, const CoeffRing& ring);

struct EdsReport {
  bool unital = false;
  bool stuffle_homomorphism = false;
  bool shuffle_homomorphism = false;
  [[nodiscard]] bool holds() const { return unital && stuffle_homomorphism && shuffle_homomorphism; }
};
EdsReport eds_check(const Character& phi, const CoeffRing& ring);

}  // namespace fmes
