#include "fmes/mzv.hpp"

#include "fmes/enumerate.hpp"
#include "fmes/poly.hpp"
#include "fmes/qshuffle.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace fmes {

namespace {

bool in_h0(const ZWord& w) { return w.empty() || w[0].k >= 2; }

SparseRow zrow(const ZElement& x, const std::map<ZWord, int>& index) {
  SparseRow row;
  for (const auto& [w, c] : x) row.emplace_back(index.at(w), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

std::map<ZWord, int> zindex(int weight) {
  std::map<ZWord, int> out;
  const auto& ws = zwords_of_weight(weight);
  for (std::size_t i = 0; i < ws.size(); ++i) out.emplace(ws[i], static_cast<int>(i));
  return out;
}

ZElement from_zrow(const SparseRow& row, int weight) {
  const auto& ws = zwords_of_weight(weight);
  ZElement out;
  for (const auto& [c, v] : row) out.add(ws[static_cast<std::size_t>(c)], v);
  return out;
}

// Echelon basis of span{w*v - w ш v : wt(w) + wt(v) = m}.
std::vector<ZElement> eds_seeds(int m) {
  std::vector<SparseRow> rows;
  const auto index = zindex(m);
  for (int c = 2; c <= m - 1; ++c)
    for (const auto& v : zwords_of_weight(c)) {
      if (!in_h0(v)) continue;
      for (const auto& w : zwords_of_weight(m - c)) {
        const ZElement g = stuffle_z(w, v) - shuffle_z(w, v);
        if (!g.is_zero()) rows.push_back(zrow(g, index));
      }
    }
  const Echelon e = echelon_serial(index.size(), rows);
  std::vector<ZElement> out;
  for (const auto& [p, row] : e.rows()) out.push_back(from_zrow(row, m));
  return out;
}

// Coefficients of Π_i (X_1+...+X_{n-i+1})^{k_i-1}, keyed by the target composition.
const std::vector<std::pair<ZWord, Rational>>& sigma_star_image(const ZWord& source) {
  static std::mutex guard;
  static std::map<ZWord, std::vector<std::pair<ZWord, Rational>>> table;
  std::lock_guard lock(guard);
  if (auto it = table.find(source); it != table.end()) return it->second;
  const int n = source.depth();
  std::vector<Poly> images;
  for (int i = 1; i <= n; ++i) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n - i + 1; ++j) coeffs[static_cast<std::size_t>(j)] = 1;
    images.push_back(Poly::linear(coeffs));
  }
  Poly monomial(n);
  Exponents e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = source[static_cast<std::size_t>(i)].k - 1;
  monomial.add_term(e, 1);
  const Poly image = n == 0 ? Poly::constant(0, 1) : monomial.substitute(images);
  std::vector<std::pair<ZWord, Rational>> out;
  for (const auto& [ex, c] : image.terms()) {
    std::vector<int> ks;
    for (int x : ex) ks.push_back(x + 1);
    out.emplace_back(make_zword(ks), c);
  }
  return table.emplace(source, std::move(out)).first->second;
}

void require_same_cutoff(const Character& a, const Character& b) {
  if (a.cutoff != b.cutoff) throw std::invalid_argument("characters truncated at different weights");
}

}  // namespace

Element zeta_f(QuotientEngine& engine, const Word& w) {
  return engine.normal_form(G(w), IdealKind::combined, w.weight());
}

Element zeta_f(QuotientEngine& engine, const ZWord& w) { return zeta_f(engine, to_word(w)); }

Element zeta_f(QuotientEngine& engine, const ZElement& x) {
  Element out;
  for (const auto& [w, c] : x) out.add(zeta_f(engine, w), c);
  return out;
}

Element xi_f(QuotientEngine& engine, const std::vector<int>& ds) {
  std::vector<int> ones(ds.size(), 1);
  return zeta_f(engine, make_word(ones, ds));
}

IdentityCheck verify_depth2_zeta(QuotientEngine& engine, int k1, int k2) {
  if (k1 < 1 || k2 < 1) throw std::invalid_argument("indices must be positive");
  const int k = k1 + k2;
  ZElement lhs = stuffle_z(make_zword({k1}), make_zword({k2}));
  ZElement rhs;
  for (int l1 = 1; l1 < k; ++l1)
    rhs.add(make_zword({l1, k - l1}), Rational(binomial(l1 - 1, k1 - 1) + binomial(l1 - 1, k2 - 1)));
  if (k == 2) rhs.add(make_zword({2}), 1);
  IdentityCheck out;
  out.name = "depth2_zeta(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
  out.weight = k;
  out.residual = zeta_f(engine, lhs) - zeta_f(engine, rhs);
  out.holds = out.residual.is_zero();
  return out;
}

std::vector<ZElement> eds_generators(int weight) {
  std::vector<ZElement> out;
  for (int m = 3; m <= weight; ++m) {
    const auto seeds = eds_seeds(m);
    for (const auto& u : zwords_of_weight(weight - m))
      for (const auto& s : seeds) out.push_back(stuffle_z(s, ZElement(u)));
  }
  return out;
}

std::size_t eds_ideal_rank(int weight) {
  if (weight < 0) throw std::invalid_argument("negative weight");
  const auto index = zindex(weight);
  std::vector<SparseRow> rows;
  for (const auto& g : eds_generators(weight))
    if (!g.is_zero()) rows.push_back(zrow(g, index));
  return echelon_parallel(index.size(), rows).rank();
}

std::vector<DimComparison> compare_dims(QuotientEngine& engine, int max_weight) {
  std::vector<DimComparison> out;
  for (int k = 0; k <= max_weight; ++k) {
    DimComparison d;
    d.weight = k;
    d.words = zwords_of_weight(k).size();
    d.eds_rank = eds_ideal_rank(k);
    d.eds_dim = d.words - d.eds_rank;
    d.zf_dim = engine.dim(IdealKind::combined, k);
    std::vector<SparseRow> images;
    for (const auto& z : zwords_of_weight(k)) images.push_back(to_row(zeta_f(engine, z)));
    d.lwt0_rank = echelon_serial(words_of_weight(k).size(), images).rank();
    d.eds_in_kernel = true;
    for (const auto& g : eds_generators(k))
      if (!zeta_f(engine, g).is_zero()) {
        d.eds_in_kernel = false;
        break;
      }
    out.push_back(d);
  }
  return out;
}

Element Character::operator()(const ZWord& w) const {
  if (w.weight() > cutoff) throw std::out_of_range("word above the character's cutoff");
  auto it = values.find(w);
  return it == values.end() ? Element{} : it->second;
}

Element Character::operator()(const ZElement& x) const {
  Element out;
  for (const auto& [w, c] : x) out.add((*this)(w), c);
  return out;
}

Character unit_character(int cutoff) {
  Character out;
  out.cutoff = cutoff;
  out.values.emplace(ZWord{}, unit_element());
  return out;
}

Character zeta_character(QuotientEngine& engine, int cutoff) {
  Character out;
  out.cutoff = cutoff;
  for (int k = 0; k <= cutoff; ++k)
    for (const auto& z : zwords_of_weight(k)) {
      Element v = zeta_f(engine, z);
      if (!v.is_zero()) out.values.emplace(z, std::move(v));
    }
  return out;
}

Character convolution(const Character& phi, const Character& psi, const CoeffRing& ring) {
  require_same_cutoff(phi, psi);
  Character out;
  out.cutoff = phi.cutoff;
  for (int k = 0; k <= out.cutoff; ++k)
    for (const auto& w : zwords_of_weight(k)) {
      Element v;
      for (std::size_t i = 0; i <= w.size(); ++i) {
        const Element a = phi(w.slice(0, i));
        if (a.is_zero()) continue;
        const Element b = psi(w.slice(i, w.size()));
        if (!b.is_zero()) v += ring.mul(a, b);
      }
      if (!v.is_zero()) out.values.emplace(w, std::move(v));
    }
  return out;
}

Character sigma_star(const Character& phi) {
  Character out;
  out.cutoff = phi.cutoff;
  std::map<ZWord, Element> acc;
  for (const auto& [w, v] : phi.values)
    for (const auto& [target, c] : sigma_star_image(w)) acc[target].add(v, c);
  for (auto& [w, v] : acc)
    if (!v.is_zero()) out.values.emplace(w, std::move(v));
  return out;
}

Character phi_corr(const Character& phi, const CoeffRing& ring) {
  const int n_max = phi.cutoff;
  std::vector<Element> s(static_cast<std::size_t>(n_max) + 1);
  for (int n = 2; n <= n_max; ++n)
    s[static_cast<std::size_t>(n)] = Rational(n % 2 == 0 ? 1 : -1, n) * phi(make_zword({n}));
  // E' = S' E, i.e. n E_n = Σ_{j=1}^{n} j S_j E_{n-j}.
  std::vector<Element> e(static_cast<std::size_t>(n_max) + 1);
  e[0] = unit_element();
  for (int n = 1; n <= n_max; ++n) {
    Element acc;
    for (int j = 1; j <= n; ++j)
      if (!s[static_cast<std::size_t>(j)].is_zero())
        acc += Rational(j) * ring.mul(s[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(n - j)]);
    e[static_cast<std::size_t>(n)] = Rational(1, n) * acc;
  }
  Character out;
  out.cutoff = n_max;
  for (int n = 0; n <= n_max; ++n)
    if (!e[static_cast<std::size_t>(n)].is_zero())
      out.values.emplace(ZWord(std::vector<ZLetter>(static_cast<std::size_t>(n), ZLetter{1})),
                         ring.reduce(e[static_cast<std::size_t>(n)]));
  return out;
}

EdsReport eds_check(const Character& phi, const CoeffRing& ring) {
  if (phi.cutoff > ring.cutoff()) throw std::invalid_argument("character exceeds the ring's cutoff");
  EdsReport out;
  out.unital = ring.equal(phi(ZWord{}), unit_element());
  const Character psi = sigma_star(convolution(phi_corr(phi, ring), phi, ring));
  out.stuffle_homomorphism = true;
  out.shuffle_homomorphism = true;
  for (int a = 1; a <= phi.cutoff; ++a)
    for (int b = a; a + b <= phi.cutoff; ++b)
      for (const auto& u : zwords_of_weight(a))
        for (const auto& v : zwords_of_weight(b)) {
          if (out.stuffle_homomorphism && !ring.equal(phi(stuffle_z(u, v)), ring.mul(phi(u), phi(v))))
            out.stuffle_homomorphism = false;
          if (out.shuffle_homomorphism && !ring.equal(psi(index_shuffle(u, v)), ring.mul(psi(u), psi(v))))
            out.shuffle_homomorphism = false;
        }
  return out;
}

}  // namespace fmes
