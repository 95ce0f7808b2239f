#include "fmes/bimould.hpp"

#include "fmes/echelon.hpp"
#include "fmes/enumerate.hpp"
#include "fmes/qshuffle.hpp"
#include "fmes/swap.hpp"

#include <stdexcept>

namespace fmes {

std::vector<Word> admitted_words(const Truncation& t) {
  std::vector<Word> out;
  for (int k = 0; k <= t.max_weight; ++k)
    for (const auto& w : words_of_weight(k))
      if (t.admits(w)) out.push_back(w);
  return out;
}

Bimould Bimould::unit(CoeffRing ring, Truncation trunc) {
  Bimould f(std::move(ring), trunc);
  f.set(Word{}, CoeffRing::one());
  return f;
}

Element Bimould::at(const Word& w) const {
  auto it = values_.find(w);
  return it == values_.end() ? Element{} : it->second;
}

Element Bimould::operator()(const Element& x) const {
  Element out;
  for (const auto& [w, c] : x) out.add(at(w), c);
  return out;
}

void Bimould::set(const Word& w, const Element& value) {
  if (!trunc_.admits(w)) throw std::out_of_range("word outside the bimould truncation: " + to_string(w));
  Element v = ring_.reduce(value);
  if (v.is_zero()) {
    values_.erase(w);
  } else {
    values_[w] = std::move(v);
  }
}

bool operator==(const Bimould& a, const Bimould& b) { return a.trunc_ == b.trunc_ && a.values_ == b.values_; }

namespace {

void require_same(const Bimould& f, const Bimould& g) {
  if (!(f.truncation() == g.truncation())) throw std::invalid_argument("bimoulds with different truncations");
}

Word slice(const Word& w, std::size_t from, std::size_t to) {
  Word out;
  out.letters.assign(w.letters.begin() + static_cast<std::ptrdiff_t>(from),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(to));
  return out;
}

Bimould filtered(const Bimould& f, bool (*keep)(const Word&)) {
  Bimould out(f.ring(), f.truncation());
  for (const auto& [w, v] : f.values())
    if (keep(w)) out.set(w, v);
  return out;
}

bool all_constant(const Word& w) {
  for (const auto& a : w)
    if (a.k != 1 || a.d != 0) return false;
  return true;
}
bool all_x(const Word& w) {
  for (const auto& a : w)
    if (a.d != 0) return false;
  return true;
}
bool all_y(const Word& w) {
  for (const auto& a : w)
    if (a.k != 1) return false;
  return true;
}

Word constant_word(int n) {
  Word w;
  w.letters.assign(static_cast<std::size_t>(n), Letter{1, 0});
  return w;
}

}  // namespace

Bimould concat(const Bimould& f, const Bimould& g) {
  require_same(f, g);
  Bimould out(f.ring(), f.truncation());
  for (const Word& w : admitted_words(f.truncation())) {
    Element acc;
    for (std::size_t i = 0; i <= w.letters.size(); ++i) {
      const Element a = f.at(slice(w, 0, i));
      if (a.is_zero()) continue;
      const Element b = g.at(slice(w, i, w.letters.size()));
      if (!b.is_zero()) acc += f.ring().mul(a, b);
    }
    out.set(w, acc);
  }
  return out;
}

Bimould concat_inverse(const Bimould& f) {
  const auto inv0 = f.ring().inverse(f.at(Word{}));
  if (!inv0) throw std::domain_error("constant component is not a unit");
  Bimould out(f.ring(), f.truncation());
  out.set(Word{}, *inv0);
  // F^{-1}(w) = -F(∅)^{-1} Σ_{w = uv, u ≠ ∅} F(u) F^{-1}(v); suffixes come earlier in the graded order.
  for (const Word& w : admitted_words(f.truncation())) {
    if (w.letters.empty()) continue;
    Element acc;
    for (std::size_t i = 1; i <= w.letters.size(); ++i) {
      const Element a = f.at(slice(w, 0, i));
      if (!a.is_zero()) acc += f.ring().mul(a, out.at(slice(w, i, w.letters.size())));
    }
    out.set(w, -f.ring().mul(*inv0, acc));
  }
  return out;
}

Bimould swap_b(const Bimould& f) {
  Bimould out(f.ring(), f.truncation());
  for (const Word& w : admitted_words(f.truncation())) out.set(w, f(swap_word(w)));
  return out;
}

Bimould constant_part(const Bimould& f) { return filtered(f, all_constant); }
Bimould x_part(const Bimould& f) { return filtered(f, all_x); }

Bimould lambda_embed(const std::vector<Element>& series, const CoeffRing& ring, Truncation trunc) {
  Bimould out(ring, trunc);
  for (std::size_t n = 0; n < series.size(); ++n) {
    const Word w = constant_word(static_cast<int>(n));
    if (trunc.admits(w)) out.set(w, series[n]);
  }
  return out;
}

bool in_mx(const Bimould& f) {
  for (const auto& [w, v] : f.values())
    if (!all_x(w)) return false;
  return true;
}

bool in_my(const Bimould& f) {
  for (const auto& [w, v] : f.values())
    if (!all_y(w)) return false;
  return true;
}

Bimould phi_map(const Bimould& h) {
  if (!in_mx(h)) throw std::invalid_argument("phi_map expects an element of M_X");
  return concat(concat(swap_b(h), concat_inverse(constant_part(h))), h);
}

Bimould psi_map(const Bimould& f) {
  if (!f.ring().inverse(f.at(Word{}))) throw std::domain_error("constant component is not a unit");
  return x_part(f);
}

MonomialTensor coproduct_monomial(const Monomial& m, CoproductReading reading) {
  const bool identify = reading == CoproductReading::identified_unit;
  auto slot = [identify](int a, int b) -> Monomial {
    if (identify && a == 0 && b == 0) return std::nullopt;
    return std::make_pair(a, b);
  };
  MonomialTensor out;
  if (!m || (identify && *m == std::make_pair(0, 0))) {
    out[{std::nullopt, std::nullopt}] = 1;
    return out;
  }
  out[{m, std::nullopt}] += 1;
  out[{std::nullopt, m}] += 1;
  const int k = m->first + 1, d = m->second;
  for (int k1 = 1; k1 < k; ++k1)
    for (int d1 = 0; d1 <= d; ++d1) out[{slot(k1 - 1, d1), slot(k - k1 - 1, d - d1)}] += Rational(binomial(d, d1));
  return out;
}

MonomialTensor coproduct_slot(const MonomialTensor& t, std::size_t slot, CoproductReading reading) {
  MonomialTensor out;
  for (const auto& [key, c] : t) {
    for (const auto& [pair, e] : coproduct_monomial(key.at(slot), reading)) {
      std::vector<Monomial> next(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(slot));
      next.insert(next.end(), pair.begin(), pair.end());
      next.insert(next.end(), key.begin() + static_cast<std::ptrdiff_t>(slot) + 1, key.end());
      out[next] += c * e;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::map<std::pair<Word, Word>, Rational> coproduct_word(const Word& w) {
  std::map<std::pair<Word, Word>, Rational> out{{{Word{}, Word{}}, Rational(1)}};
  for (const Letter& a : w) {
    std::vector<std::pair<Word, Word>> parts;
    Word single;
    single.letters.push_back(a);
    parts.emplace_back(single, Word{});
    parts.emplace_back(Word{}, single);
    for (int k1 = 1; k1 < a.k; ++k1)
      for (int d1 = 0; d1 <= a.d; ++d1) {
        Word l, r;
        l.letters.push_back(Letter{k1, d1});
        r.letters.push_back(Letter{a.k - k1, a.d - d1});
        parts.emplace_back(l, r);
      }
    std::map<std::pair<Word, Word>, Rational> next;
    for (const auto& [key, c] : out)
      for (const auto& [l, r] : parts) {
        Word u = key.first, v = key.second;
        u.letters.insert(u.letters.end(), l.letters.begin(), l.letters.end());
        v.letters.insert(v.letters.end(), r.letters.begin(), r.letters.end());
        next[{std::move(u), std::move(v)}] += c;
      }
    out = std::move(next);
  }
  return out;
}

bool is_grouplike(const Bimould& f) {
  const CoeffRing& ring = f.ring();
  if (!ring.equal(f.at(Word{}), CoeffRing::one())) return false;
  const Truncation& t = f.truncation();
  std::map<std::pair<Word, Word>, Element> image;
  for (const auto& [w, v] : f.values())
    for (const auto& [key, c] : coproduct_word(w))
      if (!key.first.letters.empty() && !key.second.letters.empty()) image[key].add(v, c);
  const auto words = admitted_words(t);
  for (const Word& u : words) {
    if (u.letters.empty()) continue;
    for (const Word& v : words) {
      if (v.letters.empty()) continue;
      if (u.depth() + v.depth() > t.max_depth || u.weight() + v.weight() > t.max_weight) continue;
      auto it = image.find({u, v});
      const Element lhs = it == image.end() ? Element{} : it->second;
      if (!ring.equal(lhs, ring.mul(f.at(u), f.at(v)))) return false;
    }
  }
  return true;
}

std::vector<std::map<Word, Rational>> primitive_functionals(int weight, Alphabet alphabet) {
  auto keep = [alphabet](const Word& w) {
    switch (alphabet) {
      case Alphabet::x_only:
        return all_x(w);
      case Alphabet::y_only:
        return all_y(w);
      default:
        return true;
    }
  };
  std::vector<Word> cols;
  std::map<Word, int> index;
  for (const auto& w : words_of_weight(weight))
    if (keep(w)) {
      index[w] = static_cast<int>(cols.size());
      cols.push_back(w);
    }
  std::vector<SparseRow> rows;
  for (int a = 1; a < weight; ++a)
    for (const auto& u : words_of_weight(a)) {
      if (!keep(u)) continue;
      for (const auto& v : words_of_weight(weight - a)) {
        if (!keep(v)) continue;
        std::map<int, Rational> dense;
        for (const auto& [w, c] : stuffle(u, v))
          if (auto it = index.find(w); it != index.end()) dense[it->second] += c;
        SparseRow row;
        for (const auto& [i, c] : dense)
          if (c != 0) row.emplace_back(i, c);
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  const Echelon ech = echelon_serial(cols.size(), rows);
  std::vector<std::map<Word, Rational>> out;
  for (std::size_t f = 0; f < cols.size(); ++f) {
    if (ech.rows().count(static_cast<int>(f))) continue;
    std::map<Word, Rational> p{{cols[f], Rational(1)}};
    for (const auto& [pivot, row] : ech.rows())
      for (const auto& [col, c] : row)
        if (col == static_cast<int>(f)) p[cols[static_cast<std::size_t>(pivot)]] = -c;
    out.push_back(std::move(p));
  }
  return out;
}

Bimould concat_exp(const Bimould& p) {
  if (!p.at(Word{}).is_zero()) throw std::invalid_argument("concat_exp expects P(empty word) = 0");
  Bimould out = Bimould::unit(p.ring(), p.truncation());
  Bimould power = out;
  Rational scale = 1;
  for (int j = 1; j <= p.truncation().max_weight; ++j) {
    power = concat(power, p);
    scale /= j;
    Bimould next(p.ring(), p.truncation());
    for (const Word& w : admitted_words(p.truncation())) next.set(w, out.at(w) + scale * power.at(w));
    out = std::move(next);
  }
  return out;
}

std::vector<Element> correction_series(const Bimould& f) {
  const CoeffRing& ring = f.ring();
  const int n_max = f.truncation().max_weight;
  std::vector<Element> s(static_cast<std::size_t>(n_max) + 1);
  for (int n = 2; n <= n_max; ++n) {
    const Rational c = Rational(n % 2 == 0 ? 1 : -1, n);
    s[static_cast<std::size_t>(n)] = c * f.at(make_word({n}, {0}));
  }
  std::vector<Element> e(static_cast<std::size_t>(n_max) + 1);
  e[0] = CoeffRing::one();
  for (int n = 1; n <= n_max; ++n) {
    Element acc;
    for (int j = 1; j <= n; ++j) acc += Rational(j) * ring.mul(s[static_cast<std::size_t>(j)], e[static_cast<std::size_t>(n - j)]);
    e[static_cast<std::size_t>(n)] = ring.reduce(Rational(1, n) * acc);
  }
  return e;
}

GrouplikeEquivalence check_grouplike_equivalence(const Bimould& f) {
  GrouplikeEquivalence out;
  out.swap_invariant = swap_b(f) == f;
  const Bimould h = x_part(f);
  if (f.ring().inverse(h.at(Word{}))) {
    const Bimould g = concat(f, concat_inverse(h));
    out.factorises = in_my(g) && constant_part(g) == Bimould::unit(f.ring(), f.truncation());
  }
  out.grouplike = is_grouplike(f);
  out.x_part_grouplike = is_grouplike(h);
  const Bimould corrected = swap_b(concat(lambda_embed(correction_series(f), f.ring(), f.truncation()), h));
  out.corrected_grouplike = in_my(corrected) && is_grouplike(corrected);
  return out;
}

Bimould zeta_bimould(QuotientEngine& engine, int cutoff) {
  Bimould f(CoeffRing(engine, IdealKind::combined, cutoff), Truncation{cutoff, cutoff});
  for (const Word& w : admitted_words(f.truncation())) f.set(w, Element(w));
  return f;
}

}  // namespace fmes
