#include "fmes/echelon.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>

namespace fmes {

void axpy(SparseRow& row, const Rational& factor, const SparseRow& other) {
  if (factor == 0 || other.empty()) return;
  SparseRow out;
  out.reserve(row.size() + other.size());
  auto a = row.begin();
  auto b = other.begin();
  while (a != row.end() || b != other.end()) {
    if (b == other.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == row.end() || b->first < a->first) {
      out.emplace_back(b->first, factor * b->second);
      ++b;
    } else {
      Rational v = a->second + factor * b->second;
      if (v != 0) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  row = std::move(out);
}

SparseRow Echelon::reduce(SparseRow row) const {
  std::vector<std::pair<int, Rational>> hits;
  for (const auto& [c, v] : row)
    if (rows_.contains(c)) hits.emplace_back(c, v);
  for (const auto& [c, v] : hits) axpy(row, -v, rows_.at(c));
  return row;
}

bool Echelon::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const int pivot = row.front().first;
  const Rational lead = row.front().second;
  if (lead != 1)
    for (auto& [c, v] : row) v /= lead;
  for (auto& [p, other] : rows_) {
    auto it = std::lower_bound(other.begin(), other.end(), pivot,
                               [](const std::pair<int, Rational>& e, int col) { return e.first < col; });
    if (it != other.end() && it->first == pivot) {
      const Rational f = -it->second;
      axpy(other, f, row);
    }
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

void Echelon::adopt(int pivot, SparseRow row) { rows_.insert_or_assign(pivot, std::move(row)); }

namespace {

using IntRow = std::vector<std::pair<int, Integer>>;

IntRow to_integer_row(const SparseRow& row) {
  Integer den = 1;
  for (const auto& [c, v] : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) out.emplace_back(c, Integer(v.get_num() * (den / v.get_den())));
  return out;
}

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row <- a*row - b*other
void combine(IntRow& row, const Integer& a, const Integer& b, const IntRow& other) {
  IntRow out;
  out.reserve(row.size() + other.size());
  auto x = row.begin();
  auto y = other.begin();
  while (x != row.end() || y != other.end()) {
    if (y == other.end() || (x != row.end() && x->first < y->first)) {
      out.emplace_back(x->first, Integer(a * x->second));
      ++x;
    } else if (x == row.end() || y->first < x->first) {
      out.emplace_back(y->first, Integer(-b * y->second));
      ++y;
    } else {
      Integer v = a * x->second - b * y->second;
      if (v != 0) out.emplace_back(x->first, std::move(v));
      ++x;
      ++y;
    }
  }
  row = std::move(out);
}

// Row echelon form with primitive integer rows; only leading entries are eliminated.
class Triangular {
 public:
  explicit Triangular(std::size_t ncols) : rows_(ncols) {}

  [[nodiscard]] std::size_t rank() const { return rank_; }

  [[nodiscard]] IntRow head_reduce(IntRow row) const {
    while (!row.empty()) {
      const auto& pivot_row = rows_[static_cast<std::size_t>(row.front().first)];
      if (pivot_row.empty()) break;
      const Integer& p = pivot_row.front().second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), row.front().second.get_mpz_t());
      const Integer a = p / g;
      const Integer b = row.front().second / g;
      combine(row, a, b, pivot_row);
      make_primitive(row);
    }
    return row;
  }

  bool insert(IntRow row) {
    row = head_reduce(std::move(row));
    if (row.empty()) return false;
    make_primitive(row);
    rows_[static_cast<std::size_t>(row.front().first)] = std::move(row);
    ++rank_;
    return true;
  }

  // Back-substitution into the reduced form, highest pivot first.
  [[nodiscard]] Echelon finalize() const {
    Echelon e(rows_.size());
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      if (it->empty()) continue;
      const Integer& lead = it->front().second;
      SparseRow row;
      row.reserve(it->size());
      for (const auto& [c, v] : *it) {
        Rational q(v, lead);
        q.canonicalize();
        row.emplace_back(c, std::move(q));
      }
      row = e.reduce(std::move(row));
      const int pivot = row.front().first;
      e.adopt(pivot, std::move(row));
    }
    return e;
  }

 private:
  std::vector<IntRow> rows_;
  std::size_t rank_ = 0;
};

}  // namespace

Echelon echelon_serial(std::size_t ncols, const std::vector<SparseRow>& rows) {
  Triangular t(ncols);
  for (const auto& r : rows) {
    if (t.rank() == ncols) break;
    t.insert(to_integer_row(r));
  }
  return t.finalize();
}

namespace {

using Residue = std::uint64_t;
using ModRow = std::vector<std::pair<int, Residue>>;

constexpr std::array<Residue, 6> kPrimes{
    4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL,
    4611686018427387761ULL, 4611686018427387733ULL, 4611686018427387709ULL,
};

Residue mul_mod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % p);
}

Residue pow_mod(Residue a, Residue e, Residue p) {
  Residue r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

Residue inv_mod(Residue a, Residue p) { return pow_mod(a, p - 2, p); }

Residue residue(const Integer& z, Residue p) {
  return static_cast<Residue>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)));
}

std::optional<ModRow> to_mod_row(const SparseRow& row, Residue p) {
  ModRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    const Residue d = residue(v.get_den(), p);
    if (d == 0) return std::nullopt;
    const Residue x = mul_mod(residue(v.get_num(), p), inv_mod(d, p), p);
    if (x != 0) out.emplace_back(c, x);
  }
  return out;
}

// row <- row - f*other (mod p)
void sub_mod(ModRow& row, Residue f, const ModRow& other, Residue p) {
  ModRow out;
  out.reserve(row.size() + other.size());
  auto x = row.begin();
  auto y = other.begin();
  while (x != row.end() || y != other.end()) {
    if (y == other.end() || (x != row.end() && x->first < y->first)) {
      out.push_back(*x++);
    } else if (x == row.end() || y->first < x->first) {
      out.emplace_back(y->first, (p - mul_mod(f, y->second, p)) % p);
      ++y;
    } else {
      const Residue t = mul_mod(f, y->second, p);
      const Residue v = x->second >= t ? x->second - t : x->second + (p - t);
      if (v != 0) out.emplace_back(x->first, v);
      ++x;
      ++y;
    }
  }
  row = std::move(out);
}

// Monic row echelon form over Z/p.
class ModTriangular {
 public:
  ModTriangular(std::size_t ncols, Residue p) : rows_(ncols), p_(p) {}

  [[nodiscard]] std::size_t rank() const { return rank_; }

  [[nodiscard]] ModRow head_reduce(ModRow row) const {
    while (!row.empty()) {
      const auto& pivot_row = rows_[static_cast<std::size_t>(row.front().first)];
      if (pivot_row.empty()) break;
      sub_mod(row, row.front().second, pivot_row, p_);
    }
    return row;
  }

  bool insert(ModRow row) {
    row = head_reduce(std::move(row));
    if (row.empty()) return false;
    const Residue inv = inv_mod(row.front().second, p_);
    for (auto& [c, v] : row) v = mul_mod(v, inv, p_);
    rows_[static_cast<std::size_t>(row.front().first)] = std::move(row);
    ++rank_;
    return true;
  }

  // Reduced rows keyed by pivot.
  [[nodiscard]] std::map<int, ModRow> finalize() const {
    std::map<int, ModRow> done;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      if (it->empty()) continue;
      ModRow row = *it;
      std::vector<std::pair<int, Residue>> hits;
      for (std::size_t i = 1; i < row.size(); ++i)
        if (done.contains(row[i].first)) hits.push_back(row[i]);
      for (const auto& [c, v] : hits) sub_mod(row, v, done.at(c), p_);
      done.emplace(row.front().first, std::move(row));
    }
    return done;
  }

 private:
  std::vector<ModRow> rows_;
  Residue p_;
  std::size_t rank_ = 0;
};

std::optional<std::map<int, ModRow>> rref_mod(std::size_t ncols, const std::vector<SparseRow>& rows, Residue p,
                                             std::size_t batch) {
  std::vector<ModRow> images(rows.size());
  bool ok = true;
  const auto total = static_cast<long>(rows.size());
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (long i = 0; i < total; ++i) {
    auto m = to_mod_row(rows[static_cast<std::size_t>(i)], p);
    if (m) {
      images[static_cast<std::size_t>(i)] = std::move(*m);
    } else {
      ok = false;
    }
  }
  if (!ok) return std::nullopt;
  ModTriangular t(ncols, p);
  std::vector<ModRow> reduced;
  for (std::size_t start = 0; start < images.size() && t.rank() < ncols; start += batch) {
    const std::size_t n = std::min(batch, images.size() - start);
    reduced.assign(n, ModRow{});
    const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i)
      reduced[static_cast<std::size_t>(i)] = t.head_reduce(std::move(images[start + static_cast<std::size_t>(i)]));
    for (auto& r : reduced)
      if (!r.empty()) t.insert(std::move(r));
  }
  return t.finalize();
}

// n/d with |n|, d <= sqrt(m/2) and n = a*d (mod m).
std::optional<Rational> reconstruct(const Integer& a, const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

// Combined residues of one reduced form across several primes.
struct ResidueImage {
  std::map<int, std::vector<std::pair<int, Integer>>> rows;
  Integer modulus = 1;
};

bool absorb(ResidueImage& image, const std::map<int, ModRow>& rref, Residue p) {
  if (image.modulus == 1) {
    for (const auto& [pivot, row] : rref) {
      auto& dst = image.rows[pivot];
      for (const auto& [c, v] : row) dst.emplace_back(c, Integer(static_cast<unsigned long>(v)));
    }
    image.modulus = Integer(static_cast<unsigned long>(p));
    return true;
  }
  if (rref.size() != image.rows.size()) return false;
  const Integer& m = image.modulus;
  const Integer pz(static_cast<unsigned long>(p));
  Integer m_inv;
  mpz_invert(m_inv.get_mpz_t(), Integer(m % pz).get_mpz_t(), pz.get_mpz_t());
  for (auto& [pivot, dst] : image.rows) {
    auto it = rref.find(pivot);
    if (it == rref.end()) return false;
    const ModRow& src = it->second;
    std::size_t j = 0;
    std::vector<std::pair<int, Integer>> merged;
    auto lift = [&](const Integer& a, Residue b) {
      Integer diff = Integer(static_cast<unsigned long>(b)) - a;
      Integer k = diff * m_inv;
      mpz_fdiv_r(k.get_mpz_t(), k.get_mpz_t(), pz.get_mpz_t());
      return Integer(a + m * k);
    };
    for (const auto& [c, a] : dst) {
      while (j < src.size() && src[j].first < c) {
        merged.emplace_back(src[j].first, lift(Integer(0), src[j].second));
        ++j;
      }
      if (j < src.size() && src[j].first == c) {
        merged.emplace_back(c, lift(a, src[j].second));
        ++j;
      } else {
        merged.emplace_back(c, lift(a, 0));
      }
    }
    for (; j < src.size(); ++j) merged.emplace_back(src[j].first, lift(Integer(0), src[j].second));
    dst = std::move(merged);
  }
  image.modulus *= pz;
  return true;
}

std::optional<Echelon> lift_candidate(std::size_t ncols, const ResidueImage& image) {
  Echelon e(ncols);
  for (const auto& [pivot, row] : image.rows) {
    SparseRow out;
    out.reserve(row.size());
    for (const auto& [c, a] : row) {
      if (a == 0) continue;
      auto q = reconstruct(a, image.modulus);
      if (!q) return std::nullopt;
      out.emplace_back(c, std::move(*q));
    }
    e.adopt(pivot, std::move(out));
  }
  return e;
}

// Every generator lies in the candidate's span; with rank(candidate) = rank mod p <= rank over Q,
// the spans agree and the candidate is the reduced form.
bool certifies(const Echelon& candidate, const std::vector<SparseRow>& rows) {
  bool ok = true;
  const auto total = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok)
  for (long i = 0; i < total; ++i)
    if (ok && !candidate.reduce(rows[static_cast<std::size_t>(i)]).empty()) ok = false;
  return ok;
}

}  // namespace

Echelon echelon_parallel(std::size_t ncols, const std::vector<SparseRow>& rows, std::size_t batch) {
  batch = std::max<std::size_t>(batch, 1);
  ResidueImage image;
  for (Residue p : kPrimes) {
    auto rref = rref_mod(ncols, rows, p, batch);
    if (!rref) continue;
    if (!absorb(image, *rref, p)) {
      if (rref->size() <= image.rows.size()) continue;
      image = ResidueImage{};
      absorb(image, *rref, p);
    }
    if (auto candidate = lift_candidate(ncols, image); candidate && certifies(*candidate, rows)) return *candidate;
  }
  return echelon_serial(ncols, rows);
}

}  // namespace fmes
