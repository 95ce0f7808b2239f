#include "fmes/qshuffle.hpp"

#include <array>
#include <atomic>
#include <mutex>

namespace fmes {

Diamond<Letter> stuffle_diamond() {
  return [](const Letter& a, const Letter& b) -> std::optional<Letter> { return Letter{a.k + b.k, a.d + b.d}; };
}

Diamond<ZLetter> zstuffle_diamond() {
  return [](const ZLetter& a, const ZLetter& b) -> std::optional<ZLetter> { return ZLetter{a.k + b.k}; };
}

Diamond<BLetter> bstuffle_diamond() {
  return [](const BLetter& a, const BLetter& b) -> std::optional<BLetter> {
    if (a.i == 0 || b.i == 0) return std::nullopt;
    return BLetter{a.i + b.i};
  };
}

namespace {

struct PairKey {
  Word u;
  Word v;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& p) const {
    return static_cast<std::size_t>(hash_value(p.u) * 0x9e3779b97f4a7c15ULL ^ hash_value(p.v));
  }
};

class StuffleCache {
 public:
  std::shared_ptr<const Element> get(const Word& a, const Word& b) {
    PairKey key = a < b ? PairKey{a, b} : PairKey{b, a};
    Shard& shard = shards_[PairKeyHash{}(key) % shards_.size()];
    {
      std::lock_guard lock(shard.guard);
      if (auto it = shard.table.find(key); it != shard.table.end()) {
        hits_.fetch_add(1, std::memory_order_relaxed);
        return it->second;
      }
    }
    misses_.fetch_add(1, std::memory_order_relaxed);
    auto value = std::make_shared<const Element>(quasi_shuffle(key.u, key.v, stuffle_diamond()));
    std::lock_guard lock(shard.guard);
    return shard.table.try_emplace(std::move(key), std::move(value)).first->second;
  }

  ProductCacheStats stats() {
    ProductCacheStats s;
    for (auto& shard : shards_) {
      std::lock_guard lock(shard.guard);
      s.entries += shard.table.size();
    }
    s.hits = hits_.load();
    s.misses = misses_.load();
    return s;
  }

  void clear() {
    for (auto& shard : shards_) {
      std::lock_guard lock(shard.guard);
      shard.table.clear();
    }
    hits_ = 0;
    misses_ = 0;
  }

 private:
  struct Shard {
    std::mutex guard;
    std::unordered_map<PairKey, std::shared_ptr<const Element>, PairKeyHash> table;
  };
  std::array<Shard, 32> shards_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

StuffleCache& stuffle_cache() {
  static StuffleCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const Element> stuffle_shared(const Word& u, const Word& v) {
  if (u.empty()) return std::make_shared<const Element>(v);
  if (v.empty()) return std::make_shared<const Element>(u);
  return stuffle_cache().get(u, v);
}

Element stuffle(const Word& u, const Word& v) { return *stuffle_shared(u, v); }

Element stuffle(const Element& x, const Element& y) {
  Element out;
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) out.add(*stuffle_shared(u, v), a * b);
  return out;
}

Element stuffle_power(const Element& x, int n) {
  Element out = unit_element();
  for (int i = 0; i < n; ++i) out = stuffle(out, x);
  return out;
}

ProductCacheStats product_cache_stats() { return stuffle_cache().stats(); }
void clear_product_caches() { stuffle_cache().clear(); }

ZElement stuffle_z(const ZWord& u, const ZWord& v) { return quasi_shuffle(u, v, zstuffle_diamond()); }
ZElement stuffle_z(const ZElement& x, const ZElement& y) { return quasi_shuffle(x, y, zstuffle_diamond()); }

ZElement shuffle_z(const ZWord& u, const ZWord& v) {
  const auto xy = quasi_shuffle(to_xy(u), to_xy(v), zero_diamond<XY>());
  ZElement out;
  for (const auto& [w, c] : xy) out.add(from_xy(w), c);
  return out;
}

ZElement shuffle_z(const ZElement& x, const ZElement& y) {
  return apply_bilinear(x, y, [](const ZWord& u, const ZWord& v) { return shuffle_z(u, v); });
}

ZElement index_shuffle(const ZWord& u, const ZWord& v) { return quasi_shuffle(u, v, zero_diamond<ZLetter>()); }
ZElement index_shuffle(const ZElement& x, const ZElement& y) { return quasi_shuffle(x, y, zero_diamond<ZLetter>()); }

BElement stuffle_b(const BWord& u, const BWord& v) { return quasi_shuffle(u, v, bstuffle_diamond()); }
BElement stuffle_b(const BElement& x, const BElement& y) { return quasi_shuffle(x, y, bstuffle_diamond()); }

LetterSampler<Letter> default_letter_sampler(int max_weight) {
  return [max_weight](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> wd(1, max_weight);
    const int w = wd(rng);
    std::uniform_int_distribution<int> kd(1, w);
    const int k = kd(rng);
    return Letter{k, w - k};
  };
}

LetterSampler<ZLetter> default_zletter_sampler(int max_weight) {
  return [max_weight](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kd(1, max_weight);
    return ZLetter{kd(rng)};
  };
}

}  // namespace fmes
