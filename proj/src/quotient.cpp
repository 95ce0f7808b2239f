#include "fmes/quotient.hpp"

#include "fmes/enumerate.hpp"
#include "fmes/qshuffle.hpp"
#include "fmes/swap.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace fmes {

std::string to_string(IdealKind kind) {
  switch (kind) {
    case IdealKind::swap: return "swap";
    case IdealKind::constant_term: return "constant";
    case IdealKind::combined: return "combined";
  }
  return "?";
}

std::optional<IdealKind> parse_ideal_kind(std::string_view text) {
  if (text == "swap" || text == "I") return IdealKind::swap;
  if (text == "constant" || text == "N") return IdealKind::constant_term;
  if (text == "combined" || text == "I+N") return IdealKind::combined;
  return std::nullopt;
}

bool conforms(const Word& w) {
  bool past_prefix = false;
  for (const auto& a : w) {
    if (a.k != 1) past_prefix = true;
    if (past_prefix && a.d != 0) return false;
  }
  return true;
}

namespace {

using ColumnIndex = std::unordered_map<Word, int, WordHash>;

const ColumnIndex& column_index(int weight) {
  static std::mutex guard;
  static std::map<int, std::unique_ptr<ColumnIndex>> table;
  std::lock_guard lock(guard);
  auto& slot = table[weight];
  if (!slot) {
    slot = std::make_unique<ColumnIndex>();
    const auto& ws = words_of_weight(weight);
    for (std::size_t i = 0; i < ws.size(); ++i) slot->emplace(ws[i], static_cast<int>(i));
  }
  return *slot;
}

std::uint64_t row_hash(const SparseRow& row) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& [c, v] : row) {
    mix(static_cast<std::uint64_t>(c));
    mix(hash_value(v));
  }
  return h;
}

// Echelon basis of span{σ(u) - u : wt(u) = m} as elements.
const std::vector<Element>& swap_differences(int m) {
  static std::mutex guard;
  static std::map<int, std::vector<Element>> table;
  std::lock_guard lock(guard);
  auto it = table.find(m);
  if (it != table.end()) return it->second;
  Echelon e(words_of_weight(m).size());
  for (const auto& u : words_of_weight(m)) e.insert(to_row(swap_word(u) - G(u)));
  std::vector<Element> out;
  for (const auto& [p, row] : e.rows()) out.push_back(from_row(row, m));
  return table.emplace(m, std::move(out)).first->second;
}

const std::vector<Word>& nonconforming_words(int m) {
  static std::mutex guard;
  static std::map<int, std::vector<Word>> table;
  std::lock_guard lock(guard);
  auto it = table.find(m);
  if (it != table.end()) return it->second;
  std::vector<Word> out;
  for (const auto& w : words_of_weight(m))
    if (!conforms(w)) out.push_back(w);
  return table.emplace(m, std::move(out)).first->second;
}

// (left factor, right word) pairs whose products span the weight slice.
struct Seed {
  const Element* left;
  const Word* right;
};

std::vector<Element> left_factors_storage(IdealKind kind, int m) {
  std::vector<Element> out;
  if (kind != IdealKind::constant_term)
    for (const auto& d : swap_differences(m)) out.push_back(d);
  if (kind != IdealKind::swap)
    for (const auto& w : nonconforming_words(m)) out.push_back(G(w));
  return out;
}

}  // namespace

int column_of(const Word& w) {
  const auto& idx = column_index(w.weight());
  return idx.at(w);
}

SparseRow to_row(const Element& x) {
  SparseRow row;
  row.reserve(x.size());
  for (const auto& [w, c] : x) row.emplace_back(column_of(w), c);
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

Element from_row(const SparseRow& row, int weight) {
  const auto& ws = words_of_weight(weight);
  Element out;
  for (const auto& [c, v] : row) out.add(ws[static_cast<std::size_t>(c)], v);
  return out;
}

std::uint64_t fingerprint(const std::vector<SparseRow>& rows) {
  std::vector<std::uint64_t> hs;
  hs.reserve(rows.size());
  for (const auto& r : rows) hs.push_back(row_hash(r));
  std::sort(hs.begin(), hs.end());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t x : hs)
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  return h;
}

std::vector<Element> ideal_generators(IdealKind kind, int weight) {
  std::vector<Element> out;
  for (int m = 1; m <= weight; ++m) {
    const auto lefts = left_factors_storage(kind, m);
    for (const auto& l : lefts)
      for (const auto& v : words_of_weight(weight - m)) {
        Element g = stuffle(l, G(v));
        if (!g.is_zero()) out.push_back(std::move(g));
      }
  }
  return out;
}

GeneratorRows generator_rows(IdealKind kind, int weight, Execution mode) {
  if (weight < 0) throw std::invalid_argument("negative weight");
  std::vector<std::vector<Element>> lefts(static_cast<std::size_t>(weight) + 1);
  std::vector<Seed> seeds;
  for (int m = 1; m <= weight; ++m) {
    lefts[static_cast<std::size_t>(m)] = left_factors_storage(kind, m);
  }
  for (int m = 1; m <= weight; ++m)
    for (const auto& l : lefts[static_cast<std::size_t>(m)])
      for (const auto& v : words_of_weight(weight - m)) seeds.push_back({&l, &v});

  std::vector<SparseRow> rows(seeds.size());
  const auto n = static_cast<long>(seeds.size());
  if (mode == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
      const Seed& s = seeds[static_cast<std::size_t>(i)];
      rows[static_cast<std::size_t>(i)] = to_row(stuffle(*s.left, G(*s.right)));
    }
  } else {
    for (long i = 0; i < n; ++i) {
      const Seed& s = seeds[static_cast<std::size_t>(i)];
      rows[static_cast<std::size_t>(i)] = to_row(stuffle(*s.left, G(*s.right)));
    }
  }

  GeneratorRows out;
  std::unordered_set<std::uint64_t> seen;
  for (auto& r : rows) {
    if (r.empty()) continue;
    // Equal rows collapse; a hash collision only costs a redundant (harmless) row.
    if (!seen.insert(row_hash(r)).second) {
      bool duplicate = false;
      for (const auto& kept : out.rows)
        if (kept == r) {
          duplicate = true;
          break;
        }
      if (duplicate) continue;
    }
    out.rows.push_back(std::move(r));
  }
  out.fingerprint = fingerprint(out.rows);
  return out;
}

EchelonBasis build_echelon_basis(IdealKind kind, int weight, Execution mode) {
  GeneratorRows gens = generator_rows(kind, weight, mode);
  EchelonBasis b;
  b.kind = kind;
  b.weight = weight;
  b.fingerprint = gens.fingerprint;
  b.words = words_of_weight(weight).size();
  b.echelon = mode == Execution::parallel ? echelon_parallel(b.words, gens.rows) : echelon_serial(b.words, gens.rows);
  return b;
}

std::string cache_file_name(IdealKind kind, int weight) {
  return to_string(kind) + "_w" + std::to_string(weight) + ".basis";
}

std::string serialize(const EchelonBasis& b) {
  std::ostringstream os;
  os << "fmes-echelon-basis\n";
  os << "version " << EchelonBasis::format_version << "\n";
  os << "kind " << to_string(b.kind) << "\n";
  os << "weight " << b.weight << "\n";
  os << "fingerprint " << std::hex << std::setw(16) << std::setfill('0') << b.fingerprint << std::dec << "\n";
  os << "words " << b.words << "\n";
  os << "rank " << b.rank() << "\n";
  for (const auto& [pivot, row] : b.echelon.rows()) {
    os << "row " << pivot << " " << row.size();
    for (const auto& [c, v] : row) os << " " << c << ":" << to_string(v);
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

EchelonBasis deserialize(std::string_view text) {
  std::istringstream is{std::string(text)};
  auto expect = [&](const std::string& key) {
    std::string k;
    if (!(is >> k) || k != key) throw CacheError("expected '" + key + "'");
  };
  std::string magic;
  if (!(is >> magic) || magic != "fmes-echelon-basis") throw CacheError("not an echelon basis file");
  int version = 0;
  expect("version");
  if (!(is >> version) || version != EchelonBasis::format_version) throw CacheError("unsupported format version");
  EchelonBasis b;
  std::string kind;
  expect("kind");
  is >> kind;
  auto k = parse_ideal_kind(kind);
  if (!k) throw CacheError("unknown ideal kind");
  b.kind = *k;
  expect("weight");
  if (!(is >> b.weight) || b.weight < 0) throw CacheError("bad weight");
  expect("fingerprint");
  std::string fp;
  is >> fp;
  try {
    std::size_t used = 0;
    b.fingerprint = std::stoull(fp, &used, 16);
    if (used != fp.size()) throw CacheError("bad fingerprint");
  } catch (const std::logic_error&) {
    throw CacheError("bad fingerprint");
  }
  expect("words");
  if (!(is >> b.words)) throw CacheError("bad word count");
  std::size_t rank = 0;
  expect("rank");
  if (!(is >> rank) || rank > b.words) throw CacheError("bad rank");
  b.echelon = Echelon(b.words);
  int last_pivot = -1;
  for (std::size_t i = 0; i < rank; ++i) {
    expect("row");
    int pivot = 0;
    std::size_t n = 0;
    if (!(is >> pivot >> n) || pivot <= last_pivot || n == 0) throw CacheError("bad row header");
    SparseRow row;
    int last_col = -1;
    for (std::size_t j = 0; j < n; ++j) {
      std::string entry;
      if (!(is >> entry)) throw CacheError("truncated row");
      const auto colon = entry.find(':');
      if (colon == std::string::npos) throw CacheError("bad entry");
      int col = 0;
      try {
        col = std::stoi(entry.substr(0, colon));
      } catch (const std::logic_error&) {
        throw CacheError("bad column");
      }
      if (col <= last_col || col >= static_cast<int>(b.words)) throw CacheError("column out of order");
      Rational v;
      try {
        v = parse_rational(entry.substr(colon + 1));
      } catch (const std::invalid_argument&) {
        throw CacheError("bad value");
      }
      if (v == 0) throw CacheError("zero entry");
      row.emplace_back(col, v);
      last_col = col;
    }
    if (row.front().first != pivot || row.front().second != 1) throw CacheError("row not monic at its pivot");
    b.echelon.adopt(pivot, std::move(row));
    last_pivot = pivot;
  }
  expect("end");
  return b;
}

QuotientEngine::QuotientEngine(EngineOptions options) : options_(std::move(options)) {}

EngineStats QuotientEngine::stats() const {
  std::lock_guard lock(guard_);
  return stats_;
}

std::shared_ptr<const EchelonBasis> QuotientEngine::load_or_build(IdealKind kind, int weight) {
  if (!options_.cache_dir) {
    auto b = std::make_shared<const EchelonBasis>(build_echelon_basis(kind, weight, options_.mode));
    std::lock_guard lock(guard_);
    ++stats_.built;
    return b;
  }
  const auto path = *options_.cache_dir / cache_file_name(kind, weight);
  GeneratorRows gens = generator_rows(kind, weight, options_.mode);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      EchelonBasis cached = deserialize(buf.str());
      if (cached.kind == kind && cached.weight == weight && cached.fingerprint == gens.fingerprint &&
          cached.words == words_of_weight(weight).size()) {
        std::lock_guard lock(guard_);
        ++stats_.loaded;
        return std::make_shared<const EchelonBasis>(std::move(cached));
      }
      spdlog::warn("stale echelon cache {}; rebuilding", path.string());
    } catch (const CacheError& e) {
      spdlog::warn("corrupt echelon cache {} ({}); rebuilding", path.string(), e.what());
    }
    std::lock_guard lock(guard_);
    ++stats_.rejected;
  }
  EchelonBasis b;
  b.kind = kind;
  b.weight = weight;
  b.fingerprint = gens.fingerprint;
  b.words = words_of_weight(weight).size();
  b.echelon = options_.mode == Execution::parallel ? echelon_parallel(b.words, gens.rows)
                                                   : echelon_serial(b.words, gens.rows);
  std::error_code ec;
  std::filesystem::create_directories(*options_.cache_dir, ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << serialize(b);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) spdlog::warn("could not write echelon cache {}: {}", path.string(), ec.message());
  std::lock_guard lock(guard_);
  ++stats_.built;
  return std::make_shared<const EchelonBasis>(std::move(b));
}

const EchelonBasis& QuotientEngine::basis(IdealKind kind, int weight) {
  if (weight < 0) throw std::invalid_argument("negative weight");
  if (weight > options_.max_weight)
    throw ResourceLimit("weight " + std::to_string(weight) + " exceeds the configured limit " +
                        std::to_string(options_.max_weight));
  std::shared_future<std::shared_ptr<const EchelonBasis>> fut;
  std::promise<std::shared_ptr<const EchelonBasis>> prom;
  bool owner = false;
  {
    std::lock_guard lock(guard_);
    const auto key = std::make_pair(kind, weight);
    auto it = bases_.find(key);
    if (it == bases_.end()) {
      fut = prom.get_future().share();
      bases_.emplace(key, fut);
      owner = true;
    } else {
      fut = it->second;
    }
  }
  if (owner) {
    try {
      prom.set_value(load_or_build(kind, weight));
    } catch (...) {
      prom.set_exception(std::current_exception());
      std::lock_guard lock(guard_);
      bases_.erase(std::make_pair(kind, weight));
      throw;
    }
  }
  return *fut.get();
}

Element QuotientEngine::normal_form(const Element& x, IdealKind kind, int cutoff) {
  if (cutoff > options_.max_weight)
    throw ResourceLimit("cutoff " + std::to_string(cutoff) + " exceeds the configured limit " +
                        std::to_string(options_.max_weight));
  std::map<int, Element> parts;
  for (const auto& [w, c] : x) {
    if (w.weight() > cutoff) throw std::invalid_argument("component of weight " + std::to_string(w.weight()) + " above cutoff");
    parts[w.weight()].add(w, c);
  }
  Element out;
  for (const auto& [n, part] : parts) {
    const auto& b = basis(kind, n);
    out += from_row(b.echelon.reduce(to_row(part)), n);
  }
  return out;
}

bool QuotientEngine::in_ideal(const Element& x, IdealKind kind, int cutoff) {
  return normal_form(x, kind, cutoff).is_zero();
}

std::size_t QuotientEngine::dim(IdealKind kind, int weight) { return basis(kind, weight).dim(); }
std::size_t QuotientEngine::rank(IdealKind kind, int weight) { return basis(kind, weight).rank(); }

namespace {

std::mutex default_guard;
std::unique_ptr<QuotientEngine> default_instance;

}  // namespace

void configure_default_engine(EngineOptions options) {
  std::lock_guard lock(default_guard);
  default_instance = std::make_unique<QuotientEngine>(std::move(options));
}

QuotientEngine& default_engine() {
  std::lock_guard lock(default_guard);
  if (!default_instance) default_instance = std::make_unique<QuotientEngine>();
  return *default_instance;
}

}  // namespace fmes
