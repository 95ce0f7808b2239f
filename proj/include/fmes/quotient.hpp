#pragma once

#include "fmes/echelon.hpp"
#include "fmes/lincomb.hpp"

#include <cstdint>
#include <filesystem>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fmes {

enum class IdealKind { swap, constant_term, combined };

std::string to_string(IdealKind kind);
std::optional<IdealKind> parse_ideal_kind(std::string_view text);

enum class Execution { serial, parallel };

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Words of the form [1,...,1,k_1,...,k_s; d_1,...,d_r,0,...,0].
bool conforms(const Word& w);

// Column of each word in words_of_weight(weight).
int column_of(const Word& w);

// Homogeneous spanning set of the weight slice of the ideal.
std::vector<Element> ideal_generators(IdealKind kind, int weight);

SparseRow to_row(const Element& homogeneous);
Element from_row(const SparseRow& row, int weight);

// Order-independent FNV-1a digest of a generator set.
std::uint64_t fingerprint(const std::vector<SparseRow>& rows);

struct EchelonBasis {
  static constexpr int format_version = 1;
  IdealKind kind = IdealKind::swap;
  int weight = 0;
  std::uint64_t fingerprint = 0;
  std::size_t words = 0;
  Echelon echelon;

  [[nodiscard]] std::size_t rank() const { return echelon.rank(); }
  [[nodiscard]] std::size_t dim() const { return words - rank(); }
  friend bool operator==(const EchelonBasis&, const EchelonBasis&) = default;
};

struct GeneratorRows {
  std::vector<SparseRow> rows;
  std::uint64_t fingerprint = 0;
};
GeneratorRows generator_rows(IdealKind kind, int weight, Execution mode);

EchelonBasis build_echelon_basis(IdealKind kind, int weight, Execution mode);

std::string serialize(const EchelonBasis& basis);
// Throws CacheError on malformed input.
EchelonBasis deserialize(std::string_view text);
std::string cache_file_name(IdealKind kind, int weight);

struct EngineOptions {
  std::optional<std::filesystem::path> cache_dir;
  int max_weight = 8;
  Execution mode = Execution::parallel;
};

struct EngineStats {
  std::size_t built = 0;
  std::size_t loaded = 0;
  std::size_t rejected = 0;
};

// Lazily built, shared echelon bases; each (kind, weight) is built at most once.
class QuotientEngine {
 public:
  explicit QuotientEngine(EngineOptions options = {});

  const EchelonBasis& basis(IdealKind kind, int weight);
  // Components above cutoff, or a cutoff above the engine limit, are rejected.
  Element normal_form(const Element& x, IdealKind kind, int cutoff);
  bool in_ideal(const Element& x, IdealKind kind, int cutoff);
  std::size_t dim(IdealKind kind, int weight);
  std::size_t rank(IdealKind kind, int weight);

  [[nodiscard]] const EngineOptions& options() const { return options_; }
  [[nodiscard]] EngineStats stats() const;

 private:
  std::shared_ptr<const EchelonBasis> load_or_build(IdealKind kind, int weight);

  EngineOptions options_;
  mutable std::mutex guard_;
  std::map<std::pair<IdealKind, int>, std::shared_future<std::shared_ptr<const EchelonBasis>>> bases_;
  EngineStats stats_;
};

// Process-wide engine; configure before first use.
void configure_default_engine(EngineOptions options);
QuotientEngine& default_engine();

}  // namespace fmes
