#pragma once

#include "fmes/quotient.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fmes {

enum class CheckStatus { pass, fail, finding };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string id;
  std::string statement;
  CheckStatus status = CheckStatus::fail;
  std::string residual;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  int max_weight = 0;
  int q_order = 0;
  std::vector<CheckResult> checks;  // sorted by id
  [[nodiscard]] bool passed() const;
};

struct VerifyOptions {
  int max_weight = 6;
  int q_order = 25;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
// Throws std::invalid_argument for unknown suites; ResourceLimit propagates from the engine.
SuiteReport run_suite(const std::string& name, QuotientEngine& engine, const VerifyOptions& options);

// Deterministic JSON; timing fields are omitted when with_timing is false.
std::string report_json(const SuiteReport& report, bool with_timing);
std::string report_text(const SuiteReport& report);

// Expected FMES dimensions 1, 1, 2, 4, 7, 13, 23, 41, 73 for k = 0..8.
const std::vector<std::size_t>& expected_fmes_dims();

struct DimRow {
  int weight = 0;
  std::size_t words = 0;
  std::size_t dim = 0;
};
// kind: "fmes", "zf" or "eds".
std::vector<DimRow> dimension_table(QuotientEngine& engine, const std::string& kind, int max_weight);
std::string dims_json(const std::string& kind, const std::vector<DimRow>& rows);

// Rank of the normal forms of G(k_1,...,k_r) of weight k in FMES.
std::size_t lwt0_span_dim(QuotientEngine& engine, int k);

}  // namespace fmes
