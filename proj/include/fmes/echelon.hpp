#pragma once

#include "fmes/rational.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace fmes {

// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<int, Rational>>;

// row += factor * other
void axpy(SparseRow& row, const Rational& factor, const SparseRow& other);

// Reduced row-echelon form built by incremental insertion. Pivots are leftmost
// columns with entry 1 and every pivot column is zero outside its own row, so the
// result depends only on the span of the inserted rows.
class Echelon {
 public:
  explicit Echelon(std::size_t ncols = 0) : ncols_(ncols) {}

  [[nodiscard]] std::size_t ncols() const { return ncols_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] const std::map<int, SparseRow>& rows() const { return rows_; }
  [[nodiscard]] bool is_pivot(int column) const { return rows_.contains(column); }

  // Eliminates every pivot column from the row.
  [[nodiscard]] SparseRow reduce(SparseRow row) const;
  // Returns true when the rank grows.
  bool insert(SparseRow row);
  // Installs a row known to be reduced, monic and in RREF relation to the rest.
  void adopt(int pivot, SparseRow row);

  friend bool operator==(const Echelon&, const Echelon&) = default;

 private:
  std::size_t ncols_;
  std::map<int, SparseRow> rows_;
};

// Reference implementation: one row at a time.
Echelon echelon_serial(std::size_t ncols, const std::vector<SparseRow>& rows);
// Rows are reduced against the current basis in parallel batches, then inserted in order.
Echelon echelon_parallel(std::size_t ncols, const std::vector<SparseRow>& rows, std::size_t batch = 64);

}  // namespace fmes
