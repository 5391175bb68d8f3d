#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gesbell/bitvec.hpp"

namespace ges {

// Matrix over Z_2 stored as a list of equal-width rows.
struct GF2Matrix {
  std::vector<BitVec> rows;
  std::size_t n_cols = 0;

  GF2Matrix() = default;
  explicit GF2Matrix(std::size_t cols) : n_cols(cols) {}

  void append_row(BitVec row) {
    if (row.size() != n_cols) throw validation_error("GF2Matrix: row width mismatch");
    rows.push_back(std::move(row));
  }
  std::size_t n_rows() const { return rows.size(); }
};

// Incremental Gaussian eliminator over Z_2. Rows are reduced against the
// accepted pivot rows; insertion fails exactly when the candidate lies in the
// current span.
class GF2Eliminator {
 public:
  explicit GF2Eliminator(std::size_t n_cols) : n_cols_(n_cols) {}

  // Reduces `row` in place against the pivots. Returns the residue.
  BitVec reduce(BitVec row) const {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      if (row.get(pivot_cols_[i])) row ^= pivots_[i];
    }
    return row;
  }

  // Returns true and absorbs the row if it is independent of the span.
  bool try_insert(const BitVec& row) {
    BitVec residue = reduce(row);
    std::size_t col = residue.lowest_set();
    if (col == residue.size()) return false;
    pivots_.push_back(std::move(residue));
    pivot_cols_.push_back(col);
    return true;
  }

  bool in_span(const BitVec& row) const { return reduce(row).none(); }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::size_t n_cols_;
  std::vector<BitVec> pivots_;
  std::vector<std::size_t> pivot_cols_;
};

inline std::size_t gf2_rank(const GF2Matrix& m) {
  GF2Eliminator elim(m.n_cols);
  for (const BitVec& row : m.rows) elim.try_insert(row);
  return elim.rank();
}

// Basis of the left kernel: all c with sum_i c_i * row_i = 0. Each returned
// row has width n_rows(), so rank + kernel dimension = row count.
inline GF2Matrix gf2_kernel(const GF2Matrix& m) {
  const std::size_t k = m.n_rows();
  // Augment every row with a combination marker and eliminate; rows whose
  // matrix part vanishes carry a kernel element in the marker part.
  std::vector<std::pair<BitVec, BitVec>> work;
  work.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    BitVec marker(k);
    marker.set(i);
    work.emplace_back(m.rows[i], std::move(marker));
  }

  GF2Matrix kernel(k);
  std::vector<std::pair<BitVec, std::size_t>> pivots;  // (row, pivot col)
  std::vector<BitVec> pivot_markers;
  for (auto& [row, marker] : work) {
    for (std::size_t p = 0; p < pivots.size(); ++p) {
      if (row.get(pivots[p].second)) {
        row ^= pivots[p].first;
        marker ^= pivot_markers[p];
      }
    }
    std::size_t col = row.lowest_set();
    if (col == row.size()) {
      kernel.append_row(marker);
    } else {
      pivots.emplace_back(row, col);
      pivot_markers.push_back(marker);
    }
  }
  return kernel;
}

}  // namespace ges
