#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperframe/rational.hpp"

namespace hyperframe {

using Vector = std::vector<Rational>;

struct SparseEntry {
  std::size_t col = 0;
  Rational value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Row of a sparse matrix: entries sorted by column, no zeros, no repeats.
using SparseRow = std::vector<SparseEntry>;

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational value;
};

/// Row-major sparse rational matrix. Every stored entry is nonzero and in
/// range; a row may be empty.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Rejects duplicate (row, col) pairs, zero values and out-of-range indices.
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, std::span<const Triplet> entries);
  /// Rows are normalized: sorted by column, repeated columns summed, zeros dropped.
  static SparseMatrix from_rows(std::size_t cols, std::vector<SparseRow> rows);
  static SparseMatrix from_dense(const std::vector<Vector>& dense);
  static SparseMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const noexcept { return row_count_; }
  [[nodiscard]] std::size_t cols() const noexcept { return col_count_; }
  [[nodiscard]] std::size_t nonzeros() const;
  [[nodiscard]] const SparseRow& row(std::size_t i) const { return rows_.at(i); }
  [[nodiscard]] const std::vector<SparseRow>& row_data() const noexcept { return rows_; }
  [[nodiscard]] std::vector<Triplet> triplets() const;
  [[nodiscard]] Rational at(std::size_t row, std::size_t col) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t row_count_ = 0;
  std::size_t col_count_ = 0;
  std::vector<SparseRow> rows_;
};

/// Exact product m·v; throws std::invalid_argument on a length mismatch.
Vector mat_vec(const SparseMatrix& m, std::span<const Rational> v);

/// Drops repeated rows, keeping the first occurrence of each. The kernel is
/// unchanged.
SparseMatrix dedupe_rows(const SparseMatrix& m);

}  // namespace hyperframe
