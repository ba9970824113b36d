#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyperframe/rational.hpp"
#include "hyperframe/sparse_matrix.hpp"

namespace hyperframe {

/// A linear map K^ell -> K^r stored as a dense r x ell matrix; column a is the
/// image of the a-th standard basis vector.
class LinearMap {
 public:
  /// `rows` must be non-empty and rectangular with ell >= 1 columns.
  explicit LinearMap(std::vector<Vector> rows);

  /// Coordinate sum: the 1 x ell all-ones row.
  static LinearMap universal(std::size_t ell);
  /// Consecutive differences: (ell-1) x ell with rows (..., 1, -1, ...).
  static LinearMap centroid(std::size_t ell);

  [[nodiscard]] std::size_t r() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t ell() const noexcept { return rows_.front().size(); }
  [[nodiscard]] const Rational& at(std::size_t i, std::size_t a) const { return rows_.at(i).at(a); }
  [[nodiscard]] const std::vector<Vector>& rows() const noexcept { return rows_; }
  [[nodiscard]] Vector column(std::size_t a) const;
  [[nodiscard]] Vector apply(std::span<const Rational> lambda) const;
  [[nodiscard]] SparseMatrix as_sparse() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  std::vector<Vector> rows_;
};

/// True when no column of the matrix is zero.
bool is_engaged(const LinearMap& t);

/// First axis whose column is zero, if any.
std::optional<std::size_t> first_disengaged_axis(const LinearMap& t);

}  // namespace hyperframe
