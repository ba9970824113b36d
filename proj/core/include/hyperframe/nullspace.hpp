#pragma once

#include <cstddef>
#include <vector>

#include "hyperframe/sparse_matrix.hpp"

namespace hyperframe {

/// Kernel basis in reduced column-echelon form: vector i has coordinate
/// `pivots[i]` equal to 1, every other vector is zero there, and nothing in
/// vector i is nonzero past its pivot. Pivots ascend.
struct Basis {
  std::size_t ambient_dimension = 0;
  std::vector<Vector> vectors;
  std::vector<std::size_t> pivots;

  [[nodiscard]] std::size_t size() const noexcept { return vectors.size(); }
  [[nodiscard]] bool empty() const noexcept { return vectors.empty(); }

  friend bool operator==(const Basis&, const Basis&) = default;
};

struct EliminationResult {
  std::size_t rank = 0;
  Basis kernel;
};

/// Sparse exact elimination with Markowitz pivot selection followed by
/// back substitution and canonicalization of the kernel basis. The result
/// depends only on the row space of `m`, not on row order or row scaling.
EliminationResult eliminate(const SparseMatrix& m);

inline Basis nullspace(const SparseMatrix& m) { return eliminate(m).kernel; }
inline std::size_t rank(const SparseMatrix& m) { return eliminate(m).rank; }

/// Brings any spanning set of a subspace to the canonical form described on
/// Basis. Dependent vectors are discarded.
Basis canonical_basis(std::size_t ambient_dimension, std::vector<Vector> vectors);

/// Checks the Basis invariants (lengths, pivot ones, pivot columns clear).
bool is_canonical(const Basis& basis);

}  // namespace hyperframe
