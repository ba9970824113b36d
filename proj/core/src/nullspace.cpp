#include "hyperframe/nullspace.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>

namespace hyperframe {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

const Rational* find_col(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const SparseEntry& e, std::size_t c) { return e.col < c; });
  return it != row.end() && it->col == col ? &it->value : nullptr;
}

// Right-looking elimination state. Rows that have served as pivots are frozen
// and kept for back substitution.
class Eliminator {
 public:
  explicit Eliminator(const SparseMatrix& m) : cols_(m.cols()), col_rows_(m.cols()), col_count_(m.cols(), 0) {
    const SparseMatrix distinct = dedupe_rows(m);
    rows_.reserve(distinct.rows());
    for (const auto& row : distinct.row_data()) {
      if (row.empty()) continue;
      const auto index = static_cast<std::uint32_t>(rows_.size());
      for (const auto& e : row) {
        col_rows_[e.col].push_back(index);
        ++col_count_[e.col];
      }
      rows_.push_back(row);
      alive_.push_back(index);
    }
    stamp_.assign(rows_.size(), 0);
    frozen_.assign(rows_.size(), false);
  }

  void run() {
    while (true) {
      const auto [row, col] = choose_pivot();
      if (row == kNone) break;
      pivot(row, col);
    }
  }

  [[nodiscard]] std::size_t rank() const { return pivots_.size(); }

  Basis kernel() const {
    std::vector<bool> pivoted(cols_, false);
    for (const auto& [row, col] : pivots_) pivoted[col] = true;
    std::vector<std::size_t> free_index(cols_, kNone);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!pivoted[j]) {
        free_index[j] = free_cols.size();
        free_cols.push_back(j);
      }
    }
    const std::size_t nfree = free_cols.size();

    // expr[c] expresses pivot variable c in the free variables.
    std::vector<Vector> expr(cols_);
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      const auto& [row_index, col] = *it;
      const SparseRow& row = rows_[row_index];
      Vector acc(nfree);
      Rational lead;
      for (const auto& e : row) {
        if (e.col == col) {
          lead = e.value;
        } else if (free_index[e.col] != kNone) {
          acc[free_index[e.col]] += e.value;
        } else {
          const Vector& sub = expr[e.col];
          for (std::size_t k = 0; k < nfree; ++k) {
            if (!sub[k].is_zero()) acc[k] += e.value * sub[k];
          }
        }
      }
      const Rational scale = -inverse(lead);
      for (auto& v : acc) {
        if (!v.is_zero()) v *= scale;
      }
      expr[col] = std::move(acc);
    }

    std::vector<Vector> vectors;
    vectors.reserve(nfree);
    for (std::size_t k = 0; k < nfree; ++k) {
      Vector v(cols_);
      v[free_cols[k]] = Rational(1);
      for (const auto& [row_index, col] : pivots_) v[col] = expr[col][k];
      vectors.push_back(std::move(v));
    }
    return canonical_basis(cols_, std::move(vectors));
  }

 private:
  std::pair<std::size_t, std::size_t> choose_pivot() {
    std::size_t best_row = kNone;
    std::size_t best_col = kNone;
    std::size_t best_cost = kNone;
    std::size_t best_height = kNone;
    std::erase_if(alive_, [this](std::uint32_t r) { return rows_[r].empty() || dead(r); });
    for (std::uint32_t r : alive_) {
      const SparseRow& row = rows_[r];
      const std::size_t row_factor = row.size() - 1;
      for (const auto& e : row) {
        const std::size_t cost = row_factor * (col_count_[e.col] - 1);
        if (cost > best_cost) continue;
        const std::size_t height = e.value.height();
        if (cost < best_cost || height < best_height) {
          best_cost = cost;
          best_height = height;
          best_row = r;
          best_col = e.col;
        }
      }
      if (best_cost == 0 && best_height <= 2) break;
    }
    return {best_row, best_col};
  }

  bool dead(std::uint32_t r) const { return frozen_[r]; }

  void pivot(std::size_t p, std::size_t c) {
    frozen_[p] = true;
    for (const auto& e : rows_[p]) --col_count_[e.col];
    pivots_.emplace_back(p, c);

    const SparseRow& prow = rows_[p];
    const Rational* lead = find_col(prow, c);
    ++epoch_;
    std::vector<std::uint32_t> targets;
    targets.swap(col_rows_[c]);
    for (std::uint32_t i : targets) {
      if (i == p || frozen_[i] || stamp_[i] == epoch_) continue;
      stamp_[i] = epoch_;
      const Rational* hit = find_col(rows_[i], c);
      if (hit == nullptr) continue;
      const Rational factor = *hit / *lead;
      rows_[i] = subtract_scaled(i, rows_[i], factor, prow);
    }
  }

  // Returns row - factor * prow, keeping column counts and the column index
  // in sync.
  SparseRow subtract_scaled(std::uint32_t index, const SparseRow& row, const Rational& factor, const SparseRow& prow) {
    SparseRow out;
    out.reserve(row.size() + prow.size());
    auto a = row.begin();
    auto b = prow.begin();
    while (a != row.end() || b != prow.end()) {
      if (b == prow.end() || (a != row.end() && a->col < b->col)) {
        out.push_back(*a++);
      } else if (a == row.end() || b->col < a->col) {
        Rational v = -(factor * b->value);
        ++col_count_[b->col];
        col_rows_[b->col].push_back(index);
        out.push_back({b->col, std::move(v)});
        ++b;
      } else {
        Rational v = a->value - factor * b->value;
        if (v.is_zero()) {
          --col_count_[a->col];
        } else {
          out.push_back({a->col, std::move(v)});
        }
        ++a;
        ++b;
      }
    }
    return out;
  }

  std::size_t cols_;
  std::vector<SparseRow> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::size_t> col_count_;
  std::vector<std::uint32_t> alive_;
  std::vector<bool> frozen_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;
};

}  // namespace

EliminationResult eliminate(const SparseMatrix& m) {
  Eliminator e(m);
  e.run();
  return {e.rank(), e.kernel()};
}

Basis canonical_basis(std::size_t ambient_dimension, std::vector<Vector> vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dimension) throw std::invalid_argument("basis vector has wrong length");
  }
  // Gauss-Jordan on the rows, scanning columns from the right so each
  // vector's pivot is its last nonzero coordinate.
  std::size_t placed = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t jj = ambient_dimension; jj-- > 0 && placed < vectors.size();) {
    std::size_t chosen = kNone;
    for (std::size_t i = placed; i < vectors.size(); ++i) {
      if (!vectors[i][jj].is_zero()) {
        chosen = i;
        break;
      }
    }
    if (chosen == kNone) continue;
    std::swap(vectors[placed], vectors[chosen]);
    Vector& prow = vectors[placed];
    const Rational scale = inverse(prow[jj]);
    for (auto& x : prow) {
      if (!x.is_zero()) x *= scale;
    }
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (i == placed || vectors[i][jj].is_zero()) continue;
      const Rational factor = vectors[i][jj];
      for (std::size_t k = 0; k <= jj; ++k) {
        if (!prow[k].is_zero()) vectors[i][k] -= factor * prow[k];
      }
    }
    pivot_cols.push_back(jj);
    ++placed;
  }
  vectors.resize(placed);

  std::vector<std::size_t> order(placed);
  for (std::size_t i = 0; i < placed; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_cols[a] < pivot_cols[b]; });
  Basis basis;
  basis.ambient_dimension = ambient_dimension;
  for (std::size_t i : order) {
    basis.vectors.push_back(std::move(vectors[i]));
    basis.pivots.push_back(pivot_cols[i]);
  }
  return basis;
}

bool is_canonical(const Basis& basis) {
  if (basis.pivots.size() != basis.vectors.size()) return false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Vector& v = basis.vectors[i];
    const std::size_t p = basis.pivots[i];
    if (v.size() != basis.ambient_dimension || p >= v.size()) return false;
    if (i > 0 && basis.pivots[i - 1] >= p) return false;
    if (v[p] != Rational(1)) return false;
    for (std::size_t k = p + 1; k < v.size(); ++k) {
      if (!v[k].is_zero()) return false;
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j != i && !basis.vectors[j][p].is_zero()) return false;
    }
  }
  return true;
}

}  // namespace hyperframe
