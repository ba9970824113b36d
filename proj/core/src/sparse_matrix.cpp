#include "hyperframe/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace hyperframe {

namespace {

void normalize_row(SparseRow& row) {
  std::stable_sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
  SparseRow merged;
  merged.reserve(row.size());
  for (auto& entry : row) {
    if (!merged.empty() && merged.back().col == entry.col) {
      merged.back().value += entry.value;
    } else {
      merged.push_back(std::move(entry));
    }
  }
  std::erase_if(merged, [](const SparseEntry& e) { return e.value.is_zero(); });
  row = std::move(merged);
}

struct RowHash {
  std::size_t operator()(const SparseRow* row) const noexcept {
    std::size_t h = row->size();
    for (const auto& e : *row) {
      h ^= e.col + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= e.value.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct RowEqual {
  bool operator()(const SparseRow* a, const SparseRow* b) const { return *a == *b; }
};

}  // namespace

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : row_count_(rows), col_count_(cols), rows_(rows) {}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols, std::span<const Triplet> entries) {
  SparseMatrix m(rows, cols);
  for (const auto& t : entries) {
    if (t.row >= rows || t.col >= cols) throw std::invalid_argument("sparse entry index out of range");
    if (t.value.is_zero()) throw std::invalid_argument("sparse entry stores an explicit zero");
    m.rows_[t.row].push_back({t.col, t.value});
  }
  for (auto& row : m.rows_) {
    std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i].col == row[i - 1].col) throw std::invalid_argument("duplicate sparse entry");
    }
  }
  return m;
}

SparseMatrix SparseMatrix::from_rows(std::size_t cols, std::vector<SparseRow> rows) {
  SparseMatrix m;
  m.row_count_ = rows.size();
  m.col_count_ = cols;
  for (auto& row : rows) {
    for (const auto& e : row) {
      if (e.col >= cols) throw std::invalid_argument("sparse entry column out of range");
    }
    normalize_row(row);
  }
  m.rows_ = std::move(rows);
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<Vector>& dense) {
  const std::size_t cols = dense.empty() ? 0 : dense.front().size();
  std::vector<SparseRow> rows;
  rows.reserve(dense.size());
  for (const auto& d : dense) {
    if (d.size() != cols) throw std::invalid_argument("ragged dense matrix");
    SparseRow row;
    for (std::size_t j = 0; j < cols; ++j) {
      if (!d[j].is_zero()) row.push_back({j, d[j]});
    }
    rows.push_back(std::move(row));
  }
  return from_rows(cols, std::move(rows));
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].push_back({i, Rational(1)});
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nonzeros());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& e : rows_[i]) out.push_back({i, e.col, e.value});
  }
  return out;
}

Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= row_count_ || col >= col_count_) throw std::out_of_range("sparse matrix index");
  const auto& r = rows_[row];
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const SparseEntry& e, std::size_t c) { return e.col < c; });
  return it != r.end() && it->col == col ? it->value : Rational();
}

Vector mat_vec(const SparseMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) {
    throw std::invalid_argument("mat_vec: vector length " + std::to_string(v.size()) + " does not match " +
                                std::to_string(m.cols()) + " columns");
  }
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rational acc;
    for (const auto& e : m.row(i)) {
      if (!v[e.col].is_zero()) acc += e.value * v[e.col];
    }
    out[i] = std::move(acc);
  }
  return out;
}

SparseMatrix dedupe_rows(const SparseMatrix& m) {
  std::unordered_set<const SparseRow*, RowHash, RowEqual> seen;
  seen.reserve(m.rows());
  std::vector<SparseRow> kept;
  for (const auto& row : m.row_data()) {
    if (seen.insert(&row).second) kept.push_back(row);
  }
  return SparseMatrix::from_rows(m.cols(), std::move(kept));
}

}  // namespace hyperframe
