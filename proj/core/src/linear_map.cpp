#include "hyperframe/linear_map.hpp"

#include <stdexcept>
#include <string>

#include "hyperframe/error.hpp"

namespace hyperframe {

namespace {

void require_arity(std::size_t ell) {
  if (ell < 3) throw DomainError("arity must be at least 3, got " + std::to_string(ell));
}

}  // namespace

LinearMap::LinearMap(std::vector<Vector> rows) : rows_(std::move(rows)) {
  if (rows_.empty() || rows_.front().empty()) throw std::invalid_argument("linear map needs at least one row and column");
  for (const auto& row : rows_) {
    if (row.size() != rows_.front().size()) throw std::invalid_argument("linear map rows differ in length");
  }
}

LinearMap LinearMap::universal(std::size_t ell) {
  require_arity(ell);
  return LinearMap({Vector(ell, Rational(1))});
}

LinearMap LinearMap::centroid(std::size_t ell) {
  require_arity(ell);
  std::vector<Vector> rows(ell - 1, Vector(ell));
  for (std::size_t i = 0; i + 1 < ell; ++i) {
    rows[i][i] = Rational(1);
    rows[i][i + 1] = Rational(-1);
  }
  return LinearMap(std::move(rows));
}

Vector LinearMap::column(std::size_t a) const {
  Vector out;
  out.reserve(r());
  for (const auto& row : rows_) out.push_back(row.at(a));
  return out;
}

Vector LinearMap::apply(std::span<const Rational> lambda) const {
  if (lambda.size() != ell()) throw std::invalid_argument("linear map applied to a vector of the wrong length");
  Vector out(r());
  for (std::size_t i = 0; i < r(); ++i) {
    for (std::size_t a = 0; a < ell(); ++a) {
      if (!rows_[i][a].is_zero() && !lambda[a].is_zero()) out[i] += rows_[i][a] * lambda[a];
    }
  }
  return out;
}

SparseMatrix LinearMap::as_sparse() const { return SparseMatrix::from_dense(rows_); }

std::optional<std::size_t> first_disengaged_axis(const LinearMap& t) {
  for (std::size_t a = 0; a < t.ell(); ++a) {
    bool zero = true;
    for (std::size_t i = 0; i < t.r() && zero; ++i) zero = t.at(i, a).is_zero();
    if (zero) return a;
  }
  return std::nullopt;
}

bool is_engaged(const LinearMap& t) { return !first_disengaged_axis(t).has_value(); }

}  // namespace hyperframe
