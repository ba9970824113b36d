#pragma once

// Shared helpers for the test binaries: seeded generators for hypergraphs,
// maps and matrices, plus conversions into the oracle's plain data.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dense_oracle.hpp"
#include "hyperframe/hypergraph.hpp"
#include "hyperframe/linear_map.hpp"
#include "hyperframe/partition.hpp"
#include "hyperframe/signal.hpp"
#include "hyperframe/sparse_matrix.hpp"

namespace testing_support {

using hyperframe::Hypergraph;
using hyperframe::LinearMap;
using hyperframe::Rational;
using hyperframe::VertexId;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  std::size_t index(std::size_t size) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(size) - 1)); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Small-height rational, zero with probability `zero`.
  Rational rational(std::int64_t bound = 9, double zero = 0.0) {
    if (coin(zero)) return Rational(0);
    const std::int64_t num = integer(-bound, bound);
    return Rational(num == 0 ? 1 : num, integer(1, bound));
  }

  /// Any ell-uniform hypergraph; repeated vertices inside an edge appear
  /// when `repeats` is set.
  Hypergraph hypergraph(std::size_t n, std::size_t m, std::size_t ell = 3, bool repeats = false);

  /// Connected instance: a random spanning chain of edges plus extras.
  Hypergraph connected(std::size_t n, std::size_t extra, std::size_t ell = 3, bool repeats = false);

  /// Disjoint union of `pieces` connected parts of 1..max_piece vertices.
  /// Every vertex lies on an edge; a one-vertex part carries a loop.
  Hypergraph components(std::size_t pieces, std::size_t max_piece, std::size_t ell = 3, bool repeats = false);

  /// r x ell integer matrix with entries in [-bound, bound] and no zero column.
  LinearMap engaged_map(std::size_t r, std::size_t ell, std::int64_t bound = 3);

  /// Dense rows -> sparse matrix with roughly `density` nonzeros.
  hyperframe::SparseMatrix matrix(std::size_t rows, std::size_t cols, double density = 0.4, std::int64_t bound = 5);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

std::vector<std::string> numbered_labels(std::size_t n);

oracle::Instance to_instance(const Hypergraph& h);
oracle::Matrix to_matrix(const LinearMap& t);
oracle::Matrix to_matrix(const hyperframe::SparseMatrix& m);
oracle::Row to_row(const std::vector<Rational>& v);
/// Signal reshaped as ell rows of |V| values.
std::vector<oracle::Row> to_rows(const hyperframe::Signal& s);

/// Every connected 3-uniform hypergraph on 1..max_vertices vertices with at
/// most max_edges multiset edges, one per isomorphism class, in a fixed
/// order.
std::vector<Hypergraph> small_connected_instances(std::size_t max_vertices, std::size_t max_edges);

/// Evenly strided subset of at most `cap` items, order preserved.
template <typename T>
std::vector<T> strided(const std::vector<T>& items, std::size_t cap) {
  if (items.size() <= cap) return items;
  std::vector<T> out;
  for (std::size_t i = 0; i < cap; ++i) out.push_back(items[i * items.size() / cap]);
  return out;
}

}  // namespace testing_support
