#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyperframe/hypergraph.hpp"
#include "hyperframe/linear_map.hpp"
#include "hyperframe/nullspace.hpp"
#include "hyperframe/rational.hpp"
#include "hyperframe/sparse_matrix.hpp"

namespace hyperframe {

/// An ell x |V| table of rationals; entry (a, x) is the value of axis a at
/// vertex x. Flattened with the axis outer and the vertex inner, which is also
/// the column layout of the constraint system.
class Signal {
 public:
  Signal() = default;
  Signal(std::size_t ell, std::size_t vertex_count);
  static Signal from_coordinates(std::size_t ell, std::size_t vertex_count, std::span<const Rational> coordinates);

  [[nodiscard]] std::size_t ell() const noexcept { return ell_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return vertex_count_; }
  [[nodiscard]] const Rational& operator()(std::size_t axis, VertexId x) const { return values_[index(axis, x)]; }
  [[nodiscard]] Rational& operator()(std::size_t axis, VertexId x) { return values_[index(axis, x)]; }
  [[nodiscard]] std::span<const Rational> axis(std::size_t a) const;
  [[nodiscard]] const Vector& coordinates() const noexcept { return values_; }
  [[nodiscard]] bool is_zero() const;

  Signal& operator+=(const Signal& other);
  Signal& operator*=(const Rational& k);

  friend bool operator==(const Signal&, const Signal&) = default;

 private:
  [[nodiscard]] std::size_t index(std::size_t axis, VertexId x) const;

  std::size_t ell_ = 0;
  std::size_t vertex_count_ = 0;
  Vector values_;
};

inline std::size_t coordinate_index(std::size_t axis, VertexId x, std::size_t vertex_count) {
  return axis * vertex_count + x;
}

/// A basis of T-signals for one hypergraph.
struct SignalSpace {
  LinearMap map;
  std::size_t ell = 0;
  std::size_t vertex_count = 0;
  Basis basis;

  [[nodiscard]] std::size_t dimension() const noexcept { return basis.size(); }
  [[nodiscard]] Signal signal(std::size_t i) const;
  [[nodiscard]] std::vector<Signal> signals() const;
};

/// One linear condition per (map row, edge, distinct arrangement): the
/// coefficient of column (a, arrangement[a]) is the map entry (row, a).
/// Identical rows are dropped. Throws DomainError on an arity mismatch.
SparseMatrix assemble_constraints(const Hypergraph& h, const LinearMap& t);

/// Kernel of the constraint system. Every basis signal is re-verified
/// against the hypergraph before returning.
SignalSpace signal_space(const Hypergraph& h, const LinearMap& t);

/// Signals constant along each axis, one per kernel vector of `t`.
SignalSpace constant_space(const LinearMap& t, std::size_t vertex_count);

struct Violation {
  std::size_t edge_index = 0;
  Edge arrangement;
  std::size_t map_row = 0;
  Rational residual;
};

/// First failing (edge, arrangement, map row), scanning edges in stored
/// order, arrangements lexicographically and map rows ascending.
std::optional<Violation> find_violation(const Hypergraph& h, const LinearMap& t, const Signal& s);

/// Exact check over every edge and every distinct arrangement.
inline bool verify_signal(const Hypergraph& h, const LinearMap& t, const Signal& s) {
  return !find_violation(h, t, s).has_value();
}

/// Dimension of the centroid-map signal space, which equals the number of
/// connected components.
std::size_t component_count_via_centroid(const Hypergraph& h);

/// Rescales each axis of a T-signal so the result is a U-signal. Searches
/// integer weight vectors w in order of increasing height until w·T(e_a) is
/// nonzero for all axes a, then scales axis a by w·T(e_a).
Signal embed_to_universal(const Hypergraph& h, const LinearMap& t, const Signal& s);

/// The weight vector chosen by embed_to_universal.
Vector universal_weights(const LinearMap& t);

/// A single U-signal whose axis-0 level sets are exactly the U-fusion
/// classes. Requires a connected hypergraph.
Signal generating_signal(const Hypergraph& h);

/// Same as generating_signal, reusing an already computed U-signal space.
Signal generating_signal(const Hypergraph& h, const SignalSpace& universal_space);

}  // namespace hyperframe
