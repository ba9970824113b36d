#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperframe/hypergraph.hpp"

namespace hyperframe {

/// Equivalence relation on vertex ids 0..n-1 with canonical class ids: the
/// class holding the smallest vertex not yet covered gets the next id, so
/// equal relations have identical encodings.
class Partition {
 public:
  Partition() = default;

  /// Builds the canonical partition whose classes are the level sets of
  /// `keys` (any values comparable with ==, given as dense integers).
  static Partition from_keys(std::span<const std::size_t> keys);
  static Partition from_classes(std::size_t vertex_count, const std::vector<std::vector<VertexId>>& classes);
  static Partition discrete(std::size_t vertex_count);
  static Partition single(std::size_t vertex_count);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return class_of_.size(); }
  [[nodiscard]] std::size_t class_count() const noexcept { return classes_.size(); }
  [[nodiscard]] std::size_t class_of(VertexId v) const { return class_of_.at(v); }
  [[nodiscard]] const std::vector<std::size_t>& class_ids() const noexcept { return class_of_; }
  [[nodiscard]] const std::vector<std::vector<VertexId>>& classes() const noexcept { return classes_; }
  [[nodiscard]] bool same_class(VertexId a, VertexId b) const { return class_of(a) == class_of(b); }
  [[nodiscard]] bool is_discrete() const noexcept { return classes_.size() == class_of_.size(); }

  /// True when every class of *this lies inside a class of `coarser`.
  [[nodiscard]] bool refines(const Partition& coarser) const;

  /// Common refinement of two partitions on the same vertex set.
  [[nodiscard]] Partition meet(const Partition& other) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.class_of_ == b.class_of_; }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<VertexId>> classes_;
};

/// Connected components via union-find; isolated vertices are singletons.
Partition components(const Hypergraph& h);

/// One component and at least one vertex.
bool is_connected(const Hypergraph& h);

struct Quotient {
  Hypergraph graph;
  Partition partition;
};

/// Quotient by `p`. Quotient vertex i is class i and carries the label of
/// its smallest-id member; edges map entrywise, are re-canonicalized, and
/// coinciding images collapse to one edge.
Quotient quotient(const Hypergraph& h, const Partition& p);

}  // namespace hyperframe
