#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyperframe {

using VertexId = std::uint32_t;

/// One representative of a Sym(ell) orbit: vertex ids sorted ascending.
/// Repeated ids are allowed.
using Edge = std::vector<VertexId>;

/// Sorts a tuple into its orbit representative. Throws std::invalid_argument
/// when the length differs from `ell` or an id is not below `vertex_count`.
Edge canonicalize_edge(std::span<const VertexId> tuple, std::size_t ell, std::size_t vertex_count);

/// All distinct rearrangements of a canonical edge in lexicographic order;
/// there are ell! / prod(multiplicity!) of them.
std::vector<Edge> arrangements(const Edge& edge);

/// An ell-uniform hypergraph. Vertices are dense ids with string labels;
/// edges are stored once per orbit, canonical, in lexicographic order.
/// Immutable after construction.
class Hypergraph {
 public:
  /// Tuples are canonicalized and duplicate orbits collapsed. Throws
  /// std::invalid_argument for ell < 3, an empty or repeated label list, or a
  /// malformed tuple.
  Hypergraph(std::size_t ell, std::vector<std::string> labels, std::span<const std::vector<VertexId>> tuples);
  Hypergraph(std::size_t ell, std::vector<std::string> labels, std::initializer_list<std::vector<VertexId>> tuples);

  /// Convenience for literals: edges given by vertex label.
  static Hypergraph from_labels(std::size_t ell, std::vector<std::string> labels,
                                const std::vector<std::vector<std::string>>& edges);

  [[nodiscard]] std::size_t ell() const noexcept { return ell_; }
  [[nodiscard]] std::size_t vertex_count() const noexcept { return labels_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::string& label(VertexId v) const { return labels_.at(v); }
  [[nodiscard]] std::optional<VertexId> find(const std::string& label) const;
  [[nodiscard]] VertexId id_of(const std::string& label) const;
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }
  [[nodiscard]] bool has_edge(const Edge& canonical) const;

  /// Number of orbits collapsed while building (duplicates in the input).
  [[nodiscard]] std::size_t collapsed_duplicates() const noexcept { return collapsed_; }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.ell_ == b.ell_ && a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t ell_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<Edge> edges_;
  std::size_t collapsed_ = 0;
};

}  // namespace hyperframe
