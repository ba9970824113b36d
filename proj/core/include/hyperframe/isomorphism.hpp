#pragma once

#include <cstddef>
#include <vector>

#include "hyperframe/hypergraph.hpp"

namespace hyperframe {

/// Label-free shape of a hypergraph: the lexicographically smallest sorted
/// edge list over all relabelings that respect an iterated degree
/// refinement. Two hypergraphs are isomorphic iff their forms are equal.
struct CanonicalForm {
  std::size_t ell = 0;
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws DomainError when the refined cells still admit more than
/// `max_orderings` relabelings. Meant for small or highly structured inputs.
CanonicalForm canonical_form(const Hypergraph& h, std::size_t max_orderings = 5'000'000);

bool isomorphic(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperframe
