#pragma once

#include <cstddef>
#include <cstdint>

#include "hyperframe/hypergraph.hpp"

namespace hyperframe {

struct RandomInstance {
  Hypergraph graph;
  /// Whole-instance samples drawn, including the accepted one.
  std::size_t attempts = 0;
  /// Edges swapped for bridges because every sample was disconnected.
  std::size_t bridges = 0;
};

struct RandomOptions {
  std::size_t rejection_budget = 1000;
};

/// Connected ell-uniform hypergraph on vertices "v0".."v{n-1}" with exactly
/// m edges, each a set of ell distinct vertices, chosen uniformly among
/// subsets without repetition. Disconnected samples are redrawn up to the
/// budget; after that the last sample is repaired by replacing redundant
/// edges with edges that join components, so m stays exact.
/// Deterministic per (n, m, ell, seed). Throws DomainError when no
/// connected instance exists or the repair cannot finish.
RandomInstance random_instance(std::size_t n, std::size_t m, std::size_t ell, std::uint64_t seed,
                               const RandomOptions& options = {});

inline Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t ell, std::uint64_t seed) {
  return random_instance(n, m, ell, seed).graph;
}

/// Mixes a value into a 64-bit seed (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value);

}  // namespace hyperframe
