#pragma once

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperframe/hypergraph.hpp"
#include "hyperframe/linear_map.hpp"
#include "hyperframe/partition.hpp"
#include "hyperframe/rational.hpp"
#include "hyperframe/signal.hpp"

namespace hyperframe {

struct FrameResult {
  Hypergraph frame;
  /// Fusion classes on the input's vertex ids.
  Partition fusion;
  /// Frame label of each input vertex, indexed by input vertex id.
  std::vector<std::string> class_map;
};

/// Classes of vertices on which `values` agree.
Partition level_sets(std::span<const Rational> values);

/// Vertices fuse when every basis signal agrees on them along every axis.
/// Requires a connected hypergraph with matching arity.
Partition fusion(const Hypergraph& h, const LinearMap& t);

/// Fusion read off the basis of an already computed signal space.
Partition fusion(const SignalSpace& space);

/// Frame under the universal map, built from the level sets of a generating
/// signal's first axis.
FrameResult frame(const Hypergraph& h);

/// Frame under an arbitrary map, built from the full fusion refinement.
FrameResult frame_general(const Hypergraph& h, const LinearMap& t);

/// Extension for disconnected inputs: the frame of each component, glued
/// back together into one quotient of the whole hypergraph.
FrameResult frame_per_component(const Hypergraph& h);

/// Induced sub-hypergraph on `vertices` (ids ascending in the result).
Hypergraph induced_subgraph(const Hypergraph& h, std::span<const VertexId> vertices);

/// A connected hypergraph is stable when its U-fusion is discrete.
bool is_stable(const Hypergraph& h);

/// Unordered pairs {x, y}, x < y, such that two edges become equal after
/// deleting one occurrence of x from one and one occurrence of y from the
/// other. A single folding step; not closed transitively.
std::set<std::pair<VertexId, VertexId>> fold_pairs(const Hypergraph& h);

}  // namespace hyperframe
