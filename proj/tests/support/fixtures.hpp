#pragma once

#include "hyperframe/hypergraph.hpp"

namespace testing_support {

/// The 5-vertex fan with apex u and rim v, w, x, y.
inline hyperframe::Hypergraph five_vertex_fan() {
  return hyperframe::Hypergraph::from_labels(3, {"u", "v", "w", "x", "y"},
                                             {{"u", "v", "w"}, {"u", "w", "x"}, {"u", "x", "y"}});
}

/// Six vertices, four edges; fuses to a triangle although no two of its
/// edges share two vertices.
inline hyperframe::Hypergraph no_fold_hexad() {
  return hyperframe::Hypergraph::from_labels(3, {"u", "v", "w", "x", "y", "z"},
                                             {{"u", "x", "y"}, {"v", "y", "z"}, {"u", "v", "w"}, {"w", "x", "z"}});
}

inline hyperframe::Hypergraph triangle() { return hyperframe::Hypergraph::from_labels(3, {"u", "v", "w"}, {{"u", "v", "w"}}); }

}  // namespace testing_support
