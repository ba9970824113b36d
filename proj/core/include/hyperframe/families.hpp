#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperframe/hypergraph.hpp"

namespace hyperframe {

/// Apex "u", rim "v0".."vn", edges (u, v{i-1}, v{i}) for i = 1..n.
Hypergraph fan(std::size_t n);

/// Bases "b0".."bn", peaks "p1".."pn", edges (b{i-1}, p{i}, b{i}).
Hypergraph mountain_range(std::size_t n);

/// Adds vertices `new_labels` (exactly ell - 1 of them, fresh and distinct)
/// and the single edge (z, new_labels...).
Hypergraph attach_simplex(const Hypergraph& h, const std::string& z, const std::vector<std::string>& new_labels);

}  // namespace hyperframe
