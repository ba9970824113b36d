#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hyperframe/frame.hpp"
#include "hyperframe/hypergraph.hpp"
#include "hyperframe/linear_map.hpp"
#include "hyperframe/signal.hpp"

namespace hyperframe {

// All parsers throw FormatError on malformed input; file helpers throw
// IoError when a path cannot be read or written.

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

/// {"ell": int, "vertices": [labels], "edges": [[labels]...]}. Edges are
/// canonicalized; each collapsed duplicate orbit adds a message to
/// `warnings` when given.
Hypergraph parse_hypergraph(std::string_view json_text, std::vector<std::string>* warnings = nullptr);

/// Stable text: canonical edge order, one edge per line, trailing newline.
std::string format_hypergraph(const Hypergraph& h);

inline Hypergraph load_hypergraph(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr) {
  return parse_hypergraph(read_file(path), warnings);
}
inline void save_hypergraph(const std::filesystem::path& path, const Hypergraph& h) {
  write_file(path, format_hypergraph(h));
}

/// Array of rows, each an array of rationals written as "p/q" strings or
/// JSON integers.
LinearMap parse_linear_map(std::string_view json_text);
std::string format_linear_map(const LinearMap& t);

/// {"vertices": [labels], "ell": int, "values": [[ "p/q" ...] x ell]}.
std::string format_signal(const Hypergraph& h, const Signal& s);
/// JSON array of signal objects.
std::string format_signals(const Hypergraph& h, const std::vector<Signal>& signals);

/// Accepts one signal object or an array of them. Vertex lists may be in
/// any order but must name exactly the hypergraph's vertices; values are
/// reindexed to the hypergraph's ids.
std::vector<Signal> parse_signals(std::string_view json_text, const Hypergraph& h);

/// {"frame": hypergraph, "classes": [[labels]...], "class_map": {label: label}}.
std::string format_frame_result(const Hypergraph& input, const FrameResult& result);

/// Classes as arrays of original labels, in canonical class order.
std::string format_classes(const Hypergraph& input, const Partition& p);

/// Undirected bipartite incidence graph: an ellipse per vertex, a box per
/// edge, arcs labeled with multiplicity when a vertex repeats in an edge.
std::string to_dot(const Hypergraph& h);

}  // namespace hyperframe
