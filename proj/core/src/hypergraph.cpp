#include "hyperframe/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperframe {

Edge canonicalize_edge(std::span<const VertexId> tuple, std::size_t ell, std::size_t vertex_count) {
  if (tuple.size() != ell) {
    throw std::invalid_argument("edge has " + std::to_string(tuple.size()) + " entries, expected " +
                                std::to_string(ell));
  }
  for (VertexId v : tuple) {
    if (v >= vertex_count) throw std::invalid_argument("edge refers to unknown vertex id " + std::to_string(v));
  }
  Edge out(tuple.begin(), tuple.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> arrangements(const Edge& edge) {
  Edge current = edge;
  std::sort(current.begin(), current.end());
  std::vector<Edge> out;
  do {
    out.push_back(current);
  } while (std::next_permutation(current.begin(), current.end()));
  return out;
}

Hypergraph::Hypergraph(std::size_t ell, std::vector<std::string> labels, std::span<const std::vector<VertexId>> tuples)
    : ell_(ell), labels_(std::move(labels)) {
  if (ell_ < 3) throw std::invalid_argument("hypergraph arity must be at least 3");
  if (labels_.empty()) throw std::invalid_argument("hypergraph needs at least one vertex");
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<VertexId>(i)).second) {
      throw std::invalid_argument("duplicate vertex label '" + labels_[i] + "'");
    }
  }
  edges_.reserve(tuples.size());
  for (const auto& t : tuples) edges_.push_back(canonicalize_edge(t, ell_, labels_.size()));
  std::sort(edges_.begin(), edges_.end());
  const auto last = std::unique(edges_.begin(), edges_.end());
  collapsed_ = static_cast<std::size_t>(edges_.end() - last);
  edges_.erase(last, edges_.end());
}

Hypergraph::Hypergraph(std::size_t ell, std::vector<std::string> labels,
                       std::initializer_list<std::vector<VertexId>> tuples)
    : Hypergraph(ell, std::move(labels), std::span<const std::vector<VertexId>>(tuples.begin(), tuples.size())) {}

Hypergraph Hypergraph::from_labels(std::size_t ell, std::vector<std::string> labels,
                                   const std::vector<std::vector<std::string>>& edges) {
  std::unordered_map<std::string, VertexId> ids;
  for (std::size_t i = 0; i < labels.size(); ++i) ids.emplace(labels[i], static_cast<VertexId>(i));
  std::vector<std::vector<VertexId>> tuples;
  tuples.reserve(edges.size());
  for (const auto& e : edges) {
    std::vector<VertexId> t;
    for (const auto& name : e) {
      auto it = ids.find(name);
      if (it == ids.end()) throw std::invalid_argument("edge refers to unknown vertex '" + name + "'");
      t.push_back(it->second);
    }
    tuples.push_back(std::move(t));
  }
  return Hypergraph(ell, std::move(labels), tuples);
}

std::optional<VertexId> Hypergraph::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Hypergraph::id_of(const std::string& label) const {
  auto id = find(label);
  if (!id) throw std::invalid_argument("unknown vertex '" + label + "'");
  return *id;
}

bool Hypergraph::has_edge(const Edge& canonical) const {
  return std::binary_search(edges_.begin(), edges_.end(), canonical);
}

}  // namespace hyperframe
