#include "hyperframe/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "hyperframe/error.hpp"

namespace hyperframe {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace

Partition Partition::from_keys(std::span<const std::size_t> keys) {
  Partition p;
  p.class_of_.resize(keys.size());
  std::unordered_map<std::size_t, std::size_t> ids;
  ids.reserve(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    auto [it, inserted] = ids.emplace(keys[v], p.classes_.size());
    if (inserted) p.classes_.emplace_back();
    p.class_of_[v] = it->second;
    p.classes_[it->second].push_back(static_cast<VertexId>(v));
  }
  return p;
}

Partition Partition::from_classes(std::size_t vertex_count, const std::vector<std::vector<VertexId>>& classes) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> keys(vertex_count, kUnset);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw std::invalid_argument("partition class is empty");
    for (VertexId v : classes[c]) {
      if (v >= vertex_count) throw std::invalid_argument("partition class names an unknown vertex");
      if (keys[v] != kUnset) throw std::invalid_argument("partition classes overlap");
      keys[v] = c;
    }
  }
  if (std::find(keys.begin(), keys.end(), kUnset) != keys.end()) {
    throw std::invalid_argument("partition does not cover every vertex");
  }
  return from_keys(keys);
}

Partition Partition::discrete(std::size_t vertex_count) {
  std::vector<std::size_t> keys(vertex_count);
  std::iota(keys.begin(), keys.end(), 0);
  return from_keys(keys);
}

Partition Partition::single(std::size_t vertex_count) {
  std::vector<std::size_t> keys(vertex_count, 0);
  return from_keys(keys);
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.vertex_count() != vertex_count()) throw std::invalid_argument("partitions on different vertex sets");
  for (const auto& cls : classes_) {
    const std::size_t target = coarser.class_of(cls.front());
    for (VertexId v : cls) {
      if (coarser.class_of(v) != target) return false;
    }
  }
  return true;
}

Partition Partition::meet(const Partition& other) const {
  if (other.vertex_count() != vertex_count()) throw std::invalid_argument("partitions on different vertex sets");
  std::vector<std::size_t> keys(vertex_count());
  for (std::size_t v = 0; v < keys.size(); ++v) keys[v] = class_of_[v] * other.class_count() + other.class_of_[v];
  return from_keys(keys);
}

Partition components(const Hypergraph& h) {
  DisjointSets sets(h.vertex_count());
  for (const auto& e : h.edges()) {
    for (std::size_t a = 1; a < e.size(); ++a) sets.unite(e[0], e[a]);
  }
  std::vector<std::size_t> keys(h.vertex_count());
  for (std::size_t v = 0; v < keys.size(); ++v) keys[v] = sets.find(v);
  return Partition::from_keys(keys);
}

bool is_connected(const Hypergraph& h) { return h.vertex_count() >= 1 && components(h).class_count() == 1; }

Quotient quotient(const Hypergraph& h, const Partition& p) {
  if (p.vertex_count() != h.vertex_count()) {
    throw DomainError("partition covers " + std::to_string(p.vertex_count()) + " vertices but the hypergraph has " +
                      std::to_string(h.vertex_count()));
  }
  std::vector<std::string> labels;
  labels.reserve(p.class_count());
  for (const auto& cls : p.classes()) labels.push_back(h.label(cls.front()));
  std::vector<std::vector<VertexId>> images;
  images.reserve(h.edge_count());
  for (const auto& e : h.edges()) {
    std::vector<VertexId> image;
    image.reserve(e.size());
    for (VertexId v : e) image.push_back(static_cast<VertexId>(p.class_of(v)));
    images.push_back(std::move(image));
  }
  return {Hypergraph(h.ell(), std::move(labels), images), p};
}

}  // namespace hyperframe
