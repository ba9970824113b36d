#include "hyperframe/frame.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hyperframe/error.hpp"

namespace hyperframe {

namespace {

void require_connected(const Hypergraph& h, const char* what) {
  if (!is_connected(h)) {
    throw DomainError(std::string(what) + " requires a connected hypergraph; this one has " +
                      std::to_string(components(h).class_count()) + " components");
  }
}

// Splits each class of `keys` by `values`; returns dense new keys.
std::vector<std::size_t> refine(const std::vector<std::size_t>& keys, std::span<const Rational> values) {
  std::map<std::pair<std::size_t, Rational>, std::size_t> ids;
  std::vector<std::size_t> out(keys.size());
  for (std::size_t x = 0; x < keys.size(); ++x) {
    auto [it, inserted] = ids.try_emplace({keys[x], values[x]}, ids.size());
    out[x] = it->second;
  }
  return out;
}

FrameResult assemble(const Hypergraph& h, Partition fusion_partition) {
  Quotient q = quotient(h, fusion_partition);
  std::vector<std::string> class_map(h.vertex_count());
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    class_map[v] = q.graph.label(static_cast<VertexId>(q.partition.class_of(static_cast<VertexId>(v))));
  }
  return {std::move(q.graph), std::move(q.partition), std::move(class_map)};
}

}  // namespace

Partition level_sets(std::span<const Rational> values) {
  const std::vector<std::size_t> keys = refine(std::vector<std::size_t>(values.size(), 0), values);
  return Partition::from_keys(keys);
}

Partition fusion(const SignalSpace& space) {
  std::vector<std::size_t> keys(space.vertex_count, 0);
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    const Signal s = space.signal(i);
    for (std::size_t a = 0; a < space.ell; ++a) keys = refine(keys, s.axis(a));
  }
  return Partition::from_keys(keys);
}

Partition fusion(const Hypergraph& h, const LinearMap& t) {
  require_connected(h, "fusion");
  return fusion(signal_space(h, t));
}

FrameResult frame(const Hypergraph& h) {
  require_connected(h, "frame");
  const Signal delta = generating_signal(h);
  return assemble(h, level_sets(delta.axis(0)));
}

FrameResult frame_general(const Hypergraph& h, const LinearMap& t) { return assemble(h, fusion(h, t)); }

Hypergraph induced_subgraph(const Hypergraph& h, std::span<const VertexId> vertices) {
  std::vector<VertexId> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  constexpr auto kAbsent = static_cast<VertexId>(-1);
  std::vector<VertexId> local(h.vertex_count(), kAbsent);
  std::vector<std::string> labels;
  for (VertexId v : sorted) {
    if (local.at(v) != kAbsent) throw std::invalid_argument("repeated vertex in subgraph selection");
    local[v] = static_cast<VertexId>(labels.size());
    labels.push_back(h.label(v));
  }
  std::vector<std::vector<VertexId>> tuples;
  for (const auto& e : h.edges()) {
    if (std::all_of(e.begin(), e.end(), [&](VertexId v) { return local[v] != kAbsent; })) {
      std::vector<VertexId> t;
      for (VertexId v : e) t.push_back(local[v]);
      tuples.push_back(std::move(t));
    }
  }
  return Hypergraph(h.ell(), std::move(labels), tuples);
}

FrameResult frame_per_component(const Hypergraph& h) {
  const Partition comps = components(h);
  std::vector<std::size_t> keys(h.vertex_count());
  std::size_t offset = 0;
  for (const auto& cls : comps.classes()) {
    const Hypergraph sub = induced_subgraph(h, cls);
    const FrameResult local = frame(sub);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      keys[cls[i]] = offset + local.fusion.class_of(static_cast<VertexId>(i));
    }
    offset += local.fusion.class_count();
  }
  return assemble(h, Partition::from_keys(keys));
}

bool is_stable(const Hypergraph& h) { return frame(h).fusion.is_discrete(); }

std::set<std::pair<VertexId, VertexId>> fold_pairs(const Hypergraph& h) {
  // Group (edge minus one occurrence of v) -> vertices v that were removed.
  std::map<Edge, std::vector<VertexId>> joins;
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i > 0 && e[i] == e[i - 1]) continue;
      Edge rest;
      rest.reserve(e.size() - 1);
      rest.insert(rest.end(), e.begin(), e.begin() + static_cast<std::ptrdiff_t>(i));
      rest.insert(rest.end(), e.begin() + static_cast<std::ptrdiff_t>(i) + 1, e.end());
      joins[std::move(rest)].push_back(e[i]);
    }
  }
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const auto& [rest, removed] : joins) {
    for (std::size_t i = 0; i < removed.size(); ++i) {
      for (std::size_t j = i + 1; j < removed.size(); ++j) {
        if (removed[i] != removed[j]) pairs.emplace(std::min(removed[i], removed[j]), std::max(removed[i], removed[j]));
      }
    }
  }
  return pairs;
}

}  // namespace hyperframe
