#include "hyperframe/families.hpp"

#include <set>
#include <stdexcept>

#include "hyperframe/error.hpp"

namespace hyperframe {

Hypergraph fan(std::size_t n) {
  if (n < 1) throw DomainError("fan needs at least one segment");
  std::vector<std::string> labels{"u"};
  for (std::size_t i = 0; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    edges.push_back({0, static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  }
  return Hypergraph(3, std::move(labels), edges);
}

Hypergraph mountain_range(std::size_t n) {
  if (n < 1) throw DomainError("mountain range needs at least one peak");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i <= n; ++i) labels.push_back("b" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("p" + std::to_string(i));
  std::vector<std::vector<VertexId>> edges;
  for (std::size_t i = 1; i <= n; ++i) {
    edges.push_back({static_cast<VertexId>(i - 1), static_cast<VertexId>(n + i), static_cast<VertexId>(i)});
  }
  return Hypergraph(3, std::move(labels), edges);
}

Hypergraph attach_simplex(const Hypergraph& h, const std::string& z, const std::vector<std::string>& new_labels) {
  const auto anchor = h.find(z);
  if (!anchor) throw DomainError("attach point '" + z + "' is not a vertex");
  if (new_labels.size() + 1 != h.ell()) {
    throw DomainError("attaching to a " + std::to_string(h.ell()) + "-uniform hypergraph needs " +
                      std::to_string(h.ell() - 1) + " new labels");
  }
  std::set<std::string> seen;
  for (const auto& label : new_labels) {
    if (h.find(label) || !seen.insert(label).second) throw DomainError("label '" + label + "' is already taken");
  }
  std::vector<std::string> labels = h.labels();
  std::vector<std::vector<VertexId>> edges(h.edges().begin(), h.edges().end());
  std::vector<VertexId> added{*anchor};
  for (const auto& label : new_labels) {
    added.push_back(static_cast<VertexId>(labels.size()));
    labels.push_back(label);
  }
  edges.push_back(std::move(added));
  return Hypergraph(h.ell(), std::move(labels), edges);
}

}  // namespace hyperframe
