#include "hyperframe/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "hyperframe/error.hpp"

namespace hyperframe {

namespace {

// Iterated refinement on the incidence structure. Colors are ranks of sorted
// signatures, so they do not depend on the input's vertex order.
std::vector<std::size_t> refine_colors(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t k = 0; k < h.edges().size(); ++k) {
    const Edge& e = h.edges()[k];
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i == 0 || e[i] != e[i - 1]) incident[e[i]].push_back(k);
    }
  }
  std::vector<std::size_t> color(n, 0);
  std::size_t distinct = 1;
  for (;;) {
    using EdgeView = std::pair<std::size_t, std::vector<std::size_t>>;  // (multiplicity of v, member colors)
    std::vector<std::pair<std::size_t, std::vector<EdgeView>>> signature(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<EdgeView> views;
      for (std::size_t k : incident[v]) {
        const Edge& e = h.edges()[k];
        std::vector<std::size_t> members;
        for (VertexId x : e) members.push_back(color[x]);
        std::sort(members.begin(), members.end());
        views.emplace_back(static_cast<std::size_t>(std::count(e.begin(), e.end(), static_cast<VertexId>(v))),
                           std::move(members));
      }
      std::sort(views.begin(), views.end());
      signature[v] = {color[v], std::move(views)};
    }
    auto ranked = signature;
    std::sort(ranked.begin(), ranked.end());
    ranked.erase(std::unique(ranked.begin(), ranked.end()), ranked.end());
    for (std::size_t v = 0; v < n; ++v) {
      color[v] = static_cast<std::size_t>(std::lower_bound(ranked.begin(), ranked.end(), signature[v]) - ranked.begin());
    }
    if (ranked.size() == distinct) break;
    distinct = ranked.size();
  }
  return color;
}

}  // namespace

CanonicalForm canonical_form(const Hypergraph& h, std::size_t max_orderings) {
  const std::size_t n = h.vertex_count();
  const std::vector<std::size_t> color = refine_colors(h);
  std::map<std::size_t, std::vector<VertexId>> by_color;
  for (std::size_t v = 0; v < n; ++v) by_color[color[v]].push_back(static_cast<VertexId>(v));
  std::vector<std::vector<VertexId>> cells;
  std::size_t orderings = 1;
  for (auto& [c, members] : by_color) {
    for (std::size_t k = 2; k <= members.size(); ++k) {
      if (orderings > max_orderings / k) {
        throw DomainError("canonical form search too large for a hypergraph on " + std::to_string(n) + " vertices");
      }
      orderings *= k;
    }
    cells.push_back(std::move(members));
  }

  CanonicalForm best{h.ell(), n, {}};
  bool have_best = false;
  std::vector<VertexId> relabel(n);
  for (;;) {
    VertexId next = 0;
    for (const auto& cell : cells) {
      for (VertexId v : cell) relabel[v] = next++;
    }
    std::vector<Edge> edges;
    edges.reserve(h.edge_count());
    for (const Edge& e : h.edges()) {
      Edge mapped;
      for (VertexId v : e) mapped.push_back(relabel[v]);
      std::sort(mapped.begin(), mapped.end());
      edges.push_back(std::move(mapped));
    }
    std::sort(edges.begin(), edges.end());
    if (!have_best || edges < best.edges) {
      best.edges = std::move(edges);
      have_best = true;
    }
    // Odometer over the per-cell permutations.
    std::size_t c = cells.size();
    while (c > 0 && !std::next_permutation(cells[c - 1].begin(), cells[c - 1].end())) --c;
    if (c == 0) break;
  }
  return best;
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.ell() != b.ell() || a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace hyperframe
