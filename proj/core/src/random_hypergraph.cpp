#include "hyperframe/random_hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "hyperframe/error.hpp"
#include "hyperframe/partition.hpp"

namespace hyperframe {

namespace {

// Unbiased draw from [0, k); std::uniform_int_distribution is not portable
// across standard libraries, which would break seed reproducibility.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % k;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % k;
  }
}

// Fisher-Yates with the portable draw above.
template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[bounded(rng, i)]);
}

// Floyd's subset sampling.
Edge random_subset(std::mt19937_64& rng, std::size_t n, std::size_t ell) {
  std::set<VertexId> chosen;
  for (std::size_t j = n - ell; j < n; ++j) {
    const auto t = static_cast<VertexId>(bounded(rng, j + 1));
    if (!chosen.insert(t).second) chosen.insert(static_cast<VertexId>(j));
  }
  return Edge(chosen.begin(), chosen.end());
}

// n choose k, saturating at `cap`.
std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  unsigned __int128 value = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > cap) return cap;
  }
  return static_cast<std::size_t>(value);
}

std::vector<std::string> vertex_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  return labels;
}

std::size_t component_count(std::size_t n, std::size_t ell, const std::set<Edge>& edges) {
  const std::vector<std::vector<VertexId>> tuples(edges.begin(), edges.end());
  return components(Hypergraph(ell, vertex_labels(n), tuples)).class_count();
}

// Swaps edges for edges that join distinct components until the instance
// is connected. Returns the number of swaps.
//
// The removed edge is one whose loss splits off the fewest new components
// (k). When m is at least the connectivity minimum some edge has
// k <= ell - 2, and the replacement merges min(components, ell) classes, so
// every swap strictly lowers the component count.
std::size_t bridge_components(std::mt19937_64& rng, std::size_t n, std::size_t ell, std::set<Edge>& edges) {
  std::size_t swaps = 0;
  for (;;) {
    const std::size_t count = component_count(n, ell, edges);
    if (count == 1) return swaps;

    std::vector<Edge> order(edges.begin(), edges.end());
    shuffle(order, rng);
    std::optional<Edge> victim;
    std::size_t best = ell;
    for (const Edge& e : order) {
      edges.erase(e);
      const std::size_t split = component_count(n, ell, edges) - count;
      edges.insert(e);
      if (split < best) {
        best = split;
        victim = e;
        if (split == 0) break;
      }
    }
    if (!victim || best + 2 > ell) throw DomainError("cannot connect the sample without changing the edge count");
    edges.erase(*victim);

    const std::vector<std::vector<VertexId>> tuples(edges.begin(), edges.end());
    const Partition comps = components(Hypergraph(ell, vertex_labels(n), tuples));
    const std::size_t pieces = comps.class_count();
    std::vector<std::size_t> class_order(pieces);
    for (std::size_t i = 0; i < pieces; ++i) class_order[i] = i;
    bool added = false;
    for (int tries = 0; tries < 1000 && !added; ++tries) {
      shuffle(class_order, rng);
      std::set<VertexId> bridge;
      for (std::size_t i = 0; i < std::min(pieces, ell); ++i) {
        const auto& members = comps.classes()[class_order[i]];
        bridge.insert(members[bounded(rng, members.size())]);
      }
      while (bridge.size() < ell) bridge.insert(static_cast<VertexId>(bounded(rng, n)));
      const Edge candidate(bridge.begin(), bridge.end());
      added = candidate != *victim && edges.insert(candidate).second;
    }
    if (!added) throw DomainError("cannot find a fresh bridge edge");
    ++swaps;
  }
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value) {
  std::uint64_t z = seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RandomInstance random_instance(std::size_t n, std::size_t m, std::size_t ell, std::uint64_t seed,
                               const RandomOptions& options) {
  if (ell < 3) throw DomainError("arity must be at least 3");
  if (n < ell) throw DomainError("need at least " + std::to_string(ell) + " vertices, got " + std::to_string(n));
  if (m < 1) throw DomainError("need at least one edge");
  if (binomial_capped(n, ell, m) < m) {
    throw DomainError(std::to_string(m) + " distinct edges do not fit on " + std::to_string(n) + " vertices");
  }
  const std::size_t needed = (n - 1 + ell - 2) / (ell - 1);
  if (m < needed) {
    throw DomainError("a connected instance on " + std::to_string(n) + " vertices needs at least " +
                      std::to_string(needed) + " edges");
  }

  std::mt19937_64 rng(seed);
  std::set<Edge> edges;
  std::size_t attempts = 0;
  const std::size_t budget = std::max<std::size_t>(options.rejection_budget, 1);
  while (attempts < budget) {
    ++attempts;
    edges.clear();
    while (edges.size() < m) edges.insert(random_subset(rng, n, ell));
    if (component_count(n, ell, edges) == 1) break;
  }
  const std::size_t bridges = bridge_components(rng, n, ell, edges);
  const std::vector<std::vector<VertexId>> tuples(edges.begin(), edges.end());
  return {Hypergraph(ell, vertex_labels(n), tuples), attempts, bridges};
}

}  // namespace hyperframe
