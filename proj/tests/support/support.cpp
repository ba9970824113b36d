#include "support.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "hyperframe/isomorphism.hpp"

namespace testing_support {

std::vector<std::string> numbered_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return labels;
}

Hypergraph Gen::hypergraph(std::size_t n, std::size_t m, std::size_t ell, bool repeats) {
  std::vector<std::vector<VertexId>> tuples;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<VertexId> t;
    if (repeats || n < ell) {
      for (std::size_t a = 0; a < ell; ++a) t.push_back(static_cast<VertexId>(index(n)));
    } else {
      std::vector<VertexId> pool(n);
      for (std::size_t v = 0; v < n; ++v) pool[v] = static_cast<VertexId>(v);
      std::shuffle(pool.begin(), pool.end(), rng_);
      t.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(ell));
    }
    tuples.push_back(std::move(t));
  }
  return Hypergraph(ell, numbered_labels(n), tuples);
}

Hypergraph Gen::connected(std::size_t n, std::size_t extra, std::size_t ell, bool repeats) {
  std::vector<VertexId> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = static_cast<VertexId>(v);
  std::shuffle(order.begin(), order.end(), rng_);
  std::vector<std::vector<VertexId>> tuples;
  const bool allow_repeats = repeats || n < ell;
  // Each chain edge takes one reached vertex and up to ell-1 new ones.
  std::size_t reached = 1;
  while (reached < n) {
    std::vector<VertexId> t{order[index(reached)]};
    while (t.size() < ell && reached < n) t.push_back(order[reached++]);
    while (t.size() < ell) {
      const VertexId candidate = order[index(reached)];
      if (allow_repeats || std::find(t.begin(), t.end(), candidate) == t.end()) t.push_back(candidate);
    }
    tuples.push_back(std::move(t));
  }
  for (std::size_t k = 0; k < extra; ++k) {
    std::vector<VertexId> t;
    if (repeats || n < ell) {
      for (std::size_t a = 0; a < ell; ++a) t.push_back(static_cast<VertexId>(index(n)));
    } else {
      std::vector<VertexId> pool(order);
      std::shuffle(pool.begin(), pool.end(), rng_);
      t.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(ell));
    }
    tuples.push_back(std::move(t));
  }
  return Hypergraph(ell, numbered_labels(n), tuples);
}

Hypergraph Gen::components(std::size_t pieces, std::size_t max_piece, std::size_t ell, bool repeats) {
  std::vector<std::vector<VertexId>> tuples;
  std::size_t offset = 0;
  for (std::size_t p = 0; p < pieces; ++p) {
    const auto n = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_piece)));
    const Hypergraph part = connected(n, index(3), ell, repeats);
    for (const auto& e : part.edges()) {
      std::vector<VertexId> t;
      for (VertexId v : e) t.push_back(static_cast<VertexId>(v + offset));
      tuples.push_back(std::move(t));
    }
    if (n == 1 && part.edge_count() == 0) tuples.emplace_back(ell, static_cast<VertexId>(offset));
    offset += n;
  }
  return Hypergraph(ell, numbered_labels(offset), tuples);
}

LinearMap Gen::engaged_map(std::size_t r, std::size_t ell, std::int64_t bound) {
  std::vector<hyperframe::Vector> rows(r, hyperframe::Vector(ell));
  for (std::size_t a = 0; a < ell; ++a) {
    bool nonzero = false;
    while (!nonzero) {
      for (std::size_t i = 0; i < r; ++i) {
        rows[i][a] = Rational(integer(-bound, bound));
        nonzero = nonzero || !rows[i][a].is_zero();
      }
    }
  }
  return LinearMap(std::move(rows));
}

hyperframe::SparseMatrix Gen::matrix(std::size_t rows, std::size_t cols, double density, std::int64_t bound) {
  std::vector<hyperframe::Vector> dense(rows, hyperframe::Vector(cols));
  for (auto& row : dense) {
    for (auto& v : row) {
      if (coin(density)) v = rational(bound);
    }
  }
  if (rows == 0) return hyperframe::SparseMatrix(0, cols);
  return hyperframe::SparseMatrix::from_dense(dense);
}

oracle::Instance to_instance(const Hypergraph& h) {
  oracle::Instance out{h.ell(), h.vertex_count(), {}};
  for (const auto& e : h.edges()) out.edges.emplace_back(e.begin(), e.end());
  return out;
}

oracle::Row to_row(const std::vector<Rational>& v) {
  oracle::Row out;
  for (const auto& x : v) out.push_back(x.to_mpq());
  return out;
}

oracle::Matrix to_matrix(const LinearMap& t) {
  oracle::Matrix out;
  for (const auto& row : t.rows()) out.push_back(to_row(row));
  return out;
}

oracle::Matrix to_matrix(const hyperframe::SparseMatrix& m) {
  oracle::Matrix out(m.rows(), oracle::Row(m.cols(), mpq_class(0)));
  for (const auto& t : m.triplets()) out[t.row][t.col] = t.value.to_mpq();
  return out;
}

std::vector<oracle::Row> to_rows(const hyperframe::Signal& s) {
  std::vector<oracle::Row> out;
  for (std::size_t a = 0; a < s.ell(); ++a) {
    const auto axis = s.axis(a);
    out.push_back(to_row(std::vector<Rational>(axis.begin(), axis.end())));
  }
  return out;
}

std::vector<Hypergraph> small_connected_instances(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<Hypergraph> out;
  std::set<hyperframe::CanonicalForm, decltype([](const auto& a, const auto& b) {
             return std::tie(a.vertex_count, a.edges) < std::tie(b.vertex_count, b.edges);
           })>
      seen;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    std::vector<std::vector<VertexId>> multisets;
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a; b < n; ++b) {
        for (VertexId c = b; c < n; ++c) multisets.push_back({a, b, c});
      }
    }
    const std::size_t pool = multisets.size();
    for (std::size_t k = 0; k <= max_edges && k <= pool; ++k) {
      // Lexicographic k-combinations of the multiset pool.
      std::vector<std::size_t> pick(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = i;
      for (;;) {
        std::vector<std::vector<VertexId>> tuples;
        for (std::size_t i : pick) tuples.push_back(multisets[i]);
        Hypergraph h(3, numbered_labels(n), tuples);
        if (hyperframe::is_connected(h) && seen.insert(hyperframe::canonical_form(h)).second) out.push_back(std::move(h));
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == pool - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return out;
}

}  // namespace testing_support
