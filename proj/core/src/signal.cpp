#include "hyperframe/signal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "hyperframe/error.hpp"
#include "hyperframe/partition.hpp"

namespace hyperframe {

namespace {

void require_matching_arity(const Hypergraph& h, const LinearMap& t) {
  if (t.ell() != h.ell()) {
    throw DomainError("map takes " + std::to_string(t.ell()) + " inputs but the hypergraph is " +
                      std::to_string(h.ell()) + "-uniform");
  }
}

void require_shape(const Hypergraph& h, const Signal& s) {
  if (s.ell() != h.ell() || s.vertex_count() != h.vertex_count()) {
    throw std::invalid_argument("signal shape " + std::to_string(s.ell()) + "x" + std::to_string(s.vertex_count()) +
                                " does not match hypergraph " + std::to_string(h.ell()) + "x" +
                                std::to_string(h.vertex_count()));
  }
}

}  // namespace

Signal::Signal(std::size_t ell, std::size_t vertex_count)
    : ell_(ell), vertex_count_(vertex_count), values_(ell * vertex_count) {}

Signal Signal::from_coordinates(std::size_t ell, std::size_t vertex_count, std::span<const Rational> coordinates) {
  if (coordinates.size() != ell * vertex_count) throw std::invalid_argument("signal coordinate count mismatch");
  Signal s(ell, vertex_count);
  std::copy(coordinates.begin(), coordinates.end(), s.values_.begin());
  return s;
}

std::size_t Signal::index(std::size_t axis, VertexId x) const {
  if (axis >= ell_ || x >= vertex_count_) throw std::out_of_range("signal index");
  return coordinate_index(axis, x, vertex_count_);
}

std::span<const Rational> Signal::axis(std::size_t a) const {
  if (a >= ell_) throw std::out_of_range("signal axis");
  return std::span<const Rational>(values_).subspan(a * vertex_count_, vertex_count_);
}

bool Signal::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v.is_zero(); });
}

Signal& Signal::operator+=(const Signal& other) {
  if (other.ell_ != ell_ || other.vertex_count_ != vertex_count_) throw std::invalid_argument("signal shape mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!other.values_[i].is_zero()) values_[i] += other.values_[i];
  }
  return *this;
}

Signal& Signal::operator*=(const Rational& k) {
  for (auto& v : values_) {
    if (!v.is_zero()) v *= k;
  }
  return *this;
}

Signal SignalSpace::signal(std::size_t i) const {
  return Signal::from_coordinates(ell, vertex_count, basis.vectors.at(i));
}

std::vector<Signal> SignalSpace::signals() const {
  std::vector<Signal> out;
  out.reserve(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) out.push_back(signal(i));
  return out;
}

SparseMatrix assemble_constraints(const Hypergraph& h, const LinearMap& t) {
  require_matching_arity(h, t);
  const std::size_t n = h.vertex_count();
  const std::size_t ell = h.ell();
  std::vector<SparseRow> rows;
  for (const auto& e : h.edges()) {
    for (const auto& arr : arrangements(e)) {
      for (std::size_t i = 0; i < t.r(); ++i) {
        SparseRow row;
        row.reserve(ell);
        for (std::size_t a = 0; a < ell; ++a) {
          if (!t.at(i, a).is_zero()) row.push_back({coordinate_index(a, arr[a], n), t.at(i, a)});
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  return dedupe_rows(SparseMatrix::from_rows(ell * n, std::move(rows)));
}

SignalSpace signal_space(const Hypergraph& h, const LinearMap& t) {
  SignalSpace space{t, h.ell(), h.vertex_count(), nullspace(assemble_constraints(h, t))};
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    if (auto bad = find_violation(h, t, space.signal(i))) {
      throw std::logic_error("kernel vector " + std::to_string(i) + " fails the signal condition on edge " +
                             std::to_string(bad->edge_index));
    }
  }
  return space;
}

SignalSpace constant_space(const LinearMap& t, std::size_t vertex_count) {
  const Basis kernel = nullspace(t.as_sparse());
  const std::size_t ell = t.ell();
  std::vector<Vector> vectors;
  for (const auto& lambda : kernel.vectors) {
    Vector v(ell * vertex_count);
    for (std::size_t a = 0; a < ell; ++a) {
      for (std::size_t x = 0; x < vertex_count; ++x) v[coordinate_index(a, static_cast<VertexId>(x), vertex_count)] = lambda[a];
    }
    vectors.push_back(std::move(v));
  }
  return {t, ell, vertex_count, canonical_basis(ell * vertex_count, std::move(vectors))};
}

std::optional<Violation> find_violation(const Hypergraph& h, const LinearMap& t, const Signal& s) {
  require_matching_arity(h, t);
  require_shape(h, s);
  for (std::size_t k = 0; k < h.edges().size(); ++k) {
    for (auto& arr : arrangements(h.edges()[k])) {
      for (std::size_t i = 0; i < t.r(); ++i) {
        Rational residual;
        for (std::size_t a = 0; a < h.ell(); ++a) {
          const Rational& coeff = t.at(i, a);
          const Rational& value = s(a, arr[a]);
          if (!coeff.is_zero() && !value.is_zero()) residual += coeff * value;
        }
        if (!residual.is_zero()) return Violation{k, std::move(arr), i, std::move(residual)};
      }
    }
  }
  return std::nullopt;
}

std::size_t component_count_via_centroid(const Hypergraph& h) {
  return signal_space(h, LinearMap::centroid(h.ell())).dimension();
}

Vector universal_weights(const LinearMap& t) {
  if (auto axis = first_disengaged_axis(t)) {
    throw DomainError("map is not engaged: axis " + std::to_string(*axis + 1) + " maps to zero");
  }
  const std::size_t r = t.r();
  std::vector<Vector> images;
  for (std::size_t a = 0; a < t.ell(); ++a) images.push_back(t.column(a));

  // Per-coordinate value order 0, 1, -1, 2, -2, ...; heights grow until some
  // w in the grid avoids every hyperplane w·T(e_a) = 0.
  auto value_at = [](std::size_t slot) -> std::int64_t {
    if (slot == 0) return 0;
    const auto mag = static_cast<std::int64_t>((slot + 1) / 2);
    return slot % 2 == 1 ? mag : -mag;
  };
  for (std::int64_t height = 1;; ++height) {
    const auto slots = static_cast<std::size_t>(2 * height + 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= slots;
    for (std::size_t code = 0; code < total; ++code) {
      Vector w(r);
      bool on_shell = false;
      std::size_t rest = code;
      for (std::size_t i = r; i-- > 0;) {
        const std::int64_t v = value_at(rest % slots);
        rest /= slots;
        w[i] = Rational(v);
        on_shell = on_shell || v == height || v == -height;
      }
      if (!on_shell) continue;
      const bool avoids_all = std::all_of(images.begin(), images.end(), [&](const Vector& image) {
        Rational dot;
        for (std::size_t i = 0; i < r; ++i) dot += w[i] * image[i];
        return !dot.is_zero();
      });
      if (avoids_all) return w;
    }
  }
}

Signal embed_to_universal(const Hypergraph& h, const LinearMap& t, const Signal& s) {
  require_matching_arity(h, t);
  require_shape(h, s);
  const Vector w = universal_weights(t);
  if (auto bad = find_violation(h, t, s)) {
    throw DomainError("input is not a signal of the given map (edge " + std::to_string(bad->edge_index) + ")");
  }
  Signal out = s;
  for (std::size_t a = 0; a < t.ell(); ++a) {
    Rational dot;
    for (std::size_t i = 0; i < t.r(); ++i) dot += w[i] * t.at(i, a);
    // Scaling by w·T(e_a) itself, not its inverse: summing w_i times row i
    // of the T-conditions gives sum_a (w·T(e_a)) s_a(x_a) = 0, a U-condition.
    for (std::size_t x = 0; x < h.vertex_count(); ++x) out(a, static_cast<VertexId>(x)) *= dot;
  }
  return out;
}

Signal generating_signal(const Hypergraph& h) {
  if (!is_connected(h)) throw DomainError("generating signal requires a connected hypergraph");
  return generating_signal(h, signal_space(h, LinearMap::universal(h.ell())));
}

Signal generating_signal(const Hypergraph& h, const SignalSpace& universal_space) {
  if (!is_connected(h)) throw DomainError("generating signal requires a connected hypergraph");
  if (universal_space.map != LinearMap::universal(h.ell()) || universal_space.vertex_count != h.vertex_count()) {
    throw std::invalid_argument("signal space does not belong to this hypergraph and the universal map");
  }
  const std::size_t n = h.vertex_count();
  Signal delta(h.ell(), n);
  for (std::size_t b = 0; b < universal_space.dimension(); ++b) {
    const Signal beta = universal_space.signal(b);
    const auto d1 = delta.axis(0);
    const auto b1 = beta.axis(0);
    // Only positive integers can collide with the candidate scalar.
    std::set<mpz_class> forbidden;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (b1[x] == b1[y]) continue;
        const Rational q = (d1[x] - d1[y]) / (b1[y] - b1[x]);
        if (q.sign() > 0 && q.is_integer()) forbidden.insert(q.numerator());
      }
    }
    mpz_class k = 1;
    for (const auto& f : forbidden) {
      if (f != k) break;
      ++k;
    }
    Signal step = beta;
    step *= Rational(mpq_class(k));
    delta += step;
  }
  return delta;
}

}  // namespace hyperframe
