#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hyperframe/hypergraph.hpp"
#include "hyperframe/rational.hpp"

namespace hyperframe {

/// How a density value turns into an edge count for n vertices.
enum class DensityMode {
  EdgesPerVertex,  // m = round(density * n)
  AverageDegree,   // m = round(density * n / ell)
};

std::string to_string(DensityMode mode);
/// Accepts "edges-per-vertex" and "avg-degree"; throws FormatError otherwise.
DensityMode parse_density_mode(const std::string& text);

/// Edge count for one cell, rounding halves up.
std::size_t edge_count_for(std::size_t n, const Rational& density, std::size_t ell, DensityMode mode);

/// Frame edges over input edges. Requires a connected input with edges.
Rational reduction_proportion(const Hypergraph& h);

struct SweepConfig {
  std::vector<std::size_t> vertex_counts;
  std::vector<Rational> densities;
  std::size_t runs_per_cell = 50;
  std::uint64_t seed = 0;
  std::size_t ell = 3;
  DensityMode mode = DensityMode::EdgesPerVertex;
  /// Worker threads; output does not depend on this.
  std::size_t threads = 1;
};

struct SweepRow {
  std::size_t n = 0;
  std::size_t m = 0;
  Rational density;
  /// Zero when the cell was infeasible; see `error`.
  std::size_t runs = 0;
  Rational mean;
  /// Population standard deviation, rounded to 6 decimals.
  Rational stddev;
  /// Instances that needed bridge edges to become connected.
  std::size_t bridged_runs = 0;
  std::optional<std::string> error;
};

/// Throws std::invalid_argument on an invalid configuration.
void validate(const SweepConfig& cfg);

/// Seed for one run, independent of every other cell and run.
std::uint64_t run_seed(std::uint64_t seed, std::size_t n, const Rational& density, std::size_t run);

/// One row per (n, density) cell, n outer, in the configured order.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

/// Header "n,m,density,runs,mean_reduction,stddev"; infeasible cells print
/// NA in the last two columns.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Square root of a nonnegative rational rounded half up to `digits`
/// decimals, computed with integer arithmetic only.
Rational rounded_sqrt(const Rational& value, int digits);

}  // namespace hyperframe
