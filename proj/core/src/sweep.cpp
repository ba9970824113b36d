#include "hyperframe/sweep.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "hyperframe/error.hpp"
#include "hyperframe/frame.hpp"
#include "hyperframe/random_hypergraph.hpp"

namespace hyperframe {

namespace {

struct RunOutcome {
  Rational proportion;
  bool bridged = false;
  std::optional<std::string> error;
};

std::uint64_t low_bits(const mpz_class& value) {
  mpz_class reduced = value;
  if (reduced < 0) reduced = -reduced;
  return mpz_get_ui(reduced.get_mpz_t());
}

}  // namespace

std::string to_string(DensityMode mode) {
  return mode == DensityMode::EdgesPerVertex ? "edges-per-vertex" : "avg-degree";
}

DensityMode parse_density_mode(const std::string& text) {
  if (text == "edges-per-vertex") return DensityMode::EdgesPerVertex;
  if (text == "avg-degree") return DensityMode::AverageDegree;
  throw FormatError("unknown density mode '" + text + "' (expected edges-per-vertex or avg-degree)");
}

std::size_t edge_count_for(std::size_t n, const Rational& density, std::size_t ell, DensityMode mode) {
  Rational target = density * Rational(static_cast<std::int64_t>(n));
  if (mode == DensityMode::AverageDegree) target /= Rational(static_cast<std::int64_t>(ell));
  const mpq_class shifted = target.to_mpq() + mpq_class(1, 2);
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  if (rounded < 0) return 0;
  return static_cast<std::size_t>(rounded.get_ui());
}

Rational reduction_proportion(const Hypergraph& h) {
  if (h.edge_count() == 0) throw DomainError("reduction proportion of a hypergraph without edges");
  const FrameResult result = frame(h);
  return Rational(static_cast<std::int64_t>(result.frame.edge_count()), static_cast<std::int64_t>(h.edge_count()));
}

void validate(const SweepConfig& cfg) {
  if (cfg.vertex_counts.empty()) throw std::invalid_argument("sweep needs at least one vertex count");
  if (cfg.densities.empty()) throw std::invalid_argument("sweep needs at least one density");
  if (cfg.runs_per_cell < 1) throw std::invalid_argument("runs per cell must be at least 1");
  if (cfg.ell < 3) throw std::invalid_argument("arity must be at least 3");
  for (std::size_t n : cfg.vertex_counts) {
    if (n == 0) throw std::invalid_argument("vertex counts must be positive");
  }
  for (const auto& d : cfg.densities) {
    if (d.sign() <= 0) throw std::invalid_argument("densities must be positive");
  }
}

std::uint64_t run_seed(std::uint64_t seed, std::size_t n, const Rational& density, std::size_t run) {
  std::uint64_t s = mix_seed(seed, n);
  s = mix_seed(s, low_bits(density.numerator()));
  s = mix_seed(s, low_bits(density.denominator()));
  return mix_seed(s, run);
}

Rational rounded_sqrt(const Rational& value, int digits) {
  if (value.sign() < 0) throw std::domain_error("square root of a negative value");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpq_class x = value.to_mpq() * scale * scale * 4;
  mpz_class floor4x;
  mpz_fdiv_q(floor4x.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  // round(sqrt(X)) = floor((floor(sqrt(4X)) + 1) / 2)
  const mpz_class root = (mpz_class(sqrt(floor4x)) + 1) / 2;
  return Rational(mpq_class(root, scale));
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  struct Cell {
    std::size_t n;
    Rational density;
    std::size_t m;
  };
  std::vector<Cell> cells;
  for (std::size_t n : cfg.vertex_counts) {
    for (const auto& d : cfg.densities) cells.push_back({n, d, edge_count_for(n, d, cfg.ell, cfg.mode)});
  }

  const std::size_t runs = cfg.runs_per_cell;
  std::vector<RunOutcome> outcomes(cells.size() * runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task = next++; task < outcomes.size(); task = next++) {
      const Cell& cell = cells[task / runs];
      RunOutcome& out = outcomes[task];
      try {
        const RandomInstance inst =
            random_instance(cell.n, cell.m, cfg.ell, run_seed(cfg.seed, cell.n, cell.density, task % runs));
        out.proportion = reduction_proportion(inst.graph);
        out.bridged = inst.bridges > 0;
      } catch (const DomainError& e) {
        out.error = e.what();
      }
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.threads, outcomes.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  std::vector<SweepRow> rows;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    SweepRow row;
    row.n = cells[c].n;
    row.m = cells[c].m;
    row.density = cells[c].density;
    Rational sum;
    Rational sum_sq;
    for (std::size_t r = 0; r < runs; ++r) {
      const RunOutcome& out = outcomes[c * runs + r];
      if (out.error) {
        row.error = out.error;
        break;
      }
      sum += out.proportion;
      sum_sq += out.proportion * out.proportion;
      if (out.bridged) ++row.bridged_runs;
    }
    if (!row.error) {
      row.runs = runs;
      const Rational count(static_cast<std::int64_t>(runs));
      row.mean = sum / count;
      row.stddev = rounded_sqrt(sum_sq / count - row.mean * row.mean, 6);
    } else {
      row.bridged_runs = 0;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "n,m,density,runs,mean_reduction,stddev\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.m << ',' << row.density.to_decimal(6) << ',' << row.runs << ',';
    if (row.error) {
      out << "NA,NA\n";
    } else {
      out << row.mean.to_decimal(6) << ',' << row.stddev.to_decimal(6) << '\n';
    }
  }
}

}  // namespace hyperframe
