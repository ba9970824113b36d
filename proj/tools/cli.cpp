#include "cli.hpp"

#include <algorithm>
#include <sstream>

#include <CLI11.hpp>

#include "hyperframe/error.hpp"
#include "hyperframe/families.hpp"
#include "hyperframe/frame.hpp"
#include "hyperframe/io.hpp"
#include "hyperframe/random_hypergraph.hpp"
#include "hyperframe/signal.hpp"
#include "hyperframe/sweep.hpp"

namespace hyperframe::cli {

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kFormat = 2;

struct Options {
  std::string in;
  std::string out;
  std::string map = "U";
  std::string signal;
  std::string classes;
  bool per_component = false;
  std::string kind;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string density;
  std::size_t ell = 3;
  std::uint64_t seed = 0;
  std::string density_mode = "edges-per-vertex";
  std::vector<std::size_t> sizes{50, 100, 150, 200};
  std::vector<std::string> densities{"2.3", "2.4", "2.5", "2.6", "2.7", "2.8", "2.9", "3.0"};
  std::size_t runs = 50;
  std::size_t threads = 1;
};

Rational parse_number(const std::string& text) {
  return text.find('.') != std::string::npos ? Rational::parse_decimal(text) : Rational::parse(text);
}

Hypergraph load_input(const Options& o, std::ostream& err) {
  std::vector<std::string> warnings;
  Hypergraph h = load_hypergraph(o.in, &warnings);
  for (const auto& w : warnings) err << "warning: " << o.in << ": " << w << "\n";
  return h;
}

LinearMap resolve_map(const std::string& spec, std::size_t ell) {
  if (spec == "U") return LinearMap::universal(ell);
  if (spec == "C") return LinearMap::centroid(ell);
  return parse_linear_map(read_file(spec));
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
}

std::string tuple_text(const Hypergraph& h, const Edge& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? ", " : "") + h.label(e[i]);
  return s + ")";
}

int cmd_signals(const Options& o, std::ostream& out, std::ostream& err) {
  const Hypergraph h = load_input(o, err);
  const LinearMap t = resolve_map(o.map, h.ell());
  if (auto axis = first_disengaged_axis(t)) {
    err << "warning: map is not engaged: axis " << (*axis + 1) << " maps to zero, so it is unconstrained\n";
  }
  const SignalSpace space = signal_space(h, t);
  const SignalSpace constants = constant_space(t, h.vertex_count());
  out << "dim " << space.dimension() << ", constant " << constants.dimension() << "\n";
  if (!o.out.empty()) write_file(o.out, format_signals(h, space.signals()));
  return kOk;
}

int cmd_frame(const Options& o, std::ostream& out, std::ostream& err) {
  const Hypergraph h = load_input(o, err);
  if (!o.per_component && !is_connected(h)) {
    err << "error: input has " << components(h).class_count()
        << " connected components; frame needs a connected hypergraph (run `components` to inspect, or pass "
           "--per-component)\n";
    return kDomain;
  }
  const FrameResult result = o.per_component ? frame_per_component(h) : frame(h);
  out << "classes: " << result.fusion.class_count() << ", frame: " << result.frame.vertex_count() << " vertices, "
      << result.frame.edge_count() << " edges\n";
  if (h.edge_count() > 0) {
    const Rational p(static_cast<std::int64_t>(result.frame.edge_count()), static_cast<std::int64_t>(h.edge_count()));
    out << "reduction proportion: " << p.str() << " (" << p.to_decimal(6) << ")\n";
  }
  if (!o.out.empty()) save_hypergraph(o.out, result.frame);
  if (!o.classes.empty()) write_file(o.classes, format_frame_result(h, result));
  if (o.out.empty() && o.classes.empty()) out << format_frame_result(h, result);
  return kOk;
}

int cmd_components(const Options& o, std::ostream& out, std::ostream& err) {
  const Hypergraph h = load_input(o, err);
  const Partition comps = components(h);
  const std::size_t by_union_find = comps.class_count();
  const std::size_t by_signals = component_count_via_centroid(h);
  out << "components: " << by_union_find << ", dim Der(H,C): " << by_signals << "\n";
  // A vertex on no edge is free on every axis and adds ell dimensions.
  std::vector<bool> touched(h.vertex_count(), false);
  for (const auto& e : h.edges()) {
    for (VertexId v : e) touched[v] = true;
  }
  const auto isolated = static_cast<std::size_t>(std::count(touched.begin(), touched.end(), false));
  if (isolated > 0) out << "isolated vertices: " << isolated << " (each adds " << h.ell() << " dimensions)\n";
  if (by_union_find + isolated * (h.ell() - 1) != by_signals) {
    err << "internal error: component count and centroid signal dimension disagree\n";
    return kDomain;
  }
  return kOk;
}

int cmd_generate(const Options& o, std::ostream& out, std::ostream& err) {
  Hypergraph h = [&]() -> Hypergraph {
    if (o.kind == "fan") return fan(o.n);
    if (o.kind == "mountain") return mountain_range(o.n);
    std::size_t m = o.m;
    if (!o.density.empty()) {
      m = edge_count_for(o.n, parse_number(o.density), o.ell, parse_density_mode(o.density_mode));
    }
    const RandomInstance inst = random_instance(o.n, m, o.ell, o.seed);
    if (inst.bridges > 0) {
      err << "note: no connected sample in " << inst.attempts << " draws; swapped in " << inst.bridges
          << " bridge edge" << (inst.bridges == 1 ? "" : "s") << "\n";
    }
    return inst.graph;
  }();
  emit(o, format_hypergraph(h), out);
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  SweepConfig cfg;
  cfg.vertex_counts = o.sizes;
  for (const auto& d : o.densities) cfg.densities.push_back(parse_number(d));
  cfg.runs_per_cell = o.runs;
  cfg.seed = o.seed;
  cfg.ell = o.ell;
  cfg.mode = parse_density_mode(o.density_mode);
  cfg.threads = o.threads;
  const std::vector<SweepRow> rows = run_sweep(cfg);
  for (const auto& row : rows) {
    if (row.error) {
      err << "warning: cell n=" << row.n << " density=" << row.density.to_decimal(6) << " skipped: " << *row.error
          << "\n";
    } else if (row.bridged_runs > 0) {
      err << "note: cell n=" << row.n << " density=" << row.density.to_decimal(6) << ": " << row.bridged_runs << " of "
          << row.runs << " instances needed bridge edges\n";
    }
  }
  std::ostringstream csv;
  write_csv(csv, rows);
  emit(o, csv.str(), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const Hypergraph h = load_input(o, err);
  const LinearMap t = resolve_map(o.map, h.ell());
  const std::vector<Signal> signals = parse_signals(read_file(o.signal), h);
  bool all_pass = true;
  for (std::size_t i = 0; i < signals.size(); ++i) {
    out << "signal " << (i + 1) << ": ";
    if (auto bad = find_violation(h, t, signals[i])) {
      all_pass = false;
      out << "FAIL at edge " << tuple_text(h, h.edges()[bad->edge_index]) << ", arrangement "
          << tuple_text(h, bad->arrangement) << ", map row " << (bad->map_row + 1) << ": residual "
          << bad->residual.str() << "\n";
    } else {
      out << "pass\n";
    }
  }
  return all_pass ? kOk : kDomain;
}

int cmd_export_dot(const Options& o, std::ostream& out, std::ostream& err) {
  emit(o, to_dot(load_input(o, err)), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Signal invariants, fusion and frames of uniform hypergraphs", "hyperframe"};
  app.require_subcommand(1);

  auto add_in = [&](CLI::App* c) { c->add_option("--in", o.in, "Hypergraph JSON file")->required(); };
  auto add_map = [&](CLI::App* c) { c->add_option("--map", o.map, "U, C, or a path to a matrix JSON file"); };

  auto* signals = app.add_subcommand("signals", "Dimension of the signal space and its constant part");
  add_in(signals);
  add_map(signals);
  signals->add_option("--out", o.out, "Write the basis signals as JSON");

  auto* frame_cmd = app.add_subcommand("frame", "Fusion classes and frame under the universal map");
  add_in(frame_cmd);
  frame_cmd->add_option("--out", o.out, "Write the frame hypergraph JSON");
  frame_cmd->add_option("--classes", o.classes, "Write frame, classes and class map JSON");
  frame_cmd->add_flag("--per-component", o.per_component, "Frame each connected component separately");

  auto* comps = app.add_subcommand("components", "Component count, cross-checked against centroid signals");
  add_in(comps);

  auto* generate = app.add_subcommand("generate", "Write a fan, mountain range or random hypergraph");
  generate->add_option("kind", o.kind, "fan, mountain or random")
      ->required()
      ->check(CLI::IsMember({"fan", "mountain", "random"}));
  generate->add_option("--n", o.n, "Segments, peaks, or vertex count")->required();
  generate->add_option("--m", o.m, "Edge count (random)");
  generate->add_option("--density", o.density, "Density instead of --m (random)");
  generate->add_option("--density-mode", o.density_mode, "edges-per-vertex or avg-degree");
  generate->add_option("--ell", o.ell, "Arity (random)");
  generate->add_option("--seed", o.seed, "Random seed");
  generate->add_option("--out", o.out, "Output path (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "Mean reduction proportion over random instances");
  sweep->add_option("--sizes", o.sizes, "Vertex counts")->delimiter(',');
  sweep->add_option("--densities", o.densities, "Densities, decimal or p/q")->delimiter(',');
  sweep->add_option("--runs", o.runs, "Instances per cell");
  sweep->add_option("--seed", o.seed, "Base seed");
  sweep->add_option("--ell", o.ell, "Arity");
  sweep->add_option("--density-mode", o.density_mode, "edges-per-vertex or avg-degree");
  sweep->add_option("--threads", o.threads, "Worker threads");
  sweep->add_option("--out", o.out, "CSV path (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check signals exactly against every edge arrangement");
  add_in(verify);
  add_map(verify);
  verify->add_option("--signal", o.signal, "Signal JSON (one object or an array)")->required();

  auto* dot = app.add_subcommand("export-dot", "Bipartite incidence graph in DOT");
  add_in(dot);
  dot->add_option("--out", o.out, "Output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kFormat;
  }

  try {
    if (signals->parsed()) return cmd_signals(o, out, err);
    if (frame_cmd->parsed()) return cmd_frame(o, out, err);
    if (comps->parsed()) return cmd_components(o, out, err);
    if (generate->parsed()) return cmd_generate(o, out, err);
    if (sweep->parsed()) return cmd_sweep(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (dot->parsed()) return cmd_export_dot(o, out, err);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kFormat;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kDomain;
  }
  return kFormat;
}

}  // namespace hyperframe::cli
