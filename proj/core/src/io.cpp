#include "hyperframe/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hyperframe/error.hpp"

namespace hyperframe {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

const json& field(const json& obj, const char* key, const char* what) {
  if (!obj.is_object()) throw FormatError(std::string(what) + ": expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

std::size_t as_count(const json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw FormatError(std::string(what) + ": expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::string> as_labels(const json& v, const char* what) {
  if (!v.is_array()) throw FormatError(std::string(what) + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) throw FormatError(std::string(what) + ": expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

Rational as_rational(const json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
      return Rational::parse(v.dump());
    }
    return Rational(v.get<std::int64_t>());
  }
  throw FormatError("expected a rational as a \"p/q\" string or an integer, got " + v.dump());
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string label_list(const Hypergraph& h, const std::vector<VertexId>& ids) {
  std::string out = "[";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ", ";
    out += quoted(h.label(ids[i]));
  }
  return out + "]";
}

// Hypergraph object body; `pad` is the indentation of the closing brace.
std::string hypergraph_object(const Hypergraph& h, const std::string& pad) {
  std::vector<VertexId> all(h.vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<VertexId>(v);
  std::string out = "{\n";
  out += pad + "  \"ell\": " + std::to_string(h.ell()) + ",\n";
  out += pad + "  \"vertices\": " + label_list(h, all) + ",\n";
  if (h.edges().empty()) {
    out += pad + "  \"edges\": []\n";
  } else {
    out += pad + "  \"edges\": [\n";
    for (std::size_t k = 0; k < h.edges().size(); ++k) {
      out += pad + "    " + label_list(h, h.edges()[k]) + (k + 1 < h.edges().size() ? ",\n" : "\n");
    }
    out += pad + "  ]\n";
  }
  return out + pad + "}";
}

std::string signal_object(const Hypergraph& h, const Signal& s, const std::string& pad) {
  if (s.ell() != h.ell() || s.vertex_count() != h.vertex_count()) {
    throw std::invalid_argument("signal shape does not match the hypergraph");
  }
  std::vector<VertexId> all(h.vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<VertexId>(v);
  std::string out = "{\n";
  out += pad + "  \"vertices\": " + label_list(h, all) + ",\n";
  out += pad + "  \"ell\": " + std::to_string(h.ell()) + ",\n";
  out += pad + "  \"values\": [\n";
  for (std::size_t a = 0; a < s.ell(); ++a) {
    out += pad + "    [";
    const auto row = s.axis(a);
    for (std::size_t x = 0; x < row.size(); ++x) {
      if (x > 0) out += ", ";
      out += quoted(row[x].fraction_str());
    }
    out += a + 1 < s.ell() ? "],\n" : "]\n";
  }
  return out + pad + "  ]\n" + pad + "}";
}

Signal signal_from_json(const json& obj, const Hypergraph& h) {
  const char* what = "signal";
  const std::size_t ell = as_count(field(obj, "ell", what), what);
  if (ell != h.ell()) {
    throw FormatError("signal has ell " + std::to_string(ell) + " but the hypergraph has " + std::to_string(h.ell()));
  }
  const std::vector<std::string> labels = as_labels(field(obj, "vertices", what), what);
  if (labels.size() != h.vertex_count()) throw FormatError("signal vertex list does not match the hypergraph");
  std::vector<VertexId> ids;
  std::vector<bool> seen(h.vertex_count(), false);
  for (const auto& label : labels) {
    const auto id = h.find(label);
    if (!id || seen[*id]) throw FormatError("signal vertex list does not match the hypergraph at '" + label + "'");
    seen[*id] = true;
    ids.push_back(*id);
  }
  const json& values = field(obj, "values", what);
  if (!values.is_array() || values.size() != ell) throw FormatError("signal values must be ell arrays");
  Signal s(ell, h.vertex_count());
  for (std::size_t a = 0; a < ell; ++a) {
    const json& row = values[a];
    if (!row.is_array() || row.size() != labels.size()) {
      throw FormatError("signal axis " + std::to_string(a + 1) + " must list one value per vertex");
    }
    for (std::size_t i = 0; i < labels.size(); ++i) s(a, ids[i]) = as_rational(row[i]);
  }
  return s;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

Hypergraph parse_hypergraph(std::string_view json_text, std::vector<std::string>* warnings) {
  const char* what = "hypergraph";
  const json doc = parse_json(json_text, what);
  const std::size_t ell = as_count(field(doc, "ell", what), what);
  if (ell < 3) throw FormatError("hypergraph: ell must be at least 3, got " + std::to_string(ell));
  std::vector<std::string> labels = as_labels(field(doc, "vertices", what), what);
  if (labels.empty()) throw FormatError("hypergraph: the vertex list is empty");
  std::map<std::string, VertexId> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<VertexId>(i)).second) {
      throw FormatError("hypergraph: duplicate vertex '" + labels[i] + "'");
    }
  }
  const json& edges = field(doc, "edges", what);
  if (!edges.is_array()) throw FormatError("hypergraph: \"edges\" must be an array");
  std::vector<std::vector<VertexId>> tuples;
  for (const auto& edge : edges) {
    const std::vector<std::string> members = as_labels(edge, "hypergraph edge");
    if (members.size() != ell) {
      throw FormatError("hypergraph: edge " + edge.dump() + " has " + std::to_string(members.size()) +
                        " entries, expected " + std::to_string(ell));
    }
    std::vector<VertexId> tuple;
    for (const auto& m : members) {
      auto it = index.find(m);
      if (it == index.end()) throw FormatError("hypergraph: edge " + edge.dump() + " names unknown vertex '" + m + "'");
      tuple.push_back(it->second);
    }
    tuples.push_back(std::move(tuple));
  }
  Hypergraph h(ell, std::move(labels), tuples);
  if (warnings && h.collapsed_duplicates() > 0) {
    warnings->push_back("collapsed " + std::to_string(h.collapsed_duplicates()) + " duplicate edge" +
                        (h.collapsed_duplicates() == 1 ? "" : "s"));
  }
  return h;
}

std::string format_hypergraph(const Hypergraph& h) { return hypergraph_object(h, "") + "\n"; }

LinearMap parse_linear_map(std::string_view json_text) {
  const json doc = parse_json(json_text, "map");
  if (!doc.is_array() || doc.empty()) throw FormatError("map: expected a nonempty array of rows");
  std::vector<Vector> rows;
  for (const auto& row : doc) {
    if (!row.is_array() || row.empty()) throw FormatError("map: every row must be a nonempty array");
    Vector values;
    for (const auto& entry : row) values.push_back(as_rational(entry));
    if (!rows.empty() && values.size() != rows.front().size()) throw FormatError("map: rows differ in length");
    rows.push_back(std::move(values));
  }
  return LinearMap(std::move(rows));
}

std::string format_linear_map(const LinearMap& t) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < t.r(); ++i) {
    out += "  [";
    for (std::size_t a = 0; a < t.ell(); ++a) {
      if (a > 0) out += ", ";
      out += quoted(t.at(i, a).fraction_str());
    }
    out += i + 1 < t.r() ? "],\n" : "]\n";
  }
  return out + "]\n";
}

std::string format_signal(const Hypergraph& h, const Signal& s) { return signal_object(h, s, "") + "\n"; }

std::string format_signals(const Hypergraph& h, const std::vector<Signal>& signals) {
  if (signals.empty()) return "[]\n";
  std::string out = "[\n";
  for (std::size_t i = 0; i < signals.size(); ++i) {
    out += "  " + signal_object(h, signals[i], "  ") + (i + 1 < signals.size() ? ",\n" : "\n");
  }
  return out + "]\n";
}

std::vector<Signal> parse_signals(std::string_view json_text, const Hypergraph& h) {
  const json doc = parse_json(json_text, "signal");
  std::vector<Signal> out;
  if (doc.is_array()) {
    for (const auto& item : doc) out.push_back(signal_from_json(item, h));
  } else {
    out.push_back(signal_from_json(doc, h));
  }
  return out;
}

std::string format_classes(const Hypergraph& input, const Partition& p) {
  if (p.vertex_count() != input.vertex_count()) throw std::invalid_argument("partition does not match the hypergraph");
  std::string out = "[";
  for (std::size_t c = 0; c < p.classes().size(); ++c) {
    if (c > 0) out += ", ";
    out += label_list(input, p.classes()[c]);
  }
  return out + "]";
}

std::string format_frame_result(const Hypergraph& input, const FrameResult& result) {
  std::string out = "{\n";
  out += "  \"frame\": " + hypergraph_object(result.frame, "  ") + ",\n";
  out += "  \"classes\": " + format_classes(input, result.fusion) + ",\n";
  out += "  \"class_map\": {";
  for (std::size_t v = 0; v < input.vertex_count(); ++v) {
    out += v > 0 ? ",\n    " : "\n    ";
    out += quoted(input.label(static_cast<VertexId>(v))) + ": " + quoted(result.class_map.at(v));
  }
  out += input.vertex_count() > 0 ? "\n  }\n" : "}\n";
  return out + "}\n";
}

std::string to_dot(const Hypergraph& h) {
  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') {
        out += '\\';
        out += c;
      } else if (c == '\n') {
        out += "\\n";
      } else {
        out += c;
      }
    }
    return out;
  };
  std::ostringstream out;
  out << "graph hypergraph {\n";
  out << "  node [shape=ellipse];\n";
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << escape(h.label(static_cast<VertexId>(v))) << "\"];\n";
  }
  for (std::size_t k = 0; k < h.edges().size(); ++k) {
    out << "  e" << k << " [shape=box, label=\"e" << k << "\"];\n";
  }
  for (std::size_t k = 0; k < h.edges().size(); ++k) {
    const Edge& e = h.edges()[k];
    for (std::size_t i = 0; i < e.size();) {
      std::size_t j = i;
      while (j < e.size() && e[j] == e[i]) ++j;
      out << "  v" << e[i] << " -- e" << k;
      if (j - i > 1) out << " [label=\"" << (j - i) << "\"]";
      out << ";\n";
      i = j;
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace hyperframe
