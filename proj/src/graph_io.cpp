#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "topvs/error.hpp"
#include "topvs/graph.hpp"

namespace topvs {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view token) {
  double value = 0.0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::optional<std::size_t> parse_index(std::string_view token) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

WeightedNetwork from_adjacency_text(std::istream& text) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(text, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::istringstream tokens(line);
    std::vector<double> row;
    std::string token;
    while (tokens >> token) {
      auto v = parse_double(token);
      if (!v) {
        std::ostringstream msg;
        msg << "non-numeric token '" << token << "' at line " << line_no
            << ", column " << row.size() + 1;
        throw InputError(msg.str());
      }
      row.push_back(*v);
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0) throw InputError("adjacency text is empty");
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      std::ostringstream msg;
      msg << "adjacency matrix is not square: " << n << " rows but row "
          << r + 1 << " has " << rows[r].size() << " columns";
      throw InputError(msg.str());
    }
  }
  std::vector<double> flat;
  flat.reserve(n * n);
  for (auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return WeightedNetwork::from_matrix(n, std::move(flat), kAdjacencyTolerance);
}

WeightedNetwork from_adjacency_text(const std::string& text) {
  std::istringstream in(text);
  return from_adjacency_text(in);
}

WeightedNetwork parse_edge_list_csv(std::istream& in,
                                    std::optional<std::size_t> node_count) {
  struct RawRow {
    std::string a, b;
    double w;
    std::size_t line;
  };
  std::vector<RawRow> raw;
  bool header_seen = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = content.find(',', start);
      fields.push_back(trim(content.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!header_seen) {
      if (fields.size() != 3 || fields[0] != "i" || fields[1] != "j" ||
          fields[2] != "w") {
        throw InputError("edge list line " + std::to_string(line_no) +
                         ": expected header 'i,j,w'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 3) {
      throw InputError("edge list line " + std::to_string(line_no) +
                       ": expected 3 fields, got " +
                       std::to_string(fields.size()));
    }
    auto w = parse_double(fields[2]);
    if (!w) {
      throw InputError("edge list line " + std::to_string(line_no) +
                       ": non-numeric weight '" + std::string(fields[2]) + "'");
    }
    raw.push_back({std::string(fields[0]), std::string(fields[1]), *w, line_no});
  }
  if (!header_seen) throw InputError("edge list is missing the 'i,j,w' header");

  const bool indexed = std::all_of(raw.begin(), raw.end(), [](const RawRow& r) {
    return parse_index(r.a) && parse_index(r.b);
  });

  std::vector<WeightedEdge> edges;
  edges.reserve(raw.size());
  std::vector<std::string> labels;
  if (indexed) {
    std::size_t max_index = 0;
    for (const auto& r : raw) {
      edges.push_back({*parse_index(r.a), *parse_index(r.b), r.w});
      max_index = std::max({max_index, edges.back().i, edges.back().j});
    }
    if (!node_count) node_count = raw.empty() ? 0 : max_index + 1;
  } else {
    std::map<std::string, std::size_t> ids;
    auto id_of = [&](const std::string& name) {
      auto [it, inserted] = ids.emplace(name, labels.size());
      if (inserted) labels.push_back(name);
      return it->second;
    };
    for (const auto& r : raw) {
      const auto a = id_of(r.a);
      const auto b = id_of(r.b);
      edges.push_back({a, b, r.w});
    }
    if (!node_count) node_count = labels.size();
    if (*node_count < labels.size()) {
      throw InputError("edge list names " + std::to_string(labels.size()) +
                       " nodes but node_count is " +
                       std::to_string(*node_count));
    }
    for (std::size_t k = labels.size(); k < *node_count; ++k) {
      labels.push_back(std::to_string(k));
    }
  }
  auto net = from_edge_list(edges, *node_count);
  return labels.empty() ? net : net.with_labels(std::move(labels));
}

void write_edge_list_csv(std::ostream& out, const WeightedNetwork& net) {
  const auto& labels = net.node_labels();
  auto name = [&](std::size_t k) {
    return labels.empty() ? std::to_string(k) : labels[k];
  };
  out << "i,j,w\n";
  for (const auto& e : net.edges()) {
    out << name(e.i) << ',' << name(e.j) << ',' << format_double(e.w) << '\n';
  }
}

void write_adjacency_text(std::ostream& out, const WeightedNetwork& net) {
  const auto n = net.node_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << format_double(net.weight(i, j));
    }
    out << '\n';
  }
}

NetworkFormat parse_network_format(const std::string& name) {
  if (name == "edgelist") return NetworkFormat::EdgeList;
  if (name == "adjacency") return NetworkFormat::Adjacency;
  throw InputError("unknown network format '" + name +
                   "' (expected edgelist or adjacency)");
}

std::string to_string(NetworkFormat format) {
  return format == NetworkFormat::EdgeList ? "edgelist" : "adjacency";
}

NetworkFormat guess_network_format(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? NetworkFormat::EdgeList
                                    : NetworkFormat::Adjacency;
}

WeightedNetwork load_network(const std::filesystem::path& path,
                             NetworkFormat format,
                             std::optional<std::size_t> node_count) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open network file " + path.string());
  try {
    if (format == NetworkFormat::EdgeList) {
      return parse_edge_list_csv(in, node_count);
    }
    auto net = from_adjacency_text(in);
    if (node_count && *node_count != net.node_count()) {
      throw InputError("node_count " + std::to_string(*node_count) +
                       " does not match matrix size " +
                       std::to_string(net.node_count()));
    }
    return net;
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::vector<ManifestEntry> parse_manifest(const std::string& json_text,
                                          const std::filesystem::path& base_dir) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("manifest must be a JSON array");
  std::vector<ManifestEntry> entries;
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const auto& rec = doc[k];
    const std::string where = "manifest record " + std::to_string(k);
    if (!rec.is_object()) throw InputError(where + " is not an object");
    auto require_string = [&](const char* key) {
      if (!rec.contains(key) || !rec[key].is_string()) {
        throw InputError(where + ": missing string field '" + key + "'");
      }
      return rec[key].get<std::string>();
    };
    ManifestEntry entry;
    entry.path = base_dir / require_string("path");
    entry.format = parse_network_format(require_string("format"));
    entry.label = require_string("label");
    if (rec.contains("node_count")) {
      if (!rec["node_count"].is_number_unsigned()) {
        throw InputError(where + ": node_count must be a non-negative integer");
      }
      entry.node_count = rec["node_count"].get<std::size_t>();
    }
    if (entry.format == NetworkFormat::EdgeList && !entry.node_count) {
      throw InputError(where + ": edgelist records require node_count");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open manifest " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), path.parent_path());
}

std::string manifest_to_json(const std::vector<ManifestEntry>& entries,
                             const std::filesystem::path& base_dir) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json rec;
    rec["path"] = e.path.lexically_relative(base_dir).generic_string();
    rec["format"] = to_string(e.format);
    if (e.node_count) rec["node_count"] = *e.node_count;
    rec["label"] = e.label;
    doc.push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

LabeledNetworks load_manifest_networks(const std::filesystem::path& manifest) {
  LabeledNetworks out;
  for (const auto& entry : read_manifest(manifest)) {
    out.networks.push_back(load_network(entry.path, entry.format, entry.node_count));
    out.labels.push_back(entry.label);
  }
  return out;
}

}  // namespace topvs
