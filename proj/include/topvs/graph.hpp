#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace topvs {

struct WeightedEdge {
  std::size_t i = 0;
  std::size_t j = 0;
  double w = 0.0;
};

/// Undirected weighted network stored as a dense symmetric matrix.
///
/// Every unordered pair of distinct nodes carries a weight; pairs that were
/// never assigned one hold 0. The diagonal is always 0 and is never treated
/// as an edge. Instances are immutable once built.
class WeightedNetwork {
 public:
  /// Takes ownership of a row-major node_count x node_count matrix and
  /// validates it (symmetry within `tolerance`, finite entries, diagonal
  /// within `tolerance` of 0). Near-symmetric pairs keep the upper value.
  static WeightedNetwork from_matrix(std::size_t node_count,
                                     std::vector<double> weights,
                                     double tolerance = 0.0);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return node_count_ * (node_count_ - 1) / 2; }

  double weight(std::size_t i, std::size_t j) const {
    return weights_[i * node_count_ + j];
  }

  /// Row-major matrix view, diagonal included.
  const std::vector<double>& matrix() const { return weights_; }

  /// All pairs i < j in row-major order.
  std::vector<WeightedEdge> edges() const;

  /// Optional external node names; empty when nodes were given as indices.
  const std::vector<std::string>& node_labels() const { return labels_; }
  WeightedNetwork with_labels(std::vector<std::string> labels) const;

  /// Same network with nodes renumbered so that old node k becomes perm[k].
  WeightedNetwork relabeled(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const WeightedNetwork& a, const WeightedNetwork& b) {
    return a.node_count_ == b.node_count_ && a.weights_ == b.weights_;
  }

 private:
  WeightedNetwork(std::size_t n, std::vector<double> w)
      : node_count_(n), weights_(std::move(w)) {}

  std::size_t node_count_;
  std::vector<double> weights_;
  std::vector<std::string> labels_;
};

/// Builds a network from explicit edges; unlisted pairs get weight 0.
/// Rejects self-loops, out-of-range indices, and duplicate unordered pairs.
WeightedNetwork from_edge_list(const std::vector<WeightedEdge>& entries,
                               std::size_t node_count);

/// Absolute tolerance for symmetry and zero-diagonal checks on matrix input.
inline constexpr double kAdjacencyTolerance = 1e-12;

WeightedNetwork from_adjacency_text(std::istream& text);
WeightedNetwork from_adjacency_text(const std::string& text);

/// Parses edge-list CSV (`i,j,w` header, `#` comments). Node ids that are not
/// all non-negative integers are treated as labels and numbered in order of
/// first appearance. Without `node_count` the count is inferred.
WeightedNetwork parse_edge_list_csv(std::istream& in,
                                    std::optional<std::size_t> node_count = {});

/// Writes every pair i < j, zeros included, with 17 significant digits.
void write_edge_list_csv(std::ostream& out, const WeightedNetwork& net);
void write_adjacency_text(std::ostream& out, const WeightedNetwork& net);

enum class NetworkFormat { EdgeList, Adjacency };

NetworkFormat parse_network_format(const std::string& name);
std::string to_string(NetworkFormat format);

/// Picks a format from the file extension: .csv is an edge list, anything
/// else is adjacency text.
NetworkFormat guess_network_format(const std::filesystem::path& path);

WeightedNetwork load_network(const std::filesystem::path& path,
                             NetworkFormat format,
                             std::optional<std::size_t> node_count = {});

struct ManifestEntry {
  std::filesystem::path path;  // resolved against the manifest's directory
  NetworkFormat format = NetworkFormat::EdgeList;
  std::optional<std::size_t> node_count;
  std::string label;
};

std::vector<ManifestEntry> parse_manifest(const std::string& json_text,
                                          const std::filesystem::path& base_dir);
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

/// Serializes entries with paths written relative to `base_dir` when possible.
std::string manifest_to_json(const std::vector<ManifestEntry>& entries,
                             const std::filesystem::path& base_dir);

struct LabeledNetworks {
  std::vector<WeightedNetwork> networks;
  std::vector<std::string> labels;
};

LabeledNetworks load_manifest_networks(const std::filesystem::path& manifest);

}  // namespace topvs
