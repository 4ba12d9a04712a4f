#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "topvs/barcode.hpp"
#include "topvs/classify.hpp"
#include "topvs/embed.hpp"
#include "topvs/error.hpp"
#include "topvs/graph.hpp"
#include "topvs/simgen.hpp"
#include "topvs/wasserstein.hpp"

#ifndef TOPVS_VERSION
#define TOPVS_VERSION "dev"
#endif

namespace topvs::cli {

const char* version_string() { return "topvs " TOPVS_VERSION; }

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Bad flag values detected after parsing; reported like parse errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct NetworkInput {
  std::string format;  // empty: guess from extension
  std::optional<std::size_t> nodes;
};

void add_network_flags(CLI::App* cmd, NetworkInput& in) {
  cmd->add_option("--format", in.format,
                  "Network file format (edgelist|adjacency); default: .csv is "
                  "an edge list, anything else adjacency text")
      ->check(CLI::IsMember({"edgelist", "adjacency"}));
  cmd->add_option("--nodes", in.nodes,
                  "Node count for edge lists (default: largest index + 1)");
}

WeightedNetwork load_input(const std::string& path, const NetworkInput& in) {
  const auto format = in.format.empty() ? guess_network_format(path)
                                        : parse_network_format(in.format);
  return load_network(path, format, in.nodes);
}

json config_block(const std::string& subcommand, json flags) {
  return json{{"subcommand", subcommand},
              {"version", version_string()},
              {"flags", std::move(flags)}};
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw InputError("cannot write output file " + out_path);
  file << text;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

PNorm parse_p(const std::string& text) {
  try {
    return PNorm::parse(text);
  } catch (const InputError& e) {
    throw UsageError(std::string("--p: ") + e.what());
  }
}

std::vector<double> parse_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw UsageError("--grid must list at least one value");
  for (const double c : grid) {
    if (!(c > 0.0)) throw UsageError("--grid values must be positive");
  }
  return grid;
}

/// A barcode from decompose JSON output, or decomposed from a network file.
BirthDeathDecomposition load_barcode(const std::string& path,
                                     const NetworkInput& in) {
  if (fs::path(path).extension() != ".json") {
    return decompose(load_input(path, in));
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open barcode file " + path);
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  BirthDeathDecomposition bd;
  try {
    bd.node_count = doc.at("node_count").get<std::size_t>();
    bd.births = doc.at("births").get<std::vector<double>>();
    bd.deaths = doc.at("deaths").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw InputError(path + ": expected node_count, births and deaths (" +
                     e.what() + ")");
  }
  const auto [m, n] = counts_for_size(bd.node_count);
  if (bd.births.size() != m || bd.deaths.size() != n) {
    throw InputError(path + ": barcode sizes do not match node_count " +
                     std::to_string(bd.node_count));
  }
  if (!std::is_sorted(bd.births.begin(), bd.births.end()) ||
      !std::is_sorted(bd.deaths.begin(), bd.deaths.end())) {
    throw InputError(path + ": births and deaths must be ascending");
  }
  return bd;
}

struct Collection {
  std::vector<WeightedNetwork> networks;
  std::vector<std::string> labels;
};

Collection load_collection(const std::string& manifest,
                           const std::vector<std::string>& files,
                           const NetworkInput& in) {
  if (!manifest.empty() && !files.empty()) {
    throw UsageError("give either --manifest or network files, not both");
  }
  if (!manifest.empty()) {
    auto loaded = load_manifest_networks(manifest);
    return {std::move(loaded.networks), std::move(loaded.labels)};
  }
  if (files.empty()) throw UsageError("no networks given");
  Collection c;
  for (const auto& f : files) {
    c.networks.push_back(load_input(f, in));
    c.labels.push_back(fs::path(f).stem().string());
  }
  return c;
}

json embedding_meta(const DatasetEmbedding& e) {
  const auto [m, n] = counts_for_size(e.ref_size);
  return json{{"ref_size", e.ref_size},
              {"largest_node_count", e.largest_node_count},
              {"ref_size_exceeds_largest", e.exceeds_largest},
              {"births_dim", m},
              {"deaths_dim", n}};
}

json cv_json(const CvReport& r) {
  return json{{"accuracy", r.accuracy},
              {"fold_accuracies", r.fold_accuracies},
              {"chosen_c", r.chosen_c},
              {"c_grid", r.c_grid},
              {"inner_accuracies", r.inner_accuracies},
              {"classes", r.classes},
              {"confusion", r.confusion},
              {"confusion_counts", r.confusion_counts},
              {"seed", r.seed},
              {"standardized", r.standardized}};
}

struct CvFlags {
  std::string manifest;
  std::size_t outer = 2;
  std::size_t inner = 5;
  std::vector<double> grid{0.01, 1.0, 100.0};
  std::uint64_t seed = 0;
  std::optional<std::size_t> ref_size;
  bool standardize = false;
  std::string out;
};

void add_cv_flags(CLI::App* cmd, CvFlags& f) {
  cmd->add_option("--manifest", f.manifest, "Dataset manifest (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--outer", f.outer, "Outer stratified folds")
      ->check(CLI::Range(2, 1000000));
  cmd->add_option("--inner", f.inner, "Inner stratified folds")
      ->check(CLI::Range(2, 1000000));
  cmd->add_option("--grid", f.grid, "Comma-separated C values")->delimiter(',');
  cmd->add_option("--seed", f.seed, "RNG seed");
  cmd->add_option("--ref-size", f.ref_size,
                  "Reference network size (default: largest network)");
  cmd->add_flag("--standardize", f.standardize,
                "Z-score features with training-fold statistics");
  cmd->add_option("--out", f.out, "Output path (default: stdout)");
}

json cv_flags_json(const CvFlags& f) {
  return json{{"manifest", f.manifest},
              {"outer", f.outer},
              {"inner", f.inner},
              {"grid", f.grid},
              {"seed", f.seed},
              {"ref_size", f.ref_size ? json(*f.ref_size) : json(nullptr)},
              {"standardize", f.standardize}};
}

struct PreparedData {
  DatasetEmbedding embedding;
  std::optional<LabeledDataset> dataset;
  CvConfig config;
};

PreparedData prepare_cv(const CvFlags& f) {
  PreparedData p;
  p.config.outer_folds = f.outer;
  p.config.inner_folds = f.inner;
  p.config.c_grid = parse_grid(f.grid);
  p.config.seed = f.seed;
  p.config.standardize = f.standardize;
  const auto loaded = load_manifest_networks(f.manifest);
  p.embedding = embed_dataset(loaded.networks, f.ref_size);
  p.dataset.emplace(p.embedding.vectors, loaded.labels);
  return p;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Topological classification of weighted networks via "
               "persistence barcodes of the graph filtration"};
  app.name("topvs");
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  // decompose
  std::string dec_input, dec_out;
  NetworkInput dec_in;
  auto* dec = app.add_subcommand("decompose", "Birth and death sets as JSON");
  dec->add_option("network", dec_input, "Network file")->required();
  add_network_flags(dec, dec_in);
  dec->add_option("--out", dec_out, "Output path (default: stdout)");

  // betti
  std::string bet_input, bet_out;
  std::vector<double> bet_thresholds;
  NetworkInput bet_in;
  auto* bet = app.add_subcommand("betti", "Betti curves as CSV epsilon,beta0,beta1");
  bet->add_option("network", bet_input, "Network file")->required();
  add_network_flags(bet, bet_in);
  bet->add_option("--thresholds", bet_thresholds,
                  "Strictly ascending comma-separated thresholds (default: "
                  "below the smallest weight, then every distinct weight)")
      ->delimiter(',');
  bet->add_option("--out", bet_out, "Output path (default: stdout)");

  // dist
  std::string dist_a, dist_b, dist_p = "2", dist_out;
  std::optional<std::size_t> dist_ref;
  NetworkInput dist_in;
  auto* dist = app.add_subcommand(
      "dist", "Wasserstein distances between two networks or barcode JSON files");
  dist->add_option("first", dist_a, "Network file or decompose JSON")->required();
  dist->add_option("second", dist_b, "Network file or decompose JSON")->required();
  dist->add_option("--p", dist_p, "Wasserstein order: real >= 1 or inf");
  dist->add_option("--ref-size", dist_ref,
                   "Reference size (default: larger of the two networks)");
  add_network_flags(dist, dist_in);
  dist->add_option("--out", dist_out, "Output path (default: stdout)");

  // embed
  std::string emb_manifest, emb_out;
  std::vector<std::string> emb_files;
  std::optional<std::size_t> emb_ref;
  NetworkInput emb_in;
  auto* emb = app.add_subcommand(
      "embed", "Topological vectors as CSV rows label,ref_size,b_1..b_m,d_1..d_n");
  emb->add_option("networks", emb_files, "Network files");
  emb->add_option("--manifest", emb_manifest, "Dataset manifest (JSON)");
  emb->add_option("--ref-size", emb_ref,
                  "Reference size (default: largest network)");
  add_network_flags(emb, emb_in);
  emb->add_option("--out", emb_out, "Output path (default: stdout)");

  // mean
  std::string mean_manifest, mean_label, mean_out;
  std::vector<std::string> mean_files;
  std::optional<std::size_t> mean_ref;
  NetworkInput mean_in;
  auto* mean = app.add_subcommand("mean", "Barcode mean as JSON");
  mean->add_option("networks", mean_files, "Network files");
  mean->add_option("--manifest", mean_manifest, "Dataset manifest (JSON)");
  mean->add_option("--label", mean_label,
                   "Average only networks with this label (default: all)");
  mean->add_option("--ref-size", mean_ref,
                   "Reference size (default: largest network)");
  add_network_flags(mean, mean_in);
  mean->add_option("--out", mean_out, "Output path (default: stdout)");

  // simulate
  ModularSpec sim_spec;
  std::string sim_out;
  auto* sim = app.add_subcommand("simulate", "Random modular network as edge-list CSV");
  sim->add_option("--nodes", sim_spec.node_count, "Node count")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
  sim->add_option("--modules", sim_spec.module_count, "Module count")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
  sim->add_option("--r", sim_spec.within_probability,
                  "Within-module connection probability")
      ->check(CLI::Range(0.0, 1.0));
  sim->add_option("--seed", sim_spec.seed, "RNG seed");
  sim->add_option("--out", sim_out, "Output path (default: stdout)");

  // simulate-benchmark
  BenchmarkSpec bench_spec;
  std::string bench_dir;
  auto* bench = app.add_subcommand(
      "simulate-benchmark",
      "Labeled modular networks plus a manifest for classify/permtest");
  bench->add_option("--sizes", bench_spec.sizes, "Comma-separated node counts")
      ->delimiter(',');
  bench->add_option("--modules", bench_spec.module_counts,
                    "Comma-separated module count per group")
      ->delimiter(',');
  bench->add_option("--r", bench_spec.within_probability,
                    "Within-module connection probability")
      ->check(CLI::Range(0.0, 1.0));
  bench->add_option("--per-group", bench_spec.per_group,
                    "Networks per group, split evenly over sizes")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_spec.seed, "RNG seed");
  bench->add_option("--out-dir", bench_dir, "Output directory")->required();

  // classify
  CvFlags cls_flags;
  auto* cls = app.add_subcommand("classify", "Nested cross-validated linear SVM");
  add_cv_flags(cls, cls_flags);

  // permtest
  CvFlags perm_flags;
  std::size_t perm_trials = 1000;
  std::size_t perm_threads = 1;
  auto* perm = app.add_subcommand("permtest", "Permutation test of nested CV accuracy");
  add_cv_flags(perm, perm_flags);
  perm->add_option("--trials", perm_trials, "Label permutations")
      ->check(CLI::PositiveNumber);
  perm->add_option("--threads", perm_threads, "Worker threads")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (dec->parsed()) {
      const auto bd = decompose(load_input(dec_input, dec_in));
      json edges = json::array();
      for (const auto& e : bd.tree_edges) edges.push_back({e.i, e.j, e.w});
      json doc{{"config", config_block("decompose",
                                       {{"network", dec_input},
                                        {"format", dec_in.format},
                                        {"nodes", dec_in.nodes ? json(*dec_in.nodes)
                                                               : json(nullptr)}})},
               {"node_count", bd.node_count},
               {"births", bd.births},
               {"deaths", bd.deaths},
               {"tree_edges", edges}};
      emit(dump(doc), dec_out, out);
    } else if (bet->parsed()) {
      const auto net = load_input(bet_input, bet_in);
      std::vector<double> thresholds = bet_thresholds;
      if (thresholds.empty()) {
        for (const auto& e : net.edges()) thresholds.push_back(e.w);
        std::sort(thresholds.begin(), thresholds.end());
        thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                         thresholds.end());
        thresholds.insert(thresholds.begin(), thresholds.front() - 1.0);
      }
      BettiCurve curve;
      try {
        curve = betti_curves(net, thresholds);
      } catch (const InputError& e) {
        throw UsageError(std::string("--thresholds: ") + e.what());
      }
      std::ostringstream csv;
      csv << "epsilon,beta0,beta1\n";
      for (std::size_t k = 0; k < curve.thresholds.size(); ++k) {
        csv << format_double(curve.thresholds[k]) << ',' << curve.beta0[k]
            << ',' << curve.beta1[k] << '\n';
      }
      emit(csv.str(), bet_out, out);
    } else if (dist->parsed()) {
      const auto p = parse_p(dist_p);
      const auto a = load_barcode(dist_a, dist_in);
      const auto b = load_barcode(dist_b, dist_in);
      const auto largest = std::max(a.node_count, b.node_count);
      const auto ref = dist_ref.value_or(largest);
      if (ref < largest) {
        throw UsageError("--ref-size " + std::to_string(ref) +
                         " is below the larger network size " +
                         std::to_string(largest));
      }
      const auto [m, n] = counts_for_size(ref);
      const double w_births = wasserstein_approx(
          SortedValueSet(a.births), SortedValueSet(b.births), m, p);
      const double w_deaths = wasserstein_approx(
          SortedValueSet(a.deaths), SortedValueSet(b.deaths), n, p);
      const double d_product = product_metric(embed(a, ref), embed(b, ref), p);
      json doc{{"config", config_block("dist",
                                       {{"first", dist_a},
                                        {"second", dist_b},
                                        {"p", p.to_string()},
                                        {"ref_size", ref}})},
               {"w_births", w_births},
               {"w_deaths", w_deaths},
               {"d_product", d_product},
               {"exact", a.node_count == b.node_count && ref == a.node_count}};
      emit(dump(doc), dist_out, out);
    } else if (emb->parsed()) {
      const auto c = load_collection(emb_manifest, emb_files, emb_in);
      const auto e = embed_dataset(c.networks, emb_ref);
      std::ostringstream csv;
      const auto [m, n] = counts_for_size(e.ref_size);
      csv << "label,ref_size";
      for (std::size_t k = 1; k <= m; ++k) csv << ",b_" << k;
      for (std::size_t k = 1; k <= n; ++k) csv << ",d_" << k;
      csv << '\n';
      for (std::size_t r = 0; r < e.vectors.size(); ++r) {
        csv << c.labels[r] << ',' << e.ref_size;
        for (const double v : e.vectors[r].concatenated()) {
          csv << ',' << format_double(v);
        }
        csv << '\n';
      }
      emit(csv.str(), emb_out, out);
    } else if (mean->parsed()) {
      auto c = load_collection(mean_manifest, mean_files, mean_in);
      const auto e = embed_dataset(c.networks, mean_ref);
      std::vector<TopologicalVector> chosen;
      for (std::size_t r = 0; r < e.vectors.size(); ++r) {
        if (mean_label.empty() || c.labels[r] == mean_label) {
          chosen.push_back(e.vectors[r]);
        }
      }
      if (chosen.empty()) {
        throw UsageError("--label '" + mean_label + "' matches no network");
      }
      const auto avg = barcode_mean(chosen);
      const auto [births, deaths] = reconstruct_barcode(avg);
      json doc{{"config", config_block("mean",
                                       {{"manifest", mean_manifest},
                                        {"networks", mean_files},
                                        {"label", mean_label},
                                        {"ref_size", mean_ref ? json(*mean_ref)
                                                              : json(nullptr)}})},
               {"embedding", embedding_meta(e)},
               {"count", chosen.size()},
               {"births", births},
               {"deaths", deaths}};
      emit(dump(doc), mean_out, out);
    } else if (sim->parsed()) {
      try {
        validate(sim_spec);
      } catch (const InputError& e) {
        throw UsageError(e.what());
      }
      std::ostringstream csv;
      csv << "# simulate nodes=" << sim_spec.node_count
          << " modules=" << sim_spec.module_count
          << " r=" << format_double(sim_spec.within_probability)
          << " seed=" << sim_spec.seed << " (" << version_string() << ")\n";
      write_edge_list_csv(csv, generate(sim_spec));
      emit(csv.str(), sim_out, out);
    } else if (bench->parsed()) {
      std::vector<BenchmarkNetwork> nets;
      try {
        for (const auto size : bench_spec.sizes) {
          for (const auto m : bench_spec.module_counts) {
            validate(ModularSpec{size, m, bench_spec.within_probability, 0});
          }
        }
        nets = generate_benchmark(bench_spec);
      } catch (const InputError& e) {
        throw UsageError(e.what());
      }
      const fs::path dir(bench_dir);
      fs::create_directories(dir);
      std::vector<ManifestEntry> entries;
      for (std::size_t k = 0; k < nets.size(); ++k) {
        char name[64];
        std::snprintf(name, sizeof name, "net_%04zu_%s.csv", k,
                      nets[k].label.c_str());
        std::ofstream file(dir / name, std::ios::binary);
        if (!file) throw InputError("cannot write " + (dir / name).string());
        file << "# modules=" << nets[k].spec.module_count
             << " r=" << format_double(nets[k].spec.within_probability)
             << " seed=" << nets[k].spec.seed << '\n';
        write_edge_list_csv(file, nets[k].network);
        entries.push_back({dir / name, NetworkFormat::EdgeList,
                           nets[k].network.node_count(), nets[k].label});
      }
      const auto manifest = dir / "manifest.json";
      std::ofstream(manifest, std::ios::binary) << manifest_to_json(entries, dir);
      json doc{{"config", config_block("simulate-benchmark",
                                       {{"sizes", bench_spec.sizes},
                                        {"modules", bench_spec.module_counts},
                                        {"r", bench_spec.within_probability},
                                        {"per_group", bench_spec.per_group},
                                        {"seed", bench_spec.seed},
                                        {"out_dir", bench_dir}})},
               {"manifest", manifest.generic_string()},
               {"network_count", nets.size()}};
      out << dump(doc);
    } else if (cls->parsed()) {
      const auto prepared = prepare_cv(cls_flags);
      const auto report = nested_cv(*prepared.dataset, prepared.config);
      json doc = cv_json(report);
      doc["config"] = config_block("classify", cv_flags_json(cls_flags));
      doc["embedding"] = embedding_meta(prepared.embedding);
      emit(dump(doc), cls_flags.out, out);
    } else if (perm->parsed()) {
      const auto prepared = prepare_cv(perm_flags);
      const auto report = permutation_test(*prepared.dataset, perm_trials,
                                           prepared.config, perm_threads);
      auto flags = cv_flags_json(perm_flags);
      flags["trials"] = perm_trials;
      flags["threads"] = perm_threads;
      json doc{{"config", config_block("permtest", flags)},
               {"embedding", embedding_meta(prepared.embedding)},
               {"observed_accuracy", report.observed_accuracy},
               {"permutation_accuracies", report.permutation_accuracies},
               {"exceed_count", report.exceed_count},
               {"p_value", report.p_value},
               {"permutation_count", report.permutation_count},
               {"rng_seed", report.rng_seed},
               {"observed", cv_json(report.observed)}};
      emit(dump(doc), perm_flags.out, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const fs::filesystem_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace topvs::cli
