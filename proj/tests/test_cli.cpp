#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"
#include "topvs/graph.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "topvs");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = topvs::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
  return (fs::path(TOPVS_TEST_DATA) / name).string();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("topvs_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("decompose") {
  const auto r = run({"decompose", data("k4.csv")});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["births"] == json({3.0, 5.0, 6.0}));
  CHECK(doc["deaths"] == json({1.0, 2.0, 4.0}));
  CHECK(doc["node_count"] == 4);
  CHECK(doc["tree_edges"].size() == 3);
  CHECK(doc["config"]["subcommand"] == "decompose");
  CHECK(doc["config"]["version"] == topvs::cli::version_string());

  const auto adj = run({"decompose", data("k4_adjacency.txt")});
  REQUIRE(adj.code == 0);
  CHECK(json::parse(adj.out)["births"] == doc["births"]);
}

TEST_CASE("dist on barcode files") {
  const auto r = run({"dist", data("g1_barcode.json"), data("g2_barcode.json"), "--p", "1"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(std::abs(doc["w_births"].get<double>() - 1.5) < 1e-12);
  CHECK(std::abs(doc["w_deaths"].get<double>() - 2.5 / 3) < 1e-12);
  CHECK(std::abs(doc["d_product"].get<double>() - 7.0) < 1e-12);
  CHECK(doc["exact"] == true);
  CHECK(doc["config"]["flags"]["p"] == "1");

  const auto from_nets = run({"dist", data("g1.csv"), data("g2.csv"), "--p", "1"});
  REQUIRE(from_nets.code == 0);
  CHECK(json::parse(from_nets.out)["w_births"] == doc["w_births"]);

  const auto up = run({"dist", data("g1.csv"), data("g2.csv"), "--ref-size", "6"});
  REQUIRE(up.code == 0);
  CHECK(json::parse(up.out)["exact"] == false);
  CHECK(run({"dist", data("g1.csv"), data("g2.csv"), "--p", "inf"}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"decompose", data("missing.csv")}).code == 3);
  CHECK(run({"decompose"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"dist", data("g1.csv"), data("g2.csv"), "--p", "0.5"}).code == 2);
  CHECK(run({"dist", data("g1.csv"), data("g2.csv"), "--p", "abc"}).code == 2);
  CHECK(run({"dist", data("g1.csv"), data("g2.csv"), "--ref-size", "3"}).code == 2);
  CHECK(run({"simulate", "--nodes", "90", "--modules", "4"}).code == 2);
  CHECK(run({"decompose", data("k4.csv"), "--format", "xml"}).code == 2);
  CHECK(run({"classify"}).code == 2);

  const auto dir = scratch("bad");
  std::ofstream(dir / "bad.txt") << "0 1\n2 0\n";
  const auto r = run({"decompose", (dir / "bad.txt").string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("input error") != std::string::npos);
}

TEST_CASE("help and version") {
  const auto h = run({"classify", "--help"});
  CHECK(h.code == 0);
  for (const char* flag : {"--manifest", "--outer", "--inner", "--grid", "--seed",
                           "--ref-size", "--standardize", "--out"}) {
    CHECK(h.out.find(flag) != std::string::npos);
  }
  const auto p = run({"permtest", "--help"});
  CHECK(p.out.find("--trials") != std::string::npos);
  CHECK(p.out.find("1000") != std::string::npos);
  const auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find("0.1.0") != std::string::npos);
}

TEST_CASE("betti") {
  const auto r = run({"betti", data("k4.csv"), "--thresholds", "0.5,3.5,6.5"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "epsilon,beta0,beta1\n0.5,1,3\n3.5,2,1\n6.5,4,0\n");
  const auto d = run({"betti", data("k4.csv")});
  REQUIRE(d.code == 0);
  CHECK(d.out.rfind("epsilon,beta0,beta1\n0,1,3\n", 0) == 0);
  CHECK(run({"betti", data("k4.csv"), "--thresholds", "2,1"}).code == 2);
}

TEST_CASE("simulate is reproducible") {
  const std::vector<std::string> args{"simulate", "--nodes", "12", "--modules",
                                      "3", "--r", "0.7", "--seed", "5"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream in(a.out);
  const auto net = topvs::parse_edge_list_csv(in, 12);
  CHECK(net.node_count() == 12);
  auto other = args;
  other.back() = "6";
  CHECK(run(other).out != a.out);
}

TEST_CASE("embed and mean") {
  const auto e = run({"embed", "--manifest", data("manifest.json")});
  REQUIRE(e.code == 0);
  std::istringstream lines(e.out);
  std::string header, row;
  std::getline(lines, header);
  CHECK(header == "label,ref_size,b_1,b_2,b_3,d_1,d_2,d_3");
  std::getline(lines, row);
  CHECK(row == "a,4,3,5,6,1,2,4");

  const auto m = run({"mean", "--manifest", data("manifest.json"), "--label", "a"});
  REQUIRE(m.code == 0);
  const auto doc = json::parse(m.out);
  CHECK(doc["count"] == 2);
  CHECK(doc["births"] == json({3.0, 4.5, 5.5}));
  CHECK(doc["deaths"] == json({1.0, 2.0, 3.25}));
  CHECK(run({"mean", "--manifest", data("manifest.json"), "--label", "zzz"}).code == 2);
}

TEST_CASE("simulate-benchmark feeds classify and permtest") {
  const auto dir = scratch("bench");
  const auto b = run({"simulate-benchmark", "--sizes", "12", "--modules", "3,4",
                      "--r", "0.9", "--per-group", "8", "--seed", "2", "--out-dir",
                      dir.string()});
  REQUIRE(b.code == 0);
  CHECK(json::parse(b.out)["network_count"] == 16);
  const auto manifest = (dir / "manifest.json").string();
  REQUIRE(fs::exists(manifest));

  const auto c = run({"classify", "--manifest", manifest, "--inner", "3",
                      "--seed", "1"});
  REQUIRE(c.code == 0);
  const auto doc = json::parse(c.out);
  CHECK(doc["config"]["subcommand"] == "classify");
  CHECK(doc["config"]["flags"]["inner"] == 3);
  CHECK(doc.contains("accuracy"));
  CHECK(doc["embedding"]["ref_size"] == 12);

  const auto out = dir / "perm.json";
  const auto p = run({"permtest", "--manifest", manifest, "--inner", "3",
                      "--trials", "5", "--out", out.string()});
  REQUIRE(p.code == 0);
  std::ifstream in(out);
  const auto perm = json::parse(in);
  CHECK(perm["permutation_accuracies"].size() == 5);
  CHECK(perm["config"]["flags"]["trials"] == 5);

  CHECK(run({"classify", "--manifest", manifest, "--grid", "1,-2"}).code == 2);
  CHECK(run({"permtest", "--manifest", manifest, "--trials", "0"}).code == 2);
}

TEST_SUITE_END();
