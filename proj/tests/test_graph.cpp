#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "support.hpp"
#include "topvs/error.hpp"
#include "topvs/graph.hpp"

using namespace topvs;

TEST_SUITE_BEGIN("graph");

TEST_CASE("from_edge_list") {
  SUBCASE("single edge") {
    const auto net = from_edge_list({{0, 1, 6.0}}, 2);
    CHECK(net.node_count() == 2);
    CHECK(net.weight(0, 1) == 6.0);
    CHECK(net.weight(1, 0) == 6.0);
    CHECK(net.weight(0, 0) == 0.0);
  }

  SUBCASE("complete K4") {
    const auto net = testing::k4();
    CHECK(net.edge_count() == 6);
    CHECK(net.weight(0, 1) == 6);
    CHECK(net.weight(3, 2) == 1);
    CHECK(testing::sorted_weights(net) == std::vector<double>{1, 2, 3, 4, 5, 6});
  }

  SUBCASE("unlisted pairs are zero") {
    const auto net = from_edge_list({{0, 2, 1.5}}, 3);
    CHECK(net.weight(0, 1) == 0.0);
    CHECK(net.weight(1, 2) == 0.0);
  }

  SUBCASE("duplicate pair names the pair") {
    try {
      from_edge_list({{0, 1, 1}, {1, 0, 2}}, 2);
      FAIL("expected rejection");
    } catch (const InputError& e) {
      CHECK(std::string(e.what()).find("(0, 1)") != std::string::npos);
    }
  }

  SUBCASE("self-loop and out of range") {
    CHECK_THROWS_AS(from_edge_list({{1, 1, 1}}, 2), InputError);
    CHECK_THROWS_AS(from_edge_list({{0, 2, 1}}, 2), InputError);
    CHECK_THROWS_AS(from_edge_list({}, 1), InputError);
  }

  SUBCASE("negative weights are kept") {
    CHECK(from_edge_list({{0, 1, -2.5}}, 2).weight(0, 1) == -2.5);
  }
}

TEST_CASE("from_matrix rejects non-finite entries") {
  CHECK_THROWS_AS(WeightedNetwork::from_matrix(2, {0, NAN, NAN, 0}), InputError);
  CHECK_THROWS_AS(WeightedNetwork::from_matrix(2, {0, INFINITY, INFINITY, 0}),
                  InputError);
}

TEST_CASE("from_adjacency_text") {
  SUBCASE("two nodes") {
    const auto net = from_adjacency_text(std::string("0 1\n1 0"));
    CHECK(net.node_count() == 2);
    CHECK(net.weight(0, 1) == 1.0);
  }

  SUBCASE("asymmetric") {
    CHECK_THROWS_WITH_AS(from_adjacency_text(std::string("0 1\n2 0")),
                         doctest::Contains("asymmetric"), InputError);
  }

  SUBCASE("asymmetry within tolerance is accepted") {
    const auto net = from_adjacency_text(std::string("0 1\n1.0000000000000005 0"));
    CHECK(net.weight(1, 0) == net.weight(0, 1));
  }

  SUBCASE("diagonal") {
    const auto net = from_adjacency_text(std::string("1e-13 1\n1 0"));
    CHECK(net.weight(0, 0) == 0.0);
    CHECK_THROWS_WITH_AS(from_adjacency_text(std::string("0.5 1\n1 0")),
                         doctest::Contains("diagonal"), InputError);
  }

  SUBCASE("non-square reports counts") {
    CHECK_THROWS_WITH_AS(from_adjacency_text(std::string("0 1 2\n1 0 3")),
                         doctest::Contains("2 rows but row 1 has 3 columns"),
                         InputError);
  }

  SUBCASE("non-numeric token reports position") {
    CHECK_THROWS_WITH_AS(from_adjacency_text(std::string("0 1\nx 0")),
                         doctest::Contains("line 2, column 1"), InputError);
  }

  SUBCASE("K4 text equals the edge list") {
    const auto text = "0 6 5 3\n6 0 4 2\n5 4 0 1\n3 2 1 0\n";
    CHECK(from_adjacency_text(std::string(text)) == testing::k4());
  }
}

TEST_CASE("edge-list csv") {
  SUBCASE("comments, header and inferred node count") {
    std::istringstream in("# comment\ni,j,w\n0,1,6\n# another\n2,3,1\n");
    const auto net = parse_edge_list_csv(in);
    CHECK(net.node_count() == 4);
    CHECK(net.weight(1, 0) == 6);
    CHECK(net.weight(2, 3) == 1);
    CHECK(net.weight(0, 3) == 0);
  }

  SUBCASE("explicit node count") {
    std::istringstream in("i,j,w\n0,1,2\n");
    CHECK(parse_edge_list_csv(in, 5).node_count() == 5);
  }

  SUBCASE("string labels") {
    std::istringstream in("i,j,w\nfrontal,parietal,0.5\nparietal,occipital,0.25\n");
    const auto net = parse_edge_list_csv(in);
    CHECK(net.node_count() == 3);
    CHECK(net.node_labels() ==
          std::vector<std::string>{"frontal", "parietal", "occipital"});
    CHECK(net.weight(1, 2) == 0.25);
  }

  SUBCASE("missing header") {
    std::istringstream in("0,1,2\n");
    CHECK_THROWS_AS(parse_edge_list_csv(in), InputError);
  }

  SUBCASE("bad weight") {
    std::istringstream in("i,j,w\n0,1,abc\n");
    CHECK_THROWS_WITH_AS(parse_edge_list_csv(in), doctest::Contains("line 2"),
                         InputError);
  }
}

TEST_CASE("serialization round trip is bit exact") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 2 + trial % 9;
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (gen() % 3 != 0) edges.push_back({i, j, dist(gen)});
      }
    }
    const auto net = from_edge_list(edges, n);

    std::stringstream csv;
    write_edge_list_csv(csv, net);
    CHECK(parse_edge_list_csv(csv, n) == net);

    std::stringstream adj;
    write_adjacency_text(adj, net);
    CHECK(from_adjacency_text(adj) == net);
  }
}

TEST_CASE("relabeled permutes rows and columns") {
  const auto net = testing::k4();
  const auto moved = net.relabeled({3, 2, 1, 0});
  CHECK(moved.weight(3, 2) == net.weight(0, 1));
  CHECK(testing::sorted_weights(moved) == testing::sorted_weights(net));
  CHECK_THROWS_AS(net.relabeled({0, 0, 1, 2}), InputError);
}

TEST_CASE("manifest") {
  const std::filesystem::path data = TOPVS_TEST_DATA;

  SUBCASE("parse resolves relative paths") {
    const auto entries = read_manifest(data / "manifest.json");
    REQUIRE(entries.size() == 4);
    CHECK(entries[0].path == data / "k4.csv");
    CHECK(entries[0].format == NetworkFormat::EdgeList);
    CHECK(entries[0].node_count == 4u);
    CHECK(entries[3].format == NetworkFormat::Adjacency);
    CHECK(entries[3].label == "b");
  }

  SUBCASE("load networks") {
    const auto loaded = load_manifest_networks(data / "manifest.json");
    CHECK(loaded.networks[0] == loaded.networks[3]);
    CHECK(loaded.labels == std::vector<std::string>{"a", "a", "b", "b"});
  }

  SUBCASE("edgelist records need node_count") {
    CHECK_THROWS_WITH_AS(
        parse_manifest(R"([{"path":"x.csv","format":"edgelist","label":"a"}])", "."),
        doctest::Contains("node_count"), InputError);
  }

  SUBCASE("unknown format and bad json") {
    CHECK_THROWS_AS(
        parse_manifest(R"([{"path":"x","format":"gml","label":"a"}])", "."),
        InputError);
    CHECK_THROWS_AS(parse_manifest("{", "."), InputError);
    CHECK_THROWS_AS(parse_manifest(R"({"path":"x"})", "."), InputError);
  }

  SUBCASE("serialize and parse back") {
    std::vector<ManifestEntry> entries{
        {data / "k4.csv", NetworkFormat::EdgeList, 4, "a"},
        {data / "k4_adjacency.txt", NetworkFormat::Adjacency, std::nullopt, "b"}};
    const auto back = parse_manifest(manifest_to_json(entries, data), data);
    REQUIRE(back.size() == 2);
    CHECK(back[0].path == entries[0].path);
    CHECK(back[1].node_count == std::nullopt);
  }

  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_network(data / "nope.csv", NetworkFormat::EdgeList),
                    InputError);
  }
}

TEST_SUITE_END();
