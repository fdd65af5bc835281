#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lemon/io.hpp"
#include "test_util.hpp"

using namespace lemon;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("lemon_io_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("edge list parsing skips comments and accepts commas") {
  std::istringstream in("# header\n\n10 20\n20\t30\n  30,10\n# end\n");
  const auto pairs = read_edge_pairs(in);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[2] == std::pair<std::int64_t, std::int64_t>{30, 10});
}

TEST_CASE("malformed edge lines are data errors") {
  std::istringstream three("1 2 3\n");
  CHECK_THROWS_AS(read_edge_pairs(three), DataError);
  std::istringstream word("1 x\n");
  CHECK_THROWS_WITH_AS(read_edge_pairs(word), "line 1: invalid vertex id 'x'", DataError);
  std::istringstream negative("1 -2\n");
  CHECK_THROWS_AS(read_edge_pairs(negative), DataError);
}

TEST_CASE("community lines") {
  std::istringstream in("# c\n1 2 3\n\n4\t5\n");
  const auto lines = read_community_lines(in);
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] == std::vector<std::int64_t>{4, 5});
}

TEST_CASE("load_dataset remaps sparse ids and keeps truth-only vertices") {
  const auto g = temp_file("g.txt", "100 200\n200 300\n300 100\n300 5000\n");
  const auto t = temp_file("t.txt", "100 200 300\n5000 7000\n");
  const auto ds = load_dataset(g, t);
  CHECK(ds.graph.size() == 5);
  CHECK(ds.ids.external == std::vector<std::int64_t>{100, 200, 300, 5000, 7000});
  CHECK(ds.graph.degree(*ds.ids.find(7000)) == 0);
  CHECK(ds.graph.edge_count() == 4);
  REQUIRE(ds.truth.has_value());
  CHECK(ds.truth->communities[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(ds.truth->communities[1] == std::vector<Vertex>{3, 4});

  const auto only_graph = load_dataset(g);
  CHECK(only_graph.graph.size() == 4);
  CHECK_FALSE(only_graph.truth.has_value());
}

TEST_CASE("load_dataset errors") {
  CHECK_THROWS_AS(load_dataset("/nonexistent/graph.txt"), DataError);
  const auto empty = temp_file("empty.txt", "# nothing\n");
  CHECK_THROWS_WITH_AS(load_dataset(empty), doctest::Contains("empty graph"), DataError);
}

TEST_CASE("map_communities lists unknown ids") {
  const auto ids = IdMap::from_ids({5, 9, 12});
  CHECK(map_communities({{9, 5, 5}}, ids) == std::vector<std::vector<Vertex>>{{0, 1}});
  CHECK_THROWS_WITH_AS(map_communities({{5, 40}, {41, 40}}, ids), "community ids not in graph: 40 41", DataError);
}

TEST_CASE("written files read back to the same graph") {
  const Graph g = lemon::testing::random_graph(40, 0.1, 3);
  const auto ids = IdMap::identity(g.size());
  std::ostringstream edges, comms;
  write_edge_list(edges, g, ids);
  write_communities(comms, {{0, 3, 5}, {7}}, ids);
  std::istringstream edges_in(edges.str());
  const auto pairs = read_edge_pairs(edges_in);
  CHECK(static_cast<std::int64_t>(pairs.size()) == g.edge_count());
  for (const auto& [a, b] : pairs) CHECK(g.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
  CHECK(comms.str() == "0\t3\t5\n7\n");
}
