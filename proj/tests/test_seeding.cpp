#include <doctest.h>

#include "lemon/planted.hpp"
#include "lemon/seeding.hpp"
#include "test_util.hpp"

using namespace lemon;
using namespace lemon::testing;

TEST_CASE("strategy names round-trip") {
  for (auto s : {SeedStrategy::high_degree, SeedStrategy::low_degree, SeedStrategy::triangle, SeedStrategy::random,
                 SeedStrategy::inward_ratio, SeedStrategy::user, SeedStrategy::enlarged})
    CHECK(parse_seed_strategy(to_string(s)) == s);
  CHECK_THROWS(parse_seed_strategy("best"));
}

TEST_CASE("select_seeds examples") {
  const Graph star = star_graph(4);
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK(select_seeds(star, all, SeedStrategy::high_degree, 1, seed).vertices == std::vector<Vertex>{0});

  const Graph tri = complete_graph(3);
  const auto t = select_seeds(tri, std::vector<Vertex>{0, 1, 2}, SeedStrategy::triangle, 3, 1);
  CHECK(t.vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(t.origin == SeedStrategy::triangle);
}

TEST_CASE("select_seeds errors") {
  const Graph p = path_graph(4);
  const std::vector<Vertex> all{0, 1, 2, 3};
  CHECK_THROWS_WITH(select_seeds(p, all, SeedStrategy::triangle, 3, 1), "no triangle");
  CHECK_THROWS(select_seeds(complete_graph(4), all, SeedStrategy::triangle, 2, 1));
  CHECK_THROWS(select_seeds(p, all, SeedStrategy::random, 5, 1));
  CHECK_THROWS(select_seeds(p, std::vector<Vertex>{}, SeedStrategy::random, 1, 1));
}

TEST_CASE("seeds stay inside the community and are deterministic") {
  const auto pg = generate_planted(PlantedSpec::figure1(3));
  const auto& c = pg.truth.communities[2];
  for (auto s : {SeedStrategy::high_degree, SeedStrategy::low_degree, SeedStrategy::triangle, SeedStrategy::random,
                 SeedStrategy::inward_ratio}) {
    const auto a = select_seeds(pg.graph, c, s, 3, 42);
    const auto b = select_seeds(pg.graph, c, s, 3, 42);
    CHECK(a.vertices == b.vertices);
    CHECK(a.size() == 3);
    for (Vertex v : a.vertices) CHECK(std::binary_search(c.begin(), c.end(), v));
    if (s == SeedStrategy::triangle) {
      CHECK(pg.graph.has_edge(a.vertices[0], a.vertices[1]));
      CHECK(pg.graph.has_edge(a.vertices[1], a.vertices[2]));
      CHECK(pg.graph.has_edge(a.vertices[0], a.vertices[2]));
    }
  }
}

TEST_CASE("degree strategies draw from the right third") {
  const auto pg = generate_planted(PlantedSpec::figure1(4));
  const auto& c = pg.truth.communities[2];
  std::vector<std::int64_t> degrees;
  for (Vertex v : c) degrees.push_back(pg.graph.degree(v));
  std::sort(degrees.begin(), degrees.end());
  const std::size_t third = (c.size() + 2) / 3;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (Vertex v : select_seeds(pg.graph, c, SeedStrategy::high_degree, 3, seed).vertices)
      CHECK(pg.graph.degree(v) >= degrees[c.size() - third]);
    for (Vertex v : select_seeds(pg.graph, c, SeedStrategy::low_degree, 3, seed).vertices)
      CHECK(pg.graph.degree(v) <= degrees[third - 1]);
  }
}

TEST_CASE("inward-ratio seeds clear the upper tercile and beat random seeds") {
  double inward_mean = 0.0, random_mean = 0.0;
  int samples = 0;
  for (std::uint64_t t = 0; t < 10; ++t) {
    const auto pg = generate_planted(PlantedSpec::figure1(50 + t));
    const auto& a = pg.truth.communities[0];
    std::vector<double> ratios;
    for (Vertex v : a) ratios.push_back(inward_ratio(pg.graph, v, a));
    std::sort(ratios.begin(), ratios.end());
    const double p67 = ratios[static_cast<std::size_t>(0.66 * static_cast<double>(a.size()))];
    const auto in = select_seeds(pg.graph, a, SeedStrategy::inward_ratio, 8, t);
    const auto rnd = select_seeds(pg.graph, a, SeedStrategy::random, 8, t);
    for (Vertex v : in.vertices) {
      CHECK(inward_ratio(pg.graph, v, a) >= p67);
      inward_mean += inward_ratio(pg.graph, v, a);
    }
    for (Vertex v : rnd.vertices) random_mean += inward_ratio(pg.graph, v, a);
    samples += 8;
  }
  CHECK(inward_mean / samples >= random_mean / samples);
}

TEST_CASE("enlarge_seed_set examples") {
  const Graph p3 = path_graph(3);
  CHECK(enlarge_seed_set(p3, make_seed_set({0, 2}, SeedStrategy::user)).vertices == std::vector<Vertex>{0, 1, 2});
  const auto adj = enlarge_seed_set(p3, make_seed_set({0, 1}, SeedStrategy::user));
  CHECK(adj.vertices == std::vector<Vertex>{0, 1});
  CHECK(adj.origin == SeedStrategy::user);
  const Graph p5 = path_graph(5);
  CHECK(enlarge_seed_set(p5, make_seed_set({0, 4}, SeedStrategy::user)).vertices == std::vector<Vertex>{0, 4});
  CHECK(enlarge_seed_set(p5, make_seed_set({2}, SeedStrategy::user)).vertices == std::vector<Vertex>{2});
  const auto grown = enlarge_seed_set(p5, make_seed_set({0, 3}, SeedStrategy::user));
  CHECK(grown.vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(grown.origin == SeedStrategy::enlarged);
}

TEST_CASE("enlargement keeps the seeds and the fixed-point option reaches a fixed point") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(seed);
    const Vertex n = 10 + static_cast<Vertex>(rng.uniform_index(41));
    const Graph g = random_graph(n, 0.06, seed, false);
    std::vector<Vertex> s;
    for (int i = 0; i < 4; ++i) s.push_back(static_cast<Vertex>(rng.uniform_index(n)));
    const auto seeds = make_seed_set(s, SeedStrategy::random);
    const auto once = enlarge_seed_set(g, seeds);
    CHECK(std::includes(once.vertices.begin(), once.vertices.end(), seeds.vertices.begin(), seeds.vertices.end()));
    const auto fixed = enlarge_seed_set(g, seeds, true);
    CHECK(enlarge_seed_set(g, fixed).vertices == fixed.vertices);
    CHECK(std::includes(fixed.vertices.begin(), fixed.vertices.end(), once.vertices.begin(), once.vertices.end()));
  }
}

TEST_CASE("seed_count_policy examples") {
  CHECK(seed_count_policy(DatasetKind::synthetic, 100, 0.08) == 8);
  CHECK(seed_count_policy(DatasetKind::real, 100) == 3);
  CHECK(seed_count_policy(DatasetKind::real, 5000) == 3);
  CHECK(seed_count_policy(DatasetKind::synthetic, 10, 0.02) == 1);
  CHECK_THROWS(seed_count_policy(DatasetKind::synthetic, 0));
}
