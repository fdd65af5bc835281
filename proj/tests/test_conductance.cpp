#include <doctest.h>

#include "lemon/conductance.hpp"
#include "lemon/planted.hpp"
#include "lemon/sampler.hpp"
#include "lemon/seeding.hpp"
#include "lemon/spectra.hpp"
#include "test_util.hpp"

using namespace lemon;
using namespace lemon::testing;

TEST_CASE("conductance examples") {
  const Graph c4 = cycle_graph(4);
  CHECK(conductance(c4, std::vector<Vertex>{0, 1}) == 0.5);
  CHECK(conductance(c4, std::vector<Vertex>{0, 1, 2, 3}) == 0.0);
  CHECK(conductance(complete_graph(3), std::vector<Vertex>{0}) == 1.0);
  CHECK(conductance(make_graph({{0, 1}}, 3), std::vector<Vertex>{2}) == 1.0);
  CHECK_THROWS(conductance(c4, std::vector<Vertex>{}));
}

TEST_CASE("sweep examples") {
  const Graph c4 = cycle_graph(4);
  const auto scores = ScoreVector::from_values({4, 3, 2, 1});
  const auto curve = sweep(c4, scores, 1, 3);
  CHECK(curve.sizes == std::vector<int>{1, 2, 3});
  CHECK(curve.conductances[0] == 1.0);
  CHECK(curve.conductances[1] == 0.5);
  CHECK(curve.conductances[2] == doctest::Approx(1.0 / 3.0));
  CHECK(curve.argmin_size == 3);

  const auto flat = ScoreVector::from_values({1, 1, 1, 1});
  const auto one = sweep(c4, flat, 1, 1);
  CHECK(one.sizes.size() == 1);
  CHECK(one.argmin_size == 1);

  CHECK_THROWS(sweep(c4, scores, 0, 2));
  CHECK_THROWS(sweep(c4, scores, 3, 2));
  CHECK_THROWS(sweep(c4, scores, 1, 5));
}

TEST_CASE("full set is reported but never selected") {
  const Graph c4 = cycle_graph(4);
  const auto scores = ScoreVector::from_values({4, 3, 2, 1});
  const auto curve = sweep(c4, scores, 2, 4);
  CHECK(curve.conductances.back() == 0.0);
  CHECK(curve.argmin_size == 3);
}

TEST_CASE("argmin ties resolve to the smaller size") {
  // Two disjoint edges: prefixes {0,1} and {0,1,2,3} vs {0,1,2}.
  const Graph g = make_graph({{0, 1}, {2, 3}, {4, 5}}, 6);
  const auto scores = ScoreVector::from_values({6, 5, 4, 3, 2, 1});
  const auto curve = sweep(g, scores, 1, 5);
  CHECK(curve.conductances[1] == 0.0);
  CHECK(curve.conductances[3] == 0.0);
  CHECK(curve.argmin_size == 2);
}

TEST_CASE("incremental sweep equals recomputation exactly") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(seed);
    const Vertex n = 2 + static_cast<Vertex>(rng.uniform_index(49));
    const Graph g = random_graph(n, 0.05 + 0.3 * rng.uniform_real(), seed, seed % 3 != 0);
    std::vector<double> values(static_cast<std::size_t>(n));
    for (auto& v : values) v = static_cast<double>(rng.uniform_index(5));
    const auto scores = ScoreVector::from_values(values);
    const auto curve = sweep(g, scores, 1, n);
    for (std::size_t i = 0; i < curve.sizes.size(); ++i) {
      std::vector<Vertex> prefix(scores.order.begin(), scores.order.begin() + curve.sizes[i]);
      CHECK(curve.conductances[i] == brute_conductance(g, prefix));
      CHECK(curve.conductances[i] == conductance(g, prefix));
      CHECK(curve.conductances[i] >= 0.0);
      CHECK(curve.conductances[i] <= 1.0);
    }
  }
}

TEST_CASE("stop_decision examples") {
  CHECK(stop_decision(std::vector<double>{0.5, 0.4, 0.45}) == std::optional<std::size_t>{1});
  CHECK_FALSE(stop_decision(std::vector<double>{0.5, 0.4, 0.3}).has_value());
  CHECK(stop_decision(std::vector<double>{0.5, 0.5, 0.6}) == std::optional<std::size_t>{1});
  CHECK_FALSE(stop_decision(std::vector<double>{0.5}).has_value());
  CHECK(stop_decision(std::vector<double>{0.3, 0.2, 0.2, 0.2, 0.25}) == std::optional<std::size_t>{3});
}

TEST_CASE("planted sweep finds the planted size") {
  PlantedSpec spec;
  spec.groups = {{100, 0.9}, {100, 0.9}};
  spec.background_p = 0.01;
  spec.rng_seed = 21;
  const auto pg = generate_planted(spec);
  const auto& a = pg.truth.communities[0];
  std::vector<double> values(static_cast<std::size_t>(pg.graph.size()), 0.0);
  // Scores from the normalized-adjacency-iterated seed distribution.
  const auto seeds = select_seeds(pg.graph, a, SeedStrategy::random, 3, 5);
  const NormalizedAdjacency op(pg.graph);
  for (Vertex s : seeds.vertices) values[s] = 1.0;
  for (int step = 0; step < 3; ++step) values = op.apply(values);
  const auto curve = sweep(pg.graph, ScoreVector::from_values(values), 20, 150);
  CHECK(curve.argmin_size >= 95);
  CHECK(curve.argmin_size <= 105);
}
