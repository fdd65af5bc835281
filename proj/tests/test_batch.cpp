#include <doctest.h>

#include "lemon/batch.hpp"
#include "lemon/planted.hpp"
#include "test_util.hpp"

using namespace lemon;
using namespace lemon::testing;

namespace {

struct Fixture {
  PlantedGraph pg = generate_planted(PlantedSpec::figure1(77));
  LemonParams params = [] {
    LemonParams p;
    p.mode = SizeMode::ground_truth;
    return p;
  }();
};

}  // namespace

TEST_CASE("single case has zero spread") {
  Fixture f;
  const auto r = run_batch(f.pg.graph, f.pg.truth, f.params, {}, 1, 5);
  REQUIRE(r.cases.size() == 1);
  CHECK(r.stddev == 0.0);
  CHECK(r.mean == r.cases[0].f1);
  CHECK(r.params.avg_community_size == 173);
}

TEST_CASE("batch statistics are recomputable and deterministic across thread counts") {
  Fixture f;
  BatchOptions one;
  one.threads = 1;
  BatchOptions many;
  many.threads = 4;
  const auto a = run_batch(f.pg.graph, f.pg.truth, f.params, one, 8, 21);
  const auto b = run_batch(f.pg.graph, f.pg.truth, f.params, many, 8, 21);
  REQUIRE(a.cases.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(a.cases[i].f1 == b.cases[i].f1);
    CHECK(a.cases[i].seeds == b.cases[i].seeds);
    CHECK(a.cases[i].community_index == b.cases[i].community_index);
    CHECK(a.cases[i].seeds.size() == 3);
    const auto& c = f.pg.truth.communities[a.cases[i].community_index];
    for (Vertex v : a.cases[i].seeds) CHECK(std::binary_search(c.begin(), c.end(), v));
  }
  const auto values = a.f1_values();
  const auto s = summarize(values);
  CHECK(a.mean == s.mean);
  CHECK(a.stddev == s.stddev);
  const auto c = run_batch(f.pg.graph, f.pg.truth, f.params, one, 8, 22);
  bool differs = false;
  for (std::size_t i = 0; i < 8; ++i) differs = differs || c.cases[i].seeds != a.cases[i].seeds;
  CHECK(differs);
}

TEST_CASE("mismatched ground truth lists the offending ids") {
  Fixture f;
  GroundTruth bad;
  bad.communities = {{1, 2, 700, 701}};
  CHECK_THROWS_WITH_AS(run_batch(f.pg.graph, bad, f.params, {}, 2, 1),
                       "ground truth references vertices not in graph: 700 701", DataError);
  CHECK_THROWS(run_batch(f.pg.graph, f.pg.truth, f.params, {}, 0, 1));
}

TEST_CASE("failing cases score zero and are flagged") {
  const Graph p = path_graph(30);
  GroundTruth truth;
  truth.communities = {{0, 1, 2, 3, 4, 5}};
  BatchOptions o;
  o.strategy = SeedStrategy::triangle;
  LemonParams params;
  params.size_min = 2;
  params.size_max = 10;
  const auto r = run_batch(p, truth, params, o, 3, 1);
  for (const auto& c : r.cases) {
    CHECK(c.failed);
    CHECK(c.f1 == 0.0);
    CHECK(c.error == "no triangle");
  }
  CHECK(r.mean == 0.0);
}

TEST_CASE("synthetic kind uses the seed ratio") {
  Fixture f;
  BatchOptions o;
  o.kind = DatasetKind::synthetic;
  const auto r = run_batch(f.pg.graph, f.pg.truth, f.params, o, 4, 3);
  for (const auto& c : r.cases) {
    const auto size = static_cast<int>(f.pg.truth.communities[c.community_index].size());
    CHECK(static_cast<int>(c.seeds.size()) == seed_count_policy(DatasetKind::synthetic, size));
  }
}

TEST_CASE("planted batch draws one fresh graph per case") {
  LemonParams p;
  p.mode = SizeMode::ground_truth;
  BatchOptions o;
  o.seed_count = 3;
  const auto r = run_planted_batch(PlantedSpec::figure1(0), 4, p, o, 0, 9);
  REQUIRE(r.cases.size() == 4);
  CHECK(r.params.avg_community_size == 173);
  for (const auto& c : r.cases) {
    CHECK(c.community_index == 0);
    CHECK_FALSE(c.failed);
  }
  CHECK(r.cases[0].rng_seed != r.cases[1].rng_seed);
  CHECK_THROWS(run_planted_batch(PlantedSpec::figure1(0), 4, p, o, 3, 9));
}

TEST_CASE("param_sweep visits walk steps outermost") {
  std::vector<std::pair<int, int>> seen;
  const auto rows = param_sweep(LemonParams::synthetic_preset(), {1, 2}, {3, 4, 5}, [&](const LemonParams& p) {
    CHECK(p.combo_sweep.empty());
    seen.emplace_back(p.walk_steps, p.dimension);
    BatchReport r;
    r.mean = p.walk_steps * 10 + p.dimension;
    return r;
  });
  REQUIRE(rows.size() == 6);
  CHECK(seen.front() == std::pair{1, 3});
  CHECK(seen[3] == std::pair{2, 3});
  CHECK(rows[4].mean == 24.0);
}
