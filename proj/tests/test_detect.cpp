#include <doctest.h>

#include "lemon/conductance.hpp"
#include "lemon/detect.hpp"
#include "lemon/planted.hpp"
#include "test_util.hpp"

using namespace lemon;
using namespace lemon::testing;

namespace {

LemonParams planted_params(SizeMode mode) {
  LemonParams p = LemonParams::real_preset();
  p.mode = mode;
  p.avg_community_size = 173;
  return p;
}

}  // namespace

TEST_CASE("parameter validation and presets") {
  LemonParams p;
  CHECK_NOTHROW(p.validate());
  CHECK(p.walk_steps == 3);
  CHECK(p.dimension == 3);
  CHECK(p.expansion_step == 6);
  CHECK(p.max_iterations == 20);
  CHECK_FALSE(p.degree_normalized_p0);
  CHECK_THROWS(p.sample_target(3));
  p.avg_community_size = 25;
  CHECK(p.sample_target(3) == 250);
  CHECK(p.sample_target(400) == 400);

  LemonParams bad;
  bad.dimension = 0;
  CHECK_THROWS(bad.validate());
  bad = {};
  bad.size_min = 200;
  CHECK_THROWS(bad.validate());
  bad = {};
  bad.expansion_step = 0;
  CHECK_THROWS(bad.validate());

  const auto syn = LemonParams::synthetic_preset();
  CHECK(syn.degree_normalized_p0);
  CHECK(syn.combo_sweep.size() == 6);
  CHECK(syn.combo_sweep.front() == std::pair{2, 3});
  CHECK(syn.combo_sweep.back() == std::pair{3, 5});

  CHECK(parse_size_mode("gt") == SizeMode::ground_truth);
  CHECK(parse_size_mode("auto") == SizeMode::automatic);
  CHECK_THROWS(parse_size_mode("fast"));
}

TEST_CASE("reseed examples") {
  const Graph g = path_graph(10);
  const auto sub = induced_subgraph(g, std::vector<Vertex>{5, 7, 9});
  const auto scores = ScoreVector::from_values({0.9, 0.8, 0.1});
  const auto seeds = make_seed_set({9}, SeedStrategy::random);
  const auto next = reseed(scores, sub, seeds, 2);
  CHECK(next.vertices == std::vector<Vertex>{5, 7, 9});
  CHECK(next.origin == SeedStrategy::enlarged);

  const auto top = make_seed_set({5, 7}, SeedStrategy::random);
  CHECK(reseed(scores, sub, top, 2).vertices == top.vertices);
  CHECK_THROWS(reseed(scores, sub, seeds, 0));
}

TEST_CASE("ground-truth mode recovers a planted group and returns the best iteration") {
  const auto pg = generate_planted(PlantedSpec::figure1(31));
  const auto& a = pg.truth.communities[0];
  const auto seeds = select_seeds(pg.graph, a, SeedStrategy::random, 3, 8);
  const auto r = detect(pg.graph, seeds, planted_params(SizeMode::ground_truth), a);
  REQUIRE(r.score.has_value());
  CHECK(r.score->f1 >= 0.9);
  CHECK(r.chosen_size == static_cast<int>(r.members.size()));
  CHECK(r.members.size() == a.size());
  double best = 0.0;
  for (const auto& it : r.iterations) {
    const double f = f1_score(it.community, a).f1;
    CHECK(it.f1.value() == doctest::Approx(f));
    best = std::max(best, f);
  }
  CHECK(r.score->f1 == doctest::Approx(best));
  for (std::size_t i = 1; i < r.iterations.size(); ++i)
    CHECK(r.iterations[i].seed_size >= r.iterations[i - 1].seed_size);
  for (const auto& it : r.iterations) CHECK(it.subgraph_size >= it.seed_size);
}

TEST_CASE("ground-truth mode with oversized seeds runs once") {
  const auto pg = generate_planted(PlantedSpec::figure1(32));
  const auto& a = pg.truth.communities[0];
  const std::vector<Vertex> small(a.begin(), a.begin() + 10);
  std::vector<Vertex> many(a.begin(), a.begin() + 12);
  const auto r = detect(pg.graph, make_seed_set(many, SeedStrategy::user), planted_params(SizeMode::ground_truth),
                        std::span<const Vertex>(small));
  CHECK(r.iterations.size() == 1);
  CHECK(r.stop_reason == StopReason::size_exceeded);
}

TEST_CASE("auto mode follows the stop rule over its conductance history") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const auto pg = generate_planted(PlantedSpec::figure1(40 + s));
    const auto& a = pg.truth.communities[0];
    const auto seeds = select_seeds(pg.graph, a, SeedStrategy::random, 3, s);
    const auto r = detect(pg.graph, seeds, planted_params(SizeMode::automatic), a);
    std::vector<double> history;
    for (const auto& it : r.iterations) history.push_back(it.phi_min);
    const auto stop = stop_decision(history);
    if (r.stop_reason == StopReason::local_min) {
      REQUIRE(stop.has_value());
      CHECK(*stop == r.selected_iteration);
      CHECK(*stop + 2 == r.iterations.size());
    } else {
      CHECK_FALSE(stop.has_value());
    }
    const auto& chosen = r.iterations[r.selected_iteration];
    CHECK(r.members == chosen.community);
    CHECK(chosen.community_size == chosen.sweep_argmin);
    CHECK(r.chosen_size >= 20);
    CHECK(r.chosen_size <= 100);
    for (std::size_t i = 1; i < r.iterations.size(); ++i)
      CHECK(r.iterations[i].seed_size >= r.iterations[i - 1].seed_size);
  }
}

TEST_CASE("combo sweep keeps the best combination") {
  const auto pg = generate_planted(PlantedSpec::figure1(33));
  const auto& a = pg.truth.communities[1];
  const auto seeds = select_seeds(pg.graph, a, SeedStrategy::random, 8, 2);
  auto p = LemonParams::synthetic_preset();
  p.mode = SizeMode::ground_truth;
  p.avg_community_size = 173;
  const auto best = detect(pg.graph, seeds, p, a);
  for (const auto& [k, l] : p.combo_sweep) {
    auto single = p;
    single.combo_sweep.clear();
    single.walk_steps = k;
    single.dimension = l;
    CHECK(detect(pg.graph, seeds, single, a).score->f1 <= best.score->f1);
  }
  CHECK_THROWS(detect(pg.graph, seeds, [&] { auto q = p; q.mode = SizeMode::automatic; return q; }()));
}

TEST_CASE("detect input checks") {
  const auto pg = generate_planted(PlantedSpec::figure1(34));
  const auto p = planted_params(SizeMode::ground_truth);
  CHECK_THROWS(detect(pg.graph, make_seed_set({1}, SeedStrategy::user), p));
  CHECK_THROWS_AS(detect(pg.graph, make_seed_set({900}, SeedStrategy::user), planted_params(SizeMode::automatic)),
                  DataError);
  CHECK_THROWS(detect(pg.graph, SeedSet{}, planted_params(SizeMode::automatic)));
}

TEST_CASE("detection is deterministic") {
  const auto pg = generate_planted(PlantedSpec::figure1(35));
  const auto& a = pg.truth.communities[0];
  const auto seeds = select_seeds(pg.graph, a, SeedStrategy::random, 3, 4);
  const auto r1 = detect(pg.graph, seeds, planted_params(SizeMode::automatic), a);
  const auto r2 = detect(pg.graph, seeds, planted_params(SizeMode::automatic), a);
  CHECK(r1.members == r2.members);
  REQUIRE(r1.iterations.size() == r2.iterations.size());
  for (std::size_t i = 0; i < r1.iterations.size(); ++i) CHECK(r1.iterations[i].phi_min == r2.iterations[i].phi_min);
}
