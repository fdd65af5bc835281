#include "lemon/batch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lemon/kernels.hpp"
#include "lemon/rng.hpp"

namespace lemon {

std::vector<double> BatchReport::f1_values() const {
  std::vector<double> out;
  out.reserve(cases.size());
  for (const auto& c : cases) out.push_back(c.f1);
  return out;
}

namespace {

BatchCase run_case(const Graph& g, const GroundTruth& truth, const LemonParams& params,
                   const BatchOptions& options, std::size_t index, std::uint64_t base_seed) {
  BatchCase bc;
  bc.rng_seed = mix_seed(base_seed, index);
  Rng rng(bc.rng_seed);
  bc.community_index = static_cast<std::size_t>(rng.uniform_index(truth.communities.size()));
  const auto& community = truth.communities[bc.community_index];
  try {
    const int wanted = options.seed_count.value_or(
        seed_count_policy(options.kind, static_cast<int>(community.size()), options.seed_ratio));
    const int count = std::min<int>(wanted, static_cast<int>(community.size()));
    SeedSet seeds = select_seeds(g, community, options.strategy, count, rng.next());
    if (options.enlarge_seeds) seeds = enlarge_seed_set(g, seeds);
    bc.seeds = seeds.vertices;
    const DetectionResult r = detect(g, seeds, params, community);
    bc.f1 = r.score ? r.score->f1 : 0.0;
    bc.chosen_size = r.chosen_size;
    bc.iterations = static_cast<int>(r.iterations.size());
    bc.stop_reason = r.stop_reason;
  } catch (const std::exception& e) {
    bc.failed = true;
    bc.error = e.what();
    bc.f1 = 0.0;
  }
  return bc;
}

}  // namespace

BatchReport run_batch(const Graph& g, const GroundTruth& truth, const LemonParams& params,
                      const BatchOptions& options, int cases, std::uint64_t rng_seed) {
  if (cases < 1) throw std::invalid_argument("run_batch: need at least one case");
  if (truth.communities.empty()) throw std::invalid_argument("run_batch: empty ground truth");
  if (const auto bad = truth.ids_outside(g.size()); !bad.empty()) {
    std::string msg = "ground truth references vertices not in graph:";
    for (std::size_t i = 0; i < bad.size() && i < 20; ++i) msg += " " + std::to_string(bad[i]);
    if (bad.size() > 20) msg += " ...";
    throw DataError(msg);
  }

  LemonParams effective = params;
  if (effective.avg_community_size <= 0)
    effective.avg_community_size = std::max(1, static_cast<int>(std::lround(truth.average_size())));
  effective.validate();

  BatchReport report;
  report.params = effective;
  report.options = options;
  report.rng_seed = rng_seed;
  report.cases.resize(static_cast<std::size_t>(cases));

  const int threads = options.threads > 0 ? options.threads : kernels::worker_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int i = 0; i < cases; ++i)
    report.cases[static_cast<std::size_t>(i)] = run_case(g, truth, effective, options, static_cast<std::size_t>(i), rng_seed);

  const auto values = report.f1_values();
  const Summary s = summarize(values);
  report.mean = s.mean;
  report.stddev = s.stddev;
  return report;
}

BatchReport run_planted_batch(const PlantedSpec& base, int graphs, const LemonParams& params,
                              const BatchOptions& options, std::size_t community_index, std::uint64_t rng_seed) {
  if (graphs < 1) throw std::invalid_argument("run_planted_batch: need at least one graph");
  base.validate();
  if (community_index >= base.groups.size()) throw std::invalid_argument("run_planted_batch: community index out of range");
  params.validate();

  LemonParams effective = params;
  if (effective.avg_community_size <= 0) {
    double total = 0.0;
    for (const auto& g : base.groups) total += g.size;
    effective.avg_community_size = std::max(1, static_cast<int>(std::lround(total / static_cast<double>(base.groups.size()))));
  }

  BatchReport report;
  report.params = effective;
  report.options = options;
  report.rng_seed = rng_seed;
  report.cases.resize(static_cast<std::size_t>(graphs));

  const int threads = options.threads > 0 ? options.threads : kernels::worker_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int i = 0; i < graphs; ++i) {
    PlantedSpec spec = base;
    spec.rng_seed = mix_seed(rng_seed, static_cast<std::uint64_t>(i));
    const PlantedGraph pg = generate_planted(spec);
    GroundTruth single;
    single.communities = {pg.truth.communities[community_index]};
    BatchCase bc = run_case(pg.graph, single, effective, options, 0, spec.rng_seed);
    bc.community_index = community_index;
    report.cases[static_cast<std::size_t>(i)] = std::move(bc);
  }
  const Summary s = summarize(report.f1_values());
  report.mean = s.mean;
  report.stddev = s.stddev;
  return report;
}

std::vector<ParamSweepRow> param_sweep(const LemonParams& base, const std::vector<int>& walk_steps,
                                       const std::vector<int>& dimensions,
                                       const std::function<BatchReport(const LemonParams&)>& run) {
  std::vector<ParamSweepRow> rows;
  for (int k : walk_steps)
    for (int l : dimensions) {
      LemonParams p = base;
      p.walk_steps = k;
      p.dimension = l;
      p.combo_sweep.clear();
      const BatchReport r = run(p);
      rows.push_back({k, l, r.mean, r.stddev, r.f1_values()});
    }
  return rows;
}

}  // namespace lemon
