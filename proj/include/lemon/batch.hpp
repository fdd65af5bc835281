#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lemon/detect.hpp"
#include "lemon/metrics.hpp"
#include "lemon/planted.hpp"
#include "lemon/seeding.hpp"

namespace lemon {

struct BatchOptions {
  SeedStrategy strategy = SeedStrategy::random;
  DatasetKind kind = DatasetKind::real;
  /// Overrides seed_count_policy when set.
  std::optional<int> seed_count;
  double seed_ratio = 0.08;
  bool enlarge_seeds = false;
  /// 0 = kernels::worker_threads().
  int threads = 0;
};

struct BatchCase {
  std::size_t community_index = 0;
  std::uint64_t rng_seed = 0;
  std::vector<Vertex> seeds;
  double f1 = 0.0;
  int chosen_size = 0;
  int iterations = 0;
  StopReason stop_reason = StopReason::max_iter;
  bool failed = false;
  std::string error;
};

struct BatchReport {
  std::vector<BatchCase> cases;  // case-index order
  double mean = 0.0;
  double stddev = 0.0;
  LemonParams params;
  BatchOptions options;
  std::uint64_t rng_seed = 0;

  std::vector<double> f1_values() const;
};

/// Runs `cases` independent detections. Each case draws a community uniformly
/// (with replacement), selects seeds, and scores the detection against it.
/// A case whose detection throws scores 0 and is flagged. Deterministic per
/// rng_seed regardless of the thread count.
BatchReport run_batch(const Graph& g, const GroundTruth& truth, const LemonParams& params,
                      const BatchOptions& options, int cases, std::uint64_t rng_seed);

/// One case per freshly generated planted graph (spec seeded per case), with
/// seeds drawn from community `community_index` of each graph.
BatchReport run_planted_batch(const PlantedSpec& base, int graphs, const LemonParams& params,
                              const BatchOptions& options, std::size_t community_index, std::uint64_t rng_seed);

struct ParamSweepRow {
  int walk_steps = 0;
  int dimension = 0;
  double mean = 0.0;
  double stddev = 0.0;
  std::vector<double> f1;
};

/// Mean/stddev F1 for every (walk_steps, dimension) pair, walk steps outermost.
/// `run` executes one batch with the given parameters.
std::vector<ParamSweepRow> param_sweep(const LemonParams& base, const std::vector<int>& walk_steps,
                                       const std::vector<int>& dimensions,
                                       const std::function<BatchReport(const LemonParams&)>& run);

}  // namespace lemon
