#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lemon/graph.hpp"
#include "lemon/metrics.hpp"
#include "lemon/sampler.hpp"
#include "lemon/seeding.hpp"
#include "lemon/sparse_recovery.hpp"

namespace lemon {

enum class SizeMode { ground_truth, automatic };
enum class StopReason { local_min, size_exceeded, max_iter, lp_infeasible };

std::string_view to_string(SizeMode m);
std::string_view to_string(StopReason r);
SizeMode parse_size_mode(std::string_view name);

struct LemonParams {
  int walk_steps = 3;
  int dimension = 3;
  int expansion_step = 6;
  double alpha = 10.0;
  /// Average community size used for the sample target alpha * avg. 0 = unset.
  int avg_community_size = 0;
  SamplerOptions sampler;
  int size_min = 20;
  int size_max = 100;
  SizeMode mode = SizeMode::automatic;
  int max_iterations = 20;
  bool degree_normalized_p0 = false;
  /// When nonempty, every (walk_steps, dimension) pair is tried and the best F1 wins.
  std::vector<std::pair<int, int>> combo_sweep;
  LpTolerances lp;

  void validate() const;
  /// Walk spread target for a seed set of the given size.
  Vertex sample_target(std::size_t seed_count) const;

  /// (k, l) = (3, 3), uniform p0.
  static LemonParams real_preset();
  /// Six (k, l) combos, degree-normalized p0.
  static LemonParams synthetic_preset();
};

struct IterationRecord {
  int seed_size = 0;
  int subgraph_size = 0;
  int basis_dimension = 0;
  double phi_min = 1.0;
  int sweep_argmin = 0;
  int community_size = 0;
  std::optional<double> f1;
  std::vector<Vertex> community;  // global ids, by descending score
};

struct DetectionResult {
  std::vector<Vertex> members;  // global ids, by descending score
  int chosen_size = 0;
  std::vector<IterationRecord> iterations;
  std::size_t selected_iteration = 0;
  StopReason stop_reason = StopReason::max_iter;
  int walk_steps = 0;
  int dimension = 0;
  LemonParams params;
  std::vector<Vertex> initial_seeds;
  std::uint64_t rng_seed = 0;
  std::optional<F1Score> score;
};

/// Seed-set expansion: sample, local spectra, sparse LP, size choice, reseed.
///
/// Ground-truth mode keeps the top-|C*| vertices each round and returns the best
/// F1 iteration; automatic mode sizes by the sweep minimum and stops at the first
/// local minimum of the per-iteration minimum conductance.
/// Throws LpInfeasible when the very first LP has no solution.
DetectionResult detect(const Graph& g, const SeedSet& seeds, const LemonParams& params,
                       std::optional<std::span<const Vertex>> ground_truth = std::nullopt);

/// original seeds + top-t vertices of `scores` (mapped to global ids), tagged enlarged.
SeedSet reseed(const ScoreVector& scores, const SampledSubgraph& sub, const SeedSet& original, int t);

}  // namespace lemon
