#include "lemon/detect.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lemon/conductance.hpp"
#include "lemon/spectra.hpp"

namespace lemon {

std::string_view to_string(SizeMode m) { return m == SizeMode::ground_truth ? "gt" : "auto"; }

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::local_min: return "local_min";
    case StopReason::size_exceeded: return "size_exceeded";
    case StopReason::max_iter: return "max_iter";
    case StopReason::lp_infeasible: return "lp_infeasible";
  }
  return "unknown";
}

SizeMode parse_size_mode(std::string_view name) {
  if (name == "gt" || name == "ground_truth") return SizeMode::ground_truth;
  if (name == "auto") return SizeMode::automatic;
  throw std::invalid_argument("unknown mode: " + std::string(name));
}

void LemonParams::validate() const {
  auto check = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  check(walk_steps >= 0, "walk steps must be >= 0");
  check(dimension >= 1, "dimension must be >= 1");
  check(expansion_step >= 1, "expansion step must be >= 1");
  check(alpha > 0.0, "alpha must be positive");
  check(size_min >= 1 && size_min <= size_max, "need 1 <= min community size <= max community size");
  check(max_iterations >= 1, "max iterations must be >= 1");
  check(sampler.max_steps >= 0, "max walk spread steps must be >= 0");
  for (const auto& [k, l] : combo_sweep) check(k >= 0 && l >= 1, "invalid (walk steps, dimension) combo");
}

Vertex LemonParams::sample_target(std::size_t seed_count) const {
  if (avg_community_size <= 0) throw std::invalid_argument("average community size is required for sampling");
  const double target = std::ceil(alpha * static_cast<double>(avg_community_size));
  return static_cast<Vertex>(std::max<double>(target, static_cast<double>(seed_count)));
}

LemonParams LemonParams::real_preset() { return LemonParams{}; }

LemonParams LemonParams::synthetic_preset() {
  LemonParams p;
  p.degree_normalized_p0 = true;
  p.combo_sweep = {{2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}};
  return p;
}

SeedSet reseed(const ScoreVector& scores, const SampledSubgraph& sub, const SeedSet& original, int t) {
  if (t < 1) throw std::invalid_argument("reseed: t must be >= 1");
  const auto take = std::min<std::size_t>(static_cast<std::size_t>(t), scores.size());
  std::vector<Vertex> next = original.vertices;
  for (std::size_t i = 0; i < take; ++i) next.push_back(sub.local_to_global[scores.order[i]]);
  return make_seed_set(std::move(next), SeedStrategy::enlarged, original.rng_seed);
}

namespace {

DetectionResult detect_with(const Graph& g, const SeedSet& seeds, const LemonParams& params, int walk_steps,
                            int dimension, std::optional<std::span<const Vertex>> truth) {
  const bool gt_mode = params.mode == SizeMode::ground_truth;
  const int truth_size = truth ? static_cast<int>(truth->size()) : 0;

  DetectionResult result;
  result.params = params;
  result.walk_steps = walk_steps;
  result.dimension = dimension;
  result.initial_seeds = seeds.vertices;
  result.rng_seed = seeds.rng_seed;

  SeedSet current = seeds;
  std::vector<double> phi_history;
  for (int i = 0; i < params.max_iterations; ++i) {
    const SampledSubgraph sub =
        sample_subgraph(g, current.vertices, params.sample_target(current.size()), params.sampler);
    const std::vector<Vertex> local_seeds = sub.to_local(current.vertices);
    const NormalizedAdjacency op(sub.graph);
    const auto p0 = initial_probability(sub, local_seeds, params.degree_normalized_p0);
    const SpectralBasis basis = local_spectra(op, p0, walk_steps, dimension);

    ScoreVector scores;
    try {
      scores = solve_sparse_indicator(basis, local_seeds, params.lp);
    } catch (const LpInfeasible&) {
      if (i == 0) throw;
      result.stop_reason = StopReason::lp_infeasible;
      break;
    }

    const int n = sub.size();
    const int hi = std::min(params.size_max, n);
    const int lo = std::min(params.size_min, hi);
    const SweepCurve curve = sweep(sub.graph, scores, lo, hi);

    IterationRecord rec;
    rec.seed_size = static_cast<int>(current.size());
    rec.subgraph_size = n;
    rec.basis_dimension = static_cast<int>(basis.cols);
    rec.phi_min = curve.min_value;
    rec.sweep_argmin = curve.argmin_size;
    rec.community_size = gt_mode ? std::min(truth_size, n) : curve.argmin_size;
    rec.community = sub.to_global(truncate_top(scores, static_cast<std::size_t>(rec.community_size)));
    if (truth) rec.f1 = f1_score(rec.community, *truth).f1;
    result.iterations.push_back(std::move(rec));

    if (!gt_mode) {
      phi_history.push_back(curve.min_value);
      if (const auto stop = stop_decision(phi_history)) {
        result.selected_iteration = *stop;
        result.stop_reason = StopReason::local_min;
        break;
      }
    }

    const int t = static_cast<int>(seeds.size()) + (i + 1) * params.expansion_step;
    SeedSet next = reseed(scores, sub, seeds, t);
    if (gt_mode ? static_cast<int>(next.size()) > truth_size : t > hi) {
      result.stop_reason = StopReason::size_exceeded;
      break;
    }
    current = std::move(next);
  }

  if (result.stop_reason != StopReason::local_min) {
    // Ground truth: best F1 so far; automatic: lowest minimum conductance so far.
    std::size_t best = 0;
    for (std::size_t i = 1; i < result.iterations.size(); ++i) {
      const auto& a = result.iterations[i];
      const auto& b = result.iterations[best];
      if (gt_mode ? a.f1.value_or(0.0) > b.f1.value_or(0.0) : a.phi_min < b.phi_min) best = i;
    }
    result.selected_iteration = best;
  }

  const auto& chosen = result.iterations.at(result.selected_iteration);
  result.members = chosen.community;
  result.chosen_size = static_cast<int>(result.members.size());
  if (truth) result.score = f1_score(result.members, *truth);
  return result;
}

}  // namespace

DetectionResult detect(const Graph& g, const SeedSet& seeds, const LemonParams& params,
                       std::optional<std::span<const Vertex>> ground_truth) {
  params.validate();
  if (seeds.vertices.empty()) throw std::invalid_argument("detect: empty seed set");
  for (Vertex s : seeds.vertices)
    if (s < 0 || s >= g.size()) throw DataError("seed " + std::to_string(s) + " not in graph");
  if (params.mode == SizeMode::ground_truth && (!ground_truth || ground_truth->empty()))
    throw std::invalid_argument("ground-truth mode needs a ground-truth community");

  if (params.combo_sweep.empty()) return detect_with(g, seeds, params, params.walk_steps, params.dimension, ground_truth);

  if (!ground_truth || ground_truth->empty())
    throw std::invalid_argument("a (walk steps, dimension) sweep needs a ground-truth community");
  std::optional<DetectionResult> best;
  for (const auto& [k, l] : params.combo_sweep) {
    try {
      DetectionResult r = detect_with(g, seeds, params, k, l, ground_truth);
      if (!best || r.score->f1 > best->score->f1) best = std::move(r);
    } catch (const LpInfeasible&) {
      // another combo may still see the seeds
    }
  }
  if (!best) throw LpInfeasible();
  return std::move(*best);
}

}  // namespace lemon
