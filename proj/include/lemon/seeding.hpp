#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lemon/graph.hpp"

namespace lemon {

enum class SeedStrategy { high_degree, low_degree, triangle, random, inward_ratio, user, enlarged };

std::string_view to_string(SeedStrategy s);
SeedStrategy parse_seed_strategy(std::string_view name);

struct SeedSet {
  std::vector<Vertex> vertices;  // global ids, ascending
  SeedStrategy origin = SeedStrategy::user;
  std::uint64_t rng_seed = 0;

  std::size_t size() const { return vertices.size(); }
};

SeedSet make_seed_set(std::vector<Vertex> vertices, SeedStrategy origin, std::uint64_t rng_seed = 0);

/// Draws `count` seeds from `community` by the given strategy.
///
/// Degree and inward-ratio strategies sample uniformly from the top (or bottom)
/// third (floor of size / 3) of the community, ranked by (key, vertex id); the pool is widened to
/// `count` when the third is smaller. Triangle picks one triangle of the
/// induced community subgraph uniformly and needs count == 3.
SeedSet select_seeds(const Graph& g, std::span<const Vertex> community, SeedStrategy strategy, int count,
                     std::uint64_t rng_seed);

/// Fraction of v's edges that stay inside `community_sorted` (ascending ids).
double inward_ratio(const Graph& g, Vertex v, std::span<const Vertex> community_sorted);

/// Adds the interior of every shortest path of length <= 3 between pairs of
/// seeds (pairs in ascending order, one pass over the given set). With
/// `until_fixed_point` the pass repeats on its own output until nothing changes.
SeedSet enlarge_seed_set(const Graph& g, const SeedSet& seeds, bool until_fixed_point = false);

enum class DatasetKind { synthetic, real };

/// Synthetic data: max(1, round(ratio * size)). Real data: 3.
int seed_count_policy(DatasetKind kind, int community_size, double ratio = 0.08);

}  // namespace lemon
