#pragma once

#include <span>
#include <vector>

#include "lemon/graph.hpp"

namespace lemon {

/// Sparse random-walk distribution: only touched vertices are stored.
struct WalkState {
  std::vector<Vertex> support;  // ascending
  std::vector<double> mass;     // aligned with support
  int step_count = 0;

  static WalkState uniform_over(std::span<const Vertex> seeds);

  double total() const;
  double at(Vertex v) const;
  /// Number of entries strictly above `threshold`.
  std::size_t spread(double threshold = 0.0) const;
};

/// One lazy-walk step p <- pM with M(u, v) = 1 / (d(u) + 1) for v in N(u) + {u}.
WalkState walk_step(const Graph& g, const WalkState& state);

struct SamplerOptions {
  int max_steps = 30;
  /// An entry counts toward the spread only when strictly above this value.
  double spread_threshold = 0.0;
};

/// Vertices chosen for the working subgraph: all seeds, then the highest-mass
/// vertices (ties to lower id) until `target_size` is reached. Returned ascending.
std::vector<Vertex> sample_vertices(const Graph& g, std::span<const Vertex> seeds, Vertex target_size,
                                    const SamplerOptions& options = {});

/// Walks from the uniform distribution over `seeds` until the mass has spread to
/// at least `target_size` vertices (or `max_steps`), then returns the induced
/// subgraph on sample_vertices().
SampledSubgraph sample_subgraph(const Graph& g, std::span<const Vertex> seeds, Vertex target_size,
                                const SamplerOptions& options = {});

/// Breadth-first ball around the seeds truncated to `target_size` vertices.
/// Kept as the comparison baseline for the walk sampler. Returned ascending.
std::vector<Vertex> bfs_sample(const Graph& g, std::span<const Vertex> seeds, Vertex target_size);

}  // namespace lemon
