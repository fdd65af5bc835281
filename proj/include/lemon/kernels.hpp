#pragma once

// Data-parallel inner loops. Each kernel has a serial reference and an
// OpenMP variant with the same contract; tests check they agree and
// bench/ compares their throughput.

#include <span>

#include "lemon/graph.hpp"

namespace lemon::kernels {

/// out = D^{-1/2} (A + I) D^{-1/2} x, with `inv_sqrt_degree` holding D^{-1/2}.
void normalized_adjacency_serial(const Graph& g, std::span<const double> inv_sqrt_degree,
                                 std::span<const double> x, std::span<double> out);
void normalized_adjacency_parallel(const Graph& g, std::span<const double> inv_sqrt_degree,
                                   std::span<const double> x, std::span<double> out);

/// Lazy-walk pull: out(v) = sum over u in N(v) + {v} of p(u) / (d(u) + 1).
void lazy_walk_serial(const Graph& g, std::span<const double> p, std::span<double> out);
void lazy_walk_parallel(const Graph& g, std::span<const double> p, std::span<double> out);

double dot_serial(std::span<const double> x, std::span<const double> y);
double dot_parallel(std::span<const double> x, std::span<const double> y);

/// Dispatch used by the library. Parallel above a size threshold when built with OpenMP.
void normalized_adjacency(const Graph& g, std::span<const double> inv_sqrt_degree,
                          std::span<const double> x, std::span<double> out);
double dot(std::span<const double> x, std::span<const double> y);

/// Number of worker threads for batch-level parallelism (LEMON_THREADS, else machine default).
int worker_threads();

}  // namespace lemon::kernels
