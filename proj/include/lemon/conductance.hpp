#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lemon/graph.hpp"
#include "lemon/sparse_recovery.hpp"

namespace lemon {

/// cut(S, V \ S) / vol(S) within `g`. A zero-volume set has conductance 1.
double conductance(const Graph& g, std::span<const Vertex> vertices);

/// Conductance of every score-ordered prefix with size in [size_min, size_max].
struct SweepCurve {
  std::vector<int> sizes;
  std::vector<double> conductances;
  int argmin_size = 0;
  double min_value = 1.0;
};

/// Incremental sweep over prefixes of `scores.order`. When `size_max` equals the
/// vertex count, the full set (conductance 0) is reported but never selected.
SweepCurve sweep(const Graph& g, const ScoreVector& scores, int size_min, int size_max);

/// Index of the first point where the history starts to rise (h[i+1] > h[i]);
/// a plateau resolves to its last index. nullopt while still nonincreasing.
std::optional<std::size_t> stop_decision(std::span<const double> history);

}  // namespace lemon
