#pragma once

#include <span>
#include <string>
#include <vector>

#include "lemon/graph.hpp"

namespace lemon {

struct F1Score {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Precision |C n C*| / |C|, recall |C n C*| / |C*|, and their harmonic mean.
/// An empty detected set (or no overlap) scores all zeros.
F1Score f1_score(std::span<const Vertex> detected, std::span<const Vertex> truth);

/// Ground-truth communities; overlaps across communities are allowed.
struct GroundTruth {
  std::vector<std::vector<Vertex>> communities;  // each ascending, nonempty
  std::string source;

  double average_size() const;
  /// Ids outside [0, n), ascending and deduplicated.
  std::vector<Vertex> ids_outside(Vertex n) const;
};

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;  // sample (n - 1) convention; 0 for a single value
};

Summary summarize(std::span<const double> values);

struct MatchScore {
  std::size_t best_match = 0;  // index into the truth communities
  F1Score score;
};

/// For each detected community, the truth community with the highest F1
/// (lowest index on ties).
std::vector<MatchScore> best_match_scores(const std::vector<std::vector<Vertex>>& detected,
                                          const std::vector<std::vector<Vertex>>& truth);

}  // namespace lemon
