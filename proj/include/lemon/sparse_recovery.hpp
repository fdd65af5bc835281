#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "lemon/graph.hpp"
#include "lemon/spectra.hpp"

namespace lemon {

/// The seed constraint cannot be met by any nonnegative vector in the subspace.
class LpInfeasible : public std::runtime_error {
 public:
  LpInfeasible() : std::runtime_error("LP infeasible") {}
};

struct LpTolerances {
  double feasibility = 1e-9;
  double optimality_gap = 1e-6;
};

/// Nonnegative per-vertex scores plus their descending order (ties to lower id).
struct ScoreVector {
  std::vector<double> values;
  std::vector<Vertex> order;

  static ScoreVector from_values(std::vector<double> values);
  std::size_t size() const { return values.size(); }
};

/// Optimal point of  min sum(V z)  s.t.  V z >= 0,  sum_{s in seeds} (V z)(s) >= 1.
struct LpSolution {
  std::vector<double> coefficients;  // z, one per basis column
  std::vector<double> y;             // V z before clamping
  double objective = 0.0;            // sum(V z)
  int pivots = 0;
};

/// Solves the seed LP with a revised simplex on its dual, where the basis is
/// only l x l. Bland's rule prevents cycling. Throws LpInfeasible.
LpSolution solve_seed_lp(const SpectralBasis& basis, std::span<const Vertex> seeds,
                         const LpTolerances& tol = {});

/// solve_seed_lp, clamped to >= 0 and sorted.
ScoreVector solve_sparse_indicator(const SpectralBasis& basis, std::span<const Vertex> seeds,
                                   const LpTolerances& tol = {});

/// First `size` vertices of scores.order.
std::vector<Vertex> truncate_top(const ScoreVector& scores, std::size_t size);

}  // namespace lemon
