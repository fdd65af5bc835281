#pragma once

#include <functional>
#include <span>
#include <vector>

#include "lemon/graph.hpp"

namespace lemon {

/// x -> D^{-1/2} (A + I) D^{-1/2} x applied as an operator on a subgraph.
///
/// The self-loop term is algebraic only; storage never holds self-loops.
/// A vertex with no edges in the subgraph uses a unit scale so the operator stays finite.
class NormalizedAdjacency {
 public:
  explicit NormalizedAdjacency(const Graph& g);

  Vertex size() const { return graph_->size(); }
  const Graph& graph() const { return *graph_; }
  std::span<const double> inv_sqrt_degree() const { return inv_sqrt_degree_; }

  void apply(std::span<const double> x, std::span<double> out) const;
  std::vector<double> apply(std::span<const double> x) const;

 private:
  const Graph* graph_;
  std::vector<double> inv_sqrt_degree_;
};

/// Column-orthonormal N x l basis, column-major.
struct SpectralBasis {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;
  int walk_steps = 0;
  /// Requested dimension; `cols` can be smaller after rank reduction.
  int requested_dimension = 0;

  std::span<const double> column(std::size_t j) const { return {data.data() + j * rows, rows}; }
  std::span<double> column(std::size_t j) { return {data.data() + j * rows, rows}; }
  double operator()(std::size_t i, std::size_t j) const { return data[j * rows + i]; }

  /// max |V^T V - I| over all entries.
  double orthonormality_error() const;
};

/// Initial distribution over local seed ids: uniform 1/|S|, or d(v)/Vol(S) when
/// `degree_normalized` is set (subgraph degrees).
std::vector<double> initial_probability(const SampledSubgraph& sub, std::span<const Vertex> seeds,
                                        bool degree_normalized);

/// Orthonormal basis of span(p0, A p0, ..., A^{l-1} p0) built Arnoldi-style.
/// Stops early when the Krylov sequence becomes linearly dependent.
SpectralBasis krylov_basis(const NormalizedAdjacency& op, std::span<const double> p0, int dimension);

/// Krylov start followed by `walk_steps` rounds of V <- orth(A V).
/// `on_iteration` sees the basis after the start and after every round.
SpectralBasis local_spectra(const NormalizedAdjacency& op, std::span<const double> p0, int walk_steps,
                            int dimension,
                            const std::function<void(const SpectralBasis&)>& on_iteration = {});

/// Modified Gram-Schmidt with one reorthogonalization pass over the columns of
/// `basis` (in place). Columns whose residual falls below `drop_tol` times their
/// original norm are removed. Returns the surviving column count.
std::size_t orthonormalize(SpectralBasis& basis, double drop_tol = 1e-10);

}  // namespace lemon
