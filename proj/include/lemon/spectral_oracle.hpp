#pragma once

// Dense eigen-analysis of small subgraphs. Used to check spectral bounds and
// Rayleigh-quotient identities; never on the detection path.

#include <span>
#include <vector>

#include "lemon/graph.hpp"

namespace lemon {

/// Square row-major matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::vector<double> multiply(std::span<const double> x) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct Eigendecomposition {
  std::vector<double> values;  // ascending
  DenseMatrix vectors;         // column j pairs with values[j]
  int sweeps = 0;

  std::vector<double> vector(std::size_t j) const;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is at most
/// `tolerance` times max(1, ||A||_F).
Eigendecomposition jacobi_eigensolver(DenseMatrix a, double tolerance = 1e-12, int max_sweeps = 100);

DenseMatrix laplacian(const Graph& g);             // D - A
DenseMatrix normalized_laplacian(const Graph& g);  // I - D^{-1/2} A D^{-1/2}
DenseMatrix normalized_adjacency_dense(const Graph& g);  // D^{-1/2} (A + I) D^{-1/2}

/// x^T H x / x^T x. Throws on a zero vector.
double rayleigh_quotient(const DenseMatrix& h, std::span<const double> x);
/// x^T L x / x^T D x.
double generalized_rayleigh_quotient(const DenseMatrix& l, std::span<const double> degrees,
                                     std::span<const double> x);

/// w_i = a_i^2 / ||x||^2 where x = sum_i a_i q_i in the eigenbasis.
std::vector<double> eigen_weights(const Eigendecomposition& eig, std::span<const double> x);

struct ConductanceBounds {
  double lower = 0.0;
  double upper = 1.0;
  double phi = 0.0;
  double lambda2 = 0.0;  // second-smallest normalized-Laplacian eigenvalue
  double w1 = 0.0;       // weight of D^{1/2} x on the smallest eigenvalue
};

/// Cheeger lower bound and eigen-weight upper bound on the conductance of
/// `community`, from the dense eigendecomposition of the normalized Laplacian.
///
/// lower = lambda2 / 2 while vol(C) <= vol(G)/2. For the larger side the bound
/// lambda2 * vol(V \ C) / vol(G) is used, which is the form that still holds
/// there. upper = min{1, 2 (1 - w1)}.
ConductanceBounds spectral_bounds(const Graph& g, std::span<const Vertex> community, std::size_t cap = 500);

}  // namespace lemon
