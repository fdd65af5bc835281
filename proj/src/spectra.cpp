#include "lemon/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lemon/kernels.hpp"

namespace lemon {

NormalizedAdjacency::NormalizedAdjacency(const Graph& g) : graph_(&g) {
  inv_sqrt_degree_.resize(static_cast<std::size_t>(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) {
    const auto d = g.degree(v);
    inv_sqrt_degree_[v] = d > 0 ? 1.0 / std::sqrt(static_cast<double>(d)) : 1.0;
  }
}

void NormalizedAdjacency::apply(std::span<const double> x, std::span<double> out) const {
  kernels::normalized_adjacency(*graph_, inv_sqrt_degree_, x, out);
}

std::vector<double> NormalizedAdjacency::apply(std::span<const double> x) const {
  std::vector<double> out(x.size());
  apply(x, out);
  return out;
}

double SpectralBasis::orthonormality_error() const {
  double worst = 0.0;
  for (std::size_t a = 0; a < cols; ++a)
    for (std::size_t b = a; b < cols; ++b) {
      const double g = kernels::dot(column(a), column(b));
      worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  return worst;
}

std::vector<double> initial_probability(const SampledSubgraph& sub, std::span<const Vertex> seeds,
                                        bool degree_normalized) {
  if (seeds.empty()) throw std::invalid_argument("initial_probability: empty seed set");
  std::vector<Vertex> unique(seeds.begin(), seeds.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  for (Vertex s : unique)
    if (s < 0 || s >= sub.size()) throw std::out_of_range("initial_probability: seed outside subgraph");

  std::vector<double> p(static_cast<std::size_t>(sub.size()), 0.0);
  if (!degree_normalized) {
    for (Vertex s : unique) p[s] = 1.0 / static_cast<double>(unique.size());
    return p;
  }
  const auto vol = volume(sub.graph, unique);
  if (vol == 0) throw DataError("initial_probability: seed volume is zero");
  for (Vertex s : unique) p[s] = static_cast<double>(sub.graph.degree(s)) / static_cast<double>(vol);
  return p;
}

namespace {

double norm(std::span<const double> x) { return std::sqrt(kernels::dot(x, x)); }

// Projects `w` off the first `count` columns of `basis`, twice.
void project_out(const SpectralBasis& basis, std::size_t count, std::span<double> w) {
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t j = 0; j < count; ++j) {
      const auto q = basis.column(j);
      const double c = kernels::dot(q, w);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * q[i];
    }
}

}  // namespace

std::size_t orthonormalize(SpectralBasis& basis, double drop_tol) {
  std::size_t kept = 0;
  for (std::size_t j = 0; j < basis.cols; ++j) {
    auto w = basis.column(j);
    const double before = norm(w);
    if (before == 0.0) continue;
    project_out(basis, kept, w);
    const double after = norm(w);
    if (after < drop_tol * before) continue;
    auto dest = basis.column(kept);
    for (std::size_t i = 0; i < basis.rows; ++i) dest[i] = w[i] / after;
    ++kept;
  }
  basis.cols = kept;
  basis.data.resize(basis.rows * kept);
  return kept;
}

SpectralBasis krylov_basis(const NormalizedAdjacency& op, std::span<const double> p0, int dimension) {
  if (dimension < 1) throw std::invalid_argument("krylov_basis: dimension must be >= 1");
  const auto n = static_cast<std::size_t>(op.size());
  if (p0.size() != n) throw std::invalid_argument("krylov_basis: p0 size mismatch");
  const double p0_norm = norm(p0);
  if (p0_norm == 0.0) throw std::invalid_argument("krylov_basis: p0 is zero");

  SpectralBasis basis;
  basis.rows = n;
  basis.requested_dimension = dimension;
  basis.data.assign(n * static_cast<std::size_t>(dimension), 0.0);
  for (std::size_t i = 0; i < n; ++i) basis.data[i] = p0[i] / p0_norm;
  basis.cols = 1;

  std::vector<double> w(n);
  for (int j = 1; j < dimension; ++j) {
    op.apply(basis.column(basis.cols - 1), w);
    const double before = norm(w);
    project_out(basis, basis.cols, w);
    const double after = norm(w);
    if (before == 0.0 || after < 1e-10 * before) break;  // invariant subspace reached
    auto dest = basis.column(basis.cols);
    for (std::size_t i = 0; i < n; ++i) dest[i] = w[i] / after;
    ++basis.cols;
  }
  basis.data.resize(n * basis.cols);
  return basis;
}

SpectralBasis local_spectra(const NormalizedAdjacency& op, std::span<const double> p0, int walk_steps,
                            int dimension, const std::function<void(const SpectralBasis&)>& on_iteration) {
  if (walk_steps < 0) throw std::invalid_argument("local_spectra: walk_steps must be >= 0");
  SpectralBasis basis = krylov_basis(op, p0, dimension);
  if (on_iteration) on_iteration(basis);

  for (int step = 1; step <= walk_steps; ++step) {
    SpectralBasis next;
    next.rows = basis.rows;
    next.cols = basis.cols;
    next.requested_dimension = dimension;
    next.walk_steps = step;
    next.data.resize(basis.data.size());
    for (std::size_t j = 0; j < basis.cols; ++j) op.apply(basis.column(j), next.column(j));
    if (orthonormalize(next) == 0) throw std::runtime_error("local_spectra: basis collapsed to rank 0");
    basis = std::move(next);
    if (on_iteration) on_iteration(basis);
  }
  return basis;
}

}  // namespace lemon
