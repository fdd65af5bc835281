#include "lemon/spectral_oracle.hpp"

#include "lemon/conductance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lemon {

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += data_[i * n_ + j] * x[j];
    out[i] = acc;
  }
  return out;
}

std::vector<double> Eigendecomposition::vector(std::size_t j) const {
  std::vector<double> v(vectors.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = vectors(i, j);
  return v;
}

Eigendecomposition jacobi_eigensolver(DenseMatrix a, double tolerance, int max_sweeps) {
  const std::size_t n = a.size();
  DenseMatrix v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) frob += a(i, j) * a(i, j);
  const double threshold = tolerance * std::max(1.0, std::sqrt(frob));

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > threshold) {
    if (sweep++ >= max_sweeps) throw std::runtime_error("jacobi_eigensolver: no convergence");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  Eigendecomposition eig;
  eig.sweeps = sweep;
  eig.values.resize(n);
  eig.vectors = DenseMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    eig.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) eig.vectors(i, j) = v(i, order[j]);
  }
  return eig;
}

namespace {

std::vector<double> inv_sqrt_degrees(const Graph& g) {
  std::vector<double> out(static_cast<std::size_t>(g.size()), 0.0);
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.degree(v) > 0) out[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  return out;
}

}  // namespace

DenseMatrix laplacian(const Graph& g) {
  DenseMatrix l(static_cast<std::size_t>(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) {
    l(v, v) = static_cast<double>(g.degree(v));
    for (Vertex w : g.neighbors(v)) l(v, w) = -1.0;
  }
  return l;
}

DenseMatrix normalized_laplacian(const Graph& g) {
  const auto s = inv_sqrt_degrees(g);
  DenseMatrix l(static_cast<std::size_t>(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) {
    l(v, v) = 1.0;
    for (Vertex w : g.neighbors(v)) l(v, w) = -s[v] * s[w];
  }
  return l;
}

DenseMatrix normalized_adjacency_dense(const Graph& g) {
  std::vector<double> s(static_cast<std::size_t>(g.size()));
  for (Vertex v = 0; v < g.size(); ++v)
    s[v] = g.degree(v) > 0 ? 1.0 / std::sqrt(static_cast<double>(g.degree(v))) : 1.0;
  DenseMatrix m(static_cast<std::size_t>(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) {
    m(v, v) = s[v] * s[v];
    for (Vertex w : g.neighbors(v)) m(v, w) = s[v] * s[w];
  }
  return m;
}

double rayleigh_quotient(const DenseMatrix& h, std::span<const double> x) {
  double xx = 0.0;
  for (double xi : x) xx += xi * xi;
  if (xx == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
  const auto hx = h.multiply(x);
  return std::inner_product(x.begin(), x.end(), hx.begin(), 0.0) / xx;
}

double generalized_rayleigh_quotient(const DenseMatrix& l, std::span<const double> degrees,
                                     std::span<const double> x) {
  double xdx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) xdx += degrees[i] * x[i] * x[i];
  if (xdx == 0.0) throw std::invalid_argument("generalized_rayleigh_quotient: zero denominator");
  const auto lx = l.multiply(x);
  return std::inner_product(x.begin(), x.end(), lx.begin(), 0.0) / xdx;
}

std::vector<double> eigen_weights(const Eigendecomposition& eig, std::span<const double> x) {
  const std::size_t n = eig.values.size();
  double xx = 0.0;
  for (double xi : x) xx += xi * xi;
  if (xx == 0.0) throw std::invalid_argument("eigen_weights: zero vector");
  std::vector<double> w(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double a = 0.0;
    for (std::size_t i = 0; i < n; ++i) a += eig.vectors(i, j) * x[i];
    w[j] = a * a / xx;
  }
  return w;
}

ConductanceBounds spectral_bounds(const Graph& g, std::span<const Vertex> community, std::size_t cap) {
  const auto n = static_cast<std::size_t>(g.size());
  if (n > cap) throw std::invalid_argument("oracle too large");
  if (community.empty()) throw std::invalid_argument("spectral_bounds: empty community");

  std::vector<double> indicator(n, 0.0);
  for (Vertex v : community) indicator.at(static_cast<std::size_t>(v)) = 1.0;
  const auto members = static_cast<std::size_t>(std::count(indicator.begin(), indicator.end(), 1.0));
  if (members == n) throw std::invalid_argument("spectral_bounds: community must be a proper subset");

  const Eigendecomposition eig = jacobi_eigensolver(normalized_laplacian(g));
  std::vector<double> scaled(n);
  for (std::size_t i = 0; i < n; ++i) scaled[i] = std::sqrt(static_cast<double>(g.degree(static_cast<Vertex>(i)))) * indicator[i];

  ConductanceBounds b;
  b.phi = conductance(g, community);
  b.lambda2 = n >= 2 ? std::max(eig.values[1], 0.0) : 0.0;
  double vol_c = 0.0;
  double vol_g = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = static_cast<double>(g.degree(static_cast<Vertex>(i)));
    vol_g += d;
    vol_c += d * indicator[i];
  }
  if (vol_c > 0.0) b.w1 = eigen_weights(eig, scaled)[0];
  b.upper = std::min(1.0, 2.0 * (1.0 - b.w1));
  if (vol_g == 0.0 || vol_c == 0.0)
    b.lower = 0.0;
  else if (2.0 * vol_c <= vol_g)
    b.lower = b.lambda2 / 2.0;
  else
    b.lower = b.lambda2 * (vol_g - vol_c) / vol_g;
  return b;
}

}  // namespace lemon
