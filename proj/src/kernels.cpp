#include "lemon/kernels.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lemon::kernels {

namespace {
constexpr Vertex kParallelThreshold = 4096;
}

void normalized_adjacency_serial(const Graph& g, std::span<const double> inv_sqrt_degree,
                                 std::span<const double> x, std::span<double> out) {
  const Vertex n = g.size();
  for (Vertex v = 0; v < n; ++v) {
    double acc = inv_sqrt_degree[v] * x[v];
    for (Vertex u : g.neighbors(v)) acc += inv_sqrt_degree[u] * x[u];
    out[v] = inv_sqrt_degree[v] * acc;
  }
}

void normalized_adjacency_parallel(const Graph& g, std::span<const double> inv_sqrt_degree,
                                   std::span<const double> x, std::span<double> out) {
  const Vertex n = g.size();
#pragma omp parallel for schedule(dynamic, 256)
  for (Vertex v = 0; v < n; ++v) {
    double acc = inv_sqrt_degree[v] * x[v];
    for (Vertex u : g.neighbors(v)) acc += inv_sqrt_degree[u] * x[u];
    out[v] = inv_sqrt_degree[v] * acc;
  }
}

void lazy_walk_serial(const Graph& g, std::span<const double> p, std::span<double> out) {
  const Vertex n = g.size();
  for (Vertex v = 0; v < n; ++v) {
    double acc = p[v] / static_cast<double>(g.degree(v) + 1);
    for (Vertex u : g.neighbors(v)) acc += p[u] / static_cast<double>(g.degree(u) + 1);
    out[v] = acc;
  }
}

void lazy_walk_parallel(const Graph& g, std::span<const double> p, std::span<double> out) {
  const Vertex n = g.size();
#pragma omp parallel for schedule(dynamic, 256)
  for (Vertex v = 0; v < n; ++v) {
    double acc = p[v] / static_cast<double>(g.degree(v) + 1);
    for (Vertex u : g.neighbors(v)) acc += p[u] / static_cast<double>(g.degree(u) + 1);
    out[v] = acc;
  }
}

double dot_serial(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double dot_parallel(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for reduction(+ : acc)
  for (std::ptrdiff_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

void normalized_adjacency(const Graph& g, std::span<const double> inv_sqrt_degree,
                          std::span<const double> x, std::span<double> out) {
  // Each row is an independent gather, so the result does not depend on the thread count.
  if (g.size() >= kParallelThreshold)
    normalized_adjacency_parallel(g, inv_sqrt_degree, x, out);
  else
    normalized_adjacency_serial(g, inv_sqrt_degree, x, out);
}

double dot(std::span<const double> x, std::span<const double> y) {
  // Reductions stay serial: a thread-count-dependent summation order would break
  // byte-identical run records.
  return dot_serial(x, y);
}

int worker_threads() {
  if (const char* env = std::getenv("LEMON_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace lemon::kernels
