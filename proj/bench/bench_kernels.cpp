#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <vector>

#include "lemon/kernels.hpp"
#include "lemon/planted.hpp"
#include "lemon/rng.hpp"

using namespace lemon;

namespace {

double seconds_per_call(int reps, const std::function<void()>& f) {
  f();
  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

Graph random_sparse(Vertex n, int avg_degree, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  const auto m = static_cast<std::size_t>(n) * static_cast<std::size_t>(avg_degree) / 2;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    edges.emplace_back(static_cast<Vertex>(rng.uniform_index(n)), static_cast<Vertex>(rng.uniform_index(n)));
  return Graph::from_edges(edges, n);
}

void row(const char* name, const Graph& g, int reps) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<double> x(n), out_s(n), out_p(n), inv(n);
  Rng rng(9);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = rng.uniform_real();
    inv[i] = 1.0 / std::sqrt(static_cast<double>(g.degree(static_cast<Vertex>(i)) + 1));
  }
  const double na_s = seconds_per_call(reps, [&] { kernels::normalized_adjacency_serial(g, inv, x, out_s); });
  const double na_p = seconds_per_call(reps, [&] { kernels::normalized_adjacency_parallel(g, inv, x, out_p); });
  const double lw_s = seconds_per_call(reps, [&] { kernels::lazy_walk_serial(g, x, out_s); });
  const double lw_p = seconds_per_call(reps, [&] { kernels::lazy_walk_parallel(g, x, out_p); });
  volatile double sink = 0;
  const double dot_s = seconds_per_call(reps, [&] { sink = sink + kernels::dot_serial(x, out_s); });
  const double dot_p = seconds_per_call(reps, [&] { sink = sink + kernels::dot_parallel(x, out_s); });
  std::printf("%-10s %9d %11lld  adj %9.3f %9.3f  walk %9.3f %9.3f  dot %8.3f %8.3f\n", name, g.size(),
              static_cast<long long>(g.edge_count()), na_s * 1e3, na_p * 1e3, lw_s * 1e3, lw_p * 1e3, dot_s * 1e3,
              dot_p * 1e3);
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::printf("threads %d; times in ms per call, serial then parallel\n", kernels::worker_threads());
  std::printf("%-10s %9s %11s  %-23s  %-24s  %s\n", "graph", "vertices", "edges", "adj", "walk", "dot");
  row("figure1", generate_planted(PlantedSpec::figure1(1)).graph, quick ? 5 : 200);
  row("sparse", random_sparse(quick ? 20000 : 1000000, 10, 2), quick ? 3 : 20);
  if (!quick) row("dense", random_sparse(200000, 100, 3), 10);
  return 0;
}
