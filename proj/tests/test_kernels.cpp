#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "lemon/kernels.hpp"
#include "test_util.hpp"

using namespace lemon;
using namespace lemon::testing;

namespace {

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> x(n);
  for (auto& v : x) v = rng.uniform_real() - 0.5;
  return x;
}

std::vector<double> inv_sqrt_degrees(const Graph& g) {
  std::vector<double> s(g.size());
  for (Vertex v = 0; v < g.size(); ++v) s[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v) + 1));
  return s;
}

}  // namespace

TEST_CASE("parallel kernels match the serial references") {
  for (Vertex n : {1, 17, 300, 5000}) {
    const Graph g = random_graph(n, n > 1000 ? 0.002 : 0.05, static_cast<std::uint64_t>(n));
    const auto x = random_vector(static_cast<std::size_t>(n), 7);
    const auto s = inv_sqrt_degrees(g);
    std::vector<double> a(n), b(n);

    kernels::normalized_adjacency_serial(g, s, x, a);
    kernels::normalized_adjacency_parallel(g, s, x, b);
    for (Vertex v = 0; v < n; ++v) CHECK(a[v] == doctest::Approx(b[v]).epsilon(1e-14));

    kernels::lazy_walk_serial(g, x, a);
    kernels::lazy_walk_parallel(g, x, b);
    for (Vertex v = 0; v < n; ++v) CHECK(a[v] == doctest::Approx(b[v]).epsilon(1e-14));

    CHECK(kernels::dot_serial(x, x) == doctest::Approx(kernels::dot_parallel(x, x)).epsilon(1e-12));
  }
}

TEST_CASE("normalized adjacency kernel against a dense product") {
  const Graph g = random_graph(25, 0.2, 9);
  const auto s = inv_sqrt_degrees(g);
  const auto x = random_vector(25, 10);
  std::vector<double> out(25);
  kernels::normalized_adjacency(g, s, x, out);
  for (Vertex i = 0; i < 25; ++i) {
    double expected = 0.0;
    for (Vertex j = 0; j < 25; ++j) {
      const double a = (i == j || g.has_edge(i, j)) ? 1.0 : 0.0;
      expected += s[i] * a * s[j] * x[j];
    }
    CHECK(out[i] == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("lazy walk kernel conserves mass") {
  const Graph g = random_graph(200, 0.03, 11);
  std::vector<double> p(200, 1.0 / 200), q(200);
  kernels::lazy_walk_serial(g, p, q);
  double total = 0.0;
  for (double v : q) total += v;
  CHECK(std::abs(total - 1.0) <= 1e-12);
}

TEST_CASE("dot is deterministic and exact on integers") {
  std::vector<double> x(1000), y(1000);
  for (int i = 0; i < 1000; ++i) {
    x[i] = i;
    y[i] = 2;
  }
  CHECK(kernels::dot(x, y) == 999000.0);
}

TEST_CASE("worker_threads honours LEMON_THREADS") {
  setenv("LEMON_THREADS", "3", 1);
  CHECK(kernels::worker_threads() == 3);
  unsetenv("LEMON_THREADS");
  CHECK(kernels::worker_threads() >= 1);
}
