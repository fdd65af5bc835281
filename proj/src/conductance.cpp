#include "lemon/conductance.hpp"

#include <stdexcept>

namespace lemon {

double conductance(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw std::invalid_argument("conductance: empty vertex set");
  std::vector<char> inside(static_cast<std::size_t>(g.size()), 0);
  for (Vertex v : vertices) inside.at(static_cast<std::size_t>(v)) = 1;

  std::int64_t cut = 0;
  std::int64_t vol = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!inside[v]) continue;
    vol += g.degree(v);
    for (Vertex w : g.neighbors(v))
      if (!inside[w]) ++cut;
  }
  if (vol == 0) return 1.0;
  return static_cast<double>(cut) / static_cast<double>(vol);
}

SweepCurve sweep(const Graph& g, const ScoreVector& scores, int size_min, int size_max) {
  const int n = g.size();
  if (size_min < 1 || size_min > size_max || size_max > n)
    throw std::invalid_argument("sweep: need 1 <= size_min <= size_max <= N");

  SweepCurve curve;
  std::vector<char> inside(static_cast<std::size_t>(n), 0);
  std::int64_t cut = 0;
  std::int64_t vol = 0;
  bool have_min = false;
  for (int i = 0; i < size_max; ++i) {
    const Vertex v = scores.order[i];
    std::int64_t internal = 0;
    for (Vertex w : g.neighbors(v))
      if (inside[w]) ++internal;
    inside[v] = 1;
    vol += g.degree(v);
    cut += g.degree(v) - 2 * internal;

    const int size = i + 1;
    if (size < size_min) continue;
    const double phi = vol == 0 ? 1.0 : static_cast<double>(cut) / static_cast<double>(vol);
    curve.sizes.push_back(size);
    curve.conductances.push_back(phi);
    if (size == n && size > size_min) continue;
    if (!have_min || phi < curve.min_value) {
      curve.min_value = phi;
      curve.argmin_size = size;
      have_min = true;
    }
  }
  return curve;
}

std::optional<std::size_t> stop_decision(std::span<const double> history) {
  for (std::size_t i = 0; i + 1 < history.size(); ++i)
    if (history[i + 1] > history[i]) return i;
  return std::nullopt;
}

}  // namespace lemon
