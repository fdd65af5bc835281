#include "lemon/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lemon {

namespace {
std::vector<Vertex> sorted_unique(std::span<const Vertex> v) {
  std::vector<Vertex> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}
}  // namespace

F1Score f1_score(std::span<const Vertex> detected, std::span<const Vertex> truth) {
  if (truth.empty()) throw std::invalid_argument("f1_score: empty ground truth");
  const auto c = sorted_unique(detected);
  const auto t = sorted_unique(truth);
  if (c.empty()) return {};

  std::vector<Vertex> common;
  std::set_intersection(c.begin(), c.end(), t.begin(), t.end(), std::back_inserter(common));
  F1Score s;
  s.precision = static_cast<double>(common.size()) / static_cast<double>(c.size());
  s.recall = static_cast<double>(common.size()) / static_cast<double>(t.size());
  if (s.precision + s.recall > 0.0) s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

double GroundTruth::average_size() const {
  if (communities.empty()) return 0.0;
  double total = 0.0;
  for (const auto& c : communities) total += static_cast<double>(c.size());
  return total / static_cast<double>(communities.size());
}

std::vector<Vertex> GroundTruth::ids_outside(Vertex n) const {
  std::vector<Vertex> bad;
  for (const auto& c : communities)
    for (Vertex v : c)
      if (v < 0 || v >= n) bad.push_back(v);
  return sorted_unique(bad);
}

Summary summarize(std::span<const double> values) {
  Summary s;
  if (values.empty()) return s;
  double total = 0.0;
  for (double x : values) total += x;
  s.mean = total / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double x : values) sq += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return s;
}

std::vector<MatchScore> best_match_scores(const std::vector<std::vector<Vertex>>& detected,
                                          const std::vector<std::vector<Vertex>>& truth) {
  std::vector<MatchScore> out;
  out.reserve(detected.size());
  for (const auto& c : detected) {
    MatchScore best;
    for (std::size_t j = 0; j < truth.size(); ++j) {
      const auto s = f1_score(c, truth[j]);
      if (j == 0 || s.f1 > best.score.f1) best = {j, s};
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace lemon
