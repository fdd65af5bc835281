#include "lemon/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lemon {

namespace {

// Dense scratch reused across steps of one sampling; only touched slots are reset.
class WalkWorkspace {
 public:
  explicit WalkWorkspace(Vertex n) : acc_(static_cast<std::size_t>(n), 0.0), touched_(n, false) {}

  WalkState step(const Graph& g, const WalkState& state) {
    for (std::size_t i = 0; i < state.support.size(); ++i) {
      const Vertex u = state.support[i];
      const double share = state.mass[i] / static_cast<double>(g.degree(u) + 1);
      add(u, share);
      for (Vertex w : g.neighbors(u)) add(w, share);
    }
    std::sort(list_.begin(), list_.end());

    WalkState next;
    next.step_count = state.step_count + 1;
    next.support = list_;
    next.mass.reserve(list_.size());
    for (Vertex v : list_) {
      next.mass.push_back(acc_[v]);
      acc_[v] = 0.0;
      touched_[v] = false;
    }
    list_.clear();
    return next;
  }

 private:
  void add(Vertex v, double x) {
    if (!touched_[v]) {
      touched_[v] = true;
      list_.push_back(v);
    }
    acc_[v] += x;
  }

  std::vector<double> acc_;
  std::vector<bool> touched_;
  std::vector<Vertex> list_;
};

void check_seeds(const Graph& g, std::span<const Vertex> seeds) {
  if (seeds.empty()) throw std::invalid_argument("sampler: empty seed set");
  for (Vertex s : seeds)
    if (s < 0 || s >= g.size()) throw DataError("seed " + std::to_string(s) + " not in graph");
}

}  // namespace

WalkState WalkState::uniform_over(std::span<const Vertex> seeds) {
  WalkState state;
  state.support.assign(seeds.begin(), seeds.end());
  std::sort(state.support.begin(), state.support.end());
  state.support.erase(std::unique(state.support.begin(), state.support.end()), state.support.end());
  state.mass.assign(state.support.size(), 1.0 / static_cast<double>(state.support.size()));
  return state;
}

double WalkState::total() const { return std::accumulate(mass.begin(), mass.end(), 0.0); }

double WalkState::at(Vertex v) const {
  auto it = std::lower_bound(support.begin(), support.end(), v);
  if (it == support.end() || *it != v) return 0.0;
  return mass[static_cast<std::size_t>(it - support.begin())];
}

std::size_t WalkState::spread(double threshold) const {
  return static_cast<std::size_t>(
      std::count_if(mass.begin(), mass.end(), [threshold](double m) { return m > threshold; }));
}

WalkState walk_step(const Graph& g, const WalkState& state) {
  WalkWorkspace ws(g.size());
  return ws.step(g, state);
}

std::vector<Vertex> sample_vertices(const Graph& g, std::span<const Vertex> seeds, Vertex target_size,
                                    const SamplerOptions& options) {
  check_seeds(g, seeds);
  WalkState state = WalkState::uniform_over(seeds);
  if (static_cast<Vertex>(state.support.size()) >= target_size) return state.support;

  WalkWorkspace ws(g.size());
  while (state.step_count < options.max_steps &&
         state.spread(options.spread_threshold) < static_cast<std::size_t>(target_size)) {
    WalkState next = ws.step(g, state);
    const bool stalled = next.support.size() == state.support.size();
    state = std::move(next);
    // A closed component cannot spread further; extra steps only reshuffle mass.
    if (stalled && options.spread_threshold <= 0.0) break;
  }

  std::vector<Vertex> chosen = WalkState::uniform_over(seeds).support;
  std::vector<std::size_t> order(state.support.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (state.mass[a] != state.mass[b]) return state.mass[a] > state.mass[b];
    return state.support[a] < state.support[b];
  });
  const std::vector<Vertex> seed_sorted = chosen;
  for (std::size_t idx : order) {
    if (static_cast<Vertex>(chosen.size()) >= target_size) break;
    if (state.mass[idx] <= options.spread_threshold) break;
    const Vertex v = state.support[idx];
    if (std::binary_search(seed_sorted.begin(), seed_sorted.end(), v)) continue;
    chosen.push_back(v);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

SampledSubgraph sample_subgraph(const Graph& g, std::span<const Vertex> seeds, Vertex target_size,
                                const SamplerOptions& options) {
  return induced_subgraph(g, sample_vertices(g, seeds, target_size, options));
}

std::vector<Vertex> bfs_sample(const Graph& g, std::span<const Vertex> seeds, Vertex target_size) {
  check_seeds(g, seeds);
  std::vector<Vertex> chosen = WalkState::uniform_over(seeds).support;
  std::vector<bool> seen(static_cast<std::size_t>(g.size()), false);
  for (Vertex s : chosen) seen[s] = true;
  for (std::size_t head = 0; head < chosen.size() && static_cast<Vertex>(chosen.size()) < target_size; ++head) {
    for (Vertex w : g.neighbors(chosen[head])) {
      if (seen[w]) continue;
      seen[w] = true;
      chosen.push_back(w);
      if (static_cast<Vertex>(chosen.size()) >= target_size) break;
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace lemon
