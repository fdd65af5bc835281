#include "lemon/seeding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lemon/rng.hpp"

namespace lemon {

namespace {

constexpr std::pair<SeedStrategy, std::string_view> kStrategyNames[] = {
    {SeedStrategy::high_degree, "high_degree"}, {SeedStrategy::low_degree, "low_degree"},
    {SeedStrategy::triangle, "triangle"},       {SeedStrategy::random, "random"},
    {SeedStrategy::inward_ratio, "inward_ratio"}, {SeedStrategy::user, "user"},
    {SeedStrategy::enlarged, "enlarged"},
};

std::vector<Vertex> sample_without_replacement(std::vector<Vertex> pool, int count, Rng& rng) {
  for (int i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.uniform_index(pool.size() - static_cast<std::size_t>(i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  pool.resize(static_cast<std::size_t>(count));
  return pool;
}

// Members ranked by descending key, then ascending id; returns the first `take`.
template <class Key>
std::vector<Vertex> top_by(std::vector<Vertex> members, std::size_t take, Key key) {
  std::sort(members.begin(), members.end(), [&](Vertex a, Vertex b) {
    const auto ka = key(a);
    const auto kb = key(b);
    if (ka != kb) return ka > kb;
    return a < b;
  });
  members.resize(std::min(take, members.size()));
  return members;
}

std::vector<Vertex> pick_triangle(const Graph& g, std::span<const Vertex> community, Rng& rng) {
  const SampledSubgraph sub = induced_subgraph(g, community);
  const Graph& h = sub.graph;
  // Each triangle u < v < w is visited once via forward neighbor intersection.
  auto for_each_triangle = [&](auto&& visit) {
    for (Vertex u = 0; u < h.size(); ++u) {
      const auto nu = h.neighbors(u);
      for (Vertex v : nu) {
        if (v <= u) continue;
        const auto nv = h.neighbors(v);
        auto i = std::upper_bound(nu.begin(), nu.end(), v);
        auto j = std::upper_bound(nv.begin(), nv.end(), v);
        while (i != nu.end() && j != nv.end()) {
          if (*i < *j) {
            ++i;
          } else if (*j < *i) {
            ++j;
          } else {
            if (visit(u, v, *i)) return;
            ++i;
            ++j;
          }
        }
      }
    }
  };

  std::uint64_t total = 0;
  for_each_triangle([&](Vertex, Vertex, Vertex) {
    ++total;
    return false;
  });
  if (total == 0) throw std::invalid_argument("no triangle");

  const std::uint64_t target = rng.uniform_index(total);
  std::uint64_t seen = 0;
  std::vector<Vertex> picked;
  for_each_triangle([&](Vertex u, Vertex v, Vertex w) {
    if (seen++ != target) return false;
    picked = {u, v, w};
    return true;
  });
  return sub.to_global(picked);
}

}  // namespace

std::string_view to_string(SeedStrategy s) {
  for (const auto& [value, name] : kStrategyNames)
    if (value == s) return name;
  return "unknown";
}

SeedStrategy parse_seed_strategy(std::string_view name) {
  for (const auto& [value, n] : kStrategyNames)
    if (n == name) return value;
  throw std::invalid_argument("unknown seed strategy: " + std::string(name));
}

SeedSet make_seed_set(std::vector<Vertex> vertices, SeedStrategy origin, std::uint64_t rng_seed) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return SeedSet{std::move(vertices), origin, rng_seed};
}

double inward_ratio(const Graph& g, Vertex v, std::span<const Vertex> community_sorted) {
  const auto d = g.degree(v);
  if (d == 0) return 0.0;
  std::int64_t inside = 0;
  for (Vertex w : g.neighbors(v))
    if (std::binary_search(community_sorted.begin(), community_sorted.end(), w)) ++inside;
  return static_cast<double>(inside) / static_cast<double>(d);
}

SeedSet select_seeds(const Graph& g, std::span<const Vertex> community, SeedStrategy strategy, int count,
                     std::uint64_t rng_seed) {
  std::vector<Vertex> members(community.begin(), community.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw std::invalid_argument("select_seeds: empty community");
  if (count < 1 || static_cast<std::size_t>(count) > members.size())
    throw std::invalid_argument("select_seeds: seed count exceeds community size");
  for (Vertex v : members)
    if (v < 0 || v >= g.size()) throw DataError("select_seeds: community vertex " + std::to_string(v) + " not in graph");

  Rng rng(rng_seed);
  const std::size_t third = std::max<std::size_t>(members.size() / 3, static_cast<std::size_t>(count));
  std::vector<Vertex> chosen;
  switch (strategy) {
    case SeedStrategy::high_degree:
      chosen = sample_without_replacement(top_by(members, third, [&](Vertex v) { return g.degree(v); }), count, rng);
      break;
    case SeedStrategy::low_degree:
      // Ascending degree, ties still to the lower id.
      chosen = sample_without_replacement(
          top_by(members, third, [&](Vertex v) { return -g.degree(v); }), count, rng);
      break;
    case SeedStrategy::inward_ratio:
      chosen = sample_without_replacement(
          top_by(members, third, [&](Vertex v) { return inward_ratio(g, v, members); }), count, rng);
      break;
    case SeedStrategy::random:
      chosen = sample_without_replacement(members, count, rng);
      break;
    case SeedStrategy::triangle:
      if (count != 3) throw std::invalid_argument("triangle seeding requires exactly 3 seeds");
      chosen = pick_triangle(g, members, rng);
      break;
    case SeedStrategy::user:
    case SeedStrategy::enlarged:
      throw std::invalid_argument("select_seeds: strategy cannot draw seeds");
  }
  return make_seed_set(std::move(chosen), strategy, rng_seed);
}

SeedSet enlarge_seed_set(const Graph& g, const SeedSet& seeds, bool until_fixed_point) {
  SeedSet current = seeds;
  for (;;) {
    std::vector<Vertex> grown = current.vertices;
    const auto& base = current.vertices;
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j) {
        const auto path = shortest_path(g, base[i], base[j], 3);
        if (!path) continue;
        grown.insert(grown.end(), path->begin() + 1, path->end() - 1);
      }
    SeedSet next = make_seed_set(std::move(grown), SeedStrategy::enlarged, seeds.rng_seed);
    const bool changed = next.vertices.size() != current.vertices.size();
    if (!changed) {
      if (current.vertices.size() != seeds.vertices.size()) current.origin = SeedStrategy::enlarged;
      return current;
    }
    current = std::move(next);
    if (!until_fixed_point) return current;
  }
}

int seed_count_policy(DatasetKind kind, int community_size, double ratio) {
  if (community_size < 1) throw std::invalid_argument("seed_count_policy: community_size must be >= 1");
  if (kind == DatasetKind::real) return 3;
  return std::max(1, static_cast<int>(std::lround(ratio * community_size)));
}

}  // namespace lemon
