#include "lemon/planted.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lemon/rng.hpp"

namespace lemon {

PlantedSpec PlantedSpec::figure1(std::uint64_t rng_seed) {
  PlantedSpec s;
  s.groups = {{100, 0.9}, {100, 0.9}, {320, 0.2}};
  s.overlaps = {{0, 1, 20}};
  s.background_p = 0.05;
  s.rng_seed = rng_seed;
  return s;
}

void PlantedSpec::validate() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument("planted spec: " + what); };
  if (groups.empty() && extra_vertices <= 0) fail("no vertices");
  if (extra_vertices < 0) fail("negative extra vertex count");
  if (background_p < 0.0 || background_p > 1.0) fail("background probability outside [0, 1]");
  for (const auto& g : groups) {
    if (g.size < 1) fail("group size must be positive");
    if (g.p < 0.0 || g.p > 1.0) fail("group probability outside [0, 1]");
  }
  const auto k = static_cast<int>(groups.size());
  std::vector<int> incoming(groups.size(), 0);
  std::vector<int> outgoing(groups.size(), 0);
  for (const auto& o : overlaps) {
    if (o.group_a < 0 || o.group_b >= k || o.group_a >= o.group_b) fail("overlap must name groups a < b");
    if (o.shared < 0) fail("negative overlap");
    incoming[o.group_b] += o.shared;
    outgoing[o.group_a] += o.shared;
  }
  for (int g = 0; g < k; ++g) {
    if (incoming[g] > groups[g].size) fail("overlaps exceed size of group " + std::to_string(g));
    if (outgoing[g] > groups[g].size - incoming[g])
      fail("group " + std::to_string(g) + " has too few own vertices to share");
  }
}

PlantedGraph generate_planted(const PlantedSpec& spec) {
  spec.validate();

  // Vertex assignment.
  std::vector<std::vector<Vertex>> members(spec.groups.size());
  std::vector<std::vector<Vertex>> shareable(spec.groups.size());  // own vertices not yet lent out
  Vertex next_id = 0;
  for (std::size_t b = 0; b < spec.groups.size(); ++b) {
    for (const auto& o : spec.overlaps) {
      if (static_cast<std::size_t>(o.group_b) != b) continue;
      auto& pool = shareable[o.group_a];
      for (int i = 0; i < o.shared; ++i) {
        members[b].push_back(pool.back());
        pool.pop_back();
      }
    }
    const int fresh = spec.groups[b].size - static_cast<int>(members[b].size());
    for (int i = 0; i < fresh; ++i) {
      members[b].push_back(next_id);
      shareable[b].push_back(next_id);
      ++next_id;
    }
  }
  const Vertex n = next_id + spec.extra_vertices;

  std::vector<std::vector<int>> groups_of(static_cast<std::size_t>(n));
  for (std::size_t g = 0; g < members.size(); ++g)
    for (Vertex v : members[g]) groups_of[v].push_back(static_cast<int>(g));

  Rng rng(spec.rng_seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      double miss = 1.0;
      bool shared = false;
      for (int g : groups_of[u]) {
        if (std::find(groups_of[v].begin(), groups_of[v].end(), g) == groups_of[v].end()) continue;
        shared = true;
        miss *= 1.0 - spec.groups[g].p;
      }
      const double p = shared ? 1.0 - miss : spec.background_p;
      if (rng.uniform_real() < p) edges.emplace_back(u, v);
    }
  }

  PlantedGraph out;
  out.graph = Graph::from_edges(edges, n);
  out.truth.source = "planted";
  for (auto& m : members) {
    std::sort(m.begin(), m.end());
    out.truth.communities.push_back(std::move(m));
  }
  return out;
}

}  // namespace lemon
