#include "lemon/graph.hpp"

#include <algorithm>
#include <deque>

namespace lemon {

Graph Graph::from_edges(std::span<const Edge> edges, Vertex min_vertices) {
  Vertex n = min_vertices;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0) throw DataError("negative vertex id in edge list");
    n = std::max({n, static_cast<Vertex>(u + 1), static_cast<Vertex>(v + 1)});
  }

  std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    ++counts[u + 1];
    ++counts[v + 1];
  }
  for (Vertex v = 0; v < n; ++v) counts[v + 1] += counts[v];

  std::vector<Vertex> raw(static_cast<std::size_t>(counts[n]));
  std::vector<std::int64_t> cursor(counts.begin(), counts.end() - 1);
  for (const auto& [u, v] : edges) {
    if (u == v) continue;
    raw[cursor[u]++] = v;
    raw[cursor[v]++] = u;
  }

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.targets_.reserve(raw.size());
  for (Vertex v = 0; v < n; ++v) {
    auto first = raw.begin() + counts[v];
    auto last = raw.begin() + counts[v + 1];
    std::sort(first, last);
    last = std::unique(first, last);
    g.targets_.insert(g.targets_.end(), first, last);
    g.offsets_[v + 1] = static_cast<std::int64_t>(g.targets_.size());
  }
  g.targets_.shrink_to_fit();
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph build_graph(std::span<const Edge> edges) {
  if (edges.empty()) throw DataError("empty graph");
  return Graph::from_edges(edges);
}

std::optional<Vertex> SampledSubgraph::to_local(Vertex global) const {
  auto it = global_to_local.find(global);
  if (it == global_to_local.end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> SampledSubgraph::to_local(std::span<const Vertex> globals) const {
  std::vector<Vertex> out;
  out.reserve(globals.size());
  for (Vertex v : globals) {
    auto local = to_local(v);
    if (!local) throw std::out_of_range("vertex " + std::to_string(v) + " not in subgraph");
    out.push_back(*local);
  }
  return out;
}

std::vector<Vertex> SampledSubgraph::to_global(std::span<const Vertex> locals) const {
  std::vector<Vertex> out;
  out.reserve(locals.size());
  for (Vertex v : locals) out.push_back(local_to_global.at(v));
  return out;
}

SampledSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");

  SampledSubgraph sub;
  sub.local_to_global.assign(vertices.begin(), vertices.end());
  std::sort(sub.local_to_global.begin(), sub.local_to_global.end());
  sub.local_to_global.erase(std::unique(sub.local_to_global.begin(), sub.local_to_global.end()),
                            sub.local_to_global.end());
  if (sub.local_to_global.front() < 0 || sub.local_to_global.back() >= g.size())
    throw std::out_of_range("induced_subgraph: vertex outside graph");

  const auto n = static_cast<Vertex>(sub.local_to_global.size());
  sub.global_to_local.reserve(sub.local_to_global.size());
  for (Vertex i = 0; i < n; ++i) sub.global_to_local.emplace(sub.local_to_global[i], i);

  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex w : g.neighbors(sub.local_to_global[i])) {
      auto it = sub.global_to_local.find(w);
      if (it != sub.global_to_local.end() && i < it->second) edges.emplace_back(i, it->second);
    }
  }
  sub.graph = Graph::from_edges(edges, n);
  return sub;
}

std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u, Vertex v, int max_len) {
  if (u == v || max_len < 1) throw std::invalid_argument("shortest_path: need u != v and max_len >= 1");

  // Depth-bounded BFS; parents recorded in a sparse map so the cost stays local.
  std::unordered_map<Vertex, Vertex> parent{{u, u}};
  std::vector<Vertex> frontier{u};
  for (int depth = 1; depth <= max_len && !frontier.empty(); ++depth) {
    std::vector<Vertex> next;
    for (Vertex x : frontier) {
      for (Vertex w : g.neighbors(x)) {
        if (!parent.emplace(w, x).second) continue;
        if (w == v) {
          std::vector<Vertex> path{v};
          while (path.back() != u) path.push_back(parent.at(path.back()));
          std::reverse(path.begin(), path.end());
          return path;
        }
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::int64_t volume(const Graph& g, std::span<const Vertex> vertices) {
  std::int64_t total = 0;
  for (Vertex v : vertices) total += g.degree(v);
  return total;
}

}  // namespace lemon
