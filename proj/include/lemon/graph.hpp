#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lemon {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed or inconsistent input data (files, vertex ids, empty graphs).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph in compressed (offset/target) adjacency form.
///
/// Neighbor lists are sorted ascending without duplicates or self-loops, and
/// the adjacency is symmetric. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from an arbitrary edge list. Duplicates merge, self-loops drop.
  /// `min_vertices` pads the vertex count so trailing isolated ids survive.
  static Graph from_edges(std::span<const Edge> edges, Vertex min_vertices = 0);

  Vertex size() const { return static_cast<Vertex>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(targets_.size() / 2); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::int64_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const std::int64_t> offsets() const { return offsets_; }
  std::span<const Vertex> targets() const { return targets_; }

 private:
  std::vector<std::int64_t> offsets_;
  std::vector<Vertex> targets_;
};

/// build_graph with the "empty graph" guard; n = max id + 1.
Graph build_graph(std::span<const Edge> edges);

/// Induced subgraph together with its local<->global id bijection.
/// Local ids follow ascending global id order.
struct SampledSubgraph {
  Graph graph;
  std::vector<Vertex> local_to_global;
  std::unordered_map<Vertex, Vertex> global_to_local;

  Vertex size() const { return graph.size(); }
  std::optional<Vertex> to_local(Vertex global) const;
  std::vector<Vertex> to_local(std::span<const Vertex> globals) const;
  std::vector<Vertex> to_global(std::span<const Vertex> locals) const;
};

SampledSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Breadth-first shortest path from u to v with at most `max_len` edges.
/// Neighbors are explored in ascending id order; the first path found wins.
std::optional<std::vector<Vertex>> shortest_path(const Graph& g, Vertex u, Vertex v, int max_len);

/// Sum of degrees over `vertices`.
std::int64_t volume(const Graph& g, std::span<const Vertex> vertices);

}  // namespace lemon
