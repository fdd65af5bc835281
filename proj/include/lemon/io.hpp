#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lemon/graph.hpp"
#include "lemon/metrics.hpp"

namespace lemon {

/// External (file) vertex ids <-> dense ids. Dense ids follow ascending external order.
struct IdMap {
  std::vector<std::int64_t> external;
  std::unordered_map<std::int64_t, Vertex> dense;

  static IdMap from_ids(std::vector<std::int64_t> ids);
  static IdMap identity(Vertex n);

  std::optional<Vertex> find(std::int64_t id) const;
  std::int64_t to_external(Vertex v) const { return external.at(static_cast<std::size_t>(v)); }
};

struct Dataset {
  Graph graph;
  IdMap ids;
  std::optional<GroundTruth> truth;
};

/// Edge list: two integer ids per line, '#' comments and blank lines skipped.
std::vector<std::pair<std::int64_t, std::int64_t>> read_edge_pairs(std::istream& in);

/// Communities: one per line, whitespace-separated ids, '#' comments and blank lines skipped.
std::vector<std::vector<std::int64_t>> read_community_lines(std::istream& in);

/// Loads a graph and optional ground truth. Ground-truth ids that never occur in
/// an edge become isolated vertices rather than errors.
Dataset load_dataset(const std::string& graph_path, const std::optional<std::string>& truth_path = std::nullopt);

/// Maps external ids through `ids`; unknown ids raise DataError listing them.
std::vector<std::vector<Vertex>> map_communities(const std::vector<std::vector<std::int64_t>>& lines,
                                                 const IdMap& ids);

void write_edge_list(std::ostream& out, const Graph& g, const IdMap& ids);
void write_communities(std::ostream& out, const std::vector<std::vector<Vertex>>& communities, const IdMap& ids);

}  // namespace lemon
