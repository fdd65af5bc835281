#include "lemon/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lemon {

namespace {

bool skip_line(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

std::vector<std::int64_t> parse_ids(std::string_view line, std::size_t line_no) {
  std::vector<std::int64_t> ids;
  std::size_t pos = 0;
  while (pos < line.size()) {
    pos = line.find_first_not_of(" \t\r,", pos);
    if (pos == std::string_view::npos) break;
    const auto end = std::min(line.find_first_of(" \t\r,", pos), line.size());
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc{} || ptr != line.data() + end || value < 0)
      throw DataError("line " + std::to_string(line_no) + ": invalid vertex id '" +
                      std::string(line.substr(pos, end - pos)) + "'");
    ids.push_back(value);
    pos = end;
  }
  return ids;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

}  // namespace

IdMap IdMap::from_ids(std::vector<std::int64_t> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  IdMap m;
  m.external = std::move(ids);
  m.dense.reserve(m.external.size());
  for (std::size_t i = 0; i < m.external.size(); ++i) m.dense.emplace(m.external[i], static_cast<Vertex>(i));
  return m;
}

IdMap IdMap::identity(Vertex n) {
  std::vector<std::int64_t> ids(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) ids[v] = v;
  return from_ids(std::move(ids));
}

std::optional<Vertex> IdMap::find(std::int64_t id) const {
  auto it = dense.find(id);
  if (it == dense.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::int64_t, std::int64_t>> read_edge_pairs(std::istream& in) {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    const auto ids = parse_ids(line, line_no);
    if (ids.size() != 2) throw DataError("line " + std::to_string(line_no) + ": expected two vertex ids");
    pairs.emplace_back(ids[0], ids[1]);
  }
  return pairs;
}

std::vector<std::vector<std::int64_t>> read_community_lines(std::istream& in) {
  std::vector<std::vector<std::int64_t>> lines;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    lines.push_back(parse_ids(line, line_no));
  }
  return lines;
}

std::vector<std::vector<Vertex>> map_communities(const std::vector<std::vector<std::int64_t>>& lines,
                                                 const IdMap& ids) {
  std::vector<std::vector<Vertex>> out;
  std::vector<std::int64_t> unknown;
  for (const auto& line : lines) {
    std::vector<Vertex> c;
    for (auto id : line) {
      if (auto v = ids.find(id))
        c.push_back(*v);
      else
        unknown.push_back(id);
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    out.push_back(std::move(c));
  }
  if (!unknown.empty()) {
    std::sort(unknown.begin(), unknown.end());
    unknown.erase(std::unique(unknown.begin(), unknown.end()), unknown.end());
    std::string msg = "community ids not in graph:";
    for (std::size_t i = 0; i < unknown.size() && i < 20; ++i) msg += " " + std::to_string(unknown[i]);
    if (unknown.size() > 20) msg += " ...";
    throw DataError(msg);
  }
  return out;
}

Dataset load_dataset(const std::string& graph_path, const std::optional<std::string>& truth_path) {
  auto graph_in = open(graph_path);
  const auto pairs = read_edge_pairs(graph_in);
  if (pairs.empty()) throw DataError("empty graph: " + graph_path);

  std::vector<std::vector<std::int64_t>> truth_lines;
  if (truth_path) {
    auto truth_in = open(*truth_path);
    truth_lines = read_community_lines(truth_in);
  }

  std::vector<std::int64_t> all_ids;
  all_ids.reserve(pairs.size() * 2);
  for (const auto& [a, b] : pairs) {
    all_ids.push_back(a);
    all_ids.push_back(b);
  }
  for (const auto& line : truth_lines) all_ids.insert(all_ids.end(), line.begin(), line.end());

  Dataset ds;
  ds.ids = IdMap::from_ids(std::move(all_ids));
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.emplace_back(*ds.ids.find(a), *ds.ids.find(b));
  ds.graph = Graph::from_edges(edges, static_cast<Vertex>(ds.ids.external.size()));

  if (truth_path) {
    GroundTruth gt;
    gt.source = *truth_path;
    for (auto& c : map_communities(truth_lines, ds.ids))
      if (!c.empty()) gt.communities.push_back(std::move(c));
    if (gt.communities.empty()) throw DataError("no communities in " + *truth_path);
    ds.truth = std::move(gt);
  }
  return ds;
}

void write_edge_list(std::ostream& out, const Graph& g, const IdMap& ids) {
  for (Vertex u = 0; u < g.size(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) out << ids.to_external(u) << '\t' << ids.to_external(v) << '\n';
}

void write_communities(std::ostream& out, const std::vector<std::vector<Vertex>>& communities, const IdMap& ids) {
  for (const auto& c : communities) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "\t" : "") << ids.to_external(c[i]);
    out << '\n';
  }
}

}  // namespace lemon
