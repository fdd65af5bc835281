#pragma once

#include <cstdint>
#include <vector>

#include "lemon/graph.hpp"
#include "lemon/metrics.hpp"

namespace lemon {

/// Overlapping planted-group graph: G(n, p) inside each group, background
/// noise between everything else.
struct PlantedSpec {
  struct Group {
    int size = 0;
    double p = 0.0;
  };
  struct Overlap {
    int group_a = 0;  // must precede group_b
    int group_b = 0;
    int shared = 0;
  };

  std::vector<Group> groups;
  std::vector<Overlap> overlaps;
  double background_p = 0.0;
  /// Vertices outside every group (background edges only).
  int extra_vertices = 0;
  std::uint64_t rng_seed = 0;

  /// Groups A, B (100 @ 0.9, 20 shared) and C (320 @ 0.2) over 0.05 noise; 500 vertices.
  static PlantedSpec figure1(std::uint64_t rng_seed);

  void validate() const;
};

struct PlantedGraph {
  Graph graph;
  GroundTruth truth;  // one community per group, in group order
};

/// Ids are assigned group by group: a group first takes its shared vertices
/// from the tail of each earlier group it overlaps, then fresh ids. Each
/// unordered pair gets one uniform draw: inside any common group the edge
/// probability is 1 - prod(1 - p_g), otherwise background_p.
PlantedGraph generate_planted(const PlantedSpec& spec);

}  // namespace lemon
