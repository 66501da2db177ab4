#pragma once

#include <array>
#include <vector>

#include "cyclefact/plane_tree.hpp"

namespace cyclefact::detail {

/// Plane graph given by a counterclockwise rotation of edge ids at each node.
/// Construction device for the factorization and cactus maps into trees.
struct RotationGraph {
  std::vector<std::vector<int>> rotation;
  std::vector<std::array<int, 2>> ends;

  int add_node() {
    rotation.emplace_back();
    return static_cast<int>(rotation.size()) - 1;
  }
  /// Adds an edge without inserting it into any rotation.
  int add_edge(int a, int b) {
    ends.push_back({a, b});
    return static_cast<int>(ends.size()) - 1;
  }
  void set_end(int edge, int side, int node) { ends[edge][side] = node; }
  int other_end(int edge, int node) const {
    return ends[edge][0] == node ? ends[edge][1] : ends[edge][0];
  }

  /// Reads the graph as a plane tree hanging from `root_leaf`. Throws
  /// std::invalid_argument when the graph is not a tree or a vertex has a
  /// degree the tree type does not allow.
  PlaneTree to_plane_tree(int root_leaf) const;
};

}  // namespace cyclefact::detail
