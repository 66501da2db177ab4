#pragma once

/**
 * @file bijection.hpp
 * @brief Inequivalent minimal factorizations of (1 2 ... n) <-> plane trees.
 *
 * Each factor (k1 ... km) becomes a vertex of degree 2m whose edges, read
 * counterclockwise, are: outgoing k1, incoming k1, outgoing k2, ... The
 * incoming edges point back towards the factors applied earlier (or to the
 * tail leaves t_k), the outgoing ones towards later factors (or h_k).
 */

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "cyclefact/perm_core.hpp"
#include "cyclefact/plane_tree.hpp"

namespace cyclefact {

/// Throws std::invalid_argument unless `f` is a minimal factorization of the
/// n-cycle. Equivalent factorizations give identical trees.
PlaneTree factorization_to_tree(const Factorization& f);

/// Picks one of the currently removable vertices. Receives, for each
/// candidate, the smallest t-label among its incoming leaves, and returns the
/// index of the chosen candidate.
using RemovalChoice = std::function<std::size_t(std::span<const int> min_tail_labels)>;

/// Reads factors off the tree by repeatedly removing a vertex whose incoming
/// slots are all t-leaves. Returns the raw word in removal order (the first
/// removed vertex is the rightmost factor).
Factorization read_factorization(const PlaneTree& tree, const RemovalChoice& choose);

/// read_factorization with the smallest-t-label rule, in canonical form.
Factorization tree_to_factorization(const PlaneTree& tree);

/// Image of each k obtained by walking from t_k along edge directions,
/// always leaving a vertex by the edge following the incoming one
/// counterclockwise.
Permutation tree_permutation(const PlaneTree& tree);

struct BoundaryWalk {
  /// Leaves in walk order t1, h2, t2, ..., hn, tn, h1.
  std::vector<LeafLabel> labels;
  /// Directed edge traversals (from node, to node) in TreeNodes numbering,
  /// starting at the root.
  std::vector<std::pair<int, int>> steps;
};

/// Closed counterclockwise walk around the tree.
BoundaryWalk boundary_walk(const PlaneTree& tree);

}  // namespace cyclefact
