#pragma once

/**
 * @file plane_tree.hpp
 * @brief Rooted plane trees whose root is a leaf and whose internal vertices
 * have even degree 2j, j >= 2.
 *
 * A tree is stored as the preorder list of child counts of the subtree hanging
 * below the root leaf (a leaf has 0 children, a vertex of degree 2j has 2j-1).
 * The children of a vertex are listed in counterclockwise order starting just
 * after the edge to its parent, so the depth-first leaf order is the
 * counterclockwise boundary order h1, t1, h2, t2, ..., hn, tn.
 */

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cyclefact/perm_core.hpp"

namespace cyclefact {

struct LeafLabel {
  bool tail = false;  // t-leaf when true, h-leaf otherwise
  int index = 0;      // 1-based point label

  bool operator==(const LeafLabel&) const = default;
  std::string to_string() const;
};

class PlaneTree {
 public:
  /// Tree with no internal vertex: root h1 joined to the single leaf t1.
  PlaneTree();
  /// Throws std::invalid_argument unless `preorder_arity` is a well-formed
  /// preorder code with every entry 0 or odd >= 3.
  explicit PlaneTree(std::vector<int> preorder_arity);

  std::span<const int> code() const { return code_; }

  /// Leaves including the root.
  int leaf_count() const;
  int internal_count() const;
  /// n such that leaf_count() == 2n.
  int n() const { return leaf_count() / 2; }
  /// alpha_j = number of internal vertices of degree 2j.
  TypeVector type() const;

  bool operator==(const PlaneTree&) const = default;
  auto operator<=>(const PlaneTree&) const = default;

 private:
  std::vector<int> code_;
};

/// Node arena derived from a PlaneTree. Node 0 is the root leaf h1, node i+1
/// is the i-th entry of the preorder code. The edge joining a non-root node to
/// its parent has the same id as the node.
struct TreeNodes {
  std::vector<int> parent;                 // -1 for the root
  std::vector<std::vector<int>> children;  // counterclockwise after parent
  std::vector<int> boundary_position;      // leaves only, -1 on internal nodes
  std::vector<int> leaves;                 // leaf node ids in boundary order
  /// For internal nodes: whether the parent edge is an outgoing (h-side)
  /// slot. Slots alternate out/in around a vertex.
  std::vector<bool> parent_slot_out;

  explicit TreeNodes(const PlaneTree& tree);

  std::size_t size() const { return parent.size(); }
  bool is_leaf(int v) const { return children[v].empty(); }
  int degree(int v) const { return v == 0 ? 1 : static_cast<int>(children[v].size()) + 1; }
  /// Neighbours in counterclockwise order starting with the parent.
  std::vector<int> rotation(int v) const;
  /// Rotation index of `neighbour` around `v`.
  int slot_of(int v, int neighbour) const;
  /// Whether rotation slot `r` of internal node `v` is an outgoing edge.
  bool slot_is_out(int v, int r) const { return (r % 2 == 0) == parent_slot_out[v]; }
  LeafLabel label(int leaf) const;
};

struct LabeledLeaf {
  int node = 0;
  LeafLabel label;
};

/// Leaves in counterclockwise boundary order starting at the root, labeled
/// h1, t1, h2, t2, ...
std::vector<LabeledLeaf> boundary_leaves(const PlaneTree& tree);

/// True iff the degree census matches `alpha` and there are 2(<alpha>+1)
/// leaves.
bool validate(const PlaneTree& tree, const TypeVector& alpha);

/// t_j counts degree-2j vertices whose j incoming slots all hold leaves, h_j
/// those whose outgoing slots all hold leaves (the root counts as a leaf).
HeadTailProfile tree_profile(const PlaneTree& tree);

/// Same as tree_profile but with the top vertex (the neighbour of the root)
/// left out of the head count.
HeadTailProfile reduced_tree_profile(const PlaneTree& tree);

}  // namespace cyclefact
