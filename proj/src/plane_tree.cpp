#include "cyclefact/plane_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclefact {

std::string LeafLabel::to_string() const {
  return (tail ? "t" : "h") + std::to_string(index);
}

PlaneTree::PlaneTree() : code_{0} {}

PlaneTree::PlaneTree(std::vector<int> preorder_arity) : code_(std::move(preorder_arity)) {
  // `open` counts subtrees still to be read.
  long open = 1;
  for (std::size_t i = 0; i < code_.size(); ++i) {
    if (open == 0)
      throw std::invalid_argument("tree code has trailing entries");
    const int a = code_[i];
    if (a != 0 && (a < 3 || a % 2 == 0))
      throw std::invalid_argument("internal vertex must have an odd number >= 3 of children, got " +
                                  std::to_string(a));
    open += a - 1;
  }
  if (open != 0)
    throw std::invalid_argument("tree code is truncated");
}

int PlaneTree::leaf_count() const {
  int leaves = 1;
  for (int a : code_)
    leaves += a == 0 ? 1 : 0;
  return leaves;
}

int PlaneTree::internal_count() const {
  return static_cast<int>(code_.size()) + 1 - leaf_count();
}

TypeVector PlaneTree::type() const {
  TypeVector alpha;
  for (int a : code_) {
    if (a != 0)
      alpha.add((a + 1) / 2);
  }
  return alpha;
}

TreeNodes::TreeNodes(const PlaneTree& tree) {
  const auto code = tree.code();
  const std::size_t size = code.size() + 1;
  parent.assign(size, -1);
  children.assign(size, {});
  boundary_position.assign(size, -1);
  parent_slot_out.assign(size, false);

  // Preorder reconstruction with an explicit stack of (node, children left).
  std::vector<std::pair<int, int>> stack;
  stack.emplace_back(0, 1);
  boundary_position[0] = 0;
  leaves.push_back(0);
  for (std::size_t i = 0; i < code.size(); ++i) {
    const int node = static_cast<int>(i) + 1;
    while (stack.back().second == 0)
      stack.pop_back();
    const int p = stack.back().first;
    --stack.back().second;
    parent[node] = p;
    children[p].push_back(node);
    if (code[i] == 0) {
      boundary_position[node] = static_cast<int>(leaves.size());
      leaves.push_back(node);
    } else {
      stack.emplace_back(node, code[i]);
    }
  }
  // The root is a leaf; keep its single edge out of `children` so that
  // is_leaf() is uniform. Node 1 hangs off it.
  children[0].clear();

  for (std::size_t v = 1; v < size; ++v) {
    if (is_leaf(static_cast<int>(v)))
      continue;
    const int p = parent[v];
    if (p == 0) {
      parent_slot_out[v] = true;  // the edge to h1 leaves the top vertex
      continue;
    }
    int r = 1;
    for (int c : children[p]) {
      if (c == static_cast<int>(v))
        break;
      ++r;
    }
    // The edge is incoming at p exactly when it is outgoing at v.
    parent_slot_out[v] = !slot_is_out(p, r);
  }
}

std::vector<int> TreeNodes::rotation(int v) const {
  std::vector<int> out;
  if (v == 0)
    return {1};
  out.push_back(parent[v]);
  out.insert(out.end(), children[v].begin(), children[v].end());
  return out;
}

int TreeNodes::slot_of(int v, int neighbour) const {
  if (v == 0 || parent[v] == neighbour)
    return 0;
  const auto& ch = children[v];
  const auto it = std::find(ch.begin(), ch.end(), neighbour);
  if (it == ch.end())
    throw std::logic_error("nodes are not adjacent");
  return static_cast<int>(it - ch.begin()) + 1;
}

LeafLabel TreeNodes::label(int leaf) const {
  const int pos = boundary_position[leaf];
  if (pos < 0)
    throw std::invalid_argument("node is not a leaf");
  return pos % 2 == 0 ? LeafLabel{false, pos / 2 + 1} : LeafLabel{true, (pos + 1) / 2};
}

std::vector<LabeledLeaf> boundary_leaves(const PlaneTree& tree) {
  const TreeNodes nodes(tree);
  if (nodes.leaves.size() % 2 != 0)
    throw std::invalid_argument("odd leaf count");
  std::vector<LabeledLeaf> out;
  out.reserve(nodes.leaves.size());
  for (int leaf : nodes.leaves)
    out.push_back({leaf, nodes.label(leaf)});
  return out;
}

bool validate(const PlaneTree& tree, const TypeVector& alpha) {
  return tree.type() == alpha && tree.leaf_count() == 2 * (alpha.weight() + 1);
}

namespace {

HeadTailProfile profile_impl(const PlaneTree& tree, bool skip_top_head) {
  const TreeNodes nodes(tree);
  HeadTailProfile profile;
  for (int v = 1; v < static_cast<int>(nodes.size()); ++v) {
    if (nodes.is_leaf(v))
      continue;
    const auto rot = nodes.rotation(v);
    bool all_out_leaves = true;
    bool all_in_leaves = true;
    for (int r = 0; r < static_cast<int>(rot.size()); ++r) {
      const bool leaf = nodes.is_leaf(rot[r]);
      if (nodes.slot_is_out(v, r))
        all_out_leaves = all_out_leaves && leaf;
      else
        all_in_leaves = all_in_leaves && leaf;
    }
    const int j = static_cast<int>(rot.size()) / 2;
    if (all_out_leaves && !(skip_top_head && v == 1))
      profile.heads.add(j);
    if (all_in_leaves)
      profile.tails.add(j);
  }
  return profile;
}

}  // namespace

HeadTailProfile tree_profile(const PlaneTree& tree) { return profile_impl(tree, false); }

HeadTailProfile reduced_tree_profile(const PlaneTree& tree) { return profile_impl(tree, true); }

}  // namespace cyclefact
