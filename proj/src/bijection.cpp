#include "cyclefact/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclefact/rotation_graph.hpp"

namespace cyclefact {

PlaneTree factorization_to_tree(const Factorization& f) {
  if (!is_minimal_ncycle_factorization(f))
    throw std::invalid_argument("not a minimal factorization of the " + std::to_string(f.n()) +
                                "-cycle: " + f.to_string());
  const int n = f.n();
  detail::RotationGraph g;

  // Line k starts as one edge whose tail sits on leaf t_k; `free_head[k]` is
  // the edge labeled k whose head is not yet attached.
  std::vector<int> free_head(n + 1);
  for (int k = 1; k <= n; ++k) {
    const int t_leaf = g.add_node();
    free_head[k] = g.add_edge(t_leaf, -1);
    g.rotation[t_leaf].push_back(free_head[k]);
  }

  const auto factors = f.factors();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const int v = g.add_node();
    for (int k : it->elements()) {
      const int in = free_head[k];
      g.set_end(in, 1, v);
      const int out = g.add_edge(v, -1);
      g.rotation[v].push_back(out);
      g.rotation[v].push_back(in);
      free_head[k] = out;
    }
  }

  int root = -1;
  for (int k = 1; k <= n; ++k) {
    const int h_leaf = g.add_node();
    g.set_end(free_head[k], 1, h_leaf);
    g.rotation[h_leaf].push_back(free_head[k]);
    if (k == 1)
      root = h_leaf;
  }
  return g.to_plane_tree(root);
}

Factorization read_factorization(const PlaneTree& tree, const RemovalChoice& choose) {
  const TreeNodes nodes(tree);
  const int size = static_cast<int>(nodes.size());

  // tail_label[v][r]: t-label currently sitting in slot r of internal v, or 0
  // while the slot still leads to another internal vertex.
  std::vector<std::vector<int>> tail_label(size);
  std::vector<int> internal;
  for (int v = 1; v < size; ++v) {
    if (nodes.is_leaf(v))
      continue;
    internal.push_back(v);
    const auto rot = nodes.rotation(v);
    tail_label[v].assign(rot.size(), 0);
    for (int r = 0; r < static_cast<int>(rot.size()); ++r) {
      if (!nodes.is_leaf(rot[r]))
        continue;
      const LeafLabel lab = nodes.label(rot[r]);
      if (lab.tail == nodes.slot_is_out(v, r))
        throw std::logic_error("leaf label does not match slot direction");
      if (lab.tail)
        tail_label[v][r] = lab.index;
    }
  }

  std::vector<bool> removed(size, false);
  std::vector<Cycle> read_order;
  for (std::size_t step = 0; step < internal.size(); ++step) {
    std::vector<int> candidates;
    std::vector<int> min_tail;
    for (int v : internal) {
      if (removed[v])
        continue;
      bool ready = true;
      int lowest = 0;
      for (int r = 0; r < static_cast<int>(tail_label[v].size()) && ready; ++r) {
        if (nodes.slot_is_out(v, r))
          continue;
        ready = tail_label[v][r] != 0;
        if (ready && (lowest == 0 || tail_label[v][r] < lowest))
          lowest = tail_label[v][r];
      }
      if (ready) {
        candidates.push_back(v);
        min_tail.push_back(lowest);
      }
    }
    if (candidates.empty())
      throw std::logic_error("no removable vertex in a valid tree");
    const std::size_t pick = choose(min_tail);
    if (pick >= candidates.size())
      throw std::out_of_range("removal choice out of range");
    const int v = candidates[pick];

    const auto rot = nodes.rotation(v);
    const int deg = static_cast<int>(rot.size());
    std::vector<int> elements;
    for (int r = 0; r < deg; ++r) {
      if (!nodes.slot_is_out(v, r))
        elements.push_back(tail_label[v][r]);
    }
    // Cutting an outgoing edge leaves a new t-leaf on the far side, labeled
    // like the incoming leaf that follows it counterclockwise.
    for (int r = 0; r < deg; ++r) {
      if (!nodes.slot_is_out(v, r) || nodes.is_leaf(rot[r]))
        continue;
      const int w = rot[r];
      tail_label[w][nodes.slot_of(w, v)] = tail_label[v][(r + 1) % deg];
    }
    removed[v] = true;
    read_order.emplace_back(std::move(elements));
  }
  std::reverse(read_order.begin(), read_order.end());
  return Factorization(tree.n(), std::move(read_order));
}

Factorization tree_to_factorization(const PlaneTree& tree) {
  const auto smallest = [](std::span<const int> labels) {
    return static_cast<std::size_t>(std::min_element(labels.begin(), labels.end()) - labels.begin());
  };
  return canonical_form(read_factorization(tree, smallest));
}

Permutation tree_permutation(const PlaneTree& tree) {
  const TreeNodes nodes(tree);
  const int n = tree.n();
  std::vector<int> tail_leaf(n + 1, -1);
  for (int leaf : nodes.leaves) {
    const LeafLabel lab = nodes.label(leaf);
    if (lab.tail)
      tail_leaf[lab.index] = leaf;
  }

  std::vector<int> images(n);
  for (int k = 1; k <= n; ++k) {
    int prev = tail_leaf[k];
    int cur = nodes.parent[prev];
    while (!nodes.is_leaf(cur)) {
      const auto rot = nodes.rotation(cur);
      const int r = nodes.slot_of(cur, prev);
      if (nodes.slot_is_out(cur, r))
        throw std::logic_error("walk entered a vertex against the edge direction");
      prev = cur;
      cur = rot[(r + 1) % rot.size()];
    }
    const LeafLabel end = nodes.label(cur);
    if (end.tail)
      throw std::logic_error("directed walk ended on a tail leaf");
    images[k - 1] = end.index;
  }
  return Permutation(n, std::move(images));
}

BoundaryWalk boundary_walk(const PlaneTree& tree) {
  const TreeNodes nodes(tree);
  BoundaryWalk walk;
  std::vector<LeafLabel> from_root;

  int prev = 0;
  int cur = 1;
  walk.steps.emplace_back(0, 1);
  while (cur != 0) {
    int next;
    if (nodes.is_leaf(cur)) {
      from_root.push_back(nodes.label(cur));
      next = prev;
    } else {
      const auto rot = nodes.rotation(cur);
      next = rot[(nodes.slot_of(cur, prev) + 1) % rot.size()];
    }
    walk.steps.emplace_back(cur, next);
    prev = cur;
    cur = next;
  }
  walk.labels = std::move(from_root);
  walk.labels.push_back(nodes.label(0));
  return walk;
}

}  // namespace cyclefact
