#include "cyclefact/rotation_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclefact::detail {

PlaneTree RotationGraph::to_plane_tree(int root_leaf) const {
  if (rotation[root_leaf].size() != 1)
    throw std::invalid_argument("root must be a leaf");

  std::vector<bool> visited(rotation.size(), false);
  std::vector<int> code;
  visited[root_leaf] = true;

  struct Frame {
    int node;
    int entry_edge;
  };
  std::vector<Frame> stack{{other_end(rotation[root_leaf][0], root_leaf), rotation[root_leaf][0]}};
  while (!stack.empty()) {
    const Frame frame = stack.back();
    stack.pop_back();
    if (visited[frame.node])
      throw std::invalid_argument("graph contains a cycle");
    visited[frame.node] = true;

    const auto& rot = rotation[frame.node];
    code.push_back(static_cast<int>(rot.size()) - 1);
    const auto at = std::find(rot.begin(), rot.end(), frame.entry_edge);
    const auto start = static_cast<std::size_t>(at - rot.begin());
    // Push in reverse so children pop in counterclockwise order.
    for (std::size_t k = rot.size() - 1; k >= 1; --k) {
      const int e = rot[(start + k) % rot.size()];
      stack.push_back({other_end(e, frame.node), e});
    }
  }
  if (std::find(visited.begin(), visited.end(), false) != visited.end())
    throw std::invalid_argument("graph is not connected");
  return PlaneTree(std::move(code));
}

}  // namespace cyclefact::detail
