#pragma once

/**
 * @file cactus.hpp
 * @brief Cycles drawn as polygons inscribed in a circle: the arrangeability
 * test for a multiset of cycles and the maps between inscribed cacti and
 * plane trees.
 */

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclefact/perm_core.hpp"
#include "cyclefact/plane_tree.hpp"

namespace cyclefact {

/// Points 1..n counterclockwise on a circle with one inscribed polygon per
/// cycle. Polygons are kept sorted.
struct Cactus {
  int n = 1;
  std::vector<Cycle> polygons;

  bool operator==(const Cactus&) const = default;
};

/// Convex polygons on the vertex sets of `a` and `b` cross iff there are four
/// distinct points p < q < r < s with p, r in a and q, s in b (or the other
/// way round). A shared point may play either role. Throws std::invalid_argument on a
/// non-increasing cycle or a point above n.
bool is_noncrossing(const Cycle& a, const Cycle& b, int n);

struct ArrangeabilityReport {
  bool covers = false;            // 1: every point lies on some cycle
  bool increasing = false;        // 2
  bool noncrossing = false;       // 3
  bool simply_connected = false;  // 4: touch graph is a tree
  bool touch_connected = false;
  bool size_identity = false;     // 1 + sum(|sigma| - 1) == n

  std::vector<int> uncovered;
  std::vector<Cycle> not_increasing;
  std::optional<std::pair<Cycle, Cycle>> crossing;

  bool ok() const { return covers && increasing && noncrossing && simply_connected; }
  /// Violated condition numbers, ascending.
  std::vector<int> violated() const;
  /// "arrangeable" or "not arrangeable: condition 3 ((1 3) crosses (2 4))".
  std::string describe() const;
};

ArrangeabilityReport is_arrangeable(std::span<const Cycle> cycles, int n);

class NotArrangeable : public std::invalid_argument {
 public:
  explicit NotArrangeable(ArrangeabilityReport report);
  const ArrangeabilityReport& report() const { return report_; }

 private:
  ArrangeabilityReport report_;
};

/// Validated cactus with sorted polygons; throws NotArrangeable.
Cactus make_cactus(int n, std::vector<Cycle> polygons);

/// Arranges the cycles into a minimal factorization of (1 2 ... n), returned
/// in canonical form. Throws NotArrangeable.
Factorization arrange(std::span<const Cycle> cycles, int n);

/// Separates touching corners, cuts every arc (j, j+1) into t_j and h_{j+1}
/// and shrinks each polygon to a vertex. Throws NotArrangeable on an invalid
/// cactus.
PlaneTree cactus_to_tree(const Cactus& cactus);

/// Inflates every vertex into a polygon, grouping its edges in pairs
/// according to the vertex type found by the exterior walk from h1, then
/// merges t_j with h_{j+1} and contracts the internal edges.
Cactus tree_to_cactus(const PlaneTree& tree);

/// Vertex types from the exterior walk: true for t-type (the last leaf seen
/// before first reaching the vertex was an h-leaf). Indexed by TreeNodes id;
/// leaves get their own label type.
std::vector<bool> vertex_types(const PlaneTree& tree);

}  // namespace cyclefact
