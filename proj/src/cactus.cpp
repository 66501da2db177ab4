#include "cyclefact/cactus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "cyclefact/bijection.hpp"
#include "cyclefact/rotation_graph.hpp"

namespace cyclefact {

namespace {

void check_points(std::span<const int> points, int n) {
  for (int p : points) {
    if (p > n)
      throw std::invalid_argument("point " + std::to_string(p) + " exceeds n = " + std::to_string(n));
  }
}

/// Four distinct points alternating a, b, a, b around the circle. Shared
/// points count for either side, so polygons that touch at a corner but
/// still overlap near it are caught too.
bool sets_cross(std::span<const int> a, std::span<const int> b, int n) {
  // prefix[p] = points of a among 1..p
  std::vector<int> prefix(static_cast<std::size_t>(n) + 1, 0);
  for (int p : a)
    prefix[p] = 1;
  std::partial_sum(prefix.begin(), prefix.end(), prefix.begin());
  const int total = prefix[n];
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t k = i + 1; k < b.size(); ++k) {
      const int q = std::min(b[i], b[k]);
      const int s = std::max(b[i], b[k]);
      const int inside = prefix[s - 1] - prefix[q];
      const int outside = total - (prefix[s] - prefix[q - 1]);
      if (inside > 0 && outside > 0)
        return true;
    }
  }
  return false;
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_noncrossing(const Cycle& a, const Cycle& b, int n) {
  if (!a.is_increasing() || !b.is_increasing())
    throw std::invalid_argument("crossing test needs increasing cycles");
  check_points(a.elements(), n);
  check_points(b.elements(), n);
  return !sets_cross(a.elements(), b.elements(), n);
}

std::vector<int> ArrangeabilityReport::violated() const {
  std::vector<int> out;
  if (!covers)
    out.push_back(1);
  if (!increasing)
    out.push_back(2);
  if (!noncrossing)
    out.push_back(3);
  if (!simply_connected)
    out.push_back(4);
  return out;
}

std::string ArrangeabilityReport::describe() const {
  if (ok())
    return "arrangeable";
  std::string out = "not arrangeable:";
  bool first = true;
  for (int c : violated()) {
    out += first ? " condition " : ", condition ";
    first = false;
    out += std::to_string(c);
    if (c == 1 && !uncovered.empty()) {
      out += " (uncovered:";
      for (int p : uncovered)
        out += ' ' + std::to_string(p);
      out += ')';
    } else if (c == 2 && !not_increasing.empty()) {
      out += " (" + not_increasing.front().to_string() + " is not increasing)";
    } else if (c == 3 && crossing) {
      out += " (" + crossing->first.to_string() + " crosses " + crossing->second.to_string() + ")";
    } else if (c == 4) {
      out += touch_connected ? " (union has a loop)" : " (union is disconnected)";
    }
  }
  return out;
}

ArrangeabilityReport is_arrangeable(std::span<const Cycle> cycles, int n) {
  if (n < 1)
    throw std::invalid_argument("n must be positive");
  for (const auto& c : cycles)
    check_points(c.elements(), n);

  ArrangeabilityReport report;
  std::vector<int> hits(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& c : cycles) {
    for (int p : c.elements())
      ++hits[p];
  }
  // A lone point with no polygons is the degenerate cactus of the 1-cycle.
  const bool lone_point = n == 1 && cycles.empty();
  for (int p = 1; p <= n; ++p) {
    if (hits[p] == 0 && !lone_point)
      report.uncovered.push_back(p);
  }
  report.covers = report.uncovered.empty();

  for (const auto& c : cycles) {
    if (!c.is_increasing())
      report.not_increasing.push_back(c);
  }
  report.increasing = report.not_increasing.empty();

  report.noncrossing = true;
  for (std::size_t i = 0; i < cycles.size() && report.noncrossing; ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (sets_cross(cycles[i].elements(), cycles[j].elements(), n)) {
        report.noncrossing = false;
        report.crossing = std::make_pair(cycles[i], cycles[j]);
        break;
      }
    }
  }

  // Touch graph: polygons and covered points, joined by incidence.
  int covered = 0;
  long excess = 0;
  for (const auto& c : cycles)
    excess += static_cast<long>(c.length()) - 1;
  DisjointSets sets(static_cast<std::size_t>(n) + 1 + cycles.size());
  std::set<int> present;
  for (int p = 1; p <= n; ++p) {
    if (hits[p] > 0 || lone_point) {
      ++covered;
      present.insert(p);
    }
  }
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const int node = n + 1 + static_cast<int>(i);
    present.insert(node);
    for (int p : cycles[i].elements())
      sets.unite(node, p);
  }
  std::set<int> roots;
  for (int node : present)
    roots.insert(sets.find(node));
  report.touch_connected = roots.size() == 1;
  report.simply_connected = report.touch_connected && excess == covered - 1;
  report.size_identity = 1 + excess == n;

  if (report.increasing && report.noncrossing && report.simply_connected &&
      report.covers != report.size_identity)
    throw std::logic_error("cover condition and size identity disagree");
  return report;
}

NotArrangeable::NotArrangeable(ArrangeabilityReport report)
    : std::invalid_argument(report.describe()), report_(std::move(report)) {}

Cactus make_cactus(int n, std::vector<Cycle> polygons) {
  auto report = is_arrangeable(polygons, n);
  if (!report.ok())
    throw NotArrangeable(std::move(report));
  std::sort(polygons.begin(), polygons.end());
  return Cactus{n, std::move(polygons)};
}

Factorization arrange(std::span<const Cycle> cycles, int n) {
  const Cactus cactus = make_cactus(n, {cycles.begin(), cycles.end()});
  Factorization f = tree_to_factorization(cactus_to_tree(cactus));

  std::vector<Cycle> got(f.factors().begin(), f.factors().end());
  std::sort(got.begin(), got.end());
  if (got != cactus.polygons || evaluate(f) != Permutation::ncycle(n))
    throw std::logic_error("arranged factorization does not reproduce its factors");
  return f;
}

PlaneTree cactus_to_tree(const Cactus& cactus) {
  const auto report = is_arrangeable(cactus.polygons, cactus.n);
  if (!report.ok())
    throw NotArrangeable(report);
  const int n = cactus.n;
  const auto& polys = cactus.polygons;

  detail::RotationGraph g;
  std::vector<int> h_leaf(n + 1), t_leaf(n + 1);
  for (int j = 1; j <= n; ++j) {
    h_leaf[j] = g.add_node();
    t_leaf[j] = g.add_node();
  }
  std::vector<int> poly_node(polys.size());
  for (auto& node : poly_node)
    node = g.add_node();

  // Edge ids on each side of every polygon corner, keyed by (polygon, point).
  std::map<std::pair<std::size_t, int>, std::pair<int, int>> corner_edges;

  for (int j = 1; j <= n; ++j) {
    // Polygons at j, ordered along the circle from the (j-1) side to the
    // (j+1) side: the one whose other corners lie furthest ahead comes first.
    std::vector<std::pair<int, std::size_t>> at_point;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (!polys[i].contains(j))
        continue;
      int nearest = n;
      for (int x : polys[i].elements()) {
        if (x != j)
          nearest = std::min(nearest, ((x - j) % n + n) % n);
      }
      at_point.emplace_back(nearest, i);
    }
    std::sort(at_point.begin(), at_point.end(), std::greater<>());

    std::vector<int> chain{h_leaf[j]};
    for (const auto& [key, i] : at_point)
      chain.push_back(poly_node[i]);
    chain.push_back(t_leaf[j]);

    std::vector<int> edges;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
      edges.push_back(g.add_edge(chain[k], chain[k + 1]));
    g.rotation[h_leaf[j]].push_back(edges.front());
    g.rotation[t_leaf[j]].push_back(edges.back());
    for (std::size_t k = 0; k < at_point.size(); ++k)
      corner_edges[{at_point[k].second, j}] = {edges[k], edges[k + 1]};
  }

  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (int p : polys[i].elements()) {
      const auto [h_side, t_side] = corner_edges.at({i, p});
      g.rotation[poly_node[i]].push_back(h_side);
      g.rotation[poly_node[i]].push_back(t_side);
    }
  }
  return g.to_plane_tree(h_leaf[1]);
}

std::vector<bool> vertex_types(const PlaneTree& tree) {
  const TreeNodes nodes(tree);
  const BoundaryWalk walk = boundary_walk(tree);
  std::vector<bool> t_type(nodes.size(), false);
  std::vector<bool> seen(nodes.size(), false);
  seen[0] = true;  // h1 is an h-leaf
  LeafLabel last = nodes.label(0);
  for (const auto& [from, to] : walk.steps) {
    if (!seen[to]) {
      seen[to] = true;
      t_type[to] = !last.tail;
    }
    if (nodes.is_leaf(to))
      last = nodes.label(to);
  }
  return t_type;
}

Cactus tree_to_cactus(const PlaneTree& tree) {
  const TreeNodes nodes(tree);
  const std::vector<bool> t_type = vertex_types(tree);
  const int size = static_cast<int>(nodes.size());

  // Corners: pairs (h-side slot, t-side slot) of consecutive rotation slots.
  struct Corner {
    int vertex;
    int h_slot;
    int t_slot;
  };
  std::vector<Corner> corners;
  std::vector<std::vector<int>> corners_of(size);
  std::vector<std::vector<int>> corner_at_slot(size);
  for (int v = 1; v < size; ++v) {
    if (nodes.is_leaf(v))
      continue;
    const int deg = nodes.degree(v);
    corner_at_slot[v].assign(deg, -1);
    const int offset = t_type[v] ? 0 : 1;
    for (int k = 0; k < deg / 2; ++k) {
      const int h_slot = (2 * k + offset) % deg;
      const int t_slot = (2 * k + offset + 1) % deg;
      const int id = static_cast<int>(corners.size());
      corners.push_back({v, h_slot, t_slot});
      corners_of[v].push_back(id);
      corner_at_slot[v][h_slot] = corner_at_slot[v][t_slot] = id;
    }
  }

  // Contract internal edges: a t-side slot facing another vertex meets that
  // vertex's h-side slot, and both corners become one circle point.
  DisjointSets points(corners.size());
  std::vector<int> point_label(corners.size(), 0);
  auto assign = [&](int corner, LeafLabel label, bool want_tail) {
    if (label.tail != want_tail)
      throw std::logic_error("corner meets a leaf of the wrong kind");
    int& slot = point_label[corner];
    if (slot != 0 && slot != label.index)
      throw std::logic_error("corner receives two different labels");
    slot = label.index;
  };
  for (const auto& c : corners) {
    const int id = corner_at_slot[c.vertex][c.h_slot];
    const auto rot = nodes.rotation(c.vertex);
    const int h_nb = rot[c.h_slot];
    const int t_nb = rot[c.t_slot];
    if (nodes.is_leaf(h_nb))
      assign(id, nodes.label(h_nb), false);
    if (nodes.is_leaf(t_nb)) {
      assign(id, nodes.label(t_nb), true);
    } else {
      const int other = corner_at_slot[t_nb][nodes.slot_of(t_nb, c.vertex)];
      if (corners[other].h_slot != nodes.slot_of(t_nb, c.vertex))
        throw std::logic_error("t-side slot does not meet an h-side slot");
      points.unite(id, other);
    }
  }
  std::vector<int> class_label(corners.size(), 0);
  for (std::size_t c = 0; c < corners.size(); ++c) {
    if (point_label[c] == 0)
      continue;
    int& lab = class_label[points.find(static_cast<int>(c))];
    if (lab != 0 && lab != point_label[c])
      throw std::logic_error("circle point carries two labels");
    lab = point_label[c];
  }

  Cactus cactus{tree.n(), {}};
  for (int v = 1; v < size; ++v) {
    if (nodes.is_leaf(v))
      continue;
    std::vector<int> corners_in_order;
    for (int id : corners_of[v])
      corners_in_order.push_back(class_label[points.find(id)]);
    cactus.polygons.emplace_back(std::move(corners_in_order));
  }
  std::sort(cactus.polygons.begin(), cactus.polygons.end());
  return cactus;
}

}  // namespace cyclefact
