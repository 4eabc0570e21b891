#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "a2shift/error.hpp"
#include "a2shift/subshift.hpp"

namespace a2 {

namespace {

// Lattice points use doubled horizontal coordinates: horizontal neighbours
// differ by (2, 0), diagonal neighbours by (+-1, +-1).
struct Vertex {
  int x = 0, y = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

constexpr std::array<Vertex, 6> kDirections = {{{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}}};

int direction_of(Vertex from, Vertex to) {
  const Vertex d{to.x - from.x, to.y - from.y};
  for (int i = 0; i < 6; ++i)
    if (kDirections[i] == d) return i;
  return -1;
}

struct Edge {
  Vertex from, to;
  PointId label;
};

enum class Orientation { Down, Up };

struct Placement {
  Orientation orientation;
  Vertex anchor;
  Tile tile;

  // Down: anchor is the bottom vertex; x enters it from the top-left, y
  // leaves it to the top-right, z runs along the top from right to left.
  // Up: anchor is the bottom-left vertex; the base b runs left to right, b2
  // climbs to the apex, b3 descends back to the anchor.
  std::array<Edge, 3> edges() const {
    const Vertex a = anchor;
    if (orientation == Orientation::Down) {
      const Vertex tl{a.x - 1, a.y + 1}, tr{a.x + 1, a.y + 1};
      return {{{tl, a, tile.x}, {a, tr, tile.y}, {tr, tl, tile.z}}};
    }
    const Vertex br{a.x + 2, a.y}, apex{a.x + 1, a.y + 1};
    return {{{a, br, tile.x}, {br, apex, tile.y}, {apex, a, tile.z}}};
  }

  std::array<Vertex, 3> vertices() const {
    const auto e = edges();
    return {e[0].from, e[1].from, e[2].from};
  }
};

std::array<Placement, 2> configuration(RelationKind kind, Tile left, Tile right) {
  switch (kind) {
    case RelationKind::M1:
      // beta sits diagonally up-right of alpha, sharing alpha's right vertex.
      return {{{Orientation::Down, {0, 0}, left}, {Orientation::Down, {1, 1}, right}}};
    case RelationKind::M2:
      // gamma sits diagonally up-left of alpha, sharing alpha's left vertex.
      return {{{Orientation::Down, {0, 0}, left}, {Orientation::Down, {-1, 1}, right}}};
    case RelationKind::Wall:
      // Consecutive up-triangles along a wall share one base vertex.
      return {{{Orientation::Up, {1, -1}, left}, {Orientation::Up, {3, -1}, right}}};
  }
  throw std::logic_error("unknown relation kind");
}

// A vertex of the link of the shared vertex v: v*a (point class) or
// v*lambda(a) (line class). `id` is a point id or a line id.
struct LinkVertex {
  bool is_point;
  int id;
  friend bool operator==(const LinkVertex&, const LinkVertex&) = default;
};

bool adjacent(const IncidencePlane& plane, LinkVertex a, LinkVertex b) {
  if (a.is_point == b.is_point) return false;
  return a.is_point ? plane.incident(a.id, b.id) : plane.incident(b.id, a.id);
}

// Completes a non-stuttering path v0-v1-v2-v3 to a hexagon of the incidence
// graph. Throws std::logic_error if no completion exists.
std::array<LinkVertex, 6> extend_to_hexagon(const IncidencePlane& plane, const std::array<LinkVertex, 4>& path) {
  const LinkVertex v0 = path[0], v2 = path[2], v3 = path[3];
  auto closes = [&](LinkVertex v4, LinkVertex v5) {
    std::array<LinkVertex, 6> h{path[0], path[1], path[2], path[3], v4, v5};
    for (int i = 0; i < 6; ++i) {
      if (!adjacent(plane, h[i], h[(i + 1) % 6])) return false;
      for (int j = i + 1; j < 6; ++j)
        if (h[i] == h[j]) return false;
    }
    return true;
  };
  if (v3.is_point) {
    // v4: a line through v3 other than v2; v5: its meet with the line v0.
    for (std::size_t m : plane.lines_through(v3.id).indices()) {
      if (static_cast<int>(m) == v2.id) continue;
      const PointId p = plane.meet(static_cast<LineId>(m), v0.id);
      if (p < 0) continue;
      const LinkVertex v4{false, static_cast<int>(m)}, v5{true, p};
      if (closes(v4, v5)) return {path[0], path[1], path[2], path[3], v4, v5};
    }
  } else {
    // v4: a point of line v3 other than v2; v5: its join with the point v0.
    for (std::size_t p : plane.points_on(v3.id).indices()) {
      if (static_cast<int>(p) == v2.id) continue;
      const LineId l = plane.join(static_cast<PointId>(p), v0.id);
      if (l < 0) continue;
      const LinkVertex v4{true, static_cast<int>(p)}, v5{false, l};
      if (closes(v4, v5)) return {path[0], path[1], path[2], path[3], v4, v5};
    }
  }
  throw std::logic_error("accepted link path does not extend to a hexagon");
}

}  // namespace

bool oracle_pair_realizable(const TrianglePresentation& pres, Tile left, Tile right, RelationKind kind) {
  if (!pres.contains(left) || !pres.contains(right)) return false;
  const auto placements = configuration(kind, left, right);

  // The single vertex both triangles touch.
  Vertex shared{};
  int shared_count = 0;
  for (const Vertex& a : placements[0].vertices())
    for (const Vertex& b : placements[1].vertices())
      if (a == b) {
        shared = a;
        ++shared_count;
      }
  if (shared_count != 1) throw std::logic_error("oracle configuration must share exactly one vertex");

  const auto& lambda = pres.lambda().lambda;
  std::array<std::optional<LinkVertex>, 6> by_direction;
  for (const Placement& pl : placements)
    for (const Edge& e : pl.edges()) {
      if (e.from == shared) {
        by_direction[direction_of(shared, e.to)] = LinkVertex{true, e.label};
      } else if (e.to == shared) {
        by_direction[direction_of(shared, e.from)] = LinkVertex{false, lambda[e.label]};
      }
    }

  // The four link vertices occupy four consecutive directions.
  int start = -1;
  for (int s = 0; s < 6 && start < 0; ++s) {
    bool run = true;
    for (int i = 0; i < 4; ++i) run = run && by_direction[(s + i) % 6].has_value();
    if (run) start = s;
  }
  if (start < 0) throw std::logic_error("oracle link vertices are not contiguous");
  std::array<LinkVertex, 4> path{};
  for (int i = 0; i < 4; ++i) path[i] = *by_direction[(start + i) % 6];

  const IncidencePlane& plane = pres.plane();
  for (int i = 0; i < 3; ++i)
    if (!adjacent(plane, path[i], path[i + 1])) return false;
  if (path[0] == path[2] || path[1] == path[3]) return false;

  extend_to_hexagon(plane, path);
  return true;
}

VerificationReport check_relation_against_oracle(const TrianglePresentation& pres, RelationKind kind) {
  const BoolMatrix m = build_relation(pres, kind);
  VerificationReport r;
  r.check = std::string("oracle_agreement_") + std::string(to_string(kind));
  const std::size_t n = pres.size();
  std::size_t positives = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool oracle = oracle_pair_realizable(pres, pres.tile(i), pres.tile(j), kind);
      positives += oracle ? 1 : 0;
      if (oracle != m.get(i, j))
        r.fail({{"left", pres.tile_name(pres.tile(i))},
                {"right", pres.tile_name(pres.tile(j))},
                {"closed_form", m.get(i, j)},
                {"oracle", oracle}});
    }
  r.examined = n * n;
  r.stats["oracle_positive_pairs"] = positives;
  r.stats["closed_form_nonzeros"] = m.nonzeros();
  return r;
}

}  // namespace a2
