#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "a2shift/bool_matrix.hpp"
#include "a2shift/presentation.hpp"
#include "a2shift/report.hpp"

namespace a2 {

enum class RelationKind { M1, M2, Wall };

std::string_view to_string(RelationKind k);
// Accepts "M1", "M2", "wall". Throws Error{InvalidArgument}.
RelationKind relation_from_string(std::string_view s);

// Edge-label conventions. A down-pointing chamber with labelling (x, y, z) has
// x on the left edge, y on the right edge and z on the top edge. An
// up-pointing wall triangle (b, b2, b3) has base b, right edge b2 and left
// edge b3.
//
// M1(a, b)   = [a3 in lambda(b1)] and [b1 != a2] and [b2 != a3]
// M2(a, c)   = [c2 in lambda(a3)] and [c2 != a1] and [c1 != a3]
// wall(t, u) = [f in lambda(g)] and [f != h] and [g != e]
//              for t = (e, f, d), u = (h, k, g)
BoolMatrix build_M1(const TrianglePresentation& pres);
BoolMatrix build_M2(const TrianglePresentation& pres);
BoolMatrix build_wall(const TrianglePresentation& pres);
BoolMatrix build_relation(const TrianglePresentation& pres, RelationKind kind);

// The connector (g, f, w) between wall-adjacent t = (e, f, d) and
// u = (h, k, g). Throws Error{NotWallAdjacent}.
Tile down_tile_between(Tile t, Tile u, const TrianglePresentation& pres);

// Independent realizability check. Places the two labelled triangles on a
// patch of the triangular lattice, reads off the four link vertices around
// their shared vertex (point class for outgoing edges, line class for
// incoming ones) and accepts iff consecutive link vertices are incident and
// the two same-class pairs are distinct. Every accepted path is extended to an
// explicit hexagon of the link as an internal check.
bool oracle_pair_realizable(const TrianglePresentation& pres, Tile left, Tile right, RelationKind kind);

// Compares a closed-form relation against the oracle on all |T|^2 pairs.
VerificationReport check_relation_against_oracle(const TrianglePresentation& pres, RelationKind kind);

// For all (a, b): is there r, s in [1, cap] with (M1^r M2^s)(a, b) > 0?
// Also records commutation and strong connectivity of the union digraph.
VerificationReport is_irreducible_2d(const BoolMatrix& m1, const BoolMatrix& m2, unsigned cap = 32);

inline constexpr unsigned kDefaultPrimitivityCap = 32;

// Least r <= cap with m^r entrywise positive.
std::optional<unsigned> primitivity(const BoolMatrix& m, unsigned cap = kDefaultPrimitivityCap);

// Up-triangles t0..tm along a wall with the down-pointing connectors
// u1..um, u_i between t_{i-1} and t_i.
struct StripWitness {
  std::vector<Tile> tiles;
  std::vector<Tile> connectors;

  std::size_t steps() const noexcept { return connectors.size(); }
  friend bool operator==(const StripWitness&, const StripWitness&) = default;
};

// Shortest wall strip from `initial` to `final_tile`; breadth-first with
// ties broken by the smaller successor index. Throws Error{NoPath}.
StripWitness find_strip(const TrianglePresentation& pres, Tile initial, Tile final_tile);
StripWitness find_strip(const TrianglePresentation& pres, const BoolMatrix& wall, Tile initial, Tile final_tile);

// Re-checks every step with the oracle and every connector against T.
bool strip_is_valid(const TrianglePresentation& pres, const StripWitness& w);

// Joins two strips sharing the end/start tile.
StripWitness concatenate(const StripWitness& a, const StripWitness& b);

// Deterministic ASCII rendering: a row of up-triangles with their labels and
// the connector labels between them, followed by a step legend.
std::string render_strip(const TrianglePresentation& pres, const StripWitness& w);

}  // namespace a2
