#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "a2shift/plane.hpp"
#include "a2shift/report.hpp"

namespace a2 {

// One element (x, y, z) of a triangle presentation, i.e. one letter of the
// tile alphabet. Rotations are distinct tiles unless coordinates coincide.
struct Tile {
  PointId x = 0, y = 0, z = 0;

  friend auto operator<=>(const Tile&, const Tile&) = default;
};

// rho(x, y, z) = (z, x, y).
constexpr Tile rotate(Tile t) noexcept { return {t.z, t.x, t.y}; }

// Lexicographically least of the three rotations.
Tile canonical_rotation(Tile t) noexcept;

// Bijection from points to lines of a companion plane.
struct PointLineCorrespondence {
  std::vector<LineId> lambda;

  bool is_bijection(int num_lines) const;
};

// Relators as read from text, before closure or validation.
struct RawPresentation {
  int q = 0;
  std::vector<std::string> point_names;
  bool explicit_points = false;
  std::vector<Tile> relators;
};

// A validated triangle presentation. The plane is always the one
// reconstructed from the tiles: line x is lambda(x) = {y : (x, y, z) in T for
// some z}, so lambda is the identity on ids.
class TrianglePresentation {
 public:
  int order() const noexcept { return q_; }
  int num_points() const noexcept { return n_; }
  std::size_t size() const noexcept { return tiles_.size(); }

  // Tiles in lexicographic order; the position is the tile index used by
  // every matrix over this alphabet.
  const std::vector<Tile>& tiles() const noexcept { return tiles_; }
  const Tile& tile(std::size_t i) const noexcept { return tiles_[i]; }
  // Index of t, or -1 if t is not in the presentation.
  int index_of(Tile t) const noexcept;
  bool contains(Tile t) const noexcept { return index_of(t) >= 0; }

  const IncidencePlane& plane() const noexcept { return plane_; }
  const PointLineCorrespondence& lambda() const noexcept { return lambda_; }
  // y in lambda(x).
  bool in_lambda(PointId y, PointId x) const noexcept { return plane_.incident(y, lambda_.lambda[x]); }
  const Bitset& lambda_points(PointId x) const noexcept { return plane_.points_on(lambda_.lambda[x]); }

  // The unique z with (x, y, z) in T, or -1.
  PointId z_of(PointId x, PointId y) const noexcept { return z_of_[static_cast<std::size_t>(x * n_ + y)]; }

  const std::vector<std::string>& point_names() const noexcept { return plane_.point_names(); }
  const std::string& name(PointId p) const { return plane_.point_names()[p]; }
  std::string tile_name(Tile t) const;

  friend struct PresentationBuilder;
  friend bool operator==(const TrianglePresentation& a, const TrianglePresentation& b) {
    return a.q_ == b.q_ && a.tiles_ == b.tiles_;
  }

 private:
  int q_ = 0, n_ = 0;
  std::vector<Tile> tiles_;
  IncidencePlane plane_;
  PointLineCorrespondence lambda_;
  std::vector<PointId> z_of_;
  std::vector<int> index_;
};

// Outcome of the validation pipeline. `report` is always filled; the
// presentation is present exactly when the report passes.
struct Validation {
  std::optional<TrianglePresentation> presentation;
  VerificationReport report;
};

// Parses the presentation text format. The `a2tp 1` header and `q` line are
// optional here; `points` fixes the name order, otherwise names are numbered
// by first appearance.
RawPresentation parse_presentation(std::string_view text);

// Canonical text: header, q, points, one least-rotation relator per class.
std::string serialize_presentation(const TrianglePresentation& pres);

// Rotation closure, duplicates merged, sorted.
std::vector<Tile> close_rotations(const std::vector<Tile>& relators);

Validation validate(const std::vector<Tile>& tiles, int q, std::vector<std::string> point_names = {});

// Closes the raw relators under rotation and validates.
Validation validate(const RawPresentation& raw);

// The relators of the group C.1 as presentation text.
std::string_view builtin_c1_text();
TrianglePresentation builtin_c1();

// All triangle presentations compatible with lambda, up to `limit`, in
// lexicographic order of their tile sets. limit == 0 means unlimited.
std::vector<TrianglePresentation> search_presentations(const IncidencePlane& plane,
                                                        const PointLineCorrespondence& lambda,
                                                        std::size_t limit = 0);

struct LambdaSweepSummary {
  std::size_t lambdas_examined = 0;
  // Compatible presentation count for each bijection, in lexicographic
  // permutation order.
  std::vector<std::size_t> counts;
  // number of presentations -> number of bijections with that many.
  std::map<std::size_t, std::size_t> histogram;
  std::vector<TrianglePresentation> presentations;
  std::size_t total() const noexcept { return presentations.size(); }
};

// Every bijection lambda : P -> L of an order-2 plane, each searched
// exhaustively. Throws Error{OrderTooLarge} for q > 2.
LambdaSweepSummary sweep_all_lambdas_q2(const IncidencePlane& plane, unsigned jobs = 1);

// Reads a tile written as three point names separated by spaces or commas,
// e.g. "x0 x2 x3". Throws Error{UnknownPoint} / Error{ArityError}.
Tile parse_tile(const TrianglePresentation& pres, std::string_view text);

}  // namespace a2
