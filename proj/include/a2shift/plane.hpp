#pragma once

#include <optional>
#include <string>
#include <vector>

#include "a2shift/bitset.hpp"
#include "a2shift/report.hpp"

namespace a2 {

using PointId = int;
using LineId = int;

// Points/lines with an incidence relation, stored as one n-bit mask per line
// plus the transpose per point. Immutable once built.
class IncidencePlane {
 public:
  IncidencePlane() = default;

  // `lines[l]` lists the points incident with line l. Names default to the
  // decimal ids when empty.
  IncidencePlane(int q, int num_points, const std::vector<std::vector<PointId>>& lines,
                 std::vector<std::string> point_names = {}, std::vector<std::string> line_names = {});

  int order() const noexcept { return q_; }
  int num_points() const noexcept { return static_cast<int>(point_masks_.size()); }
  int num_lines() const noexcept { return static_cast<int>(line_masks_.size()); }

  bool incident(PointId p, LineId l) const noexcept { return line_masks_[l].test(p); }
  const Bitset& points_on(LineId l) const noexcept { return line_masks_[l]; }
  const Bitset& lines_through(PointId p) const noexcept { return point_masks_[p]; }

  // Points of line l in ascending id order.
  std::vector<PointId> line_points(LineId l) const;

  // First common line of two points / first common point of two lines, or -1.
  LineId join(PointId a, PointId b) const;
  PointId meet(LineId a, LineId b) const;

  const std::vector<std::string>& point_names() const noexcept { return point_names_; }
  const std::vector<std::string>& line_names() const noexcept { return line_names_; }

  friend bool operator==(const IncidencePlane& a, const IncidencePlane& b) {
    return a.q_ == b.q_ && a.line_masks_ == b.line_masks_;
  }

 private:
  int q_ = 0;
  std::vector<Bitset> line_masks_;
  std::vector<Bitset> point_masks_;
  std::vector<std::string> point_names_;
  std::vector<std::string> line_names_;
};

struct PlaneIsomorphism {
  std::vector<PointId> point_map;
  std::vector<LineId> line_map;
};

// Desarguesian plane PG(2,q). Points and lines are normalized homogeneous
// coordinate triples (leftmost nonzero entry 1), indexed lexicographically.
IncidencePlane pg2(int q);

// The order-3 plane from the classical difference-set table: line (j) holds
// the points {s+1, s+2, s+4, s+10} mod 13 with s = 12 - j. Line ids equal j.
IncidencePlane classic_plane_order3();

// Checks the five plane axioms: line size, point degree, unique joining line,
// unique meeting point and the parameter count n = q^2+q+1.
VerificationReport verify_plane(const IncidencePlane& plane);

// Backtracking isomorphism search with degree-signature pruning and forced
// line propagation through joins.
std::optional<PlaneIsomorphism> planes_isomorphic(const IncidencePlane& a, const IncidencePlane& b);

// True iff `iso` is a bijection pair preserving incidence in both directions.
bool is_isomorphism(const IncidencePlane& a, const IncidencePlane& b, const PlaneIsomorphism& iso);

// Points and lines swapped; incidence transposed.
IncidencePlane dual_plane(const IncidencePlane& plane);

}  // namespace a2
