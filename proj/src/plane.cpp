#include "a2shift/plane.hpp"

#include <array>
#include <string>

#include "a2shift/error.hpp"
#include "a2shift/field.hpp"

namespace a2 {

IncidencePlane::IncidencePlane(int q, int num_points, const std::vector<std::vector<PointId>>& lines,
                               std::vector<std::string> point_names, std::vector<std::string> line_names)
    : q_(q), point_names_(std::move(point_names)), line_names_(std::move(line_names)) {
  const auto np = static_cast<std::size_t>(num_points);
  const auto nl = lines.size();
  line_masks_.assign(nl, Bitset(np));
  point_masks_.assign(np, Bitset(nl));
  for (std::size_t l = 0; l < nl; ++l)
    for (PointId p : lines[l]) {
      if (p < 0 || static_cast<std::size_t>(p) >= np)
        throw Error(ErrorCode::InvalidArgument, "point id " + std::to_string(p) + " out of range");
      line_masks_[l].set(static_cast<std::size_t>(p));
      point_masks_[static_cast<std::size_t>(p)].set(l);
    }
  if (point_names_.empty())
    for (std::size_t i = 0; i < np; ++i) point_names_.push_back(std::to_string(i));
  if (line_names_.empty())
    for (std::size_t i = 0; i < nl; ++i) line_names_.push_back(std::to_string(i));
  if (point_names_.size() != np || line_names_.size() != nl)
    throw Error(ErrorCode::InvalidArgument, "name list size does not match point/line count");
}

std::vector<PointId> IncidencePlane::line_points(LineId l) const {
  std::vector<PointId> out;
  for (std::size_t i : line_masks_[l].indices()) out.push_back(static_cast<PointId>(i));
  return out;
}

LineId IncidencePlane::join(PointId a, PointId b) const {
  const Bitset common = point_masks_[a] & point_masks_[b];
  const std::size_t i = common.find_first();
  return i < common.size() ? static_cast<LineId>(i) : -1;
}

PointId IncidencePlane::meet(LineId a, LineId b) const {
  const Bitset common = line_masks_[a] & line_masks_[b];
  const std::size_t i = common.find_first();
  return i < common.size() ? static_cast<PointId>(i) : -1;
}

IncidencePlane pg2(int q) {
  const FiniteField f = field_make(q);
  std::vector<std::array<int, 3>> coords;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        const int lead = a != 0 ? a : (b != 0 ? b : c);
        if (lead == 1) coords.push_back({a, b, c});
      }
  const int n = static_cast<int>(coords.size());
  std::vector<std::vector<PointId>> lines(coords.size());
  for (int l = 0; l < n; ++l) {
    const auto& u = coords[l];
    for (int p = 0; p < n; ++p) {
      const auto& x = coords[p];
      const int dot = f.add(f.add(f.mul(u[0], x[0]), f.mul(u[1], x[1])), f.mul(u[2], x[2]));
      if (dot == 0) lines[l].push_back(p);
    }
  }
  return IncidencePlane(q, n, lines);
}

namespace {

// Columns of the order-3 table, listed from line (12) down to line (0).
constexpr int kOrder3Table[13][4] = {
    {1, 2, 4, 10}, {2, 3, 5, 11}, {3, 4, 6, 12}, {4, 5, 7, 0}, {5, 6, 8, 1},
    {6, 7, 9, 2},  {7, 8, 10, 3}, {8, 9, 11, 4}, {9, 10, 12, 5}, {10, 11, 0, 6},
    {11, 12, 1, 7}, {12, 0, 2, 8}, {0, 1, 3, 9},
};

}  // namespace

IncidencePlane classic_plane_order3() {
  std::vector<std::vector<PointId>> lines(13);
  std::vector<std::string> point_names, line_names;
  for (int j = 0; j < 13; ++j) {
    const auto& column = kOrder3Table[12 - j];
    lines[j].assign(std::begin(column), std::end(column));
    point_names.push_back(std::to_string(j));
    line_names.push_back("(" + std::to_string(j) + ")");
  }
  return IncidencePlane(3, 13, lines, point_names, line_names);
}

VerificationReport verify_plane(const IncidencePlane& plane) {
  VerificationReport r;
  r.check = "plane_axioms";
  const int q = plane.order();
  const int np = plane.num_points(), nl = plane.num_lines();
  const auto& pn = plane.point_names();
  const auto& ln = plane.line_names();
  auto mark = [&](const char* axiom, bool ok) { r.stats[axiom] = ok ? "pass" : "fail"; };

  const int expected = q * q + q + 1;
  const bool params = np == expected && nl == expected;
  mark("parameter_n", params);
  if (!params)
    r.fail({{"axiom", "parameter_n"}, {"expected", expected}, {"points", np}, {"lines", nl}});

  bool ok = true;
  for (int l = 0; l < nl && ok; ++l) {
    const auto size = plane.points_on(l).count();
    if (size != static_cast<std::size_t>(q + 1)) {
      ok = false;
      r.fail({{"axiom", "line_size"}, {"line", ln[l]}, {"size", size}, {"expected", q + 1}});
    }
  }
  mark("line_size", ok);

  ok = true;
  for (int p = 0; p < np && ok; ++p) {
    const auto deg = plane.lines_through(p).count();
    if (deg != static_cast<std::size_t>(q + 1)) {
      ok = false;
      r.fail({{"axiom", "point_degree"}, {"point", pn[p]}, {"degree", deg}, {"expected", q + 1}});
    }
  }
  mark("point_degree", ok);

  ok = true;
  for (int a = 0; a < np && ok; ++a)
    for (int b = a + 1; b < np && ok; ++b) {
      const auto common = plane.lines_through(a).and_count(plane.lines_through(b));
      if (common != 1) {
        ok = false;
        r.fail({{"axiom", "unique_join"}, {"points", {pn[a], pn[b]}}, {"common_lines", common}});
      }
    }
  mark("unique_join", ok);

  ok = true;
  for (int a = 0; a < nl && ok; ++a)
    for (int b = a + 1; b < nl && ok; ++b) {
      const auto common = plane.points_on(a).and_count(plane.points_on(b));
      if (common != 1) {
        ok = false;
        r.fail({{"axiom", "unique_meet"}, {"lines", {ln[a], ln[b]}}, {"common_points", common}});
      }
    }
  mark("unique_meet", ok);

  r.examined = 5;
  return r;
}

IncidencePlane dual_plane(const IncidencePlane& plane) {
  std::vector<std::vector<PointId>> lines(static_cast<std::size_t>(plane.num_points()));
  for (int p = 0; p < plane.num_points(); ++p)
    for (std::size_t l : plane.lines_through(p).indices()) lines[p].push_back(static_cast<PointId>(l));
  return IncidencePlane(plane.order(), plane.num_lines(), lines, plane.line_names(), plane.point_names());
}

}  // namespace a2
