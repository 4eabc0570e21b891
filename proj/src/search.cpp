#include "a2shift/presentation.hpp"

#include <algorithm>
#include <numeric>

#include "a2shift/error.hpp"
#include "a2shift/parallel.hpp"

namespace a2 {

namespace {

// Depth-first search over incidence pairs (x, y), y in lambda(x), in
// lexicographic order. Choosing z for a pair fixes all three rotations at once.
class PresentationSearch {
 public:
  PresentationSearch(const IncidencePlane& plane, const PointLineCorrespondence& lambda, std::size_t limit)
      : plane_(plane), lambda_(lambda), limit_(limit), n_(plane.num_points()),
        z_of_(static_cast<std::size_t>(n_ * n_), -1) {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (incident(x, y)) pairs_.push_back({x, y});
  }

  std::vector<std::vector<Tile>> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  struct Pair {
    PointId x, y;
  };

  bool incident(PointId x, PointId y) const { return plane_.incident(y, lambda_.lambda[x]); }
  PointId& slot(PointId x, PointId y) { return z_of_[static_cast<std::size_t>(x * n_ + y)]; }

  bool place(Tile t, std::vector<std::size_t>& undo) {
    Tile r = t;
    for (int i = 0; i < 3; ++i, r = rotate(rotate(r))) {
      // r walks (x,y,z) -> (y,z,x) -> (z,x,y).
      if (!incident(r.x, r.y)) return false;
      PointId& s = slot(r.x, r.y);
      if (s >= 0) {
        if (s != r.z) return false;
        continue;
      }
      s = r.z;
      undo.push_back(static_cast<std::size_t>(r.x * n_ + r.y));
    }
    return true;
  }

  void descend(std::size_t i) {
    if (limit_ != 0 && found_.size() >= limit_) return;
    while (i < pairs_.size() && slot(pairs_[i].x, pairs_[i].y) >= 0) ++i;
    if (i == pairs_.size()) {
      std::vector<Tile> tiles;
      for (const Pair& p : pairs_) tiles.push_back({p.x, p.y, slot(p.x, p.y)});
      found_.push_back(std::move(tiles));
      return;
    }
    const Pair p = pairs_[i];
    for (PointId z = 0; z < n_; ++z) {
      std::vector<std::size_t> undo;
      if (place({p.x, p.y, z}, undo)) descend(i + 1);
      for (std::size_t s : undo) z_of_[s] = -1;
      if (limit_ != 0 && found_.size() >= limit_) return;
    }
  }

  const IncidencePlane& plane_;
  const PointLineCorrespondence& lambda_;
  std::size_t limit_;
  int n_;
  std::vector<PointId> z_of_;
  std::vector<Pair> pairs_;
  std::vector<std::vector<Tile>> found_;
};

}  // namespace

std::vector<TrianglePresentation> search_presentations(const IncidencePlane& plane,
                                                        const PointLineCorrespondence& lambda,
                                                        std::size_t limit) {
  if (!lambda.is_bijection(plane.num_lines()) || plane.num_points() != plane.num_lines())
    throw Error(ErrorCode::InvalidArgument, "lambda must be a bijection onto the plane's lines");
  std::vector<TrianglePresentation> out;
  for (auto& tiles : PresentationSearch(plane, lambda, limit).run()) {
    Validation v = validate(tiles, plane.order(), plane.point_names());
    if (!v.presentation)
      throw Error(ErrorCode::InvalidArgument, "search produced a tile set that fails validation");
    out.push_back(std::move(*v.presentation));
  }
  std::sort(out.begin(), out.end(),
            [](const TrianglePresentation& a, const TrianglePresentation& b) { return a.tiles() < b.tiles(); });
  return out;
}

LambdaSweepSummary sweep_all_lambdas_q2(const IncidencePlane& plane, unsigned jobs) {
  if (plane.order() > 2)
    throw Error(ErrorCode::OrderTooLarge, "the all-lambda sweep is limited to order 2, got " +
                                              std::to_string(plane.order()));
  const int n = plane.num_points();
  std::vector<std::vector<LineId>> perms;
  std::vector<LineId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::vector<TrianglePresentation>> per_lambda(perms.size());
  parallel_for(perms.size(), jobs, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      per_lambda[i] = search_presentations(plane, PointLineCorrespondence{perms[i]});
  });

  LambdaSweepSummary s;
  s.lambdas_examined = perms.size();
  for (auto& found : per_lambda) {
    s.counts.push_back(found.size());
    ++s.histogram[found.size()];
    for (auto& p : found) s.presentations.push_back(std::move(p));
  }
  std::sort(s.presentations.begin(), s.presentations.end(),
            [](const TrianglePresentation& a, const TrianglePresentation& b) { return a.tiles() < b.tiles(); });
  return s;
}

}  // namespace a2
