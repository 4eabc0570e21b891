#include "a2shift/plane.hpp"

#include <algorithm>

namespace a2 {

namespace {

using Signature = std::vector<std::size_t>;

// Degree followed by the sorted sizes of the incident elements.
std::vector<Signature> point_signatures(const IncidencePlane& g) {
  std::vector<Signature> out(static_cast<std::size_t>(g.num_points()));
  for (int p = 0; p < g.num_points(); ++p) {
    Signature s;
    for (std::size_t l : g.lines_through(p).indices()) s.push_back(g.points_on(static_cast<int>(l)).count());
    std::sort(s.begin(), s.end());
    s.insert(s.begin(), s.size());
    out[p] = std::move(s);
  }
  return out;
}

std::vector<Signature> line_signatures(const IncidencePlane& g) {
  std::vector<Signature> out(static_cast<std::size_t>(g.num_lines()));
  for (int l = 0; l < g.num_lines(); ++l) {
    Signature s;
    for (std::size_t p : g.points_on(l).indices()) s.push_back(g.lines_through(static_cast<int>(p)).count());
    std::sort(s.begin(), s.end());
    s.insert(s.begin(), s.size());
    out[l] = std::move(s);
  }
  return out;
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  return v;
}

class IsoSearch {
 public:
  IsoSearch(const IncidencePlane& a, const IncidencePlane& b)
      : a_(a), b_(b),
        psig_a_(point_signatures(a)), psig_b_(point_signatures(b)),
        lsig_a_(line_signatures(a)), lsig_b_(line_signatures(b)),
        pmap_(a.num_points(), -1), lmap_(a.num_lines(), -1),
        pused_(b.num_points(), false), lused_(b.num_lines(), false) {}

  bool feasible() const {
    return a_.num_points() == b_.num_points() && a_.num_lines() == b_.num_lines() &&
           sorted(psig_a_) == sorted(psig_b_) && sorted(lsig_a_) == sorted(lsig_b_);
  }

  std::optional<PlaneIsomorphism> run() {
    if (!feasible()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return PlaneIsomorphism{pmap_, lmap_};
  }

 private:
  bool line_consistent(int line, int image) const {
    for (int p = 0; p < a_.num_points(); ++p)
      if (pmap_[p] >= 0 && a_.incident(p, line) != b_.incident(pmap_[p], image)) return false;
    return true;
  }

  void set_line(int line, int image, std::vector<int>& undo) {
    lmap_[line] = image;
    lused_[image] = true;
    undo.push_back(line);
  }

  void rollback(std::vector<int>& undo) {
    for (int l : undo) {
      lused_[lmap_[l]] = false;
      lmap_[l] = -1;
    }
    undo.clear();
  }

  // Assigns p -> image and propagates forced line images.
  bool assign(int p, int image, std::vector<int>& undo) {
    for (int l = 0; l < a_.num_lines(); ++l)
      if (lmap_[l] >= 0 && a_.incident(p, l) != b_.incident(image, lmap_[l])) return false;
    pmap_[p] = image;
    pused_[image] = true;

    for (std::size_t li : a_.lines_through(p).indices()) {
      const int l = static_cast<int>(li);
      if (lmap_[l] >= 0) continue;
      Bitset images(static_cast<std::size_t>(b_.num_points()));
      int mapped_on_line = 0;
      for (std::size_t q : a_.points_on(l).indices())
        if (pmap_[q] >= 0) {
          images.set(static_cast<std::size_t>(pmap_[q]));
          ++mapped_on_line;
        }
      if (mapped_on_line < 2) continue;
      int candidate = -1, count = 0;
      for (int m = 0; m < b_.num_lines(); ++m) {
        if (lused_[m] || lsig_b_[m] != lsig_a_[l]) continue;
        if (images.and_count(b_.points_on(m)) != images.count()) continue;
        candidate = m;
        ++count;
      }
      if (count == 0) return false;
      if (count == 1) {
        if (!line_consistent(l, candidate)) return false;
        set_line(l, candidate, undo);
      }
    }
    return true;
  }

  bool finish_lines() {
    std::vector<int> undo;
    for (int l = 0; l < a_.num_lines(); ++l) {
      if (lmap_[l] >= 0) continue;
      Bitset images(static_cast<std::size_t>(b_.num_points()));
      for (std::size_t q : a_.points_on(l).indices()) images.set(static_cast<std::size_t>(pmap_[q]));
      int found = -1;
      for (int m = 0; m < b_.num_lines() && found < 0; ++m)
        if (!lused_[m] && b_.points_on(m) == images) found = m;
      if (found < 0) {
        rollback(undo);
        return false;
      }
      set_line(l, found, undo);
    }
    return true;
  }

  bool extend(int p) {
    if (p == a_.num_points()) return finish_lines();
    for (int image = 0; image < b_.num_points(); ++image) {
      if (pused_[image] || psig_b_[image] != psig_a_[p]) continue;
      std::vector<int> undo;
      if (assign(p, image, undo) && extend(p + 1)) return true;
      rollback(undo);
      if (pmap_[p] == image) {
        pused_[image] = false;
        pmap_[p] = -1;
      }
    }
    return false;
  }

  const IncidencePlane& a_;
  const IncidencePlane& b_;
  std::vector<Signature> psig_a_, psig_b_, lsig_a_, lsig_b_;
  std::vector<int> pmap_, lmap_;
  std::vector<bool> pused_, lused_;
};

}  // namespace

std::optional<PlaneIsomorphism> planes_isomorphic(const IncidencePlane& a, const IncidencePlane& b) {
  if (a.order() != b.order()) return std::nullopt;
  auto iso = IsoSearch(a, b).run();
  if (iso && !is_isomorphism(a, b, *iso)) return std::nullopt;
  return iso;
}

bool is_isomorphism(const IncidencePlane& a, const IncidencePlane& b, const PlaneIsomorphism& iso) {
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return false;
  if (iso.point_map.size() != static_cast<std::size_t>(a.num_points()) ||
      iso.line_map.size() != static_cast<std::size_t>(a.num_lines()))
    return false;
  std::vector<bool> seen_p(b.num_points(), false), seen_l(b.num_lines(), false);
  for (int img : iso.point_map) {
    if (img < 0 || img >= b.num_points() || seen_p[img]) return false;
    seen_p[img] = true;
  }
  for (int img : iso.line_map) {
    if (img < 0 || img >= b.num_lines() || seen_l[img]) return false;
    seen_l[img] = true;
  }
  for (int p = 0; p < a.num_points(); ++p)
    for (int l = 0; l < a.num_lines(); ++l)
      if (a.incident(p, l) != b.incident(iso.point_map[p], iso.line_map[l])) return false;
  return true;
}

}  // namespace a2
