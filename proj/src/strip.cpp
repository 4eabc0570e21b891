#include <algorithm>
#include <deque>
#include <sstream>

#include "a2shift/error.hpp"
#include "a2shift/subshift.hpp"

namespace a2 {

StripWitness find_strip(const TrianglePresentation& pres, Tile initial, Tile final_tile) {
  return find_strip(pres, build_wall(pres), initial, final_tile);
}

StripWitness find_strip(const TrianglePresentation& pres, const BoolMatrix& wall, Tile initial, Tile final_tile) {
  const int from = pres.index_of(initial), to = pres.index_of(final_tile);
  if (from < 0 || to < 0)
    throw Error(ErrorCode::InvalidArgument, "strip endpoints must be tiles of the presentation");
  const std::size_t n = pres.size();
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{static_cast<std::size_t>(from)};
  seen[from] = true;
  while (!queue.empty() && !seen[to]) {
    const std::size_t u = queue.front();
    queue.pop_front();
    const Bitset& row = wall.row(u);
    for (std::size_t v = row.find_first(); v < n; v = row.find_next(v + 1)) {
      if (seen[v]) continue;
      seen[v] = true;
      parent[v] = static_cast<int>(u);
      queue.push_back(v);
    }
  }
  if (!seen[to])
    throw Error(ErrorCode::NoPath, "no wall strip from " + pres.tile_name(initial) + " to " + pres.tile_name(final_tile));

  std::vector<std::size_t> order;
  for (int v = to; v != from; v = parent[v]) order.push_back(static_cast<std::size_t>(v));
  order.push_back(static_cast<std::size_t>(from));
  std::reverse(order.begin(), order.end());

  StripWitness w;
  for (std::size_t i = 0; i < order.size(); ++i) {
    w.tiles.push_back(pres.tile(order[i]));
    if (i > 0) w.connectors.push_back(down_tile_between(w.tiles[i - 1], w.tiles[i], pres));
  }
  return w;
}

bool strip_is_valid(const TrianglePresentation& pres, const StripWitness& w) {
  if (w.tiles.empty() || w.connectors.size() + 1 != w.tiles.size()) return false;
  for (const Tile& t : w.tiles)
    if (!pres.contains(t)) return false;
  for (std::size_t i = 1; i < w.tiles.size(); ++i) {
    if (!oracle_pair_realizable(pres, w.tiles[i - 1], w.tiles[i], RelationKind::Wall)) return false;
    const Tile& u = w.connectors[i - 1];
    // The connector shares the edge f of the left tile and g of the right one.
    if (!pres.contains(u) || u.x != w.tiles[i].z || u.y != w.tiles[i - 1].y) return false;
  }
  return true;
}

StripWitness concatenate(const StripWitness& a, const StripWitness& b) {
  if (a.tiles.empty() || b.tiles.empty() || a.tiles.back() != b.tiles.front())
    throw Error(ErrorCode::InvalidArgument, "strips do not share an end tile");
  StripWitness out = a;
  out.tiles.insert(out.tiles.end(), b.tiles.begin() + 1, b.tiles.end());
  out.connectors.insert(out.connectors.end(), b.connectors.begin(), b.connectors.end());
  return out;
}

namespace {

std::string centered(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  const std::size_t left = (width - s.size()) / 2;
  return std::string(left, ' ') + s + std::string(width - s.size() - left, ' ');
}

std::string padded_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string padded_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void trim_trailing(std::string& s) {
  while (!s.empty() && s.back() == ' ') s.pop_back();
}

}  // namespace

std::string render_strip(const TrianglePresentation& pres, const StripWitness& w) {
  std::size_t width = 1;
  for (const auto& name : pres.point_names()) width = std::max(width, name.size());
  // Cell layout: "<left> /  \ <right> " with labels padded to `width`.
  const std::size_t cell = 2 * width + 7;

  std::string tops, apexes, sides, bases, labels;
  for (std::size_t i = 0; i < w.tiles.size(); ++i) {
    const Tile& t = w.tiles[i];
    std::string apex = std::string(width + 2, ' ') + "/\\" + std::string(width + 3, ' ');
    if (i > 0) {
      // Dashed top edge of the connector, from the previous apex to this one.
      std::fill(apex.begin(), apex.begin() + static_cast<std::ptrdiff_t>(apex.find('/')), '-');
      std::fill(apexes.begin() + static_cast<std::ptrdiff_t>(apexes.rfind('\\') + 1), apexes.end(), '-');
      const std::string& top = pres.name(w.connectors[i - 1].z);
      tops = padded_right(tops, apexes.size() - top.size() / 2);
      tops += top;
    }
    apexes += apex;
    sides += padded_left(pres.name(t.z), width) + " /  \\ " + padded_right(pres.name(t.y), width) + ' ';
    bases += std::string(width, ' ') + "/____\\" + std::string(width + 1, ' ');
    labels += centered(pres.name(t.x), cell);
  }
  for (auto* row : {&tops, &apexes, &sides, &bases, &labels}) trim_trailing(*row);

  std::ostringstream os;
  os << "strip: " << w.steps() << (w.steps() == 1 ? " step" : " steps") << '\n';
  if (!tops.empty()) os << tops << '\n';
  os << apexes << '\n' << sides << '\n' << bases << '\n' << labels << '\n';
  for (std::size_t i = 0; i < w.tiles.size(); ++i) {
    if (i > 0) os << "  u" << i << " = " << pres.tile_name(w.connectors[i - 1]) << '\n';
    os << "  t" << i << " = " << pres.tile_name(w.tiles[i]) << '\n';
  }
  return os.str();
}

}  // namespace a2
