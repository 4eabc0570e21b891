#include "a2shift/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_map>

#include "a2shift/error.hpp"

namespace a2 {

Tile canonical_rotation(Tile t) noexcept {
  const Tile r1 = rotate(t), r2 = rotate(r1);
  return std::min({t, r1, r2});
}

bool PointLineCorrespondence::is_bijection(int num_lines) const {
  if (lambda.size() != static_cast<std::size_t>(num_lines)) return false;
  std::vector<bool> seen(lambda.size(), false);
  for (LineId l : lambda) {
    if (l < 0 || l >= num_lines || seen[l]) return false;
    seen[l] = true;
  }
  return true;
}

int TrianglePresentation::index_of(Tile t) const noexcept {
  if (t.x < 0 || t.y < 0 || t.z < 0 || t.x >= n_ || t.y >= n_ || t.z >= n_) return -1;
  const std::size_t slot = static_cast<std::size_t>(t.x * n_ + t.y);
  if (z_of_[slot] != t.z) return -1;
  return index_[slot];
}

std::string TrianglePresentation::tile_name(Tile t) const {
  return "(" + name(t.x) + "," + name(t.y) + "," + name(t.z) + ")";
}

struct PresentationBuilder {
  static TrianglePresentation build(int q, std::vector<Tile> tiles, IncidencePlane plane) {
    TrianglePresentation p;
    p.q_ = q;
    p.n_ = plane.num_points();
    std::sort(tiles.begin(), tiles.end());
    p.tiles_ = std::move(tiles);
    p.plane_ = std::move(plane);
    p.lambda_.lambda.resize(static_cast<std::size_t>(p.n_));
    for (int x = 0; x < p.n_; ++x) p.lambda_.lambda[x] = x;
    const auto nn = static_cast<std::size_t>(p.n_ * p.n_);
    p.z_of_.assign(nn, -1);
    p.index_.assign(nn, -1);
    for (std::size_t i = 0; i < p.tiles_.size(); ++i) {
      const Tile& t = p.tiles_[i];
      const auto slot = static_cast<std::size_t>(t.x * p.n_ + t.y);
      p.z_of_[slot] = t.z;
      p.index_[slot] = static_cast<int>(i);
    }
    return p;
  }
};

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void syntax(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": " + what);
}

int parse_int(const std::string& tok, std::size_t line_no) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) syntax(line_no, "expected an integer, got '" + tok + "'");
  return v;
}

// Number of points n = q^2+q+1, or 0 when q is out of range.
int points_for_order(int q) { return q >= 1 ? q * q + q + 1 : 0; }

}  // namespace

RawPresentation parse_presentation(std::string_view text) {
  RawPresentation raw;
  std::unordered_map<std::string, PointId> ids;
  auto intern = [&](const std::string& tok, std::size_t line_no) -> PointId {
    if (auto it = ids.find(tok); it != ids.end()) return it->second;
    if (raw.explicit_points)
      throw Error(ErrorCode::UnknownPoint, "line " + std::to_string(line_no) + ": unknown point '" + tok + "'");
    const auto id = static_cast<PointId>(raw.point_names.size());
    ids.emplace(tok, id);
    raw.point_names.push_back(tok);
    return id;
  };

  bool seen_content = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    if (head == "a2tp") {
      if (seen_content) syntax(line_no, "header must be the first line");
      if (tokens.size() != 2) syntax(line_no, "header needs exactly one version token");
      if (tokens[1] != "1")
        throw Error(ErrorCode::VersionUnsupported, "presentation format version " + tokens[1] + " is not supported");
    } else if (head == "a2plane" || head == "a2mat") {
      throw Error(ErrorCode::KindMismatch, "expected a presentation file, found '" + head + "' header");
    } else if (head == "q") {
      if (tokens.size() != 2) syntax(line_no, "q needs exactly one value");
      raw.q = parse_int(tokens[1], line_no);
    } else if (head == "points") {
      if (!raw.relators.empty() || raw.explicit_points) syntax(line_no, "points must precede every relator and appear once");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (ids.count(tokens[i])) syntax(line_no, "duplicate point name '" + tokens[i] + "'");
        ids.emplace(tokens[i], static_cast<PointId>(raw.point_names.size()));
        raw.point_names.push_back(tokens[i]);
      }
      raw.explicit_points = true;
    } else if (head == "rel") {
      if (tokens.size() != 4)
        throw Error(ErrorCode::ArityError, "line " + std::to_string(line_no) + ": a relator needs exactly 3 points, got " +
                                               std::to_string(tokens.size() - 1));
      const PointId x = intern(tokens[1], line_no);
      const PointId y = intern(tokens[2], line_no);
      const PointId z = intern(tokens[3], line_no);
      raw.relators.push_back({x, y, z});
    } else {
      syntax(line_no, "unknown directive '" + head + "'");
    }
    seen_content = true;
  }
  return raw;
}

std::string serialize_presentation(const TrianglePresentation& pres) {
  std::set<Tile> classes;
  for (const Tile& t : pres.tiles()) classes.insert(canonical_rotation(t));
  std::ostringstream os;
  os << "a2tp 1\n";
  os << "q " << pres.order() << '\n';
  os << "points";
  for (const auto& name : pres.point_names()) os << ' ' << name;
  os << '\n';
  for (const Tile& t : classes) os << "rel " << pres.name(t.x) << ' ' << pres.name(t.y) << ' ' << pres.name(t.z) << '\n';
  return os.str();
}

std::vector<Tile> close_rotations(const std::vector<Tile>& relators) {
  std::vector<Tile> out;
  out.reserve(relators.size() * 3);
  for (const Tile& t : relators) {
    out.push_back(t);
    out.push_back(rotate(t));
    out.push_back(rotate(rotate(t)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Validation validate(const std::vector<Tile>& input, int q, std::vector<std::string> names) {
  Validation v;
  VerificationReport& r = v.report;
  r.check = "triangle_presentation";
  r.examined = input.size();

  const int n = points_for_order(q);
  auto label = [&](PointId p) {
    return p >= 0 && static_cast<std::size_t>(p) < names.size() ? names[p] : std::to_string(p);
  };
  auto tile_json = [&](Tile t) { return Json::array({label(t.x), label(t.y), label(t.z)}); };
  auto pass = [&](const char* key) { r.stats[key] = "pass"; };
  auto fail = [&](const char* key, Json payload) {
    r.stats[key] = "fail";
    payload["property"] = key;
    r.fail(std::move(payload));
    return v;
  };

  if (q < 2) return fail("order", {{"q", q}});
  if (names.size() > static_cast<std::size_t>(n))
    return fail("point_count", {{"names", names.size()}, {"expected", n}});
  for (std::size_t i = names.size(); i < static_cast<std::size_t>(n); ++i) names.push_back(std::to_string(i));
  for (const Tile& t : input)
    if (std::min({t.x, t.y, t.z}) < 0 || std::max({t.x, t.y, t.z}) >= n)
      return fail("point_range", {{"tile", tile_json(t)}, {"n", n}});
  pass("order");

  std::vector<Tile> tiles = input;
  std::sort(tiles.begin(), tiles.end());
  tiles.erase(std::unique(tiles.begin(), tiles.end()), tiles.end());

  // (iii) at most one z per (x, y).
  std::vector<PointId> z_of(static_cast<std::size_t>(n * n), -1);
  for (const Tile& t : tiles) {
    PointId& slot = z_of[static_cast<std::size_t>(t.x * n + t.y)];
    if (slot >= 0 && slot != t.z)
      return fail("uniqueness", {{"pair", {label(t.x), label(t.y)}}, {"z_values", {label(slot), label(t.z)}}});
    slot = t.z;
  }
  pass("uniqueness");

  // (ii) rotation closure.
  for (const Tile& t : tiles)
    if (!std::binary_search(tiles.begin(), tiles.end(), rotate(t)))
      return fail("rotation_closure", {{"tile", tile_json(t)}, {"missing", tile_json(rotate(t))}});
  pass("rotation_closure");

  // Each x is followed by exactly q+1 values y.
  std::vector<std::vector<PointId>> lines(static_cast<std::size_t>(n));
  for (const Tile& t : tiles) lines[t.x].push_back(t.y);
  for (int x = 0; x < n; ++x)
    if (lines[x].size() != static_cast<std::size_t>(q + 1))
      return fail("degree", {{"point", label(x)}, {"degree", lines[x].size()}, {"expected", q + 1}});
  pass("degree");

  // x -> lambda(x) must be injective on line sets.
  std::vector<std::string> line_names;
  for (int x = 0; x < n; ++x) line_names.push_back("L(" + names[x] + ")");
  IncidencePlane plane(q, n, lines, names, line_names);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (plane.points_on(a) == plane.points_on(b))
        return fail("lambda_injective", {{"points", {label(a), label(b)}}});
  pass("lambda_injective");

  const VerificationReport plane_report = verify_plane(plane);
  if (!plane_report.passed())
    return fail("plane", {{"plane_report", to_json(plane_report)}});
  pass("plane");

  const std::size_t expected = static_cast<std::size_t>((q + 1) * n);
  if (tiles.size() != expected) return fail("count", {{"tiles", tiles.size()}, {"expected", expected}});
  pass("count");

  r.stats["tiles"] = tiles.size();
  v.presentation = PresentationBuilder::build(q, std::move(tiles), std::move(plane));
  return v;
}

Validation validate(const RawPresentation& raw) {
  int q = raw.q;
  if (q == 0) {
    // Infer the order from the number of named points.
    for (int c = 2; c <= 16; ++c)
      if (points_for_order(c) == static_cast<int>(raw.point_names.size())) q = c;
  }
  return validate(close_rotations(raw.relators), q, raw.point_names);
}

std::string_view builtin_c1_text() {
  return "a2tp 1\n"
         "q 2\n"
         "points x0 x1 x2 x3 x4 x5 x6\n"
         "rel x0 x0 x6\n"
         "rel x0 x2 x3\n"
         "rel x1 x2 x6\n"
         "rel x1 x3 x5\n"
         "rel x1 x5 x4\n"
         "rel x2 x4 x5\n"
         "rel x3 x4 x6\n";
}

TrianglePresentation builtin_c1() {
  Validation v = validate(parse_presentation(builtin_c1_text()));
  if (!v.presentation) throw Error(ErrorCode::InvalidArgument, "built-in C.1 presentation failed validation");
  return std::move(*v.presentation);
}

Tile parse_tile(const TrianglePresentation& pres, std::string_view text) {
  std::string cleaned(text);
  for (char& c : cleaned)
    if (c == ',' || c == '(' || c == ')') c = ' ';
  const auto tokens = tokenize(cleaned);
  if (tokens.size() != 3)
    throw Error(ErrorCode::ArityError, "a tile needs exactly 3 points, got '" + std::string(text) + "'");
  PointId ids[3];
  for (int i = 0; i < 3; ++i) {
    const auto& names = pres.point_names();
    const auto it = std::find(names.begin(), names.end(), tokens[i]);
    if (it == names.end()) throw Error(ErrorCode::UnknownPoint, "unknown point '" + tokens[i] + "'");
    ids[i] = static_cast<PointId>(it - names.begin());
  }
  return {ids[0], ids[1], ids[2]};
}

}  // namespace a2
