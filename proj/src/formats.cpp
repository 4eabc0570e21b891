#include "a2shift/formats.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "a2shift/error.hpp"

namespace a2 {

namespace {

struct TextLine {
  std::size_t number;
  std::vector<std::string> tokens;
  std::string_view raw;
};

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

// Non-empty lines with comments stripped.
std::vector<TextLine> content_lines(std::string_view text) {
  std::vector<TextLine> out;
  std::size_t pos = 0, number = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (!tokens.empty()) out.push_back({number, std::move(tokens), line});
  }
  return out;
}

[[noreturn]] void syntax(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

long parse_long(const std::string& tok, std::size_t line) {
  long v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) syntax(line, "expected an integer, got '" + tok + "'");
  return v;
}

const char* header_token(DocKind k) {
  switch (k) {
    case DocKind::Plane: return "a2plane";
    case DocKind::Presentation: return "a2tp";
    case DocKind::Matrix: return "a2mat";
    case DocKind::Report: return "{";
  }
  return "";
}

// Checks the header of a text format: must be first, version 1, right kind.
void check_header(const TextLine& line, DocKind want) {
  const std::string& head = line.tokens[0];
  for (DocKind k : {DocKind::Plane, DocKind::Presentation, DocKind::Matrix})
    if (head == header_token(k) && k != want)
      throw Error(ErrorCode::KindMismatch, "expected a " + std::string(to_string(want)) + " file, found '" + head +
                                               "' header");
  if (line.tokens.size() != 2) syntax(line.number, "header needs exactly one version token");
  if (line.tokens[1] != "1")
    throw Error(ErrorCode::VersionUnsupported,
                std::string(to_string(want)) + " format version " + line.tokens[1] + " is not supported");
}

bool is_header(const std::string& tok) { return tok == "a2plane" || tok == "a2tp" || tok == "a2mat"; }

}  // namespace

std::string_view to_string(DocKind k) {
  switch (k) {
    case DocKind::Plane: return "plane";
    case DocKind::Presentation: return "presentation";
    case DocKind::Matrix: return "matrix";
    case DocKind::Report: return "report";
  }
  return "?";
}

IncidencePlane parse_plane(std::string_view text) {
  const auto lines = content_lines(text);
  int q = -1;
  bool explicit_points = false;
  std::vector<std::string> point_names, line_names;
  std::unordered_map<std::string, PointId> ids;
  std::vector<std::vector<PointId>> records;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const TextLine& l = lines[i];
    const std::string& head = l.tokens[0];
    if (is_header(head)) {
      if (i != 0) syntax(l.number, "header must be the first line");
      check_header(l, DocKind::Plane);
    } else if (head == "q") {
      if (l.tokens.size() != 2) syntax(l.number, "q needs exactly one value");
      q = static_cast<int>(parse_long(l.tokens[1], l.number));
      if (q < 2) syntax(l.number, "q must be at least 2");
    } else if (head == "points") {
      if (explicit_points || !records.empty()) syntax(l.number, "points must precede every line and appear once");
      for (std::size_t t = 1; t < l.tokens.size(); ++t) {
        if (ids.count(l.tokens[t])) syntax(l.number, "duplicate point name '" + l.tokens[t] + "'");
        ids.emplace(l.tokens[t], static_cast<PointId>(point_names.size()));
        point_names.push_back(l.tokens[t]);
      }
      explicit_points = true;
    } else if (head == "line") {
      if (q < 0) syntax(l.number, "q must precede the first line record");
      const auto kw = l.raw.find("line");
      const auto colon = l.raw.find(':', kw + 4);
      if (colon == std::string_view::npos) syntax(l.number, "line record needs 'line <name>: <points>'");
      const auto name_tokens = split_ws(l.raw.substr(kw + 4, colon - kw - 4));
      if (name_tokens.size() != 1) syntax(l.number, "line name must be a single token");
      if (std::find(line_names.begin(), line_names.end(), name_tokens[0]) != line_names.end())
        syntax(l.number, "duplicate line name '" + name_tokens[0] + "'");
      const auto pts = split_ws(l.raw.substr(colon + 1));
      if (pts.size() != static_cast<std::size_t>(q + 1))
        throw Error(ErrorCode::ArityError, "line " + std::to_string(l.number) + ": expected " + std::to_string(q + 1) +
                                               " points, got " + std::to_string(pts.size()));
      std::vector<PointId> rec;
      for (const auto& p : pts) {
        auto it = ids.find(p);
        if (it == ids.end()) {
          if (explicit_points)
            throw Error(ErrorCode::UnknownPoint, "line " + std::to_string(l.number) + ": unknown point '" + p + "'");
          it = ids.emplace(p, static_cast<PointId>(point_names.size())).first;
          point_names.push_back(p);
        }
        rec.push_back(it->second);
      }
      line_names.push_back(name_tokens[0]);
      records.push_back(std::move(rec));
    } else {
      syntax(l.number, "unknown directive '" + head + "'");
    }
  }
  if (q < 0) throw Error(ErrorCode::SyntaxError, "plane file has no q line");
  const int n = static_cast<int>(point_names.size());
  return IncidencePlane(q, n, records, std::move(point_names), std::move(line_names));
}

std::string serialize_plane(const IncidencePlane& plane) {
  std::ostringstream os;
  os << "a2plane 1\n";
  os << "q " << plane.order() << '\n';
  os << "points";
  for (const auto& p : plane.point_names()) os << ' ' << p;
  os << '\n';
  for (LineId l = 0; l < plane.num_lines(); ++l) {
    os << "line " << plane.line_names()[l] << ':';
    for (PointId p : plane.line_points(l)) os << ' ' << plane.point_names()[p];
    os << '\n';
  }
  return os.str();
}

MatrixDocument matrix_document(const TrianglePresentation& pres, RelationKind kind) {
  MatrixDocument d;
  d.kind = kind;
  for (const Tile& t : pres.tiles()) d.legend.push_back({pres.name(t.x), pres.name(t.y), pres.name(t.z)});
  d.matrix = build_relation(pres, kind);
  return d;
}

MatrixDocument parse_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  long n = -1;
  std::optional<RelationKind> kind;
  std::vector<std::optional<std::array<std::string, 3>>> legend;
  std::vector<std::pair<long, long>> edges;

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const TextLine& l = lines[i];
    const std::string& head = l.tokens[0];
    if (is_header(head)) {
      if (i != 0) syntax(l.number, "header must be the first line");
      check_header(l, DocKind::Matrix);
    } else if (head == "n") {
      if (l.tokens.size() != 2) syntax(l.number, "n needs exactly one value");
      n = parse_long(l.tokens[1], l.number);
      if (n < 0 || n > 100000) syntax(l.number, "n out of range");
      legend.assign(static_cast<std::size_t>(n), std::nullopt);
    } else if (head == "kind") {
      if (l.tokens.size() != 2) syntax(l.number, "kind needs exactly one value");
      try {
        kind = relation_from_string(l.tokens[1]);
      } catch (const Error&) {
        syntax(l.number, "unknown relation kind '" + l.tokens[1] + "'");
      }
    } else if (head == "t" || head == "e") {
      if (n < 0) syntax(l.number, "n must precede legend and edge lines");
      const std::size_t want = head == "t" ? 5 : 3;
      if (l.tokens.size() != want)
        throw Error(ErrorCode::ArityError, "line " + std::to_string(l.number) + ": '" + head + "' needs " +
                                               std::to_string(want - 1) + " values");
      const long a = parse_long(l.tokens[1], l.number);
      if (a < 0 || a >= n) syntax(l.number, "index out of range");
      if (head == "t") {
        if (legend[a]) syntax(l.number, "duplicate legend entry " + l.tokens[1]);
        legend[a] = std::array<std::string, 3>{l.tokens[2], l.tokens[3], l.tokens[4]};
      } else {
        const long b = parse_long(l.tokens[2], l.number);
        if (b < 0 || b >= n) syntax(l.number, "index out of range");
        edges.emplace_back(a, b);
      }
    } else {
      syntax(l.number, "unknown directive '" + head + "'");
    }
  }
  if (n < 0) throw Error(ErrorCode::SyntaxError, "matrix file has no n line");
  if (!kind) throw Error(ErrorCode::SyntaxError, "matrix file has no kind line");
  MatrixDocument d;
  d.kind = *kind;
  d.matrix = BoolMatrix(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    if (!legend[i]) throw Error(ErrorCode::SyntaxError, "legend entry " + std::to_string(i) + " is missing");
    d.legend.push_back(*legend[i]);
  }
  for (auto [a, b] : edges) d.matrix.set(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
  return d;
}

std::string serialize_matrix(const MatrixDocument& doc) {
  if (doc.legend.size() != doc.matrix.size())
    throw Error(ErrorCode::DimensionMismatch, "legend size does not match matrix size");
  std::ostringstream os;
  os << "a2mat 1\n";
  os << "n " << doc.matrix.size() << '\n';
  os << "kind " << to_string(doc.kind) << '\n';
  for (std::size_t i = 0; i < doc.legend.size(); ++i)
    os << "t " << i << ' ' << doc.legend[i][0] << ' ' << doc.legend[i][1] << ' ' << doc.legend[i][2] << '\n';
  for (std::size_t i = 0; i < doc.matrix.size(); ++i)
    for (std::size_t j : doc.matrix.row(i).indices()) os << "e " << i << ' ' << j << '\n';
  return os.str();
}

VerificationReport parse_report(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, std::string("report is not valid JSON: ") + e.what());
  }
  return report_from_json(j);
}

std::string serialize_report(const VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

DocKind detect_kind(std::string_view text) {
  for (const auto& l : content_lines(text)) {
    const std::string& head = l.tokens[0];
    if (head == "a2plane") return DocKind::Plane;
    if (head == "a2tp") return DocKind::Presentation;
    if (head == "a2mat") return DocKind::Matrix;
    if (head.front() == '{') return DocKind::Report;
    break;
  }
  throw Error(ErrorCode::SyntaxError, "cannot determine the file kind from its first line");
}

Document parse_document(std::string_view text, std::optional<DocKind> expected) {
  const DocKind kind = detect_kind(text);
  if (expected && *expected != kind)
    throw Error(ErrorCode::KindMismatch, "expected a " + std::string(to_string(*expected)) + " file, found a " +
                                             std::string(to_string(kind)) + " file");
  Document d;
  d.kind = kind;
  switch (kind) {
    case DocKind::Plane: d.payload = parse_plane(text); break;
    case DocKind::Matrix: d.payload = parse_matrix(text); break;
    case DocKind::Report: d.payload = parse_report(text); break;
    case DocKind::Presentation: {
      Validation v = validate(parse_presentation(text));
      if (!v.presentation) {
        std::string why = v.report.check;
        if (!v.report.counterexamples.empty()) why += ": " + v.report.counterexamples.front().dump();
        throw Error(ErrorCode::InvalidArgument, "presentation failed validation (" + why + ")");
      }
      d.payload = std::move(*v.presentation);
      break;
    }
  }
  return d;
}

std::string serialize_document(const Document& doc) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, IncidencePlane>)
          return serialize_plane(p);
        else if constexpr (std::is_same_v<T, TrianglePresentation>)
          return serialize_presentation(p);
        else if constexpr (std::is_same_v<T, MatrixDocument>)
          return serialize_matrix(p);
        else
          return serialize_report(p);
      },
      doc.payload);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "error while reading '" + path + "'");
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::IoError, "error while writing '" + path + "'");
}

Document read_document(const std::string& path, std::optional<DocKind> expected) {
  return parse_document(read_text_file(path), expected);
}

void write_document(const Document& doc, const std::string& path) { write_text_file(path, serialize_document(doc)); }

}  // namespace a2
