#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "a2shift/bool_matrix.hpp"
#include "a2shift/plane.hpp"
#include "a2shift/presentation.hpp"
#include "a2shift/report.hpp"
#include "a2shift/subshift.hpp"

namespace a2 {

enum class DocKind { Plane, Presentation, Matrix, Report };

std::string_view to_string(DocKind k);

// Exported transition matrix with its tile legend (point names per tile).
struct MatrixDocument {
  RelationKind kind = RelationKind::M1;
  std::vector<std::array<std::string, 3>> legend;
  BoolMatrix matrix;

  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

MatrixDocument matrix_document(const TrianglePresentation& pres, RelationKind kind);

struct Document {
  DocKind kind = DocKind::Plane;
  int version = 1;
  std::variant<IncidencePlane, TrianglePresentation, MatrixDocument, VerificationReport> payload;
};

// Plane text: `a2plane 1`, `q <int>`, optional `points <names>`, then one
// `line <name>: <pt> ...` record per line. Without `points`, names get ids
// in order of first appearance.
IncidencePlane parse_plane(std::string_view text);
std::string serialize_plane(const IncidencePlane& plane);

// Matrix text: `a2mat 1`, `n <int>`, `kind <M1|M2|wall>`, `t <idx> x y z`
// legend lines, then `e <i> <j>` per nonzero. Edges may come in any order.
MatrixDocument parse_matrix(std::string_view text);
std::string serialize_matrix(const MatrixDocument& doc);

VerificationReport parse_report(std::string_view text);
std::string serialize_report(const VerificationReport& report);

// Kind from the first meaningful line: a header token or a JSON object.
// Throws Error{SyntaxError} if it cannot be determined.
DocKind detect_kind(std::string_view text);

// Parses text of any kind. A presentation must validate; otherwise
// Error{InvalidArgument} carries the failed property. With `expected` set a
// different kind throws Error{KindMismatch}.
Document parse_document(std::string_view text, std::optional<DocKind> expected = std::nullopt);
std::string serialize_document(const Document& doc);

Document read_document(const std::string& path, std::optional<DocKind> expected = std::nullopt);
void write_document(const Document& doc, const std::string& path);

// Whole-file helpers. Throw Error{IoError}.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace a2
