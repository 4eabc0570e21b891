#include "doctest.h"

#include <filesystem>

#include "a2shift/error.hpp"
#include "a2shift/formats.hpp"

using namespace a2;

namespace {

ErrorCode error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("a2shift_test_" + name)).string();
}

}  // namespace

TEST_SUITE("formats") {
  TEST_CASE("plane text round-trips") {
    for (const IncidencePlane& p : {pg2(2), pg2(4), classic_plane_order3(), builtin_c1().plane()}) {
      const std::string text = serialize_plane(p);
      const IncidencePlane back = parse_plane(text);
      CHECK(back == p);
      CHECK(back.point_names() == p.point_names());
      CHECK(back.line_names() == p.line_names());
      CHECK(serialize_plane(back) == text);
    }
  }

  TEST_CASE("order-3 line (8) in the plane file") {
    const std::string text = serialize_plane(classic_plane_order3());
    CHECK(text.find("line (8): 1 5 6 8\n") != std::string::npos);
  }

  TEST_CASE("plane names follow first appearance without a points line") {
    const IncidencePlane p = parse_plane(
        "a2plane 1\nq 2\n# Fano\nline a: p q r\nline b: p s t\nline c: p u v\nline d: q s u\nline e: q t v\n"
        "line f: r s v\nline g: r t u\n");
    CHECK(p.point_names() == std::vector<std::string>{"p", "q", "r", "s", "t", "u", "v"});
    CHECK(verify_plane(p).passed());
  }

  TEST_CASE("plane parse errors") {
    CHECK(error_of([] { parse_plane("a2plane 2\nq 2\n"); }) == ErrorCode::VersionUnsupported);
    CHECK(error_of([] { parse_plane("a2tp 1\n"); }) == ErrorCode::KindMismatch);
    CHECK(error_of([] { parse_plane("a2plane 1\nq 2\nline a: 1 2\n"); }) == ErrorCode::ArityError);
    CHECK(error_of([] { parse_plane("a2plane 1\nline a: 1 2 3\n"); }) == ErrorCode::SyntaxError);
    CHECK(error_of([] { parse_plane("a2plane 1\nq 2\npoints 1 2 3\nline a: 1 2 4\n"); }) ==
          ErrorCode::UnknownPoint);
    try {
      parse_plane("a2plane 1\nq 2\nbogus\n");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }

  TEST_CASE("matrix text round-trips and sorts edges") {
    const TrianglePresentation c1 = builtin_c1();
    const MatrixDocument doc = matrix_document(c1, RelationKind::Wall);
    const std::string text = serialize_matrix(doc);
    CHECK(text.rfind("a2mat 1\nn 21\nkind wall\nt 0 x0 x0 x6\n", 0) == 0);
    CHECK(parse_matrix(text) == doc);
    const MatrixDocument small = parse_matrix("a2mat 1\nn 2\nkind M1\nt 0 a b c\nt 1 b c a\ne 1 0\ne 0 1\ne 0 0\n");
    CHECK(serialize_matrix(small) == "a2mat 1\nn 2\nkind M1\nt 0 a b c\nt 1 b c a\ne 0 0\ne 0 1\ne 1 0\n");
    CHECK(error_of([] { parse_matrix("a2mat 1\nn 2\nkind M1\nt 0 a b c\n"); }) == ErrorCode::SyntaxError);
    CHECK(error_of([] { parse_matrix("a2mat 1\nn 1\nkind M9\n"); }) == ErrorCode::SyntaxError);
    CHECK(error_of([] { parse_matrix("a2mat 1\nn 1\nkind M1\nt 0 a b c\ne 0 3\n"); }) == ErrorCode::SyntaxError);
  }

  TEST_CASE("report JSON round-trips") {
    VerificationReport r;
    r.check = "demo";
    r.examined = 3;
    r.stats["k"] = 2;
    r.fail({{"tile", "(x0,x2,x3)"}});
    r.seed = 42;
    const std::string text = serialize_report(r);
    CHECK(parse_report(text) == r);
    CHECK(serialize_report(parse_report(text)) == text);
    CHECK(error_of([] { parse_report("{\"check\": 1}"); }) == ErrorCode::SyntaxError);
    CHECK(error_of([] { parse_report("not json"); }) == ErrorCode::SyntaxError);
  }

  TEST_CASE("documents by kind") {
    CHECK(detect_kind("# c\na2plane 1\n") == DocKind::Plane);
    CHECK(detect_kind(builtin_c1_text()) == DocKind::Presentation);
    CHECK(detect_kind("{}") == DocKind::Report);
    CHECK(error_of([] { detect_kind("hello\n"); }) == ErrorCode::SyntaxError);
    CHECK(error_of([] { parse_document(builtin_c1_text(), DocKind::Plane); }) == ErrorCode::KindMismatch);
    std::string broken(builtin_c1_text());
    broken += "rel x0 x2 x4\n";
    CHECK(error_of([&] { parse_document(broken); }) == ErrorCode::InvalidArgument);
    CHECK(error_of([] { parse_presentation("a2tp 2\nq 2\n"); }) == ErrorCode::VersionUnsupported);
  }

  TEST_CASE("files round-trip for all four kinds") {
    const TrianglePresentation c1 = builtin_c1();
    const VerificationReport report = verify_plane(pg2(3));
    const std::vector<Document> docs{
        {DocKind::Plane, 1, pg2(3)},
        {DocKind::Presentation, 1, c1},
        {DocKind::Matrix, 1, matrix_document(c1, RelationKind::M2)},
        {DocKind::Report, 1, report},
    };
    for (const Document& d : docs) {
      const std::string path = temp_path(std::string(to_string(d.kind)));
      write_document(d, path);
      const Document back = read_document(path, d.kind);
      CHECK(back.kind == d.kind);
      CHECK(serialize_document(back) == serialize_document(d));
      CHECK(read_text_file(path) == serialize_document(d));
      std::filesystem::remove(path);
    }
  }

  TEST_CASE("missing files") {
    CHECK(error_of([] { read_document("/nonexistent/dir/file.a2tp"); }) == ErrorCode::IoError);
    CHECK(error_of([] { write_text_file("/nonexistent/dir/file", "x"); }) == ErrorCode::IoError);
  }
}
