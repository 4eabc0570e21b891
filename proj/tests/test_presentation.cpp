#include "doctest.h"

#include <algorithm>
#include <set>

#include "a2shift/error.hpp"
#include "a2shift/presentation.hpp"

using namespace a2;

namespace {

std::vector<std::string> lambda_names(const TrianglePresentation& p, PointId x) {
  std::vector<std::string> out;
  for (std::size_t y : p.lambda_points(x).indices()) out.push_back(p.name(static_cast<PointId>(y)));
  return out;
}

ErrorCode parse_error(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("C.1 has 21 tiles and reconstructs the Fano plane") {
    const TrianglePresentation c1 = builtin_c1();
    CHECK(c1.order() == 2);
    CHECK(c1.num_points() == 7);
    CHECK(c1.size() == 21);
    CHECK(c1.size() == static_cast<std::size_t>((2 + 1) * (4 + 2 + 1)));
    CHECK(verify_plane(c1.plane()).passed());
    CHECK(planes_isomorphic(c1.plane(), pg2(2)).has_value());
  }

  TEST_CASE("lambda lines of C.1") {
    const TrianglePresentation c1 = builtin_c1();
    CHECK(lambda_names(c1, 0) == std::vector<std::string>{"x0", "x2", "x6"});
    CHECK(lambda_names(c1, 1) == std::vector<std::string>{"x2", "x3", "x5"});
    CHECK(lambda_names(c1, 2) == std::vector<std::string>{"x3", "x4", "x6"});
    CHECK(lambda_names(c1, 3) == std::vector<std::string>{"x0", "x4", "x5"});
    CHECK(lambda_names(c1, 4) == std::vector<std::string>{"x1", "x5", "x6"});
    CHECK(lambda_names(c1, 5) == std::vector<std::string>{"x1", "x2", "x4"});
    CHECK(lambda_names(c1, 6) == std::vector<std::string>{"x0", "x1", "x3"});
  }

  TEST_CASE("every tile determines z from (x, y) and rotation stays inside") {
    const TrianglePresentation c1 = builtin_c1();
    for (const Tile& t : c1.tiles()) {
      CHECK(c1.contains(rotate(t)));
      CHECK(c1.z_of(t.x, t.y) == t.z);
      CHECK(c1.in_lambda(t.y, t.x));
    }
    CHECK(c1.index_of({0, 1, 0}) == -1);
  }

  TEST_CASE("canonical text round-trips") {
    const TrianglePresentation c1 = builtin_c1();
    CHECK(serialize_presentation(c1) == builtin_c1_text());
    const Validation again = validate(parse_presentation(serialize_presentation(c1)));
    REQUIRE(again.presentation.has_value());
    CHECK(*again.presentation == c1);
    CHECK(builtin_c1_text().find("rel x0 x0 x6\n") != std::string_view::npos);
  }

  TEST_CASE("relators may be given in any rotation") {
    const std::string text =
        "q 2\npoints x0 x1 x2 x3 x4 x5 x6\n"
        "rel x0 x6 x0\nrel x2 x3 x0\nrel x1 x2 x6\nrel x1 x3 x5\nrel x1 x5 x4\nrel x2 x4 x5\nrel x3 x4 x6\n";
    const Validation v = validate(parse_presentation(text));
    REQUIRE(v.presentation.has_value());
    CHECK(*v.presentation == builtin_c1());
  }

  TEST_CASE("adding a relator breaks uniqueness") {
    std::string text(builtin_c1_text());
    text += "rel x0 x2 x4\n";
    const Validation v = validate(parse_presentation(text));
    CHECK_FALSE(v.presentation.has_value());
    CHECK(v.report.stats["uniqueness"] == "fail");
  }

  TEST_CASE("dropping a relator is rejected") {
    std::string text(builtin_c1_text());
    text.erase(text.find("rel x3 x4 x6\n"));
    const Validation v = validate(parse_presentation(text));
    CHECK_FALSE(v.presentation.has_value());
    CHECK_FALSE(v.report.passed());
  }

  TEST_CASE("non-closed tile sets fail rotation closure") {
    const TrianglePresentation c1 = builtin_c1();
    std::vector<Tile> tiles = c1.tiles();
    tiles.erase(tiles.begin() + 1);
    const Validation v = validate(tiles, 2, c1.point_names());
    CHECK(v.report.stats["rotation_closure"] == "fail");
  }

  TEST_CASE("parse errors") {
    CHECK(parse_error("a2tp 2\n") == ErrorCode::VersionUnsupported);
    CHECK(parse_error("a2plane 1\n") == ErrorCode::KindMismatch);
    CHECK(parse_error("rel x0 x1\n") == ErrorCode::ArityError);
    CHECK(parse_error("points a b c\nrel a b d\n") == ErrorCode::UnknownPoint);
    CHECK(parse_error("q 2\nrelator a b c\n") == ErrorCode::SyntaxError);
    CHECK(parse_error("q two\n") == ErrorCode::SyntaxError);
  }

  TEST_CASE("q is inferred from the number of points") {
    std::string text(builtin_c1_text());
    text.erase(text.find("q 2\n"), 4);
    const Validation v = validate(parse_presentation(text));
    CHECK(v.presentation.has_value());
  }

  TEST_CASE("parse_tile") {
    const TrianglePresentation c1 = builtin_c1();
    CHECK(parse_tile(c1, "x0 x2 x3") == Tile{0, 2, 3});
    CHECK(parse_tile(c1, "(x0,x2,x3)") == Tile{0, 2, 3});
    CHECK_THROWS_AS(parse_tile(c1, "x0 x2"), Error);
    CHECK_THROWS_AS(parse_tile(c1, "x0 x2 y"), Error);
    CHECK(c1.tile_name({0, 2, 3}) == "(x0,x2,x3)");
  }

  TEST_CASE("search rediscovers C.1 from its own lambda") {
    const TrianglePresentation c1 = builtin_c1();
    const auto found = search_presentations(c1.plane(), c1.lambda());
    CHECK(std::find(found.begin(), found.end(), c1) != found.end());
    for (const auto& p : found) CHECK(validate(p.tiles(), 2, p.point_names()).presentation.has_value());
    CHECK(std::is_sorted(found.begin(), found.end(),
                         [](const TrianglePresentation& a, const TrianglePresentation& b) { return a.tiles() < b.tiles(); }));
  }

  TEST_CASE("search honours the limit and rejects non-bijections") {
    const TrianglePresentation c1 = builtin_c1();
    CHECK(search_presentations(c1.plane(), c1.lambda(), 1).size() == 1);
    PointLineCorrespondence bad;
    bad.lambda = {0, 0, 1, 2, 3, 4, 5};
    CHECK_THROWS_AS(search_presentations(c1.plane(), bad), Error);
  }

  TEST_CASE("sweep over every lambda of the Fano plane") {
    const TrianglePresentation c1 = builtin_c1();
    const LambdaSweepSummary s = sweep_all_lambdas_q2(c1.plane(), 2);
    CHECK(s.lambdas_examined == 5040);
    CHECK(s.counts.size() == 5040);
    CHECK(s.total() == 744);
    CHECK(s.histogram == std::map<std::size_t, std::size_t>{{0, 4416}, {1, 504}, {2, 120}});
    CHECK(std::find(s.presentations.begin(), s.presentations.end(), c1) != s.presentations.end());
    CHECK_THROWS_AS(sweep_all_lambdas_q2(pg2(3)), Error);
  }

  TEST_CASE("sweep does not depend on the job count") {
    const IncidencePlane fano = pg2(2);
    const LambdaSweepSummary a = sweep_all_lambdas_q2(fano, 1);
    const LambdaSweepSummary b = sweep_all_lambdas_q2(fano, 3);
    CHECK(a.counts == b.counts);
    CHECK(a.presentations == b.presentations);
  }
}
