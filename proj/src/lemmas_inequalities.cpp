#include <algorithm>
#include <bit>
#include <boost/rational.hpp>

#include "a2shift/error.hpp"
#include "a2shift/field.hpp"
#include "a2shift/lemmas.hpp"

namespace a2 {

namespace {

using Rational = boost::rational<std::int64_t>;
// Coefficients, constant term first.
using Poly = std::vector<Rational>;

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (r.size() > 1 && r.back() == Rational(0)) r.pop_back();
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (r.size() > 1 && r.back() == Rational(0)) r.pop_back();
  return r;
}

Poly poly_scale(const Poly& a, Rational c) {
  Poly r = a;
  for (auto& x : r) x *= c;
  return r;
}

// p(x + s) by Horner's scheme.
Poly poly_shift(const Poly& p, Rational s) {
  Poly r{Rational(0)};
  for (std::size_t i = p.size(); i-- > 0;) r = poly_add(poly_mul(r, Poly{s, Rational(1)}), Poly{p[i]});
  return r;
}

Json poly_json(const Poly& p) {
  Json j = Json::array();
  for (const auto& c : p) {
    if (c.denominator() == 1)
      j.push_back(c.numerator());
    else
      j.push_back(std::to_string(c.numerator()) + "/" + std::to_string(c.denominator()));
  }
  return j;
}

std::int64_t ceil_half(std::int64_t v) { return (v + 1) / 2; }

// Left side of the chain at k = (q^2+q)/2 with the integer ceiling.
std::int64_t chain_lhs(std::int64_t q) { return (3 * q - 3) + ((q * q + q) / 2 - 3) * ceil_half(q - 1); }

IncidencePlane plane_of_order(int q) { return q == 3 ? classic_plane_order3() : pg2(q); }

struct TripleResult {
  std::uint64_t configurations = 0;
  int min_union = 0;
  Json failure;
};

// |l1' ∪ l2' ∪ l3'| >= 3q - 3 for every triple of distinct lines and every
// choice of punctures.
TripleResult triple_unions(const IncidencePlane& plane) {
  const int q = plane.order();
  const int n = plane.num_lines();
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<PointId>> pts;
  for (LineId l = 0; l < n; ++l) {
    std::uint64_t m = 0;
    for (PointId p : plane.line_points(l)) m |= std::uint64_t{1} << p;
    masks.push_back(m);
    pts.push_back(plane.line_points(l));
  }
  TripleResult r;
  r.min_union = plane.num_points();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (PointId pa : pts[a])
          for (PointId pb : pts[b])
            for (PointId pc : pts[c]) {
              const std::uint64_t u = (masks[a] & ~(std::uint64_t{1} << pa)) |
                                      (masks[b] & ~(std::uint64_t{1} << pb)) |
                                      (masks[c] & ~(std::uint64_t{1} << pc));
              const int size = std::popcount(u);
              ++r.configurations;
              if (size < r.min_union) r.min_union = size;
              if (size < 3 * q - 3 && r.failure.is_null())
                r.failure = {{"q", q},
                             {"lines", {plane.line_names()[a], plane.line_names()[b], plane.line_names()[c]}},
                             {"punctures", {plane.point_names()[pa], plane.point_names()[pb], plane.point_names()[pc]}},
                             {"union", size}};
            }
  return r;
}

}  // namespace

VerificationReport inequality_checks(int q_max, const std::vector<int>& plane_orders) {
  if (q_max < 5) throw Error(ErrorCode::InvalidArgument, "q_max must be at least 5");
  if (q_max > 100000) throw Error(ErrorCode::InvalidArgument, "q_max must be at most 100000");
  VerificationReport r;
  r.check = "inequality_chain";

  // The chain bound must exceed the number of points for q = 4 and q >= 5.
  const std::int64_t lhs4 = chain_lhs(4), rhs4 = 4 * 4 + 4 + 1;
  r.stats["q4_chain_bound"] = lhs4;
  r.stats["q4_points"] = rhs4;
  if (lhs4 <= rhs4) r.fail({{"q", 4}, {"chain_bound", lhs4}, {"points", rhs4}});
  ++r.examined;
  for (std::int64_t q = 5; q <= q_max; ++q) {
    ++r.examined;
    const std::int64_t lhs = chain_lhs(q), rhs = q * q + q + 1;
    if (lhs <= rhs) r.fail({{"q", q}, {"chain_bound", lhs}, {"points", rhs}});
  }

  // 4 * [3q-3 + ((q^2+q)/2 - 3)(q-1)/2 - (q^2+q+1)] as a polynomial in q.
  const Rational half(1, 2);
  const Poly k_minus_3{Rational(-3), half, half};
  const Poly step{-half, half};
  Poly excess = poly_add(Poly{Rational(-3), Rational(3)}, poly_mul(k_minus_3, step));
  excess = poly_add(excess, Poly{Rational(-1), Rational(-1), Rational(-1)});
  const Poly scaled = poly_scale(excess, Rational(4));
  const Poly expected{Rational(-10), Rational(1), Rational(-4), Rational(1)};
  const Poly shifted = poly_shift(scaled, Rational(5));
  const Poly expected_shifted{Rational(20), Rational(36), Rational(11), Rational(1)};
  r.stats["scaled_excess"] = poly_json(scaled);
  r.stats["scaled_excess_at_q_plus_5"] = poly_json(shifted);
  if (scaled != expected) r.fail({{"identity", "4 * excess"}, {"coefficients", poly_json(scaled)}});
  if (shifted != expected_shifted) r.fail({{"identity", "shift by 5"}, {"coefficients", poly_json(shifted)}});
  // Nonnegative coefficients in r give a value of at least 20 for r >= 0.
  bool nonneg = std::all_of(shifted.begin(), shifted.end(), [](Rational c) { return c >= Rational(0); });
  if (!nonneg || shifted.front() != Rational(20)) r.fail({{"identity", "lower bound 20"}, {"coefficients", poly_json(shifted)}});
  r.stats["value_at_q5"] = boost::rational_cast<std::int64_t>(shifted.front());
  for (std::int64_t q = 5; q <= q_max; ++q) {
    Rational v(0), pw(1);
    for (const auto& c : scaled) {
      v += c * pw;
      pw *= q;
    }
    if (v < Rational(20)) r.fail({{"q", q}, {"scaled_excess", boost::rational_cast<std::int64_t>(v)}});
  }

  // Three punctured lines cover at least 3q - 3 points.
  Json triples = Json::object();
  for (int q : plane_orders) {
    const TripleResult t = triple_unions(plane_of_order(q));
    r.examined += t.configurations;
    triples[std::to_string(q)] = {{"configurations", t.configurations}, {"min_union", t.min_union},
                                  {"bound", 3 * q - 3}};
    if (!t.failure.is_null()) r.fail(t.failure);
  }
  r.stats["three_line_unions"] = triples;
  r.stats["q_max"] = q_max;
  return r;
}

}  // namespace a2
