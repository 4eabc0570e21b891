#include "a2shift/subshift.hpp"

#include <string>

#include "a2shift/error.hpp"

namespace a2 {

std::string_view to_string(RelationKind k) {
  switch (k) {
    case RelationKind::M1: return "M1";
    case RelationKind::M2: return "M2";
    case RelationKind::Wall: return "wall";
  }
  return "?";
}

RelationKind relation_from_string(std::string_view s) {
  if (s == "M1" || s == "m1") return RelationKind::M1;
  if (s == "M2" || s == "m2") return RelationKind::M2;
  if (s == "wall" || s == "R") return RelationKind::Wall;
  throw Error(ErrorCode::InvalidArgument, "unknown relation '" + std::string(s) + "' (expected M1, M2 or wall)");
}

namespace {

template <typename Rule>
BoolMatrix build_from_rule(const TrianglePresentation& pres, Rule rule) {
  const std::size_t n = pres.size();
  BoolMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rule(pres.tile(i), pres.tile(j))) m.set(i, j);
  return m;
}

}  // namespace

BoolMatrix build_M1(const TrianglePresentation& pres) {
  return build_from_rule(pres, [&](Tile a, Tile b) {
    return pres.in_lambda(a.z, b.x) && b.x != a.y && b.y != a.z;
  });
}

BoolMatrix build_M2(const TrianglePresentation& pres) {
  return build_from_rule(pres, [&](Tile a, Tile c) {
    return pres.in_lambda(c.y, a.z) && c.y != a.x && c.x != a.z;
  });
}

BoolMatrix build_wall(const TrianglePresentation& pres) {
  return build_from_rule(pres, [&](Tile t, Tile u) {
    const PointId e = t.x, f = t.y;
    const PointId h = u.x, g = u.z;
    return pres.in_lambda(f, g) && f != h && g != e;
  });
}

BoolMatrix build_relation(const TrianglePresentation& pres, RelationKind kind) {
  switch (kind) {
    case RelationKind::M1: return build_M1(pres);
    case RelationKind::M2: return build_M2(pres);
    case RelationKind::Wall: return build_wall(pres);
  }
  return {};
}

Tile down_tile_between(Tile t, Tile u, const TrianglePresentation& pres) {
  const PointId e = t.x, f = t.y;
  const PointId h = u.x, g = u.z;
  const bool adjacent = pres.contains(t) && pres.contains(u) && pres.in_lambda(f, g) && f != h && g != e;
  if (!adjacent)
    throw Error(ErrorCode::NotWallAdjacent,
                pres.tile_name(t) + " and " + pres.tile_name(u) + " are not adjacent along a wall");
  return {g, f, pres.z_of(g, f)};
}

VerificationReport is_irreducible_2d(const BoolMatrix& m1, const BoolMatrix& m2, unsigned cap) {
  if (m1.size() != m2.size())
    throw Error(ErrorCode::DimensionMismatch, "M1 and M2 must have the same dimension");
  if (cap == 0) throw Error(ErrorCode::InvalidArgument, "cap must be at least 1");
  const std::size_t n = m1.size();

  auto power_union = [cap](const BoolMatrix& m) {
    BoolMatrix acc = m, p = m;
    for (unsigned r = 2; r <= cap; ++r) {
      p = mat_mul_bool(p, m);
      acc |= p;
    }
    return acc;
  };
  // OR over r, s of M1^r M2^s factors as (OR_r M1^r)(OR_s M2^s).
  const BoolMatrix reach = mat_mul_bool(power_union(m1), power_union(m2));

  const IntMatrix p12 = mat_mul_int(m1, m2);
  const IntMatrix p21 = mat_mul_int(m2, m1);
  BoolMatrix both = m1;
  both |= m2;

  VerificationReport r;
  r.check = "irreducible_2d";
  r.examined = n * n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!reach.get(i, j)) r.fail({{"alpha", i}, {"beta", j}});
  r.stats["irreducible"] = r.passed();
  r.stats["commutes"] = p12 == p21;
  r.stats["union_strongly_connected"] = strongly_connected(both);
  r.stats["max_product_entry"] = p12.max_entry();
  r.stats["cap"] = cap;
  return r;
}

std::optional<unsigned> primitivity(const BoolMatrix& m, unsigned cap) {
  if (cap == 0) throw Error(ErrorCode::InvalidArgument, "cap must be at least 1");
  if (!strongly_connected(m)) return std::nullopt;

  // powers[k] = m^(2^k), squared until positive or past the cap.
  std::vector<BoolMatrix> powers{m};
  unsigned long long span = 1;
  while (!powers.back().all_positive() && span < cap) {
    powers.push_back(mat_mul_bool(powers.back(), powers.back()));
    span *= 2;
  }
  if (!powers.back().all_positive()) return std::nullopt;

  // Positivity is monotone in the exponent for strongly connected m, so
  // binary lifting finds the largest non-positive power r.
  unsigned r = 0;
  BoolMatrix current;
  for (std::size_t k = powers.size() - 1; k-- > 0;) {
    BoolMatrix candidate = r == 0 ? powers[k] : mat_mul_bool(current, powers[k]);
    if (!candidate.all_positive()) {
      current = std::move(candidate);
      r += 1u << k;
    }
  }
  const unsigned exponent = r + 1;
  if (exponent > cap) return std::nullopt;
  return exponent;
}

}  // namespace a2
