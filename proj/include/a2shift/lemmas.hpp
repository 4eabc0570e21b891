#pragma once

#include <cstdint>
#include <vector>

#include "a2shift/bool_matrix.hpp"
#include "a2shift/plane.hpp"
#include "a2shift/presentation.hpp"
#include "a2shift/report.hpp"
#include "a2shift/subshift.hpp"

namespace a2 {

// Left-edge labels g of the wall successors (h, k, g) of `initial`.
std::vector<PointId> compute_D(const TrianglePresentation& pres, Tile initial);

// Right-edge labels k of the wall successors of `initial` with left edge d.
// Throws Error{DNotReachable} if d is not in compute_D.
std::vector<PointId> compute_Sd(const TrianglePresentation& pres, Tile initial, PointId d);

// |D| = q and |S_d| = q for every initial tile and every d in D.
VerificationReport check_counting(const TrianglePresentation& pres);
// |S_d1 ∩ S_d2| <= 1 for distinct d1, d2 in D.
VerificationReport check_technical(const TrianglePresentation& pres);
// |union of S_d| >= (q^2+q)/2.
VerificationReport check_S_bound(const TrianglePresentation& pres);

enum class Side { Left, Right };

struct ReachabilityProfile {
  Tile tile;
  Side side = Side::Left;
  // Tiles reachable by a wall sequence of length >= 1 (from the tile on the
  // left side, to the tile on the right side).
  Bitset reachable;
  // per_base[b] = number of reachable tiles with base label b.
  std::vector<std::size_t> per_base;
  // per_distance[n-1][b]: tiles with base b at the end of a walk of exactly
  // n steps, n = 1..cap. Diagnostic only.
  std::vector<std::vector<std::size_t>> per_distance;

  bool constant_in_base() const;
};

ReachabilityProfile reach_profile(const TrianglePresentation& pres, const BoolMatrix& wall, Tile tile, Side side,
                                  unsigned cap = 8);

// For every initial tile the left profile is constant in b, and for every
// final tile the right profile is.
VerificationReport check_lemma_red(const TrianglePresentation& pres);

struct MeetResult {
  Tile meet;
  // A base b with L(b) + R(b) > q + 1, or -1 if none exists.
  PointId threshold_base = -1;
};

// A tile reachable from `initial` and co-reachable to `final_tile` (zero steps
// allowed on either side). Throws Error{NoMeet}.
MeetResult check_threshold_meet(const TrianglePresentation& pres, Tile initial, Tile final_tile);

// Runs the meet construction for every ordered pair and checks that the two
// halves concatenate into a valid strip.
VerificationReport check_all_meets(const TrianglePresentation& pres);

enum class SweepMode { Exhaustive, Sample };

struct PuncturedOptions {
  SweepMode mode = SweepMode::Exhaustive;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
};

// Every family of (q^2+q)/2 distinct lines l_j with a puncture p_j in l_j
// admits a line m with |m ∩ U{l_j - p_j : l_j != m}| > (q+1)/2. Exhaustive
// mode is limited to q <= 3 (Error{InfeasibleExhaustive} otherwise).
VerificationReport punctured_lemma_verify(const IncidencePlane& plane, const PuncturedOptions& options);

// Family count for the exhaustive sweep: C(n, k) (q+1)^k.
std::uint64_t punctured_family_count(int q);

// Exact-arithmetic checks of the inequality chain used for q >= 4, including
// the polynomial identity and the three-line union bound on actual planes.
VerificationReport inequality_checks(int q_max, const std::vector<int>& plane_orders = {2, 3, 4, 5});

struct BatteryOptions {
  PuncturedOptions punctured;
  int q_max = 100;
};

// Counting, technical, bound, red, meet, punctured and inequality checks.
ReportBundle run_lemma_battery(const TrianglePresentation& pres, const BatteryOptions& options);

}  // namespace a2
