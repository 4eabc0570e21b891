#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "a2shift/error.hpp"
#include "a2shift/lemmas.hpp"
#include "a2shift/parallel.hpp"

namespace a2 {

namespace {

using Mask = std::uint64_t;

constexpr std::uint64_t kSampleBlock = 1u << 14;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Line masks and the points of each line, as used by the sweeps.
struct PlaneMasks {
  int q = 0;
  int k = 0;
  std::vector<Mask> lines;
  std::vector<std::vector<PointId>> points;

  explicit PlaneMasks(const IncidencePlane& plane) : q(plane.order()), k((q * q + q) / 2) {
    if (plane.num_points() > 64)
      throw Error(ErrorCode::OrderTooLarge, "punctured sweep supports at most 64 points");
    for (LineId l = 0; l < plane.num_lines(); ++l) {
      Mask m = 0;
      for (PointId p : plane.line_points(l)) m |= Mask{1} << p;
      lines.push_back(m);
      points.push_back(plane.line_points(l));
    }
  }
};

struct FamilyOutcome {
  int best = 0;
  int witness = -1;
};

// Largest coverage |m ∩ U{l_j' : l_j != m}| over all lines m. `chosen` are
// the family's line ids, `punctured` the matching l_j' masks.
FamilyOutcome evaluate(const PlaneMasks& pm, const int* chosen, const Mask* punctured, int k) {
  Mask prefix[64], suffix[65];
  prefix[0] = 0;
  for (int j = 0; j < k; ++j) prefix[j + 1] = prefix[j] | punctured[j];
  suffix[k] = 0;
  for (int j = k - 1; j >= 0; --j) suffix[j] = suffix[j + 1] | punctured[j];

  FamilyOutcome out;
  const Mask all = prefix[k];
  for (int m = 0; m < static_cast<int>(pm.lines.size()); ++m) {
    Mask u = all;
    for (int j = 0; j < k; ++j)
      if (chosen[j] == m) {
        u = prefix[j] | suffix[j + 1];
        break;
      }
    const int cov = std::popcount(pm.lines[m] & u);
    if (cov > out.best) {
      out.best = cov;
      out.witness = m;
    }
  }
  return out;
}

struct Tally {
  std::uint64_t families = 0;
  std::map<int, std::uint64_t> histogram;
  std::vector<Json> failures;
  std::uint64_t failure_total = 0;

  void add(const PlaneMasks& pm, const IncidencePlane& plane, const int* chosen, const int* holes,
           const FamilyOutcome& o) {
    ++families;
    ++histogram[o.best];
    if (2 * o.best > pm.q + 1) return;
    ++failure_total;
    if (failures.size() >= VerificationReport::kMaxCounterexamples) return;
    Json lines = Json::array(), punct = Json::array();
    for (int j = 0; j < pm.k; ++j) {
      lines.push_back(plane.line_names()[chosen[j]]);
      punct.push_back(plane.point_names()[holes[j]]);
    }
    failures.push_back({{"lines", lines}, {"punctures", punct}, {"best_coverage", o.best}});
  }

  void merge(Tally&& o) {
    families += o.families;
    for (auto [c, n] : o.histogram) histogram[c] += n;
    failure_total += o.failure_total;
    for (auto& f : o.failures)
      if (failures.size() < VerificationReport::kMaxCounterexamples) failures.push_back(std::move(f));
  }
};

// All k-subsets of [0, n) in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

void sweep_combination(const PlaneMasks& pm, const IncidencePlane& plane, const std::vector<int>& chosen,
                       Tally& tally) {
  const int k = pm.k;
  std::vector<int> digit(static_cast<std::size_t>(k), 0), holes(static_cast<std::size_t>(k));
  std::vector<Mask> punctured(static_cast<std::size_t>(k));
  const int radix = pm.q + 1;
  while (true) {
    for (int j = 0; j < k; ++j) {
      holes[j] = pm.points[chosen[j]][digit[j]];
      punctured[j] = pm.lines[chosen[j]] & ~(Mask{1} << holes[j]);
    }
    tally.add(pm, plane, chosen.data(), holes.data(), evaluate(pm, chosen.data(), punctured.data(), k));
    int j = k - 1;
    while (j >= 0 && ++digit[j] == radix) digit[j--] = 0;
    if (j < 0) break;
  }
}

// Uniform draw from [0, bound) by rejection on the raw 64-bit output.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

void sample_block(const PlaneMasks& pm, const IncidencePlane& plane, std::uint64_t seed, std::uint64_t block,
                  std::uint64_t count, Tally& tally) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  const int n = static_cast<int>(pm.lines.size());
  const int k = pm.k;
  std::vector<int> order(static_cast<std::size_t>(n)), chosen(static_cast<std::size_t>(k)),
      holes(static_cast<std::size_t>(k));
  std::vector<Mask> punctured(static_cast<std::size_t>(k));
  for (std::uint64_t s = 0; s < count; ++s) {
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int j = 0; j < k; ++j) {
      const auto pick = j + static_cast<int>(draw(rng, static_cast<std::uint64_t>(n - j)));
      std::swap(order[j], order[pick]);
      chosen[j] = order[j];
    }
    for (int j = 0; j < k; ++j) {
      holes[j] = pm.points[chosen[j]][draw(rng, static_cast<std::uint64_t>(pm.q + 1))];
      punctured[j] = pm.lines[chosen[j]] & ~(Mask{1} << holes[j]);
    }
    tally.add(pm, plane, chosen.data(), holes.data(), evaluate(pm, chosen.data(), punctured.data(), k));
  }
}

}  // namespace

std::uint64_t punctured_family_count(int q) {
  const auto n = static_cast<std::uint64_t>(q * q + q + 1);
  const auto k = static_cast<unsigned>((q * q + q) / 2);
  return binomial(n, k) * ipow(static_cast<std::uint64_t>(q + 1), k);
}

VerificationReport punctured_lemma_verify(const IncidencePlane& plane, const PuncturedOptions& options) {
  const int q = plane.order();
  if (options.mode == SweepMode::Exhaustive && q > 3)
    throw Error(ErrorCode::InfeasibleExhaustive,
                "exhaustive sweep needs " + std::to_string(punctured_family_count(q)) + " families at q = " +
                    std::to_string(q) + "; use sample mode");
  const PlaneMasks pm(plane);
  const unsigned jobs = resolve_jobs(options.jobs);

  VerificationReport r;
  r.check = "punctured_lines";
  Tally total;
  if (options.mode == SweepMode::Exhaustive) {
    const auto combos = combinations(plane.num_lines(), pm.k);
    std::vector<Tally> slots(combos.size());
    parallel_for(combos.size(), jobs, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) sweep_combination(pm, plane, combos[i], slots[i]);
    });
    for (auto& t : slots) total.merge(std::move(t));
    r.stats["mode"] = "exhaustive";
  } else {
    const std::uint64_t blocks = (options.samples + kSampleBlock - 1) / kSampleBlock;
    std::vector<Tally> slots(blocks);
    parallel_for(blocks, jobs, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        const std::uint64_t count = std::min<std::uint64_t>(kSampleBlock, options.samples - i * kSampleBlock);
        sample_block(pm, plane, options.seed, i, count, slots[i]);
      }
    });
    for (auto& t : slots) total.merge(std::move(t));
    r.stats["mode"] = "sample";
    r.seed = options.seed;
  }

  r.examined = total.families;
  r.stats["q"] = q;
  r.stats["family_size"] = pm.k;
  r.stats["families"] = total.families;
  r.stats["counterexamples"] = total.failure_total;
  r.stats["min_best_coverage"] = total.histogram.empty() ? 0 : total.histogram.begin()->first;
  r.stats["max_best_coverage"] = total.histogram.empty() ? 0 : total.histogram.rbegin()->first;
  Json hist = Json::object();
  for (auto [c, n] : total.histogram) hist[std::to_string(c)] = n;
  r.stats["best_coverage_histogram"] = hist;
  if (total.failure_total > 0) {
    r.status = Status::Fail;
    r.counterexamples = std::move(total.failures);
    r.stats["counterexample_total"] = total.failure_total;
  }
  return r;
}

}  // namespace a2
