#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "a2shift/error.hpp"
#include "a2shift/formats.hpp"
#include "a2shift/lemmas.hpp"
#include "a2shift/parallel.hpp"
#include "a2shift/plane.hpp"
#include "a2shift/presentation.hpp"
#include "a2shift/subshift.hpp"

namespace a2::cli {

namespace {

constexpr const char* kBuiltinHelp =
    "file path, or builtin:c1 (the order-2 example presentation)";
constexpr const char* kPlaneSourceHelp =
    "file path, builtin:pg2-<q>, builtin:order3 (difference-set table) or builtin:c1 (plane of the example "
    "presentation)";

struct Common {
  std::string format = "text";
  std::string out;
  unsigned jobs = 0;
  bool timing = false;

  OutputFormat output_format() const { return format == "json" ? OutputFormat::Json : OutputFormat::Text; }
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  std::ostream& out_;
  std::ostream& err_;
  Common common_;
  std::function<int()> action_;

  void add_common(CLI::App* sub);
  void emit(const std::string& text) const;
  int emit_report(VerificationReport r) const;
  int emit_bundle(const ReportBundle& b) const;

  template <class F>
  VerificationReport timed(F&& fn) const {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r = fn();
    if (common_.timing)
      r.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                          .count();
    return r;
  }

  void setup_plane(CLI::App& app);
  void setup_presentation(CLI::App& app);
  void setup_subshift(CLI::App& app);
  void setup_lemmas(CLI::App& app);
};

// ---- input resolution -----------------------------------------------------

TrianglePresentation load_presentation(const std::string& src) {
  if (src == "builtin:c1") return builtin_c1();
  if (src.rfind("builtin:", 0) == 0)
    throw Error(ErrorCode::InvalidArgument, "unknown built-in '" + src + "'; available: builtin:c1");
  return std::get<TrianglePresentation>(read_document(src, DocKind::Presentation).payload);
}

int parse_q(const std::string& text) {
  int q = 0;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), q);
  if (ec != std::errc() || p != text.data() + text.size())
    throw Error(ErrorCode::InvalidArgument, "'" + text + "' is not an integer order");
  return q;
}

IncidencePlane load_plane(const std::string& src) {
  if (src == "builtin:c1") return builtin_c1().plane();
  if (src == "builtin:order3") return classic_plane_order3();
  if (src.rfind("builtin:pg2-", 0) == 0) return pg2(parse_q(src.substr(12)));
  if (src.rfind("builtin:", 0) == 0)
    throw Error(ErrorCode::InvalidArgument,
                "unknown built-in '" + src + "'; available: builtin:c1, builtin:order3, builtin:pg2-<q>");
  return std::get<IncidencePlane>(read_document(src, DocKind::Plane).payload);
}

Json tile_json(const TrianglePresentation& pres, Tile t) {
  return Json::array({pres.name(t.x), pres.name(t.y), pres.name(t.z)});
}

Json strip_json(const TrianglePresentation& pres, const StripWitness& w) {
  Json j = Json::object();
  j["steps"] = w.steps();
  j["tiles"] = Json::array();
  for (const Tile& t : w.tiles) j["tiles"].push_back(tile_json(pres, t));
  j["connectors"] = Json::array();
  for (const Tile& t : w.connectors) j["connectors"].push_back(tile_json(pres, t));
  j["valid"] = strip_is_valid(pres, w);
  return j;
}

std::string strip_text(const TrianglePresentation& pres, const StripWitness& w) {
  std::ostringstream os;
  os << "steps: " << w.steps() << '\n';
  for (std::size_t i = 0; i < w.tiles.size(); ++i) {
    if (i > 0) os << "u" << i << ": " << pres.tile_name(w.connectors[i - 1]) << '\n';
    os << "t" << i << ": " << pres.tile_name(w.tiles[i]) << '\n';
  }
  os << "valid: " << (strip_is_valid(pres, w) ? "true" : "false") << '\n';
  return os.str();
}

// ---- output ----------------------------------------------------------------

void Runner::emit(const std::string& text) const {
  if (common_.out.empty())
    out_ << text;
  else
    write_text_file(common_.out, text);
}

int Runner::emit_report(VerificationReport r) const {
  emit(report_emit(r, common_.output_format()));
  return r.passed() ? kPass : kCounterexample;
}

int Runner::emit_bundle(const ReportBundle& b) const {
  emit(report_emit(b, common_.output_format()));
  return b.passed() ? kPass : kCounterexample;
}

void Runner::add_common(CLI::App* sub) {
  sub->add_option("--format", common_.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  sub->add_option("--out", common_.out, "Write output to this file instead of stdout");
  sub->add_option("--jobs", common_.jobs, "Worker threads (default: A2SHIFT_JOBS, else all cores)");
  sub->add_flag("--timing", common_.timing, "Add wall-clock duration_ms to reports");
}

// ---- plane -------------------------------------------------------------------

void Runner::setup_plane(CLI::App& app) {
  auto* plane = app.add_subcommand("plane", "Finite projective planes: incidence of points and lines");
  plane->require_subcommand(1);

  {
    auto* gen = plane->add_subcommand("gen", "Generate PG(2,q) over GF(q), or the classical order-3 table");
    auto q = std::make_shared<int>(0);
    auto source = std::make_shared<std::string>("pg2");
    gen->add_option("--q", *q, "Order q, a prime power up to 16")->required();
    gen->add_option("--source", *source, "pg2 (coordinates) or order3-table (lines {s+1,s+2,s+4,s+10} mod 13)")
        ->check(CLI::IsMember({"pg2", "order3-table"}));
    add_common(gen);
    gen->callback([this, q, source] {
      action_ = [this, q, source] {
        IncidencePlane p;
        if (*source == "order3-table") {
          if (*q != 3) throw Error(ErrorCode::InvalidArgument, "the order-3 table needs --q 3");
          p = classic_plane_order3();
        } else {
          p = pg2(*q);
        }
        if (common_.output_format() == OutputFormat::Json) {
          Json j = {{"q", p.order()}, {"points", p.point_names()}, {"lines", Json::object()}};
          for (LineId l = 0; l < p.num_lines(); ++l) {
            Json pts = Json::array();
            for (PointId x : p.line_points(l)) pts.push_back(p.point_names()[x]);
            j["lines"][p.line_names()[l]] = pts;
          }
          emit(j.dump(2) + "\n");
        } else {
          emit(serialize_plane(p));
        }
        return kPass;
      };
    });
  }
  {
    auto* verify = plane->add_subcommand(
        "verify", "Check the projective plane axioms: q+1 points per line, q+1 lines per point, unique joins/meets");
    auto src = std::make_shared<std::string>();
    verify->add_option("plane", *src, kPlaneSourceHelp)->required();
    add_common(verify);
    verify->callback([this, src] {
      action_ = [this, src] {
        const IncidencePlane p = load_plane(*src);
        return emit_report(timed([&] { return verify_plane(p); }));
      };
    });
  }
  {
    auto* iso = plane->add_subcommand("iso", "Find an explicit isomorphism between two planes of the same order");
    auto a = std::make_shared<std::string>(), b = std::make_shared<std::string>();
    iso->add_option("first", *a, kPlaneSourceHelp)->required();
    iso->add_option("second", *b, kPlaneSourceHelp)->required();
    add_common(iso);
    iso->callback([this, a, b] {
      action_ = [this, a, b] {
        const IncidencePlane pa = load_plane(*a), pb = load_plane(*b);
        return emit_report(timed([&] {
          VerificationReport r;
          r.check = "plane_isomorphism";
          r.examined = 1;
          const auto found = planes_isomorphic(pa, pb);
          r.stats["isomorphic"] = found.has_value();
          if (!found) {
            r.fail({{"reason", "no isomorphism exists"}});
            return r;
          }
          const bool ok = is_isomorphism(pa, pb, *found);
          r.stats["verified"] = ok;
          if (!ok) r.fail({{"reason", "returned map does not preserve incidence"}});
          Json pm = Json::object(), lm = Json::object();
          for (std::size_t i = 0; i < found->point_map.size(); ++i)
            pm[pa.point_names()[i]] = pb.point_names()[found->point_map[i]];
          for (std::size_t i = 0; i < found->line_map.size(); ++i)
            lm[pa.line_names()[i]] = pb.line_names()[found->line_map[i]];
          r.stats["point_map"] = pm;
          r.stats["line_map"] = lm;
          return r;
        }));
      };
    });
  }
}

// ---- presentation ------------------------------------------------------------

void Runner::setup_presentation(CLI::App& app) {
  auto* pres = app.add_subcommand("presentation", "Triangle presentations: rotation-closed triples over a plane");
  pres->require_subcommand(1);

  {
    auto* v = pres->add_subcommand(
        "validate", "Check the triangle presentation properties: rotation closure, one z per (x,y), lambda a plane");
    auto src = std::make_shared<std::string>();
    v->add_option("presentation", *src, kBuiltinHelp)->required();
    add_common(v);
    v->callback([this, src] {
      action_ = [this, src] {
        const std::string text = *src == "builtin:c1" ? std::string(builtin_c1_text())
                                 : src->rfind("builtin:", 0) == 0
                                     ? throw Error(ErrorCode::InvalidArgument, "unknown built-in '" + *src + "'")
                                     : read_text_file(*src);
        const RawPresentation raw = parse_presentation(text);
        return emit_report(timed([&] { return validate(raw).report; }));
      };
    });
  }
  {
    auto* info = pres->add_subcommand("info", "Summarize a presentation: tiles, relators and the lines lambda(x)");
    auto src = std::make_shared<std::string>();
    info->add_option("presentation", *src, kBuiltinHelp)->required();
    add_common(info);
    info->callback([this, src] {
      action_ = [this, src] {
        const TrianglePresentation p = load_presentation(*src);
        std::vector<Tile> relators;
        for (const Tile& t : p.tiles())
          if (canonical_rotation(t) == t) relators.push_back(t);
        if (common_.output_format() == OutputFormat::Json) {
          Json j = {{"q", p.order()}, {"points", p.point_names()}, {"tiles", p.size()}};
          j["relators"] = Json::array();
          for (const Tile& t : relators) j["relators"].push_back(tile_json(p, t));
          j["lambda"] = Json::object();
          for (PointId x = 0; x < p.num_points(); ++x) {
            Json line = Json::array();
            for (std::size_t y : p.lambda_points(x).indices()) line.push_back(p.name(static_cast<PointId>(y)));
            j["lambda"][p.name(x)] = line;
          }
          j["tile_index"] = Json::array();
          for (const Tile& t : p.tiles()) j["tile_index"].push_back(tile_json(p, t));
          emit(j.dump(2) + "\n");
        } else {
          std::ostringstream os;
          os << "q: " << p.order() << '\n';
          os << "points: " << p.num_points() << '\n';
          os << "tiles: " << p.size() << '\n';
          os << "relators: " << relators.size() << '\n';
          for (const Tile& t : relators) os << "  " << p.tile_name(t) << '\n';
          os << "lambda:\n";
          for (PointId x = 0; x < p.num_points(); ++x) {
            os << "  " << p.name(x) << " ->";
            for (std::size_t y : p.lambda_points(x).indices()) os << ' ' << p.name(static_cast<PointId>(y));
            os << '\n';
          }
          os << "tile index:\n";
          for (std::size_t i = 0; i < p.size(); ++i) os << "  " << i << ' ' << p.tile_name(p.tile(i)) << '\n';
          emit(os.str());
        }
        return kPass;
      };
    });
  }
  {
    auto* s = pres->add_subcommand("search", "Enumerate every triangle presentation compatible with a given lambda");
    auto plane_src = std::make_shared<std::string>("builtin:c1");
    auto lambda = std::make_shared<std::string>();
    auto limit = std::make_shared<std::size_t>(0);
    s->add_option("--plane", *plane_src, kPlaneSourceHelp);
    s->add_option("--lambda", *lambda,
                  "Line name for each point, in point order, separated by commas or spaces (default: point i to "
                  "line i)");
    s->add_option("--limit", *limit, "Stop after this many presentations (0 = all)");
    add_common(s);
    s->callback([this, plane_src, lambda, limit] {
      action_ = [this, plane_src, lambda, limit] {
        const IncidencePlane plane = load_plane(*plane_src);
        PointLineCorrespondence corr;
        if (lambda->empty()) {
          for (PointId x = 0; x < plane.num_points(); ++x) corr.lambda.push_back(x);
        } else {
          std::string cleaned = *lambda;
          std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
          std::istringstream is(cleaned);
          std::string tok;
          while (is >> tok) {
            const auto& names = plane.line_names();
            const auto it = std::find(names.begin(), names.end(), tok);
            if (it == names.end()) throw Error(ErrorCode::InvalidArgument, "unknown line '" + tok + "'");
            corr.lambda.push_back(static_cast<LineId>(it - names.begin()));
          }
          if (corr.lambda.size() != static_cast<std::size_t>(plane.num_points()))
            throw Error(ErrorCode::InvalidArgument, "lambda needs one line per point");
        }
        const auto found = search_presentations(plane, corr, *limit);
        if (common_.output_format() == OutputFormat::Json) {
          Json j = {{"count", found.size()}, {"presentations", Json::array()}};
          for (const auto& p : found) j["presentations"].push_back(serialize_presentation(p));
          emit(j.dump(2) + "\n");
        } else {
          std::ostringstream os;
          os << "presentations: " << found.size() << '\n';
          for (const auto& p : found) os << '\n' << serialize_presentation(p);
          emit(os.str());
        }
        return kPass;
      };
    });
  }
  {
    auto* sw = pres->add_subcommand(
        "sweep-lambdas",
        "Search all 5040 point-line bijections of an order-2 plane; re-validate each result and check that M1 "
        "and M2 commute and M1 is primitive");
    auto plane_src = std::make_shared<std::string>("builtin:c1");
    sw->add_option("--plane", *plane_src, kPlaneSourceHelp);
    add_common(sw);
    sw->callback([this, plane_src] {
      action_ = [this, plane_src] {
        const IncidencePlane plane = load_plane(*plane_src);
        return emit_report(timed([&] {
          const LambdaSweepSummary s = sweep_all_lambdas_q2(plane, resolve_jobs(common_.jobs));
          VerificationReport r;
          r.check = "lambda_sweep";
          r.examined = s.lambdas_examined;
          std::map<unsigned, std::size_t> exponents;
          std::uint32_t max_entry = 0;
          for (const auto& p : s.presentations) {
            const Validation v = validate(p.tiles(), p.order(), p.point_names());
            if (!v.presentation || !(*v.presentation == p)) {
              r.fail({{"reason", "does not re-validate"}, {"presentation", serialize_presentation(p)}});
              continue;
            }
            const BoolMatrix m1 = build_M1(p), m2 = build_M2(p);
            const IntMatrix p12 = mat_mul_int(m1, m2), p21 = mat_mul_int(m2, m1);
            max_entry = std::max(max_entry, p12.max_entry());
            if (!(p12 == p21)) r.fail({{"reason", "M1 M2 != M2 M1"}, {"presentation", serialize_presentation(p)}});
            const auto e = primitivity(m1);
            if (!e)
              r.fail({{"reason", "M1 not primitive"}, {"presentation", serialize_presentation(p)}});
            else
              ++exponents[*e];
          }
          Json hist = Json::object();
          for (auto [k, n] : s.histogram) hist[std::to_string(k)] = n;
          Json exp = Json::object();
          for (auto [k, n] : exponents) exp[std::to_string(k)] = n;
          r.stats["presentations"] = s.total();
          r.stats["presentations_per_lambda"] = hist;
          r.stats["M1_exponents"] = exp;
          r.stats["max_product_entry"] = max_entry;
          return r;
        }));
      };
    });
  }
}

// ---- subshift ----------------------------------------------------------------

struct SubshiftArgs {
  std::string presentation = "builtin:c1";
  std::string relation = "M1";
  std::string from, to;
  unsigned cap = kDefaultPrimitivityCap;
};

VerificationReport subshift_check(const TrianglePresentation& p, RelationKind kind, unsigned cap) {
  VerificationReport r;
  r.check = "subshift_" + std::string(to_string(kind));
  const BoolMatrix m = build_relation(p, kind);
  const BoolMatrix m1 = build_M1(p), m2 = build_M2(p);
  r.examined = p.size() * p.size();

  const auto rows = m.row_sums(), cols = m.column_sums();
  r.stats["tiles"] = p.size();
  r.stats["nonzeros"] = m.nonzeros();
  r.stats["row_sums"] = rows;
  r.stats["column_sums"] = cols;

  const VerificationReport oracle = check_relation_against_oracle(p, kind);
  r.stats["oracle_agreement"] = oracle.passed();
  for (const auto& c : oracle.counterexamples) r.fail(c);

  r.stats["strongly_connected"] = strongly_connected(m);
  const auto exponent = primitivity(m, cap);
  if (exponent)
    r.stats["primitivity_exponent"] = *exponent;
  else {
    r.stats["primitivity_exponent"] = nullptr;
    r.fail({{"reason", "no power up to the cap is entrywise positive"}, {"cap", cap}});
  }
  r.stats["positive_at_6"] = mat_power_bool(m, 6).all_positive();
  if (const auto d = diameter(m)) r.stats["diameter"] = *d;

  const IntMatrix p12 = mat_mul_int(m1, m2), p21 = mat_mul_int(m2, m1);
  r.stats["commutes"] = p12 == p21;
  if (!(p12 == p21)) r.fail({{"reason", "M1 M2 != M2 M1"}});
  r.stats["max_product_entry"] = p12.max_entry();

  const VerificationReport irr = is_irreducible_2d(m1, m2, cap);
  r.stats["irreducible"] = irr.passed();
  for (const auto& c : irr.counterexamples) r.fail(c);
  return r;
}

void Runner::setup_subshift(CLI::App& app) {
  auto* sub = app.add_subcommand("subshift", "Two-dimensional subshift of finite type on the tile alphabet");
  sub->require_subcommand(1);
  auto a = std::make_shared<SubshiftArgs>();
  auto add_pres = [a](CLI::App* c) { c->add_option("--presentation", a->presentation, kBuiltinHelp); };
  auto add_rel = [a](CLI::App* c) {
    c->add_option("--relation", a->relation, "M1 (diagonal), M2 (other diagonal) or wall")
        ->check(CLI::IsMember({"M1", "M2", "wall"}));
  };
  auto add_ends = [a](CLI::App* c) {
    c->add_option("--from", a->from, "Initial tile, e.g. \"x0 x2 x3\"")->required();
    c->add_option("--to", a->to, "Final tile")->required();
  };

  {
    auto* b = sub->add_subcommand("build", "Export the transition matrix M1, M2 or the wall relation");
    add_pres(b);
    add_rel(b);
    add_common(b);
    b->callback([this, a] {
      action_ = [this, a] {
        const TrianglePresentation p = load_presentation(a->presentation);
        const MatrixDocument doc = matrix_document(p, relation_from_string(a->relation));
        if (common_.output_format() == OutputFormat::Json) {
          Json j = {{"n", doc.matrix.size()}, {"kind", to_string(doc.kind)}, {"legend", doc.legend}};
          j["edges"] = Json::array();
          for (std::size_t i = 0; i < doc.matrix.size(); ++i)
            for (std::size_t k : doc.matrix.row(i).indices()) j["edges"].push_back({i, k});
          emit(j.dump(2) + "\n");
        } else {
          emit(serialize_matrix(doc));
        }
        return kPass;
      };
    });
  }
  {
    auto* c = sub->add_subcommand(
        "check",
        "Commuting transition matrices, irreducibility (M1^r M2^s > 0) and the primitivity exponent; six steps "
        "are enough");
    add_pres(c);
    add_rel(c);
    c->add_option("--cap", a->cap, "Largest power tried for primitivity and irreducibility");
    add_common(c);
    c->callback([this, a] {
      action_ = [this, a] {
        const TrianglePresentation p = load_presentation(a->presentation);
        const RelationKind kind = relation_from_string(a->relation);
        return emit_report(timed([&] { return subshift_check(p, kind, a->cap); }));
      };
    });
  }
  {
    auto* pth = sub->add_subcommand(
        "path", "Shortest wall strip joining an initial and a final triangle (main theorem witness)");
    add_pres(pth);
    add_ends(pth);
    add_common(pth);
    pth->callback([this, a] {
      action_ = [this, a] {
        const TrianglePresentation p = load_presentation(a->presentation);
        const StripWitness w = find_strip(p, parse_tile(p, a->from), parse_tile(p, a->to));
        emit(common_.output_format() == OutputFormat::Json ? strip_json(p, w).dump(2) + "\n" : strip_text(p, w));
        return strip_is_valid(p, w) ? kPass : kCounterexample;
      };
    });
  }
  {
    auto* rnd = sub->add_subcommand("render", "ASCII drawing of the shortest wall strip between two triangles");
    add_pres(rnd);
    add_ends(rnd);
    add_common(rnd);
    rnd->callback([this, a] {
      action_ = [this, a] {
        const TrianglePresentation p = load_presentation(a->presentation);
        const StripWitness w = find_strip(p, parse_tile(p, a->from), parse_tile(p, a->to));
        if (common_.output_format() == OutputFormat::Json) {
          Json j = strip_json(p, w);
          j["drawing"] = render_strip(p, w);
          emit(j.dump(2) + "\n");
        } else {
          emit(render_strip(p, w));
        }
        return kPass;
      };
    });
  }
}

// ---- lemmas ------------------------------------------------------------------

struct LemmaArgs {
  std::string presentation = "builtin:c1";
  std::string plane;
  int q = 0;
  std::string mode = "auto";
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  int q_max = 100;
  std::string tile, side = "left", from, to;
};

PuncturedOptions punctured_options(const LemmaArgs& a, int q, unsigned jobs) {
  PuncturedOptions o;
  o.mode = a.mode == "exhaustive" ? SweepMode::Exhaustive
           : a.mode == "sample"   ? SweepMode::Sample
           : q <= 3               ? SweepMode::Exhaustive
                                  : SweepMode::Sample;
  o.samples = a.samples;
  o.seed = a.seed;
  o.jobs = jobs;
  return o;
}

void Runner::setup_lemmas(CLI::App& app) {
  auto* lem = app.add_subcommand("lemmas", "Mechanical checks of the counting lemmas and the punctured-lines lemma");
  lem->require_subcommand(1);
  auto a = std::make_shared<LemmaArgs>();
  auto add_pres = [a](CLI::App* c) { c->add_option("--presentation", a->presentation, kBuiltinHelp); };
  auto add_sampling = [a](CLI::App* c) {
    c->add_option("--mode", a->mode, "exhaustive, sample, or auto (exhaustive up to q = 3)")
        ->check(CLI::IsMember({"auto", "exhaustive", "sample"}));
    c->add_option("--samples", a->samples, "Families drawn in sample mode");
    c->add_option("--seed", a->seed, "Seed for sample mode");
  };

  {
    auto* c = lem->add_subcommand(
        "punctured",
        "Lemma: punctured lines. For (q^2+q)/2 distinct lines each missing one point, some line m meets the union "
        "of the others in more than (q+1)/2 points");
    auto* qopt = c->add_option("--q", a->q, "Plane order (uses PG(2,q); q = 3 uses the difference-set table)");
    auto* popt = c->add_option("--plane", a->plane, kPlaneSourceHelp);
    qopt->excludes(popt);
    add_sampling(c);
    add_common(c);
    c->callback([this, a] {
      action_ = [this, a] {
        if (a->q == 0 && a->plane.empty()) throw Error(ErrorCode::InvalidArgument, "give --q or --plane");
        const IncidencePlane plane =
            !a->plane.empty() ? load_plane(a->plane) : a->q == 3 ? classic_plane_order3() : pg2(a->q);
        const PuncturedOptions o = punctured_options(*a, plane.order(), resolve_jobs(common_.jobs));
        const VerificationReport r = timed([&] { return punctured_lemma_verify(plane, o); });
        if (common_.output_format() == OutputFormat::Json) return emit_report(r);
        emit("families: " + r.stats["families"].dump() + ", counterexamples: " + r.stats["counterexamples"].dump() +
             "\n" + report_emit(r, OutputFormat::Text));
        return r.passed() ? kPass : kCounterexample;
      };
    });
  }
  {
    auto* c = lem->add_subcommand(
        "inequalities",
        "Inequality chain for q >= 4 in exact arithmetic: 21 vs 23 at q = 4, r^3+11r^2+36r+20 at q = r+5, and the "
        "three-line union bound 3q-3");
    c->add_option("--q-max", a->q_max, "Largest q checked numerically (at least 5)");
    add_common(c);
    c->callback([this, a] {
      action_ = [this, a] { return emit_report(timed([&] { return inequality_checks(a->q_max); })); };
    });
  }
  {
    auto* c = lem->add_subcommand(
        "counting",
        "D has q elements, each S_d has q elements, distinct S_d meet in at most one point, |S| >= (q^2+q)/2");
    add_pres(c);
    c->add_option("--tile", a->tile, "Print D and every S_d for this initial tile");
    add_common(c);
    c->callback([this, a] {
      action_ = [this, a] {
        const TrianglePresentation p = load_presentation(a->presentation);
        if (!a->tile.empty()) {
          const Tile t = parse_tile(p, a->tile);
          const auto D = compute_D(p, t);
          Json j = {{"initial", p.tile_name(t)}, {"D", Json::array()}, {"S", Json::object()}};
          std::ostringstream os;
          os << "initial: " << p.tile_name(t) << "\nD:";
          for (PointId d : D) {
            j["D"].push_back(p.name(d));
            os << ' ' << p.name(d);
          }
          os << '\n';
          for (PointId d : D) {
            Json s = Json::array();
            os << "S_" << p.name(d) << ':';
            for (PointId f : compute_Sd(p, t, d)) {
              s.push_back(p.name(f));
              os << ' ' << p.name(f);
            }
            os << '\n';
            j["S"][p.name(d)] = s;
          }
          emit(common_.output_format() == OutputFormat::Json ? j.dump(2) + "\n" : os.str());
          return kPass;
        }
        ReportBundle b;
        b.title = "counting lemmas";
        b.parts.push_back(timed([&] { return check_counting(p); }));
        b.parts.push_back(timed([&] { return check_technical(p); }));
        b.parts.push_back(timed([&] { return check_S_bound(p); }));
        return emit_bundle(b);
      };
    });
  }
  {
    auto* c = lem->add_subcommand(
        "red", "Reachability profiles: L(b) and R(b) are independent of the base label b");
    add_pres(c);
    c->add_option("--tile", a->tile, "Print the profile of this tile");
    c->add_option("--side", a->side, "left (reachable from the tile) or right (reaching the tile)")
        ->check(CLI::IsMember({"left", "right"}));
    add_common(c);
    c->callback([this, a] {
      action_ = [this, a] {
        const TrianglePresentation p = load_presentation(a->presentation);
        if (a->tile.empty()) return emit_report(timed([&] { return check_lemma_red(p); }));
        const Tile t = parse_tile(p, a->tile);
        const auto prof = reach_profile(p, build_wall(p), t, a->side == "left" ? Side::Left : Side::Right);
        Json j = {{"tile", p.tile_name(t)}, {"side", a->side}, {"reachable", prof.reachable.count()}};
        j["per_base"] = Json::object();
        for (std::size_t b = 0; b < prof.per_base.size(); ++b)
          j["per_base"][p.name(static_cast<PointId>(b))] = prof.per_base[b];
        j["per_distance"] = prof.per_distance;
        j["constant_in_base"] = prof.constant_in_base();
        if (common_.output_format() == OutputFormat::Json) {
          emit(j.dump(2) + "\n");
        } else {
          std::ostringstream os;
          for (const auto& [k, v] : j.items()) os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
          emit(os.str());
        }
        return kPass;
      };
    });
  }
  {
    auto* c = lem->add_subcommand(
        "meet",
        "Main theorem: any initial and final triangle lie on one wall strip, met through a tile reachable both "
        "ways");
    add_pres(c);
    c->add_option("--from", a->from, "Initial tile (with --to: one pair; without: all ordered pairs)");
    c->add_option("--to", a->to, "Final tile");
    add_common(c);
    c->callback([this, a] {
      action_ = [this, a] {
        const TrianglePresentation p = load_presentation(a->presentation);
        if (a->from.empty() != a->to.empty()) throw Error(ErrorCode::InvalidArgument, "give both --from and --to");
        if (a->from.empty()) return emit_report(timed([&] { return check_all_meets(p); }));
        const Tile I = parse_tile(p, a->from), F = parse_tile(p, a->to);
        const MeetResult m = check_threshold_meet(p, I, F);
        const StripWitness w = concatenate(find_strip(p, I, m.meet), find_strip(p, m.meet, F));
        Json j = {{"initial", p.tile_name(I)},
                  {"final", p.tile_name(F)},
                  {"meet", p.tile_name(m.meet)},
                  {"threshold_base", m.threshold_base < 0 ? Json(nullptr) : Json(p.name(m.threshold_base))},
                  {"strip", strip_json(p, w)}};
        if (common_.output_format() == OutputFormat::Json) {
          emit(j.dump(2) + "\n");
        } else {
          std::ostringstream os;
          os << "initial: " << p.tile_name(I) << "\nfinal: " << p.tile_name(F) << "\nmeet: " << p.tile_name(m.meet)
             << "\nthreshold_base: " << (m.threshold_base < 0 ? "none" : p.name(m.threshold_base)) << '\n'
             << strip_text(p, w);
          emit(os.str());
        }
        return strip_is_valid(p, w) && m.threshold_base >= 0 ? kPass : kCounterexample;
      };
    });
  }
  {
    auto* c = lem->add_subcommand("all", "Run every lemma check on one presentation and print a one-page summary");
    add_pres(c);
    add_sampling(c);
    c->add_option("--q-max", a->q_max, "Largest q for the inequality chain");
    add_common(c);
    c->callback([this, a] {
      action_ = [this, a] {
        const TrianglePresentation p = load_presentation(a->presentation);
        BatteryOptions o;
        o.punctured = punctured_options(*a, p.order(), resolve_jobs(common_.jobs));
        o.q_max = a->q_max;
        const auto start = std::chrono::steady_clock::now();
        const ReportBundle b = run_lemma_battery(p, o);
        if (common_.output_format() == OutputFormat::Json) return emit_bundle(b);
        std::ostringstream os;
        os << "== " << b.title << " ==\n";
        std::size_t width = 0;
        for (const auto& part : b.parts) width = std::max(width, part.check.size());
        for (const auto& part : b.parts)
          os << part.check << std::string(width + 2 - part.check.size(), ' ') << to_string(part.status)
             << "  (examined " << part.examined << ")\n";
        os << "overall: " << (b.passed() ? "pass" : "fail") << '\n';
        if (common_.timing)
          os << "duration_ms: "
             << std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count()
             << '\n';
        emit(os.str());
        return b.passed() ? kPass : kCounterexample;
      };
    });
  }
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Tools for triangle presentations, their subshifts and the counting lemmas behind them", "a2shift"};
  app.require_subcommand(1);
  setup_plane(app);
  setup_presentation(app);
  setup_subshift(app);
  setup_lemmas(app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kPass : kUsage;
  }
  if (!action_) {
    err_ << "error: no command given\n";
    return kUsage;
  }
  try {
    return action_();
  } catch (const Error& e) {
    err_ << "error: " << e.what() << '\n';
    // A missing strip or meet refutes the main theorem for that input.
    if (e.code() == ErrorCode::NoPath || e.code() == ErrorCode::NoMeet) return kCounterexample;
    return kUsage;
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace a2::cli
