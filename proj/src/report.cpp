#include "a2shift/report.hpp"

#include <sstream>

#include "a2shift/error.hpp"

namespace a2 {

std::string_view to_string(Status s) { return s == Status::Pass ? "pass" : "fail"; }

void VerificationReport::fail(Json payload) {
  status = Status::Fail;
  const std::uint64_t total =
      stats.contains("counterexample_total") ? stats["counterexample_total"].get<std::uint64_t>() : 0;
  stats["counterexample_total"] = total + 1;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(payload));
}

bool ReportBundle::passed() const noexcept {
  for (const auto& p : parts)
    if (!p.passed()) return false;
  return true;
}

Json to_json(const VerificationReport& r) {
  Json j = Json::object();
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["examined"] = r.examined;
  j["counterexamples"] = Json::array();
  for (const auto& c : r.counterexamples) j["counterexamples"].push_back(c);
  j["stats"] = r.stats;
  if (r.seed) j["seed"] = *r.seed;
  if (r.duration_ms) j["duration_ms"] = *r.duration_ms;
  return j;
}

VerificationReport report_from_json(const Json& j) {
  try {
    VerificationReport r;
    r.check = j.at("check").get<std::string>();
    const auto status = j.at("status").get<std::string>();
    if (status != "pass" && status != "fail")
      throw Error(ErrorCode::SyntaxError, "report status must be pass or fail, got '" + status + "'");
    r.status = status == "pass" ? Status::Pass : Status::Fail;
    r.examined = j.at("examined").get<std::uint64_t>();
    for (const auto& c : j.at("counterexamples")) r.counterexamples.push_back(c);
    r.stats = j.at("stats");
    if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("duration_ms")) r.duration_ms = j["duration_ms"].get<std::int64_t>();
    return r;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("malformed report: ") + e.what());
  }
}

namespace {

void emit_text(std::ostringstream& os, const VerificationReport& r) {
  os << "check: " << r.check << '\n';
  os << "status: " << to_string(r.status) << '\n';
  os << "examined: " << r.examined << '\n';
  if (r.seed) os << "seed: " << *r.seed << '\n';
  for (const auto& [key, value] : r.stats.items()) os << key << ": " << value.dump() << '\n';
  if (!r.counterexamples.empty()) {
    os << "counterexamples:\n";
    for (const auto& c : r.counterexamples) os << "  " << c.dump() << '\n';
  }
  if (r.duration_ms) os << "duration_ms: " << *r.duration_ms << '\n';
}

}  // namespace

std::string report_emit(const VerificationReport& r, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(r).dump(2) + "\n";
  std::ostringstream os;
  emit_text(os, r);
  return os.str();
}

std::string report_emit(const ReportBundle& b, OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json j = Json::object();
    j["title"] = b.title;
    j["status"] = b.passed() ? "pass" : "fail";
    j["reports"] = Json::array();
    for (const auto& p : b.parts) j["reports"].push_back(to_json(p));
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "== " << b.title << " ==\n";
  for (const auto& p : b.parts) {
    emit_text(os, p);
    os << '\n';
  }
  os << "overall: " << (b.passed() ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace a2
