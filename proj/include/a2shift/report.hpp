#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace a2 {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail };

// Structured pass/fail record of one verification. Counterexamples carry the
// offending objects verbatim; stats hold check-specific numbers.
struct VerificationReport {
  std::string check;
  Status status = Status::Pass;
  std::uint64_t examined = 0;
  std::vector<Json> counterexamples;
  Json stats = Json::object();
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> duration_ms;

  bool passed() const noexcept { return status == Status::Pass; }

  // Records a failure. Only the first `kMaxCounterexamples` payloads are kept;
  // the total is tracked in stats["counterexample_total"].
  void fail(Json payload);

  static constexpr std::size_t kMaxCounterexamples = 16;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Several sub-reports folded into one. Passes only if all parts pass.
struct ReportBundle {
  std::string title;
  std::vector<VerificationReport> parts;

  bool passed() const noexcept;
};

enum class OutputFormat { Text, Json };

Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

std::string report_emit(const VerificationReport& r, OutputFormat format);
std::string report_emit(const ReportBundle& b, OutputFormat format);

std::string_view to_string(Status s);

}  // namespace a2
