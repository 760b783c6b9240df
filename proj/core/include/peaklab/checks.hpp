#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace peaklab {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckOutcome {
  CheckStatus status = CheckStatus::Pass;
  // Counterexample or annotation; always non-empty on failure.
  std::string witness;
};

struct CheckSpec {
  std::string id;
  std::string description;
  // Stable topic anchor carried into every report record.
  std::string anchor;
  int n_min = 1;
  int n_max = 1;
  // Hard caps; run_check refuses ranges beyond them.
  int cap_min = 1;
  int cap_max = 1;
  std::function<CheckOutcome(int)> run;
};

struct ReportRecord {
  std::string id;
  int n = 0;
  CheckStatus status = CheckStatus::Pass;
  long long ms = 0;
  std::string witness;
  std::string anchor;
};

const char* status_name(CheckStatus s);

// The full registry in deterministic order.
const std::vector<CheckSpec>& list_checks();

// Runs one check over [n_min, n_max] (defaults to the registered range).
// Throws on unknown id or a range outside the hard caps.
std::vector<ReportRecord> run_check(const std::string& id,
                                    std::optional<int> n_min = std::nullopt,
                                    std::optional<int> n_max = std::nullopt);

// Runs every registered check over its default range.
std::vector<ReportRecord> run_all_checks();

bool any_failure(const std::vector<ReportRecord>& records);

// format is "json" or "text"; throws on unwritable path.
void emit_report(const std::vector<ReportRecord>& records,
                 const std::string& path, const std::string& format);
std::string report_to_json(const std::vector<ReportRecord>& records);
std::string report_to_text(const std::vector<ReportRecord>& records);
std::vector<ReportRecord> report_from_json(const std::string& text);

}  // namespace peaklab
