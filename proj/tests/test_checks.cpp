#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <set>

#include "doctest.h"
#include "peaklab/checks.hpp"

using namespace peaklab;

TEST_CASE("registry contents") {
  const auto& registry = list_checks();
  std::set<std::string> ids;
  for (const auto& spec : registry) {
    CHECK(ids.insert(spec.id).second);
    CHECK(!spec.description.empty());
    CHECK(!spec.anchor.empty());
    CHECK(spec.n_min <= spec.n_max);
  }
  for (const char* required :
       {"hilbert-products", "eulerian-a-orthogonality",
        "eulerian-b-orthogonality", "descent-constancy", "peak-orthogonality",
        "peak-vanishing", "peak-constancy", "peak-character", "fixed-basis",
        "bigraded-table", "bigraded-equivariance", "flat-orbit-characters",
        "pairing-golden", "gamma-phi-identity", "bihilb-consistency",
        "bihilb-gf", "sheffer-recursion", "branching-rule",
        "equivariant-tables", "jordan-identities"})
    CHECK(ids.count(required) == 1);
}

TEST_CASE("run_check contract") {
  CHECK_THROWS(run_check("no-such-check"));
  CHECK_THROWS(run_check("eulerian-b-orthogonality", 1, 9));
  CHECK_THROWS(run_check("branching-rule", 0, 3));

  auto records = run_check("bigraded-table", 3, 3);
  REQUIRE(records.size() == 1);
  CHECK(records[0].status == CheckStatus::Pass);
  CHECK(records[0].id == "bigraded-table");
  CHECK(records[0].n == 3);
  CHECK(!records[0].anchor.empty());
}

TEST_CASE("run_check output is reproducible") {
  auto a = run_check("pairing-golden");
  auto b = run_check("pairing-golden");
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].witness == b[i].witness);
  }
}

TEST_CASE("report serialization") {
  std::vector<ReportRecord> empty;
  std::string empty_json = report_to_json(empty);
  CHECK(report_from_json(empty_json).empty());
  CHECK(!any_failure(empty));

  std::vector<ReportRecord> records{
      {"demo", 3, CheckStatus::Pass, 12, "", "anchor-a"},
      {"demo", 4, CheckStatus::Fail, 7, "counterexample", "anchor-a"},
      {"other", 1, CheckStatus::Skipped, 0, "", "anchor-b"},
  };
  CHECK(any_failure(records));
  for (const auto& r : records)
    if (r.status == CheckStatus::Fail) CHECK(!r.witness.empty());

  std::string json = report_to_json(records);
  auto round = report_from_json(json);
  REQUIRE(round.size() == records.size());
  for (size_t i = 0; i < records.size(); ++i) {
    CHECK(round[i].id == records[i].id);
    CHECK(round[i].n == records[i].n);
    CHECK(round[i].status == records[i].status);
    CHECK(round[i].ms == records[i].ms);
    CHECK(round[i].witness == records[i].witness);
    CHECK(round[i].anchor == records[i].anchor);
  }

  std::string text = report_to_text(records);
  CHECK(text.find("demo n=4 fail") != std::string::npos);
  CHECK(text.find("counterexample") != std::string::npos);

  std::string path = "checks_report_test.json";
  emit_report(records, path, "json");
  std::ifstream in(path);
  std::string contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  CHECK(contents == json);
  std::remove(path.c_str());
  CHECK_THROWS(emit_report(records, "/nonexistent-dir/report.json", "json"));
  CHECK_THROWS(emit_report(records, path, "yaml"));
}
