#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/json_io.hpp"

namespace artin {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // set only on failure
};

struct CorpusEntrySpec {
  std::string label;
  Json groupSpec;
  std::optional<std::int64_t> expectedOrder;
  std::optional<std::int64_t> expectedClasses;
};

struct CorpusOptions {
  std::int64_t maxOrder = kDefaultOrderBound;
  int jobs = 1;
  /// Empty means all suites.
  std::vector<std::string> suites;
};

struct CorpusEntryResult {
  std::string label;
  std::string error;  // enumeration/setup failure; empty when the entry ran
  bool resourceError = false;
  std::int64_t order = 0;
  std::int64_t classes = 0;
  std::int64_t exponent = 0;
  std::vector<CheckResult> checks;

  bool allPassed() const;
};

struct CorpusOutcome {
  Json report;
  bool anyCheckFailed = false;
  bool anyEntryError = false;
  bool anyResourceError = false;
};

/// The built-in corpus: C1..C24, C2xC2, C2xC4, D3..D12, S3, S4, A4, A5, Q8,
/// S3xC2 with expected orders and class counts.
std::vector<CorpusEntrySpec> defaultCorpus();

/// {"groups": [...], "suites": [...]}; each group entry is a group spec plus
/// optional "label", "expected_order", "expected_classes".
std::vector<CorpusEntrySpec> corpusFromManifest(const Json& manifest,
                                                std::vector<std::string>* suitesOut = nullptr);

/// Names of all property suites, in run order.
std::vector<std::string> corpusSuiteNames();

CorpusEntryResult runCorpusEntry(const CorpusEntrySpec& spec, const CorpusOptions& options);

/// Runs entries (in parallel up to options.jobs), assembles the report
/// sorted by label.  The report contains no timing data, so identical
/// inputs serialize byte-identically.
CorpusOutcome runCorpus(const std::vector<CorpusEntrySpec>& entries, const CorpusOptions& options);

}  // namespace artin
