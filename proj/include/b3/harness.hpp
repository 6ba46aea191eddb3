#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "b3/alexander.hpp"
#include "b3/braid.hpp"
#include "b3/hfk.hpp"
#include "b3/xu.hpp"

namespace b3 {

// Everything the pipeline derives for one word: normalize -> classify ->
// stats -> Delta -> predictions.
struct Analysis {
  BandWord input;
  BandWord rep;
  XuForm form;
  LinkStats stats;
  LaurentPoly delta;  // canonicalized
  std::optional<long long> zeta_value;  // nullopt for split closures
  HfkPrediction prediction;
};

Analysis analyze(const BandWord& w, const SearchOptions& opts = {});

// All words over the six signed letters with length 0..max_len, in
// length-then-lexicographic order; count is sum_{i<=max_len} 6^i.
std::vector<BandWord> enumerate_words(int max_len);
void for_each_word(int max_len, const std::function<void(const BandWord&)>& fn);

enum class CheckStatus { Pass, Fail, Skipped };
const char* to_string(CheckStatus s);

struct CheckResult {
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct ValidationReport {
  BandWord word;
  std::string case_tag;
  std::vector<std::pair<std::string, CheckResult>> checks;
  bool all_passed() const;  // no Fail entries
};

// checks is a subset of {"euler", "mirror", "shortest-stability",
// "conjugacy-invariance"}; every requested check appears exactly once in the
// report. Split closures and unsupported dispatches skip with a reason.
ValidationReport validate_word(const BandWord& w,
                               const std::vector<std::string>& checks,
                               const SearchOptions& opts = {});

struct FleetOptions {
  int max_len = 6;
  std::vector<std::string> checks = {"euler", "mirror", "shortest-stability",
                                     "conjugacy-invariance"};
  bool dedup = true;  // validate one word per conjugacy class
  SearchOptions search;
};

struct FleetSummary {
  uint64_t words_seen = 0;
  uint64_t classes_seen = 0;
  uint64_t checks_passed = 0;
  uint64_t checks_failed = 0;
  uint64_t checks_skipped = 0;
  std::map<std::string, uint64_t> skip_reasons;
  std::map<std::string, uint64_t> case_tags;
  std::vector<ValidationReport> failures;
  double seconds = 0.0;
};

// Deterministic sweep over every word of length <= max_len. With dedup on,
// each conjugacy class is validated once (at its first enumerated word) and
// conjugates only bump the word counter.
FleetSummary run_fleet(const FleetOptions& opts, std::ostream* progress = nullptr);

// Reference HFK tables: one record per line,
//   <word-text> ; (A,M,rank) (A,M,rank) ...
// '#' starts a comment line. Throws FormatError with the line number.
struct ReferenceRecord {
  std::string word_text;
  BandWord word;
  std::vector<std::tuple<int, int, long long>> groups;  // (alexander, maslov, rank)
};

std::vector<ReferenceRecord> import_reference(std::istream& in);
std::vector<ReferenceRecord> import_reference_file(const std::string& path);

struct CompareMismatch {
  std::string word;
  std::string detail;
};

struct CompareReport {
  size_t records = 0;
  std::vector<CompareMismatch> mismatches;
};

// Recomputes predictions for each record and compares ranks gradingwise at
// alexander in {g, g-1}; record entries at other gradings are ignored.
CompareReport compare_reference(const std::vector<ReferenceRecord>& records,
                                const SearchOptions& opts = {});

}  // namespace b3
