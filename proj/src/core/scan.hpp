#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "core/bounds.hpp"

namespace qlap {

// Exhaustive, corpus, or family sweep over graphs, evaluating a set of
// bounds. Records are JSON lines in source order, independent of the worker
// count: workers fill per-chunk buffers which are drained in order.
struct ScanConfig {
  enum class Source { Exhaustive, File, Family };
  enum class Emit { Violations, Equalities, All };

  Source source = Source::Exhaustive;
  int n = 0;                 // exhaustive order, 1..8
  std::string path;          // graph6 file
  std::string family;        // family spec, may carry one "a..b" range
  std::vector<BoundId> bounds;
  std::vector<std::string> emit_bounds;  // record-id filter; empty = all
  Emit emit = Emit::Violations;
  int jobs = 1;
  double epsilon = kDefaultEpsilon;
};

struct BoundCounts {
  long long checked = 0;         // applicable reports
  long long held = 0;
  long long equality = 0;
  long long violated = 0;
  long long not_applicable = 0;
};

struct ScanSummary {
  long long graphs = 0;
  std::map<std::string, BoundCounts> per_bound;  // keyed by record id
  long long proved_violations = 0;      // break the run (exit code 1)
  long long conjecture_violations = 0;  // expected findings
};

using ScanSink = std::function<void(std::string_view line)>;

ScanSummary run_scan(const ScanConfig& cfg, const ScanSink& sink);

}  // namespace qlap
