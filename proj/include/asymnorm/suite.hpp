#pragma once

// Self-checking catalog of the reference instances (the half-open interval
// on the asymmetric line, theta(x) sets, the lattice square, and the arc
// approximations in R^3).

#include <optional>
#include <string>
#include <vector>

#include "asymnorm/report.hpp"

namespace asymnorm {

enum class WitnessKind { kNone, kBadRecessionDirection, kEscapedExtremePoint };

struct SuiteExpectation {
  Verdict verdict = Verdict::kCompact;
  std::optional<std::vector<Point>> center;
  std::optional<std::vector<Point>> ext_k;
  std::optional<std::size_t> center_vertex_count;
  WitnessKind witness = WitnessKind::kNone;
};

struct SuiteCase {
  std::string name;
  Problem problem;
  SuiteExpectation expect;
  std::vector<std::string> notes;
};

struct SuiteResult {
  RunReport report;
  std::vector<std::string> mismatches;
  bool matched() const { return mismatches.empty(); }
};

// Arc refinement levels replayed by the suite.
inline constexpr std::size_t kArcLevels[] = {2, 4, 8, 16};

std::vector<SuiteCase> reference_catalog();

// Runs the catalog in order. Beyond per-case expectations, the arc cases must
// have strictly increasing center sizes; a violation lands on the last one.
std::vector<SuiteResult> run_reference_suite(bool with_timing = false);

}  // namespace asymnorm
