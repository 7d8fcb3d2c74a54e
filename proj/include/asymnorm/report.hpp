#pragma once

// Line-oriented "key: value" reports. Field order is fixed.

#include <optional>
#include <string>
#include <vector>

#include "asymnorm/compactness.hpp"
#include "asymnorm/instance_io.hpp"

namespace asymnorm {

struct RunReport {
  std::string name;
  std::size_t dim = 0;
  std::string norm;  // functional rows
  std::string set;   // constraint rows
  Verdict verdict = Verdict::kUnknown;
  std::vector<Point> center;  // vertices of S(K) when COMPACT
  std::string witness;        // "-" when COMPACT
  std::vector<Point> ext_k;
  std::vector<Point> e_k;
  std::vector<Vector> theta;
  TheoremReport theorems;
  std::optional<double> elapsed_ms;
  std::vector<std::string> notes;
};

std::string format_points(const std::vector<Point>& pts);
std::string format_witness(const NonCompactWitness& w);

// Decide, then evaluate T1-T6.
RunReport run_instance(const std::string& name, const Problem& problem, bool with_timing = false);

std::string to_text(const RunReport& r);

}  // namespace asymnorm
