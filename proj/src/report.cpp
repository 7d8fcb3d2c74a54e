#include "asymnorm/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace asymnorm {

std::string format_points(const std::vector<Point>& pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    out += to_string(pts[i]);
  }
  return out + "}";
}

std::string format_witness(const NonCompactWitness& w) {
  if (const auto* bad = std::get_if<BadRecessionDirection>(&w)) {
    return "bad_recession_direction " + to_string(bad->direction);
  }
  if (const auto* esc = std::get_if<EscapedExtremePoint>(&w)) {
    return "escaped_extreme_point " + to_string(esc->point);
  }
  return "-";
}

RunReport run_instance(const std::string& name, const Problem& problem, bool with_timing) {
  const auto start = std::chrono::steady_clock::now();
  RunReport r;
  r.name = name;
  r.dim = problem.q.dim();
  {
    std::string norm;
    for (const auto& a : problem.q.functionals()) norm += (norm.empty() ? "" : "; ") + to_string(a);
    r.norm = norm;
    std::string set;
    for (const auto& h : problem.k.constraints()) set += (set.empty() ? "" : " ; ") + format_row(h);
    r.set = set.empty() ? "(whole space)" : set;
  }
  const CompactInstance inst(problem.q, problem.k);
  const CompactnessCertificate cert = decide_q_compact(inst);
  r.verdict = cert.verdict;
  if (cert.center) r.center = cert.center->vertices();
  r.witness = format_witness(cert.witness);
  r.ext_k = extreme_points_of_k(inst);
  r.e_k = e_of_k(inst);
  r.theta = inst.theta().generators;
  r.theorems = verify_theorems(inst);
  if (with_timing) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                       .count();
  }
  return r;
}

std::string to_text(const RunReport& r) {
  std::ostringstream os;
  os << "instance: " << r.name << '\n';
  os << "dim: " << r.dim << '\n';
  os << "norm: " << r.norm << '\n';
  os << "set: " << r.set << '\n';
  os << "theta: " << format_points(r.theta) << '\n';
  os << "verdict: " << to_string(r.verdict) << '\n';
  os << "center: " << (r.verdict == Verdict::kCompact ? format_points(r.center) : "-") << '\n';
  os << "center_vertices: " << r.center.size() << '\n';
  os << "witness: " << r.witness << '\n';
  os << "ext_K: " << format_points(r.ext_k) << '\n';
  os << "E_K: " << format_points(r.e_k) << '\n';
  for (const auto& c : r.theorems.checks) {
    os << c.id << ": " << to_string(c.status);
    if (c.status == CheckStatus::kFail) os << " " << c.witness;
    os << '\n';
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  if (r.elapsed_ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *r.elapsed_ms);
    os << "time_ms: " << buf << '\n';
  }
  return os.str();
}

}  // namespace asymnorm
