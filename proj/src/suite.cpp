#include "asymnorm/suite.hpp"

#include <algorithm>

#include "asymnorm/generators.hpp"

namespace asymnorm {

namespace {

Halfspace upper(long b, bool strict) { return {Vector::from_ints({1}), Rational(b), strict}; }
Halfspace lower(long a, bool strict) { return {Vector::from_ints({-1}), Rational(-a), strict}; }

AsymNorm asymmetric_line() { return gen_lattice_norm(1, LatticeFlavor::kSup); }

}  // namespace

std::vector<SuiteCase> reference_catalog() {
  std::vector<SuiteCase> cases;
  const AsymNorm ra = asymmetric_line();
  const auto pt = [](std::initializer_list<long> xs) { return Point::from_ints(xs); };

  cases.push_back({"half_open_interval",
                   {ra, PartialPolyhedron(1, {upper(1, false), lower(-1, true)})},
                   {Verdict::kCompact, std::vector{pt({1})}, std::vector{pt({1})}, 1},
                   {"(-1,1] on the asymmetric line: compact, its only extreme point is 1"}});
  cases.push_back({"theta_of_origin",
                   {ra, PartialPolyhedron(1, {upper(0, false)})},
                   {Verdict::kCompact, std::vector{pt({0})}, std::vector{pt({0})}, 1},
                   {"theta(0) = (-inf,0] is compact with the single extreme point 0"}});
  cases.push_back({"theta_of_point_line",
                   {ra, PartialPolyhedron(1, {{Vector::from_ints({1}), make_rational(3, 2), false}})},
                   {Verdict::kCompact, std::vector{Point{make_rational(3, 2)}},
                    std::vector{Point{make_rational(3, 2)}}, 1},
                   {"theta(x) = x + theta(0) has x as its only extreme point"}});
  {
    const AsymNorm sup2 = gen_lattice_norm(2, LatticeFlavor::kSup);
    const Ball b = ball(sup2, pt({1, 2}), Rational(0), Closedness::kClosed);
    cases.push_back({"theta_of_point_plane",
                     {sup2, b.as_set},
                     {Verdict::kCompact, std::vector{pt({1, 2})}, std::vector{pt({1, 2})}, 1},
                     {"theta(x) = B_q[x,0] under the planar sup lattice norm"}});
  }
  cases.push_back({"closed_interval",
                   {ra, PartialPolyhedron(1, {upper(1, false), lower(-1, false)})},
                   {Verdict::kCompact, std::vector{pt({1})}, std::vector{pt({-1}), pt({1})}, 1},
                   {}});
  {
    SuiteCase c{"open_interval",
                {ra, PartialPolyhedron(1, {upper(1, true), lower(-1, true)})},
                {Verdict::kNotCompact, std::nullopt, std::vector<Point>{}, std::nullopt,
                 WitnessKind::kEscapedExtremePoint},
                {"the right end point 1 escapes"}};
    cases.push_back(std::move(c));
  }
  {
    SuiteCase c{"right_ray",
                {ra, PartialPolyhedron(1, {lower(0, false)})},
                {Verdict::kNotCompact, std::nullopt, std::vector{pt({0})}, std::nullopt,
                 WitnessKind::kBadRecessionDirection},
                {"[0,inf) recedes along +1 where q = 1"}};
    cases.push_back(std::move(c));
  }
  {
    const AsymNorm sup2 = gen_lattice_norm(2, LatticeFlavor::kSup);
    PartialPolyhedron square(2, {{pt({1, 0}), Rational(1), false},
                                 {pt({0, 1}), Rational(1), false},
                                 {pt({-1, 0}), Rational(0), false},
                                 {pt({0, -1}), Rational(0), false}});
    cases.push_back({"lattice_square",
                     {sup2, square},
                     {Verdict::kCompact, std::vector{pt({1, 1})},
                      std::vector{pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})}, 1},
                     {}});
  }
  for (std::size_t n : kArcLevels) {
    SuiteCase c{"arc_approximation_" + std::to_string(n), gen_arc_example(n), {}, {}};
    c.expect.verdict = Verdict::kCompact;
    // Every arc sample with x1 > 0 plus (0,1,1).
    c.expect.center_vertex_count = n + 1;
    c.notes.push_back("polyhedral approximation with " + std::to_string(n) +
                      " arc segments has a polytope center");
    c.notes.push_back(
        "limit set: a center must contain the whole open arc, whose q^s-closure reaches "
        "(0,0,1) outside K, so the exact set has no q^s-compact center");
    cases.push_back(std::move(c));
  }
  return cases;
}

std::vector<SuiteResult> run_reference_suite(bool with_timing) {
  std::vector<SuiteResult> results;
  std::size_t prev_arc_center = 0;
  for (const SuiteCase& c : reference_catalog()) {
    SuiteResult res{run_instance(c.name, c.problem, with_timing), {}};
    res.report.notes = c.notes;
    const RunReport& r = res.report;
    const SuiteExpectation& e = c.expect;
    auto mismatch = [&](const std::string& what) { res.mismatches.push_back(what); };

    if (r.verdict != e.verdict) {
      mismatch(std::string("verdict ") + to_string(r.verdict) + ", expected " + to_string(e.verdict));
    }
    if (e.center && r.center != *e.center) {
      mismatch("center " + format_points(r.center) + ", expected " + format_points(*e.center));
    }
    if (e.ext_k && r.ext_k != *e.ext_k) {
      mismatch("ext(K) " + format_points(r.ext_k) + ", expected " + format_points(*e.ext_k));
    }
    if (e.center_vertex_count && r.center.size() != *e.center_vertex_count) {
      mismatch("center has " + std::to_string(r.center.size()) + " vertices, expected " +
               std::to_string(*e.center_vertex_count));
    }
    if (e.verdict == Verdict::kCompact && !r.theorems.all_pass()) mismatch("theorem checks failed");
    const bool bad = r.witness.starts_with("bad_recession_direction");
    const bool esc = r.witness.starts_with("escaped_extreme_point");
    if ((e.witness == WitnessKind::kBadRecessionDirection) != bad ||
        (e.witness == WitnessKind::kEscapedExtremePoint) != esc) {
      mismatch("witness " + r.witness);
    }
    if (c.name.starts_with("arc_approximation_")) {
      if (r.center.size() <= prev_arc_center) mismatch("center size not strictly increasing");
      prev_arc_center = r.center.size();
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace asymnorm
