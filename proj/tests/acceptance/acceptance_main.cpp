// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "asymnorm/compactness.hpp"
#include "asymnorm/generators.hpp"
#include "asymnorm/suite.hpp"
#include "oracles.hpp"

namespace {

using namespace asymnorm;
using testing::Gen;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

Point pt(std::initializer_list<long> c) { return Vector::from_ints(c); }
AsymNorm line_norm() { return make_norm(1, {pt({1})}); }

Outcome reference_examples() {
  Outcome out;
  const PartialPolyhedron k(1, {{pt({1}), Rational(1), false}, {pt({-1}), Rational(1), true}});
  const CompactInstance inst(line_norm(), k);
  const auto cert = decide_q_compact(inst);
  out.require(cert.verdict == Verdict::kCompact, "(-1,1] not COMPACT");
  out.require(cert.center && cert.center->vertices() == std::vector<Point>{pt({1})},
              "(-1,1] center is not {1}");
  out.require(extreme_points_of_k(inst) == std::vector<Point>{pt({1})}, "ext((-1,1]) is not {1}");
  // theta(x) = B_q[x, 0] for a few points and norms.
  Gen g(801);
  AsymNorm norms[] = {line_norm(), gen_lattice_norm(2, LatticeFlavor::kSup),
                      gen_lattice_norm(3, LatticeFlavor::kSup),
                      gen_lattice_norm(2, LatticeFlavor::kOne)};
  for (const AsymNorm& q : norms) {
    for (int i = 0; i < 5; ++i) {
      const Point x = g.vector(q.dim());
      const auto c = decide_q_compact(q, ball(q, x, Rational(0), Closedness::kClosed).as_set);
      out.require(c.verdict == Verdict::kCompact && c.center->vertices() == std::vector<Point>{x},
                  "theta(" + to_string(x) + ") center differs");
    }
  }
  return out;
}

Outcome interval_truth_table() {
  Outcome out;
  Gen g(802);
  for (testing::IntervalShape s : testing::kAllIntervalShapes) {
    for (int trial = 0; trial < 20; ++trial) {
      const Rational a = g.rational(4, 3);
      const Rational b = a + g.nonneg(4, 3) + make_rational(1, 3);
      const testing::Interval iv = testing::make_interval(s, a, b);
      Rational anchor = Rational((a + b) / 2);
      if (!iv.lo && !iv.hi) anchor = a;
      else if (!iv.lo) anchor = b - 1;
      else if (!iv.hi) anchor = a + 1;
      const bool expect = testing::cover_oracle_compact(iv, anchor);
      HRep rows;
      if (iv.hi) rows.push_back({pt({1}), *iv.hi, !iv.hi_closed});
      if (iv.lo) rows.push_back({pt({-1}), -*iv.lo, !iv.lo_closed});
      const Verdict v = decide_q_compact(line_norm(), PartialPolyhedron(1, rows)).verdict;
      out.require(v == (expect ? Verdict::kCompact : Verdict::kNotCompact),
                  "interval shape " + std::to_string(static_cast<int>(s)) + " disagrees");
    }
  }
  return out;
}

struct RandomRun {
  Outcome theorems;
  Outcome certificates;
  int compact = 0, not_compact = 0, unknown = 0;
};

RandomRun random_instances() {
  RandomRun run;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::uint64_t i = 0; i < 500; ++i) {
      const std::uint64_t seed = 100000 * d + i;
      const Problem p = gen_random_instance(d, seed);
      const CompactInstance inst(p.q, p.k);
      const auto cert = decide_q_compact(inst);
      const std::string tag = "d=" + std::to_string(d) + " seed=" + std::to_string(seed);
      if (cert.verdict == Verdict::kUnknown) {
        ++run.unknown;
        run.certificates.fail(tag + " verdict UNKNOWN");
        continue;
      }
      if (cert.verdict == Verdict::kCompact) {
        ++run.compact;
        const TheoremReport r = verify_theorems(inst);
        for (const auto& c : r.checks) {
          run.theorems.require(c.status == CheckStatus::kPass, tag + " " + c.id + " " + c.witness);
        }
        run.certificates.require(
            cert.center && cert.center->is_bounded() && sandwich_certify(*cert.center, p.k, p.q),
            tag + " sandwich fails");
      } else {
        ++run.not_compact;
        run.certificates.require(verify_witness(inst, cert.witness), tag + " witness fails");
      }
    }
  }
  return run;
}

Outcome no_line_in_balls() {
  Outcome out;
  Gen g(805);
  for (std::size_t d = 1; d <= 3; ++d) {
    InstanceRng rng(5000 + d);
    for (int i = 0; i < 200; ++i) {
      const AsymNorm q = gen_random_norm(d, rng);
      const Rational r = g.nonneg(3, 3) + make_rational(1, 4);
      for (Closedness cl : {Closedness::kOpen, Closedness::kClosed}) {
        const Ball b = ball(q, g.vector(d), r, cl);
        const auto c = closure(b.as_set);
        out.require(c && !contains_line(*c) && recession_cone(*c).lineality_basis.empty() &&
                        ball_no_line_check(q, r, cl),
                    "ball closure contains a line (d=" + std::to_string(d) + ")");
      }
    }
  }
  return out;
}

Outcome klee_reconstruction() {
  Outcome out;
  InstanceRng rng(806);
  for (int i = 0; i < 300; ++i) {
    const std::size_t d = 1 + static_cast<std::size_t>(i % 3);
    const Polyhedron p = gen_random_line_free(d, rng);
    const Polyhedron rebuilt(d, extreme_points(p), extreme_rays(p));
    out.require(set_equal(as_partial(p), as_partial(rebuilt)),
                "reconstruction differs at sample " + std::to_string(i));
  }
  return out;
}

Outcome norm_axioms() {
  Outcome out;
  Gen g(807);
  for (std::size_t d = 1; d <= 3; ++d) {
    InstanceRng rng(7000 + d);
    for (int n = 0; n < 5; ++n) {
      const AsymNorm q = gen_random_norm(d, rng);
      for (int i = 0; i < 1000; ++i) {
        const Vector x = g.vector(d), y = g.vector(d);
        const Rational t = g.nonneg(6, 5);
        const Rational qx = gauge_eval(q, x), qy = gauge_eval(q, y);
        out.require(gauge_eval(q, x + y) <= qx + qy, "subadditivity");
        out.require(gauge_eval(q, t * x) == t * qx, "positive homogeneity");
        out.require(abs(Rational(qx - qy)) <= qs_eval(q, x - y), "Lipschitz bound");
      }
    }
  }
  return out;
}

Outcome arc_narrative(std::string& table) {
  Outcome out;
  std::size_t last = 0;
  std::ostringstream os;
  for (std::size_t n : kArcLevels) {
    const Problem p = gen_arc_example(n);
    const auto cert = decide_q_compact(p.q, p.k);
    if (cert.verdict != Verdict::kCompact) {
      out.fail("n_arc=" + std::to_string(n) + " not COMPACT");
      continue;
    }
    const std::size_t count = cert.center->vertices().size();
    out.require(sandwich_certify(*cert.center, p.k, p.q), "arc sandwich fails");
    out.require(count > last, "center size not increasing at n_arc=" + std::to_string(n));
    os << "  n_arc=" << n << " center_vertices=" << count << '\n';
    last = count;
  }
  os << "  each polyhedral approximation has a polytope center; the limit set has\n"
        "  infinitely many extreme points on the arc, so no polytope can serve\n";
  table = os.str();
  return out;
}

Outcome kernel_checks() {
  Outcome out;
  Gen g(809);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = static_cast<std::size_t>(g.range(1, 3));
    std::vector<LinearConstraint> rows;
    for (std::size_t i = 0; i < d; ++i) {
      rows.push_back({Vector::unit(d, i), Rational(4)});
      rows.push_back({-Vector::unit(d, i), Rational(4)});
    }
    for (long k = g.range(1, 5); k > 0; --k) rows.push_back({g.vector(d, 3, 3), g.nonneg(3, 2)});
    const Vector c = g.vector(d);
    const LpOutcome a = lp_solve(c, rows), b = lp_solve(c, rows);
    out.require(a.status == b.status && a.value == b.value && a.witness == b.witness,
                "lp_solve not deterministic");
    out.require(a.status == LpStatus::kOptimal, "bounded LP not optimal");
    if (!out.pass) break;
    for (const auto& r : rows) out.require(dot(r.coeffs, a.witness) <= r.rhs, "optimizer infeasible");
    int feasible = 0;
    for (int attempt = 0; feasible < 100 && attempt < 100000; ++attempt) {
      const Rational lam = g.nonneg(4, 4) / 4;
      const Vector x = lam * a.witness + (1 - lam) * g.vector(d, 4, 1);
      bool ok = true;
      for (const auto& r : rows) ok = ok && dot(r.coeffs, x) <= r.rhs;
      if (!ok) continue;
      ++feasible;
      out.require(dot(c, x) <= a.value, "sampled point beats optimum");
    }
    out.require(feasible == 100, "too few feasible samples");
  }
  // DD membership round-trip.
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = static_cast<std::size_t>(g.range(1, 3));
    HRep h;
    for (long m = g.range(1, 8); m > 0; --m) h.push_back({g.vector(d, 3, 2), g.rational(3, 2), false});
    const PartialPolyhedron k(d, h);
    if (is_empty(k)) continue;
    const auto v = dd_convert_h_to_v(k);
    const Polyhedron bare(d, v->vertices(), v->rays());
    const PartialPolyhedron back(d, dd_convert_v_to_h(bare));
    for (int i = 0; i < 200; ++i) {
      const Point x = g.vector(d, 4, 3);
      const bool in = member(k, x);
      out.require(member(back, x) == in && member(bare, x) == in, "DD round-trip membership");
    }
  }
  return out;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  bool all = true;
  const auto report = [&](int id, const char* name, const Outcome& o) {
    std::printf("[%s] %d %s%s%s\n", o.pass ? "PASS" : "FAIL", id, name, o.pass ? "" : ": ",
                o.detail.c_str());
    all = all && o.pass;
  };

  report(1, "reference example replay", reference_examples());
  report(2, "1-D cover oracle truth table", interval_truth_table());
  const RandomRun run = random_instances();
  report(3, "T1-T6 on random COMPACT instances", run.theorems);
  report(4, "certificate cross-validation", run.certificates);
  std::printf("  random verdicts: compact=%d not_compact=%d unknown=%d\n", run.compact,
              run.not_compact, run.unknown);
  report(5, "no line in balls", no_line_in_balls());
  report(6, "Klee reconstruction", klee_reconstruction());
  report(7, "norm axioms", norm_axioms());
  std::string table;
  report(8, "arc approximation narrative", arc_narrative(table));
  std::fputs(table.c_str(), stdout);
  report(9, "kernel checks", kernel_checks());

  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("elapsed: %.1f s\n", secs);
  return all ? 0 : 1;
}
