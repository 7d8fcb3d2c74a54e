#include "asymnorm/compactness.hpp"

#include <algorithm>

namespace asymnorm {

namespace {

Polyhedron nonempty_closure(const AsymNorm& q, const PartialPolyhedron& k) {
  if (q.dim() != k.dim()) throw InputError("norm and set dimensions differ");
  auto p = closure(k);
  if (!p) throw EmptySetError("the set K is empty");
  return *std::move(p);
}

std::string join_points(const std::vector<Point>& pts) {
  std::string out = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    out += to_string(pts[i]);
  }
  return out + "}";
}

}  // namespace

CompactInstance::CompactInstance(AsymNorm q, PartialPolyhedron k)
    : q_(std::move(q)),
      k_(std::move(k)),
      closure_(nonempty_closure(q_, k_)),
      theta_(theta_cone(q_)),
      closure_plus_theta_(minkowski_sum_with_cone(closure_, theta_.as_cone())) {}

std::vector<Point> extreme_points_of_k(const CompactInstance& inst) {
  std::vector<Point> out;
  for (auto& v : extreme_points(inst.closure())) {
    if (member(inst.k(), v)) out.push_back(std::move(v));
  }
  return out;
}

std::vector<Point> e_of_k(const CompactInstance& inst) {
  return extreme_points(inst.closure_plus_theta());
}

Polyhedron s_of_k(const CompactInstance& inst) {
  std::vector<Point> e = e_of_k(inst);
  if (e.empty()) throw EmptyExtremeSet("E(K) is empty: closure(K) + theta(0) has no vertex");
  return Polyhedron(inst.q().dim(), std::move(e), {});
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kCompact:
      return "COMPACT";
    case Verdict::kNotCompact:
      return "NOT_COMPACT";
    case Verdict::kUnknown:
      return "UNKNOWN";
  }
  return "?";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kNotApplicable:
      return "NOT_APPLICABLE";
  }
  return "?";
}

bool sandwich_certify(const Polyhedron& s, const PartialPolyhedron& k, const AsymNorm& q) {
  if (!s.is_bounded()) throw InputError("sandwich_certify: center must be a polytope");
  if (!subset(s, k)) return false;
  const Polyhedron upper = minkowski_sum_with_cone(s, theta_cone(q).as_cone());
  return subset(k, as_partial(upper));
}

CompactnessCertificate decide_q_compact(const CompactInstance& inst) {
  CompactnessCertificate cert;
  // (a) recession directions must be degenerate. The ray list of the closure
  // includes both orientations of any lineality direction.
  for (const auto& d : inst.closure().rays()) {
    if (sgn(gauge_eval(inst.q(), d)) > 0) {
      cert.verdict = Verdict::kNotCompact;
      cert.witness = BadRecessionDirection{normalize_direction(d)};
      return cert;
    }
  }
  // (b) no extreme point of closure(K) + theta(0) escapes K.
  std::vector<Point> e = e_of_k(inst);
  for (const auto& v : e) {
    if (!member(inst.k(), v)) {
      cert.verdict = Verdict::kNotCompact;
      cert.witness = EscapedExtremePoint{v};
      return cert;
    }
  }
  if (e.empty()) return cert;  // cannot happen under (a); quarantined
  Polyhedron center(inst.q().dim(), std::move(e), {});
  if (!sandwich_certify(center, inst.k(), inst.q())) return cert;
  cert.verdict = Verdict::kCompact;
  cert.center = std::move(center);
  return cert;
}

CompactnessCertificate decide_q_compact(const AsymNorm& q, const PartialPolyhedron& k) {
  return decide_q_compact(CompactInstance(q, k));
}

bool verify_witness(const CompactInstance& inst, const NonCompactWitness& witness) {
  if (const auto* bad = std::get_if<BadRecessionDirection>(&witness)) {
    return sgn(gauge_eval(inst.q(), bad->direction)) > 0 &&
           is_recession_direction(inst.closure(), bad->direction);
  }
  if (const auto* esc = std::get_if<EscapedExtremePoint>(&witness)) {
    if (member(inst.k(), esc->point)) return false;
    const auto ext = extreme_points(inst.closure_plus_theta());
    return std::find(ext.begin(), ext.end(), esc->point) != ext.end();
  }
  return false;
}

bool TheoremReport::all_pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const TheoremCheck& c) {
    return c.status == CheckStatus::kPass;
  });
}

TheoremReport verify_theorems(const CompactInstance& inst) {
  static const char* const kClaims[6][2] = {
      {"T1", "ext(K + theta(0)) is contained in K"},
      {"T2", "K has at least one extreme point"},
      {"T3", "S(K) in K in S(K) + theta(0) = K + theta(0)"},
      {"T4", "K + theta(0) is q^s-closed"},
      {"T5", "K contains no line"},
      {"T6", "K + theta(0) is q-compact"},
  };
  TheoremReport report;
  for (const auto& c : kClaims) report.checks.push_back({c[0], c[1], CheckStatus::kNotApplicable, ""});

  const CompactnessCertificate cert = decide_q_compact(inst);
  if (cert.verdict != Verdict::kCompact) {
    for (auto& c : report.checks) c.witness = std::string("verdict ") + to_string(cert.verdict);
    return report;
  }
  auto set = [&](std::size_t i, bool ok, std::string witness) {
    report.checks[i].status = ok ? CheckStatus::kPass : CheckStatus::kFail;
    if (!ok) report.checks[i].witness = std::move(witness);
  };

  const std::vector<Point> e = e_of_k(inst);
  {
    std::vector<Point> escaped;
    for (const auto& v : e) {
      if (!member(inst.k(), v)) escaped.push_back(v);
    }
    set(0, escaped.empty(), "escaped " + join_points(escaped));
  }

  const std::vector<Point> ext_k = extreme_points_of_k(inst);
  set(1, !ext_k.empty(), "ext(K) is empty");

  {
    const Polyhedron s(inst.q().dim(), e, {});
    const PartialPolyhedron s_plus = as_partial(minkowski_sum_with_cone(s, inst.theta().as_cone()));
    const PartialPolyhedron p_plus = as_partial(inst.closure_plus_theta());
    const bool lower = subset(s, inst.k());
    const bool upper = subset(inst.k(), s_plus);
    const bool equal = set_equal(s_plus, p_plus);
    set(2, lower && upper && equal,
        std::string(lower ? "" : "S(K) not in K; ") + (upper ? "" : "K not in S(K)+theta; ") +
            (equal ? "" : "S(K)+theta != closure(K)+theta; ") + "S(K) = " + join_points(e));
  }

  const PartialPolyhedron k_plus = minkowski_sum_with_cone(inst.k(), inst.theta().generators);
  {
    const bool equal = set_equal(k_plus, as_partial(inst.closure_plus_theta()));
    const bool closed = is_closed(k_plus);
    set(3, equal && closed,
        std::string(equal ? "" : "K+theta != closure(K)+theta; ") + (closed ? "" : "K+theta not closed"));
  }

  {
    const Cone rec = recession_cone(inst.closure());
    set(4, rec.is_pointed(),
        rec.is_pointed() ? "" : "line direction " + to_string(rec.lineality_basis.front()));
  }

  {
    const Verdict v = decide_q_compact(inst.q(), k_plus).verdict;
    set(5, v == Verdict::kCompact, std::string("verdict(K + theta) = ") + to_string(v));
  }
  return report;
}

bool ball_no_line_check(const AsymNorm& q, const Rational& radius, Closedness closedness) {
  if (sgn(radius) <= 0) throw InputError("ball_no_line_check: radius must be positive");
  const Ball b = ball(q, Point(q.dim()), radius, closedness);
  const auto p = closure(b.as_set);
  return p.has_value() && !contains_line(*p);
}

}  // namespace asymnorm
