#pragma once

// q-compactness of partial polyhedra in (R^d, q) with checkable certificates.
//
// For a non-empty partial polyhedron K with closure P and degeneracy cone
// theta = theta(0), K is q-compact exactly when
//   (a) every recession direction d of P has q(d) = 0, and
//   (b) every extreme point of P + theta lies in K.
// Then S(K) = conv(ext(P + theta)) is a polytope with S(K) in K in
// S(K) + theta, which is the certificate returned to callers.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "asymnorm/norm.hpp"
#include "asymnorm/polyhedron.hpp"

namespace asymnorm {

class EmptySetError : public InputError {
 public:
  using InputError::InputError;
};

class EmptyExtremeSet : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CompactInstance {
 public:
  // Throws EmptySetError for empty k and InputError on dimension mismatch.
  CompactInstance(AsymNorm q, PartialPolyhedron k);

  const AsymNorm& q() const { return q_; }
  const PartialPolyhedron& k() const { return k_; }
  const Polyhedron& closure() const { return closure_; }
  const ThetaCone& theta() const { return theta_; }
  const Polyhedron& closure_plus_theta() const { return closure_plus_theta_; }

 private:
  AsymNorm q_;
  PartialPolyhedron k_;
  Polyhedron closure_;
  ThetaCone theta_;
  Polyhedron closure_plus_theta_;
};

// ext(K) = ext(closure K) intersected with K.
std::vector<Point> extreme_points_of_k(const CompactInstance& inst);
// E(K): extreme points of closure(K) + theta(0).
std::vector<Point> e_of_k(const CompactInstance& inst);
// S(K) = conv(E(K)); throws EmptyExtremeSet when E(K) is empty.
Polyhedron s_of_k(const CompactInstance& inst);

enum class Verdict { kCompact, kNotCompact, kUnknown };
const char* to_string(Verdict v);

// q(direction) > 0 and direction recedes from the closure of K.
struct BadRecessionDirection {
  Vector direction;
};
// point is an extreme point of closure(K) + theta(0) that K misses.
struct EscapedExtremePoint {
  Point point;
};
using NonCompactWitness =
    std::variant<std::monostate, BadRecessionDirection, EscapedExtremePoint>;

struct CompactnessCertificate {
  Verdict verdict = Verdict::kUnknown;
  std::optional<Polyhedron> center;  // set iff kCompact
  NonCompactWitness witness;         // set iff kNotCompact
};

CompactnessCertificate decide_q_compact(const CompactInstance& inst);
CompactnessCertificate decide_q_compact(const AsymNorm& q, const PartialPolyhedron& k);

// S in K and K in S + theta(0). A true result proves K is q-compact.
bool sandwich_certify(const Polyhedron& s, const PartialPolyhedron& k, const AsymNorm& q);

// Re-checks a NOT_COMPACT witness by direct evaluation.
bool verify_witness(const CompactInstance& inst, const NonCompactWitness& witness);

enum class CheckStatus { kPass, kFail, kNotApplicable };
const char* to_string(CheckStatus s);

struct TheoremCheck {
  std::string id;  // "T1" .. "T6"
  std::string claim;
  CheckStatus status = CheckStatus::kNotApplicable;
  std::string witness;  // counterexample data for failures
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool all_pass() const;
};

// T1 ext(K + theta) in K; T2 ext(K) non-empty; T3 S(K) in K in S(K) + theta
// = closure(K) + theta; T4 K + theta closed; T5 K line-free; T6 K + theta
// q-compact. Every entry is NOT_APPLICABLE unless K is q-compact.
TheoremReport verify_theorems(const CompactInstance& inst);

// The closure of B_q(0, radius) contains no line.
bool ball_no_line_check(const AsymNorm& q, const Rational& radius, Closedness closedness);

}  // namespace asymnorm
