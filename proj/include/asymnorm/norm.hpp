#pragma once

// Polyhedral asymmetric norms q(x) = max(0, max_i <a_i, x>).

#include <stdexcept>
#include <vector>

#include "asymnorm/polyhedron.hpp"
#include "asymnorm/rational.hpp"

namespace asymnorm {

// The functionals vanish together on a nonzero direction, so q(x) = q(-x) = 0
// there.
class AxiomThreeViolation : public InputError {
 public:
  using InputError::InputError;
};

class AsymNorm {
 public:
  std::size_t dim() const { return dim_; }
  // The zero functional is implicit and never stored.
  const std::vector<LinFunctional>& functionals() const { return functionals_; }

 private:
  friend AsymNorm make_norm(std::size_t dim, std::vector<LinFunctional> functionals);
  AsymNorm(std::size_t dim, std::vector<LinFunctional> functionals)
      : dim_(dim), functionals_(std::move(functionals)) {}

  std::size_t dim_;
  std::vector<LinFunctional> functionals_;
};

// Validates dimensions and the definiteness axiom (rank = dim).
AsymNorm make_norm(std::size_t dim, std::vector<LinFunctional> functionals);

Rational gauge_eval(const AsymNorm& q, const Point& x);
// Associated symmetric norm max(q(x), q(-x)).
Rational qs_eval(const AsymNorm& q, const Point& x);

// theta(0) = {x : q(x) = 0}, a pointed polyhedral cone.
struct ThetaCone {
  std::size_t dim = 0;
  std::vector<Vector> generators;

  Cone as_cone() const { return {dim, generators, {}}; }
};

ThetaCone theta_cone(const AsymNorm& q);

enum class Closedness { kOpen, kClosed };

struct Ball {
  Point center;
  Rational radius;
  Closedness closedness = Closedness::kOpen;
  PartialPolyhedron as_set;
};

// B_q(center, radius) (open) or B_q[center, radius] (closed). A zero-radius
// open ball is empty; a zero-radius closed ball is center + theta(0).
Ball ball(const AsymNorm& q, const Point& center, const Rational& radius,
          Closedness closedness);

// Drops functionals dominated by the others (LP redundancy); the gauge is
// unchanged.
AsymNorm normalize(const AsymNorm& q);

}  // namespace asymnorm
