#include "asymnorm/norm.hpp"

#include <algorithm>

namespace asymnorm {

AsymNorm make_norm(std::size_t dim, std::vector<LinFunctional> functionals) {
  if (dim == 0) throw InputError("make_norm: dimension must be positive");
  if (functionals.empty()) throw InputError("make_norm: no functionals given");
  for (const auto& a : functionals) require_dim(a, dim, "make_norm functional");
  if (rank(functionals) < dim) {
    throw AxiomThreeViolation(
        "functionals do not span the dual space: q(x) = q(-x) = 0 on a line");
  }
  return AsymNorm(dim, std::move(functionals));
}

Rational gauge_eval(const AsymNorm& q, const Point& x) {
  require_dim(x, q.dim(), "gauge_eval");
  Rational best = 0;
  for (const auto& a : q.functionals()) {
    Rational v = dot(a, x);
    if (v > best) best = std::move(v);
  }
  return best;
}

Rational qs_eval(const AsymNorm& q, const Point& x) {
  return std::max(gauge_eval(q, x), gauge_eval(q, -x));
}

ThetaCone theta_cone(const AsymNorm& q) {
  HRep rows;
  for (const auto& a : q.functionals()) rows.push_back({a, Rational(0), false});
  // The cone contains the origin, so the conversion never reports empty.
  const auto p = dd_convert_h_to_v(q.dim(), rows);
  ThetaCone theta{q.dim(), p->rays()};
  return theta;
}

Ball ball(const AsymNorm& q, const Point& center, const Rational& radius,
          Closedness closedness) {
  require_dim(center, q.dim(), "ball center");
  if (sgn(radius) < 0) throw InputError("ball: negative radius");
  const bool strict = closedness == Closedness::kOpen;
  HRep rows;
  for (const auto& a : q.functionals()) {
    rows.push_back({a, radius + dot(a, center), strict});
  }
  // The implicit zero functional contributes 0 < radius, which only bites
  // for an open ball of radius zero.
  if (strict && sgn(radius) == 0) rows.push_back({LinFunctional(q.dim()), Rational(0), true});
  return {center, radius, closedness, PartialPolyhedron(q.dim(), std::move(rows))};
}

AsymNorm normalize(const AsymNorm& q) {
  std::vector<LinFunctional> kept = q.functionals();
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (std::size_t i = kept.size(); i-- > 0;) {
    std::vector<Point> others{Point(q.dim())};
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (j != i) others.push_back(kept[j]);
    }
    if (member(Polyhedron(q.dim(), others, {}), kept[i])) {
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return make_norm(q.dim(), std::move(kept));
}

}  // namespace asymnorm
