#pragma once

// Exact generalized polyhedra: closed polyhedra in generator form and
// "partial" polyhedra given by inequalities that may individually be strict.

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "asymnorm/ratlp.hpp"
#include "asymnorm/rational.hpp"

namespace asymnorm {

// <normal, x> < rhs when strict, <= rhs otherwise.
struct Halfspace {
  LinFunctional normal;
  Rational rhs;
  bool strict = false;

  bool contains(const Point& x) const;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

using HRep = std::vector<Halfspace>;

// Raised when extreme rays are requested for a set containing a line.
class LinealityPresent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// conv(vertices) + cone(rays), always non-empty. Emptiness is reported by
// the functions that can produce it (std::nullopt), never encoded here.
class Polyhedron {
 public:
  Polyhedron(std::size_t dim, std::vector<Point> vertices, std::vector<Vector> rays);
  Polyhedron(std::size_t dim, std::vector<Point> vertices, std::vector<Vector> rays,
             HRep hrep);

  static Polyhedron point(const Point& p);

  std::size_t dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Vector>& rays() const { return rays_; }
  bool is_bounded() const { return rays_.empty(); }

  // Cached inequality description, present when the polyhedron was built from
  // one (or by with_hrep()).
  const std::optional<HRep>& cached_hrep() const { return hrep_; }

 private:
  std::size_t dim_;
  std::vector<Point> vertices_;
  std::vector<Vector> rays_;
  std::optional<HRep> hrep_;
};

// Intersection of closed and open half-spaces. Always convex; possibly empty.
class PartialPolyhedron {
 public:
  PartialPolyhedron(std::size_t dim, HRep constraints);

  static PartialPolyhedron whole_space(std::size_t dim) { return {dim, {}}; }

  std::size_t dim() const { return dim_; }
  const HRep& constraints() const { return constraints_; }
  bool has_strict() const;

  // Same constraints with every strict flag dropped.
  PartialPolyhedron relaxed() const;
  PartialPolyhedron with(const Halfspace& h) const;

  friend bool operator==(const PartialPolyhedron&, const PartialPolyhedron&) = default;

 private:
  std::size_t dim_;
  HRep constraints_;
};

// cone(generators) + span(lineality_basis); need not be pointed.
struct Cone {
  std::size_t dim = 0;
  std::vector<Vector> generators;
  std::vector<Vector> lineality_basis;

  bool is_pointed() const { return lineality_basis.empty(); }
};

// Generators of {y : <row, y> <= 0 for all rows} by double description.
struct ConeGenerators {
  std::vector<Vector> rays;
  std::vector<Vector> lineality;
};
ConeGenerators dd_cone(std::span<const Vector> rows, std::size_t dim);

// H -> V. Strict flags must be absent. Returns nullopt for the empty set.
// Vertices are canonical representatives orthogonal to the lineality space;
// lineality directions appear as opposite ray pairs.
std::optional<Polyhedron> dd_convert_h_to_v(std::size_t dim, std::span<const Halfspace> hrep);
std::optional<Polyhedron> dd_convert_h_to_v(const PartialPolyhedron& closed);

// V -> H: facet inequalities plus paired rows for implicit equalities.
HRep dd_convert_v_to_h(const Polyhedron& p);

// Inequality view of a closed polyhedron (uses the cache when present).
PartialPolyhedron as_partial(const Polyhedron& p);

bool member(const PartialPolyhedron& k, const Point& x);
// x in conv(vertices) + cone(rays), decided by LP feasibility.
bool member(const Polyhedron& p, const Point& x);

bool is_empty(const PartialPolyhedron& k);

// Topological closure; nullopt exactly when k is empty.
std::optional<Polyhedron> closure(const PartialPolyhedron& k);

bool is_closed(const PartialPolyhedron& k);

// P + C, with redundant generators removed.
Polyhedron minkowski_sum_with_cone(const Polyhedron& p, const Cone& c);

// Half-open sum K + cone(generators) as a partial polyhedron, by strict-aware
// Fourier-Motzkin elimination of the cone multipliers.
PartialPolyhedron minkowski_sum_with_cone(const PartialPolyhedron& k,
                                          std::span<const Vector> generators);

// Drops constraints implied by the remaining ones.
PartialPolyhedron remove_redundant(const PartialPolyhedron& k);

std::vector<Point> extreme_points(const Polyhedron& p);
// Throws LinealityPresent when p contains a line.
std::vector<Vector> extreme_rays(const Polyhedron& p);
Cone recession_cone(const Polyhedron& p);
bool contains_line(const Polyhedron& p);

bool subset(const PartialPolyhedron& a, const PartialPolyhedron& b);
bool subset(const Polyhedron& a, const PartialPolyhedron& b);
bool set_equal(const PartialPolyhedron& a, const PartialPolyhedron& b);

// x + t g in the closed polyhedron for all t >= 0 and some x in it.
bool is_recession_direction(const Polyhedron& p, const Vector& d);

// Image {t x + v : x in k} for t > 0.
PartialPolyhedron affine_image(const PartialPolyhedron& k, const Rational& t, const Vector& v);

// Constraint set for "x in conv(vertices) + cone(rays)" in the multiplier
// variables (lambda, mu); used by the LP-based membership tests.
std::vector<LinearConstraint> hull_membership_system(std::span<const Point> vertices,
                                                     std::span<const Vector> rays,
                                                     const Point& x);

}  // namespace asymnorm
