#include "asymnorm/polyhedron.hpp"

#include <algorithm>
#include <utility>

namespace asymnorm {

bool Halfspace::contains(const Point& x) const {
  const Rational lhs = dot(normal, x);
  return strict ? lhs < rhs : lhs <= rhs;
}

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Vector> canonical_directions(std::span<const Vector> rays) {
  std::vector<Vector> out;
  for (const auto& r : rays) {
    if (!r.is_zero()) out.push_back(normalize_direction(r));
  }
  sort_unique(out);
  return out;
}

std::vector<LinearConstraint> as_lp_rows(const HRep& rows) {
  std::vector<LinearConstraint> out;
  out.reserve(rows.size());
  for (const auto& h : rows) out.push_back({h.normal, h.rhs});
  return out;
}

// Positive rescaling of a constraint to coprime integers.
Halfspace canonical_row(const Halfspace& h) {
  const Vector p = primitive(append(h.normal, h.rhs));
  Vector normal(h.normal.dim());
  for (std::size_t i = 0; i < normal.dim(); ++i) normal[i] = p[i];
  return {normal, p[h.normal.dim()], h.strict};
}

bool in_hull(std::span<const Point> vertices, std::span<const Vector> rays, const Point& x) {
  if (vertices.empty()) return false;
  return lp_feasible(vertices.size() + rays.size(), hull_membership_system(vertices, rays, x));
}

bool in_cone(std::span<const Vector> rays, const Vector& x) {
  if (x.is_zero()) return true;
  if (rays.empty()) return false;
  return lp_feasible(rays.size(), hull_membership_system({}, rays, x));
}

template <typename T>
std::vector<T> all_but(const std::vector<T>& v, std::size_t skip) {
  std::vector<T> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != skip) out.push_back(v[i]);
  }
  return out;
}

}  // namespace

std::vector<LinearConstraint> hull_membership_system(std::span<const Point> vertices,
                                                     std::span<const Vector> rays,
                                                     const Point& x) {
  const std::size_t nv = vertices.size();
  const std::size_t n = nv + rays.size();
  const std::size_t d = x.dim();
  std::vector<LinearConstraint> rows;
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n);
    e[j] = -1;
    rows.push_back({std::move(e), Rational(0)});
  }
  if (nv > 0) {
    Vector ones(n);
    for (std::size_t j = 0; j < nv; ++j) ones[j] = 1;
    rows.push_back({ones, Rational(1)});
    rows.push_back({-ones, Rational(-1)});
  }
  for (std::size_t i = 0; i < d; ++i) {
    Vector row(n);
    for (std::size_t j = 0; j < nv; ++j) {
      require_dim(vertices[j], d, "membership system");
      row[j] = vertices[j][i];
    }
    for (std::size_t j = 0; j < rays.size(); ++j) {
      require_dim(rays[j], d, "membership system");
      row[nv + j] = rays[j][i];
    }
    rows.push_back({row, x[i]});
    rows.push_back({-row, -x[i]});
  }
  return rows;
}

// ---------------------------------------------------------------------------

Polyhedron::Polyhedron(std::size_t dim, std::vector<Point> vertices, std::vector<Vector> rays)
    : dim_(dim), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("polyhedron needs at least one vertex");
  for (const auto& v : vertices_) require_dim(v, dim_, "polyhedron vertex");
  for (auto& r : rays) {
    require_dim(r, dim_, "polyhedron ray");
    if (!r.is_zero()) rays_.push_back(std::move(r));
  }
}

Polyhedron::Polyhedron(std::size_t dim, std::vector<Point> vertices, std::vector<Vector> rays,
                       HRep hrep)
    : Polyhedron(dim, std::move(vertices), std::move(rays)) {
  for (const auto& h : hrep) {
    require_dim(h.normal, dim_, "polyhedron constraint");
    if (h.strict) throw InputError("closed polyhedron given a strict constraint");
  }
  hrep_ = std::move(hrep);
}

Polyhedron Polyhedron::point(const Point& p) { return Polyhedron(p.dim(), {p}, {}); }

PartialPolyhedron::PartialPolyhedron(std::size_t dim, HRep constraints)
    : dim_(dim), constraints_(std::move(constraints)) {
  if (dim_ == 0) throw InputError("dimension must be positive");
  for (const auto& h : constraints_) require_dim(h.normal, dim_, "constraint");
}

bool PartialPolyhedron::has_strict() const {
  return std::any_of(constraints_.begin(), constraints_.end(),
                     [](const Halfspace& h) { return h.strict; });
}

PartialPolyhedron PartialPolyhedron::relaxed() const {
  HRep rows = constraints_;
  for (auto& h : rows) h.strict = false;
  return {dim_, std::move(rows)};
}

PartialPolyhedron PartialPolyhedron::with(const Halfspace& h) const {
  HRep rows = constraints_;
  rows.push_back(h);
  return {dim_, std::move(rows)};
}

// ---------------------------------------------------------------------------
// Double description.

ConeGenerators dd_cone(std::span<const Vector> rows, std::size_t dim) {
  struct Ray {
    Vector v;
    std::vector<bool> tight;  // per processed row
  };
  std::vector<Vector> lineality;
  for (std::size_t i = 0; i < dim; ++i) lineality.push_back(Vector::unit(dim, i));
  std::vector<Ray> rays;
  std::vector<Vector> processed;

  for (const auto& a : rows) {
    require_dim(a, dim, "dd_cone row");
    if (a.is_zero()) continue;
    const std::size_t idx = processed.size();
    processed.push_back(a);

    std::size_t k = lineality.size();
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      if (sgn(dot(a, lineality[i])) != 0) {
        k = i;
        break;
      }
    }

    if (k < lineality.size()) {
      const Vector l0 = lineality[k];
      const Rational al0 = dot(a, l0);
      std::vector<Vector> next_lin;
      for (std::size_t i = 0; i < lineality.size(); ++i) {
        if (i == k) continue;
        Vector l = lineality[i];
        const Rational f = dot(a, l) / al0;
        if (sgn(f) != 0) l -= f * l0;
        next_lin.push_back(primitive(l));
      }
      lineality = std::move(next_lin);
      for (auto& r : rays) {
        const Rational f = dot(a, r.v) / al0;
        if (sgn(f) != 0) r.v = primitive(r.v - f * l0);
        r.tight.push_back(true);
      }
      Ray fresh{primitive(sgn(al0) > 0 ? -l0 : l0), std::vector<bool>(idx + 1, true)};
      fresh.tight[idx] = false;
      rays.push_back(std::move(fresh));
      continue;
    }

    // a lies in the row space of the processed rows: lineality is unchanged.
    const std::size_t rank_old = dim - lineality.size();
    std::vector<Ray> next;
    std::vector<std::size_t> pos, neg;
    std::vector<Rational> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (sgn(val[i]) > 0) pos.push_back(i);
      if (sgn(val[i]) < 0) neg.push_back(i);
    }
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        std::vector<Vector> common;
        std::vector<bool> tight(idx + 1, false);
        for (std::size_t j = 0; j < idx; ++j) {
          if (rays[p].tight[j] && rays[n].tight[j]) {
            common.push_back(processed[j]);
            tight[j] = true;
          }
        }
        if (rank_old < 2 || common.size() < rank_old - 2) continue;
        if (rank(common) != rank_old - 2) continue;
        tight[idx] = true;
        Vector v = primitive(val[p] * rays[n].v - val[n] * rays[p].v);
        next.push_back({std::move(v), std::move(tight)});
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (sgn(val[i]) > 0) continue;
      rays[i].tight.push_back(sgn(val[i]) == 0);
      next.push_back(std::move(rays[i]));
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lineality = row_space_basis(lineality);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

std::optional<Polyhedron> dd_convert_h_to_v(std::size_t dim, std::span<const Halfspace> hrep) {
  std::vector<Vector> rows;
  Vector t_nonneg(dim + 1);
  t_nonneg[dim] = -1;
  rows.push_back(t_nonneg);
  for (const auto& h : hrep) {
    require_dim(h.normal, dim, "dd_convert_h_to_v");
    if (h.strict) throw InputError("dd_convert_h_to_v: strict constraint (take the closure)");
    rows.push_back(append(h.normal, -h.rhs));
  }
  const ConeGenerators gens = dd_cone(rows, dim + 1);

  auto drop_last = [dim](const Vector& v) {
    std::vector<Rational> c(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dim));
    return Vector(std::move(c));
  };
  std::vector<Vector> lin;
  for (const auto& l : gens.lineality) lin.push_back(drop_last(l));
  const std::vector<Vector> ortho = gram_schmidt(lin);

  std::vector<Point> vertices;
  std::vector<Vector> rays;
  for (const auto& g : gens.rays) {
    const Rational& t = g[dim];
    if (sgn(t) > 0) {
      vertices.push_back(project_out((1 / t) * drop_last(g), ortho));
    } else {
      Vector d = project_out(drop_last(g), ortho);
      if (!d.is_zero()) rays.push_back(normalize_direction(d));
    }
  }
  if (vertices.empty()) return std::nullopt;
  for (const auto& l : row_space_basis(lin)) {
    rays.push_back(normalize_direction(l));
    rays.push_back(-normalize_direction(l));
  }
  sort_unique(vertices);
  sort_unique(rays);
  return Polyhedron(dim, std::move(vertices), std::move(rays),
                    HRep(hrep.begin(), hrep.end()));
}

std::optional<Polyhedron> dd_convert_h_to_v(const PartialPolyhedron& closed) {
  return dd_convert_h_to_v(closed.dim(), closed.constraints());
}

HRep dd_convert_v_to_h(const Polyhedron& p) {
  const std::size_t dim = p.dim();
  std::vector<Vector> rows;
  for (const auto& v : p.vertices()) rows.push_back(append(v, Rational(1)));
  for (const auto& r : p.rays()) rows.push_back(append(r, Rational(0)));
  const ConeGenerators polar = dd_cone(rows, dim + 1);

  HRep out;
  auto emit = [&](const Vector& g) {
    Vector normal(dim);
    for (std::size_t i = 0; i < dim; ++i) normal[i] = g[i];
    if (normal.is_zero()) return;
    out.push_back(canonical_row({normal, -g[dim], false}));
  };
  for (const auto& g : polar.rays) emit(g);
  for (const auto& l : polar.lineality) {
    emit(l);
    emit(-l);
  }
  std::sort(out.begin(), out.end(), [](const Halfspace& a, const Halfspace& b) {
    return std::tie(a.normal, a.rhs) < std::tie(b.normal, b.rhs);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PartialPolyhedron as_partial(const Polyhedron& p) {
  if (p.cached_hrep()) return {p.dim(), *p.cached_hrep()};
  return {p.dim(), dd_convert_v_to_h(p)};
}

// ---------------------------------------------------------------------------
// Predicates.

bool member(const PartialPolyhedron& k, const Point& x) {
  require_dim(x, k.dim(), "member");
  return std::all_of(k.constraints().begin(), k.constraints().end(),
                     [&](const Halfspace& h) { return h.contains(x); });
}

bool member(const Polyhedron& p, const Point& x) {
  require_dim(x, p.dim(), "member");
  return in_hull(p.vertices(), p.rays(), x);
}

bool is_empty(const PartialPolyhedron& k) {
  if (!k.has_strict()) return !lp_feasible(k.dim(), as_lp_rows(k.constraints()));
  // max s  s.t.  <c,x> + s <= b (strict rows), <c,x> <= b (others), s <= 1.
  const std::size_t d = k.dim();
  std::vector<LinearConstraint> rows;
  for (const auto& h : k.constraints()) {
    rows.push_back({append(h.normal, Rational(h.strict ? 1 : 0)), h.rhs});
  }
  rows.push_back({Vector::unit(d + 1, d), Rational(1)});
  const LpOutcome out = lp_solve(Vector::unit(d + 1, d), rows);
  return out.status == LpStatus::kInfeasible || sgn(out.value) <= 0;
}

std::optional<Polyhedron> closure(const PartialPolyhedron& k) {
  if (is_empty(k)) return std::nullopt;
  return dd_convert_h_to_v(k.relaxed());
}

bool is_closed(const PartialPolyhedron& k) {
  if (!k.has_strict() || is_empty(k)) return true;
  const PartialPolyhedron r = k.relaxed();
  for (const auto& h : k.constraints()) {
    if (!h.strict) continue;
    const PartialPolyhedron face = r.with({-h.normal, -h.rhs, false});
    if (!is_empty(face)) return false;
  }
  return true;
}

bool subset(const PartialPolyhedron& a, const PartialPolyhedron& b) {
  if (a.dim() != b.dim()) throw InputError("subset: dimension mismatch");
  if (is_empty(a)) return true;
  const std::vector<LinearConstraint> rows = as_lp_rows(a.constraints());
  for (const auto& h : b.constraints()) {
    const LpOutcome out = lp_solve(h.normal, rows);
    if (out.status == LpStatus::kUnbounded) return false;
    if (out.value > h.rhs) return false;
    if (out.value == h.rhs && h.strict) {
      // The maximizing face of closure(a) must miss a itself.
      const PartialPolyhedron face =
          a.with({h.normal, h.rhs, false}).with({-h.normal, -h.rhs, false});
      if (!is_empty(face)) return false;
    }
  }
  return true;
}

bool subset(const Polyhedron& a, const PartialPolyhedron& b) {
  if (a.dim() != b.dim()) throw InputError("subset: dimension mismatch");
  for (const auto& h : b.constraints()) {
    for (const auto& r : a.rays()) {
      if (sgn(dot(h.normal, r)) > 0) return false;
    }
    for (const auto& v : a.vertices()) {
      if (!h.contains(v)) return false;
    }
  }
  return true;
}

bool set_equal(const PartialPolyhedron& a, const PartialPolyhedron& b) {
  return subset(a, b) && subset(b, a);
}

bool is_recession_direction(const Polyhedron& p, const Vector& d) {
  require_dim(d, p.dim(), "is_recession_direction");
  return in_cone(p.rays(), d);
}

PartialPolyhedron affine_image(const PartialPolyhedron& k, const Rational& t,
                               const Vector& v) {
  if (sgn(t) <= 0) throw InputError("affine_image: scale must be positive");
  require_dim(v, k.dim(), "affine_image");
  HRep rows;
  for (const auto& h : k.constraints()) {
    rows.push_back({h.normal, t * h.rhs + dot(h.normal, v), h.strict});
  }
  return {k.dim(), std::move(rows)};
}

// ---------------------------------------------------------------------------
// Sums and extreme structure.

Polyhedron minkowski_sum_with_cone(const Polyhedron& p, const Cone& c) {
  if (c.dim != p.dim()) throw InputError("minkowski_sum_with_cone: dimension mismatch");
  std::vector<Vector> rays(p.rays());
  for (const auto& g : c.generators) rays.push_back(g);
  for (const auto& l : c.lineality_basis) {
    rays.push_back(l);
    rays.push_back(-l);
  }
  rays = canonical_directions(rays);
  for (std::size_t i = rays.size(); i-- > 0;) {
    if (in_cone(all_but(rays, i), rays[i])) rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(i));
  }
  std::vector<Point> vertices(p.vertices());
  sort_unique(vertices);
  for (std::size_t i = vertices.size(); i-- > 0;) {
    if (vertices.size() > 1 && in_hull(all_but(vertices, i), rays, vertices[i])) {
      vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return Polyhedron(p.dim(), std::move(vertices), std::move(rays));
}

PartialPolyhedron remove_redundant(const PartialPolyhedron& k) {
  if (is_empty(k)) return k;
  HRep rows;
  for (const auto& h : k.constraints()) {
    if (h.normal.is_zero()) continue;  // 0 <= b or 0 < b, true since k is non-empty
    rows.push_back(canonical_row(h));
  }
  // Identical rows: keep one, preferring the strict version.
  std::sort(rows.begin(), rows.end(), [](const Halfspace& a, const Halfspace& b) {
    const bool a_weak = !a.strict, b_weak = !b.strict;
    return std::tie(a.normal, a.rhs, a_weak) < std::tie(b.normal, b.rhs, b_weak);
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const Halfspace& a, const Halfspace& b) {
                           return a.normal == b.normal && a.rhs == b.rhs;
                         }),
             rows.end());
  for (std::size_t i = rows.size(); i-- > 0;) {
    const PartialPolyhedron others(k.dim(), all_but(rows, i));
    if (subset(others, PartialPolyhedron(k.dim(), {rows[i]}))) {
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return {k.dim(), std::move(rows)};
}

PartialPolyhedron minkowski_sum_with_cone(const PartialPolyhedron& k,
                                          std::span<const Vector> generators) {
  if (is_empty(k)) return k;
  PartialPolyhedron current = remove_redundant(k);
  for (const auto& g : generators) {
    require_dim(g, k.dim(), "minkowski_sum_with_cone generator");
    if (g.is_zero()) continue;
    // y in K + R_+ g  iff  exists t >= 0 with y - t g in K. Row j reads
    // <c_j, y> + alpha_j t (<|<=) b_j with alpha_j = -<c_j, g>; eliminate t.
    std::vector<const Halfspace*> pos, neg;
    HRep next;
    for (const auto& h : current.constraints()) {
      const Rational a = -dot(h.normal, g);
      if (sgn(a) > 0) {
        pos.push_back(&h);
        next.push_back(h);  // paired with -t <= 0
      } else if (sgn(a) < 0) {
        neg.push_back(&h);
      } else {
        next.push_back(h);
      }
    }
    for (const Halfspace* p : pos) {
      const Rational ap = -dot(p->normal, g);
      for (const Halfspace* n : neg) {
        const Rational an = dot(n->normal, g);  // = -alpha_n > 0
        next.push_back({an * p->normal + ap * n->normal, an * p->rhs + ap * n->rhs,
                        p->strict || n->strict});
      }
    }
    current = remove_redundant(PartialPolyhedron(k.dim(), std::move(next)));
  }
  return current;
}

Cone recession_cone(const Polyhedron& p) {
  Cone c;
  c.dim = p.dim();
  const std::vector<Vector> rays = canonical_directions(p.rays());
  std::vector<Vector> lin;
  for (const auto& r : rays) {
    if (in_cone(rays, -r)) {
      lin.push_back(r);
    } else {
      c.generators.push_back(r);
    }
  }
  for (const auto& l : row_space_basis(lin)) c.lineality_basis.push_back(normalize_direction(l));
  return c;
}

bool contains_line(const Polyhedron& p) { return !recession_cone(p).is_pointed(); }

std::vector<Point> extreme_points(const Polyhedron& p) {
  if (contains_line(p)) return {};
  std::vector<Point> vertices(p.vertices());
  sort_unique(vertices);
  std::vector<Point> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!in_hull(all_but(vertices, i), p.rays(), vertices[i])) out.push_back(vertices[i]);
  }
  return out;
}

std::vector<Vector> extreme_rays(const Polyhedron& p) {
  if (contains_line(p)) throw LinealityPresent("extreme_rays: polyhedron contains a line");
  const std::vector<Vector> rays = canonical_directions(p.rays());
  std::vector<Vector> out;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (!in_cone(all_but(rays, i), rays[i])) out.push_back(rays[i]);
  }
  return out;
}

}  // namespace asymnorm
