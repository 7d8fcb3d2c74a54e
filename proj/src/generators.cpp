#include "asymnorm/generators.hpp"

#include <algorithm>

namespace asymnorm {

AsymNorm gen_lattice_norm(std::size_t dim, LatticeFlavor flavor) {
  if (dim == 0) throw InputError("gen_lattice_norm: dimension must be positive");
  std::vector<LinFunctional> rows;
  if (flavor == LatticeFlavor::kSup) {
    for (std::size_t i = 0; i < dim; ++i) rows.push_back(Vector::unit(dim, i));
  } else {
    if (dim > kMaxOneFlavorDim) {
      throw InputError("gen_lattice_norm: the 1-norm flavor needs 2^d rows; dim <= " +
                       std::to_string(kMaxOneFlavorDim));
    }
    for (std::size_t mask = 1; mask < (std::size_t{1} << dim); ++mask) {
      Vector a(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        if (mask & (std::size_t{1} << i)) a[i] = 1;
      }
      rows.push_back(std::move(a));
    }
  }
  return make_norm(dim, std::move(rows));
}

Point rational_arc_point(const Rational& t) {
  const Rational den = 1 + t * t;
  return Point{(1 - t * t) / den, Rational(0), 2 * t / den};
}

Problem gen_arc_example(std::size_t n_arc) {
  if (n_arc < 2) throw InputError("gen_arc_example: n_arc must be at least 2");
  std::vector<Point> vertices;
  for (std::size_t k = 0; k <= n_arc; ++k) {
    vertices.push_back(rational_arc_point(make_rational(static_cast<long>(k), static_cast<long>(n_arc))));
  }
  vertices.push_back(Point::from_ints({0, 0, 0}));
  vertices.push_back(Point::from_ints({0, 1, 1}));
  const Polyhedron hull(3, vertices, {});
  HRep rows = dd_convert_v_to_h(hull);

  // Sum of the facet normals through the limit point exposes it alone.
  const Point limit = Point::from_ints({0, 0, 1});
  Vector cut(3);
  for (const auto& h : rows) {
    if (dot(h.normal, limit) == h.rhs) cut += h.normal;
  }
  rows.push_back({cut, dot(cut, limit), true});
  return {gen_lattice_norm(3, LatticeFlavor::kSup), PartialPolyhedron(3, std::move(rows))};
}

long InstanceRng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(engine_() % span);
}

Rational InstanceRng::small_rational() { return make_rational(uniform(-3, 3), uniform(1, 3)); }

Vector InstanceRng::small_vector(std::size_t dim) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = small_rational();
  return v;
}

AsymNorm gen_random_norm(std::size_t dim, InstanceRng& rng) {
  for (;;) {
    const long count = static_cast<long>(dim) + rng.uniform(0, 2);
    std::vector<LinFunctional> rows;
    for (long i = 0; i < count; ++i) rows.push_back(rng.small_vector(dim));
    if (rank(rows) == dim) return make_norm(dim, std::move(rows));
  }
}

namespace {

Vector nonzero_vector(std::size_t dim, InstanceRng& rng) {
  for (;;) {
    Vector v = rng.small_vector(dim);
    if (!v.is_zero()) return v;
  }
}

PartialPolyhedron random_hrep_set(std::size_t dim, InstanceRng& rng) {
  const long count = static_cast<long>(dim) + rng.uniform(1, 4);
  HRep rows;
  for (long i = 0; i < count; ++i) {
    rows.push_back({nonzero_vector(dim, rng), rng.small_rational(), rng.chance(1, 3)});
  }
  return {dim, std::move(rows)};
}

PartialPolyhedron random_generated_set(const AsymNorm& q, InstanceRng& rng, bool extra_ray) {
  const std::size_t dim = q.dim();
  std::vector<Point> vertices;
  const long nv = rng.uniform(1, static_cast<long>(dim) + 3);
  for (long i = 0; i < nv; ++i) vertices.push_back(rng.small_vector(dim));
  std::vector<Vector> rays;
  if (rng.chance(1, 2)) {
    for (const auto& g : theta_cone(q).generators) {
      if (rng.chance(1, 2)) rays.push_back(g);
    }
  }
  if (extra_ray) rays.push_back(nonzero_vector(dim, rng));
  HRep rows = dd_convert_v_to_h(Polyhedron(dim, std::move(vertices), std::move(rays)));
  for (auto& h : rows) h.strict = rng.chance(1, 4);
  return {dim, std::move(rows)};
}

}  // namespace

PartialPolyhedron gen_random_set(const AsymNorm& q, InstanceRng& rng) {
  for (;;) {
    const long flavor = rng.uniform(0, 5);
    PartialPolyhedron k = flavor < 2   ? random_hrep_set(q.dim(), rng)
                          : flavor < 5 ? random_generated_set(q, rng, false)
                                       : random_generated_set(q, rng, true);
    if (!is_empty(k)) return k;
  }
}

Problem gen_random_instance(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw InputError("gen_random_instance: dimension must be positive");
  InstanceRng rng(seed);
  AsymNorm q = gen_random_norm(dim, rng);
  PartialPolyhedron k = gen_random_set(q, rng);
  return {std::move(q), std::move(k)};
}

Polyhedron gen_random_line_free(std::size_t dim, InstanceRng& rng) {
  for (;;) {
    std::vector<Point> vertices;
    const long nv = rng.uniform(1, static_cast<long>(dim) + 3);
    for (long i = 0; i < nv; ++i) vertices.push_back(rng.small_vector(dim));
    std::vector<Vector> rays;
    const long nr = rng.uniform(0, static_cast<long>(dim) + 1);
    for (long i = 0; i < nr; ++i) rays.push_back(nonzero_vector(dim, rng));
    Polyhedron p(dim, std::move(vertices), std::move(rays));
    if (!contains_line(p)) return p;
  }
}

}  // namespace asymnorm
