#pragma once

// Instance generators: lattice norms, the rational-circle approximations of
// the three-dimensional arc example, and seeded random instances.

#include <cstdint>
#include <random>

#include "asymnorm/instance_io.hpp"
#include "asymnorm/norm.hpp"

namespace asymnorm {

enum class LatticeFlavor { kSup, kOne };

// kSup: q(x) = max(0, max_i x_i). kOne: q(x) = sum_i max(0, x_i), as the max
// over all non-empty coordinate subsets (bitmask order).
AsymNorm gen_lattice_norm(std::size_t dim, LatticeFlavor flavor);

constexpr std::size_t kMaxOneFlavorDim = 12;

// Point of the unit circle in the (x1, x3) plane: ((1-t^2)/(1+t^2), 0, 2t/(1+t^2)).
Point rational_arc_point(const Rational& t);

// Sup lattice norm on R^3 with K = conv(arc samples at t = k/n_arc, k = 0..n_arc,
// plus (0,0,0) and (0,1,1)) with the limit vertex (0,0,1) cut off by a strict
// exposing constraint.
Problem gen_arc_example(std::size_t n_arc);

// Deterministic small-integer generator (independent of the standard
// library's distribution implementations).
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [lo, hi].
  long uniform(long lo, long hi);
  bool chance(long num, long den) { return uniform(1, den) <= num; }
  // p/q with p in [-3, 3], q in [1, 3].
  Rational small_rational();
  Vector small_vector(std::size_t dim);

 private:
  std::mt19937_64 engine_;
};

AsymNorm gen_random_norm(std::size_t dim, InstanceRng& rng);

// Random non-empty partial polyhedron; mixes random inequality systems,
// polytopes with strict facets, and polytopes extended by theta(0) rays.
PartialPolyhedron gen_random_set(const AsymNorm& q, InstanceRng& rng);

Problem gen_random_instance(std::size_t dim, std::uint64_t seed);

// Random line-free closed polyhedron in generator form.
Polyhedron gen_random_line_free(std::size_t dim, InstanceRng& rng);

}  // namespace asymnorm
