#pragma once

// Test-only reference computations. Nothing here calls into the simplex,
// double description, or compactness code paths it is used to check.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <optional>
#include <random>
#include <vector>

#include "asymnorm/rational.hpp"
#include "asymnorm/ratlp.hpp"

namespace asymnorm::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}
  long range(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational(long span = 5, long max_den = 4) {
    return make_rational(range(-span, span), range(1, max_den));
  }
  Vector vector(std::size_t dim, long span = 5, long max_den = 4) {
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rational(span, max_den);
    return v;
  }
  Rational nonneg(long span = 5, long max_den = 4) {
    return make_rational(range(0, span), range(1, max_den));
  }

 private:
  std::mt19937_64 engine_;
};

// Solves the square system M x = rhs by Gaussian elimination; nullopt when
// singular.
inline std::optional<Vector> solve_square(std::vector<Vector> m, Vector rhs) {
  const std::size_t n = rhs.dim();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[c]);
    std::swap(rhs[piv], rhs[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
      rhs[i] -= f * rhs[c];
    }
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

// Max of <c, x> over the feasible basic solutions of {A x <= b}: enumerates
// every d-subset of rows. Correct for bounded feasible regions with a vertex.
inline std::optional<Rational> brute_force_lp_max(const Vector& c,
                                                  const std::vector<LinearConstraint>& rows) {
  const std::size_t d = c.dim();
  std::optional<Rational> best;
  std::vector<std::size_t> idx(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == d) {
      std::vector<Vector> m;
      Vector rhs(d);
      for (std::size_t i = 0; i < d; ++i) {
        m.push_back(rows[idx[i]].coeffs);
        rhs[i] = rows[idx[i]].rhs;
      }
      const auto x = solve_square(m, rhs);
      if (!x) return;
      for (const auto& r : rows) {
        if (dot(r.coeffs, *x) > r.rhs) return;
      }
      const Rational v = dot(c, *x);
      if (!best || v > *best) best = v;
      return;
    }
    for (std::size_t i = start; i < rows.size(); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

// Interval shapes on the real line.
enum class IntervalShape {
  kOpenOpen,      // (a,b)
  kOpenClosed,    // (a,b]
  kClosedOpen,    // [a,b)
  kClosedClosed,  // [a,b]
  kLeftRayOpen,   // (-inf,b)
  kLeftRayClosed, // (-inf,b]
  kRightRayClosed,// [a,inf)
  kRightRayOpen,  // (a,inf)
  kLine,          // (-inf,inf)
};

inline constexpr IntervalShape kAllIntervalShapes[] = {
    IntervalShape::kOpenOpen,      IntervalShape::kOpenClosed,     IntervalShape::kClosedOpen,
    IntervalShape::kClosedClosed,  IntervalShape::kLeftRayOpen,    IntervalShape::kLeftRayClosed,
    IntervalShape::kRightRayClosed, IntervalShape::kRightRayOpen,  IntervalShape::kLine,
};

struct Interval {
  std::optional<Rational> lo, hi;  // nullopt = infinite
  bool lo_closed = false, hi_closed = false;

  bool contains(const Rational& x) const {
    if (lo && (lo_closed ? x < *lo : x <= *lo)) return false;
    if (hi && (hi_closed ? x > *hi : x >= *hi)) return false;
    return true;
  }
};

inline Interval make_interval(IntervalShape s, const Rational& a, const Rational& b) {
  switch (s) {
    case IntervalShape::kOpenOpen: return {a, b, false, false};
    case IntervalShape::kOpenClosed: return {a, b, false, true};
    case IntervalShape::kClosedOpen: return {a, b, true, false};
    case IntervalShape::kClosedClosed: return {a, b, true, true};
    case IntervalShape::kLeftRayOpen: return {std::nullopt, b, false, false};
    case IntervalShape::kLeftRayClosed: return {std::nullopt, b, false, true};
    case IntervalShape::kRightRayClosed: return {a, std::nullopt, true, false};
    case IntervalShape::kRightRayOpen: return {a, std::nullopt, false, false};
    case IntervalShape::kLine: return {};
  }
  return {};
}

// Cover argument under |t|_a = max(0, t), whose open balls are the left rays
// (-inf, x + eps). A q-open set containing a point contains every point left
// of it.
//
// * If the interval has a largest element m, every cover has a member U with
//   m in U, and U contains the whole interval: compact.
// * Otherwise pick r_n increasing to sup I (r_n = n when unbounded above,
//   else sup - (sup - anchor)/(n+1) for an anchor inside I). The rays
//   (-inf, r_n) cover I, and the union of the first N of them is
//   (-inf, r_N), which misses points of I between r_N and sup I.
//
// Each branch is checked on concrete sample points; a check that does not go
// through throws, so the oracle never silently guesses.
inline bool cover_oracle_compact(const Interval& iv, const Rational& anchor) {
  if (!iv.contains(anchor)) throw std::logic_error("anchor outside interval");
  std::vector<Rational> samples;
  for (long k = -64; k <= 64; ++k) {
    const Rational x = anchor + make_rational(k, 8);
    if (iv.contains(x)) samples.push_back(x);
  }
  if (iv.hi && iv.hi_closed) {
    const Rational m = *iv.hi;
    // The basic open set (-inf, m + 1/1000) contains m, hence all of I.
    const Rational r = m + make_rational(1, 1000);
    for (const auto& x : samples) {
      if (!(x < r)) throw std::logic_error("largest element does not dominate");
    }
    return true;
  }
  auto r_of = [&](long n) -> Rational {
    if (!iv.hi) return Rational(n);
    return *iv.hi - (*iv.hi - anchor) / Rational(n + 1);
  };
  for (const auto& x : samples) {
    bool covered = false;
    for (long n = 1; n <= 4096 && !covered; n *= 2) covered = x < r_of(n);
    if (!covered) throw std::logic_error("family does not cover the interval");
  }
  for (long n = 1; n <= 64; ++n) {
    const Rational r_n = r_of(n);
    Rational w = iv.hi ? Rational((r_n + *iv.hi) / 2) : r_n;
    if (!iv.hi && iv.lo && !iv.contains(w)) w = *iv.lo + 1 + r_n;
    if (!iv.contains(w) || w < r_n) throw std::logic_error("no uncovered witness");
  }
  return false;
}

}  // namespace asymnorm::testing
