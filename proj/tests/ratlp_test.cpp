#include "asymnorm/ratlp.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace asymnorm {
namespace {

using testing::Gen;

LinearConstraint row(std::initializer_list<long> coeffs, long rhs) {
  return {Vector::from_ints(coeffs), Rational(rhs)};
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), make_rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("+8")), "8");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("1/-2"), InputError);
  EXPECT_THROW(parse_rational("1.5"), InputError);
  EXPECT_THROW(parse_rational(""), InputError);
  EXPECT_THROW(parse_rational("/3"), InputError);
}

TEST(Rational, LowestTermsAfterArithmetic) {
  const Rational r = make_rational(2, 6) + make_rational(1, 6);
  EXPECT_EQ(r.get_num(), 1);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(make_rational(3, -6).get_den(), 2);
}

TEST(Vector, PrimitiveAndDirection) {
  const Vector v{make_rational(2, 3), make_rational(-4, 9), Rational(0)};
  EXPECT_EQ(primitive(v), Vector::from_ints({3, -2, 0}));
  EXPECT_EQ(normalize_direction(v), (Vector{Rational(1), make_rational(-2, 3), Rational(0)}));
  EXPECT_EQ(normalize_direction(Vector::from_ints({0, -5})), Vector::from_ints({0, -1}));
  EXPECT_THROW(dot(Vector(2), Vector(3)), InputError);
}

TEST(LpSolve, UnitSquareCorner) {
  const std::vector<LinearConstraint> rows{row({1, 0}, 1), row({0, 1}, 1), row({-1, 0}, 0),
                                           row({0, -1}, 0)};
  const LpOutcome out = lp_solve(Vector::from_ints({1, 1}), rows);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.value, 2);
  EXPECT_EQ(out.witness, Vector::from_ints({1, 1}));
}

TEST(LpSolve, HalfLineIsUnbounded) {
  const std::vector<LinearConstraint> rows{row({-1}, 0)};
  const LpOutcome out = lp_solve(Vector::from_ints({1}), rows);
  ASSERT_EQ(out.status, LpStatus::kUnbounded);
  EXPECT_EQ(normalize_direction(out.witness), Vector::from_ints({1}));
}

TEST(LpSolve, EmptyRegionIsInfeasible) {
  const std::vector<LinearConstraint> rows{row({1}, 0), row({-1}, -1)};
  EXPECT_EQ(lp_solve(Vector::from_ints({1}), rows).status, LpStatus::kInfeasible);
}

TEST(LpSolve, NoConstraints) {
  const LpOutcome zero = lp_solve(Vector(3), {});
  ASSERT_EQ(zero.status, LpStatus::kOptimal);
  EXPECT_EQ(zero.value, 0);
  EXPECT_EQ(lp_solve(Vector::from_ints({0, -1}), {}).status, LpStatus::kUnbounded);
}

TEST(LpSolve, DimensionMismatch) {
  const std::vector<LinearConstraint> rows{row({1, 0}, 1)};
  EXPECT_THROW(lp_solve(Vector::from_ints({1}), rows), InputError);
}

TEST(LpSolve, EqualityPairsAndRedundantRows) {
  // x + y = 1 twice, x - y <= 0, maximize x: optimum 1/2 with degenerate
  // artificial rows that have to be dropped after phase one.
  const std::vector<LinearConstraint> rows{row({1, 1}, 1),   row({-1, -1}, -1),
                                           row({2, 2}, 2),   row({-2, -2}, -2),
                                           row({1, -1}, 0)};
  const LpOutcome out = lp_solve(Vector::from_ints({1, 0}), rows);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  EXPECT_EQ(out.value, make_rational(1, 2));
  EXPECT_EQ(out.witness, (Vector{make_rational(1, 2), make_rational(1, 2)}));
}

TEST(LpSolve, BealeCyclingExampleTerminates) {
  // Beale's instance cycles under the textbook largest-coefficient rule.
  const std::vector<LinearConstraint> rows{
      {Vector{make_rational(1, 4), Rational(-8), Rational(-1), Rational(9)}, Rational(0)},
      {Vector{make_rational(1, 2), Rational(-12), make_rational(-1, 2), Rational(3)}, Rational(0)},
      {Vector::from_ints({0, 0, 1, 0}), Rational(1)},
      row({-1, 0, 0, 0}, 0),
      row({0, -1, 0, 0}, 0),
      row({0, 0, -1, 0}, 0),
      row({0, 0, 0, -1}, 0)};
  const Vector c{make_rational(3, 4), Rational(-20), make_rational(1, 2), Rational(-6)};
  const LpOutcome out = lp_solve(c, rows);
  ASSERT_EQ(out.status, LpStatus::kOptimal);
  const auto oracle = testing::brute_force_lp_max(c, rows);
  ASSERT_TRUE(oracle.has_value());
  EXPECT_EQ(out.value, *oracle);
  EXPECT_EQ(out.value, make_rational(5, 4));
}

// Random bounded instances: box [-4,4]^d plus random cuts through a known
// interior point.
std::vector<LinearConstraint> random_bounded(Gen& g, std::size_t d) {
  std::vector<LinearConstraint> rows;
  for (std::size_t i = 0; i < d; ++i) {
    rows.push_back({Vector::unit(d, i), Rational(4)});
    rows.push_back({-Vector::unit(d, i), Rational(4)});
  }
  const long extra = g.range(1, 5);
  for (long k = 0; k < extra; ++k) {
    rows.push_back({g.vector(d, 3, 3), g.nonneg(3, 2)});
  }
  return rows;
}

TEST(LpSolve, MatchesVertexEnumerationOracle) {
  Gen g(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = static_cast<std::size_t>(g.range(1, 3));
    const auto rows = random_bounded(g, d);
    const Vector c = g.vector(d);
    const LpOutcome out = lp_solve(c, rows);
    ASSERT_EQ(out.status, LpStatus::kOptimal);
    const auto oracle = testing::brute_force_lp_max(c, rows);
    ASSERT_TRUE(oracle.has_value());
    EXPECT_EQ(out.value, *oracle) << "trial " << trial;
    for (const auto& r : rows) EXPECT_LE(dot(r.coeffs, out.witness), r.rhs);
    EXPECT_EQ(dot(c, out.witness), out.value);
  }
}

TEST(LpSolve, NoSampledFeasiblePointBeatsOptimum) {
  Gen g(15);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = static_cast<std::size_t>(g.range(1, 3));
    const auto rows = random_bounded(g, d);
    const Vector c = g.vector(d);
    const LpOutcome out = lp_solve(c, rows);
    ASSERT_EQ(out.status, LpStatus::kOptimal);
    int feasible = 0;
    for (int attempt = 0; feasible < 100 && attempt < 100000; ++attempt) {
      // Convex combinations of the optimizer with box points stay close to
      // the feasible region, so rejection succeeds often.
      const Vector y = g.vector(d, 4, 1);
      const Rational lam = g.nonneg(4, 4) / 4;
      const Vector x = lam * out.witness + (1 - lam) * y;
      bool ok = true;
      for (const auto& r : rows) ok = ok && dot(r.coeffs, x) <= r.rhs;
      if (!ok) continue;
      ++feasible;
      EXPECT_LE(dot(c, x), out.value);
    }
    EXPECT_EQ(feasible, 100) << "trial " << trial;
  }
}

TEST(LpSolve, UnboundedWitnessIsImprovingRecessionDirection) {
  Gen g(12);
  int seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = static_cast<std::size_t>(g.range(1, 4));
    std::vector<LinearConstraint> rows;
    const long m = g.range(0, 4);
    for (long k = 0; k < m; ++k) rows.push_back({g.vector(d, 3, 2), g.nonneg(3, 2)});
    const Vector c = g.vector(d);
    const LpOutcome out = lp_solve(c, rows);
    if (out.status != LpStatus::kUnbounded) continue;
    ++seen;
    EXPECT_GT(dot(c, out.witness), 0);
    for (const auto& r : rows) EXPECT_LE(dot(r.coeffs, out.witness), 0);
  }
  EXPECT_GT(seen, 20);
}

TEST(LpSolve, Deterministic) {
  Gen g(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto rows = random_bounded(g, 3);
    const Vector c = g.vector(3);
    const LpOutcome a = lp_solve(c, rows);
    const LpOutcome b = lp_solve(c, rows);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(Rank, Examples) {
  const std::vector<Vector> id{Vector::from_ints({1, 0}), Vector::from_ints({0, 1})};
  const std::vector<Vector> dep{Vector::from_ints({1, 1}), Vector::from_ints({2, 2})};
  EXPECT_EQ(rank(id), 2u);
  EXPECT_EQ(rank(dep), 1u);
  EXPECT_EQ(rank(std::vector<Vector>{}), 0u);
  const std::vector<Vector> mixed{Vector{make_rational(1, 2), make_rational(1, 3), Rational(1)},
                                  Vector::from_ints({3, 2, 6}), Vector::from_ints({0, 0, 0}),
                                  Vector::from_ints({1, 0, 1})};
  EXPECT_EQ(rank(mixed), 2u);
}

TEST(LinearAlgebra, NullSpaceIsOrthogonalToRows) {
  Gen g(14);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = static_cast<std::size_t>(g.range(1, 5));
    std::vector<Vector> rows;
    const long m = g.range(0, 4);
    for (long k = 0; k < m; ++k) rows.push_back(g.vector(d, 2, 1));
    const auto ns = null_space(rows, d);
    EXPECT_EQ(ns.size() + rank(rows), d);
    for (const auto& v : ns) {
      for (const auto& r : rows) EXPECT_EQ(dot(v, r), 0);
    }
  }
}

}  // namespace
}  // namespace asymnorm
