#pragma once

// Exact linear algebra and linear programming over the rationals.

#include <span>
#include <vector>

#include "asymnorm/rational.hpp"

namespace asymnorm {

// Row constraint <coeffs, x> <= rhs.
struct LinearConstraint {
  LinFunctional coeffs;
  Rational rhs;
};

enum class LpStatus { kOptimal, kUnbounded, kInfeasible };

const char* to_string(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  // Optimal objective value; zero unless status is kOptimal.
  Rational value;
  // kOptimal: an optimizer. kUnbounded: a recession direction of the feasible
  // region along which the objective strictly increases. Empty otherwise.
  Point witness;
};

// max <objective, x> subject to every constraint, x free. Two-phase tableau
// simplex with Bland's rule; the result depends only on the input.
LpOutcome lp_solve(const LinFunctional& objective,
                   std::span<const LinearConstraint> constraints);

// Feasibility of a system of non-strict constraints in `dim` variables.
bool lp_feasible(std::size_t dim, std::span<const LinearConstraint> constraints);

// Rank via fraction-free (Bareiss) elimination on integer-scaled rows.
std::size_t rank(std::span<const LinFunctional> rows);

// Reduced row-echelon basis of span(rows), zero rows dropped.
std::vector<Vector> row_space_basis(std::span<const Vector> rows);

// A basis of {x : <r, x> = 0 for every row r}, in ambient dimension `dim`.
std::vector<Vector> null_space(std::span<const Vector> rows, std::size_t dim);

// Orthogonal projection of v onto the complement of span(basis).
// `orthogonal_basis` must be pairwise orthogonal (see gram_schmidt).
Vector project_out(const Vector& v, std::span<const Vector> orthogonal_basis);

std::vector<Vector> gram_schmidt(std::span<const Vector> basis);

}  // namespace asymnorm
