#include "asymnorm/ratlp.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace asymnorm {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "OPTIMAL";
    case LpStatus::kUnbounded:
      return "UNBOUNDED";
    case LpStatus::kInfeasible:
      return "INFEASIBLE";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense simplex tableau in equality form A y = b, y >= 0, with an explicit
// reduced-cost row obj[j] = z_j - c_j (maximization: enter when negative).
struct Tableau {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<std::size_t> basis;
  std::vector<Rational> obj;
  Rational obj_value;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t e) {
    const Rational inv = 1 / a[r][e];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(a[r][j]) != 0) {
        a[r][j] *= inv;
        support.push_back(j);
      }
    }
    b[r] *= inv;
    auto eliminate = [&](std::vector<Rational>& row, Rational& rhs) {
      if (sgn(row[e]) == 0) return;
      const Rational f = row[e];
      for (std::size_t j : support) row[j] -= f * a[r][j];
      rhs -= f * b[r];
    };
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i != r) eliminate(a[i], b[i]);
    }
    eliminate(obj, obj_value);
    basis[r] = e;
  }

  void set_objective(const std::vector<Rational>& cost) {
    obj.assign(cols, Rational(0));
    obj_value = 0;
    for (std::size_t j = 0; j < cols; ++j) obj[j] = -cost[j];
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(a[i][j]) != 0) obj[j] += cb * a[i][j];
      }
      obj_value += cb * b[i];
    }
  }

  // Runs Bland's rule to optimality. Returns kNone when optimal, otherwise
  // the entering column that certifies unboundedness.
  std::size_t run() {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols; ++j) {
        if (sgn(obj[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return kNone;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i][enter]) <= 0) continue;
        Rational ratio = b[i] / a[i][enter];
        if (leave == kNone || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return enter;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t i) {
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(i));
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(i));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
  }
};

}  // namespace

LpOutcome lp_solve(const LinFunctional& objective,
                   std::span<const LinearConstraint> constraints) {
  const std::size_t n = objective.dim();
  const std::size_t m = constraints.size();
  for (const auto& c : constraints) require_dim(c.coeffs, n, "lp_solve constraint");

  // Columns: u (n) | w (n) | slack (m) | artificial (k); x = u - w.
  std::size_t artificials = 0;
  for (const auto& c : constraints) artificials += sgn(c.rhs) < 0 ? 1 : 0;
  const std::size_t structural = 2 * n + m;

  Tableau t;
  t.cols = structural + artificials;
  t.a.assign(m, std::vector<Rational>(t.cols));
  t.b.resize(m);
  t.basis.resize(m);
  std::size_t next_art = structural;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    const bool flip = sgn(c.rhs) < 0;
    const Rational s = flip ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(c.coeffs[j]) == 0) continue;
      t.a[i][j] = s * c.coeffs[j];
      t.a[i][n + j] = -t.a[i][j];
    }
    t.a[i][2 * n + i] = s;
    t.b[i] = s * c.rhs;
    if (flip) {
      t.a[i][next_art] = 1;
      t.basis[i] = next_art++;
    } else {
      t.basis[i] = 2 * n + i;
    }
  }

  if (artificials > 0) {
    std::vector<Rational> cost(t.cols);
    for (std::size_t j = structural; j < t.cols; ++j) cost[j] = -1;
    t.set_objective(cost);
    t.run();  // Phase one is bounded above by zero.
    if (sgn(t.obj_value) < 0) return {LpStatus::kInfeasible, Rational(0), Point()};
    for (std::size_t i = t.a.size(); i-- > 0;) {
      if (t.basis[i] < structural) continue;
      std::size_t col = kNone;
      for (std::size_t j = 0; j < structural; ++j) {
        if (sgn(t.a[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col == kNone) {
        t.drop_row(i);
      } else {
        t.pivot(i, col);
      }
    }
    for (auto& row : t.a) row.resize(structural);
    t.cols = structural;
  }

  std::vector<Rational> cost(t.cols);
  for (std::size_t j = 0; j < n; ++j) {
    cost[j] = objective[j];
    cost[n + j] = -objective[j];
  }
  t.set_objective(cost);
  const std::size_t enter = t.run();

  if (enter != kNone) {
    std::vector<Rational> dir(t.cols);
    dir[enter] = 1;
    for (std::size_t i = 0; i < t.a.size(); ++i) dir[t.basis[i]] = -t.a[i][enter];
    Point ray(n);
    for (std::size_t j = 0; j < n; ++j) ray[j] = dir[j] - dir[n + j];
    return {LpStatus::kUnbounded, Rational(0), ray};
  }

  std::vector<Rational> value(t.cols);
  for (std::size_t i = 0; i < t.a.size(); ++i) value[t.basis[i]] = t.b[i];
  Point x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = value[j] - value[n + j];
  return {LpStatus::kOptimal, t.obj_value, x};
}

bool lp_feasible(std::size_t dim, std::span<const LinearConstraint> constraints) {
  return lp_solve(LinFunctional(dim), constraints).status != LpStatus::kInfeasible;
}

std::size_t rank(std::span<const LinFunctional> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().dim();
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : rows) {
    require_dim(r, cols, "rank");
    const Vector p = primitive(r);
    std::vector<mpz_class> row(cols);
    for (std::size_t j = 0; j < cols; ++j) row[j] = p[j].get_num();
    m.push_back(std::move(row));
  }
  // Bareiss: every intermediate entry is an exact minor, so divisions are exact.
  std::size_t r = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<Vector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    m[r] *= 1 / m[r][c];
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

}  // namespace

std::vector<Vector> row_space_basis(std::span<const Vector> rows) {
  if (rows.empty()) return {};
  std::vector<Vector> m(rows.begin(), rows.end());
  rref(m, rows.front().dim());
  return m;
}

std::vector<Vector> null_space(std::span<const Vector> rows, std::size_t dim) {
  std::vector<Vector> m(rows.begin(), rows.end());
  for (const auto& r : m) require_dim(r, dim, "null_space");
  const auto pivots = rref(m, dim);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    Vector v(dim);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> gram_schmidt(std::span<const Vector> basis) {
  std::vector<Vector> out;
  for (const auto& v : basis) {
    Vector w = project_out(v, out);
    if (!w.is_zero()) out.push_back(std::move(w));
  }
  return out;
}

Vector project_out(const Vector& v, std::span<const Vector> orthogonal_basis) {
  Vector w = v;
  for (const auto& u : orthogonal_basis) {
    const Rational uu = dot(u, u);
    const Rational f = dot(v, u) / uu;
    if (sgn(f) != 0) w -= f * u;
  }
  return w;
}

}  // namespace asymnorm
