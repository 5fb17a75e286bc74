#include "conevex/lp.hpp"

#include <algorithm>

#include "conevex/error.hpp"

namespace conevex {

namespace {

// Dense phase-1 tableau. Free variables are split x = xp - xn. Each
// inequality a.x >= b becomes an equation with a surplus column; rows are
// sign-normalized so every right-hand side is nonnegative. Homogeneous
// inequalities and inequalities with negative rhs start with their surplus
// variable basic, so artificials are only needed for the remaining rows.
struct Tableau {
  int cols = 0;                      // structural + surplus + artificial
  std::vector<Vec> rows;             // m x cols
  Vec rhs;                           // m
  std::vector<int> basis;            // basic variable per row
  Vec obj;                           // phase-1 reduced-cost row
  Rat obj_value;

  void pivot(int r, int c) {
    const Rat p = rows[r][c];
    for (auto& x : rows[r]) x /= p;
    rhs[r] /= p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      const Rat f = rows[i][c];
      if (sgn(f) == 0) continue;
      for (int j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    const Rat f = obj[c];
    if (sgn(f) != 0) {
      for (int j = 0; j < cols; ++j) obj[j] -= f * rows[r][j];
      obj_value -= f * rhs[r];
    }
    basis[r] = c;
  }
};

}  // namespace

std::optional<Vec> lp_find_feasible(int dim,
                                    const std::vector<LinConstraint>& cons) {
  // Rows are deduplicated up front; repeated constraints are common in the
  // stacked multiplier systems and only slow the pivoting down.
  std::vector<LinConstraint> rows;
  rows.reserve(cons.size());
  for (const auto& c : cons) {
    if (static_cast<int>(c.coeffs.size()) != dim)
      fail(ErrorCode::DimensionMismatch, "lp constraint width");
    if (vec_is_zero(c.coeffs)) {
      const int s = sgn(c.rhs);
      if (c.equality ? s != 0 : s > 0) return std::nullopt;  // 0 >= positive
      continue;
    }
    bool dup = false;
    for (const auto& r : rows)
      if (r.equality == c.equality && cmp(r.rhs, c.rhs) == 0 &&
          vec_cmp(r.coeffs, c.coeffs) == 0) {
        dup = true;
        break;
      }
    if (!dup) rows.push_back(c);
  }

  const int m = static_cast<int>(rows.size());
  if (m == 0) return zero_vec(dim);

  const int n_struct = 2 * dim;
  int n_surplus = 0;
  for (const auto& r : rows)
    if (!r.equality) ++n_surplus;

  Tableau t;
  t.cols = n_struct + n_surplus + m;  // artificial slots allocated per row
  t.rows.assign(m, Vec(static_cast<std::size_t>(t.cols), Rat(0)));
  t.rhs.assign(m, Rat(0));
  t.basis.assign(m, -1);
  t.obj.assign(static_cast<std::size_t>(t.cols), Rat(0));
  t.obj_value = 0;

  int surplus_at = n_struct;
  int artificial_at = n_struct + n_surplus;
  int n_artificial = 0;

  for (int i = 0; i < m; ++i) {
    Vec a = rows[i].coeffs;
    Rat b = rows[i].rhs;
    int surplus_col = -1;
    Rat surplus_coeff(0);
    if (!rows[i].equality) {
      surplus_col = surplus_at++;
      surplus_coeff = Rat(-1);  // a.x - s = b
    }
    // Make the right-hand side nonnegative. For homogeneous inequalities the
    // flip turns the surplus coefficient positive so it can start basic at
    // zero, avoiding an artificial variable.
    if (sgn(b) < 0 || (sgn(b) == 0 && surplus_col >= 0)) {
      for (auto& x : a) x = -x;
      b = -b;
      surplus_coeff = -surplus_coeff;
    }
    for (int j = 0; j < dim; ++j) {
      t.rows[i][j] = a[j];
      t.rows[i][dim + j] = -a[j];
    }
    if (surplus_col >= 0) t.rows[i][surplus_col] = surplus_coeff;
    t.rhs[i] = b;

    if (surplus_col >= 0 && sgn(surplus_coeff) > 0) {
      t.basis[i] = surplus_col;  // feasible start: s = b >= 0
    } else {
      const int art = artificial_at++;
      ++n_artificial;
      t.rows[i][art] = 1;
      t.basis[i] = art;
      // Accumulate the phase-1 objective (sum of artificials) expressed in
      // nonbasic variables.
      for (int j = 0; j < t.cols; ++j) t.obj[j] += t.rows[i][j];
      t.obj_value += t.rhs[i];
    }
  }
  const int first_artificial = n_struct + n_surplus;
  for (int j = first_artificial; j < t.cols; ++j) t.obj[j] = 0;

  if (n_artificial > 0) {
    for (;;) {
      // Bland: entering column is the lowest index with positive reduced
      // cost; artificials never re-enter.
      int enter = -1;
      for (int j = 0; j < first_artificial; ++j)
        if (sgn(t.obj[j]) > 0) {
          enter = j;
          break;
        }
      if (enter < 0) break;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (sgn(t.rows[i][enter]) <= 0) continue;
        Rat ratio = t.rhs[i] / t.rows[i][enter];
        if (leave < 0 || cmp(ratio, best) < 0 ||
            (cmp(ratio, best) == 0 && t.basis[i] < t.basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return std::nullopt;  // unbounded phase-1: cannot happen
      t.pivot(leave, enter);
    }
    if (sgn(t.obj_value) != 0) return std::nullopt;
  }

  Vec x = zero_vec(dim);
  for (int i = 0; i < m; ++i) {
    const int v = t.basis[i];
    if (v < dim)
      x[v] += t.rhs[i];
    else if (v < 2 * dim)
      x[v - dim] -= t.rhs[i];
  }
  return x;
}

}  // namespace conevex
