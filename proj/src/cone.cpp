#include "conevex/cone.hpp"

#include <algorithm>
#include <string>

#include "conevex/error.hpp"
#include "conevex/lp.hpp"

namespace conevex {

namespace {

struct Row {
  Vec a;  // over (lambda_0..lambda_{k-1}, v_0..v_{n-1})
  bool eq;
};

Vec canonical_row(const Vec& a) { return canonical_ray(a); }

void dedup_rows(std::vector<Row>& rows) {
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.eq != y.eq) return x.eq < y.eq;
    return vec_cmp(x.a, y.a) < 0;
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const Row& x, const Row& y) {
                           return x.eq == y.eq && vec_cmp(x.a, y.a) == 0;
                         }),
             rows.end());
}

// Eliminates variable t from the homogeneous system. Equalities with a
// nonzero coefficient are used as exact pivots; otherwise the classic
// positive/negative pairing applies to the inequalities.
void eliminate_variable(std::vector<Row>& rows, int t) {
  int pivot = -1;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].eq && sgn(rows[i].a[t]) != 0) {
      pivot = static_cast<int>(i);
      break;
    }
  if (pivot >= 0) {
    const Row p = rows[pivot];
    rows.erase(rows.begin() + pivot);
    for (auto& r : rows) {
      if (sgn(r.a[t]) == 0) continue;
      const Rat f = r.a[t] / p.a[t];
      for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] -= f * p.a[j];
    }
    return;
  }
  std::vector<Row> keep, pos, neg;
  for (auto& r : rows) {
    const int s = sgn(r.a[t]);
    if (s == 0)
      keep.push_back(std::move(r));
    else if (s > 0)
      pos.push_back(std::move(r));
    else
      neg.push_back(std::move(r));
  }
  for (const auto& p : pos)
    for (const auto& q : neg) {
      Row combo{Vec(p.a.size(), Rat(0)), false};
      const Rat mu = -q.a[t];  // > 0
      const Rat nu = p.a[t];   // > 0
      for (std::size_t j = 0; j < p.a.size(); ++j)
        combo.a[j] = mu * p.a[j] + nu * q.a[j];
      if (vec_is_zero(combo.a)) continue;
      combo.a = canonical_row(combo.a);
      keep.push_back(std::move(combo));
    }
  dedup_rows(keep);
  rows = std::move(keep);
}

// b is implied by the others iff b = sum mu_i a_i with mu >= 0 (Farkas).
bool implied_by(const Vec& b, const std::vector<Vec>& others) {
  if (others.empty()) return false;
  const int n = static_cast<int>(b.size());
  const int k = static_cast<int>(others.size());
  std::vector<LinConstraint> cons;
  for (int j = 0; j < n; ++j) {
    LinConstraint c;
    c.coeffs.assign(k, Rat(0));
    for (int i = 0; i < k; ++i) c.coeffs[i] = others[i][j];
    c.rhs = b[j];
    c.equality = true;
    cons.push_back(std::move(c));
  }
  for (int i = 0; i < k; ++i) {
    LinConstraint c;
    c.coeffs.assign(k, Rat(0));
    c.coeffs[i] = 1;
    c.rhs = 0;
    cons.push_back(std::move(c));
  }
  return lp_find_feasible(k, cons).has_value();
}

std::vector<Vec> remove_redundant(std::vector<Vec> normals) {
  for (std::size_t i = 0; i < normals.size();) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < normals.size(); ++j)
      if (j != i) others.push_back(normals[j]);
    if (implied_by(normals[i], others))
      normals.erase(normals.begin() + i);
    else
      ++i;
  }
  return normals;
}

bool has_interior_point(int dim, const std::vector<Vec>& normals) {
  // Full-dimensionality check: some v with every facet evaluation >= 1.
  std::vector<LinConstraint> cons;
  for (const auto& n : normals) cons.push_back({n, Rat(1), false});
  return lp_find_feasible(dim, cons).has_value();
}

}  // namespace

PolyhedralCone cone_from_generators(int ambient_dim, std::vector<Vec> gens) {
  if (ambient_dim < 0)
    fail(ErrorCode::ValidationError, "negative ambient dimension");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != ambient_dim)
      fail(ErrorCode::DimensionMismatch, "generator of length " +
                                             std::to_string(g.size()) +
                                             " in dimension " +
                                             std::to_string(ambient_dim));
    if (vec_is_zero(g)) fail(ErrorCode::ZeroGenerator, "zero generator");
  }

  std::vector<Vec> canon;
  canon.reserve(gens.size());
  for (const auto& g : gens) canon.push_back(canonical_ray(g));
  std::sort(canon.begin(), canon.end(), vec_less);
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  const int k = static_cast<int>(canon.size());
  const int n = ambient_dim;
  std::vector<Row> rows;
  for (int j = 0; j < n; ++j) {
    Row r{Vec(static_cast<std::size_t>(k + n), Rat(0)), true};
    for (int i = 0; i < k; ++i) r.a[i] = canon[i][j];
    r.a[k + j] = -1;
    rows.push_back(std::move(r));
  }
  for (int i = 0; i < k; ++i) {
    Row r{Vec(static_cast<std::size_t>(k + n), Rat(0)), false};
    r.a[i] = 1;
    rows.push_back(std::move(r));
  }
  for (int t = 0; t < k; ++t) eliminate_variable(rows, t);

  std::vector<Vec> normals;
  for (const auto& r : rows) {
    Vec v(r.a.begin() + k, r.a.end());
    if (vec_is_zero(v)) continue;
    v = canonical_ray(v);
    normals.push_back(v);
    if (r.eq) normals.push_back(canonical_ray(vec_neg(v)));
  }
  std::sort(normals.begin(), normals.end(), vec_less);
  normals.erase(std::unique(normals.begin(), normals.end()), normals.end());

  if (!has_interior_point(n, normals))
    fail(ErrorCode::NotFullDimensional,
         "generators span a set with empty interior");

  normals = remove_redundant(std::move(normals));
  std::sort(normals.begin(), normals.end(), vec_less);

  PolyhedralCone c;
  c.ambient_dim = n;
  c.generators = std::move(canon);
  c.facet_normals = std::move(normals);
  return c;
}

PolyhedralCone orthant_cone(int dim) {
  std::vector<Vec> gens;
  for (int i = 0; i < dim; ++i) {
    Vec e = zero_vec(dim);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return cone_from_generators(dim, std::move(gens));
}

bool cone_contains(const PolyhedralCone& c, const Vec& v) {
  if (static_cast<int>(v.size()) != c.ambient_dim)
    fail(ErrorCode::DimensionMismatch, "membership query of length " +
                                           std::to_string(v.size()));
  for (const auto& n : c.facet_normals)
    if (sgn(dot(n, v)) < 0) return false;
  return true;
}

bool cone_contains_interior(const PolyhedralCone& c, const Vec& v) {
  if (static_cast<int>(v.size()) != c.ambient_dim)
    fail(ErrorCode::DimensionMismatch, "membership query of length " +
                                           std::to_string(v.size()));
  for (const auto& n : c.facet_normals)
    if (sgn(dot(n, v)) <= 0) return false;
  return true;
}

PolyhedralCone dual_cone(const PolyhedralCone& c) {
  PolyhedralCone d;
  d.ambient_dim = c.ambient_dim;
  d.generators = c.facet_normals;
  d.facet_normals = c.generators;
  return d;
}

bool is_pointed(const PolyhedralCone& c) {
  ConeFeasibilityProblem p;
  p.variable_dim = c.ambient_dim;
  for (const auto& n : c.facet_normals) {
    p.homogeneous_inequalities.push_back(n);
    p.homogeneous_inequalities.push_back(vec_neg(n));
  }
  return !cone_nonzero_point(p).has_value();
}

bool cone_same_set(const PolyhedralCone& a, const PolyhedralCone& b) {
  if (a.ambient_dim != b.ambient_dim) return false;
  for (const auto& g : a.generators)
    if (!cone_contains(b, g)) return false;
  for (const auto& g : b.generators)
    if (!cone_contains(a, g)) return false;
  return true;
}

std::optional<Vec> cone_nonzero_point(const ConeFeasibilityProblem& p) {
  std::vector<int> all;
  for (int j = 0; j < p.variable_dim; ++j) all.push_back(j);
  return cone_nonzero_point(p, all);
}

std::optional<Vec> cone_nonzero_point(const ConeFeasibilityProblem& p,
                                      const std::vector<int>& scan_coords) {
  std::vector<LinConstraint> base;
  for (const auto& row : p.homogeneous_inequalities) {
    if (static_cast<int>(row.size()) != p.variable_dim)
      fail(ErrorCode::DimensionMismatch, "inequality row width");
    base.push_back({row, Rat(0), false});
  }
  for (int j : scan_coords) {
    for (int sign : {1, -1}) {
      std::vector<LinConstraint> cons = base;
      LinConstraint norm;
      norm.coeffs = zero_vec(p.variable_dim);
      norm.coeffs[j] = sign;
      norm.rhs = 1;
      norm.equality = true;
      cons.push_back(std::move(norm));
      if (auto x = lp_find_feasible(p.variable_dim, cons)) return x;
    }
  }
  return std::nullopt;
}

}  // namespace conevex
