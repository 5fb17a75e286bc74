#include "conevex/oracles.hpp"

#include <algorithm>

#include "conevex/alternative.hpp"
#include "conevex/convexity.hpp"
#include "conevex/efficiency.hpp"
#include "conevex/error.hpp"
#include "conevex/instance_json.hpp"

namespace conevex {

namespace {

// Nullspace basis of the row span, by Gauss-Jordan over Q.
std::vector<Vec> nullspace(const std::vector<Vec>& rows, int dim) {
  std::vector<Vec> m = rows;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < dim && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rat inv = Rat(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rat f = m[i][c];
      for (int j = 0; j < dim; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(dim, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < dim; ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(dim);
    v[c] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool satisfies_all(const std::vector<Vec>& rows, const Vec& v) {
  for (const auto& r : rows)
    if (sgn(dot(r, v)) < 0) return false;
  return true;
}

}  // namespace

std::optional<Vec> enumerate_nonzero_solution(int dim,
                                              const std::vector<Vec>& rows) {
  if (dim == 0) return std::nullopt;

  std::vector<Vec> distinct;
  for (const auto& r : rows) {
    if (vec_is_zero(r)) continue;
    Vec c = canonical_ray(r);
    if (!std::count(distinct.begin(), distinct.end(), c))
      distinct.push_back(std::move(c));
  }

  // Lineality space: any kernel direction satisfies every row with equality.
  const auto kernel = nullspace(distinct, dim);
  if (!kernel.empty()) return canonical_ray(kernel.front());

  // The solution cone is pointed, so a nonzero point exists iff some extreme
  // ray does; extreme rays are kernel directions of (dim-1)-subsets.
  const int k = static_cast<int>(distinct.size());
  const int pick = dim - 1;
  std::vector<int> idx(pick);
  std::optional<Vec> found;
  auto try_subset = [&](const std::vector<int>& subset) -> bool {
    std::vector<Vec> sub;
    for (int i : subset) sub.push_back(distinct[i]);
    const auto dirs = nullspace(sub, dim);
    if (dirs.size() != 1) return false;
    Vec d = canonical_ray(dirs.front());
    if (satisfies_all(distinct, d)) {
      found = d;
      return true;
    }
    Vec nd = vec_neg(d);
    if (satisfies_all(distinct, nd)) {
      found = nd;
      return true;
    }
    return false;
  };
  if (pick == 0) {
    Vec e = zero_vec(dim);
    e[0] = 1;  // dim 1, pointed: try both unit directions
    if (satisfies_all(distinct, e)) return e;
    e[0] = -1;
    if (satisfies_all(distinct, e)) return e;
    return std::nullopt;
  }
  if (k < pick) return std::nullopt;
  // Iterate subsets in lexicographic order.
  for (int i = 0; i < pick; ++i) idx[i] = i;
  for (;;) {
    if (try_subset(idx)) return found;
    int pos = pick - 1;
    while (pos >= 0 && idx[pos] == k - pick + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void disagree(const ProblemInstance& inst, const std::string& what) {
  fail(ErrorCode::OracleDisagreement,
       what + "\ncounterexample:\n" + serialize_instance(inst));
}

bool strictly_inside(const PolyhedralCone& c, const Vec& v) {
  for (const auto& n : c.facet_normals) {
    Rat acc(0);
    for (std::size_t j = 0; j < v.size(); ++j) acc += n[j] * v[j];
    if (sgn(acc) <= 0) return false;
  }
  return true;
}

PointSet oracle_pmin(const PointSet& a, const PolyhedralCone& c, bool flip) {
  PointSet keep;
  for (const auto& y : a) {
    bool dominated = false;
    for (const auto& other : a) {
      const Vec diff = flip ? vec_sub(other, y) : vec_sub(y, other);
      if (strictly_inside(c, diff)) dominated = true;
    }
    if (!dominated) keep.push_back(y);
  }
  return keep;
}

bool direct_tau_containment(const PointSet& A, const PointSet& S,
                            const PolyhedralCone& C, const Rat& tau) {
  for (const auto& a : A) {
    bool hit = false;
    for (const auto& s : S)
      if (cone_contains(C, vec_sub(a, vec_scale(tau, s)))) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

OracleReport brute_oracles(const ProblemInstance& inst) {
  if (inst.dim_y > 3 || inst.dim_z > 3 || inst.dim_w > 3 ||
      inst.domain.size() > 5)
    fail(ErrorCode::ValidationError,
         "oracle bounds: dims <= 3 and at most 5 domain points");

  OracleReport rep;
  const auto labels = inst.sorted_labels();
  const PointSet values = image_union(inst.f, labels);

  if (oracle_pmin(values, inst.y_plus, false) != pmin(values, inst.y_plus))
    disagree(inst, "pmin mismatch");
  rep.pmin_ok = true;
  if (oracle_pmin(values, inst.y_plus, true) != pmax(values, inst.y_plus))
    disagree(inst, "pmax mismatch");
  rep.pmax_ok = true;

  // Weak efficiency, literally from its definition.
  std::vector<std::string> feasible;
  for (const auto& l : labels) {
    bool g_ok = false;
    for (const auto& z : inst.g.at(l))
      if (cone_contains(inst.z_plus, vec_neg(z))) g_ok = true;
    if (g_ok && point_set_contains(inst.h.at(l), zero_vec(inst.dim_w)))
      feasible.push_back(l);
  }
  if (!feasible.empty()) {
    std::vector<EfficiencyWitness> expected;
    for (const auto& l : feasible)
      for (const auto& y : inst.f.at(l)) {
        bool dominated = false;
        for (const auto& fl : feasible)
          for (const auto& v : inst.f.at(fl))
            if (strictly_inside(inst.y_plus, vec_sub(y, v))) dominated = true;
        if (!dominated) expected.push_back({l, y});
      }
    if (expected != weakly_efficient(inst))
      disagree(inst, "weak efficiency mismatch");
    rep.weak_efficiency_checked = true;
  }
  rep.weak_efficiency_ok = true;

  // Scale intervals versus dense sampling around every endpoint.
  const Rat half(1, 2);
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      const PointSet A = combine(inst.f, labels[i], labels[j], half);
      for (const auto& x3 : labels) {
        const PointSet& S = inst.f.at(x3);
        const auto taus = tau_interval(A, S, inst.y_plus);
        ++rep.tau_cells;
        std::vector<Rat> samples;
        Rat top(2);
        for (const auto& iv : taus.intervals()) {
          samples.push_back(iv.lo.value);
          if (iv.hi) {
            samples.push_back(iv.hi->value);
            if (cmp(iv.hi->value, top) > 0) top = iv.hi->value + 1;
          }
          if (cmp(iv.lo.value, top) > 0) top = iv.lo.value + 1;
        }
        const std::vector<Rat> endpoints = samples;
        for (const auto& e : endpoints)
          for (int k = 1; k <= 12; ++k) {
            const Rat step = (e + 1) * Rat(k, 100);
            samples.push_back(e + step);
            samples.push_back(e - step);
          }
        for (int k = 1; k <= 64; ++k) samples.push_back(top * Rat(k, 64));
        for (const auto& tau : samples) {
          if (sgn(tau) <= 0) continue;
          ++rep.tau_samples;
          if (direct_tau_containment(A, S, inst.y_plus, tau) !=
              taus.contains(tau))
            disagree(inst, "tau interval mismatch at tau = " + rat_str(tau) +
                               " cell (" + labels[i] + ", " + labels[j] +
                               ", 1/2) x3 = " + x3);
        }
      }
    }
  rep.tau_ok = true;

  const int mdim = inst.dim_y + inst.dim_z + inst.dim_w;
  if (mdim <= 6) {
    const auto rows = system_ii_rows(inst);
    const bool main_has = system_ii_solve(inst, false).has_value();
    const auto oracle_point = enumerate_nonzero_solution(mdim, rows);
    if (main_has != oracle_point.has_value())
      disagree(inst, std::string("system (ii) existence mismatch: simplex ") +
                         (main_has ? "found" : "missed") +
                         ", enumeration " +
                         (oracle_point ? "found" : "missed"));
    rep.system_ii_checked = true;
  }
  rep.system_ii_ok = true;
  return rep;
}

}  // namespace conevex
