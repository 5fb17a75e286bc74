#include "conevex/alternative.hpp"

#include "conevex/error.hpp"

namespace conevex {

// Rows over the stacked coordinates (xi | eta | zeta).
std::vector<Vec> system_ii_rows(const ProblemInstance& inst) {
  const int dy = inst.dim_y, dz = inst.dim_z, dw = inst.dim_w;
  const int dim = dy + dz + dw;
  std::vector<Vec> rows;
  // xi in the dual cone of Y_plus: one row per generator of Y_plus.
  for (const auto& gy : inst.y_plus.generators) {
    Vec r = zero_vec(dim);
    for (int i = 0; i < dy; ++i) r[i] = gy[i];
    rows.push_back(std::move(r));
  }
  for (const auto& gz : inst.z_plus.generators) {
    Vec r = zero_vec(dim);
    for (int i = 0; i < dz; ++i) r[dy + i] = gz[i];
    rows.push_back(std::move(r));
  }
  for (const auto& p : inst.domain) {
    for (const auto& y : inst.f.at(p.label))
      for (const auto& z : inst.g.at(p.label))
        for (const auto& w : inst.h.at(p.label)) {
          Vec r = zero_vec(dim);
          for (int i = 0; i < dy; ++i) r[i] = y[i];
          for (int i = 0; i < dz; ++i) r[dy + i] = z[i];
          for (int i = 0; i < dw; ++i) r[dy + dz + i] = w[i];
          rows.push_back(std::move(r));
        }
  }
  return rows;
}

namespace {

Multipliers split(const ProblemInstance& inst, const Vec& x) {
  Multipliers m;
  m.xi.assign(x.begin(), x.begin() + inst.dim_y);
  m.eta.assign(x.begin() + inst.dim_y, x.begin() + inst.dim_y + inst.dim_z);
  m.zeta.assign(x.begin() + inst.dim_y + inst.dim_z, x.end());
  return m;
}

}  // namespace

std::vector<std::string> system_i_solutions(const ProblemInstance& inst) {
  std::vector<std::string> out;
  for (const auto& l : inst.sorted_labels()) {
    bool f_hits = false;
    for (const auto& y : inst.f.at(l))
      if (cone_contains_interior(inst.y_plus, vec_neg(y))) {
        f_hits = true;
        break;
      }
    if (f_hits && label_is_feasible(inst, l)) out.push_back(l);
  }
  return out;
}

std::optional<Multipliers> system_ii_solve(const ProblemInstance& inst,
                                           bool require_xi_nonzero) {
  ConeFeasibilityProblem p;
  p.variable_dim = inst.dim_y + inst.dim_z + inst.dim_w;
  p.homogeneous_inequalities = system_ii_rows(inst);
  std::optional<Vec> x;
  if (require_xi_nonzero) {
    std::vector<int> xi_coords;
    for (int j = 0; j < inst.dim_y; ++j) xi_coords.push_back(j);
    x = cone_nonzero_point(p, xi_coords);
  } else {
    x = cone_nonzero_point(p);
  }
  if (!x) return std::nullopt;
  return split(inst, *x);
}

bool multipliers_satisfy_system(const ProblemInstance& inst,
                                const Multipliers& m) {
  if (!cone_contains(dual_cone(inst.y_plus), m.xi)) return false;
  if (!cone_contains(dual_cone(inst.z_plus), m.eta)) return false;
  for (const auto& p : inst.domain)
    for (const auto& y : inst.f.at(p.label))
      for (const auto& z : inst.g.at(p.label))
        for (const auto& w : inst.h.at(p.label)) {
          Rat v = dot(y, m.xi) + dot(z, m.eta) + dot(w, m.zeta);
          if (sgn(v) < 0) return false;
        }
  return true;
}

AlternativeReport verify_alternative(const ProblemInstance& inst,
                                     bool check_hypotheses,
                                     const AlphaGrid& grid) {
  AlternativeReport rep;
  rep.system_i_solutions = system_i_solutions(inst);
  rep.system_ii_solution = system_ii_solve(inst, false);
  rep.xi_nonzero_solution = system_ii_solve(inst, true);
  rep.implication_checks.first =
      !rep.system_i_solutions.empty() || rep.system_ii_solution.has_value();
  rep.implication_checks.second =
      !rep.xi_nonzero_solution.has_value() || rep.system_i_solutions.empty();
  if (check_hypotheses) {
    HypothesisCheck hc;
    hc.f_preconvexlike = is_preconvexlike(inst.f, inst.y_plus, grid);
    hc.g_preconvexlike = is_preconvexlike(inst.g, inst.z_plus, grid);
    hc.h_preaffine = is_preaffine(inst.h, grid);
    hc.violated = !hc.f_preconvexlike.verified_on_grid ||
                  !hc.g_preconvexlike.verified_on_grid ||
                  !hc.h_preaffine.verified_on_grid;
    rep.hypotheses = std::move(hc);
  }
  return rep;
}

}  // namespace conevex
