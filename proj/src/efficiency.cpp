#include "conevex/efficiency.hpp"

#include <algorithm>

#include "conevex/error.hpp"

namespace conevex {

PointSet pmin(const PointSet& a, const PolyhedralCone& c) {
  PointSet out;
  for (const auto& y : a) {
    bool dominated = false;
    for (const auto& other : a)
      if (cone_contains_interior(c, vec_sub(y, other))) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(y);
  }
  return out;
}

PointSet pmax(const PointSet& a, const PolyhedralCone& c) {
  PointSet out;
  for (const auto& y : a) {
    bool dominated = false;
    for (const auto& other : a)
      if (cone_contains_interior(c, vec_sub(other, y))) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(y);
  }
  return out;
}

namespace {

FeasibleSet nonempty_feasible(const ProblemInstance& inst) {
  FeasibleSet d = feasible_set(inst);
  if (d.labels.empty())
    fail(ErrorCode::EmptyFeasibleSet, "no feasible domain point");
  return d;
}

}  // namespace

std::vector<EfficiencyWitness> weakly_efficient(const ProblemInstance& inst) {
  const FeasibleSet d = nonempty_feasible(inst);
  const PointSet values = image_union(inst.f, d.labels);
  std::vector<EfficiencyWitness> out;
  for (const auto& l : d.labels)
    for (const auto& y : inst.f.at(l)) {
      bool dominated = false;
      for (const auto& v : values)
        if (cone_contains_interior(inst.y_plus, vec_sub(y, v))) {
          dominated = true;
          break;
        }
      if (!dominated) out.push_back({l, y});
    }
  return out;
}

bool lemma31_check(const ProblemInstance& inst) {
  const FeasibleSet d = nonempty_feasible(inst);
  const PointSet minimal = pmin(image_union(inst.f, d.labels), inst.y_plus);
  std::vector<std::string> by_pmin;
  for (const auto& l : d.labels)
    for (const auto& y : inst.f.at(l))
      if (point_set_contains(minimal, y)) {
        by_pmin.push_back(l);
        break;
      }
  std::vector<std::string> by_definition;
  for (const auto& w : weakly_efficient(inst))
    if (by_definition.empty() || by_definition.back() != w.label)
      by_definition.push_back(w.label);
  return by_pmin == by_definition;
}

std::optional<Vec> is_scalar_optimal(const ProblemInstance& inst, const Vec& xi,
                                     const std::string& xbar) {
  if (vec_is_zero(xi)) fail(ErrorCode::ZeroFunctional, "xi = 0");
  if (!cone_contains(dual_cone(inst.y_plus), xi))
    fail(ErrorCode::ValidationError, "xi outside the dual cone of Y_plus");
  const FeasibleSet d = feasible_set(inst);
  if (!d.contains(xbar))
    fail(ErrorCode::InfeasibleLabel, "label '" + xbar + "' is not feasible");

  const PointSet& own = inst.f.at(xbar);
  Vec ybar = own.front();
  Rat best = dot(xi, ybar);
  for (const auto& y : own) {
    const Rat v = dot(xi, y);
    if (cmp(v, best) < 0) {
      best = v;
      ybar = y;
    }
  }
  for (const auto& l : d.labels)
    for (const auto& y : inst.f.at(l))
      if (cmp(dot(xi, y), best) < 0) return std::nullopt;
  return ybar;
}

bool slater_holds(const ProblemInstance& inst) {
  const int dz = inst.dim_z, dw = inst.dim_w;
  ConeFeasibilityProblem p;
  p.variable_dim = dz + dw;
  for (const auto& gz : inst.z_plus.generators) {
    Vec r = zero_vec(dz + dw);
    for (int i = 0; i < dz; ++i) r[i] = gz[i];
    p.homogeneous_inequalities.push_back(std::move(r));
  }
  for (const auto& pt : inst.domain)
    for (const auto& z : inst.g.at(pt.label))
      for (const auto& w : inst.h.at(pt.label)) {
        Vec r = zero_vec(dz + dw);
        for (int i = 0; i < dz; ++i) r[i] = z[i];
        for (int i = 0; i < dw; ++i) r[dz + i] = w[i];
        p.homogeneous_inequalities.push_back(std::move(r));
      }
  return !cone_nonzero_point(p).has_value();
}

namespace {

bool anchored_certificate_valid(const ProblemInstance& inst,
                                const FeasibleSet& d, const Vec& xi,
                                const Vec& ybar) {
  if (vec_is_zero(xi)) return false;
  if (!cone_contains(dual_cone(inst.y_plus), xi)) return false;
  const Rat base = dot(xi, ybar);
  for (const auto& l : d.labels)
    for (const auto& y : inst.f.at(l))
      if (cmp(dot(xi, y), base) < 0) return false;
  return true;
}

}  // namespace

std::optional<ScalarizationCertificate> scalarize(const ProblemInstance& inst,
                                                  const std::string& xbar) {
  const FeasibleSet d = feasible_set(inst);
  if (!d.contains(xbar))
    fail(ErrorCode::InfeasibleLabel, "label '" + xbar + "' is not feasible");

  const PolyhedralCone dual = dual_cone(inst.y_plus);
  for (const auto& ybar : pmin(inst.f.at(xbar), inst.y_plus)) {
    // Cheap pass: dual-cone generators as candidate functionals.
    for (const auto& xi : dual.generators)
      if (anchored_certificate_valid(inst, d, xi, ybar))
        return ScalarizationCertificate{xi, xbar, ybar};
    // Exact pass: solve for a nonzero xi with <y - ybar, xi> >= 0 over the
    // feasible images.
    ConeFeasibilityProblem p;
    p.variable_dim = inst.dim_y;
    for (const auto& gy : inst.y_plus.generators)
      p.homogeneous_inequalities.push_back(gy);
    for (const auto& l : d.labels)
      for (const auto& y : inst.f.at(l))
        p.homogeneous_inequalities.push_back(vec_sub(y, ybar));
    if (const auto xi = cone_nonzero_point(p))
      if (anchored_certificate_valid(inst, d, *xi, ybar))
        return ScalarizationCertificate{*xi, xbar, ybar};
  }
  return std::nullopt;
}

ScalarizationReport verify_scalarization(const ProblemInstance& inst,
                                         const AlphaGrid& grid) {
  ScalarizationReport rep;
  rep.slater = slater_holds(inst);
  const auto f_check = is_preconvexlike(inst.f, inst.y_plus, grid);
  const auto g_check = is_preconvexlike(inst.g, inst.z_plus, grid);
  const auto h_check = is_preaffine(inst.h, grid);
  rep.hypothesis_violated = !rep.slater || !f_check.verified_on_grid ||
                            !g_check.verified_on_grid ||
                            !h_check.verified_on_grid;

  for (const auto& w : weakly_efficient(inst))
    if (rep.efficient_labels.empty() || rep.efficient_labels.back() != w.label)
      rep.efficient_labels.push_back(w.label);
  for (const auto& l : feasible_set(inst).labels)
    if (auto cert = scalarize(inst, l)) {
      rep.certified_labels.push_back(l);
      rep.certificates.push_back(std::move(*cert));
    }
  rep.sets_equal = rep.efficient_labels == rep.certified_labels;
  return rep;
}

}  // namespace conevex
