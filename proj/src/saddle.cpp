#include "conevex/saddle.hpp"

#include <algorithm>

#include "conevex/error.hpp"

namespace conevex {

LinearOperator zero_operator(int out_dim, int in_dim) {
  LinearOperator op;
  op.out_dim = out_dim;
  op.in_dim = in_dim;
  op.rows.assign(static_cast<std::size_t>(out_dim), zero_vec(in_dim));
  return op;
}

Vec apply(const LinearOperator& op, const Vec& v) {
  if (static_cast<int>(v.size()) != op.in_dim)
    fail(ErrorCode::DimensionMismatch, "operator applied to wrong length");
  Vec out = zero_vec(op.out_dim);
  for (int i = 0; i < op.out_dim; ++i) out[i] = dot(op.rows[i], v);
  return out;
}

bool operator_is_positive(const LinearOperator& s, const PolyhedralCone& z_plus,
                          const PolyhedralCone& y_plus) {
  if (s.in_dim != z_plus.ambient_dim || s.out_dim != y_plus.ambient_dim)
    fail(ErrorCode::DimensionMismatch, "operator vs cone dimensions");
  for (const auto& g : z_plus.generators)
    if (!cone_contains(y_plus, apply(s, g))) return false;
  return true;
}

PointSet lagrangian_value(const ProblemInstance& inst, const std::string& label,
                          const OperatorPair& pair) {
  if (pair.S.in_dim != inst.dim_z || pair.S.out_dim != inst.dim_y ||
      pair.T.in_dim != inst.dim_w || pair.T.out_dim != inst.dim_y)
    fail(ErrorCode::DimensionMismatch, "operator pair vs instance dimensions");
  std::vector<Vec> out;
  for (const auto& y : inst.f.at(label))
    for (const auto& z : inst.g.at(label))
      for (const auto& w : inst.h.at(label))
        out.push_back(vec_add(vec_add(y, apply(pair.S, z)), apply(pair.T, w)));
  return make_point_set(std::move(out));
}

namespace {

PointSet ground_lagrangian_union(const ProblemInstance& inst,
                                 const OperatorPair& pair) {
  PointSet all;
  for (const auto& l : inst.sorted_labels())
    all = point_set_union(all, lagrangian_value(inst, l, pair));
  return all;
}

bool g_within_neg_cone(const ProblemInstance& inst, const std::string& label) {
  for (const auto& z : inst.g.at(label))
    if (!cone_contains(inst.z_plus, vec_neg(z))) return false;
  return true;
}

bool h_is_zero_singleton(const ProblemInstance& inst,
                         const std::string& label) {
  const auto& img = inst.h.at(label);
  return img.size() == 1 && vec_is_zero(img.front());
}

}  // namespace

SaddleCheckReport vector_saddle_check(const ProblemInstance& inst,
                                      const std::string& xbar,
                                      const OperatorPair& pair) {
  if (!operator_is_positive(pair.S, inst.z_plus, inst.y_plus))
    fail(ErrorCode::NonPositiveOperator, "S does not map Z_plus into Y_plus");

  SaddleCheckReport rep;
  rep.condition_ii =
      g_within_neg_cone(inst, xbar) && h_is_zero_singleton(inst, xbar);

  const PointSet minimal = pmin(ground_lagrangian_union(inst, pair), inst.y_plus);
  const PointSet& fx = inst.f.at(xbar);
  const PointSet& gx = inst.g.at(xbar);

  bool found_pair = false;
  for (const auto& ybar : fx) {
    if (!point_set_contains(minimal, ybar)) continue;
    if (!rep.condition_i) {
      rep.condition_i = true;
      rep.ybar = ybar;  // first minimal anchor, kept if no joint pair exists
    }
    for (const auto& zbar : gx) {
      const Vec shift = vec_add(ybar, apply(pair.S, zbar));
      bool blocked = false;
      for (const auto& y : fx)
        if (cone_contains_interior(inst.y_plus, vec_sub(y, shift))) {
          blocked = true;
          break;
        }
      if (!blocked) {
        rep.condition_iii = true;
        rep.ybar = ybar;
        rep.zbar = zbar;
        found_pair = true;
        break;
      }
    }
    if (found_pair) break;
  }
  if (rep.ybar.empty() && !fx.empty()) rep.ybar = fx.front();
  if (rep.zbar.empty() && !gx.empty()) rep.zbar = gx.front();
  rep.is_saddle = rep.condition_i && rep.condition_ii && rep.condition_iii;
  return rep;
}

OperatorPair construct_saddle_operators(const ProblemInstance& inst,
                                        const Multipliers& m, const Vec& y0) {
  if (!cone_contains_interior(inst.y_plus, y0))
    fail(ErrorCode::NotInterior, "y0 must be an interior point of Y_plus");
  if (cmp(dot(m.xi, y0), Rat(1)) != 0)
    fail(ErrorCode::NotNormalized, "xi(y0) must equal 1");
  OperatorPair pair;
  pair.S = zero_operator(inst.dim_y, inst.dim_z);
  pair.T = zero_operator(inst.dim_y, inst.dim_w);
  for (int i = 0; i < inst.dim_y; ++i) {
    for (int j = 0; j < inst.dim_z; ++j) pair.S.rows[i][j] = y0[i] * m.eta[j];
    for (int j = 0; j < inst.dim_w; ++j) pair.T.rows[i][j] = y0[i] * m.zeta[j];
  }
  return pair;
}

namespace {

// Multipliers for the shifted system: <y - ybar, xi> + <z, eta> + <w, zeta>
// nonnegative over the ground domain, with xi in Y_plus^* nonzero.
std::optional<Multipliers> shifted_multipliers(const ProblemInstance& inst,
                                               const Vec& ybar) {
  ProblemInstance shifted = inst;
  for (auto& [label, img] : shifted.f.images) {
    std::vector<Vec> moved;
    for (const auto& y : img) moved.push_back(vec_sub(y, ybar));
    img = make_point_set(std::move(moved));
  }
  return system_ii_solve(shifted, true);
}

std::vector<std::string> efficient_label_list(
    const std::vector<EfficiencyWitness>& witnesses) {
  std::vector<std::string> out;
  for (const auto& w : witnesses)
    if (out.empty() || out.back() != w.label) out.push_back(w.label);
  return out;
}

// First pmax element of f(xbar) that also witnesses weak efficiency.
std::optional<Vec> anchor_point(const ProblemInstance& inst,
                                const std::vector<EfficiencyWitness>& witnesses,
                                const std::string& xbar) {
  PointSet own_witnesses;
  for (const auto& w : witnesses)
    if (w.label == xbar) own_witnesses.push_back(w.ybar);
  own_witnesses = make_point_set(std::move(own_witnesses));
  for (const auto& y : pmax(inst.f.at(xbar), inst.y_plus))
    if (point_set_contains(own_witnesses, y)) return y;
  return std::nullopt;
}

Vec normalized_interior_point(const ProblemInstance& inst, const Vec& xi) {
  Vec y0 = zero_vec(inst.dim_y);
  for (const auto& g : inst.y_plus.generators) y0 = vec_add(y0, g);
  const Rat c = dot(xi, y0);
  // Positive by the dual-pairing positivity of interior points; a zero value
  // would mean xi vanishes on an interior point.
  if (sgn(c) <= 0)
    fail(ErrorCode::NotNormalized, "xi non-positive on the interior point");
  return vec_scale(Rat(1) / c, y0);
}

}  // namespace

std::optional<SaddleConstruction> construct_vector_saddle(
    const ProblemInstance& inst, const std::string& xbar) {
  const auto witnesses = weakly_efficient(inst);
  const auto labels = efficient_label_list(witnesses);
  if (std::find(labels.begin(), labels.end(), xbar) == labels.end())
    fail(ErrorCode::NotWeaklyEfficient,
         "label '" + xbar + "' is not weakly efficient");
  if (!g_within_neg_cone(inst, xbar) || !h_is_zero_singleton(inst, xbar))
    fail(ErrorCode::HypothesisViolation,
         "side conditions g(xbar) within -Z_plus and h(xbar) = {O} fail");

  const auto ybar = anchor_point(inst, witnesses, xbar);
  if (!ybar) return std::nullopt;
  const auto m = shifted_multipliers(inst, *ybar);
  if (!m) return std::nullopt;

  SaddleConstruction sc;
  sc.label = xbar;
  sc.ybar = *ybar;
  sc.multipliers = *m;
  sc.y0 = normalized_interior_point(inst, m->xi);
  sc.pair = construct_saddle_operators(inst, sc.multipliers, sc.y0);
  sc.check = vector_saddle_check(inst, xbar, sc.pair);
  for (const auto& z : inst.g.at(xbar))
    if (vec_is_zero(apply(sc.pair.S, z))) {
      sc.zero_in_s_image = true;
      break;
    }
  return sc;
}

namespace {

bool theorem_hypotheses_hold(const ProblemInstance& inst,
                             const AlphaGrid& grid) {
  if (inst.dim_w != 0) return false;
  if (!slater_holds(inst)) return false;
  if (!is_preconvexlike(inst.f, inst.y_plus, grid).verified_on_grid)
    return false;
  if (!is_preconvexlike(inst.g, inst.z_plus, grid).verified_on_grid)
    return false;
  return is_preaffine(inst.h, grid).verified_on_grid;
}

}  // namespace

VectorSaddleTheoremReport verify_vector_saddle_theorems(
    const ProblemInstance& inst, const AlphaGrid& grid) {
  VectorSaddleTheoremReport rep;
  rep.hypothesis_violated = !theorem_hypotheses_hold(inst, grid);

  const auto witnesses = weakly_efficient(inst);
  for (const auto& label : efficient_label_list(witnesses)) {
    VectorSaddleTheoremReport::Candidate cand;
    cand.label = label;
    cand.side_conditions =
        g_within_neg_cone(inst, label) && h_is_zero_singleton(inst, label);
    cand.anchor_found = anchor_point(inst, witnesses, label).has_value();
    if (!cand.side_conditions || !cand.anchor_found) {
      cand.skipped = true;
      rep.candidates.push_back(std::move(cand));
      continue;
    }
    const auto sc = construct_vector_saddle(inst, label);
    if (sc) {
      cand.constructed = true;
      cand.saddle_ok = sc->check.is_saddle;
      cand.zero_in_s_image = sc->zero_in_s_image;
    }
    if (!cand.constructed || !cand.saddle_ok || !cand.zero_in_s_image)
      rep.forward_ok = false;
    rep.candidates.push_back(std::move(cand));
  }

  // Saddle points imply weak efficiency: probe the zero pair at every
  // feasible label (the zero map trivially has O in S(g(xbar))).
  const OperatorPair zero_pair{zero_operator(inst.dim_y, inst.dim_z),
                               zero_operator(inst.dim_y, inst.dim_w)};
  const auto efficient = efficient_label_list(witnesses);
  for (const auto& label : feasible_set(inst).labels) {
    const auto check = vector_saddle_check(inst, label, zero_pair);
    if (check.is_saddle &&
        std::find(efficient.begin(), efficient.end(), label) == efficient.end())
      rep.backward_ok = false;
  }
  rep.ok = !rep.hypothesis_violated && rep.forward_ok && rep.backward_ok;
  return rep;
}

std::vector<Rat> scalar_lagrangian(const ProblemInstance& inst, const Vec& xi,
                                   const std::string& label, const Vec& eta,
                                   const Vec& zeta) {
  if (static_cast<int>(xi.size()) != inst.dim_y ||
      static_cast<int>(eta.size()) != inst.dim_z ||
      static_cast<int>(zeta.size()) != inst.dim_w)
    fail(ErrorCode::DimensionMismatch, "multiplier lengths vs instance");
  std::vector<Rat> out;
  for (const auto& y : inst.f.at(label))
    for (const auto& z : inst.g.at(label))
      for (const auto& w : inst.h.at(label))
        out.push_back(dot(xi, y) + dot(eta, z) + dot(zeta, w));
  return make_rat_set(std::move(out));
}

ScalarSaddleReport scalar_saddle_check(const ProblemInstance& inst,
                                       const Vec& xi, const std::string& xbar,
                                       const Vec& eta, const Vec& zeta) {
  if (vec_is_zero(xi) || !cone_contains(dual_cone(inst.y_plus), xi))
    fail(ErrorCode::InvalidMultipliers, "xi must be nonzero in Y_plus^*");
  if (!cone_contains(dual_cone(inst.z_plus), eta))
    fail(ErrorCode::InvalidMultipliers, "eta must lie in Z_plus^*");

  ScalarSaddleReport rep;
  rep.feasible_label = label_is_feasible(inst, xbar);

  const auto own = scalar_lagrangian(inst, xi, xbar, eta, zeta);
  const Rat own_max = own.back();  // value sets are sorted ascending
  rep.right_ok = true;
  for (const auto& l : feasible_set(inst).labels) {
    const auto vals = scalar_lagrangian(inst, xi, l, eta, zeta);
    if (cmp(vals.front(), own_max) < 0) {
      rep.right_ok = false;
      break;
    }
  }

  const auto eta_vals = apply_functional(inst.g, xbar, eta);
  rep.eta_annihilates = eta_vals.size() == 1 && sgn(eta_vals.front()) == 0;
  const auto zeta_vals = apply_functional(inst.h, xbar, zeta);
  rep.zeta_annihilates = zeta_vals.size() == 1 && sgn(zeta_vals.front()) == 0;
  rep.g_within_neg_cone = g_within_neg_cone(inst, xbar);
  rep.h_only_zero = h_is_zero_singleton(inst, xbar);
  rep.left_ok = rep.eta_annihilates && rep.zeta_annihilates &&
                rep.g_within_neg_cone && rep.h_only_zero;
  rep.is_saddle = rep.feasible_label && rep.left_ok && rep.right_ok;
  return rep;
}

std::optional<Multipliers> construct_scalar_multipliers(
    const ProblemInstance& inst, const std::string& xbar) {
  const auto sc = construct_vector_saddle(inst, xbar);
  if (!sc) return std::nullopt;
  // eta = xi o S and zeta = xi o T, contracted entrywise.
  Multipliers out;
  out.xi = sc->multipliers.xi;
  out.eta = zero_vec(inst.dim_z);
  out.zeta = zero_vec(inst.dim_w);
  for (int j = 0; j < inst.dim_z; ++j)
    for (int i = 0; i < inst.dim_y; ++i)
      out.eta[j] += out.xi[i] * sc->pair.S.rows[i][j];
  for (int j = 0; j < inst.dim_w; ++j)
    for (int i = 0; i < inst.dim_y; ++i)
      out.zeta[j] += out.xi[i] * sc->pair.T.rows[i][j];
  return out;
}

ScalarSaddleTheoremReport verify_scalar_saddle_theorems(
    const ProblemInstance& inst, const AlphaGrid& grid) {
  ScalarSaddleTheoremReport rep;
  rep.hypothesis_violated = !theorem_hypotheses_hold(inst, grid);

  const auto witnesses = weakly_efficient(inst);
  const auto efficient = efficient_label_list(witnesses);
  std::vector<Multipliers> sampled;

  for (const auto& label : efficient) {
    ScalarSaddleTheoremReport::Candidate cand;
    cand.label = label;
    cand.side_conditions =
        g_within_neg_cone(inst, label) && h_is_zero_singleton(inst, label);
    if (!cand.side_conditions || !anchor_point(inst, witnesses, label)) {
      cand.skipped = true;
      rep.candidates.push_back(std::move(cand));
      continue;
    }
    const auto m = construct_scalar_multipliers(inst, label);
    if (m) {
      cand.constructed = true;
      sampled.push_back(*m);
      const auto check = scalar_saddle_check(inst, m->xi, label, m->eta, m->zeta);
      cand.saddle_ok = check.is_saddle;
      cand.eta_annihilates = check.eta_annihilates;
    }
    if (!cand.constructed || !cand.saddle_ok || !cand.eta_annihilates)
      rep.forward_ok = false;
    rep.candidates.push_back(std::move(cand));
  }

  // Saddle triples imply weak efficiency: constructed multipliers plus
  // dual-cone generator candidates, probed at every feasible label.
  const PolyhedralCone y_dual = dual_cone(inst.y_plus);
  const PolyhedralCone z_dual = dual_cone(inst.z_plus);
  std::vector<Vec> eta_candidates{zero_vec(inst.dim_z)};
  eta_candidates.insert(eta_candidates.end(), z_dual.generators.begin(),
                        z_dual.generators.end());
  for (const auto& xi : y_dual.generators)
    for (const auto& eta : eta_candidates)
      sampled.push_back(Multipliers{xi, eta, zero_vec(inst.dim_w)});

  for (const auto& m : sampled) {
    if (vec_is_zero(m.xi)) continue;
    for (const auto& label : feasible_set(inst).labels) {
      ++rep.sampled_triples;
      const auto check = scalar_saddle_check(inst, m.xi, label, m.eta, m.zeta);
      if (check.is_saddle) {
        const bool eff =
            std::find(efficient.begin(), efficient.end(), label) != efficient.end();
        if (!eff || !check.eta_annihilates) rep.backward_ok = false;
      }
    }
  }
  rep.ok = !rep.hypothesis_violated && rep.forward_ok && rep.backward_ok;
  return rep;
}

}  // namespace conevex
