#pragma once

#include <initializer_list>

#include "conevex/setvalued.hpp"

namespace conevex::testing {

inline Vec V(std::initializer_list<long> coords) {
  Vec out;
  for (long c : coords) out.push_back(Rat(c));
  return out;
}

inline Vec VQ(std::initializer_list<std::pair<long, long>> coords) {
  Vec out;
  for (const auto& [num, den] : coords) out.push_back(rat(num, den));
  return out;
}

// Three-point instance over Y = Q^2 with the first-quadrant order, one
// inequality constraint and no equality constraints. Feasible set {a, b};
// both feasible images are weakly efficient.
inline ProblemInstance inst_a() {
  ProblemInstance inst;
  inst.dim_x = 1;
  inst.dim_y = 2;
  inst.dim_z = 1;
  inst.dim_w = 0;
  inst.y_plus = orthant_cone(2);
  inst.z_plus = orthant_cone(1);
  inst.w_plus = cone_from_generators(0, {});
  inst.domain = {{"a", V({0})}, {"b", V({1})}, {"c", V({2})}};
  inst.f.codomain_dim = 2;
  inst.f.images = {{"a", {V({0, 1})}}, {"b", {V({1, 0})}}, {"c", {V({2, 2})}}};
  inst.g.codomain_dim = 1;
  inst.g.images = {{"a", {V({-1})}}, {"b", {V({0})}}, {"c", {V({1})}}};
  inst.h.codomain_dim = 0;
  inst.h.images = {{"a", {V({})}}, {"b", {V({})}}, {"c", {V({})}}};
  return inst;
}

// Single point whose image lies strictly below the origin, so the strict
// primal system is solvable and no multipliers exist.
inline ProblemInstance inst_b() {
  ProblemInstance inst;
  inst.dim_x = 1;
  inst.dim_y = 2;
  inst.dim_z = 1;
  inst.dim_w = 0;
  inst.y_plus = orthant_cone(2);
  inst.z_plus = orthant_cone(1);
  inst.w_plus = cone_from_generators(0, {});
  inst.domain = {{"a", V({0})}};
  inst.f.codomain_dim = 2;
  inst.f.images = {{"a", {V({-1, -1})}}};
  inst.g.codomain_dim = 1;
  inst.g.images = {{"a", {V({-1})}}};
  inst.h.codomain_dim = 0;
  inst.h.images = {{"a", {V({})}}};
  return inst;
}

// Two labels sharing the two-point image {(0,1),(1,0)}: preconvexlike on any
// grid but not convexlike, the finite analogue of the classical separating
// example.
inline ProblemInstance inst_c() {
  ProblemInstance inst;
  inst.dim_x = 1;
  inst.dim_y = 2;
  inst.dim_z = 1;
  inst.dim_w = 0;
  inst.y_plus = orthant_cone(2);
  inst.z_plus = orthant_cone(1);
  inst.w_plus = cone_from_generators(0, {});
  inst.domain = {{"a", V({0})}, {"b", V({1})}};
  inst.f.codomain_dim = 2;
  inst.f.images = {{"a", {V({0, 1}), V({1, 0})}}, {"b", {V({0, 1}), V({1, 0})}}};
  inst.g.codomain_dim = 1;
  inst.g.images = {{"a", {V({-1})}}, {"b", {V({-1})}}};
  inst.h.codomain_dim = 0;
  inst.h.images = {{"a", {V({})}}, {"b", {V({})}}};
  return inst;
}

}  // namespace conevex::testing
