#pragma once

#include <optional>
#include <vector>

#include "conevex/rational.hpp"

namespace conevex {

// Polyhedral convex cone with both representations kept in sync:
//   cone = { sum lambda_i g_i : lambda >= 0 } = { v : n_j . v >= 0 for all j }.
// Generators and facet normals are stored as canonical rays (coprime integer
// entries, positive scale) in lexicographic order. Cones built through
// cone_from_generators are validated full-dimensional; duals of
// full-dimensional cones may be lower-dimensional and carry an exact but
// possibly redundant facet list.
struct PolyhedralCone {
  int ambient_dim = 0;
  std::vector<Vec> generators;
  std::vector<Vec> facet_normals;

  bool operator==(const PolyhedralCone&) const = default;
};

// Facet normals are obtained by Fourier-Motzkin projection of
// { (lambda, v) : v = sum lambda_i g_i, lambda >= 0 } onto v, followed by
// exact redundancy elimination. Throws ZeroGenerator / NotFullDimensional.
PolyhedralCone cone_from_generators(int ambient_dim, std::vector<Vec> gens);

PolyhedralCone orthant_cone(int dim);

bool cone_contains(const PolyhedralCone& c, const Vec& v);
bool cone_contains_interior(const PolyhedralCone& c, const Vec& v);

// Swaps the two representations; exact for cones whose lists describe the
// same set, which construction guarantees.
PolyhedralCone dual_cone(const PolyhedralCone& c);

bool is_pointed(const PolyhedralCone& c);

// Set-level equality by mutual generator membership.
bool cone_same_set(const PolyhedralCone& a, const PolyhedralCone& b);

// Homogeneous feasibility: every row r demands r . v >= 0.
struct ConeFeasibilityProblem {
  int variable_dim = 0;
  std::vector<Vec> homogeneous_inequalities;
};

// First nonzero solution in the documented direction scan (coordinate index
// ascending, + before -), or nullopt when the solution cone is {0}.
std::optional<Vec> cone_nonzero_point(const ConeFeasibilityProblem& p);

// Same, restricted to a subset of scan coordinates.
std::optional<Vec> cone_nonzero_point(const ConeFeasibilityProblem& p,
                                      const std::vector<int>& scan_coords);

}  // namespace conevex
