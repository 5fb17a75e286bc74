#pragma once

#include <map>
#include <string>
#include <vector>

#include "conevex/cone.hpp"
#include "conevex/rational.hpp"

namespace conevex {

struct DomainPoint {
  std::string label;
  Vec coords;

  bool operator==(const DomainPoint&) const = default;
};

// Finite set-valued map: each domain label owns a nonempty finite point set
// in Q^codomain_dim. Image sets are canonical (sorted, deduplicated).
struct FiniteSetMap {
  int codomain_dim = 0;
  std::map<std::string, PointSet> images;

  bool operator==(const FiniteSetMap&) const = default;

  const PointSet& at(const std::string& label) const;
};

// The optimization data: minimize f over the domain in the Y-order subject
// to g(x) meeting -Z_plus and h(x) containing the origin. Zero-dimensional
// Z/W spaces are first class; their cones are the trivial cone in Q^0.
struct ProblemInstance {
  int dim_x = 0, dim_y = 0, dim_z = 0, dim_w = 0;
  PolyhedralCone y_plus, z_plus, w_plus;
  std::vector<DomainPoint> domain;
  FiniteSetMap f, g, h;

  bool operator==(const ProblemInstance&) const = default;

  // Labels in lexicographic order; all label scans use this order.
  std::vector<std::string> sorted_labels() const;
  const DomainPoint* find_point(const std::string& label) const;
};

struct FeasibleSet {
  std::vector<std::string> labels;  // sorted

  bool contains(const std::string& label) const;
};

// Throws ValidationError when the instance breaks its invariants.
void validate_instance(const ProblemInstance& inst);

PointSet image_union(const FiniteSetMap& f,
                     const std::vector<std::string>& labels);

// { alpha*u + (1-alpha)*v : u in f(x1), v in f(x2) }, 0 < alpha < 1.
PointSet combine(const FiniteSetMap& f, const std::string& x1,
                 const std::string& x2, const Rat& alpha);

std::vector<Rat> apply_functional(const FiniteSetMap& f,
                                  const std::string& label, const Vec& ell);

FeasibleSet feasible_set(const ProblemInstance& inst);

bool label_is_feasible(const ProblemInstance& inst, const std::string& label);

}  // namespace conevex
