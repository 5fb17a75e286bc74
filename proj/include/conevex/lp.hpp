#pragma once

#include <optional>
#include <vector>

#include "conevex/rational.hpp"

namespace conevex {

// One linear constraint over free variables x in Q^dim:
//   coeffs . x >= rhs   or   coeffs . x == rhs.
struct LinConstraint {
  Vec coeffs;
  Rat rhs;
  bool equality = false;
};

// Exact feasibility: returns some point satisfying every constraint, or
// nullopt when the system is infeasible. The search is a deterministic
// phase-1 simplex (Bland's rule), so the returned point depends only on the
// constraint list, never on timing or platform.
std::optional<Vec> lp_find_feasible(int dim,
                                    const std::vector<LinConstraint>& cons);

}  // namespace conevex
