#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conevex/setvalued.hpp"

namespace conevex {

// Independent re-derivations of the core decisions, used to cross-validate
// the main implementations on small instances.
struct OracleReport {
  bool pmin_ok = false;
  bool pmax_ok = false;
  bool weak_efficiency_ok = false;
  bool weak_efficiency_checked = false;  // needs a nonempty feasible set
  bool tau_ok = false;
  int tau_cells = 0;
  int tau_samples = 0;
  bool system_ii_ok = false;
  bool system_ii_checked = false;  // multiplier space within enumeration reach

  bool all_ok() const {
    return pmin_ok && pmax_ok && weak_efficiency_ok && tau_ok && system_ii_ok;
  }
};

// Ray enumeration for homogeneous systems { v : rows . v >= 0 }: returns a
// nonzero solution found through the lineality space or the extreme-ray
// subsets, independent of the simplex path.
std::optional<Vec> enumerate_nonzero_solution(int dim,
                                              const std::vector<Vec>& rows);

// Runs every oracle against the main implementations. Requires dims <= 3 and
// at most 5 domain points; throws OracleDisagreement with the serialized
// instance on any mismatch.
OracleReport brute_oracles(const ProblemInstance& inst);

}  // namespace conevex
