#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conevex/convexity.hpp"
#include "conevex/setvalued.hpp"

namespace conevex {

// Dual variables on Y, Z and W. xi lives in the dual cone of Y_plus and eta
// in the dual cone of Z_plus; zeta is unconstrained.
struct Multipliers {
  Vec xi, eta, zeta;

  bool operator==(const Multipliers&) const = default;

  bool all_zero() const {
    return vec_is_zero(xi) && vec_is_zero(eta) && vec_is_zero(zeta);
  }
};

// Grid verdicts for the hypothesis set of the alternative theorem.
struct HypothesisCheck {
  ConvexityVerdict f_preconvexlike;
  ConvexityVerdict g_preconvexlike;
  ConvexityVerdict h_preaffine;
  bool violated = false;
};

struct AlternativeReport {
  std::vector<std::string> system_i_solutions;
  std::optional<Multipliers> system_ii_solution;
  std::optional<Multipliers> xi_nonzero_solution;
  // [0]: system (i) empty implies a multiplier solution exists.
  // [1]: a solution with xi != 0 implies system (i) is empty.
  std::pair<bool, bool> implication_checks{true, true};
  std::optional<HypothesisCheck> hypotheses;
};

// Labels where the strict primal system is solvable: some f-image in the
// negative interior of Y_plus, some g-image in -Z_plus, and O in h.
std::vector<std::string> system_i_solutions(const ProblemInstance& inst);

// Stacked multiplier feasibility over the ground domain:
//   xi in Y_plus^*, eta in Z_plus^*, and
//   <y,xi> + <z,eta> + <w,zeta> >= 0 per image triple at every label.
// With require_xi_nonzero the nonzero-direction scan runs over the xi
// coordinates only.
std::optional<Multipliers> system_ii_solve(const ProblemInstance& inst,
                                           bool require_xi_nonzero);

AlternativeReport verify_alternative(const ProblemInstance& inst,
                                     bool check_hypotheses,
                                     const AlphaGrid& grid);

// Re-evaluates every constraint row of a claimed solution; used by tests and
// by the suite runner to validate returned multipliers independently.
bool multipliers_satisfy_system(const ProblemInstance& inst,
                                const Multipliers& m);

// The raw homogeneous rows of the stacked multiplier system, exposed so the
// enumeration oracle can decide the identical system by other means.
std::vector<Vec> system_ii_rows(const ProblemInstance& inst);

}  // namespace conevex
