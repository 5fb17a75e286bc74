#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conevex/alternative.hpp"
#include "conevex/setvalued.hpp"

namespace conevex {

// Minimal / maximal elements of a finite set in the interior order of a cone.
PointSet pmin(const PointSet& a, const PolyhedralCone& c);
PointSet pmax(const PointSet& a, const PolyhedralCone& c);

struct EfficiencyWitness {
  std::string label;
  Vec ybar;

  bool operator==(const EfficiencyWitness&) const = default;
};

// All (feasible label, image point) pairs whose point is not strictly
// dominated by any feasible image value. Throws EmptyFeasibleSet.
std::vector<EfficiencyWitness> weakly_efficient(const ProblemInstance& inst);

// Cross-validates the witness enumeration against the pmin characterization
// of weak efficiency.
bool lemma31_check(const ProblemInstance& inst);

// Some image point of xbar attaining the global scalarized minimum over the
// feasible images, or nullopt when xbar is not optimal for xi.
std::optional<Vec> is_scalar_optimal(const ProblemInstance& inst, const Vec& xi,
                                     const std::string& xbar);

// Slater constraint qualification: no nonzero (eta, zeta) in
// Z_plus^* x W^* keeps every constraint evaluation nonnegative over the
// ground domain.
bool slater_holds(const ProblemInstance& inst);

struct ScalarizationCertificate {
  Vec xi;
  std::string label;
  Vec ybar;
};

// Searches pmin(f(xbar)) anchors: first the dual-cone generators of Y_plus,
// then an exact multiplier solve. Returns the first certificate validated by
// direct substitution.
std::optional<ScalarizationCertificate> scalarize(const ProblemInstance& inst,
                                                  const std::string& xbar);

struct ScalarizationReport {
  std::vector<std::string> efficient_labels;
  std::vector<std::string> certified_labels;
  std::vector<ScalarizationCertificate> certificates;
  bool sets_equal = false;
  bool slater = false;
  bool hypothesis_violated = false;
};

// Both directions of the scalarization equivalence on one instance.
ScalarizationReport verify_scalarization(const ProblemInstance& inst,
                                         const AlphaGrid& grid);

}  // namespace conevex
