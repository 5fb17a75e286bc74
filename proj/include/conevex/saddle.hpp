#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conevex/efficiency.hpp"

namespace conevex {

// Dense rational matrix acting as a linear map Q^in -> Q^out.
struct LinearOperator {
  int out_dim = 0, in_dim = 0;
  std::vector<Vec> rows;  // out_dim rows of length in_dim

  bool operator==(const LinearOperator&) const = default;
};

LinearOperator zero_operator(int out_dim, int in_dim);
Vec apply(const LinearOperator& op, const Vec& v);

// S maps Z into Y positively when every generator of Z_plus lands in Y_plus.
bool operator_is_positive(const LinearOperator& s, const PolyhedralCone& z_plus,
                          const PolyhedralCone& y_plus);

struct OperatorPair {
  LinearOperator S;  // Z -> Y, positive
  LinearOperator T;  // W -> Y

  bool operator==(const OperatorPair&) const = default;
};

// f(x) + S(g(x)) + T(h(x)) as a finite point set.
PointSet lagrangian_value(const ProblemInstance& inst, const std::string& label,
                          const OperatorPair& pair);

struct SaddleCheckReport {
  bool condition_i = false;    // some ybar minimal in the Lagrangian image
  bool condition_ii = false;   // g(xbar) within -Z_plus and h(xbar) = {O}
  bool condition_iii = false;  // f(xbar) - ybar - S(zbar) misses the interior
  Vec ybar, zbar;
  bool is_saddle = false;
};

// Finite decision of the vector saddle-point property for a fixed pair.
SaddleCheckReport vector_saddle_check(const ProblemInstance& inst,
                                      const std::string& xbar,
                                      const OperatorPair& pair);

// Rank-one pair S(z) = eta(z) y0, T(w) = zeta(w) y0 for an interior y0
// normalized to xi(y0) = 1.
OperatorPair construct_saddle_operators(const ProblemInstance& inst,
                                        const Multipliers& m, const Vec& y0);

// Outcome of the multiplier-based construction at one weakly efficient label.
struct SaddleConstruction {
  std::string label;
  Vec ybar;
  Multipliers multipliers;
  Vec y0;
  OperatorPair pair;
  SaddleCheckReport check;
  bool zero_in_s_image = false;
};

// Runs the construction end to end. Throws NotWeaklyEfficient when the label
// is not a weakly efficient solution and HypothesisViolation when its
// constraint images break the side conditions. Returns nullopt when no
// anchor point or no nonzero-xi multiplier exists.
std::optional<SaddleConstruction> construct_vector_saddle(
    const ProblemInstance& inst, const std::string& xbar);

struct VectorSaddleTheoremReport {
  bool hypothesis_violated = false;
  struct Candidate {
    std::string label;
    bool side_conditions = false;
    bool anchor_found = false;
    bool constructed = false;
    bool saddle_ok = false;
    bool zero_in_s_image = false;
    bool skipped = false;
  };
  std::vector<Candidate> candidates;
  bool forward_ok = true;   // construction succeeds and checks out
  bool backward_ok = true;  // every found saddle maps to weak efficiency
  bool ok = false;
};

VectorSaddleTheoremReport verify_vector_saddle_theorems(
    const ProblemInstance& inst, const AlphaGrid& grid);

// { xi(y) + eta(z) + zeta(w) } over the image triples at one label.
std::vector<Rat> scalar_lagrangian(const ProblemInstance& inst, const Vec& xi,
                                   const std::string& label, const Vec& eta,
                                   const Vec& zeta);

struct ScalarSaddleReport {
  bool feasible_label = false;
  bool right_ok = false;          // every feasible value dominates the own set
  bool eta_annihilates = false;   // eta(g(xbar)) = {0}
  bool zeta_annihilates = false;  // zeta(h(xbar)) = {0}
  bool g_within_neg_cone = false;
  bool h_only_zero = false;
  bool left_ok = false;
  bool is_saddle = false;
};

ScalarSaddleReport scalar_saddle_check(const ProblemInstance& inst,
                                       const Vec& xi, const std::string& xbar,
                                       const Vec& eta, const Vec& zeta);

// Composes the rank-one construction with xi, yielding scalar multipliers.
// Throws NotWeaklyEfficient / HypothesisViolation like the vector variant.
std::optional<Multipliers> construct_scalar_multipliers(
    const ProblemInstance& inst, const std::string& xbar);

struct ScalarSaddleTheoremReport {
  bool hypothesis_violated = false;
  struct Candidate {
    std::string label;
    bool side_conditions = false;
    bool constructed = false;
    bool saddle_ok = false;
    bool eta_annihilates = false;
    bool skipped = false;
  };
  std::vector<Candidate> candidates;
  int sampled_triples = 0;
  bool forward_ok = true;
  bool backward_ok = true;
  bool ok = false;
};

ScalarSaddleTheoremReport verify_scalar_saddle_theorems(
    const ProblemInstance& inst, const AlphaGrid& grid);

}  // namespace conevex
