#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conevex/intervals.hpp"
#include "conevex/setvalued.hpp"

namespace conevex {

// Sampling grid for the alpha quantifier: { k/N : 1 <= k <= N-1 }. Alpha is
// sampled; the scale and witness-label quantifiers are decided exactly, so
// refutations are certificates while verification is grid-bounded.
struct AlphaGrid {
  explicit AlphaGrid(int n);
  int denominator;

  // Coarse-to-fine scan: ordered by lowest-terms denominator, then numerator
  // (for N=8: 1/2, 1/4, 3/4, 1/8, 3/8, 5/8, 7/8).
  std::vector<Rat> scan_samples() const;
};

enum class CellState { Verified, Refuted, Skipped };

const char* cell_state_name(CellState s);

struct CellKey {
  std::string x1, x2;
  Rat alpha;

  bool operator==(const CellKey&) const = default;
};

struct CellOutcome {
  CellKey key;
  CellState state = CellState::Verified;
  std::string witness_x3;  // present when verified
  Rat tau;                 // recorded witness scale when verified
};

struct ConvexityVerdict {
  bool verified_on_grid = true;
  std::vector<CellOutcome> cells;      // scan order; ends at the refutation
  std::optional<CellKey> certificate;  // first refuted cell
  int skipped = 0;
};

// Exact solution of { tau > 0 : A subseteq tau*S + C } as a finite union of
// rational intervals.
TauIntervalSet tau_interval(const PointSet& A, const PointSet& S,
                            const PolyhedralCone& C);

// Equality variant { tau > 0 : A subseteq tau*S } used for affine-style maps.
TauIntervalSet tau_equality_interval(const PointSet& A, const PointSet& S);

ConvexityVerdict is_preconvexlike(const FiniteSetMap& f,
                                  const PolyhedralCone& c,
                                  const AlphaGrid& grid);
ConvexityVerdict is_convexlike(const FiniteSetMap& f, const PolyhedralCone& c,
                               const AlphaGrid& grid);
ConvexityVerdict is_preaffine(const FiniteSetMap& f, const AlphaGrid& grid);

// Cone-convexity reads domain coordinates: a cell is decidable only when the
// combined point is itself a domain point; other cells are skipped.
ConvexityVerdict is_cone_convex(const FiniteSetMap& f, const PolyhedralCone& c,
                                const AlphaGrid& grid,
                                const std::vector<DomainPoint>& domain);

}  // namespace conevex
