#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conevex/rational.hpp"

namespace conevex {

// Subsets of the open half-line (0, +inf) arising as the feasible scale
// factors of containment problems: finite unions of disjoint intervals with
// rational endpoints, each endpoint open or closed, upper endpoints possibly
// absent (unbounded).
struct TauBound {
  Rat value;
  bool closed = false;
};

struct TauInterval {
  TauBound lo;                  // lo.value == 0 implies open
  std::optional<TauBound> hi;   // nullopt = unbounded above
};

class TauIntervalSet {
 public:
  static TauIntervalSet empty_set();
  static TauIntervalSet full_set();  // all of (0, inf)
  static TauIntervalSet single(TauInterval iv);
  static TauIntervalSet point(const Rat& tau);

  bool is_empty() const { return intervals_.empty(); }
  bool contains(const Rat& tau) const;
  const std::vector<TauInterval>& intervals() const { return intervals_; }

  TauIntervalSet unite(const TauIntervalSet& other) const;
  TauIntervalSet intersect(const TauIntervalSet& other) const;

  // Deterministic representative: midpoint of the first interval, or its
  // lower endpoint plus one when the interval is unbounded above.
  std::optional<Rat> witness() const;

  std::string str() const;

 private:
  void normalize();
  std::vector<TauInterval> intervals_;  // sorted, disjoint, non-adjacent
};

}  // namespace conevex
