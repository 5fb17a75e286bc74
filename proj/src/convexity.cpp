#include "conevex/convexity.hpp"

#include <algorithm>

#include "conevex/error.hpp"

namespace conevex {

const char* cell_state_name(CellState s) {
  switch (s) {
    case CellState::Verified: return "verified";
    case CellState::Refuted: return "refuted";
    case CellState::Skipped: return "skipped";
  }
  return "?";
}

AlphaGrid::AlphaGrid(int n) : denominator(n) {
  if (n < 2) fail(ErrorCode::ValidationError, "alpha grid needs N >= 2");
}

std::vector<Rat> AlphaGrid::scan_samples() const {
  std::vector<Rat> out;
  for (int k = 1; k < denominator; ++k) {
    Rat a(k, denominator);
    a.canonicalize();
    out.push_back(std::move(a));
  }
  std::stable_sort(out.begin(), out.end(), [](const Rat& a, const Rat& b) {
    const int cd = cmp(a.get_den(), b.get_den());
    if (cd != 0) return cd < 0;
    return cmp(a.get_num(), b.get_num()) < 0;
  });
  return out;
}

TauIntervalSet tau_interval(const PointSet& A, const PointSet& S,
                            const PolyhedralCone& C) {
  if (A.empty() || S.empty())
    fail(ErrorCode::ValidationError, "tau_interval needs nonempty sets");
  for (const auto& v : A)
    if (static_cast<int>(v.size()) != C.ambient_dim)
      fail(ErrorCode::DimensionMismatch, "tau_interval point width");
  for (const auto& v : S)
    if (static_cast<int>(v.size()) != C.ambient_dim)
      fail(ErrorCode::DimensionMismatch, "tau_interval point width");

  TauIntervalSet result = TauIntervalSet::full_set();
  for (const auto& a : A) {
    TauIntervalSet per_a = TauIntervalSet::empty_set();
    for (const auto& s : S) {
      // Feasible scales with a - tau*s in C: one interval per choice of s.
      TauInterval iv{{Rat(0), false}, std::nullopt};
      bool empty = false;
      for (const auto& n : C.facet_normals) {
        const Rat na = dot(n, a);
        const Rat ns = dot(n, s);
        const int sig = sgn(ns);
        if (sig == 0) {
          if (sgn(na) < 0) {
            empty = true;
            break;
          }
          continue;
        }
        Rat bound = na / ns;
        if (sig > 0) {
          if (!iv.hi || cmp(bound, iv.hi->value) < 0)
            iv.hi = TauBound{bound, true};
        } else {
          if (cmp(bound, iv.lo.value) > 0) iv.lo = TauBound{bound, true};
        }
      }
      if (!empty) per_a = per_a.unite(TauIntervalSet::single(iv));
    }
    result = result.intersect(per_a);
    if (result.is_empty()) break;
  }
  return result;
}

TauIntervalSet tau_equality_interval(const PointSet& A, const PointSet& S) {
  if (A.empty() || S.empty())
    fail(ErrorCode::ValidationError, "tau_equality_interval needs nonempty sets");
  TauIntervalSet result = TauIntervalSet::full_set();
  for (const auto& a : A) {
    TauIntervalSet per_a = TauIntervalSet::empty_set();
    for (const auto& s : S) {
      if (vec_is_zero(s)) {
        if (vec_is_zero(a)) per_a = per_a.unite(TauIntervalSet::full_set());
        continue;
      }
      // s has a nonzero coordinate pinning the only candidate scale.
      std::size_t j = 0;
      while (sgn(s[j]) == 0) ++j;
      const Rat tau = a[j] / s[j];
      if (sgn(tau) <= 0) continue;
      if (vec_cmp(a, vec_scale(tau, s)) == 0)
        per_a = per_a.unite(TauIntervalSet::point(tau));
    }
    result = result.intersect(per_a);
    if (result.is_empty()) break;
  }
  return result;
}

namespace {

bool covered_by_translate(const PointSet& A, const PointSet& S,
                          const PolyhedralCone& C) {
  for (const auto& a : A) {
    bool hit = false;
    for (const auto& s : S)
      if (cone_contains(C, vec_sub(a, s))) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

std::vector<std::string> map_labels(const FiniteSetMap& f) {
  std::vector<std::string> out;
  for (const auto& [label, img] : f.images) out.push_back(label);
  return out;  // std::map iterates in lexicographic order
}

// Cell scan: unordered off-diagonal pairs in lexicographic order, alphas in
// the grid's coarse-to-fine order, so the recorded refutation is the
// simplest counterexample.
template <typename CellFn>
ConvexityVerdict scan_cells(const std::vector<std::string>& labels,
                            const AlphaGrid& grid, CellFn&& cell) {
  ConvexityVerdict verdict;
  const auto alphas = grid.scan_samples();
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      for (const auto& alpha : alphas) {
        CellOutcome out;
        out.key = CellKey{labels[i], labels[j], alpha};
        cell(out);
        if (out.state == CellState::Skipped) ++verdict.skipped;
        verdict.cells.push_back(out);
        if (out.state == CellState::Refuted) {
          verdict.verified_on_grid = false;
          verdict.certificate = verdict.cells.back().key;
          return verdict;
        }
      }
  return verdict;
}

}  // namespace

ConvexityVerdict is_preconvexlike(const FiniteSetMap& f,
                                  const PolyhedralCone& c,
                                  const AlphaGrid& grid) {
  const auto labels = map_labels(f);
  return scan_cells(labels, grid, [&](CellOutcome& out) {
    const PointSet A = combine(f, out.key.x1, out.key.x2, out.key.alpha);
    for (const auto& x3 : labels) {
      const auto taus = tau_interval(A, f.at(x3), c);
      if (const auto w = taus.witness()) {
        out.state = CellState::Verified;
        out.witness_x3 = x3;
        out.tau = *w;
        return;
      }
    }
    out.state = CellState::Refuted;
  });
}

ConvexityVerdict is_convexlike(const FiniteSetMap& f, const PolyhedralCone& c,
                               const AlphaGrid& grid) {
  const auto labels = map_labels(f);
  return scan_cells(labels, grid, [&](CellOutcome& out) {
    const PointSet A = combine(f, out.key.x1, out.key.x2, out.key.alpha);
    for (const auto& x3 : labels) {
      if (covered_by_translate(A, f.at(x3), c)) {
        out.state = CellState::Verified;
        out.witness_x3 = x3;
        out.tau = 1;
        return;
      }
    }
    out.state = CellState::Refuted;
  });
}

ConvexityVerdict is_preaffine(const FiniteSetMap& f, const AlphaGrid& grid) {
  const auto labels = map_labels(f);
  return scan_cells(labels, grid, [&](CellOutcome& out) {
    const PointSet A = combine(f, out.key.x1, out.key.x2, out.key.alpha);
    for (const auto& x3 : labels) {
      const auto taus = tau_equality_interval(A, f.at(x3));
      if (const auto w = taus.witness()) {
        out.state = CellState::Verified;
        out.witness_x3 = x3;
        out.tau = *w;
        return;
      }
    }
    out.state = CellState::Refuted;
  });
}

ConvexityVerdict is_cone_convex(const FiniteSetMap& f, const PolyhedralCone& c,
                                const AlphaGrid& grid,
                                const std::vector<DomainPoint>& domain) {
  const auto labels = map_labels(f);
  std::vector<const DomainPoint*> points;
  for (const auto& l : labels) {
    const DomainPoint* found = nullptr;
    for (const auto& p : domain)
      if (p.label == l) found = &p;
    if (!found)
      fail(ErrorCode::UnknownLabel, "no coordinates for label '" + l + "'");
    points.push_back(found);
  }
  auto coords_of = [&](const std::string& l) -> const Vec& {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return points[i]->coords;
    fail(ErrorCode::UnknownLabel, l);
  };
  return scan_cells(labels, grid, [&](CellOutcome& out) {
    const Vec target =
        vec_add(vec_scale(out.key.alpha, coords_of(out.key.x1)),
                vec_scale(Rat(1) - out.key.alpha, coords_of(out.key.x2)));
    std::string x3;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (vec_cmp(points[i]->coords, target) == 0) {
        x3 = labels[i];
        break;
      }
    if (x3.empty()) {
      out.state = CellState::Skipped;
      return;
    }
    const PointSet A = combine(f, out.key.x1, out.key.x2, out.key.alpha);
    if (covered_by_translate(A, f.at(x3), c)) {
      out.state = CellState::Verified;
      out.witness_x3 = x3;
      out.tau = 1;
    } else {
      out.state = CellState::Refuted;
    }
  });
}

}  // namespace conevex
