#include <doctest.h>

#include <algorithm>

#include "conevex/cone.hpp"
#include "conevex/error.hpp"
#include "conevex/generator.hpp"
#include "conevex/oracles.hpp"
#include "support/fixtures.hpp"

using namespace conevex;
using conevex::testing::V;

namespace {

// Independent facet oracle: a facet normal of a full-dimensional cone is a
// kernel direction of dim-1 generators that supports all generators.
std::vector<Vec> kernel_of(const std::vector<Vec>& rows, int dim) {
  std::vector<Vec> m = rows;
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < dim && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Rat inv = Rat(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rat f = m[i][c];
      for (int j = 0; j < dim; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> used(dim, false);
  for (int c : pivots) used[c] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < dim; ++c) {
    if (used[c]) continue;
    Vec v = zero_vec(dim);
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> oracle_facets(int dim, const std::vector<Vec>& gens) {
  std::vector<Vec> found;
  const int pick = dim - 1;
  std::vector<int> idx(pick);
  auto consider = [&](const std::vector<Vec>& subset) {
    const auto ns = kernel_of(subset, dim);
    if (ns.size() != 1) return;
    for (const Vec& cand : {ns[0], vec_neg(ns[0])}) {
      bool valid = true;
      for (const auto& g : gens)
        if (sgn(dot(cand, g)) < 0) {
          valid = false;
          break;
        }
      if (valid) found.push_back(canonical_ray(cand));
    }
  };
  if (pick == 0) {
    consider({});
  } else {
    for (int i = 0; i < pick; ++i) idx[i] = i;
    const int k = static_cast<int>(gens.size());
    if (k >= pick) {
      for (;;) {
        std::vector<Vec> subset;
        for (int i : idx) subset.push_back(gens[i]);
        consider(subset);
        int pos = pick - 1;
        while (pos >= 0 && idx[pos] == k - pick + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  std::sort(found.begin(), found.end(), vec_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

PolyhedralCone random_full_cone(Rng& rng, int dim) {
  for (;;) {
    std::vector<Vec> gens;
    const int count = static_cast<int>(rng.range(dim, dim + 4));
    for (int i = 0; i < count; ++i) {
      Vec v;
      for (int j = 0; j < dim; ++j) v.push_back(Rat(rng.range(-4, 4)));
      if (!vec_is_zero(v)) gens.push_back(std::move(v));
    }
    if (gens.empty()) continue;
    try {
      return cone_from_generators(dim, gens);
    } catch (const Error&) {
    }
  }
}

}  // namespace

TEST_CASE("cone construction on the plane") {
  const auto orthant = cone_from_generators(2, {V({1, 0}), V({0, 1})});
  CHECK(orthant.facet_normals == std::vector<Vec>{V({0, 1}), V({1, 0})});

  const auto slanted = cone_from_generators(2, {V({1, 0}), V({1, 1})});
  CHECK(slanted.facet_normals == std::vector<Vec>{V({0, 1}), V({1, -1})});
  for (const auto& g : slanted.generators) {
    int tight = 0;
    for (const auto& n : slanted.facet_normals) {
      CHECK(sgn(dot(n, g)) >= 0);
      if (sgn(dot(n, g)) == 0) ++tight;
    }
    CHECK(tight == 1);
  }
}

TEST_CASE("cone construction rejects degenerate input") {
  CHECK_THROWS_AS(cone_from_generators(2, {V({1, 0}), V({-1, 0})}), Error);
  try {
    cone_from_generators(2, {V({1, 0}), V({-1, 0})});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFullDimensional);
  }
  CHECK_THROWS_AS(cone_from_generators(2, {V({0, 0})}), Error);
  CHECK_THROWS_AS(cone_from_generators(2, {V({1})}), Error);
  CHECK_THROWS_AS(cone_from_generators(2, {}), Error);
}

TEST_CASE("membership and interior membership") {
  const auto orthant = orthant_cone(2);
  CHECK(cone_contains(orthant, V({0, 0})));
  CHECK_FALSE(cone_contains(orthant, V({1, -1})));
  CHECK(cone_contains_interior(orthant, V({1, 1})));
  CHECK_FALSE(cone_contains_interior(orthant, V({1, 0})));
  CHECK_THROWS_AS(cone_contains(orthant, V({1})), Error);

  const auto slanted = cone_from_generators(2, {V({1, 0}), V({1, 1})});
  CHECK(cone_contains(slanted, V({2, 1})));
  CHECK_FALSE(cone_contains_interior(slanted, V({1, 0})));
  for (const auto& [c, v] :
       {std::pair{orthant, V({2, 3})}, std::pair{slanted, V({3, 1})}})
    if (cone_contains_interior(c, v)) CHECK(cone_contains(c, v));
}

TEST_CASE("dual cone swaps representations") {
  const auto orthant = orthant_cone(2);
  CHECK(cone_same_set(dual_cone(orthant), orthant));

  const auto slanted = cone_from_generators(2, {V({1, 0}), V({1, 1})});
  const auto dual = dual_cone(slanted);
  CHECK(dual.generators == std::vector<Vec>{V({0, 1}), V({1, -1})});
  for (const auto& dg : dual.generators)
    for (const auto& g : slanted.generators) CHECK(sgn(dot(dg, g)) >= 0);
  CHECK(dual_cone(dual) == slanted);
}

TEST_CASE("pointedness") {
  CHECK(is_pointed(orthant_cone(2)));
  const auto halfspace =
      cone_from_generators(2, {V({1, 0}), V({0, 1}), V({0, -1})});
  CHECK_FALSE(is_pointed(halfspace));
  CHECK(is_pointed(cone_from_generators(2, {V({1, 0}), V({1, 1})})));
  CHECK(is_pointed(cone_from_generators(0, {})));
}

TEST_CASE("facet normals match the subset-enumeration oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = static_cast<int>(rng.range(1, 4));
    const auto cone = random_full_cone(rng, dim);
    CHECK(cone.facet_normals == oracle_facets(dim, cone.generators));
    if (dim >= 2) {
      for (const auto& n : cone.facet_normals) {
        bool tight = false;
        for (const auto& g : cone.generators)
          if (sgn(dot(n, g)) == 0) tight = true;
        CHECK(tight);
      }
    }
  }
}

TEST_CASE("biduality on random cones") {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = static_cast<int>(rng.range(2, 4));
    const auto cone = random_full_cone(rng, dim);
    CHECK(cone_same_set(dual_cone(dual_cone(cone)), cone));
  }
}

TEST_CASE("interior points pair strictly positively with dual elements") {
  Rng rng(31337);
  int done = 0;
  while (done < 200) {
    const int dim = static_cast<int>(rng.range(2, 4));
    const auto cone = random_full_cone(rng, dim);
    const auto dual = dual_cone(cone);
    if (dual.generators.empty()) continue;  // whole-space cone, zero dual
    Vec xi = zero_vec(dim);
    for (const auto& n : dual.generators)
      xi = vec_add(xi, vec_scale(Rat(rng.range(0, 3)), n));
    if (vec_is_zero(xi)) continue;
    Vec x = zero_vec(dim);
    for (const auto& g : cone.generators)
      x = vec_add(x, vec_scale(Rat(rng.range(1, 3)), g));
    REQUIRE(cone_contains_interior(cone, x));
    CHECK(sgn(dot(x, xi)) > 0);
    ++done;
  }
}

TEST_CASE("cone_nonzero_point scan order and soundness") {
  ConeFeasibilityProblem p;
  p.variable_dim = 2;
  p.homogeneous_inequalities = {V({1, 0}), V({0, 1}), V({1, 1})};
  const auto x = cone_nonzero_point(p);
  REQUIRE(x.has_value());
  CHECK(*x == V({1, 0}));

  ConeFeasibilityProblem pinned;
  pinned.variable_dim = 1;
  pinned.homogeneous_inequalities = {V({1}), V({-1})};
  CHECK_FALSE(cone_nonzero_point(pinned).has_value());

  ConeFeasibilityProblem empty_dim;
  empty_dim.variable_dim = 0;
  CHECK_FALSE(cone_nonzero_point(empty_dim).has_value());

  ConeFeasibilityProblem unconstrained;
  unconstrained.variable_dim = 3;
  const auto e1 = cone_nonzero_point(unconstrained);
  REQUIRE(e1.has_value());
  CHECK(*e1 == V({1, 0, 0}));
}

TEST_CASE("cone_nonzero_point agrees with ray enumeration") {
  Rng rng(555);
  for (int trial = 0; trial < 120; ++trial) {
    const int dim = static_cast<int>(rng.range(1, 3));
    ConeFeasibilityProblem p;
    p.variable_dim = dim;
    const int m = static_cast<int>(rng.range(0, 5));
    for (int i = 0; i < m; ++i) {
      Vec row;
      for (int j = 0; j < dim; ++j) row.push_back(Rat(rng.range(-3, 3)));
      p.homogeneous_inequalities.push_back(std::move(row));
    }
    const auto from_simplex = cone_nonzero_point(p);
    const auto from_enum =
        enumerate_nonzero_solution(dim, p.homogeneous_inequalities);
    CHECK(from_simplex.has_value() == from_enum.has_value());
    if (from_simplex) {
      CHECK_FALSE(vec_is_zero(*from_simplex));
      for (const auto& row : p.homogeneous_inequalities)
        CHECK(sgn(dot(row, *from_simplex)) >= 0);
    }
  }
}
