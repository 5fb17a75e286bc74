#include <doctest.h>

#include "conevex/error.hpp"
#include "conevex/generator.hpp"
#include "conevex/saddle.hpp"
#include "support/fixtures.hpp"

using namespace conevex;
using conevex::testing::inst_a;
using conevex::testing::inst_b;
using conevex::testing::V;

namespace {

OperatorPair zero_pair(const ProblemInstance& inst) {
  return {zero_operator(inst.dim_y, inst.dim_z),
          zero_operator(inst.dim_y, inst.dim_w)};
}

LinearOperator column_operator(const Vec& column) {
  LinearOperator op = zero_operator(static_cast<int>(column.size()), 1);
  for (std::size_t i = 0; i < column.size(); ++i) op.rows[i][0] = column[i];
  return op;
}

}  // namespace

TEST_CASE("operator positivity") {
  const auto orthant2 = orthant_cone(2);
  const auto orthant1 = orthant_cone(1);
  CHECK(operator_is_positive(zero_operator(2, 1), orthant1, orthant2));
  CHECK(operator_is_positive(column_operator(V({1, 1})), orthant1, orthant2));
  CHECK_FALSE(
      operator_is_positive(column_operator(V({-1, 0})), orthant1, orthant2));
  CHECK_THROWS_AS(
      operator_is_positive(zero_operator(2, 2), orthant1, orthant2), Error);
}

TEST_CASE("lagrangian values") {
  const auto inst = inst_a();
  CHECK(lagrangian_value(inst, "a", zero_pair(inst)) == PointSet{V({0, 1})});

  OperatorPair pair{column_operator(V({1, 1})), zero_operator(2, 0)};
  CHECK(lagrangian_value(inst, "a", pair) == PointSet{V({-1, 0})});

  auto multi = inst_a();
  multi.f.images["a"] = {V({0, 1}), V({1, 1})};
  multi.g.images["a"] = {V({-1}), V({-2})};
  CHECK(lagrangian_value(multi, "a", pair).size() == 4);
}

TEST_CASE("vector saddle checks on INST-A") {
  const auto inst = inst_a();
  const auto at_a = vector_saddle_check(inst, "a", zero_pair(inst));
  CHECK(at_a.condition_i);
  CHECK(at_a.condition_ii);
  CHECK(at_a.condition_iii);
  CHECK(at_a.is_saddle);
  CHECK(at_a.ybar == V({0, 1}));
  CHECK(at_a.zbar == V({-1}));

  const auto at_c = vector_saddle_check(inst, "c", zero_pair(inst));
  CHECK_FALSE(at_c.condition_ii);
  CHECK_FALSE(at_c.is_saddle);

  const auto at_b = vector_saddle_check(inst_b(), "a", zero_pair(inst_b()));
  CHECK(at_b.is_saddle);
  CHECK(at_b.ybar == V({-1, -1}));
  CHECK(at_b.zbar == V({-1}));

  OperatorPair negative{column_operator(V({-1, 0})), zero_operator(2, 0)};
  CHECK_THROWS_AS(vector_saddle_check(inst, "a", negative), Error);
}

TEST_CASE("rank-one operator construction") {
  const auto inst = inst_a();
  Multipliers m{V({1, 0}), V({0}), V({})};

  const auto zero_s = construct_saddle_operators(inst, m, V({1, 1}));
  CHECK(zero_s.S == zero_operator(2, 1));

  Multipliers m2{V({1, 0}), V({2}), V({})};
  const auto pair = construct_saddle_operators(inst, m2, V({1, 1}));
  CHECK(pair.S.rows[0] == V({2}));
  CHECK(pair.S.rows[1] == V({2}));
  CHECK(operator_is_positive(pair.S, inst.z_plus, inst.y_plus));

  CHECK_THROWS_AS(construct_saddle_operators(inst, m, V({1, 0})), Error);
  try {
    construct_saddle_operators(inst, m, V({1, 0}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotInterior);
  }
  try {
    construct_saddle_operators(inst, m, V({2, 2}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotNormalized);
  }
}

TEST_CASE("positive multipliers always yield positive operators") {
  Rng rng(1212);
  const auto inst = inst_a();
  for (int trial = 0; trial < 50; ++trial) {
    Multipliers m{V({1, (long)rng.range(0, 4)}), V({(long)rng.range(0, 4)}),
                  V({})};
    Vec y0{Rat(1), Rat(rng.range(1, 4))};
    y0 = vec_scale(Rat(1) / dot(m.xi, y0), y0);
    if (!cone_contains_interior(inst.y_plus, y0)) continue;
    const auto pair = construct_saddle_operators(inst, m, y0);
    CHECK(operator_is_positive(pair.S, inst.z_plus, inst.y_plus));
  }
}

TEST_CASE("construction passes the saddle check on the fixtures") {
  for (const auto& [inst, label] :
       {std::pair{inst_a(), std::string("a")},
        std::pair{inst_a(), std::string("b")},
        std::pair{inst_b(), std::string("a")}}) {
    const auto sc = construct_vector_saddle(inst, label);
    REQUIRE(sc.has_value());
    CHECK(sc->check.is_saddle);
    CHECK(sc->zero_in_s_image);
    CHECK_FALSE(vec_is_zero(sc->multipliers.xi));
    CHECK(cmp(dot(sc->multipliers.xi, sc->y0), Rat(1)) == 0);
  }
  CHECK_THROWS_AS(construct_vector_saddle(inst_a(), "c"), Error);
  try {
    construct_vector_saddle(inst_a(), "c");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotWeaklyEfficient);
  }
}

TEST_CASE("saddle anchors stay maximal under random positive rank-one pairs") {
  const auto inst = inst_a();
  const auto sc = construct_vector_saddle(inst, "a");
  REQUIRE(sc.has_value());
  REQUIRE(sc->check.is_saddle);
  const Vec anchor =
      vec_add(sc->check.ybar, apply(sc->pair.S, sc->check.zbar));
  Rng rng(909);
  for (int trial = 0; trial < 50; ++trial) {
    Vec y0{Rat(rng.range(1, 5)), Rat(rng.range(1, 5))};
    Vec eta{Rat(rng.range(0, 4))};
    OperatorPair random_pair{zero_operator(2, 1), zero_operator(2, 0)};
    for (int i = 0; i < 2; ++i) random_pair.S.rows[i][0] = y0[i] * eta[0];
    REQUIRE(operator_is_positive(random_pair.S, inst.z_plus, inst.y_plus));
    for (const auto& v : lagrangian_value(inst, "a", random_pair))
      CHECK_FALSE(cone_contains_interior(inst.y_plus, vec_sub(v, anchor)));
  }
}

TEST_CASE("scalar lagrangian values") {
  const auto inst = inst_a();
  CHECK(scalar_lagrangian(inst, V({1, 0}), "a", V({0}), V({})) ==
        std::vector<Rat>{Rat(0)});
  CHECK(scalar_lagrangian(inst, V({1, 0}), "a", V({3}), V({})) ==
        std::vector<Rat>{Rat(-3)});

  auto multi = inst_a();
  multi.f.images["a"] = {V({0, 1}), V({1, 1})};
  multi.g.images["a"] = {V({-1}), V({-2})};
  CHECK(scalar_lagrangian(multi, V({1, 0}), "a", V({1}), V({})).size() == 4);
  CHECK_THROWS_AS(scalar_lagrangian(inst, V({1}), "a", V({0}), V({})), Error);
}

TEST_CASE("scalar saddle checks on INST-A") {
  const auto inst = inst_a();
  const auto good = scalar_saddle_check(inst, V({1, 0}), "a", V({0}), V({}));
  CHECK(good.is_saddle);
  CHECK(good.right_ok);
  CHECK(good.eta_annihilates);

  const auto off_min = scalar_saddle_check(inst, V({1, 0}), "b", V({0}), V({}));
  CHECK_FALSE(off_min.is_saddle);
  CHECK_FALSE(off_min.right_ok);

  const auto bad_eta = scalar_saddle_check(inst, V({1, 0}), "a", V({1}), V({}));
  CHECK_FALSE(bad_eta.is_saddle);
  CHECK_FALSE(bad_eta.eta_annihilates);

  CHECK_THROWS_AS(scalar_saddle_check(inst, V({0, 0}), "a", V({0}), V({})),
                  Error);
  CHECK_THROWS_AS(scalar_saddle_check(inst, V({1, 0}), "a", V({-1}), V({})),
                  Error);
}

TEST_CASE("scalar multiplier construction on INST-A") {
  const auto inst = inst_a();
  const auto at_a = construct_scalar_multipliers(inst, "a");
  REQUIRE(at_a.has_value());
  CHECK(at_a->xi == V({1, 0}));
  CHECK(at_a->eta == V({0}));
  const auto check_a =
      scalar_saddle_check(inst, at_a->xi, "a", at_a->eta, at_a->zeta);
  CHECK(check_a.is_saddle);
  CHECK(check_a.eta_annihilates);

  const auto at_b = construct_scalar_multipliers(inst, "b");
  REQUIRE(at_b.has_value());
  CHECK_FALSE(vec_is_zero(at_b->xi));
  CHECK(cone_contains(dual_cone(inst.y_plus), at_b->xi));
  const auto check_b =
      scalar_saddle_check(inst, at_b->xi, "b", at_b->eta, at_b->zeta);
  CHECK(check_b.is_saddle);
  CHECK(check_b.eta_annihilates);

  CHECK_THROWS_AS(construct_scalar_multipliers(inst, "c"), Error);
}

TEST_CASE("composed scalar multipliers reproduce the vector lagrangian") {
  const auto inst = inst_a();
  const auto sc = construct_vector_saddle(inst, "a");
  REQUIRE(sc.has_value());
  const auto m = construct_scalar_multipliers(inst, "a");
  REQUIRE(m.has_value());
  for (const auto& label : inst.sorted_labels()) {
    std::vector<Rat> through_operators;
    for (const auto& v : lagrangian_value(inst, label, sc->pair))
      through_operators.push_back(dot(m->xi, v));
    through_operators = make_rat_set(std::move(through_operators));
    CHECK(through_operators ==
          scalar_lagrangian(inst, m->xi, label, m->eta, m->zeta));
  }
}

TEST_CASE("theorem verifiers pass on the fixtures") {
  const AlphaGrid grid(8);
  for (const auto& inst : {inst_a(), inst_b()}) {
    const auto vrep = verify_vector_saddle_theorems(inst, grid);
    CHECK_FALSE(vrep.hypothesis_violated);
    CHECK(vrep.forward_ok);
    CHECK(vrep.backward_ok);
    CHECK(vrep.ok);
    const auto srep = verify_scalar_saddle_theorems(inst, grid);
    CHECK(srep.forward_ok);
    CHECK(srep.backward_ok);
    CHECK(srep.sampled_triples > 0);
    CHECK(srep.ok);
  }
}
