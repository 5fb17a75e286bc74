#include <doctest.h>

#include "conevex/error.hpp"
#include "conevex/setvalued.hpp"
#include "support/fixtures.hpp"

using namespace conevex;
using conevex::testing::inst_a;
using conevex::testing::inst_b;
using conevex::testing::inst_c;
using conevex::testing::V;
using conevex::testing::VQ;

TEST_CASE("fixtures validate") {
  validate_instance(inst_a());
  validate_instance(inst_b());
  validate_instance(inst_c());
}

TEST_CASE("validation rejects broken instances") {
  auto bad = inst_a();
  bad.f.images.erase("c");
  CHECK_THROWS_AS(validate_instance(bad), Error);

  auto dup = inst_a();
  dup.domain.push_back({"a", V({5})});
  dup.f.images["a"];  // table size still mismatched with the domain
  CHECK_THROWS_AS(validate_instance(dup), Error);

  auto not_pointed = inst_a();
  not_pointed.y_plus =
      cone_from_generators(2, {V({1, 0}), V({0, 1}), V({0, -1})});
  CHECK_THROWS_AS(validate_instance(not_pointed), Error);
}

TEST_CASE("image_union collects and deduplicates") {
  const auto inst = inst_a();
  CHECK(image_union(inst.f, {"a", "b", "c"}) ==
        PointSet{V({0, 1}), V({1, 0}), V({2, 2})});
  CHECK(image_union(inst.f, {"b"}) == PointSet{V({1, 0})});
  CHECK_THROWS_AS(image_union(inst.f, {"nope"}), Error);

  FiniteSetMap dup;
  dup.codomain_dim = 1;
  dup.images = {{"a", {V({3})}}, {"b", {V({3})}}};
  CHECK(image_union(dup, {"a", "b"}) == PointSet{V({3})});
}

TEST_CASE("combine forms exact convex combinations of image sets") {
  const auto inst = inst_c();
  CHECK(combine(inst.f, "a", "b", rat(1, 2)) ==
        PointSet{V({0, 1}), VQ({{1, 2}, {1, 2}}), V({1, 0})});

  FiniteSetMap singletons;
  singletons.codomain_dim = 2;
  singletons.images = {{"a", {V({3, 0})}}, {"b", {V({0, 3})}}};
  CHECK(combine(singletons, "a", "b", rat(1, 3)) == PointSet{V({1, 2})});
  CHECK(combine(singletons, "a", "a", rat(1, 3)) == PointSet{V({3, 0})});

  CHECK_THROWS_AS(combine(inst.f, "a", "b", Rat(0)), Error);
  CHECK_THROWS_AS(combine(inst.f, "a", "b", Rat(1)), Error);
}

TEST_CASE("apply_functional evaluates exactly") {
  const auto inst = inst_a();
  CHECK(apply_functional(inst.f, "c", V({1, 1})) == std::vector<Rat>{Rat(4)});
  CHECK(apply_functional(inst.f, "a", V({0, 0})) == std::vector<Rat>{Rat(0)});
  CHECK(apply_functional(inst.h, "a", V({})) == std::vector<Rat>{Rat(0)});
  CHECK_THROWS_AS(apply_functional(inst.f, "a", V({1})), Error);
}

TEST_CASE("apply_functional distributes over image unions") {
  const auto inst = inst_a();
  const Vec ell = V({2, -1});
  std::vector<Rat> pooled;
  for (const auto& l : inst.sorted_labels())
    for (const auto& v : apply_functional(inst.f, l, ell)) pooled.push_back(v);
  pooled = make_rat_set(std::move(pooled));
  std::vector<Rat> from_union;
  for (const auto& v : image_union(inst.f, inst.sorted_labels()))
    from_union.push_back(dot(ell, v));
  CHECK(pooled == make_rat_set(std::move(from_union)));
}

TEST_CASE("feasible set from the constraint maps") {
  CHECK(feasible_set(inst_a()).labels == std::vector<std::string>{"a", "b"});
  CHECK(feasible_set(inst_b()).labels == std::vector<std::string>{"a"});

  auto all_positive = inst_a();
  all_positive.g.images = {{"a", {V({2})}}, {"b", {V({1})}}, {"c", {V({3})}}};
  CHECK(feasible_set(all_positive).labels.empty());
}

TEST_CASE("feasibility is monotone when g images grow into -Z_plus") {
  auto inst = inst_a();
  const auto before = feasible_set(inst).labels;
  auto img = inst.g.images["c"];
  img.push_back(V({-2}));
  inst.g.images["c"] = make_point_set(std::move(img));
  const auto after = feasible_set(inst).labels;
  for (const auto& l : before)
    CHECK(std::find(after.begin(), after.end(), l) != after.end());
  CHECK(after == std::vector<std::string>{"a", "b", "c"});
}
