#include <doctest.h>

#include "conevex/error.hpp"
#include "conevex/rational.hpp"
#include "support/fixtures.hpp"

using namespace conevex;
using conevex::testing::V;

TEST_CASE("rational parse and format round-trip") {
  CHECK(rat_str(parse_rat("3/4")) == "3/4");
  CHECK(rat_str(parse_rat("-3/4")) == "-3/4");
  CHECK(rat_str(parse_rat("6/4")) == "3/2");
  CHECK(rat_str(parse_rat("7")) == "7");
  CHECK(rat_str(parse_rat("0/5")) == "0");
  CHECK(rat_str(rat(-10, 4)) == "-5/2");
}

TEST_CASE("rational parse rejects malformed input") {
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("1/-2"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
  CHECK_THROWS_AS(parse_rat("a/b"), Error);
  CHECK_THROWS_AS(parse_rat("1.5"), Error);
  try {
    parse_rat("1/0");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("vector arithmetic is exact") {
  const Vec a = V({1, 2});
  const Vec b = V({3, -4});
  CHECK(vec_add(a, b) == V({4, -2}));
  CHECK(vec_sub(a, b) == V({-2, 6}));
  CHECK(dot(a, b) == Rat(-5));
  CHECK(vec_scale(rat(1, 2), b) == Vec{rat(3, 2), Rat(-2)});
  CHECK(vec_is_zero(V({0, 0})));
  CHECK_FALSE(vec_is_zero(V({0, 1})));
  CHECK_THROWS_AS(dot(a, V({1})), Error);
}

TEST_CASE("canonical_ray scales to coprime integers without flipping") {
  CHECK(canonical_ray(Vec{rat(1, 2), rat(1, 3)}) == V({3, 2}));
  CHECK(canonical_ray(V({4, -6})) == V({2, -3}));
  CHECK(canonical_ray(V({-4, -6})) == V({-2, -3}));
  CHECK(canonical_ray(V({0, 0})) == V({0, 0}));
  CHECK(canonical_ray(V({0, 5})) == V({0, 1}));
}

TEST_CASE("point sets are sorted and deduplicated") {
  const PointSet s = make_point_set({V({1, 0}), V({0, 1}), V({1, 0})});
  REQUIRE(s.size() == 2);
  CHECK(s[0] == V({0, 1}));
  CHECK(s[1] == V({1, 0}));
  CHECK(point_set_contains(s, V({1, 0})));
  CHECK_FALSE(point_set_contains(s, V({2, 2})));
  CHECK(point_set_union(s, {V({2, 2})}).size() == 3);
}
