#include <doctest.h>

#include "conevex/intervals.hpp"

using namespace conevex;

namespace {

TauInterval iv(const Rat& lo, bool lo_closed, const Rat& hi, bool hi_closed) {
  return {{lo, lo_closed}, TauBound{hi, hi_closed}};
}

}  // namespace

TEST_CASE("interval membership respects endpoint openness") {
  const auto s = TauIntervalSet::single(iv(Rat(0), false, rat(1, 2), true));
  CHECK(s.contains(rat(1, 4)));
  CHECK(s.contains(rat(1, 2)));
  CHECK_FALSE(s.contains(rat(2, 3)));
  CHECK_FALSE(s.contains(Rat(0)));
  CHECK_FALSE(s.contains(Rat(-1)));

  const auto open_top = TauIntervalSet::single(iv(Rat(1), true, Rat(2), false));
  CHECK(open_top.contains(Rat(1)));
  CHECK_FALSE(open_top.contains(Rat(2)));
}

TEST_CASE("union merges touching intervals only when a shared point exists") {
  const auto a = TauIntervalSet::single(iv(Rat(0), false, rat(1, 2), true));
  const auto b = TauIntervalSet::single(iv(rat(1, 2), false, Rat(1), true));
  const auto joined = a.unite(b);
  REQUIRE(joined.intervals().size() == 1);
  CHECK(cmp(joined.intervals()[0].hi->value, Rat(1)) == 0);

  const auto c = TauIntervalSet::single(iv(Rat(0), false, rat(1, 2), false));
  const auto gap = c.unite(b);
  CHECK(gap.intervals().size() == 2);
  CHECK_FALSE(gap.contains(rat(1, 2)));
}

TEST_CASE("intersection tightens endpoints") {
  const auto a = TauIntervalSet::single(iv(Rat(0), false, Rat(3), true));
  const auto b = TauIntervalSet::single(iv(Rat(1), true, Rat(5), false));
  const auto both = a.intersect(b);
  REQUIRE(both.intervals().size() == 1);
  CHECK(both.contains(Rat(1)));
  CHECK(both.contains(Rat(3)));
  CHECK_FALSE(both.contains(rat(7, 2)));

  const auto far_apart =
      TauIntervalSet::single(iv(Rat(4), true, Rat(5), true)).intersect(
          TauIntervalSet::single(iv(Rat(1), true, Rat(2), true)));
  CHECK(far_apart.is_empty());
}

TEST_CASE("degenerate points and unbounded tails") {
  const auto p = TauIntervalSet::point(rat(3, 2));
  CHECK(p.contains(rat(3, 2)));
  CHECK_FALSE(p.contains(Rat(1)));
  CHECK(p.witness().value() == rat(3, 2));

  const auto full = TauIntervalSet::full_set();
  CHECK(full.contains(rat(1, 1000)));
  CHECK(full.witness().value() == Rat(1));

  const auto tail = TauIntervalSet::single({{Rat(2), true}, std::nullopt});
  CHECK(tail.witness().value() == Rat(3));
  CHECK(tail.unite(full).intervals().size() == 1);
}

TEST_CASE("witness picks the midpoint of the first interval") {
  auto s = TauIntervalSet::single(iv(Rat(0), false, rat(1, 2), true));
  CHECK(s.witness().value() == rat(1, 4));
  s = s.unite(TauIntervalSet::single(iv(Rat(5), true, Rat(7), true)));
  CHECK(s.witness().value() == rat(1, 4));
  CHECK(TauIntervalSet::empty_set().witness() == std::nullopt);
}
