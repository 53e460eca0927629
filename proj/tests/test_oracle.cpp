#include "doctest.h"

#include "regrep/error.hpp"
#include "regrep/oracle.hpp"

using namespace regrep;

namespace {

std::vector<RepReport> all_regular(const GroupContext& ctx) {
  std::vector<RepReport> out;
  for (auto orbit : regular_class_list(ctx.ring->truncated(ctx.lp), ctx.n)) {
    orbit.level = ctx.lp;
    out.push_back(construct_orbit(ctx, orbit));
  }
  return out;
}

}  // namespace

TEST_CASE("census of GL_1") {
  const auto c = full_census(RingSpec::parse("Zp:p=3,r=2"), 1);
  CHECK(c.G->order() == 6);
  CHECK(c.table.size() == 6);
  CHECK(census_consistent(c));
  for (const auto& info : c.info) CHECK(info.degree == 1);
}

TEST_CASE("census of GL_2(Z/4)") {
  const auto spec = RingSpec::parse("Zp:p=2,r=2");
  const auto c = full_census(spec, 2);
  CHECK(c.G->order() == 96);
  std::string why;
  CHECK_MESSAGE(census_consistent(c, &why), why);
  const auto ctx = make_context(spec, 2);
  const auto verdict = compare(c, all_regular(ctx));
  for (const auto& v : verdict.orbits) {
    INFO(v.key, " constructed ", v.constructed, " expected ", v.expected);
    CHECK(v.ok());
  }
  CHECK(verdict.regular_match());
  MESSAGE("non-regular ", verdict.nonregular.count, ", K^1 in kernel ", verdict.nonregular.trivial_on_last,
          ", after twist ", verdict.nonregular.after_twist);
  CHECK(verdict.nonregular.after_twist == verdict.nonregular.count);
}

TEST_CASE("empty report list does not match") {
  const auto c = full_census(RingSpec::parse("Zp:p=2,r=2"), 2);
  const auto verdict = compare(c, {});
  CHECK(!verdict.regular_match());
  CHECK(verdict.missing_orbits.size() == 4);
}

TEST_CASE("census cap") {
  CHECK_THROWS_AS(full_census(RingSpec::parse("Zp:p=2,r=3"), 2, 1000), Error);
}
