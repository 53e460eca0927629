#include "doctest.h"

#include "regrep/construction.hpp"
#include "regrep/error.hpp"

using namespace regrep;

namespace {

const GroupContext& gl2_z8() {
  static const GroupContext ctx = make_context(RingSpec::parse("Zp:p=2,r=3"), 2);
  return ctx;
}

std::string failures(const Ledger& ledger) {
  std::string out;
  for (const auto& e : ledger.entries())
    if (!e.recorded && !e.passed) out += e.lemma + " [" + e.instance + "] " + e.detail + "\n";
  return out;
}

}  // namespace

TEST_CASE("group context") {
  const auto& ctx = gl2_z8();
  CHECK(ctx.G->order() == 1536);
  CHECK(ctx.l == 2);
  CHECK(ctx.lp == 1);
  CHECK(ctx.K[1]->order() == 256);
  CHECK(ctx.K[2]->order() == 16);
  CHECK_THROWS_AS(make_context(RingSpec::parse("Zp:p=2,r=3"), 2, 1000), Error);
}

TEST_CASE("elliptic orbit over Z/8") {
  const auto& ctx = gl2_z8();
  const auto orbit = parse_orbit("charpoly=x^2+x+1", ctx.ring, 2, ctx.lp);
  const auto d = build_datum(ctx, orbit);
  CHECK(d.form.lambda.to_string() == "(2)");
  CHECK(group_index(*d.CKlp, *d.JmM) == 3);
  const auto report = construct_orbit(ctx, orbit);
  INFO(failures(report.ledger));
  CHECK(report.ledger.all_passed());
  CHECK(report.sylow_ok);
  CHECK(report.theta_count == d.CK1->order() / d.CKl->order());
  REQUIRE(!report.reps.empty());
  // deg = [G : CK^l'] deg eta_M with deg eta_M = 2.
  for (const auto& rep : report.reps) CHECK(rep.degree == static_cast<std::int64_t>(group_index(*ctx.G, *d.CKlp)) * 2);
}

TEST_CASE("split orbit over Z/8") {
  const auto& ctx = gl2_z8();
  const auto orbit = parse_orbit("charpoly=x^2+x", ctx.ring, 2, ctx.lp);
  const auto d = build_datum(ctx, orbit);
  CHECK(d.form.lambda.to_string() == "(1,1)");
  CHECK(group_index(*d.CKlp, *d.JmM) == 1);
  const auto report = construct_orbit(ctx, orbit);
  INFO(failures(report.ledger));
  CHECK(report.ledger.all_passed());
  CHECK(report.sylow_ok);
}

TEST_CASE("every regular orbit over Z/8 and Z/4") {
  for (const char* spec : {"Zp:p=2,r=2", "Zp:p=2,r=3"}) {
    const auto ctx = make_context(RingSpec::parse(spec), 2);
    std::size_t total = 0;
    for (const auto& orbit : regular_class_list(ctx.ring->truncated(ctx.lp), 2)) {
      auto o = orbit;
      o.level = ctx.lp;
      const auto report = construct_orbit(ctx, o);
      INFO(std::string(spec), " ", report.orbit_key, "\n", failures(report.ledger));
      CHECK(report.ledger.all_passed());
      total += report.reps.size();
    }
    MESSAGE(std::string(spec), ": ", total, " regular representations");
  }
}

TEST_CASE("build_datum rejects bad orbits") {
  const auto& ctx = gl2_z8();
  CHECK_THROWS_AS(build_datum(ctx, parse_orbit("charpoly=x^2+x+1", ctx.ring, 2, 2)), Error);
  const auto one = make_context(RingSpec::parse("Zp:p=2,r=1"), 2);
  CHECK_THROWS_AS(build_datum(one, parse_orbit("charpoly=x^2+x+1", one.ring, 2, 1)), Error);
}
