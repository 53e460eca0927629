#include "doctest.h"

#include "regrep/ringpoly.hpp"

using namespace regrep;

namespace {
RingPtr ring(const char* text) { return Ring::make(RingSpec::parse(text)); }
}  // namespace

TEST_CASE("parse and format") {
  auto z8 = ring("Zp:p=2,r=3");
  CHECK(poly::parse(*z8, "x^2+3x+1") == Poly{1, 3, 1});
  CHECK(poly::parse(*z8, "x^2-1") == Poly{7, 0, 1});
  CHECK(poly::format(Poly{1, 3, 1}) == "x^2+3x+1");
}

TEST_CASE("factorization examples over F_2") {
  auto f2 = ring("Zp:p=2,r=1");
  auto one = poly::factor(*f2, poly::parse(*f2, "x^2+x+1"));
  REQUIRE(one.size() == 1);
  CHECK(one[0].second == 1);
  auto split = poly::factor(*f2, poly::parse(*f2, "x^2+x"));
  REQUIRE(split.size() == 2);
  CHECK(split[0].first == Poly{0, 1});
  CHECK(split[1].first == Poly{1, 1});
  auto square = poly::factor(*f2, poly::parse(*f2, "x^4+x^2+1"));
  REQUIRE(square.size() == 1);
  CHECK(square[0].first == Poly{1, 1, 1});
  CHECK(square[0].second == 2);
}

TEST_CASE("factorization reproduces the polynomial and matches trial division") {
  for (const char* text : {"Zp:p=2,r=1", "Zp:p=3,r=1", "Fqt:p=2,f=2,r=1", "Zp:p=5,r=1"}) {
    auto F = ring(text);
    for (int deg = 1; deg <= 4; ++deg) {
      if (deg == 4 && F->q() > 3) break;
      // Trial-division irreducibility oracle: no monic factor of degree <= deg/2.
      std::vector<Poly> small;
      for (int d = 1; 2 * d <= deg; ++d)
        for (auto& g : poly::all_monic(*F, d)) small.push_back(g);
      for (const auto& f : poly::all_monic(*F, deg)) {
        const auto parts = poly::factor(*F, f);
        Poly product = {1};
        for (auto& [g, m] : parts) {
          for (int i = 0; i < m; ++i) product = poly::mul(*F, product, g);
          CHECK(poly::is_irreducible(*F, g));
        }
        CHECK(product == f);
        bool trial_irreducible = true;
        for (auto& g : small) trial_irreducible &= !poly::rem(*F, f, g).empty();
        CHECK(trial_irreducible == (parts.size() == 1 && parts[0].second == 1));
      }
    }
  }
}

TEST_CASE("Hensel lifting of coprime factors") {
  for (const char* text : {"Zp:p=2,r=3", "Zp:p=3,r=3", "Fqt:p=2,f=1,r=3", "Zp:p=2,r=5"}) {
    auto R = ring(text);
    auto F1 = R->truncated(1);
    for (const auto& f : poly::all_monic(*R, 2)) {
      const auto residue = poly::reduce(*R, f, 1);
      auto parts = poly::factor(*F1, residue);
      if (parts.size() < 2) continue;
      std::vector<Poly> primary;
      for (auto& [g, m] : parts) {
        Poly power = {1};
        for (int i = 0; i < m; ++i) power = poly::mul(*F1, power, g);
        primary.push_back(power);
      }
      auto lifted = poly::hensel_lift(*R, f, primary);
      Poly product = {1};
      for (std::size_t i = 0; i < lifted.size(); ++i) {
        CHECK(poly::is_monic(lifted[i]));
        CHECK(poly::reduce(*R, lifted[i], 1) == primary[i]);
        product = poly::mul(*R, product, lifted[i]);
      }
      CHECK(product == f);
    }
  }
}
