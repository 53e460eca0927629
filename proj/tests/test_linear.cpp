#include "doctest.h"

#include "regrep/error.hpp"
#include "regrep/heisenberg.hpp"
#include "regrep/linear.hpp"

using namespace regrep;

namespace {

RingPtr ring(const char* text) { return Ring::make(RingSpec::parse(text)); }

GroupPtr unitriangular3(const RingPtr& F) {
  auto codec = std::make_shared<const MatCodec>(F, 3);
  std::vector<Key> gens;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}}) {
    Mat m = Mat::identity(F, 3);
    m(i, j) = 1;
    gens.push_back(codec->encode(m));
  }
  return Group::generate(codec, gens);
}

// Characters of the center {I + c E_02} of the unitriangular group.
LinearChar central_char(const GroupPtr& Z, std::uint64_t p, std::uint64_t a) {
  LinearChar chi{Z, p, {}};
  for (Key k : Z->elements()) chi.exps.push_back(Z->codec()->decode(k)(0, 2) * a % p);
  return chi;
}

}  // namespace

TEST_CASE("extensions of linear characters") {
  const auto F5 = ring("Zp:p=5,r=1");
  auto codec = std::make_shared<const MatCodec>(F5, 1);
  const auto G = Group::generate(codec, {codec->encode(Mat::scalar(F5, 1, 2))});
  REQUIRE(G->order() == 4);
  const auto N = Group::generate(codec, {codec->encode(Mat::scalar(F5, 1, 4))});
  LinearChar chi{N, 2, {}};
  for (Key k : N->elements()) chi.exps.push_back(codec->decode(k)(0, 0) == 4 ? 1 : 0);
  const auto ext = extend_linear_through_abelianization(G, chi);
  CHECK(ext.size() == 2);
  for (const auto& e : ext) {
    CHECK(e.restrict_to(N).same_as(chi));
    CHECK(e.is_homomorphism());
    CHECK(e.at(codec->encode(Mat::scalar(F5, 1, 2))) % 2 == 1);  // zeta_4^{odd}
  }
  CHECK(!ext[0].same_as(ext[1]));
  const auto self = extend_linear_through_abelianization(G, LinearChar::trivial(G));
  CHECK(self.size() == 1);
  // All extensions of the trivial character of {1} are the 4 characters of C4.
  const auto one = Group::generate(codec, {});
  CHECK(extend_linear_through_abelianization(G, LinearChar::trivial(one)).size() == 4);
}

TEST_CASE("extension obstructions") {
  const auto F2 = ring("Zp:p=2,r=1");
  auto codec = std::make_shared<const MatCodec>(F2, 2);
  const auto S3 = Group::generate(codec, {codec->encode(Mat::parse(F2, "[1,1;0,1]")), codec->encode(Mat::parse(F2, "[0,1;1,1]"))});
  REQUIRE(S3->order() == 6);
  const auto A3 = derived_subgroup(S3);
  LinearChar chi{A3, 3, {}};
  for (std::size_t i = 0; i < A3->order(); ++i) chi.exps.push_back(A3->element(i) == codec->identity() ? 0 : (i % 2 ? 1 : 2));
  CHECK_THROWS_AS(extend_linear_through_abelianization(S3, chi), Error);
  const auto C2 = Group::generate(codec, {codec->encode(Mat::parse(F2, "[1,1;0,1]"))});
  LinearChar sign{C2, 2, {}};
  for (Key k : C2->elements()) sign.exps.push_back(k == codec->identity() ? 0 : 1);
  // C2 is not normal; the sign character is its unique extension.
  CHECK(extend_linear_through_abelianization(S3, sign).size() == 1);
  // A normal subgroup of D8 with a character moved by conjugation.
  const auto D8 = unitriangular3(F2);
  const auto N = subgroup_where(D8, [&](Key k) { return D8->codec()->decode(k)(1, 2) == 0; });
  REQUIRE(N->order() == 4);
  LinearChar moved{N, 2, {}};
  for (Key k : N->elements()) moved.exps.push_back(D8->codec()->decode(k)(0, 2));
  try {
    extend_linear_through_abelianization(D8, moved);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotStable);
  }
  CHECK(extend_linear_through_abelianization(S3, LinearChar::trivial(A3)).size() == 2);
}

TEST_CASE("Heisenberg groups") {
  for (std::uint64_t p : {2u, 3u}) {
    const auto F = ring(p == 2 ? "Zp:p=2,r=1" : "Zp:p=3,r=1");
    const auto J = unitriangular3(F);
    REQUIRE(J->order() == p * p * p);
    const auto Z = subgroup_where(J, [&](Key k) {
      const Mat m = J->codec()->decode(k);
      return m(0, 1) == 0 && m(1, 2) == 0;
    });
    const SymplecticSpace S(J, Z, central_char(Z, p, 1), p);
    CHECK(S.dim() == 2);
    CHECK(S.radical_dim() == 0);
    CHECK(S.check_bilinear());
    CHECK(S.lagrangian().size() == 1);
    const auto lift = heisenberg_lift(S, S.theta());
    CHECK(lift.eta.degree() == static_cast<std::int64_t>(p));
    // Uniqueness: Ind_Z^J theta = p * eta.
    CHECK(S.theta().to_class_function().induce_to(J) == lift.eta.scaled(p));

    // Trivial theta: the whole space is radical and eta is the chosen extension.
    const SymplecticSpace T(J, Z, LinearChar::trivial(Z), p);
    CHECK(T.radical_dim() == 2);
    const auto lin = extend_linear_through_abelianization(J, LinearChar::trivial(Z));
    CHECK(lin.size() == p * p);
    const auto t = heisenberg_lift(T, lin[1]);
    CHECK(t.eta.degree() == 1);

    const SymplecticSpace zero(Z, Z, central_char(Z, p, 1), p);
    CHECK(zero.dim() == 0);
    CHECK(heisenberg_lift(zero, zero.theta()).eta.degree() == 1);
  }
  const auto F2 = ring("Zp:p=2,r=1");
  const auto J = unitriangular3(F2);
  CHECK_THROWS_AS(SymplecticSpace(J, Group::generate(J->codec(), {}), LinearChar::trivial(Group::generate(J->codec(), {})), 2), Error);
}
