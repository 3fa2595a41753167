#include "helpers.hpp"
#include "sl2swc/constructions.hpp"
#include "sl2swc/oracle.hpp"

using namespace sl2swc;

TEST_SUITE("constructions") {

TEST_CASE("principal series has degree q+1 and indicator -1") {
  // q = 3 has no alpha with alpha^2 != 1.
  CHECK_FALSE(first_ps_exponent(char_table(Group::sl2(3))).has_value());
  for (int q : {5, 7, 9}) {
    CAPTURE(q);
    auto t = char_table(Group::sl2(q));
    auto k = first_ps_exponent(t);
    REQUIRE(k);
    auto ps = principal_series(t, *k);
    CHECK(ps.degree() == q + 1);
    CHECK(ps.genuine());
    CHECK(inner_product(ps.character(), ps.character()) == 1);
    CHECK(fs_indicator(ps.character()) == -1);
  }
}

TEST_CASE("cuspidal has degree q-1 and symplectic constituents") {
  for (int q : {3, 5, 7, 9}) {
    CAPTURE(q);
    auto t = char_table(Group::sl2(q));
    auto k = first_cusp_exponent(t);
    REQUIRE(k);
    auto c = cuspidal(t, *k);
    CHECK(c.degree() == q - 1);
    CHECK(inner_product(c.character(), c.character()) == 1);
    CHECK(fs_indicator(c.character()) == -1);
  }
  // Off the exceptional congruence k = (q+1)/2 mod q+1 the restriction stays irreducible;
  // on it, the two constituents are still symplectic.
  auto t5 = char_table(Group::sl2(5));
  auto c3 = cuspidal(t5, 3);
  CHECK(c3.degree() == 4);
  for (std::size_t i = 0; i < t5->size(); ++i) {
    if (c3.multiplicity(i) != 0) CHECK(t5->indicator(i) == -1);
  }
}

TEST_CASE("induced GL characters have the stated degrees") {
  auto gl = Group::gl2(5);
  CHECK(principal_series_gl(gl, 1).degree() == 6);
  CHECK(cuspidal_gl(gl, 1).degree() == 4);
}

TEST_CASE("cuspidal character does not depend on the additive character") {
  auto gl = Group::gl2(3);
  const auto base = cuspidal_gl(gl, 1, 1);
  for (std::uint32_t a = 2; a < 3; ++a) CHECK(cuspidal_gl(gl, 1, a) == base);
  auto gl4 = Group::gl2(4);
  const auto b4 = cuspidal_gl(gl4, 1, 1);
  for (std::uint32_t a = 2; a < 4; ++a) CHECK(cuspidal_gl(gl4, 1, a) == b4);
}

TEST_CASE("even q constructions") {
  for (int q : {2, 4, 8}) {
    auto t = char_table(Group::sl2(q));
    if (auto k = first_ps_exponent(t)) CHECK(principal_series(t, *k).degree() == q + 1);
    if (auto k = first_cusp_exponent(t)) CHECK(cuspidal(t, *k).degree() == q - 1);
  }
}

TEST_CASE("bad parameters") {
  auto t = char_table(Group::sl2(5));
  CHECK_FAILS_WITH(principal_series(t, 0), ErrorKind::BadConstructionParams);
  CHECK_FAILS_WITH(principal_series(t, 2), ErrorKind::BadConstructionParams);  // alpha^2 = 1
  CHECK_FAILS_WITH(principal_series(t, 4), ErrorKind::BadConstructionParams);  // alpha(-1) = 1
  CHECK_FAILS_WITH(cuspidal(t, 0), ErrorKind::BadConstructionParams);
  CHECK_FAILS_WITH(cuspidal(t, 6), ErrorKind::BadConstructionParams);  // chi^q = chi
}

TEST_CASE("additive characters of N") {
  auto g = Group::sl2(5);
  auto n = standard_subgroup(g, SubgroupTag::N);
  CHECK(additive_character(n, 0) == ClassFunction::trivial(n.as_group()));
  CHECK(inner_product(additive_character(n, 1), additive_character(n, 2)) == 0);
}

TEST_CASE("quaternion rho") {
  auto q8 = Group::gen_quaternion(3);
  auto rho = quaternion_rho(q8);
  CHECK(rho.degree() == 2);
  CHECK(inner_product(rho, rho) == 1);
  CHECK(fs_indicator(rho) == -1);
}

}
