#include "helpers.hpp"
#include "sl2swc/constructions.hpp"
#include "sl2swc/oracle.hpp"
#include "sl2swc/swc.hpp"

using namespace sl2swc;

namespace {

std::size_t symplectic_pi0(const TablePtr& t) {
  for (std::size_t i = 0; i < t->size(); ++i) {
    if (t->degree(i) == 2 && t->indicator(i) == -1) return i;
  }
  FAIL("no degree-2 symplectic irreducible");
  return 0;
}

}  // namespace

TEST_SUITE("swc") {

TEST_CASE("r_pi examples") {
  auto t = char_table(Group::sl2(3));
  CHECK(r_pi(VirtualRep::regular(t)) == 3);
  CHECK(r_pi(symmetrize(VirtualRep::irreducible(t, symplectic_pi0(t)))) == 1);
  for (int q : {3, 5, 7, 9}) {
    auto tq = char_table(Group::sl2(q));
    for (std::size_t i = 0; i < tq->size(); ++i) {
      if (tq->indicator(i) == 1) CHECK(r_pi(VirtualRep::irreducible(tq, i)) == 0);
    }
  }
  CHECK_FAILS_WITH(r_pi(VirtualRep::irreducible(t, symplectic_pi0(t))), ErrorKind::NotDivisible);
  CHECK_FAILS_WITH(r_pi(VirtualRep::irreducible(t, 1)), ErrorKind::NotOrthogonal);
  CHECK_FAILS_WITH(r_pi(VirtualRep::trivial(char_table(Group::sl2(4)))), ErrorKind::WrongParity);
}

TEST_CASE("m_pi examples") {
  auto t = char_table(Group::sl2(4));
  auto triv = m_pi(VirtualRep::trivial(t));
  CHECK(triv.ell == 1);
  CHECK(triv.m == 0);
  for (std::size_t i = 1; i < t->size(); ++i) CHECK(m_pi(VirtualRep::irreducible(t, i)).m == 1);
  CHECK(m_pi(VirtualRep::regular(t)).m == 15);
  CHECK_FAILS_WITH(m_pi(VirtualRep::trivial(char_table(Group::sl2(3)))), ErrorKind::WrongParity);
}

TEST_CASE("total classes") {
  auto t3 = char_table(Group::sl2(3));
  CHECK(total_swc(VirtualRep::regular(t3)).cls.to_string() == "1 + e + e^2 + e^3");
  auto pi0 = symmetrize(VirtualRep::irreducible(t3, symplectic_pi0(t3)));
  auto neg = total_swc(VirtualRep::zero(t3) - pi0, 16);
  CHECK(neg.cls.to_string() == "1 + e + e^2 + e^3 + e^4");
  CHECK(total_swc(VirtualRep::trivial(t3)).cls.to_string() == "1");

  auto t4 = char_table(Group::sl2(4));
  for (std::size_t i = 1; i < t4->size(); ++i) {
    CHECK(total_swc(VirtualRep::irreducible(t4, i)).cls.to_string() == "1 + d1 + d2");
  }
  auto t2 = char_table(Group::sl2(2));
  auto w = total_swc(VirtualRep::irreducible(t2, 1));
  CHECK(expand_in_v(w.cls, 4).to_string() == "1 + v");
}

TEST_CASE("genuine truncation at the degree") {
  auto t = char_table(Group::sl2(3));
  auto pi0 = symmetrize(VirtualRep::irreducible(t, symplectic_pi0(t)));
  auto w = total_swc(pi0 * 2, 64);
  CHECK(w.degree_truncated);
  CHECK(w.consistent);
  CHECK(w.cls.to_string() == "1 + e^2");
}

TEST_CASE("unit power coefficients follow Lucas") {
  for (std::int64_t n = -40; n <= 40; ++n) {
    for (std::int64_t i = 0; i < 40; ++i) {
      bool expect;
      if (n >= 0) {
        expect = (i & n) == i;
      } else {
        const std::int64_t m = -n + i - 1;  // C(-k, i) = +-C(k+i-1, i)
        expect = (i & m) == i;
      }
      CHECK(unit_power_coefficient(n, i) == expect);
    }
  }
  auto u = odd_unit_power(-1, 16);
  CHECK(u.to_string() == "1 + e + e^2 + e^3 + e^4");
}

TEST_CASE("obstruction degrees") {
  auto t = char_table(Group::sl2(3));
  auto pi0 = symmetrize(VirtualRep::irreducible(t, symplectic_pi0(t)));
  auto o1 = obstruction(pi0);
  CHECK(o1.degree == 4);
  CHECK(o1.class_string == "e");
  auto o6 = obstruction(pi0 * 6);
  CHECK(o6.degree == 8);
  CHECK(o6.class_string == "e^2");
  CHECK_FALSE(obstruction(VirtualRep::trivial(t)).degree.has_value());
  for (std::int64_t n = 1; n <= 1024; ++n) {
    auto low = lowest_term_index(n, 2048);
    REQUIRE(low);
    CHECK(*low == (std::int64_t{1} << ord2(n)));
  }
  auto t8 = char_table(Group::sl2(8));
  auto two = VirtualRep::irreducible(t8, 1) * 2;
  REQUIRE(m_pi(two).m == 2);
  auto o = obstruction(two);
  CHECK(o.degree == 8);
  CHECK(o.class_string == "d1^2");
}

TEST_CASE("top class criteria") {
  auto t = char_table(Group::sl2(3));
  auto pi0 = symmetrize(VirtualRep::irreducible(t, symplectic_pi0(t)));
  auto top = top_swc_nonzero(pi0);
  CHECK(top.nonzero);
  CHECK(top.checked);
  CHECK(total_swc(pi0).cls.component(4).to_string() == "e");
  CHECK_FALSE(top_swc_nonzero(VirtualRep::trivial(t)).nonzero);

  for (int q : {2, 4, 8}) {
    auto te = char_table(Group::sl2(q));
    auto k = first_cusp_exponent(te);
    REQUIRE(k);
    auto c = cuspidal(te, *k);
    auto tc = top_swc_nonzero(c);
    CHECK(tc.nonzero);
    const int r = two_rank(q);
    auto w = total_swc(c).cls;
    CHECK(w.component(q - 1).to_string() == "d" + std::to_string(r));
  }
}

TEST_CASE("image exponents") {
  auto r = cached_ring(rings::swc_odd(), 32);
  auto one = GradedClass::one(r);
  auto e = GradedClass::generator(r, 0);
  auto im = image_exponent(one + e);
  REQUIRE(im);
  CHECK(im->signed_residue() == 1);
  auto inv = image_exponent((one + e).inverse());
  REQUIRE(inv);
  CHECK(inv->signed_residue() == -1);
  auto sl = cached_ring(rings::sl2odd(), 16);
  CHECK_FALSE(image_exponent(GradedClass::one(sl) + GradedClass::generator(sl, 1)).has_value());
  auto im15 = image_exponent(even_unit_power(2, 15, 30));
  REQUIRE(im15);
  CHECK(im15->residue % (std::int64_t{1} << im15->k) == 15 % (std::int64_t{1} << im15->k));
}

TEST_CASE("reports") {
  auto t = char_table(Group::sl2(3));
  auto rep = swc_report(VirtualRep::regular(t));
  CHECK(rep.q == 3);
  CHECK(rep.parity == Parity::Odd);
  CHECK(rep.r_or_m == 3);
  CHECK(rep.total.cls.to_string() == "1 + e + e^2 + e^3");
  auto t4 = char_table(Group::sl2(4));
  auto r4 = swc_report(VirtualRep::regular(t4));
  CHECK(r4.r_or_m == 15);
  REQUIRE(r4.total_v);
  CHECK(*r4.total_v == expand_in_v(even_unit_power(2, 15, r4.total.max_degree), r4.total_v->ring()->max_degree()));
  CHECK(default_truncation(VirtualRep::regular(t)) == 16);
  CHECK(default_truncation(VirtualRep::regular(t4)) == 60);
}

}
