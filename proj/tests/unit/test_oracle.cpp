#include "helpers.hpp"
#include "sl2swc/cohomology.hpp"
#include "sl2swc/constructions.hpp"
#include "sl2swc/oracle.hpp"
#include "sl2swc/swc.hpp"

using namespace sl2swc;

namespace {

std::size_t symplectic_pi0(const TablePtr& t) {
  for (std::size_t i = 0; i < t->size(); ++i) {
    if (t->degree(i) == 2 && t->indicator(i) == -1) return i;
  }
  return 0;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("C2 oracle") {
  CHECK(oracle_swc_c2(1, -1, 8, true).to_string() == "1 + v");
  CHECK(oracle_swc_c2(1, 1, 8, true).to_string() == "1");
  CHECK(oracle_swc_c2(4, -4, 8, true).to_string() == "1 + v^4");
  // Virtual: (1+v)^{-1}.
  CHECK(oracle_swc_c2(-1, 1, 4, false).to_string() == "1 + v + v^2 + v^3 + v^4");
}

TEST_CASE("Z oracle on S(rho) from Q8") {
  auto q8 = Group::gen_quaternion(3);
  auto rho = quaternion_rho(q8);
  auto s = rho + rho.dual();
  auto z = standard_subgroup(q8, SubgroupTag::Z);
  std::size_t inv = 0;
  for (auto i : z.indices()) {
    if (i != q8->identity()) inv = i;
  }
  CHECK(oracle_swc_Z(s, inv, 8).to_string() == "1 + v^4");
  CHECK(oracle_swc_Z(ClassFunction::trivial(q8), inv, 8).to_string() == "1");
}

TEST_CASE("Q8 oracle") {
  auto t = char_table(Group::sl2(3));
  auto q = find_quaternion(t->group());
  auto pi0 = symmetrize(VirtualRep::irreducible(t, symplectic_pi0(t)));
  auto prof = q_profile(pi0.character(), q);
  CHECK(prof.m4 == 1);
  CHECK(oracle_swc_Q(pi0, q, 8).to_string() == "1 + e");
  CHECK(oracle_swc_Q(VirtualRep::trivial(t), q, 8).to_string() == "1");
  for (int qq : {5, 7}) {
    auto tq = char_table(Group::sl2(qq));
    auto e = find_quaternion(tq->group());
    for (std::size_t i = 0; i < tq->size(); ++i) {
      if (tq->indicator(i) != 1) continue;
      auto p = q_profile(tq->irreducible(i), e);
      CHECK(p.m4 * 8 == tq->degree(i) - tq->irreducible(i).at(*tq->group()->minus_identity()).to_integer());
      if (p.m0 + p.m1 + p.m2 + p.m3 == 0) {
        CHECK(oracle_swc_Q(VirtualRep::irreducible(tq, i), e, 8).component(4).is_zero());
      }
    }
  }
  auto bad = QuaternionEmbedding{q.subgroup, q.x, q.x};
  CHECK_FAILS_WITH(check_embedding(*t->group(), bad), ErrorKind::BadEmbedding);
}

TEST_CASE("N oracle") {
  auto t2 = char_table(Group::sl2(2));
  CHECK(oracle_swc_N(VirtualRep::irreducible(t2, 1), 4).to_string() == "1 + v");
  CHECK(oracle_swc_N(VirtualRep::trivial(t2), 4).to_string() == "1");
  auto t4 = char_table(Group::sl2(4));
  auto w = oracle_swc_N(VirtualRep::irreducible(t4, 1), 3);
  CHECK(w == expand_in_v(GradedClass::parse(cached_ring(rings::dickson_algebra(2), 3), "1 + d1 + d2"), 3));
  for (std::size_t i = 1; i < t4->size(); ++i) {
    auto mult = n_multiplicities(VirtualRep::irreducible(t4, i));
    for (std::size_t a = 2; a < mult.size(); ++a) CHECK(mult[a] == mult[1]);
  }
  auto f = FiniteField::make(2, 2);
  CHECK(additive_form_mask(*f, 1) == 2);  // Tr(1) = 0, Tr(t) = 1
}

TEST_CASE("theorem verification") {
  auto t3 = char_table(Group::sl2(3));
  auto cases = verify_theorem(VirtualRep::regular(t3), 16);
  CHECK(cases.size() == 2);
  for (const auto& c : cases) CHECK(c.pass);
  CHECK(cases[0].lhs == "1 + v^4 + v^8 + v^12");
  auto t5 = char_table(Group::sl2(5));
  for (std::size_t i = 0; i < t5->size(); ++i) {
    if (t5->indicator(i) == 1) require_theorem(VirtualRep::irreducible(t5, i), 16);
  }
  for (const auto& l : oir_basis(*t5)) require_theorem(oir_rep(t5, l), 16);
}

TEST_CASE("Wu formula on restrictions") {
  auto t4 = char_table(Group::sl2(4));
  CHECK(wu_verify(VirtualRep::regular(t4), 1, 2));
  CHECK(wu_verify(VirtualRep::regular(t4), 2, 2));
  auto t3 = char_table(Group::sl2(3));
  for (int j = 0; j <= 4; ++j) CHECK(wu_verify(VirtualRep::regular(t3), 0, j));
}

TEST_CASE("suites pass and are deterministic") {
  auto t = char_table(Group::sl2(5));
  SuiteOptions o;
  o.trials = 15;
  auto a = suite_theorem(t, o);
  auto b = suite_theorem(t, o);
  CHECK(a.ok());
  CHECK(a.cases == b.cases);
  CHECK(suite_gow(t).ok());
  CHECK(suite_wu(t, o).ok());
  CHECK(suite_obstruction(t, o).ok());
  std::mt19937_64 r1(kDefaultSeed), r2(kDefaultSeed);
  CHECK(random_orthogonal(t, r1, 200) == random_orthogonal(t, r2, 200));
  std::mt19937_64 r3(kDefaultSeed);
  auto g = random_genuine(t, r3, 100);
  CHECK(g.genuine());
  CHECK(g.degree() <= 100);
}

TEST_CASE("Bezout combination") {
  for (int q : {5, 7}) {
    auto t = char_table(Group::sl2(q));
    auto pi = bezout_combination(t);
    CHECK(r_pi(pi) == 1);
    auto im = image_exponent(total_swc(pi).cls);
    REQUIRE(im);
    CHECK(im->signed_residue() == 1);
  }
  CHECK_THROWS_AS(bezout_combination(char_table(Group::sl2(4))), Error);
}

TEST_CASE("embedding independence") {
  for (int q : {3, 5, 7}) {
    auto t = char_table(Group::sl2(q));
    auto embs = find_quaternions(t->group(), 3);
    if (q == 3) {
      // Unique Sylow 2-subgroup: vary the generators instead.
      REQUIRE(embs.size() == 1);
      const auto& g = *t->group();
      const auto e = embs[0];
      embs.push_back(QuaternionEmbedding{e.subgroup, e.y, e.x});
      embs.push_back(QuaternionEmbedding{e.subgroup, e.x, g.mul(e.x, e.y)});
      for (const auto& x : embs) check_embedding(g, x);
    }
    REQUIRE(embs.size() == 3);
    for (std::size_t i = 0; i < t->size(); ++i) {
      // Non-orthogonal irreducibles enter through S(pi).
      auto pi = VirtualRep::irreducible(t, i);
      if (t->indicator(i) != 1) pi = symmetrize(pi);
      auto base = oracle_swc_Q(pi, embs[0], 12);
      for (std::size_t k = 1; k < embs.size(); ++k) CHECK(oracle_swc_Q(pi, embs[k], 12) == base);
    }
  }
}

}
