#include <algorithm>

#include "helpers.hpp"
#include "sl2swc/characters.hpp"

using namespace sl2swc;

namespace {

std::vector<std::int64_t> degrees(const CharacterTable& t) {
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < t.size(); ++i) d.push_back(t.degree(i));
  return d;
}

void check_orthogonality(const CharacterTable& t) {
  const auto& g = *t.group();
  const auto& cd = g.classes();
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    sum += t.degree(i) * t.degree(i);
    for (std::size_t j = 0; j < t.size(); ++j) {
      CHECK(inner_product(t.irreducible(i), t.irreducible(j)) == (i == j ? 1 : 0));
    }
  }
  CHECK(sum == static_cast<std::int64_t>(g.order()));
  for (std::size_t a = 0; a < cd.count(); ++a) {
    for (std::size_t b = 0; b < cd.count(); ++b) {
      Cyclo s;
      for (std::size_t i = 0; i < t.size(); ++i) s += t.irreducible(i).at_class(a) * t.irreducible(i).at_class(b).conj();
      const std::int64_t expect = a == b ? static_cast<std::int64_t>(g.order() / cd.size[a]) : 0;
      CHECK(s == Cyclo::integer(1, expect));
    }
  }
}

}  // namespace

TEST_SUITE("characters") {

TEST_CASE("degrees") {
  CHECK(degrees(*char_table(Group::sl2(2))) == std::vector<std::int64_t>{1, 1, 2});
  CHECK(degrees(*char_table(Group::sl2(3))) == std::vector<std::int64_t>{1, 1, 1, 2, 2, 2, 3});
  auto t5 = char_table(Group::sl2(5));
  CHECK(t5->size() == 9);
  CHECK(degrees(*t5).back() == 6);
}

TEST_CASE("both orthogonality relations") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    check_orthogonality(*char_table(Group::sl2(q)));
  }
  for (int q : {3, 5}) {
    CAPTURE(q);
    check_orthogonality(*char_table(Group::gl2(q)));
  }
  check_orthogonality(*char_table(Group::gen_quaternion(3)));
  check_orthogonality(*char_table(Group::gen_quaternion(4)));
}

TEST_CASE("trivial character is X1 and labels are sorted by degree") {
  for (int q : {2, 3, 4, 5, 7}) {
    auto t = char_table(Group::sl2(q));
    CHECK(t->trivial_index() == 0);
    auto d = degrees(*t);
    CHECK(std::is_sorted(d.begin(), d.end()));
  }
}

TEST_CASE("table is deterministic") {
  auto a = char_table(Group::sl2(7));
  auto b = char_table(Group::sl2(7));
  for (std::size_t i = 0; i < a->size(); ++i) CHECK(a->irreducible(i).values() == b->irreducible(i).values());
}

TEST_CASE("Frobenius-Schur indicators") {
  auto t3 = char_table(Group::sl2(3));
  CHECK(t3->indicator(0) == 1);
  std::size_t symplectic2 = 0;
  for (std::size_t i = 0; i < t3->size(); ++i) {
    CHECK(fs_indicator(t3->irreducible(i)) == t3->indicator(i));
    if (t3->degree(i) == 2 && t3->indicator(i) == -1) ++symplectic2;
  }
  CHECK(symplectic2 == 1);
  auto tq = char_table(Group::gen_quaternion(3));
  for (std::size_t i = 0; i < tq->size(); ++i) {
    if (tq->degree(i) == 2) CHECK(tq->indicator(i) == -1);
  }
}

TEST_CASE("duals and central signs") {
  auto t = char_table(Group::sl2(5));
  for (std::size_t i = 0; i < t->size(); ++i) {
    CHECK(t->irreducible(t->dual(i)) == t->irreducible(i).dual());
    REQUIRE(t->central_sign(i).has_value());
  }
  CHECK_FALSE(char_table(Group::sl2(4))->central_sign(0).has_value());
  CHECK(t->dixon_prime() == dixon_prime(120, 60));
  CHECK(dixon_prime(24, 12) == 13);
}

TEST_CASE("restriction and induction") {
  auto g = Group::sl2(5);
  auto t = char_table(g);
  auto b = standard_subgroup(g, SubgroupTag::B);
  auto triv = ClassFunction::trivial(g);
  CHECK(restrict(triv, b) == ClassFunction::trivial(b.as_group()));
  auto ind = induce(b, ClassFunction::trivial(b.as_group()));
  CHECK(ind.degree() == 6);
  // Frobenius reciprocity.
  for (std::size_t i = 0; i < t->size(); ++i) {
    CHECK(inner_product(ind, t->irreducible(i)) ==
          inner_product(ClassFunction::trivial(b.as_group()), restrict(t->irreducible(i), b)));
  }
  auto whole = Subgroup::make(g, [&] {
    std::vector<std::size_t> all(g->order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return all;
  }(), SubgroupTag::Other);
  CHECK(induce(whole, ClassFunction::trivial(whole.as_group())).values() == triv.values());
}

TEST_CASE("virtual representations") {
  auto t = char_table(Group::sl2(3));
  auto reg = VirtualRep::regular(t);
  for (std::size_t i = 0; i < t->size(); ++i) CHECK(reg.multiplicity(i) == t->degree(i));
  CHECK(reg.degree() == 24);
  CHECK(reg.genuine());
  CHECK(VirtualRep::decompose(t, ClassFunction::regular(t->group())) == reg);
  auto x = VirtualRep::irreducible(t, 3) * 2 - VirtualRep::trivial(t);
  CHECK(x.to_string() == "-X1 + 2*X4");
  CHECK_FALSE(x.genuine());
  CHECK(x.character() == t->irreducible(3) * 2 - t->irreducible(0));
  CHECK_FAILS_WITH(VirtualRep::irreducible(t, 7), ErrorKind::UnknownIrreducible);
  auto half = ClassFunction::regular(t->group());
  CHECK_FAILS_WITH(VirtualRep::decompose(t, ClassFunction(t->group(), [&] {
                                               auto v = half.values();
                                               v[0] = Cyclo::integer(1, 1);
                                               return v;
                                             }())),
                   ErrorKind::NotIntegral);
}

TEST_CASE("orthogonal decomposition") {
  auto t = char_table(Group::sl2(3));
  std::size_t pi0 = 0;
  for (std::size_t i = 0; i < t->size(); ++i) {
    if (t->degree(i) == 2 && t->indicator(i) == -1) pi0 = i;
  }
  const auto p0 = VirtualRep::irreducible(t, pi0);
  CHECK_FAILS_WITH(decompose_orthogonal(p0), ErrorKind::NotOrthogonal);
  auto s = decompose_orthogonal(symmetrize(p0));
  REQUIRE(s.size() == 1);
  CHECK(s[0].label == OirLabel{true, pi0});
  CHECK(s[0].multiplicity == 1);

  // reg: linear characters once each, symplectic pairs as S-blocks.
  auto reg = VirtualRep::regular(t);
  VirtualRep rebuilt = VirtualRep::zero(t);
  for (const auto& term : decompose_orthogonal(reg)) rebuilt = rebuilt + oir_rep(t, term.label) * term.multiplicity;
  CHECK(rebuilt == reg);
  CHECK(to_string(OirLabel{true, 3}) == "S(X4)");
  for (const auto& l : oir_basis(*t)) CHECK(oir_rep(t, l).orthogonal());
}

TEST_CASE("OIR basis reconstructs random orthogonal reps") {
  for (int q : {3, 5, 7}) {
    auto t = char_table(Group::sl2(q));
    auto basis = oir_basis(*t);
    VirtualRep pi = VirtualRep::zero(t);
    for (std::size_t i = 0; i < basis.size(); ++i) pi = pi + oir_rep(t, basis[i]) * static_cast<std::int64_t>(i % 3);
    VirtualRep back = VirtualRep::zero(t);
    for (const auto& term : decompose_orthogonal(pi)) back = back + oir_rep(t, term.label) * term.multiplicity;
    CHECK(back == pi);
    CHECK(pi.orthogonal());
    CHECK(pi.in_ro());
  }
}

}
