#include <set>

#include "helpers.hpp"
#include "sl2swc/group.hpp"

using namespace sl2swc;

namespace {

std::size_t count_order(const Group& g, const Subgroup& h, std::size_t ord) {
  std::size_t n = 0;
  for (auto i : h.indices()) n += g.element_order(i) == ord;
  return n;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("orders") {
  CHECK(Group::sl2(3)->order() == 24);
  CHECK(Group::sl2(4)->order() == 60);
  CHECK(Group::gl2(5)->order() == 480);
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const auto qq = static_cast<std::size_t>(q);
    CHECK(Group::sl2(q)->order() == qq * (qq * qq - 1));
  }
}

TEST_CASE("class counts") {
  CHECK(Group::sl2(2)->classes().count() == 3);
  CHECK(Group::sl2(3)->classes().count() == 7);
  CHECK(Group::sl2(4)->classes().count() == 5);
  CHECK(Group::sl2(5)->classes().count() == 9);
  CHECK(Group::sl2(7)->classes().count() == 11);
  CHECK(Group::sl2(8)->classes().count() == 9);
  CHECK(Group::sl2(9)->classes().count() == 13);
  CHECK(Group::gl2(3)->classes().count() == 8);
  CHECK(Group::gen_quaternion(3)->classes().count() == 5);
}

TEST_CASE("conjugacy partition is a partition into orbits") {
  for (int q : {3, 4, 5}) {
    auto g = Group::sl2(q);
    const auto& cd = g->classes();
    std::size_t total = 0;
    for (std::size_t c = 0; c < cd.count(); ++c) {
      total += cd.size[c];
      CHECK(cd.members[c].size() == cd.size[c]);
      CHECK(g->order() % cd.size[c] == 0);
      CHECK(cd.members[c].front() == cd.representative[c]);
    }
    CHECK(total == g->order());
    for (std::size_t x = 0; x < g->order(); x += 7) {
      for (std::size_t h = 0; h < g->order(); h += 5) CHECK(cd.class_of[g->conjugate(h, x)] == cd.class_of[h]);
    }
  }
}

TEST_CASE("power classes") {
  auto g = Group::sl2(5);
  const auto& cd = g->classes();
  for (std::size_t c = 0; c < cd.count(); ++c) {
    const auto rep = cd.representative[c];
    for (std::int64_t k : {-1, 0, 1, 2, 3, 7}) CHECK(cd.power(c, k) == cd.class_of[g->power(rep, k)]);
  }
  CHECK(cd.exponent == 60);
}

TEST_CASE("group axioms on SL(2,3)") {
  auto g = Group::sl2(3);
  const auto n = g->order();
  for (std::size_t a = 0; a < n; ++a) {
    CHECK(g->mul(a, g->inv(a)) == g->identity());
    for (std::size_t b = 0; b < n; b += 3) {
      for (std::size_t c = 0; c < n; c += 5) CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
    }
  }
  const auto m = std::get<Mat2>(g->element(g->identity()));
  CHECK(m.e == std::array<std::uint32_t, 4>{1, 0, 0, 1});
}

TEST_CASE("standard subgroups") {
  auto g5 = Group::sl2(5);
  auto z = standard_subgroup(g5, SubgroupTag::Z);
  CHECK(z.order() == 2);
  CHECK(z.contains(*g5->minus_identity()));

  auto g4 = Group::sl2(4);
  auto n = standard_subgroup(g4, SubgroupTag::N);
  CHECK(n.order() == 4);
  for (auto i : n.indices()) CHECK(g4->mul(i, i) == g4->identity());

  auto gl3 = Group::gl2(3);
  auto te = standard_subgroup(gl3, SubgroupTag::Te);
  CHECK(te.order() == 8);
  CHECK(gl3->element_order(cyclic_generator(te)) == 8);

  CHECK(standard_subgroup(g5, SubgroupTag::B).order() == 20);
  CHECK(standard_subgroup(g5, SubgroupTag::T).order() == 4);
  CHECK(standard_subgroup(g5, SubgroupTag::ZN).order() == 10);
  CHECK_FAILS_WITH(standard_subgroup(g5, SubgroupTag::Te), ErrorKind::UnsupportedTag);
  CHECK(parse_subgroup_tag("ZN") == SubgroupTag::ZN);
  CHECK_FAILS_WITH(parse_subgroup_tag("W"), ErrorKind::UnsupportedTag);
}

TEST_CASE("Subgroup::make validates closure") {
  auto g = Group::sl2(3);
  std::vector<std::size_t> bad{g->identity(), g->identity() == 0 ? 1U : 0U};
  CHECK_THROWS_AS(Subgroup::make(g, bad, SubgroupTag::Other), Error);
}

TEST_CASE("quaternion subgroups") {
  auto g3 = Group::sl2(3);
  auto q3 = find_quaternion(g3);
  CHECK(q3.subgroup.order() == 8);
  CHECK(count_order(*g3, q3.subgroup, 2) == 1);
  for (int q : {3, 5, 7}) {
    auto g = Group::sl2(q);
    const auto mi = *g->minus_identity();
    auto e = find_quaternion(g);
    CHECK(e.subgroup.order() == 8);
    CHECK(count_order(*g, e.subgroup, 2) == 1);
    CHECK(g->mul(e.x, e.x) == mi);
    CHECK(g->mul(e.y, e.y) == mi);
    CHECK(g->mul(g->mul(e.y, e.x), g->inv(e.y)) == g->inv(e.x));
  }
  CHECK(find_quaternions(Group::sl2(5), 3).size() == 3);
  CHECK_FAILS_WITH(find_quaternion(Group::sl2(4)), ErrorKind::EvenQ);
}

TEST_CASE("generalized quaternion groups") {
  auto q8 = Group::gen_quaternion(3);
  CHECK(q8->order() == 8);
  std::size_t inv = 0;
  for (std::size_t i = 0; i < 8; ++i) inv += q8->element_order(i) == 2;
  CHECK(inv == 1);
  auto q16 = Group::gen_quaternion(4);
  CHECK(q16->order() == 16);
  CHECK(q16->element_order(*q16->find(QuatWord{1, 0})) == 8);
  auto q1 = standard_subgroup(q16, SubgroupTag::Q1);
  CHECK(q1.order() == 8);
  std::size_t inv1 = 0;
  for (auto i : q1.indices()) inv1 += q16->element_order(i) == 2;
  CHECK(inv1 == 1);
}

TEST_CASE("bad parameters") {
  CHECK_FAILS_WITH(Group::sl2(6), ErrorKind::InvalidArgument);
  CHECK_FAILS_WITH(Group::sl2(1), ErrorKind::InvalidArgument);
  CHECK_FAILS_WITH(Group::sl2(83), ErrorKind::TooLarge);
  auto g = Group::sl2(3);
  CHECK_FAILS_WITH(g->index_of(Mat2{{1, 1, 1, 1}}), ErrorKind::NotFound);
}

TEST_CASE("unipotent n0") {
  auto g = Group::sl2(5);
  const auto m = std::get<Mat2>(g->element(unipotent_n0(*g)));
  CHECK(m.e == std::array<std::uint32_t, 4>{1, 1, 0, 1});
}

}
