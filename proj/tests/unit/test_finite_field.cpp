#include <set>

#include "helpers.hpp"
#include "sl2swc/finite_field.hpp"

using namespace sl2swc;

TEST_SUITE("finite_field") {

TEST_CASE("GF(4) modulus and t*t") {
  auto f = FiniteField::make(2, 2);
  CHECK(f->order() == 4);
  CHECK(f->modulus_string() == "t^2 + t + 1");
  const auto t = f->from_coefficients({0, 1});
  CHECK(f->mul(t, t) == f->from_coefficients({1, 1}));
  CHECK(f->element_string(f->mul(t, t)) == "t+1");
}

TEST_CASE("GF(5) inverse of 2") {
  auto f = FiniteField::make(5, 1);
  CHECK(f->inv(2) == 3);
  CHECK(f->mul(2, 3) == 1);
}

TEST_CASE("GF(9) multiplicative group is cyclic of order 8") {
  auto f = FiniteField::make(3, 2);
  CHECK(f->order() == 9);
  CHECK(elements(f).size() == 9);
  const auto g = f->primitive_element();
  std::set<std::uint32_t> seen;
  for (int k = 0; k < 8; ++k) seen.insert(f->pow(g, static_cast<std::uint64_t>(k)));
  CHECK(seen.size() == 8);
  CHECK(f->pow(g, 8) == 1);
  CHECK(f->log(g) == 1);
}

TEST_CASE("trace on GF(4)") {
  auto f = FiniteField::make(2, 2);
  const auto t = f->from_coefficients({0, 1});
  CHECK(f->trace(0) == 0);
  CHECK(f->trace(1) == 0);
  CHECK(f->trace(t) == 1);
}

TEST_CASE("errors") {
  CHECK_FAILS_WITH(FiniteField::make(4, 1), ErrorKind::CompositeP);
  CHECK_FAILS_WITH(FiniteField::make(1, 1), ErrorKind::CompositeP);
  CHECK_FAILS_WITH(FiniteField::make(3, 0), ErrorKind::InvalidArgument);
  CHECK_FAILS_WITH(FiniteField::make(2, 40), ErrorKind::TooLarge);
}

TEST_CASE("field axioms hold exhaustively") {
  for (auto [p, r] : {std::pair{2, 1}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}, {2, 4}}) {
    auto f = FiniteField::make(p, r);
    const auto q = f->order();
    CAPTURE(q);
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a) {
      ok = ok && f->add(a, f->neg(a)) == 0 && f->sub(a, a) == 0;
      if (a != 0) ok = ok && f->mul(a, f->inv(a)) == 1;
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        ok = ok && f->add(a, b) == f->add(b, a) && f->mul(a, b) == f->mul(b, a);
        for (std::uint32_t c = 0; c < q && ok; ++c) {
          ok = ok && f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c));
          ok = ok && f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c);
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("Frobenius is an automorphism of order r and trace is additive") {
  for (auto [p, r] : {std::pair{2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
    auto f = FiniteField::make(p, r);
    const auto q = f->order();
    bool ok = true;
    for (std::uint32_t a = 0; a < q; ++a) {
      auto x = a;
      for (int i = 0; i < r; ++i) x = f->frobenius(x);
      ok = ok && x == a;
      for (std::uint32_t b = 0; b < q; ++b) {
        ok = ok && f->frobenius(f->mul(a, b)) == f->mul(f->frobenius(a), f->frobenius(b));
        ok = ok && f->trace(f->add(a, b)) == (f->trace(a) + f->trace(b)) % static_cast<std::uint32_t>(p);
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("coefficients round-trip and FieldElement operators") {
  auto f = FiniteField::make(3, 2);
  for (std::uint32_t a = 0; a < 9; ++a) CHECK(f->from_coefficients(f->coefficients(a)) == a);
  auto els = elements(f);
  for (std::size_t i = 1; i < els.size(); ++i) {
    CHECK(els[i] * els[i].inverse() == els[1]);
    CHECK((els[i] / els[i]) == els[1]);
    CHECK(els[i - 1] < els[i]);
  }
  CHECK(f->from_integer(-1) == f->neg(1));
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(61));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

}
