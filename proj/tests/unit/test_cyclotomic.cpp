#include <cmath>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "sl2swc/cyclotomic.hpp"

using namespace sl2swc;

namespace {

Cyclo random_cyclo(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<std::int64_t> d(-4, 4);
  std::vector<std::int64_t> c(static_cast<std::size_t>(m));
  for (auto& x : c) x = d(rng);
  return Cyclo::from_power_basis(m, c);
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("worked examples") {
  CHECK(Cyclo::zeta_power(4, 2) == Cyclo::integer(4, -1));
  CHECK(Cyclo::zeta_power(3, 1) + Cyclo::zeta_power(3, 2) == Cyclo::integer(3, -1));
  CHECK(Cyclo::zeta_power(8, 1) * Cyclo::zeta_power(8, 7) == Cyclo::integer(8, 1));
  CHECK(Cyclo::integer(5, 7).to_integer() == 7);
  CHECK_FAILS_WITH(Cyclo::zeta_power(4, 1).to_integer(), ErrorKind::NotRationalInteger);
  CHECK((-Cyclo::zeta_power(3, 1) - Cyclo::zeta_power(3, 2)).to_integer() == 1);
}

TEST_CASE("normal form has phi(m) coefficients") {
  for (int m : {1, 2, 3, 4, 5, 8, 12, 60}) {
    CHECK(Cyclo::zeta_power(m, 1).coeffs().size() == static_cast<std::size_t>(euler_phi(m)));
  }
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
}

TEST_CASE("string form") {
  CHECK(Cyclo::integer(4, 3).to_string() == "3");
  CHECK(Cyclo::zeta_power(4, 1).to_string() == "zeta4^1");
  CHECK((Cyclo::zeta_power(8, 1) * 2 - Cyclo::integer(8, 1)).to_string() == "-1+2*zeta8^1");
}

TEST_CASE("mixed orders compare through the lcm") {
  CHECK(Cyclo::zeta_power(2, 1) == Cyclo::integer(1, -1));
  CHECK(Cyclo::zeta_power(6, 2) == Cyclo::zeta_power(3, 1));
  CHECK(Cyclo::zeta_power(3, 1).lift(12) == Cyclo::zeta_power(12, 4));
  CHECK((Cyclo::zeta_power(4, 1) * Cyclo::zeta_power(3, 1)).order() == 12);
}

TEST_CASE("exact division") {
  CHECK((Cyclo::zeta_power(5, 1) * 6).divide_exact(3) == Cyclo::zeta_power(5, 1) * 2);
  CHECK_FAILS_WITH(Cyclo::zeta_power(5, 1).divide_exact(2), ErrorKind::NotDivisible);
  CHECK_FAILS_WITH(Cyclo::integer(5, 1).divide_exact(0), ErrorKind::NotDivisible);
}

TEST_CASE("ring laws and evaluation agree with complex numbers") {
  std::mt19937_64 rng(42);
  for (int m : {3, 4, 5, 8, 12, 15, 24}) {
    CAPTURE(m);
    for (int it = 0; it < 30; ++it) {
      const auto a = random_cyclo(rng, m), b = random_cyclo(rng, m), c = random_cyclo(rng, m);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == Cyclo::integer(m, 0));
      CHECK(close((a * b).evaluate(), a.evaluate() * b.evaluate()));
      CHECK(close(a.conj().evaluate(), std::conj(a.evaluate())));
      CHECK((a * b).conj() == a.conj() * b.conj());
      const auto n = (a * a.conj()).evaluate();
      CHECK(std::abs(n.imag()) < 1e-9);
      CHECK(n.real() > -1e-9);
      for (std::int64_t k = 1; k < m; ++k) {
        if (std::gcd(k, static_cast<std::int64_t>(m)) != 1) continue;
        CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
      }
    }
  }
}

}
