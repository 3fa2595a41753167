#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sl2swc {

std::int64_t euler_phi(std::int64_t m);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int m);

// Element of Z[zeta_m], zeta_m = exp(2*pi*i/m), stored as its unique
// representative of degree < phi(m) modulo Phi_m.
//
// Binary operations on values with different orders first lift both
// operands into Z[zeta_lcm]; equality is decided the same way.
class Cyclo {
 public:
  Cyclo() : m_(1), coeffs_{0} {}

  // coeffs[k] is the coefficient of zeta^k; indices >= m wrap around.
  static Cyclo from_power_basis(int m, std::span<const std::int64_t> coeffs);
  static Cyclo integer(int m, std::int64_t n);
  static Cyclo zeta_power(int m, std::int64_t k);

  int order() const { return m_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  std::optional<std::int64_t> as_integer() const;
  // Throws NotRationalInteger when a non-constant coefficient is nonzero.
  std::int64_t to_integer() const;

  // zeta -> zeta^{m-1}.
  Cyclo conj() const;
  // zeta -> zeta^k for k coprime to m.
  Cyclo galois(std::int64_t k) const;
  // Re-express in Z[zeta_M]; M must be a multiple of order().
  Cyclo lift(int big_m) const;
  // Exact division of every coefficient; throws NotDivisible.
  Cyclo divide_exact(std::int64_t d) const;

  std::complex<double> evaluate() const;
  // Integer when rational, otherwise "c*zeta{m}^{k}" terms joined by +/-.
  std::string to_string() const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  Cyclo& operator*=(std::int64_t s);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator*(Cyclo a, std::int64_t s) { return a *= s; }
  friend Cyclo operator*(std::int64_t s, Cyclo a) { return a *= s; }
  friend bool operator==(const Cyclo& a, const Cyclo& b);

 private:
  Cyclo(int m, std::vector<std::int64_t> coeffs) : m_(m), coeffs_(std::move(coeffs)) {}
  // Reduce a polynomial of arbitrary length modulo t^m - 1 and Phi_m.
  static Cyclo reduce(int m, std::vector<std::int64_t> poly);

  int m_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace sl2swc
