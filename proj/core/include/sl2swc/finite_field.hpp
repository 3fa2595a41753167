#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace sl2swc {

bool is_prime(std::int64_t n);

// GF(p^r) realized as GF(p)[t]/(modulus). Elements are addressed by their
// index sum_i c_i p^i, where c_i is the coefficient of t^i; the canonical
// element order is the index order, so 0 and 1 have indices 0 and 1.
class FiniteField {
 public:
  static constexpr std::int64_t kMaxOrder = 10000;

  // Lowest monic irreducible modulus, comparing coefficient vectors from the
  // t^{r-1} coefficient downwards. Throws CompositeP / TooLarge.
  static std::shared_ptr<const FiniteField> make(std::int64_t p, int r);

  std::uint32_t characteristic() const { return p_; }
  int degree() const { return r_; }
  std::uint32_t order() const { return q_; }
  // Coefficients c_0..c_r of the modulus, c_r == 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return 1; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // a != 0
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }
  // Absolute trace to GF(p), returned as a residue in [0, p).
  std::uint32_t trace(std::uint32_t a) const;

  std::vector<std::uint32_t> coefficients(std::uint32_t a) const;
  std::uint32_t from_coefficients(const std::vector<std::uint32_t>& coeffs) const;
  // Index of the residue n mod p embedded in the prime field.
  std::uint32_t from_integer(std::int64_t n) const;

  // Least element (in canonical order) generating the multiplicative group.
  std::uint32_t primitive_element() const { return primitive_; }
  // Discrete logarithm to the base primitive_element(); a != 0.
  std::uint32_t log(std::uint32_t a) const { return log_[a]; }

  std::string modulus_string() const;
  std::string element_string(std::uint32_t a) const;

 private:
  FiniteField(std::uint32_t p, int r, std::vector<std::uint32_t> modulus);

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  int r_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<std::uint16_t> add_table_;
  std::vector<std::uint16_t> mul_table_;
  std::vector<std::uint16_t> neg_table_;
  std::vector<std::uint32_t> inv_table_;
  std::uint32_t primitive_ = 1;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

// Value-semantic element bound to its field.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const FiniteField> field, std::uint32_t index);

  const std::shared_ptr<const FiniteField>& field() const { return field_; }
  std::uint32_t index() const { return index_; }
  std::vector<std::uint32_t> coefficients() const { return field_->coefficients(index_); }

  bool is_zero() const { return index_ == 0; }
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius() const;
  std::uint32_t trace() const { return field_->trace(index_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;

  bool operator==(const FieldElement& o) const;
  std::strong_ordering operator<=>(const FieldElement& o) const;

  std::string to_string() const { return field_->element_string(index_); }

 private:
  std::shared_ptr<const FiniteField> field_;
  std::uint32_t index_;
};

// Enumerates every element of the field in canonical order.
std::vector<FieldElement> elements(const std::shared_ptr<const FiniteField>& field);

}  // namespace sl2swc
