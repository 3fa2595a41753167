#include "sl2swc/finite_field.hpp"

#include <algorithm>
#include <sstream>

#include "sl2swc/error.hpp"

namespace sl2swc {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g over GF(p).
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint32_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - (lead * g[i]) % p) % p);
    }
    trim(f);
  }
  return f;
}

Poly monic_from_index(std::uint64_t index, int degree, std::uint32_t p) {
  Poly f(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  f.back() = 1;
  return f;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int r = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= r; ++k) {
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (poly_mod(f, monic_from_index(idx, k, p), p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::shared_ptr<const FiniteField> FiniteField::make(std::int64_t p, int r) {
  if (!is_prime(p)) fail(ErrorKind::CompositeP, std::to_string(p) + " is not prime");
  if (r < 1) fail(ErrorKind::InvalidArgument, "field degree must be positive");
  std::int64_t q = 1;
  for (int i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxOrder) {
      fail(ErrorKind::TooLarge, "field order exceeds " + std::to_string(kMaxOrder));
    }
  }
  const auto up = static_cast<std::uint32_t>(p);
  // Index order over the low coefficients compares c_{r-1} first.
  for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(q); ++idx) {
    Poly f = monic_from_index(idx, r, up);
    if (is_irreducible(f, up)) {
      return std::shared_ptr<const FiniteField>(new FiniteField(up, r, std::move(f)));
    }
  }
  fail(ErrorKind::NotFound, "no irreducible polynomial found");
}

FiniteField::FiniteField(std::uint32_t p, int r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < r_; ++i) {
    pow_p_.push_back(q_);
    q_ *= p_;
  }
  if (q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    neg_table_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      auto ca = coefficients(a);
      Poly na(ca.size());
      for (std::size_t i = 0; i < ca.size(); ++i) na[i] = (p_ - ca[i]) % p_;
      neg_table_[a] = static_cast<std::uint16_t>(from_coefficients(na));
      for (std::uint32_t b = 0; b < q_; ++b) {
        auto cb = coefficients(b);
        Poly s(ca.size());
        for (std::size_t i = 0; i < ca.size(); ++i) s[i] = (ca[i] + cb[i]) % p_;
        add_table_[static_cast<std::size_t>(a) * q_ + b] =
            static_cast<std::uint16_t>(from_coefficients(s));
        mul_table_[static_cast<std::size_t>(a) * q_ + b] =
            static_cast<std::uint16_t>(mul_slow(a, b));
      }
    }
  }
  // Multiplicative structure: primitive element, log and exp tables.
  const std::uint64_t n = q_ - 1;
  const auto factors = prime_factors(n);
  for (std::uint32_t a = 1; a < q_; ++a) {
    bool generates = true;
    for (auto l : factors) {
      if (pow(a, n / l) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) {
      primitive_ = a;
      break;
    }
  }
  std::vector<std::uint32_t> logs(q_, 0);
  std::vector<std::uint32_t> exps(n, 0);
  std::uint32_t x = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    exps[k] = x;
    logs[x] = static_cast<std::uint32_t>(k);
    x = mul(x, primitive_);
  }
  log_ = std::move(logs);
  exp_ = std::move(exps);
  inv_table_.assign(q_, 0);
  for (std::uint32_t a = 1; a < q_; ++a) {
    inv_table_[a] = exp_[(n - log_[a]) % n];
  }
}

std::vector<std::uint32_t> FiniteField::coefficients(std::uint32_t a) const {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(r_), 0);
  for (int i = 0; i < r_; ++i) {
    c[static_cast<std::size_t>(i)] = a % p_;
    a /= p_;
  }
  return c;
}

std::uint32_t FiniteField::from_coefficients(const std::vector<std::uint32_t>& coeffs) const {
  std::uint32_t idx = 0;
  for (int i = std::min<int>(r_, static_cast<int>(coeffs.size())) - 1; i >= 0; --i) {
    idx = idx * p_ + coeffs[static_cast<std::size_t>(i)] % p_;
  }
  return idx;
}

std::uint32_t FiniteField::from_integer(std::int64_t n) const {
  const auto pp = static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(((n % pp) + pp) % pp);
}

std::uint32_t FiniteField::mul_slow(std::uint32_t a, std::uint32_t b) const {
  auto ca = coefficients(a);
  auto cb = coefficients(b);
  Poly prod(ca.size() + cb.size(), 0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    }
  }
  return from_coefficients(poly_mod(std::move(prod), modulus_, p_));
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  std::uint32_t out = 0;
  for (int i = r_ - 1; i >= 0; --i) {
    const std::uint32_t d = pow_p_[static_cast<std::size_t>(i)];
    out = out * p_ + ((a / d) % p_ + (b / d) % p_) % p_;
  }
  return out;
}

std::uint32_t FiniteField::neg(std::uint32_t a) const {
  if (!neg_table_.empty()) return neg_table_[a];
  std::uint32_t out = 0;
  for (int i = r_ - 1; i >= 0; --i) {
    const std::uint32_t d = pow_p_[static_cast<std::size_t>(i)];
    out = out * p_ + (p_ - (a / d) % p_) % p_;
  }
  return out;
}

std::uint32_t FiniteField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  if (!exp_.empty()) {
    if (a == 0 || b == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
  }
  return mul_slow(a, b);
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) fail(ErrorKind::InvalidArgument, "inverse of zero");
  return inv_table_[a];
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1;
  while (e > 0) {
    if (e & 1U) result = mul(result, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return result;
}

std::uint32_t FiniteField::trace(std::uint32_t a) const {
  std::uint32_t sum = 0;
  std::uint32_t x = a;
  for (int i = 0; i < r_; ++i) {
    sum = add(sum, x);
    x = frobenius(x);
  }
  // The trace lies in GF(p), i.e. has index < p.
  return sum;
}

std::string FiniteField::modulus_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = r_; i >= 0; --i) {
    const auto c = modulus_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (c != 1 && i > 0) os << "*";
    if (i > 0) os << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::string FiniteField::element_string(std::uint32_t a) const {
  if (r_ == 1) return std::to_string(a);
  auto c = coefficients(a);
  std::ostringstream os;
  bool first = true;
  for (int i = r_ - 1; i >= 0; --i) {
    const auto ci = c[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    if (!first) os << "+";
    first = false;
    if (ci != 1 || i == 0) os << ci;
    if (ci != 1 && i > 0) os << "*";
    if (i > 0) os << "t";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

FieldElement::FieldElement(std::shared_ptr<const FiniteField> field, std::uint32_t index)
    : field_(std::move(field)), index_(index) {
  if (!field_ || index_ >= field_->order()) {
    fail(ErrorKind::InvalidArgument, "field element index out of range");
  }
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(index_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(index_, e)}; }
FieldElement FieldElement::frobenius() const { return {field_, field_->frobenius(index_)}; }

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, field_->add(index_, o.index_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, field_->sub(index_, o.index_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(index_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, field_->mul(index_, o.index_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {field_, field_->mul(index_, field_->inv(o.index_))};
}

bool FieldElement::operator==(const FieldElement& o) const {
  return field_.get() == o.field_.get() && index_ == o.index_;
}

std::strong_ordering FieldElement::operator<=>(const FieldElement& o) const {
  return index_ <=> o.index_;
}

std::vector<FieldElement> elements(const std::shared_ptr<const FiniteField>& field) {
  std::vector<FieldElement> out;
  out.reserve(field->order());
  for (std::uint32_t i = 0; i < field->order(); ++i) out.emplace_back(field, i);
  return out;
}

}  // namespace sl2swc
