#include "sl2swc/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "sl2swc/error.hpp"

namespace sl2swc {

std::int64_t euler_phi(std::int64_t m) {
  std::int64_t result = m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / std::gcd(a, b) * b; }

namespace {

std::vector<std::int64_t> exact_divide(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  // den monic; num divisible by den.
  const std::size_t dd = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return quot;
}

std::vector<std::int64_t> compute_cyclotomic(int m) {
  // t^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<std::int64_t> poly(static_cast<std::size_t>(m) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) poly = exact_divide(std::move(poly), cyclotomic_polynomial(d));
  }
  return poly;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int m) {
  static std::mutex mutex;
  static std::map<int, std::vector<std::int64_t>> cache;
  if (m < 1) fail(ErrorKind::InvalidArgument, "cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(m);  // recursion takes the lock itself
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(m, std::move(poly)).first->second;
}

Cyclo Cyclo::reduce(int m, std::vector<std::int64_t> poly) {
  std::vector<std::int64_t> folded(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < poly.size(); ++i) folded[i % static_cast<std::size_t>(m)] += poly[i];
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = folded.size(); i-- > deg;) {
    const std::int64_t c = folded[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) folded[i - deg + j] -= c * phi[j];
  }
  folded.resize(deg);
  return Cyclo(m, std::move(folded));
}

Cyclo Cyclo::from_power_basis(int m, std::span<const std::int64_t> coeffs) {
  return reduce(m, std::vector<std::int64_t>(coeffs.begin(), coeffs.end()));
}

Cyclo Cyclo::integer(int m, std::int64_t n) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(euler_phi(m)), 0);
  c[0] = n;
  return Cyclo(m, std::move(c));
}

Cyclo Cyclo::zeta_power(int m, std::int64_t k) {
  const std::int64_t mm = m;
  std::vector<std::int64_t> poly(static_cast<std::size_t>(m), 0);
  poly[static_cast<std::size_t>(((k % mm) + mm) % mm)] = 1;
  return reduce(m, std::move(poly));
}

bool Cyclo::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<std::int64_t> Cyclo::as_integer() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return coeffs_[0];
}

std::int64_t Cyclo::to_integer() const {
  auto v = as_integer();
  if (!v) fail(ErrorKind::NotRationalInteger, to_string());
  return *v;
}

Cyclo Cyclo::galois(std::int64_t k) const {
  const std::int64_t mm = m_;
  k = ((k % mm) + mm) % mm;
  std::vector<std::int64_t> poly(static_cast<std::size_t>(m_), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    poly[static_cast<std::size_t>((static_cast<std::int64_t>(i) * k) % mm)] += coeffs_[i];
  }
  return reduce(m_, std::move(poly));
}

Cyclo Cyclo::conj() const { return galois(m_ - 1); }

Cyclo Cyclo::lift(int big_m) const {
  if (big_m == m_) return *this;
  if (big_m % m_ != 0) fail(ErrorKind::InvalidArgument, "lift target must be a multiple of the order");
  const std::size_t step = static_cast<std::size_t>(big_m / m_);
  std::vector<std::int64_t> poly(static_cast<std::size_t>(big_m), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  return reduce(big_m, std::move(poly));
}

Cyclo Cyclo::divide_exact(std::int64_t d) const {
  if (d == 0) fail(ErrorKind::NotDivisible, "division by zero");
  Cyclo out = *this;
  for (auto& c : out.coeffs_) {
    if (c % d != 0) fail(ErrorKind::NotDivisible, to_string() + " by " + std::to_string(d));
    c /= d;
  }
  return out;
}

std::complex<double> Cyclo::evaluate() const {
  std::complex<double> sum = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / m_;
    sum += static_cast<double>(coeffs_[i]) * std::polar(1.0, angle);
  }
  return sum;
}

std::string Cyclo::to_string() const {
  if (auto n = as_integer()) return std::to_string(*n);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    const std::int64_t a = c < 0 ? -c : c;
    if (i == 0) {
      os << a;
      continue;
    }
    if (a != 1) os << a << "*";
    os << "zeta" << m_ << "^" << i;
  }
  return os.str();
}

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

namespace {

void align(Cyclo& a, Cyclo& b) {
  if (a.order() == b.order()) return;
  const int m = static_cast<int>(lcm64(a.order(), b.order()));
  a = a.lift(m);
  b = b.lift(m);
}

}  // namespace

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.m_ != m_) {
    Cyclo b = o;
    align(*this, b);
    return *this += b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  if (o.m_ != m_) {
    Cyclo b = o;
    align(*this, b);
    return *this -= b;
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (o.m_ != m_) {
    Cyclo b = o;
    align(*this, b);
    return *this *= b;
  }
  std::vector<std::int64_t> prod(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t a = coeffs_[i];
    if (a == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += a * o.coeffs_[j];
  }
  *this = reduce(m_, std::move(prod));
  return *this;
}

Cyclo& Cyclo::operator*=(std::int64_t s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.m_ == b.m_) return a.coeffs_ == b.coeffs_;
  Cyclo x = a;
  Cyclo y = b;
  align(x, y);
  return x.coeffs_ == y.coeffs_;
}

}  // namespace sl2swc
