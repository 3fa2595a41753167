#include "sl2swc/swc.hpp"

#include <algorithm>

#include "sl2swc/cohomology.hpp"
#include "sl2swc/error.hpp"

namespace sl2swc {

namespace {

using i64 = std::int64_t;

i64 value_at(const VirtualRep& pi, std::size_t element) {
  const auto& g = pi.table()->group();
  return pi.value_at_class(g->classes().class_of[element]).to_integer();
}

std::string power_string(const std::string& gen, i64 k) {
  return k == 1 ? gen : gen + "^" + std::to_string(k);
}

// Smallest K with 2^K * delta > D.
int period_bits(int delta, int max_degree) {
  int k = 0;
  while ((i64{1} << k) * delta <= max_degree) ++k;
  return k;
}

i64 reduce_exponent(i64 n, int k) {
  const i64 mod = i64{1} << k;
  return ((n % mod) + mod) % mod;
}

bool same_terms(const GradedClass& a, const GradedClass& b) { return a.terms() == b.terms(); }

std::string dickson_gen_name(const GradedRing& ring) { return ring.presentation().generators[0]; }

}  // namespace

std::string_view to_string(Parity p) { return p == Parity::Odd ? "odd" : "even"; }

int sl2_q(const VirtualRep& pi) {
  const auto& g = pi.table()->group();
  if (g->family() != GroupFamily::SL2) fail(ErrorKind::InvalidArgument, "representation is not over SL(2,q)");
  return g->q();
}

Parity parity_of(const VirtualRep& pi) { return sl2_q(pi) % 2 == 1 ? Parity::Odd : Parity::Even; }

int ord2(std::int64_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "ord2 of 0");
  int t = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++t;
  }
  return t;
}

int two_rank(int q) {
  int r = 0;
  while ((1 << r) < q) ++r;
  if ((1 << r) != q) fail(ErrorKind::WrongParity, "q = " + std::to_string(q) + " is not a power of 2");
  return r;
}

std::int64_t r_pi(const VirtualRep& pi) {
  const int q = sl2_q(pi);
  if (q % 2 == 0) fail(ErrorKind::WrongParity, "r_pi needs odd q, got q = " + std::to_string(q));
  const auto& g = pi.table()->group();
  const i64 d = pi.degree();
  const i64 minus = value_at(pi, *g->minus_identity());
  if ((d - minus) % 8 != 0)
    fail(ErrorKind::NotDivisible, "chi(1) - chi(-1) = " + std::to_string(d - minus) + " is not divisible by 8");
  decompose_orthogonal(pi);
  return (d - minus) / 8;
}

MPi m_pi(const VirtualRep& pi) {
  const int q = sl2_q(pi);
  if (q % 2 == 1) fail(ErrorKind::WrongParity, "m_pi needs even q, got q = " + std::to_string(q));
  const auto& g = pi.table()->group();
  const i64 d = pi.degree();
  const i64 at_n0 = value_at(pi, unipotent_n0(*g));
  if ((d - at_n0) % q != 0)
    fail(ErrorKind::NotDivisible, "chi(1) - chi(n0) = " + std::to_string(d - at_n0) + " is not divisible by q");
  MPi out;
  out.m = (d - at_n0) / q;
  out.ell = d - out.m * (q - 1);
  return out;
}

int default_truncation(const VirtualRep& pi) {
  if (parity_of(pi) == Parity::Odd) {
    const i64 r = r_pi(pi);
    return static_cast<int>(std::max<i64>({4 * (r < 0 ? -r : r), 16}));
  }
  const i64 m = m_pi(pi).m;
  const int r = two_rank(sl2_q(pi));
  return static_cast<int>(std::max<i64>({4 * (m < 0 ? -m : m), (i64{1} << r) - 1, 16}));
}

bool unit_power_coefficient(std::int64_t n, std::int64_t i) { return binomial_odd(n, i); }

GradedClass odd_unit_power(std::int64_t n, int max_degree) {
  RingPtr ring = cached_ring(rings::swc_odd(), max_degree);
  GradedClass c(ring);
  for (i64 i = 0; 4 * i <= max_degree; ++i)
    if (unit_power_coefficient(n, i)) c.add_monomial(ring->key({static_cast<int>(i)}), static_cast<int>(4 * i));
  return c;
}

GradedClass even_unit_power(int r, std::int64_t n, int max_degree) {
  RingPtr ring = cached_ring(rings::dickson_algebra(r), max_degree);
  const int delta = ring->generator_degree(0);
  // (1 + D)^{2^K} = 1 + D^{2^K} is 1 below the truncation.
  const int k = period_bits(delta, max_degree);
  std::uint64_t e = static_cast<std::uint64_t>(reduce_exponent(n, std::min(k, 62)));
  GradedClass acc = GradedClass::one(ring);
  for (int j = 0; e; ++j, e >>= 1) {
    if (!(e & 1)) continue;
    GradedClass factor = GradedClass::one(ring);
    for (std::size_t i = 0; i < ring->generator_count(); ++i) {
      Exponents x(ring->generator_count(), 0);
      x[i] = 1 << j;
      factor += GradedClass::monomial(ring, x);
    }
    acc = acc * factor;
  }
  return acc;
}

GradedClass expand_in_v(const GradedClass& c, int v_degree) {
  const auto& ring = c.ring();
  const int r = static_cast<int>(ring->generator_count());
  const int sd = ring->max_degree();
  auto map = maps::cached("dickson:" + std::to_string(r) + ":" + std::to_string(sd) + ":" + std::to_string(v_degree),
                          [&] { return maps::dickson_to_poly(r, sd, v_degree); });
  if (map->source() != ring) {
    GradedClass moved(map->source());
    for (int d = 0; d <= sd; ++d)
      for (auto k : c.support(d)) moved.add_monomial(k, d);
    return map->apply(moved);
  }
  return map->apply(c);
}

TotalSwc total_swc(const VirtualRep& pi, std::optional<int> max_degree) {
  TotalSwc out;
  out.parity = parity_of(pi);
  const int d = max_degree.value_or(default_truncation(pi));
  if (d < 0) fail(ErrorKind::InvalidArgument, "negative truncation degree");
  out.max_degree = d;
  if (out.parity == Parity::Odd) {
    out.cls = odd_unit_power(r_pi(pi), d);
  } else {
    out.cls = even_unit_power(two_rank(sl2_q(pi)), m_pi(pi).m, d);
  }
  if (pi.genuine()) {
    const i64 deg = pi.degree();
    if (deg < d) {
      GradedClass cut = out.cls.truncated(static_cast<int>(deg));
      out.consistent = cut == out.cls;
      out.cls = cut;
      out.degree_truncated = true;
    }
  }
  return out;
}

std::optional<std::int64_t> lowest_term_index(std::int64_t n, std::int64_t limit) {
  for (i64 i = 1; i <= limit; ++i)
    if (unit_power_coefficient(n, i)) return i;
  return std::nullopt;
}

Obstruction obstruction(const VirtualRep& pi, std::optional<int> max_degree) {
  Obstruction out;
  TotalSwc total = total_swc(pi, max_degree);
  const auto& cls = total.cls;
  const auto lowest = cls.lowest_positive_degree();
  i64 n = 0;
  std::string gen;
  i64 delta = 0;
  if (total.parity == Parity::Odd) {
    n = r_pi(pi);
    gen = "e";
    delta = 4;
  } else {
    n = m_pi(pi).m;
    gen = dickson_gen_name(*cls.ring());
    delta = cls.ring()->generator_degree(0);
  }
  if (n == 0) {
    out.verified = !lowest.has_value();
    if (!out.verified) fail(ErrorKind::Mismatch, "total class is not 1 although the exponent vanishes");
    return out;
  }
  const int s = ord2(n);
  const i64 power = i64{1} << s;
  out.degree = delta * power;
  out.class_string = power_string(gen, power);
  if (*out.degree <= total.max_degree) {
    Exponents e(cls.ring()->generator_count(), 0);
    e[0] = static_cast<int>(power);
    const GradedClass expect = GradedClass::monomial(cls.ring(), e);
    if (!lowest || *lowest != *out.degree || !(cls.component(*lowest) == expect))
      fail(ErrorKind::Mismatch, "obstruction " + out.class_string + " in degree " + std::to_string(*out.degree) +
                                    " disagrees with the expansion " + cls.to_string());
    out.verified = true;
  }
  return out;
}

TopClass top_swc_nonzero(const VirtualRep& pi, std::optional<int> max_degree) {
  if (!pi.genuine()) fail(ErrorKind::InvalidArgument, "the top class needs a genuine representation");
  TopClass out;
  const i64 deg = pi.degree();
  if (parity_of(pi) == Parity::Odd) {
    const auto& g = pi.table()->group();
    const i64 minus = value_at(pi, *g->minus_identity());
    out.nonzero = minus == -deg;
    out.criterion = out.nonzero ? "chi(-1) = -chi(1)" : "chi(-1) != -chi(1)";
  } else {
    const MPi mp = m_pi(pi);
    out.nonzero = mp.ell == 0;
    out.criterion = out.nonzero ? "ell = 0 (no N-fixed vectors)" : "ell = " + std::to_string(mp.ell) + " != 0";
  }
  const int d = max_degree.value_or(default_truncation(pi));
  if (deg <= d) {
    TotalSwc total = total_swc(pi, d);
    const bool actual = !total.cls.is_zero(static_cast<int>(deg));
    if (actual != out.nonzero)
      fail(ErrorKind::Mismatch, "top class criterion disagrees with the expansion " + total.cls.to_string());
    out.checked = true;
  }
  return out;
}

std::int64_t ImageExponent::signed_residue() const {
  const i64 mod = i64{1} << k;
  return residue >= mod / 2 && k > 0 ? residue - mod : residue;
}

std::optional<ImageExponent> image_exponent(const GradedClass& c) {
  const auto& ring = c.ring();
  const std::string& name = ring->name();
  const int top = ring->max_degree();
  if (!c.is_unit()) return std::nullopt;
  const bool odd = name == "swc_odd" || name == "sl2odd";
  const bool even = name.rfind("Dickson", 0) == 0;
  if (!odd && !even) return std::nullopt;
  if (odd) {
    // Only pure powers of e may appear.
    for (int d = 0; d <= top; ++d)
      for (auto k : c.support(d)) {
        const Exponents e = ring->exponents(k);
        for (std::size_t i = 1; i < e.size(); ++i)
          if (e[i] != 0) return std::nullopt;
      }
  }
  const int delta = ring->generator_degree(0);
  ImageExponent out;
  out.k = std::min(period_bits(delta, top), 62);
  for (int j = 0; j < out.k; ++j) {
    Exponents e(ring->generator_count(), 0);
    e[0] = 1 << j;
    const int d = ring->degree_of(e);
    auto pos = ring->basis_index(ring->key(e), d);
    if (pos && c.coefficient(d, *pos)) out.residue |= i64{1} << j;
  }
  GradedClass expect = odd ? odd_unit_power(out.residue, top)
                           : even_unit_power(static_cast<int>(ring->generator_count()), out.residue, top);
  if (odd && name == "sl2odd") {
    GradedClass moved(ring);
    for (int d = 0; d <= top; ++d)
      for (auto k : expect.support(d)) moved.add_monomial(ring->key({ring->exponents(k)[0], 0}), d);
    expect = moved;
  }
  if (!same_terms(expect, c)) return std::nullopt;
  return out;
}

SwcReport swc_report(const VirtualRep& pi, std::optional<int> max_degree) {
  SwcReport rep;
  rep.q = sl2_q(pi);
  rep.parity = parity_of(pi);
  rep.degree = pi.degree();
  rep.genuine = pi.genuine();
  const int d = max_degree.value_or(default_truncation(pi));
  if (rep.parity == Parity::Odd) {
    rep.r_or_m = r_pi(pi);
  } else {
    const MPi mp = m_pi(pi);
    rep.r_or_m = mp.m;
    rep.ell = mp.ell;
  }
  rep.total = total_swc(pi, d);
  if (rep.parity == Parity::Even) rep.total_v = expand_in_v(rep.total.cls, std::min(d, 64));
  rep.obstruction = obstruction(pi, d);
  if (rep.genuine) rep.top = top_swc_nonzero(pi, d);
  return rep;
}

}  // namespace sl2swc
