#include "sl2swc/cohomology.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "sl2swc/error.hpp"

namespace sl2swc {

namespace {

void require_polynomial(const GradedRing& ring) {
  if (!ring.presentation().free())
    fail(ErrorKind::UnsupportedRing, "Steenrod squares are only implemented on polynomial rings, not " + ring.name());
  for (std::size_t i = 0; i < ring.generator_count(); ++i)
    if (ring.generator_degree(i) != 1)
      fail(ErrorKind::UnsupportedRing, ring.name() + " has generators outside degree 1");
}

bool lucas(std::uint64_t n, std::uint64_t t) { return (t & n) == t; }

}  // namespace

bool binomial_odd(std::int64_t n, std::int64_t t) {
  if (t < 0) return false;
  if (t == 0) return true;
  if (n >= 0) return t <= n && lucas(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t));
  const std::int64_t m = -n;
  return lucas(static_cast<std::uint64_t>(m + t - 1), static_cast<std::uint64_t>(t));
}

GradedClass steenrod_sq(int i, const GradedClass& a) {
  const auto& ring = a.ring();
  require_polynomial(*ring);
  if (i < 0) fail(ErrorKind::InvalidArgument, "negative Steenrod square");
  GradedClass out(ring);
  const int top = ring->max_degree();
  const std::size_t n = ring->generator_count();
  for (int d = 0; d + i <= top; ++d) {
    for (auto key : a.support(d)) {
      const Exponents e = ring->exponents(key);
      Exponents k(n, 0);
      // Distribute i among the generators with odd C(e_j, k_j).
      auto rec = [&](auto&& self, std::size_t j, int left) -> void {
        if (j == n) {
          if (left != 0) return;
          Exponents f = e;
          for (std::size_t s = 0; s < n; ++s) f[s] += k[s];
          out.add_monomial(ring->key(f), d + i);
          return;
        }
        for (int kj = 0; kj <= std::min(left, e[j]); ++kj) {
          if (!lucas(static_cast<std::uint64_t>(e[j]), static_cast<std::uint64_t>(kj))) continue;
          k[j] = kj;
          self(self, j + 1, left - kj);
        }
        k[j] = 0;
      };
      rec(rec, 0, i);
    }
  }
  return out;
}

GradedClass steenrod_total(const GradedClass& a) {
  GradedClass out(a.ring());
  for (int i = 0; i <= a.ring()->max_degree(); ++i) out += steenrod_sq(i, a);
  return out;
}

GradedClass wu_rhs(int i, int j, const GradedClass& w) {
  GradedClass out(w.ring());
  for (int t = 0; t <= i; ++t) {
    if (!binomial_odd(j - i + t - 1, t)) continue;
    out += w.component(i - t) * w.component(j + t);
  }
  return out;
}

GradedClass linear_form(const RingPtr& ring, std::uint32_t mask) {
  GradedClass out(ring);
  const std::size_t n = ring->generator_count();
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1U << i)) out += GradedClass::generator(ring, i);
  return out;
}

GradedClass frobenius(const GradedClass& a, int j) {
  GradedClass out = a;
  for (int s = 0; s < j; ++s) out = out.square();
  return out;
}

DicksonResult dickson(int r, int max_degree) {
  if (r < 1 || r > 6) fail(ErrorKind::InvalidArgument, "Dickson invariants need 1 <= r <= 6");
  const int top = (1 << r) - 1;
  if (max_degree < top)
    fail(ErrorKind::TruncationTooLow, "need D >= " + std::to_string(top) + ", got " + std::to_string(max_degree));
  RingPtr ring = cached_ring(rings::poly(r), max_degree);
  GradedClass prod = GradedClass::one(ring);
  for (std::uint32_t mask = 1; mask < (1U << r); ++mask) prod = prod * (GradedClass::one(ring) + linear_form(ring, mask));
  DicksonResult res{ring, prod, {}, {}};
  std::vector<bool> allowed(static_cast<std::size_t>(max_degree) + 1, false);
  for (int i = 1; i <= r; ++i) {
    const int deg = (1 << r) - (1 << (r - i));
    res.degrees.push_back(deg);
    res.d.push_back(prod.component(deg));
    allowed[static_cast<std::size_t>(deg)] = true;
  }
  for (int d = 1; d <= max_degree; ++d)
    if (!allowed[static_cast<std::size_t>(d)] && !prod.is_zero(d))
      fail(ErrorKind::LiftFailure, "product of (1 + v) has a component in degree " + std::to_string(d));
  return res;
}

namespace maps {

RestrictionMap q8_to_z(int sd, int td) {
  RingPtr src = cached_ring(rings::q8(), sd);
  RingPtr tgt = cached_ring(rings::poly(1), td);
  return RestrictionMap::make("Q8->Z", src, tgt,
                              {GradedClass(tgt), GradedClass(tgt), GradedClass::monomial(tgt, {4})});
}

RestrictionMap gen_quaternion_to_q8(int n, int sd, int td) {
  RingPtr src = cached_ring(rings::gen_quaternion(n), sd);
  RingPtr tgt = cached_ring(rings::q8(), td);
  return RestrictionMap::make(src->name() + "->Q8", src, tgt,
                              {GradedClass(tgt), GradedClass(tgt), GradedClass::generator(tgt, 2)});
}

RestrictionMap swc_odd_to_z(int sd, int td) {
  RingPtr src = cached_ring(rings::swc_odd(), sd);
  RingPtr tgt = cached_ring(rings::poly(1), td);
  return RestrictionMap::make("F2[e]->Z", src, tgt, {GradedClass::monomial(tgt, {4})});
}

RestrictionMap swc_odd_to_sl2odd(int sd, int td) {
  RingPtr src = cached_ring(rings::swc_odd(), sd);
  RingPtr tgt = cached_ring(rings::sl2odd(), td);
  return RestrictionMap::make("F2[e]->sl2odd", src, tgt, {GradedClass::generator(tgt, 0)});
}

RestrictionMap dickson_to_poly(int r, int sd, int td) {
  RingPtr src = cached_ring(rings::dickson_algebra(r), sd);
  const int top = (1 << r) - 1;
  DicksonResult dr = dickson(r, std::max(td, top));
  RingPtr tgt = cached_ring(rings::poly(r), td);
  std::vector<GradedClass> images;
  for (const auto& d : dr.d) {
    GradedClass img(tgt);
    for (int deg = 0; deg <= std::min(td, dr.ring->max_degree()); ++deg)
      for (auto k : d.support(deg)) img.add_monomial(k, deg);
    images.push_back(img);
  }
  return RestrictionMap::make("Dickson" + std::to_string(r) + "->F2[v]", src, tgt, std::move(images));
}

std::shared_ptr<const RestrictionMap> cached(const std::string& key, const std::function<RestrictionMap()>& make) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const RestrictionMap>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto m = std::make_shared<const RestrictionMap>(make());
  std::lock_guard lock(mu);
  return cache.emplace(key, m).first->second;
}

}  // namespace maps

}  // namespace sl2swc
