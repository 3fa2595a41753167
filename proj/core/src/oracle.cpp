#include "sl2swc/oracle.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <map>
#include <mutex>
#include <numeric>

#include "sl2swc/cohomology.hpp"
#include "sl2swc/constructions.hpp"
#include "sl2swc/error.hpp"
#include "sl2swc/swc.hpp"

namespace sl2swc {

namespace {

using i64 = std::int64_t;

int period_bits(int max_degree) {
  int k = 0;
  while ((i64{1} << k) <= max_degree) ++k;
  return k;
}

std::optional<int> first_difference(const GradedClass& a, const GradedClass& b) {
  if (a.ring() != b.ring()) return 0;
  for (int d = 0; d <= a.ring()->max_degree(); ++d)
    if (a.support(d) != b.support(d)) return d;
  return std::nullopt;
}

CaseResult compare(const std::string& rep, i64 degree, const std::string& check, const GradedClass& lhs,
                   const GradedClass& rhs) {
  CaseResult c;
  c.rep = rep;
  c.degree = degree;
  c.check = check;
  c.first_difference = first_difference(lhs, rhs);
  c.pass = !c.first_difference.has_value();
  c.lhs = lhs.to_string();
  c.rhs = rhs.to_string();
  return c;
}

const QuaternionEmbedding& cached_quaternion(const GroupPtr& g) {
  static std::mutex mu;
  static std::map<const Group*, std::pair<GroupPtr, QuaternionEmbedding>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(g.get());
  if (it == cache.end()) it = cache.emplace(g.get(), std::make_pair(g, find_quaternion(g))).first;
  return it->second.second;
}

std::string join(const std::vector<i64>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "[" + s + "]";
}

int truncation_for(const VirtualRep& pi, int cap) {
  const i64 deg = std::max<i64>(pi.degree(), 0);
  return static_cast<int>(std::min<i64>(deg, cap));
}

}  // namespace

GradedClass oracle_swc_c2(std::int64_t degree, std::int64_t value_at_z, int max_degree, bool genuine) {
  if ((degree - value_at_z) % 2 != 0)
    fail(ErrorKind::NotDivisible, "deg - chi(z) = " + std::to_string(degree - value_at_z) + " is odd");
  const i64 b = (degree - value_at_z) / 2;
  RingPtr ring = cached_ring(rings::poly(1), max_degree);
  GradedClass w = GradedClass::parse(ring, "1 + v").power(b);
  if (genuine && degree < max_degree) w = w.truncated(static_cast<int>(degree));
  return w;
}

GradedClass oracle_swc_Z(const ClassFunction& chi, std::size_t involution, int max_degree, bool genuine) {
  return oracle_swc_c2(chi.degree(), chi.at(involution).to_integer(), max_degree, genuine);
}

GradedClass oracle_swc_Z(const VirtualRep& pi, int max_degree) {
  const auto& g = pi.table()->group();
  auto minus = g->minus_identity();
  if (!minus) fail(ErrorKind::WrongParity, "the Z-oracle needs -1 != 1");
  return oracle_swc_Z(pi.character(), *minus, max_degree, pi.genuine());
}

void check_embedding(const Group& g, const QuaternionEmbedding& q) {
  const std::size_t x = q.x, y = q.y;
  const std::size_t x2 = g.mul(x, x);
  bool ok = x2 != g.identity() && g.mul(x2, x2) == g.identity() && g.mul(y, y) == x2 &&
            g.conjugate(x, y) == g.inv(x) && q.subgroup.order() == 8 && q.subgroup.contains(x) &&
            q.subgroup.contains(y);
  if (auto minus = g.minus_identity()) ok = ok && x2 == *minus;
  if (!ok) fail(ErrorKind::BadEmbedding, "elements do not satisfy the Q8 relations");
}

QProfile q_profile(const ClassFunction& chi, const QuaternionEmbedding& q) {
  const Group& g = *chi.group();
  check_embedding(g, q);
  const std::size_t z = g.mul(q.x, q.x);
  const std::size_t xy = g.mul(q.x, q.y);
  // (phi_x, phi_y) for each element of Q.
  auto hom = [&](std::size_t h) -> std::pair<int, int> {
    if (h == g.identity() || h == z) return {0, 0};
    if (h == q.x || h == g.inv(q.x)) return {1, 0};
    if (h == q.y || h == g.inv(q.y)) return {0, 1};
    if (h == xy || h == g.inv(xy)) return {1, 1};
    fail(ErrorKind::BadEmbedding, "element outside the quaternion subgroup");
  };
  const int m = chi.at(g.identity()).order();
  std::array<Cyclo, 5> sums;
  sums.fill(Cyclo::integer(m, 0));
  for (auto h : q.subgroup.indices()) {
    const Cyclo& v = chi.at(h);
    auto [a, b] = hom(h);
    sums[0] += v;
    sums[1] += a ? -v : v;
    sums[2] += b ? -v : v;
    sums[3] += (a ^ b) ? -v : v;
    if (h == g.identity()) sums[4] += v * 2;
    if (h == z) sums[4] -= v * 2;
  }
  std::array<i64, 5> mult{};
  for (int i = 0; i < 5; ++i) mult[i] = sums[i].divide_exact(8).to_integer();
  QProfile p{mult[0], mult[1], mult[2], mult[3], 0, mult[4]};
  if (p.rho % 2 != 0) fail(ErrorKind::NotOrthogonal, "rho occurs with odd multiplicity in res_Q");
  p.m4 = p.rho / 2;
  return p;
}

GradedClass oracle_swc_Q(const VirtualRep& pi, const QuaternionEmbedding& q, int max_degree) {
  const ClassFunction chi = pi.character();
  const QProfile p = q_profile(chi, q);
  const Group& g = *chi.group();
  const i64 deg = pi.degree();
  const i64 at_minus = chi.at(g.mul(q.x, q.x)).to_integer();
  if (p.m0 + p.m1 + p.m2 + p.m3 + 4 * p.m4 != deg || p.m0 + p.m1 + p.m2 + p.m3 - 4 * p.m4 != at_minus)
    fail(ErrorKind::Mismatch, "Q8 profile does not balance the degree");
  RingPtr ring = cached_ring(rings::q8(), max_degree);
  auto unit = [&](const char* s) { return GradedClass::parse(ring, s); };
  return unit("1 + x").power(p.m1) * unit("1 + y").power(p.m2) * unit("1 + x + y").power(p.m3) *
         unit("1 + e").power(p.m4);
}

std::uint32_t additive_form_mask(const FiniteField& f, std::uint32_t a) {
  std::uint32_t mask = 0;
  std::uint32_t basis = 1;  // index of t^i
  for (int i = 0; i < f.degree(); ++i) {
    if (f.trace(f.mul(a, basis)) != 0) mask |= 1U << i;
    basis *= f.characteristic();
  }
  return mask;
}

std::vector<std::int64_t> n_multiplicities(const VirtualRep& pi) {
  const auto& g = pi.table()->group();
  const int q = g->q();
  if (q % 2 != 0) fail(ErrorKind::WrongParity, "N-multiplicities are computed for even q");
  const auto& f = *g->field();
  Subgroup n = standard_subgroup(g, SubgroupTag::N);
  const ClassFunction chi = pi.character();
  std::vector<i64> value(static_cast<std::size_t>(q));
  for (auto idx : n.indices()) {
    const auto m = std::get<Mat2>(g->element(idx));
    value[m.e[1]] = chi.at(idx).to_integer();
  }
  std::vector<i64> out(static_cast<std::size_t>(q));
  for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(q); ++a) {
    i64 s = 0;
    for (std::uint32_t x = 0; x < static_cast<std::uint32_t>(q); ++x)
      s += f.trace(f.mul(a, x)) ? -value[x] : value[x];
    if (s % q != 0) fail(ErrorKind::NotIntegral, "non-integral N-multiplicity");
    out[a] = s / q;
  }
  return out;
}

GradedClass oracle_swc_N(const VirtualRep& pi, int max_degree) {
  const auto& g = pi.table()->group();
  const auto& f = *g->field();
  const int r = f.degree();
  const auto mult = n_multiplicities(pi);
  RingPtr ring = cached_ring(rings::poly(r), max_degree);
  const int k = period_bits(max_degree);
  const i64 mod = i64{1} << k;
  GradedClass w = GradedClass::one(ring);
  for (std::uint32_t a = 1; a < f.order(); ++a) {
    i64 e = ((mult[a] % mod) + mod) % mod;
    const std::uint32_t mask = additive_form_mask(f, a);
    for (int j = 0; e; ++j, e >>= 1) {
      if (!(e & 1)) continue;
      // (1 + L)^{2^j} = 1 + L^{2^j}, and L^{2^j} = sum v_i^{2^j}.
      GradedClass factor = GradedClass::one(ring);
      for (int i = 0; i < r; ++i) {
        if (!(mask & (1U << i))) continue;
        Exponents x(static_cast<std::size_t>(r), 0);
        x[static_cast<std::size_t>(i)] = 1 << j;
        factor += GradedClass::monomial(ring, x);
      }
      w = w * factor;
    }
  }
  if (pi.genuine() && pi.degree() < max_degree) w = w.truncated(static_cast<int>(pi.degree()));
  return w;
}

std::vector<CaseResult> verify_theorem(const VirtualRep& pi, int max_degree) {
  std::vector<CaseResult> out;
  const std::string rep = pi.to_string();
  const i64 deg = pi.degree();
  const auto& g = pi.table()->group();
  if (parity_of(pi) == Parity::Odd) {
    auto to_z = maps::cached("swc_odd->Z:" + std::to_string(max_degree),
                             [&] { return maps::swc_odd_to_z(max_degree, max_degree); });
    auto q_to_z = maps::cached("Q8->Z:" + std::to_string(max_degree),
                               [&] { return maps::q8_to_z(max_degree, max_degree); });
    const GradedClass oracle = oracle_swc_Z(pi, max_degree);
    const GradedClass formula = to_z->apply(total_swc(pi, max_degree).cls);
    out.push_back(compare(rep, deg, "res_Z (1+e)^r = oracle_Z", formula, oracle));
    const GradedClass viaq = q_to_z->apply(oracle_swc_Q(pi, cached_quaternion(g), max_degree));
    out.push_back(compare(rep, deg, "res_Z oracle_Q = oracle_Z", viaq, oracle));
  } else {
    const GradedClass formula = expand_in_v(total_swc(pi, max_degree).cls, max_degree);
    const GradedClass oracle = oracle_swc_N(pi, max_degree);
    out.push_back(compare(rep, deg, "(1+D)^m in v = oracle_N", formula, oracle));
    const auto mult = n_multiplicities(pi);
    CaseResult c;
    c.rep = rep;
    c.degree = deg;
    c.check = "nontrivial N-multiplicities coincide";
    c.pass = std::all_of(mult.begin() + 1, mult.end(), [&](i64 x) { return x == mult[1]; });
    c.lhs = join(mult);
    c.rhs = "constant on a != 0";
    out.push_back(c);
  }
  return out;
}

void require_theorem(const VirtualRep& pi, int max_degree) {
  for (const auto& c : verify_theorem(pi, max_degree)) {
    if (c.pass) continue;
    std::string where = c.first_difference ? " (first difference in degree " + std::to_string(*c.first_difference) + ")" : "";
    fail(ErrorKind::Mismatch, c.check + " fails for " + c.rep + where + ": " + c.lhs + " vs " + c.rhs);
  }
}

bool wu_verify(const VirtualRep& pi, int i, int j) {
  if (i < 0 || j < 0) fail(ErrorKind::InvalidArgument, "negative Wu indices");
  const int d = std::max(i + j, 1);
  const GradedClass w = parity_of(pi) == Parity::Odd ? oracle_swc_Z(pi, d) : oracle_swc_N(pi, d);
  return steenrod_sq(i, w.component(j)) == wu_rhs(i, j, w);
}

void SuiteReport::record(CaseResult c) {
  ++cases;
  if (c.pass) {
    ++passes;
  } else {
    failures.push_back(std::move(c));
  }
}

VirtualRep random_orthogonal(const TablePtr& t, std::mt19937_64& rng, std::int64_t max_degree,
                             std::size_t max_blocks) {
  const auto basis = oir_basis(*t);
  VirtualRep pi = VirtualRep::zero(t);
  const std::size_t blocks = 1 + rng() % max_blocks;
  for (std::size_t b = 0; b < blocks; ++b) {
    const VirtualRep block = oir_rep(t, basis[rng() % basis.size()]) * static_cast<i64>(1 + rng() % 3);
    if (pi.degree() + block.degree() <= max_degree) pi = pi + block;
  }
  if (pi.degree() == 0) pi = VirtualRep::trivial(t);
  return pi;
}

VirtualRep random_genuine(const TablePtr& t, std::mt19937_64& rng, std::int64_t max_degree, std::size_t max_terms) {
  VirtualRep pi = VirtualRep::zero(t);
  const std::size_t terms = 1 + rng() % max_terms;
  for (std::size_t b = 0; b < terms; ++b) {
    const VirtualRep term = VirtualRep::irreducible(t, rng() % t->size(), static_cast<i64>(1 + rng() % 3));
    if (pi.degree() + term.degree() <= max_degree) pi = pi + term;
  }
  if (pi.degree() == 0) pi = VirtualRep::trivial(t);
  return pi;
}

SuiteReport suite_gow(const TablePtr& t) {
  SuiteReport rep;
  rep.suite = "gow";
  rep.q = t->group()->q();
  for (std::size_t i = 0; i < t->size(); ++i) {
    CaseResult c;
    c.rep = "X" + std::to_string(i + 1);
    c.degree = t->degree(i);
    if (rep.q % 2 == 1) {
      if (t->dual(i) != i) continue;
      c.check = "indicator = omega(-1)";
      c.lhs = std::to_string(t->indicator(i));
      c.rhs = std::to_string(t->central_sign(i).value_or(0));
      c.pass = t->central_sign(i) && t->indicator(i) == *t->central_sign(i);
    } else {
      c.check = "indicator = 1";
      c.lhs = std::to_string(t->indicator(i));
      c.rhs = "1";
      c.pass = t->indicator(i) == 1;
    }
    rep.record(std::move(c));
  }
  return rep;
}

SuiteReport suite_theorem(const TablePtr& t, const SuiteOptions& o) {
  SuiteReport rep;
  rep.suite = "theorem";
  rep.q = t->group()->q();
  rep.seed = o.seed;
  std::mt19937_64 rng(o.seed);
  const std::size_t trials = o.trials.value_or(200);
  auto run = [&](const VirtualRep& pi, int cap) {
    for (auto& c : verify_theorem(pi, truncation_for(pi, cap))) rep.record(std::move(c));
  };
  if (rep.q % 2 == 1) {
    for (const auto& label : oir_basis(*t)) run(oir_rep(t, label), o.truncation_cap);
    for (std::size_t k = 0; k < trials; ++k) run(random_orthogonal(t, rng, o.max_rep_degree), o.truncation_cap);
  } else {
    const int cap = o.truncation_cap;
    for (std::size_t i = 0; i < t->size(); ++i) {
      const VirtualRep pi = VirtualRep::irreducible(t, i);
      if (i != t->trivial_index()) {
        CaseResult c;
        c.rep = pi.to_string();
        c.degree = pi.degree();
        c.check = "m_pi = 1";
        c.lhs = std::to_string(m_pi(pi).m);
        c.rhs = "1";
        c.pass = m_pi(pi).m == 1;
        rep.record(std::move(c));
      }
      run(pi, cap);
    }
    for (std::size_t k = 0; k < trials; ++k) run(random_genuine(t, rng, o.max_rep_degree), cap);
  }
  return rep;
}

SuiteReport suite_wu(const TablePtr& t, const SuiteOptions& o) {
  SuiteReport rep;
  rep.suite = "wu";
  rep.q = t->group()->q();
  rep.seed = o.seed;
  std::mt19937_64 rng(o.seed);
  const std::size_t trials = o.trials.value_or(100);
  const bool odd = rep.q % 2 == 1;
  for (std::size_t k = 0; k < trials; ++k) {
    const VirtualRep pi = odd ? random_orthogonal(t, rng, 200, 6) : random_genuine(t, rng, 200, 6);
    const int d = 6;
    const GradedClass w = odd ? oracle_swc_Z(pi, d) : oracle_swc_N(pi, d);
    {
      // w3 = w1 w2 + Sq^1 w2.
      const GradedClass lhs = w.component(3);
      const GradedClass rhs = w.component(1) * w.component(2) + steenrod_sq(1, w.component(2));
      rep.record(compare(pi.to_string(), pi.degree(), "w3 = w1 w2 + Sq^1 w2", lhs, rhs));
    }
    for (int i = 0; i <= 6; ++i) {
      for (int j = i; i + j <= 6; ++j) {
        const GradedClass lhs = steenrod_sq(i, w.component(j));
        const GradedClass rhs = wu_rhs(i, j, w);
        rep.record(compare(pi.to_string(), pi.degree(),
                           "Sq^" + std::to_string(i) + " w_" + std::to_string(j) + " = Wu polynomial", lhs, rhs));
      }
    }
  }
  return rep;
}

SuiteReport suite_obstruction(const TablePtr& t, const SuiteOptions& o) {
  SuiteReport rep;
  rep.suite = "obstruction";
  rep.q = t->group()->q();
  rep.seed = o.seed;
  for (i64 n = 1; n <= 1024; ++n) {
    CaseResult c;
    c.rep = "(1+g)^" + std::to_string(n);
    c.check = "lowest term index = 2^ord2(n)";
    const auto idx = lowest_term_index(n, 2048);
    c.lhs = idx ? std::to_string(*idx) : "none";
    c.rhs = std::to_string(i64{1} << ord2(n));
    c.pass = idx && *idx == (i64{1} << ord2(n));
    rep.record(std::move(c));
  }
  std::mt19937_64 rng(o.seed);
  const std::size_t trials = o.trials.value_or(100);
  const bool odd = rep.q % 2 == 1;
  auto run = [&](const VirtualRep& pi) {
    CaseResult c;
    c.rep = pi.to_string();
    c.degree = pi.degree();
    c.check = "obstruction closed form = lowest nonzero term";
    const int d = default_truncation(pi);
    const Obstruction ob = obstruction(pi, d);
    const TotalSwc total = total_swc(pi, d);
    const auto lowest = total.cls.lowest_positive_degree();
    c.lhs = ob.degree ? std::to_string(*ob.degree) + " " + ob.class_string : "inf";
    c.rhs = lowest ? std::to_string(*lowest) + " " + total.cls.component(*lowest).to_string() : "inf";
    c.pass = ob.degree ? (lowest && *lowest == *ob.degree && ob.verified) : !lowest.has_value();
    if (ob.degree && *ob.degree > d) c.pass = !lowest.has_value();
    rep.record(std::move(c));
  };
  if (odd) {
    for (const auto& label : oir_basis(*t)) run(oir_rep(t, label));
    for (std::size_t k = 0; k < trials; ++k) run(random_orthogonal(t, rng, o.max_rep_degree));
  } else {
    for (std::size_t i = 0; i < t->size(); ++i) run(VirtualRep::irreducible(t, i));
    for (std::size_t k = 0; k < trials; ++k) run(random_genuine(t, rng, std::min<i64>(o.max_rep_degree, 200)));
  }
  return rep;
}

std::optional<std::int64_t> first_ps_exponent(const TablePtr& t) {
  const int q = t->group()->q();
  for (i64 k = 1; k < q - 1; ++k) {
    try {
      principal_series(t, k);
      return k;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BadConstructionParams) throw;
    }
  }
  return std::nullopt;
}

std::optional<std::int64_t> first_cusp_exponent(const TablePtr& t) {
  const i64 q = t->group()->q();
  for (i64 k = 1; k < q * q - 1; ++k) {
    try {
      const VirtualRep pi = cuspidal(t, k);
      const auto& m = pi.multiplicities();
      if (std::count_if(m.begin(), m.end(), [](i64 x) { return x != 0; }) == 1) return k;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BadConstructionParams) throw;
    }
  }
  return std::nullopt;
}

VirtualRep bezout_combination(const TablePtr& t) {
  const i64 q = t->group()->q();
  if (q % 2 == 0 || q <= 3) fail(ErrorKind::InvalidArgument, "the Bezout combination needs odd q > 3");
  const auto k1 = first_ps_exponent(t);
  const auto k2 = first_cusp_exponent(t);
  if (!k1 || !k2) fail(ErrorKind::NotFound, "no admissible ps/cusp exponents");
  const VirtualRep s1 = symmetrize(principal_series(t, *k1));
  const VirtualRep s2 = symmetrize(cuspidal(t, *k2));
  // Extended Euclid on (q+1)/2, (q-1)/2.
  i64 a0 = (q + 1) / 2, b0 = (q - 1) / 2;
  i64 x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b0 != 0) {
    const i64 quot = a0 / b0;
    std::tie(a0, b0) = std::make_pair(b0, a0 - quot * b0);
    std::tie(x0, x1) = std::make_pair(x1, x0 - quot * x1);
    std::tie(y0, y1) = std::make_pair(y1, y0 - quot * y1);
  }
  return s1 * x0 + s2 * y0;
}

}  // namespace sl2swc
