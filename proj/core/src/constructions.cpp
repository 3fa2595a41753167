#include "sl2swc/constructions.hpp"

#include <map>
#include <mutex>

#include "sl2swc/error.hpp"

namespace sl2swc {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

GroupPtr gl_for(const TablePtr& t) {
  const auto& g = t->group();
  if (g->family() != GroupFamily::SL2) fail(ErrorKind::InvalidArgument, "construction needs an SL(2,q) table");
  static std::mutex mu;
  static std::map<int, GroupPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[g->q()];
  if (!slot) slot = Group::gl2(g->q(), std::max(g->q(), Group::kDefaultCap));
  return slot;
}

}  // namespace

ClassFunction class_function_from(const GroupPtr& group, const std::function<Cyclo(std::size_t)>& f) {
  const auto& cd = group->classes();
  std::vector<Cyclo> v;
  v.reserve(cd.count());
  for (std::size_t c = 0; c < cd.count(); ++c) v.push_back(f(cd.representative[c]));
  return ClassFunction(group, std::move(v));
}

ClassFunction transfer(const ClassFunction& chi, const GroupPtr& target) {
  const auto& src = chi.group();
  return class_function_from(target, [&](std::size_t i) {
    auto j = src->find(target->element(i));
    if (!j) fail(ErrorKind::NotFound, "element " + target->element_string(i) + " missing from " + src->name());
    return chi.at(*j);
  });
}

ClassFunction additive_character(const Subgroup& n, std::uint32_t a) {
  const auto& parent = n.parent();
  const auto& f = *parent->field();
  const int p = static_cast<int>(f.characteristic());
  return class_function_from(n.as_group(), [&](std::size_t local) {
    const auto m = std::get<Mat2>(parent->element(n.to_parent(local)));
    return Cyclo::zeta_power(p, f.trace(f.mul(a, m.e[1])));
  });
}

ClassFunction principal_series_gl(const GroupPtr& gl2, std::int64_t k) {
  const auto& f = *gl2->field();
  const std::int64_t qm1 = f.order() - 1;
  Subgroup b = standard_subgroup(gl2, SubgroupTag::B);
  ClassFunction alpha = class_function_from(b.as_group(), [&](std::size_t local) {
    const auto m = std::get<Mat2>(gl2->element(b.to_parent(local)));
    return Cyclo::zeta_power(static_cast<int>(qm1), mod(k * f.log(m.e[0]), qm1));
  });
  return induce(b, alpha);
}

ClassFunction cuspidal_gl(const GroupPtr& gl2, std::int64_t k, std::uint32_t a) {
  const auto& f = *gl2->field();
  const std::int64_t q = f.order();
  const std::int64_t order = q * q - 1;
  Subgroup te = standard_subgroup(gl2, SubgroupTag::Te);
  const std::size_t c = cyclic_generator(te);
  // Discrete log on the torus.
  std::vector<std::int64_t> log(gl2->order(), -1);
  std::size_t x = gl2->identity();
  for (std::int64_t j = 0; j < order; ++j) {
    log[x] = j;
    x = gl2->mul(x, c);
  }
  auto chi_at = [&](std::size_t g) {
    if (log[g] < 0) fail(ErrorKind::InvalidArgument, "element outside the elliptic torus");
    return Cyclo::zeta_power(static_cast<int>(order), mod(k * log[g], order));
  };
  ClassFunction chi = class_function_from(te.as_group(), [&](std::size_t l) { return chi_at(te.to_parent(l)); });

  Subgroup zn = standard_subgroup(gl2, SubgroupTag::ZN);
  const int p = static_cast<int>(f.characteristic());
  ClassFunction psi = class_function_from(zn.as_group(), [&](std::size_t l) {
    const std::size_t g = zn.to_parent(l);
    const auto m = std::get<Mat2>(gl2->element(g));
    // (z zx; 0 z) = z * n(x), x = b / z.
    const std::uint32_t z = m.e[0];
    const std::uint32_t xval = f.mul(m.e[1], f.inv(z));
    const std::size_t scalar = gl2->index_of(Mat2{{z, 0, 0, z}});
    return chi_at(scalar) * Cyclo::zeta_power(p, f.trace(f.mul(a, xval)));
  });
  return induce(zn, psi) - induce(te, chi);
}

VirtualRep principal_series(const TablePtr& sl2_table, std::int64_t k) {
  const int q = sl2_table->group()->q();
  const std::int64_t qm1 = q - 1;
  if (mod(2 * k, qm1) == 0)
    fail(ErrorKind::BadConstructionParams, "ps(" + std::to_string(k) + "): alpha^2 = 1 for q = " + std::to_string(q));
  if (q % 2 == 1 && mod(k, 2) == 0)
    fail(ErrorKind::BadConstructionParams, "ps(" + std::to_string(k) + "): alpha(-1) != -1");
  auto gl = gl_for(sl2_table);
  ClassFunction ind = principal_series_gl(gl, k);
  return VirtualRep::decompose(sl2_table, transfer(ind, sl2_table->group()));
}

VirtualRep cuspidal(const TablePtr& sl2_table, std::int64_t k) {
  const std::int64_t q = sl2_table->group()->q();
  const std::int64_t order = q * q - 1;
  if (mod(2 * k, order) == 0)
    fail(ErrorKind::BadConstructionParams, "cusp(" + std::to_string(k) + "): chi^2 = 1");
  if (mod(q * k - k, order) == 0)
    fail(ErrorKind::BadConstructionParams, "cusp(" + std::to_string(k) + "): chi^q = chi");
  if (q % 2 == 1 && mod(k, 2) == 0)
    fail(ErrorKind::BadConstructionParams, "cusp(" + std::to_string(k) + "): chi(-1) != -1");
  auto gl = gl_for(sl2_table);
  ClassFunction pi = cuspidal_gl(gl, k);
  return VirtualRep::decompose(sl2_table, transfer(pi, sl2_table->group()));
}

ClassFunction quaternion_rho(const GroupPtr& g) {
  const int n = g->quaternion_n();
  if (n < 3) fail(ErrorKind::InvalidArgument, "rho needs a generalized quaternion group");
  const int m = 1 << (n - 1);
  return class_function_from(g, [&](std::size_t i) {
    const auto w = std::get<QuatWord>(g->element(i));
    if (w.l == 1) return Cyclo::integer(m, 0);
    return Cyclo::zeta_power(m, w.k) + Cyclo::zeta_power(m, mod(-static_cast<std::int64_t>(w.k), m));
  });
}

}  // namespace sl2swc
