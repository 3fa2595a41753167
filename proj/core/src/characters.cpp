#include "sl2swc/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sl2swc/error.hpp"

namespace sl2swc {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((__uint128_t)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) { return powmod(a, m - 2, m); }

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 n = p - 1;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 f : factors) {
      if (powmod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

using Row = std::vector<u64>;
using Matrix = std::vector<Row>;

// Row-reduced basis of the null space of `a` (d x d) over F_p.
std::vector<Row> kernel(Matrix a, u64 p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(a[pr], a[r]);
    u64 iv = invmod(a[r][c], p);
    for (auto& x : a[r]) x = mulmod(x, iv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      u64 f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = (a[i][j] + p - mulmod(f, a[r][j], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<Row> basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - a[i][free]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Reduced row echelon form of a list of independent row vectors; returns the
// pivot columns alongside.
std::vector<std::size_t> rref(std::vector<Row>& b, u64 p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  for (std::size_t c = 0; c < cols && r < b.size(); ++c) {
    std::size_t pr = r;
    while (pr < b.size() && b[pr][c] == 0) ++pr;
    if (pr == b.size()) continue;
    std::swap(b[pr], b[r]);
    u64 iv = invmod(b[r][c], p);
    for (auto& x : b[r]) x = mulmod(x, iv, p);
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i == r || b[i][c] == 0) continue;
      u64 f = b[i][c];
      for (std::size_t j = 0; j < cols; ++j) b[i][j] = (b[i][j] + p - mulmod(f, b[r][j], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  b.resize(r);
  return pivots;
}

int value_order(const GroupPtr& g) { return static_cast<int>(g->exponent()); }

bool lex_greater(const ClassFunction& a, const ClassFunction& b) {
  for (std::size_t c = 0; c < a.values().size(); ++c) {
    const auto& x = a.values()[c].coeffs();
    const auto& y = b.values()[c].coeffs();
    if (x != y) return x > y;
  }
  return false;
}

}  // namespace

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclo> values)
    : group_(std::move(group)), values_(std::move(values)) {
  const int m = value_order(group_);
  if (values_.size() != group_->classes().count())
    fail(ErrorKind::InvalidArgument, "class function needs one value per class");
  for (auto& v : values_) {
    if (v.order() % m != 0) v = v.lift(static_cast<int>(lcm64(v.order(), m)));
  }
}

ClassFunction ClassFunction::zero(GroupPtr group) {
  const int m = value_order(group);
  std::vector<Cyclo> v(group->classes().count(), Cyclo::integer(m, 0));
  return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::trivial(GroupPtr group) {
  const int m = value_order(group);
  std::vector<Cyclo> v(group->classes().count(), Cyclo::integer(m, 1));
  return ClassFunction(std::move(group), std::move(v));
}

ClassFunction ClassFunction::regular(GroupPtr group) {
  const int m = value_order(group);
  const auto& cd = group->classes();
  std::vector<Cyclo> v(cd.count(), Cyclo::integer(m, 0));
  v[cd.identity_class] = Cyclo::integer(m, static_cast<i64>(group->order()));
  return ClassFunction(std::move(group), std::move(v));
}

const Cyclo& ClassFunction::at(std::size_t element) const {
  return values_[group_->classes().class_of[element]];
}

std::int64_t ClassFunction::degree() const { return values_[group_->classes().identity_class].to_integer(); }

ClassFunction ClassFunction::dual() const {
  const auto& cd = group_->classes();
  std::vector<Cyclo> v;
  v.reserve(values_.size());
  for (std::size_t c = 0; c < values_.size(); ++c) v.push_back(values_[cd.inverse_class(c)]);
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (group_ != o.group_) fail(ErrorKind::InvalidArgument, "class functions on different groups");
  std::vector<Cyclo> v = values_;
  for (std::size_t c = 0; c < v.size(); ++c) v[c] += o.values_[c];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  if (group_ != o.group_) fail(ErrorKind::InvalidArgument, "class functions on different groups");
  std::vector<Cyclo> v = values_;
  for (std::size_t c = 0; c < v.size(); ++c) v[c] -= o.values_[c];
  return ClassFunction(group_, std::move(v));
}

ClassFunction ClassFunction::operator*(std::int64_t s) const {
  std::vector<Cyclo> v = values_;
  for (auto& x : v) x *= s;
  return ClassFunction(group_, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return group_ == o.group_ && values_ == o.values_;
}

Cyclo inner_product_numerator(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group()) fail(ErrorKind::InvalidArgument, "class functions on different groups");
  const auto& cd = a.group()->classes();
  Cyclo sum = Cyclo::integer(value_order(a.group()), 0);
  for (std::size_t c = 0; c < cd.count(); ++c) {
    if (a.at_class(c).is_zero() || b.at_class(c).is_zero()) continue;
    sum += a.at_class(c) * b.at_class(c).conj() * static_cast<i64>(cd.size[c]);
  }
  return sum;
}

std::int64_t inner_product(const ClassFunction& a, const ClassFunction& b) {
  Cyclo n = inner_product_numerator(a, b);
  return n.divide_exact(static_cast<i64>(a.group()->order())).to_integer();
}

std::int64_t dixon_prime(std::size_t group_order, std::size_t exponent) {
  const double bound = 2.0 * std::sqrt(static_cast<double>(group_order));
  for (i64 l = static_cast<i64>(exponent) + 1;; l += static_cast<i64>(exponent)) {
    if (static_cast<double>(l) > bound && is_prime(l)) return l;
  }
}

std::optional<int> CharacterTable::central_sign(std::size_t i) const { return central_signs_[i]; }

TablePtr CharacterTable::assemble(GroupPtr group, std::vector<ClassFunction> chars, std::int64_t prime) {
  const auto& cd = group->classes();
  const std::size_t k = cd.count();
  const i64 order = static_cast<i64>(group->order());
  if (chars.size() != k) fail(ErrorKind::LiftFailure, "number of irreducibles differs from number of classes");

  std::stable_sort(chars.begin(), chars.end(), [](const ClassFunction& a, const ClassFunction& b) {
    i64 da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return lex_greater(a, b);
  });

  // Row orthogonality.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      Cyclo s = inner_product_numerator(chars[i], chars[j]);
      auto v = s.as_integer();
      if (!v || *v != (i == j ? order : 0))
        fail(ErrorKind::LiftFailure, "row orthogonality fails for characters " + std::to_string(i + 1) + ", " +
                                         std::to_string(j + 1) + " of " + group->name());
    }
  }
  // Column orthogonality.
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      Cyclo s = Cyclo::integer(value_order(group), 0);
      for (std::size_t i = 0; i < k; ++i) s += chars[i].at_class(a) * chars[i].at_class(b).conj();
      auto v = s.as_integer();
      i64 expect = a == b ? order / static_cast<i64>(cd.size[a]) : 0;
      if (!v || *v != expect)
        fail(ErrorKind::LiftFailure, "column orthogonality fails for classes " + std::to_string(a) + ", " +
                                         std::to_string(b) + " of " + group->name());
    }
  }

  auto t = std::shared_ptr<CharacterTable>(new CharacterTable());
  t->group_ = group;
  t->m_ = value_order(group);
  t->prime_ = prime;
  auto minus = group->minus_identity();
  bool found_trivial = false;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& chi = chars[i];
    t->degrees_.push_back(chi.degree());
    t->indicators_.push_back(fs_indicator(chi));
    ClassFunction d = chi.dual();
    std::size_t di = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (chars[j] == d) {
        di = j;
        break;
      }
    }
    if (di == k) fail(ErrorKind::LiftFailure, "dual of an irreducible is missing from the table");
    t->duals_.push_back(di);
    if (minus) {
      i64 v = chi.at(*minus).to_integer();
      t->central_signs_.push_back(static_cast<int>(v / chi.degree()));
    } else {
      t->central_signs_.push_back(std::nullopt);
    }
    if (!found_trivial && chi == ClassFunction::trivial(group)) {
      t->trivial_ = i;
      found_trivial = true;
    }
  }
  if (!found_trivial) fail(ErrorKind::LiftFailure, "trivial character missing");
  t->chars_ = std::move(chars);
  return t;
}

TablePtr char_table(const GroupPtr& group) {
  const auto& cd = group->classes();
  const std::size_t k = cd.count();
  const std::size_t n = group->order();
  const std::size_t e = cd.exponent;
  const u64 p = static_cast<u64>(dixon_prime(n, e));

  // a[j][i][l] = #{(x, y) : x in C_j, y in C_i, xy = z_l}.
  std::vector<std::vector<std::vector<u64>>> a(k, std::vector<std::vector<u64>>(k, std::vector<u64>(k, 0)));
  for (std::size_t l = 0; l < k; ++l) {
    const std::size_t z = cd.representative[l];
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t y = group->mul(group->inv(x), z);
      ++a[cd.class_of[x]][cd.class_of[y]][l];
    }
  }

  // Refine F_p^k into common eigenspaces of the class matrices.
  std::vector<std::vector<Row>> spaces;
  {
    std::vector<Row> full(k, Row(k, 0));
    for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
    spaces.push_back(std::move(full));
  }
  for (std::size_t j = 0; j < k; ++j) {
    bool all_split = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
    if (all_split) break;
    std::vector<std::vector<Row>> next;
    for (auto& basis : spaces) {
      if (basis.size() == 1) {
        next.push_back(std::move(basis));
        continue;
      }
      auto piv = rref(basis, p);
      const std::size_t d = basis.size();
      // A[s][t] = coordinate s of M_j b_t.
      Matrix img(d, Row(k, 0));
      for (std::size_t t = 0; t < d; ++t) {
        for (std::size_t i = 0; i < k; ++i) {
          u64 s = 0;
          for (std::size_t l = 0; l < k; ++l) {
            if (basis[t][l]) s = (s + mulmod(a[j][i][l] % p, basis[t][l], p)) % p;
          }
          img[t][i] = s;
        }
      }
      Matrix coord(d, Row(d, 0));
      for (std::size_t t = 0; t < d; ++t)
        for (std::size_t s = 0; s < d; ++s) coord[s][t] = img[t][piv[s]];
      std::size_t covered = 0;
      for (u64 lambda = 0; lambda < p && covered < d; ++lambda) {
        Matrix shifted = coord;
        for (std::size_t s = 0; s < d; ++s) shifted[s][s] = (shifted[s][s] + p - lambda) % p;
        auto ker = kernel(std::move(shifted), p);
        if (ker.empty()) continue;
        std::vector<Row> sub;
        for (const auto& u : ker) {
          Row v(k, 0);
          for (std::size_t t = 0; t < d; ++t) {
            if (!u[t]) continue;
            for (std::size_t l = 0; l < k; ++l) v[l] = (v[l] + mulmod(u[t], basis[t][l], p)) % p;
          }
          sub.push_back(std::move(v));
        }
        covered += sub.size();
        next.push_back(std::move(sub));
      }
      if (covered != d) fail(ErrorKind::LiftFailure, "class matrix not diagonalizable modulo the Dixon prime");
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces)
    if (s.size() != 1) fail(ErrorKind::LiftFailure, "eigenspaces did not split into lines");

  const u64 g = primitive_root(p);
  const u64 z = powmod(g, (p - 1) / e, p);  // image of zeta_e
  const int m = static_cast<int>(e);
  const u64 order_mod = n % p;

  std::vector<ClassFunction> chars;
  for (const auto& s : spaces) {
    Row w = s[0];
    const u64 w1 = w[cd.identity_class];
    if (w1 == 0) fail(ErrorKind::LiftFailure, "eigenvector vanishes at the identity");
    const u64 iw1 = invmod(w1, p);
    for (auto& x : w) x = mulmod(x, iw1, p);

    u64 sum = 0;
    for (std::size_t l = 0; l < k; ++l) {
      u64 term = mulmod(w[l], w[cd.inverse_class(l)], p);
      sum = (sum + mulmod(term, invmod(cd.size[l] % p, p), p)) % p;
    }
    if (sum == 0) fail(ErrorKind::LiftFailure, "degenerate norm in Dixon lift");
    const u64 d2 = mulmod(order_mod, invmod(sum, p), p);
    u64 d = 0;
    for (u64 c = 1; c * c <= n; ++c) {
      if (mulmod(c, c, p) == d2) {
        d = c;
        break;
      }
    }
    if (d == 0) fail(ErrorKind::LiftFailure, "no admissible degree in Dixon lift");

    Row chi(k);
    for (std::size_t l = 0; l < k; ++l) chi[l] = mulmod(mulmod(w[l], d, p), invmod(cd.size[l] % p, p), p);

    std::vector<Cyclo> values;
    values.reserve(k);
    for (std::size_t l = 0; l < k; ++l) {
      const std::size_t o = cd.rep_order[l];
      const u64 zo = powmod(z, e / o, p);
      const u64 io = invmod(o % p, p);
      std::vector<i64> coeffs(e, 0);
      for (std::size_t sidx = 0; sidx < o; ++sidx) {
        u64 mu = 0;
        for (std::size_t t = 0; t < o; ++t) {
          u64 val = chi[cd.power(l, static_cast<i64>(t))];
          u64 root = powmod(zo, (o - (sidx * t) % o) % o, p);
          mu = (mu + mulmod(val, root, p)) % p;
        }
        mu = mulmod(mu, io, p);
        if (mu > d) fail(ErrorKind::LiftFailure, "eigenvalue multiplicity out of range");
        coeffs[sidx * (e / o)] += static_cast<i64>(mu);
      }
      values.push_back(Cyclo::from_power_basis(m, coeffs));
    }
    chars.emplace_back(group, std::move(values));
  }
  return CharacterTable::assemble(group, std::move(chars), static_cast<i64>(p));
}

int fs_indicator(const ClassFunction& chi) {
  const auto& cd = chi.group()->classes();
  Cyclo sum = Cyclo::integer(value_order(chi.group()), 0);
  for (std::size_t c = 0; c < cd.count(); ++c) sum += chi.at_class(cd.power(c, 2)) * static_cast<i64>(cd.size[c]);
  auto v = sum.as_integer();
  const i64 n = static_cast<i64>(chi.group()->order());
  if (!v || *v % n != 0) fail(ErrorKind::NotIndicator, "indicator sum is not an integer");
  i64 eps = *v / n;
  if (eps < -1 || eps > 1) fail(ErrorKind::NotIndicator, "indicator " + std::to_string(eps) + " outside {-1,0,1}");
  return static_cast<int>(eps);
}

ClassFunction restrict(const ClassFunction& chi, const Subgroup& h) {
  if (h.parent() != chi.group()) fail(ErrorKind::InvalidArgument, "restriction to a subgroup of another group");
  const auto& local = h.as_group();
  const auto& lcd = local->classes();
  std::vector<Cyclo> v;
  v.reserve(lcd.count());
  for (std::size_t c = 0; c < lcd.count(); ++c) v.push_back(chi.at(h.to_parent(lcd.representative[c])));
  return ClassFunction(local, std::move(v));
}

ClassFunction induce(const Subgroup& h, const ClassFunction& chi) {
  if (chi.group() != h.as_group()) fail(ErrorKind::InvalidArgument, "induced function must live on the subgroup");
  const auto& g = h.parent();
  const auto& cd = g->classes();
  const int m = value_order(g);
  std::vector<Cyclo> s(cd.count(), Cyclo::integer(m, 0));
  for (std::size_t i = 0; i < h.order(); ++i) {
    const Cyclo& v = chi.at(i);
    if (v.is_zero()) continue;
    s[cd.class_of[h.to_parent(i)]] += v;
  }
  const i64 index = static_cast<i64>(g->order() / h.order());
  for (std::size_t c = 0; c < cd.count(); ++c) {
    if (s[c].is_zero()) continue;
    s[c] = (s[c] * index).divide_exact(static_cast<i64>(cd.size[c]));
  }
  return ClassFunction(g, std::move(s));
}

VirtualRep::VirtualRep(TablePtr table, std::vector<std::int64_t> multiplicities)
    : table_(std::move(table)), mult_(std::move(multiplicities)) {
  if (mult_.size() != table_->size()) fail(ErrorKind::InvalidArgument, "multiplicity vector has wrong length");
}

VirtualRep VirtualRep::zero(TablePtr table) {
  std::vector<i64> m(table->size(), 0);
  return VirtualRep(std::move(table), std::move(m));
}

VirtualRep VirtualRep::irreducible(TablePtr table, std::size_t index, std::int64_t mult) {
  if (index >= table->size())
    fail(ErrorKind::UnknownIrreducible, "X" + std::to_string(index + 1) + " not in table of size " +
                                            std::to_string(table->size()));
  std::vector<i64> m(table->size(), 0);
  m[index] = mult;
  return VirtualRep(std::move(table), std::move(m));
}

VirtualRep VirtualRep::trivial(TablePtr table) {
  std::size_t i = table->trivial_index();
  return irreducible(std::move(table), i);
}

VirtualRep VirtualRep::regular(TablePtr table) {
  std::vector<i64> m(table->size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = table->degree(i);
  return VirtualRep(std::move(table), std::move(m));
}

VirtualRep VirtualRep::decompose(TablePtr table, const ClassFunction& chi) {
  const i64 n = static_cast<i64>(table->group()->order());
  std::vector<i64> m(table->size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    Cyclo s = inner_product_numerator(chi, table->irreducible(i));
    auto v = s.as_integer();
    if (!v || *v % n != 0) fail(ErrorKind::NotIntegral, "class function is not a virtual character");
    m[i] = *v / n;
  }
  VirtualRep r(std::move(table), std::move(m));
  if (!(r.character() == chi)) fail(ErrorKind::NotIntegral, "class function is not a virtual character");
  return r;
}

bool VirtualRep::genuine() const {
  return std::all_of(mult_.begin(), mult_.end(), [](i64 x) { return x >= 0; });
}

std::int64_t VirtualRep::degree() const {
  i64 d = 0;
  for (std::size_t i = 0; i < mult_.size(); ++i) d += mult_[i] * table_->degree(i);
  return d;
}

ClassFunction VirtualRep::character() const {
  ClassFunction sum = ClassFunction::zero(table_->group());
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] != 0) sum = sum + table_->irreducible(i) * mult_[i];
  return sum;
}

Cyclo VirtualRep::value_at_class(std::size_t cls) const {
  Cyclo sum = Cyclo::integer(table_->cyclotomic_order(), 0);
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] != 0) sum += table_->irreducible(i).at_class(cls) * mult_[i];
  return sum;
}

VirtualRep VirtualRep::dual() const {
  std::vector<i64> m(mult_.size(), 0);
  for (std::size_t i = 0; i < mult_.size(); ++i) m[table_->dual(i)] = mult_[i];
  return VirtualRep(table_, std::move(m));
}

bool VirtualRep::in_ro() const {
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    if (mult_[table_->dual(i)] != mult_[i]) return false;
    if (table_->indicator(i) == -1 && mult_[i] % 2 != 0) return false;
  }
  return true;
}

bool VirtualRep::orthogonal() const { return genuine() && in_ro(); }

VirtualRep VirtualRep::operator+(const VirtualRep& o) const {
  if (table_ != o.table_) fail(ErrorKind::InvalidArgument, "representations over different tables");
  std::vector<i64> m = mult_;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] += o.mult_[i];
  return VirtualRep(table_, std::move(m));
}

VirtualRep VirtualRep::operator-(const VirtualRep& o) const { return *this + o * -1; }

VirtualRep VirtualRep::operator*(std::int64_t s) const {
  std::vector<i64> m = mult_;
  for (auto& x : m) x *= s;
  return VirtualRep(table_, std::move(m));
}

bool VirtualRep::operator==(const VirtualRep& o) const { return table_ == o.table_ && mult_ == o.mult_; }

std::string VirtualRep::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    i64 c = mult_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    i64 a = c < 0 ? -c : c;
    if (a != 1) out << a << "*";
    out << "X" << (i + 1);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

VirtualRep symmetrize(const VirtualRep& pi) { return pi + pi.dual(); }

std::string to_string(const OirLabel& label) {
  std::string x = "X" + std::to_string(label.index + 1);
  return label.symmetrized ? "S(" + x + ")" : x;
}

std::vector<OirLabel> oir_basis(const CharacterTable& table) {
  std::vector<OirLabel> out;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table.indicator(i) == 1) out.push_back({false, i});
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table.indicator(i) == -1 || (table.indicator(i) == 0 && i < table.dual(i))) out.push_back({true, i});
  }
  return out;
}

VirtualRep oir_rep(const TablePtr& table, const OirLabel& label) {
  VirtualRep r = VirtualRep::irreducible(table, label.index);
  return label.symmetrized ? symmetrize(r) : r;
}

std::vector<OirTerm> decompose_orthogonal(const VirtualRep& pi) {
  const auto& t = *pi.table();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (pi.multiplicity(t.dual(i)) != pi.multiplicity(i))
      fail(ErrorKind::NotOrthogonal, "not self-dual: X" + std::to_string(i + 1) + " and its dual X" +
                                         std::to_string(t.dual(i) + 1) + " have different multiplicities");
    if (t.indicator(i) == -1 && pi.multiplicity(i) % 2 != 0)
      fail(ErrorKind::NotOrthogonal, "symplectic X" + std::to_string(i + 1) + " has odd multiplicity");
  }
  std::vector<OirTerm> out;
  for (const auto& label : oir_basis(t)) {
    i64 m = pi.multiplicity(label.index);
    if (label.symmetrized && t.indicator(label.index) == -1) m /= 2;
    if (m != 0) out.push_back({label, m});
  }
  return out;
}

}  // namespace sl2swc
