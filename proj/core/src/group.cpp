#include "sl2swc/group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "sl2swc/error.hpp"

namespace sl2swc {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint64_t kDenseLimit = 1U << 22;
constexpr std::size_t kTableLimit = 1024;

std::shared_ptr<const FiniteField> field_for(int q) {
  if (q < 2) fail(ErrorKind::InvalidArgument, "q must be a prime power >= 2");
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) break;
    int r = 0;
    int rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++r;
    }
    if (rest != 1) break;
    return FiniteField::make(p, r);
  }
  fail(ErrorKind::InvalidArgument, std::to_string(q) + " is not a prime power");
}

void check_cap(int q, int cap) {
  if (q > cap) {
    fail(ErrorKind::TooLarge, "q = " + std::to_string(q) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

std::size_t ConjugacyData::power(std::size_t cls, std::int64_t k) const {
  const auto e = static_cast<std::int64_t>(exponent);
  const auto kk = static_cast<std::size_t>(((k % e) + e) % e);
  return power_class[cls][kk];
}

std::uint64_t Group::key_of(const GroupElem& g) const {
  if (const auto* m = std::get_if<Mat2>(&g)) {
    const std::uint64_t q = field_->order();
    return ((static_cast<std::uint64_t>(m->e[0]) * q + m->e[1]) * q + m->e[2]) * q + m->e[3];
  }
  const auto w = std::get<QuatWord>(g);
  return 2ULL * w.k + w.l;
}

GroupElem Group::decode(std::uint64_t key) const {
  if (field_) {
    const std::uint64_t q = field_->order();
    Mat2 m;
    for (int i = 3; i >= 0; --i) {
      m.e[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(key % q);
      key /= q;
    }
    return m;
  }
  return QuatWord{static_cast<std::uint32_t>(key / 2), static_cast<std::uint32_t>(key % 2)};
}

std::uint64_t Group::product_key(std::uint64_t ka, std::uint64_t kb) const {
  if (field_) {
    const auto a = std::get<Mat2>(decode(ka));
    const auto b = std::get<Mat2>(decode(kb));
    const FiniteField& f = *field_;
    Mat2 c;
    c.e[0] = f.add(f.mul(a.e[0], b.e[0]), f.mul(a.e[1], b.e[2]));
    c.e[1] = f.add(f.mul(a.e[0], b.e[1]), f.mul(a.e[1], b.e[3]));
    c.e[2] = f.add(f.mul(a.e[2], b.e[0]), f.mul(a.e[3], b.e[2]));
    c.e[3] = f.add(f.mul(a.e[2], b.e[1]), f.mul(a.e[3], b.e[3]));
    return key_of(c);
  }
  const std::uint32_t big = 1U << (quat_n_ - 1);
  const std::uint32_t half = 1U << (quat_n_ - 2);
  const auto a = std::get<QuatWord>(decode(ka));
  const auto b = std::get<QuatWord>(decode(kb));
  QuatWord c;
  if (a.l == 0) {
    c = {(a.k + b.k) % big, b.l};
  } else if (b.l == 0) {
    c = {(a.k + big - b.k) % big, 1};
  } else {
    c = {(a.k + big - b.k + half) % big, 0};
  }
  return key_of(c);
}

std::optional<std::size_t> Group::lookup(std::uint64_t key) const {
  if (!dense_.empty()) {
    if (key >= dense_.size() || dense_[key] == 0) return std::nullopt;
    return dense_[key] - 1;
  }
  auto it = sparse_.find(key);
  if (it == sparse_.end()) return std::nullopt;
  return it->second;
}

void Group::finalize() {
  std::uint64_t key_space = 0;
  if (field_) {
    const std::uint64_t q = field_->order();
    key_space = q * q * q * q;
  } else {
    key_space = 1ULL << quat_n_;
  }
  if (key_space <= kDenseLimit) {
    dense_.assign(key_space, 0);
    for (std::size_t i = 0; i < keys_.size(); ++i) dense_[keys_[i]] = static_cast<std::uint32_t>(i + 1);
  } else {
    sparse_.reserve(keys_.size());
    for (std::size_t i = 0; i < keys_.size(); ++i) sparse_.emplace(keys_[i], static_cast<std::uint32_t>(i));
  }
  const GroupElem one = field_ ? GroupElem(Mat2{{1, 0, 0, 1}}) : GroupElem(QuatWord{0, 0});
  auto id = lookup(key_of(one));
  if (!id) fail(ErrorKind::InvalidArgument, name_ + " does not contain the identity");
  identity_ = *id;

  const std::size_t n = keys_.size();
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto c = lookup(product_key(keys_[a], keys_[b]));
        if (!c) fail(ErrorKind::InvalidArgument, name_ + " is not closed under multiplication");
        table_[a * n + b] = static_cast<std::uint32_t>(*c);
      }
    }
  }
  inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    GroupElem g = element(a);
    GroupElem h;
    if (auto* m = std::get_if<Mat2>(&g)) {
      const FiniteField& f = *field_;
      const std::uint32_t det = f.sub(f.mul(m->e[0], m->e[3]), f.mul(m->e[1], m->e[2]));
      const std::uint32_t di = f.inv(det);
      h = Mat2{{f.mul(di, m->e[3]), f.mul(di, f.neg(m->e[1])), f.mul(di, f.neg(m->e[2])),
                f.mul(di, m->e[0])}};
    } else {
      const auto w = std::get<QuatWord>(g);
      const std::uint32_t big = 1U << (quat_n_ - 1);
      const std::uint32_t half = 1U << (quat_n_ - 2);
      h = w.l == 0 ? QuatWord{(big - w.k) % big, 0} : QuatWord{(w.k + half) % big, 1};
    }
    auto hi = lookup(key_of(h));
    if (!hi) fail(ErrorKind::InvalidArgument, name_ + " is not closed under inverses");
    inv_[a] = static_cast<std::uint32_t>(*hi);
  }
}

std::shared_ptr<const Group> Group::sl2(int q, int cap) {
  check_cap(q, cap);
  auto field = field_for(q);
  std::shared_ptr<Group> g(new Group());
  g->name_ = "SL(2," + std::to_string(q) + ")";
  g->family_ = GroupFamily::SL2;
  g->field_ = field;
  const FiniteField& f = *field;
  const auto uq = static_cast<std::uint32_t>(q);
  g->keys_.reserve(static_cast<std::size_t>(q) * (static_cast<std::size_t>(q) * q - 1));
  for (std::uint32_t a = 0; a < uq; ++a) {
    for (std::uint32_t b = 0; b < uq; ++b) {
      for (std::uint32_t c = 0; c < uq; ++c) {
        const std::uint32_t rhs = f.add(1, f.mul(b, c));  // a d = 1 + b c
        if (a != 0) {
          g->keys_.push_back(g->key_of(Mat2{{a, b, c, f.mul(rhs, f.inv(a))}}));
        } else if (rhs == 0) {
          for (std::uint32_t d = 0; d < uq; ++d) g->keys_.push_back(g->key_of(Mat2{{a, b, c, d}}));
        }
      }
    }
  }
  const std::size_t expected = static_cast<std::size_t>(q) * (static_cast<std::size_t>(q) * q - 1);
  if (g->keys_.size() != expected) fail(ErrorKind::InvalidArgument, "SL(2,q) enumeration mismatch");
  g->finalize();
  return g;
}

std::shared_ptr<const Group> Group::gl2(int q, int cap) {
  check_cap(q, cap);
  auto field = field_for(q);
  std::shared_ptr<Group> g(new Group());
  g->name_ = "GL(2," + std::to_string(q) + ")";
  g->family_ = GroupFamily::GL2;
  g->field_ = field;
  const FiniteField& f = *field;
  const auto uq = static_cast<std::uint32_t>(q);
  for (std::uint32_t a = 0; a < uq; ++a) {
    for (std::uint32_t b = 0; b < uq; ++b) {
      for (std::uint32_t c = 0; c < uq; ++c) {
        const std::uint32_t bc = f.mul(b, c);
        for (std::uint32_t d = 0; d < uq; ++d) {
          if (f.mul(a, d) != bc) g->keys_.push_back(g->key_of(Mat2{{a, b, c, d}}));
        }
      }
    }
  }
  const std::size_t q2 = static_cast<std::size_t>(q) * q;
  if (g->keys_.size() != (q2 - 1) * (q2 - static_cast<std::size_t>(q))) {
    fail(ErrorKind::InvalidArgument, "GL(2,q) enumeration mismatch");
  }
  g->finalize();
  return g;
}

std::shared_ptr<const Group> Group::gen_quaternion(int n) {
  if (n < 3 || n > 20) fail(ErrorKind::InvalidArgument, "generalized quaternion needs 3 <= n <= 20");
  std::shared_ptr<Group> g(new Group());
  g->name_ = "Q(" + std::to_string(1U << n) + ")";
  g->family_ = GroupFamily::GenQuaternion;
  g->quat_n_ = n;
  for (std::uint64_t key = 0; key < (1ULL << n); ++key) g->keys_.push_back(key);
  g->finalize();
  return g;
}

std::shared_ptr<const Group> Group::from_subset(const Group& parent, std::span<const std::size_t> indices,
                                                std::string name) {
  std::shared_ptr<Group> g(new Group());
  g->name_ = std::move(name);
  g->family_ = parent.field_ ? GroupFamily::MatrixSubgroup : GroupFamily::QuaternionSubgroup;
  g->field_ = parent.field_;
  g->quat_n_ = parent.quat_n_;
  g->keys_.reserve(indices.size());
  for (auto i : indices) g->keys_.push_back(parent.keys_[i]);
  if (!std::is_sorted(g->keys_.begin(), g->keys_.end())) {
    fail(ErrorKind::InvalidArgument, "subset indices must be sorted");
  }
  g->finalize();
  return g;
}

std::size_t Group::mul(std::size_t a, std::size_t b) const {
  if (!table_.empty()) return table_[a * keys_.size() + b];
  auto c = lookup(product_key(keys_[a], keys_[b]));
  if (!c) fail(ErrorKind::InvalidArgument, name_ + ": product left the group");
  return *c;
}

std::size_t Group::power(std::size_t a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  std::size_t result = identity_;
  while (k > 0) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

std::size_t Group::conjugate(std::size_t g, std::size_t x) const { return mul(mul(x, g), inv(x)); }

std::size_t Group::element_order(std::size_t a) const {
  std::size_t n = 1;
  std::size_t x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

GroupElem Group::element(std::size_t i) const { return decode(keys_[i]); }

std::optional<std::size_t> Group::find(const GroupElem& g) const {
  if (field_ != nullptr) {
    const auto* m = std::get_if<Mat2>(&g);
    if (!m) return std::nullopt;
    for (auto v : m->e) {
      if (v >= field_->order()) return std::nullopt;
    }
  } else if (!std::holds_alternative<QuatWord>(g)) {
    return std::nullopt;
  }
  return lookup(key_of(g));
}

std::size_t Group::index_of(const GroupElem& g) const {
  auto i = find(g);
  if (!i) fail(ErrorKind::NotFound, "element not in " + name_);
  return *i;
}

std::string Group::element_string(std::size_t i) const {
  GroupElem g = element(i);
  std::ostringstream os;
  if (const auto* m = std::get_if<Mat2>(&g)) {
    os << "[[" << field_->element_string(m->e[0]) << "," << field_->element_string(m->e[1]) << "],["
       << field_->element_string(m->e[2]) << "," << field_->element_string(m->e[3]) << "]]";
  } else {
    const auto w = std::get<QuatWord>(g);
    os << "a^" << w.k << (w.l ? "*b" : "");
  }
  return os.str();
}

std::optional<std::size_t> Group::minus_identity() const {
  if (!field_ || field_->characteristic() == 2) return std::nullopt;
  const std::uint32_t m1 = field_->neg(1);
  return find(Mat2{{m1, 0, 0, m1}});
}

namespace {

ConjugacyData compute_conjugacy(const Group& g) {
  const std::size_t n = g.order();
  ConjugacyData data;
  data.class_of.assign(n, kUnassigned);
  for (std::size_t i = 0; i < n; ++i) {
    if (data.class_of[i] != kUnassigned) continue;
    const auto c = static_cast<std::uint32_t>(data.representative.size());
    std::vector<std::uint32_t> orbit;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t j = g.conjugate(i, x);
      if (data.class_of[j] == kUnassigned) {
        data.class_of[j] = c;
        orbit.push_back(static_cast<std::uint32_t>(j));
      }
    }
    std::sort(orbit.begin(), orbit.end());
    data.representative.push_back(i);
    data.size.push_back(orbit.size());
    data.members.push_back(std::move(orbit));
  }
  data.identity_class = data.class_of[g.identity()];

  std::size_t exponent = 1;
  for (auto rep : data.representative) {
    const std::size_t o = g.element_order(rep);
    data.rep_order.push_back(o);
    exponent = std::lcm(exponent, o);
  }
  data.exponent = exponent;

  data.power_class.resize(data.count());
  for (std::size_t c = 0; c < data.count(); ++c) {
    const std::size_t o = data.rep_order[c];
    std::vector<std::uint32_t> cycle(o);
    std::size_t x = g.identity();
    for (std::size_t k = 0; k < o; ++k) {
      cycle[k] = data.class_of[x];
      x = g.mul(x, data.representative[c]);
    }
    auto& row = data.power_class[c];
    row.resize(exponent);
    for (std::size_t k = 0; k < exponent; ++k) row[k] = cycle[k % o];
  }

  // Every element's powers must land where its representative's powers do.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = data.power_class[data.class_of[i]];
    std::size_t x = g.identity();
    std::size_t k = 0;
    do {
      if (data.class_of[x] != row[k % exponent]) {
        fail(ErrorKind::InvalidArgument, g.name() + ": inconsistent power map");
      }
      x = g.mul(x, i);
      ++k;
    } while (x != g.identity());
    if (k != data.rep_order[data.class_of[i]]) {
      fail(ErrorKind::InvalidArgument, g.name() + ": element order differs within a class");
    }
  }
  return data;
}

}  // namespace

const ConjugacyData& Group::classes() const {
  std::call_once(classes_once_, [this] {
    classes_ = std::make_unique<ConjugacyData>(compute_conjugacy(*this));
  });
  return *classes_;
}

const ConjugacyData& conjugacy(const Group& g) { return g.classes(); }

std::string_view to_string(SubgroupTag tag) {
  switch (tag) {
    case SubgroupTag::Z: return "Z";
    case SubgroupTag::N: return "N";
    case SubgroupTag::T: return "T";
    case SubgroupTag::B: return "B";
    case SubgroupTag::ZN: return "ZN";
    case SubgroupTag::Te: return "Te";
    case SubgroupTag::Q: return "Q";
    case SubgroupTag::Q1: return "Q1";
    case SubgroupTag::Other: return "Other";
  }
  return "Other";
}

SubgroupTag parse_subgroup_tag(std::string_view s) {
  for (auto t : {SubgroupTag::Z, SubgroupTag::N, SubgroupTag::T, SubgroupTag::B, SubgroupTag::ZN,
                 SubgroupTag::Te, SubgroupTag::Q, SubgroupTag::Q1}) {
    if (to_string(t) == s) return t;
  }
  fail(ErrorKind::UnsupportedTag, "unknown subgroup tag '" + std::string(s) + "'");
}

Subgroup Subgroup::make(GroupPtr parent, std::vector<std::size_t> indices, SubgroupTag tag) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  const Group& g = *parent;
  auto has = [&](std::size_t x) { return std::binary_search(indices.begin(), indices.end(), x); };
  if (!has(g.identity())) fail(ErrorKind::InvalidArgument, "subgroup must contain the identity");
  for (auto a : indices) {
    if (!has(g.inv(a))) fail(ErrorKind::InvalidArgument, "subgroup not closed under inverses");
    for (auto b : indices) {
      if (!has(g.mul(a, b))) fail(ErrorKind::InvalidArgument, "subgroup not closed under products");
    }
  }
  Subgroup h;
  h.parent_ = std::move(parent);
  h.indices_ = std::move(indices);
  h.tag_ = tag;
  h.group_ = Group::from_subset(g, h.indices_, std::string(to_string(tag)) + " < " + g.name());
  return h;
}

bool Subgroup::contains(std::size_t parent_index) const {
  return std::binary_search(indices_.begin(), indices_.end(), parent_index);
}

std::optional<std::size_t> Subgroup::to_local(std::size_t parent_index) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), parent_index);
  if (it == indices_.end() || *it != parent_index) return std::nullopt;
  return static_cast<std::size_t>(it - indices_.begin());
}

namespace {

std::vector<std::size_t> matrix_subset(const Group& g, bool (*keep)(const FiniteField&, const Mat2&, bool)) {
  std::vector<std::size_t> out;
  const bool special = g.family() == GroupFamily::SL2;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (keep(*g.field(), std::get<Mat2>(g.element(i)), special)) out.push_back(i);
  }
  return out;
}

}  // namespace

Subgroup standard_subgroup(const GroupPtr& gp, SubgroupTag tag) {
  const Group& g = *gp;
  if (g.family() == GroupFamily::GenQuaternion) {
    const std::uint32_t big = 1U << (g.quaternion_n() - 1);
    std::vector<std::size_t> idx;
    if (tag == SubgroupTag::Z) {
      idx = {g.index_of(QuatWord{0, 0}), g.index_of(QuatWord{big / 2, 0})};
    } else if (tag == SubgroupTag::Q1) {
      const std::uint32_t step = big / 4;
      for (std::uint32_t j = 0; j < 4; ++j) {
        for (std::uint32_t l = 0; l < 2; ++l) idx.push_back(g.index_of(QuatWord{j * step, l}));
      }
    } else {
      fail(ErrorKind::UnsupportedTag, std::string(to_string(tag)) + " for " + g.name());
    }
    return Subgroup::make(gp, std::move(idx), tag);
  }
  if (g.family() != GroupFamily::SL2 && g.family() != GroupFamily::GL2) {
    fail(ErrorKind::UnsupportedTag, "standard subgroups need SL(2,q) or GL(2,q)");
  }
  std::vector<std::size_t> idx;
  switch (tag) {
    case SubgroupTag::Z:
      idx = matrix_subset(g, [](const FiniteField&, const Mat2& m, bool) {
        return m.e[1] == 0 && m.e[2] == 0 && m.e[0] == m.e[3];
      });
      break;
    case SubgroupTag::N:
      idx = matrix_subset(g, [](const FiniteField&, const Mat2& m, bool) {
        return m.e[0] == 1 && m.e[2] == 0 && m.e[3] == 1;
      });
      break;
    case SubgroupTag::T:
      idx = matrix_subset(g, [](const FiniteField&, const Mat2& m, bool) {
        return m.e[1] == 0 && m.e[2] == 0;
      });
      break;
    case SubgroupTag::B:
      idx = matrix_subset(g, [](const FiniteField&, const Mat2& m, bool) { return m.e[2] == 0; });
      break;
    case SubgroupTag::ZN:
      idx = matrix_subset(g, [](const FiniteField&, const Mat2& m, bool) {
        return m.e[2] == 0 && m.e[0] == m.e[3];
      });
      break;
    case SubgroupTag::Te: {
      if (g.family() != GroupFamily::GL2) {
        fail(ErrorKind::UnsupportedTag, "Te is only defined for GL(2,q)");
      }
      const FiniteField& f = *g.field();
      const std::uint32_t q = f.order();
      // Lowest monic irreducible t^2 + c1 t + c0 (compare c1 first).
      std::uint32_t c0 = 0;
      std::uint32_t c1 = 0;
      bool found = false;
      for (std::uint32_t a1 = 0; a1 < q && !found; ++a1) {
        for (std::uint32_t a0 = 0; a0 < q && !found; ++a0) {
          bool root = false;
          for (std::uint32_t x = 0; x < q; ++x) {
            if (f.add(f.add(f.mul(x, x), f.mul(a1, x)), a0) == 0) {
              root = true;
              break;
            }
          }
          if (!root) {
            c0 = a0;
            c1 = a1;
            found = true;
          }
        }
      }
      // a I + b C with C = (0 -c0; 1 -c1).
      for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 0; b < q; ++b) {
          if (a == 0 && b == 0) continue;
          Mat2 m{{a, f.mul(b, f.neg(c0)), b, f.sub(a, f.mul(b, c1))}};
          idx.push_back(g.index_of(m));
        }
      }
      break;
    }
    default:
      fail(ErrorKind::UnsupportedTag, std::string(to_string(tag)) + " for " + g.name());
  }
  return Subgroup::make(gp, std::move(idx), tag);
}

std::size_t unipotent_n0(const Group& g) { return g.index_of(Mat2{{1, 1, 0, 1}}); }

namespace {

std::optional<std::size_t> central_involution(const Group& g) {
  if (g.field()) return g.minus_identity();
  if (g.quaternion_n() > 0) {
    const std::uint32_t big = 1U << (g.quaternion_n() - 1);
    return g.find(QuatWord{big / 2, 0});
  }
  return std::nullopt;
}

}  // namespace

std::vector<QuaternionEmbedding> find_quaternions(const GroupPtr& gp, std::size_t limit) {
  const Group& g = *gp;
  if (g.field() && g.field()->characteristic() == 2) {
    fail(ErrorKind::EvenQ, "no quaternion subgroups in characteristic 2");
  }
  auto z = central_involution(g);
  if (!z) fail(ErrorKind::NotFound, g.name() + " has no -1");
  std::vector<std::size_t> roots;  // x with x^2 = -1
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.mul(i, i) == *z) roots.push_back(i);
  }
  std::vector<QuaternionEmbedding> out;
  std::set<std::vector<std::size_t>> seen;
  for (auto x : roots) {
    const std::size_t xinv = g.inv(x);
    for (auto y : roots) {
      if (y == x || y == xinv) continue;
      if (g.conjugate(x, y) != xinv) continue;
      const std::size_t xy = g.mul(x, y);
      std::vector<std::size_t> elems = {g.identity(), *z, x, xinv, y, g.inv(y), xy, g.inv(xy)};
      std::sort(elems.begin(), elems.end());
      if (!seen.insert(elems).second) continue;
      out.push_back({Subgroup::make(gp, std::move(elems), SubgroupTag::Q), x, y});
      if (out.size() >= limit) return out;
    }
  }
  if (out.empty()) fail(ErrorKind::NotFound, "no Q8 subgroup in " + g.name());
  return out;
}

QuaternionEmbedding find_quaternion(const GroupPtr& g) { return find_quaternions(g, 1).front(); }

std::size_t cyclic_generator(const Subgroup& h) {
  const Group& g = *h.parent();
  for (auto i : h.indices()) {
    if (g.element_order(i) == h.order()) return i;
  }
  fail(ErrorKind::NotFound, "subgroup is not cyclic");
}

}  // namespace sl2swc
