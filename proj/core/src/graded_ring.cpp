#include "sl2swc/graded_ring.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "sl2swc/error.hpp"

namespace sl2swc {

namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

bool all_zero(const BitVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; });
}

void canon(BitVec& v) {
  if (all_zero(v)) v.clear();
}

void xor_into(BitVec& dst, const BitVec& src, std::size_t words) {
  if (src.empty()) return;
  if (dst.empty()) dst.assign(words, 0);
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
}

template <class F>
void for_each_bit(const BitVec& v, F&& f) {
  for (std::size_t w = 0; w < v.size(); ++w) {
    std::uint64_t x = v[w];
    while (x) {
      const int b = std::countr_zero(x);
      f(w * 64 + static_cast<std::size_t>(b));
      x &= x - 1;
    }
  }
}

class PolyParser {
 public:
  PolyParser(std::string_view s, const std::vector<std::string>& gens) : s_(s), gens_(gens) {}

  Polynomial parse() {
    std::map<Exponents, int> acc;
    skip();
    if (pos_ < s_.size() && s_[pos_] == '0') {
      ++pos_;
      skip();
      if (pos_ != s_.size()) error("trailing input");
      return {};
    }
    for (;;) {
      Exponents e = term();
      acc[e] ^= 1;
      skip();
      if (pos_ == s_.size()) break;
      if (s_[pos_] != '+') error("expected '+'");
      ++pos_;
    }
    Polynomial p;
    for (auto& [e, c] : acc)
      if (c) p.terms.push_back(e);
    std::sort(p.terms.begin(), p.terms.end(), std::greater<>());
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  Exponents term() {
    Exponents e(gens_.size(), 0);
    skip();
    if (pos_ < s_.size() && s_[pos_] == '1' &&
        (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return e;
    }
    for (;;) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      if (start == pos_) error("expected generator");
      std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(gens_.begin(), gens_.end(), name);
      if (it == gens_.end()) {
        pos_ = start;
        error("unknown generator '" + name + "'");
      }
      int k = 1;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        k = integer();
      }
      e[static_cast<std::size_t>(it - gens_.begin())] += k;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return e;
    }
  }

  std::string_view s_;
  const std::vector<std::string>& gens_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Exponents& e, const std::vector<std::string>& gens) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += gens[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view src, const std::vector<std::string>& gens) {
  return PolyParser(src, gens).parse();
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& gens) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& t : p.terms) {
    if (!out.empty()) out += " + ";
    out += monomial_text(t, gens);
  }
  return out;
}

RingPresentation RingPresentation::make(std::string name, std::vector<std::string> generators,
                                        std::vector<int> degrees, const std::vector<std::string>& relations) {
  RingPresentation p{std::move(name), std::move(generators), std::move(degrees), {}};
  for (const auto& r : relations) p.relations.push_back(parse_polynomial(r, p.generators));
  return p;
}

std::shared_ptr<const GradedRing> GradedRing::make(RingPresentation presentation, int max_degree) {
  const std::size_t n = presentation.generators.size();
  if (n == 0 || n > 8) fail(ErrorKind::InvalidArgument, "rings need between 1 and 8 generators");
  if (presentation.degrees.size() != n) fail(ErrorKind::InvalidArgument, "one degree per generator required");
  if (max_degree < 0) fail(ErrorKind::InvalidArgument, "negative truncation degree");
  for (int d : presentation.degrees)
    if (d <= 0) fail(ErrorKind::InvalidArgument, "generator degrees must be positive");
  for (const auto& r : presentation.relations) {
    if (r.terms.empty()) continue;
    int d0 = -1;
    for (const auto& t : r.terms) {
      if (t.size() != n) fail(ErrorKind::InvalidArgument, "relation term has wrong arity");
      int d = 0;
      for (std::size_t i = 0; i < n; ++i) d += t[i] * presentation.degrees[i];
      if (d0 >= 0 && d != d0)
        fail(ErrorKind::InhomogeneousRelation, to_string(r, presentation.generators) + " in " + presentation.name);
      d0 = d;
    }
  }
  auto ring = std::shared_ptr<GradedRing>(new GradedRing());
  ring->bits_ = static_cast<int>(64 / n);
  const int min_deg = *std::min_element(presentation.degrees.begin(), presentation.degrees.end());
  if (ring->bits_ < 64) {
    // Squares of classes up to degree D must still pack.
    const std::uint64_t cap = (std::uint64_t{1} << ring->bits_) - 1;
    if (static_cast<std::uint64_t>(2 * max_degree / min_deg) > cap)
      fail(ErrorKind::TooLarge, "truncation degree " + std::to_string(max_degree) + " too large for " +
                                    presentation.name);
  }
  ring->pres_ = std::move(presentation);
  ring->max_degree_ = max_degree;
  ring->once_ = std::make_unique<std::once_flag[]>(static_cast<std::size_t>(max_degree) + 1);
  ring->degrees_.resize(static_cast<std::size_t>(max_degree) + 1);
  return ring;
}

std::uint64_t GradedRing::key(const Exponents& e) const {
  const std::size_t n = generator_count();
  if (e.size() != n) fail(ErrorKind::InvalidArgument, "exponent vector has wrong arity");
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (e[i] < 0) fail(ErrorKind::InvalidArgument, "negative exponent");
    const int shift = bits_ * static_cast<int>(n - 1 - i);
    k |= static_cast<std::uint64_t>(e[i]) << shift;
  }
  return k;
}

Exponents GradedRing::exponents(std::uint64_t key) const {
  const std::size_t n = generator_count();
  Exponents e(n);
  const std::uint64_t mask = bits_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_) - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const int shift = bits_ * static_cast<int>(n - 1 - i);
    e[i] = static_cast<int>((key >> shift) & mask);
  }
  return e;
}

int GradedRing::degree_of(const Exponents& e) const {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * pres_.degrees[i];
  return d;
}

std::string GradedRing::monomial_string(std::uint64_t key) const {
  return monomial_text(exponents(key), pres_.generators);
}

std::vector<std::uint64_t> GradedRing::monomials(int d) const {
  std::vector<std::uint64_t> out;
  const std::size_t n = generator_count();
  Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      if (left % pres_.degrees[i] == 0) {
        e[i] = left / pres_.degrees[i];
        out.push_back(key(e));
        e[i] = 0;
      }
      return;
    }
    for (int k = 0; k * pres_.degrees[i] <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k * pres_.degrees[i]);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

void GradedRing::build(int d) const {
  auto data = std::make_unique<Degree>();
  std::vector<std::uint64_t> mons = monomials(d);
  std::sort(mons.begin(), mons.end());
  if (pres_.free()) {
    data->basis.assign(mons.rbegin(), mons.rend());
    for (std::size_t i = 0; i < data->basis.size(); ++i) data->index[data->basis[i]] = static_cast<std::uint32_t>(i);
    degrees_[static_cast<std::size_t>(d)] = std::move(data);
    return;
  }
  const std::size_t cols = mons.size();
  std::unordered_map<std::uint64_t, std::size_t> col;
  for (std::size_t i = 0; i < cols; ++i) col[mons[i]] = i;
  const std::size_t w = words_for(cols);
  std::vector<BitVec> rows;
  for (const auto& rel : pres_.relations) {
    if (rel.terms.empty()) continue;
    const int rd = degree_of(rel.terms.front());
    if (rd > d) continue;
    for (std::uint64_t u : monomials(d - rd)) {
      BitVec row(w, 0);
      for (const auto& t : rel.terms) {
        const std::size_t c = col.at(u + key(t));
        row[c / 64] ^= std::uint64_t{1} << (c % 64);
      }
      if (!all_zero(row)) rows.push_back(std::move(row));
    }
  }
  // Reduced row echelon form; columns ascending so pivots are smallest monomials.
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pr = r;
    while (pr < rows.size() && !(rows[pr][c / 64] & bit)) ++pr;
    if (pr == rows.size()) continue;
    std::swap(rows[pr], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && (rows[i][c / 64] & bit))
        for (std::size_t k = 0; k < w; ++k) rows[i][k] ^= rows[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t c = cols; c-- > 0;)
    if (!is_pivot[c]) data->basis.push_back(mons[c]);
  for (std::size_t i = 0; i < data->basis.size(); ++i) data->index[data->basis[i]] = static_cast<std::uint32_t>(i);
  const std::size_t bw = words_for(data->basis.size());
  for (std::size_t i = 0; i < cols; ++i) {
    if (is_pivot[i]) continue;
    BitVec v(bw, 0);
    const std::size_t pos = data->index[mons[i]];
    v[pos / 64] |= std::uint64_t{1} << (pos % 64);
    data->nf[mons[i]] = std::move(v);
  }
  for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
    const std::size_t pc = pivot_cols[k];
    BitVec v(bw, 0);
    for (std::size_t c = pc + 1; c < cols; ++c) {
      if (rows[k][c / 64] & (std::uint64_t{1} << (c % 64))) {
        const std::size_t pos = data->index.at(mons[c]);
        v[pos / 64] |= std::uint64_t{1} << (pos % 64);
      }
    }
    canon(v);
    data->nf[mons[pc]] = std::move(v);
  }
  degrees_[static_cast<std::size_t>(d)] = std::move(data);
}

const GradedRing::Degree& GradedRing::degree_data(int d) const {
  if (d < 0 || d > max_degree_)
    fail(ErrorKind::InvalidArgument, "degree " + std::to_string(d) + " outside [0, " + std::to_string(max_degree_) + "]");
  std::call_once(once_[static_cast<std::size_t>(d)], [&] { build(d); });
  return *degrees_[static_cast<std::size_t>(d)];
}

std::size_t GradedRing::dimension(int d) const { return degree_data(d).basis.size(); }

std::vector<std::size_t> GradedRing::dimensions() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree_; ++d) out.push_back(dimension(d));
  return out;
}

const std::vector<std::uint64_t>& GradedRing::basis(int d) const { return degree_data(d).basis; }

std::optional<std::size_t> GradedRing::basis_index(std::uint64_t key, int d) const {
  const auto& data = degree_data(d);
  auto it = data.index.find(key);
  if (it == data.index.end()) return std::nullopt;
  return it->second;
}

const BitVec& GradedRing::normal_form(std::uint64_t key, int d) const {
  static const BitVec kEmpty;
  const auto& data = degree_data(d);
  if (pres_.free()) {
    // Free rings keep no table; hand out a thread-local unit vector.
    thread_local BitVec unit;
    auto it = data.index.find(key);
    if (it == data.index.end()) fail(ErrorKind::InvalidArgument, "monomial of wrong degree");
    unit.assign(words_for(data.basis.size()), 0);
    unit[it->second / 64] |= std::uint64_t{1} << (it->second % 64);
    return unit;
  }
  auto it = data.nf.find(key);
  if (it == data.nf.end()) {
    if (data.basis.empty() && data.nf.empty()) return kEmpty;
    fail(ErrorKind::InvalidArgument, "monomial of wrong degree");
  }
  return it->second;
}

GradedClass::GradedClass(RingPtr ring) : ring_(std::move(ring)) {
  comps_.resize(static_cast<std::size_t>(ring_->max_degree()) + 1);
}

GradedClass GradedClass::one(RingPtr ring) {
  GradedClass c(std::move(ring));
  c.add_monomial(0, 0);
  return c;
}

GradedClass GradedClass::generator(RingPtr ring, std::size_t i) {
  Exponents e(ring->generator_count(), 0);
  e.at(i) = 1;
  return monomial(std::move(ring), e);
}

GradedClass GradedClass::monomial(RingPtr ring, const Exponents& e) {
  GradedClass c(ring);
  const int d = ring->degree_of(e);
  if (d <= ring->max_degree()) c.add_monomial(ring->key(e), d);
  return c;
}

GradedClass GradedClass::parse(RingPtr ring, std::string_view src) {
  Polynomial p = parse_polynomial(src, ring->presentation().generators);
  GradedClass c(ring);
  for (const auto& t : p.terms) c += monomial(ring, t);
  return c;
}

void GradedClass::add_monomial(std::uint64_t key, int d) {
  auto& comp = comps_[static_cast<std::size_t>(d)];
  if (ring_->presentation().free()) {
    auto pos = ring_->basis_index(key, d);
    if (!pos) fail(ErrorKind::InvalidArgument, "monomial of wrong degree");
    if (comp.empty()) comp.assign(words_for(ring_->dimension(d)), 0);
    comp[*pos / 64] ^= std::uint64_t{1} << (*pos % 64);
  } else {
    xor_into(comp, ring_->normal_form(key, d), words_for(ring_->dimension(d)));
  }
  canon(comp);
}

void GradedClass::set_component(int d, BitVec v) {
  v.resize(words_for(ring_->dimension(d)), 0);
  canon(v);
  comps_[static_cast<std::size_t>(d)] = std::move(v);
}

bool GradedClass::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const BitVec& v) { return v.empty(); });
}

bool GradedClass::is_zero(int d) const {
  if (d < 0 || d > ring_->max_degree()) return true;
  return comps_[static_cast<std::size_t>(d)].empty();
}

bool GradedClass::is_unit() const { return constant_term(); }

bool GradedClass::coefficient(int d, std::size_t pos) const {
  if (is_zero(d)) return false;
  const auto& v = comps_[static_cast<std::size_t>(d)];
  return (v[pos / 64] >> (pos % 64)) & 1;
}

std::optional<int> GradedClass::lowest_positive_degree() const {
  for (int d = 1; d <= ring_->max_degree(); ++d)
    if (!is_zero(d)) return d;
  return std::nullopt;
}

std::optional<int> GradedClass::top_degree() const {
  for (int d = ring_->max_degree(); d >= 1; --d)
    if (!is_zero(d)) return d;
  return std::nullopt;
}

GradedClass GradedClass::component(int d) const {
  GradedClass c(ring_);
  if (!is_zero(d)) c.comps_[static_cast<std::size_t>(d)] = comps_[static_cast<std::size_t>(d)];
  return c;
}

GradedClass GradedClass::truncated(int d) const {
  GradedClass c = *this;
  for (int k = std::max(d + 1, 0); k <= ring_->max_degree(); ++k) c.comps_[static_cast<std::size_t>(k)].clear();
  return c;
}

std::vector<std::uint64_t> GradedClass::support(int d) const {
  std::vector<std::uint64_t> out;
  if (is_zero(d)) return out;
  const auto& basis = ring_->basis(d);
  for_each_bit(comps_[static_cast<std::size_t>(d)], [&](std::size_t i) { out.push_back(basis[i]); });
  return out;
}

void GradedClass::check_same(const GradedClass& o) const {
  if (ring_ != o.ring_) fail(ErrorKind::RingMismatch, ring_->name() + " vs " + o.ring_->name());
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
  check_same(o);
  for (std::size_t d = 0; d < comps_.size(); ++d) {
    xor_into(comps_[d], o.comps_[d], o.comps_[d].size());
    canon(comps_[d]);
  }
  return *this;
}

GradedClass GradedClass::operator+(const GradedClass& o) const {
  GradedClass c = *this;
  c += o;
  return c;
}

GradedClass GradedClass::operator*(const GradedClass& o) const {
  check_same(o);
  const int top = ring_->max_degree();
  GradedClass c(ring_);
  const bool free = ring_->presentation().free();
  for (int a = 0; a <= top; ++a) {
    if (is_zero(a)) continue;
    const auto& ba = ring_->basis(a);
    for (int b = 0; a + b <= top; ++b) {
      if (o.is_zero(b)) continue;
      const auto& bb = ring_->basis(b);
      const int d = a + b;
      auto& comp = c.comps_[static_cast<std::size_t>(d)];
      const std::size_t w = words_for(ring_->dimension(d));
      if (w == 0) continue;
      if (comp.empty()) comp.assign(w, 0);
      for_each_bit(comps_[static_cast<std::size_t>(a)], [&](std::size_t i) {
        for_each_bit(o.comps_[static_cast<std::size_t>(b)], [&](std::size_t j) {
          const std::uint64_t k = ba[i] + bb[j];
          if (free) {
            const std::size_t pos = *ring_->basis_index(k, d);
            comp[pos / 64] ^= std::uint64_t{1} << (pos % 64);
          } else {
            xor_into(comp, ring_->normal_form(k, d), w);
          }
        });
      });
    }
  }
  for (auto& v : c.comps_) canon(v);
  return c;
}

GradedClass GradedClass::square() const {
  const int top = ring_->max_degree();
  GradedClass c(ring_);
  for (int a = 0; 2 * a <= top; ++a) {
    if (is_zero(a)) continue;
    const auto& ba = ring_->basis(a);
    for_each_bit(comps_[static_cast<std::size_t>(a)], [&](std::size_t i) { c.add_monomial(2 * ba[i], 2 * a); });
  }
  return c;
}

GradedClass GradedClass::pow(std::uint64_t n) const {
  GradedClass result = one(ring_);
  GradedClass base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base.square();
  }
  return result;
}

GradedClass GradedClass::inverse() const {
  if (!is_unit()) fail(ErrorKind::InvalidArgument, "series inverse needs constant term 1");
  GradedClass nil = *this + one(ring_);
  GradedClass result = one(ring_);
  // (1 + n)^{-1} = prod_j (1 + n^{2^j}).
  while (!nil.is_zero()) {
    result = result * (one(ring_) + nil);
    nil = nil.square();
  }
  return result;
}

GradedClass GradedClass::power(std::int64_t n) const {
  if (n >= 0) return pow(static_cast<std::uint64_t>(n));
  return inverse().pow(static_cast<std::uint64_t>(-(n + 1)) + 1);
}

bool GradedClass::operator==(const GradedClass& o) const { return ring_ == o.ring_ && comps_ == o.comps_; }

std::string GradedClass::to_string() const {
  std::string out;
  for (int d = 0; d <= ring_->max_degree(); ++d) {
    for (auto k : support(d)) {
      if (!out.empty()) out += " + ";
      out += ring_->monomial_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::map<int, std::vector<std::string>> GradedClass::terms() const {
  std::map<int, std::vector<std::string>> out;
  for (int d = 0; d <= ring_->max_degree(); ++d) {
    auto s = support(d);
    if (s.empty()) continue;
    auto& v = out[d];
    for (auto k : s) v.push_back(ring_->monomial_string(k));
  }
  return out;
}

GradedClass evaluate(const Polynomial& p, RingPtr target, const std::vector<GradedClass>& images) {
  GradedClass sum(target);
  for (const auto& t : p.terms) {
    GradedClass term = GradedClass::one(target);
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i]) term = term * images.at(i).pow(static_cast<std::uint64_t>(t[i]));
    sum += term;
  }
  return sum;
}

RestrictionMap RestrictionMap::make(std::string name, RingPtr source, RingPtr target, std::vector<GradedClass> images) {
  if (images.size() != source->generator_count())
    fail(ErrorKind::InvalidArgument, "one image per source generator required");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].ring() != target) fail(ErrorKind::RingMismatch, "image not in target ring");
    for (int d = 0; d <= target->max_degree(); ++d) {
      if (d != source->generator_degree(i) && !images[i].is_zero(d))
        fail(ErrorKind::InvalidArgument, "image of " + source->presentation().generators[i] + " is not of degree " +
                                             std::to_string(source->generator_degree(i)));
    }
  }
  for (const auto& rel : source->presentation().relations) {
    if (!evaluate(rel, target, images).is_zero())
      fail(ErrorKind::RelationViolation, to_string(rel, source->presentation().generators) + " does not map to 0 in " +
                                             target->name());
  }
  RestrictionMap m;
  m.name_ = std::move(name);
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.images_ = std::move(images);
  return m;
}

RestrictionMap::RestrictionMap(const RestrictionMap& o)
    : name_(o.name_), source_(o.source_), target_(o.target_), images_(o.images_) {
  std::lock_guard lock(o.mu_);
  memo_ = o.memo_;
}

RestrictionMap& RestrictionMap::operator=(const RestrictionMap& o) {
  if (this == &o) return *this;
  std::scoped_lock lock(mu_, o.mu_);
  name_ = o.name_;
  source_ = o.source_;
  target_ = o.target_;
  images_ = o.images_;
  memo_ = o.memo_;
  return *this;
}

GradedClass RestrictionMap::image_of(const Exponents& e) const {
  const std::uint64_t k = source_->key(e);
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
  }
  GradedClass out(target_);
  std::size_t last = e.size();
  for (std::size_t i = e.size(); i-- > 0;) {
    if (e[i] > 0) {
      last = i;
      break;
    }
  }
  if (last == e.size()) {
    out = GradedClass::one(target_);
  } else if (source_->degree_of(e) > target_->max_degree()) {
    out = GradedClass(target_);
  } else {
    Exponents rest = e;
    --rest[last];
    out = image_of(rest) * images_[last];
  }
  std::lock_guard lock(mu_);
  memo_.emplace(k, out);
  return out;
}

GradedClass RestrictionMap::apply(const GradedClass& a) const {
  if (a.ring() != source_) fail(ErrorKind::RingMismatch, "class not in " + source_->name());
  GradedClass out(target_);
  const int top = std::min(source_->max_degree(), target_->max_degree());
  for (int d = 0; d <= top; ++d)
    for (auto k : a.support(d)) out += image_of(source_->exponents(k));
  return out;
}

namespace rings {

RingPresentation swc_odd() { return RingPresentation::make("swc_odd", {"e"}, {4}, {}); }

RingPresentation q8() {
  return RingPresentation::make("Q8", {"x", "y", "e"}, {1, 1, 4}, {"x*y + x^2 + y^2", "x^2*y + x*y^2"});
}

RingPresentation gen_quaternion(int n) {
  if (n < 3) fail(ErrorKind::InvalidArgument, "generalized quaternion groups need n >= 3");
  if (n == 3) return q8();
  return RingPresentation::make("Q" + std::to_string(1 << n), {"X", "Y", "E"}, {1, 1, 4}, {"X*Y", "X^3 + Y^3"});
}

RingPresentation sl2odd() { return RingPresentation::make("sl2odd", {"e", "b"}, {4, 3}, {"b^2"}); }

RingPresentation poly(int r) {
  if (r < 1 || r > 8) fail(ErrorKind::InvalidArgument, "polynomial rings need 1 <= r <= 8");
  if (r == 1) return RingPresentation::make("F2[v]", {"v"}, {1}, {});
  std::vector<std::string> gens;
  for (int i = 1; i <= r; ++i) gens.push_back("v" + std::to_string(i));
  return RingPresentation::make("F2[v1..v" + std::to_string(r) + "]", gens, std::vector<int>(r, 1), {});
}

RingPresentation dickson_algebra(int r) {
  if (r < 1 || r > 8) fail(ErrorKind::InvalidArgument, "Dickson algebras need 1 <= r <= 8");
  std::vector<std::string> gens;
  std::vector<int> degs;
  for (int i = 1; i <= r; ++i) {
    gens.push_back("d" + std::to_string(i));
    degs.push_back((1 << r) - (1 << (r - i)));
  }
  return RingPresentation::make("Dickson" + std::to_string(r), gens, degs, {});
}

}  // namespace rings

RingPtr cached_ring(const RingPresentation& p, int max_degree) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, RingPtr> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{p.name, max_degree}];
  if (!slot) slot = GradedRing::make(p, max_degree);
  return slot;
}

}  // namespace sl2swc
