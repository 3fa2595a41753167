#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sl2swc {

using Exponents = std::vector<int>;

// A sum of distinct monomials over F2.
struct Polynomial {
  std::vector<Exponents> terms;
};

// Parses "x^2*y + x*y^2 + 1" over the given generator names. Duplicate
// monomials cancel.
Polynomial parse_polynomial(std::string_view src, const std::vector<std::string>& gens);
std::string to_string(const Polynomial& p, const std::vector<std::string>& gens);

struct RingPresentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<int> degrees;
  std::vector<Polynomial> relations;

  // Relations given as strings over `generators`.
  static RingPresentation make(std::string name, std::vector<std::string> generators, std::vector<int> degrees,
                               const std::vector<std::string>& relations);
  bool free() const { return relations.empty(); }
};

using BitVec = std::vector<std::uint64_t>;

// F2[generators]/(relations), truncated above degree D. Each degree's
// normal-form basis is built on first use: monomials of that degree modulo the
// span of all relation multiples, with the lexicographically smallest monomial
// of each reduced relation eliminated.
class GradedRing {
 public:
  static std::shared_ptr<const GradedRing> make(RingPresentation presentation, int max_degree);

  GradedRing(const GradedRing&) = delete;
  GradedRing& operator=(const GradedRing&) = delete;

  const RingPresentation& presentation() const { return pres_; }
  const std::string& name() const { return pres_.name; }
  int max_degree() const { return max_degree_; }
  std::size_t generator_count() const { return pres_.generators.size(); }
  int generator_degree(std::size_t i) const { return pres_.degrees[i]; }

  std::size_t dimension(int d) const;
  std::vector<std::size_t> dimensions() const;
  // Basis monomials of degree d, descending lexicographic order.
  const std::vector<std::uint64_t>& basis(int d) const;

  std::uint64_t key(const Exponents& e) const;
  Exponents exponents(std::uint64_t key) const;
  int degree_of(const Exponents& e) const;
  std::string monomial_string(std::uint64_t key) const;

  // Normal form of a monomial of degree d as a coordinate vector; d <= D.
  const BitVec& normal_form(std::uint64_t key, int d) const;
  // Position of a basis monomial, if it is one.
  std::optional<std::size_t> basis_index(std::uint64_t key, int d) const;

 private:
  struct Degree {
    std::vector<std::uint64_t> basis;
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    // Normal forms of every monomial of this degree.
    std::unordered_map<std::uint64_t, BitVec> nf;
  };

  GradedRing() = default;
  const Degree& degree_data(int d) const;
  void build(int d) const;
  std::vector<std::uint64_t> monomials(int d) const;

  RingPresentation pres_;
  int max_degree_ = 0;
  int bits_ = 64;
  mutable std::unique_ptr<std::once_flag[]> once_;
  mutable std::vector<std::unique_ptr<Degree>> degrees_;
};

using RingPtr = std::shared_ptr<const GradedRing>;

// Element of a truncated graded ring: one coordinate vector per degree.
class GradedClass {
 public:
  // Placeholder without a ring; assign before use.
  GradedClass() = default;
  explicit GradedClass(RingPtr ring);
  static GradedClass zero(RingPtr ring) { return GradedClass(std::move(ring)); }
  static GradedClass one(RingPtr ring);
  static GradedClass generator(RingPtr ring, std::size_t i);
  static GradedClass monomial(RingPtr ring, const Exponents& e);
  static GradedClass parse(RingPtr ring, std::string_view src);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const;
  bool is_zero(int d) const;
  bool is_unit() const;
  bool coefficient(int d, std::size_t basis_pos) const;
  bool constant_term() const { return coefficient(0, 0); }
  // Lowest / highest degree > 0 with a nonzero component.
  std::optional<int> lowest_positive_degree() const;
  std::optional<int> top_degree() const;
  GradedClass component(int d) const;
  // Drops every component above degree d.
  GradedClass truncated(int d) const;
  // Basis monomials present in degree d.
  std::vector<std::uint64_t> support(int d) const;

  GradedClass operator+(const GradedClass& o) const;
  GradedClass& operator+=(const GradedClass& o);
  GradedClass operator*(const GradedClass& o) const;
  GradedClass square() const;
  GradedClass pow(std::uint64_t n) const;
  // Series inverse of a unit; throws InvalidArgument otherwise.
  GradedClass inverse() const;
  // n-th power for any integer n (units only when n < 0).
  GradedClass power(std::int64_t n) const;
  bool operator==(const GradedClass& o) const;

  // "1 + e + e^2", "0" for zero.
  std::string to_string() const;
  // degree -> basis monomial strings, nonzero degrees only.
  std::map<int, std::vector<std::string>> terms() const;

  // Adds the normal form of a monomial (of degree d <= D).
  void add_monomial(std::uint64_t key, int d);
  void set_component(int d, BitVec v);
  const BitVec& raw(int d) const { return comps_[static_cast<std::size_t>(d)]; }

 private:
  void check_same(const GradedClass& o) const;
  RingPtr ring_;
  std::vector<BitVec> comps_;  // empty vector means zero
};

// Ring homomorphism given by images of the source generators.
class RestrictionMap {
 public:
  // Validates degrees and that every relation maps to zero.
  static RestrictionMap make(std::string name, RingPtr source, RingPtr target, std::vector<GradedClass> images);

  const std::string& name() const { return name_; }
  const RingPtr& source() const { return source_; }
  const RingPtr& target() const { return target_; }
  const std::vector<GradedClass>& images() const { return images_; }
  GradedClass apply(const GradedClass& a) const;
  GradedClass image_of(const Exponents& e) const;

 private:
  RestrictionMap() = default;
  std::string name_;
  RingPtr source_;
  RingPtr target_;
  std::vector<GradedClass> images_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, GradedClass> memo_;

 public:
  RestrictionMap(const RestrictionMap& o);
  RestrictionMap& operator=(const RestrictionMap& o);
};

GradedClass evaluate(const Polynomial& p, RingPtr target, const std::vector<GradedClass>& images);

namespace rings {
// F2[e], deg e = 4: the SWC subalgebra for odd q.
RingPresentation swc_odd();
// H*(Q8) = F2[x,y,e]/(xy+x^2+y^2, x^2y+xy^2).
RingPresentation q8();
// H*(Q_{2^n}) = F2[X,Y,E]/(XY, X^3+Y^3).
RingPresentation gen_quaternion(int n);
// H*(SL(2,q)), q odd: F2[e,b]/(b^2), deg e = 4, deg b = 3.
RingPresentation sl2odd();
// F2[v] for r = 1, F2[v1..vr] otherwise.
RingPresentation poly(int r);
// F2[d1..dr], deg d_i = 2^r - 2^{r-i}.
RingPresentation dickson_algebra(int r);
}  // namespace rings

// Shared instances keyed by (presentation name, D).
RingPtr cached_ring(const RingPresentation& p, int max_degree);

}  // namespace sl2swc
