#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sl2swc/cyclotomic.hpp"
#include "sl2swc/group.hpp"

namespace sl2swc {

// One exact value per conjugacy class of `group`. Values live in
// Z[zeta_M] for a multiple M of the exponent (restrictions keep the
// parent's order).
class ClassFunction {
 public:
  ClassFunction(GroupPtr group, std::vector<Cyclo> values);
  static ClassFunction zero(GroupPtr group);
  static ClassFunction trivial(GroupPtr group);
  static ClassFunction regular(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclo>& values() const { return values_; }
  const Cyclo& at_class(std::size_t cls) const { return values_[cls]; }
  const Cyclo& at(std::size_t element) const;
  // Value at the identity as a rational integer.
  std::int64_t degree() const;

  // g -> chi(g^{-1}).
  ClassFunction dual() const;
  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(std::int64_t s) const;
  bool operator==(const ClassFunction& o) const;

 private:
  GroupPtr group_;
  std::vector<Cyclo> values_;
};

// |G|^{-1} sum_g a(g) conj(b(g)), which must be a rational integer.
std::int64_t inner_product(const ClassFunction& a, const ClassFunction& b);
// The same sum before division by |G|.
Cyclo inner_product_numerator(const ClassFunction& a, const ClassFunction& b);

class CharacterTable {
 public:
  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return chars_.size(); }
  const ClassFunction& irreducible(std::size_t i) const { return chars_[i]; }
  const std::vector<ClassFunction>& irreducibles() const { return chars_; }
  std::int64_t degree(std::size_t i) const { return degrees_[i]; }
  int indicator(std::size_t i) const { return indicators_[i]; }
  std::size_t dual(std::size_t i) const { return duals_[i]; }
  // omega(-1) = chi(-1)/chi(1), when the group has a central -1.
  std::optional<int> central_sign(std::size_t i) const;
  // Common cyclotomic order of all values (the group exponent).
  int cyclotomic_order() const { return m_; }
  std::size_t trivial_index() const { return trivial_; }
  // Dixon prime used for the computation (0 when loaded from elsewhere).
  std::int64_t dixon_prime() const { return prime_; }

  // Assemble a table from given irreducibles; validates orthogonality and
  // reorders canonically. Used by char_table and by the cache loader.
  static std::shared_ptr<const CharacterTable> assemble(GroupPtr group, std::vector<ClassFunction> chars,
                                                        std::int64_t prime);

 private:
  CharacterTable() = default;
  GroupPtr group_;
  std::vector<ClassFunction> chars_;
  std::vector<std::int64_t> degrees_;
  std::vector<int> indicators_;
  std::vector<std::size_t> duals_;
  std::vector<std::optional<int>> central_signs_;
  std::size_t trivial_ = 0;
  int m_ = 1;
  std::int64_t prime_ = 0;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Burnside-Dixon: class-matrix eigenvectors modulo a prime l = 1 (mod exp G),
// lifted by discrete Fourier inversion, validated by both orthogonality
// relations. Rows sorted by degree, then lexicographically by value vector.
TablePtr char_table(const GroupPtr& group);

// Smallest prime l = 1 (mod exponent) with l > 2 sqrt(|G|).
std::int64_t dixon_prime(std::size_t group_order, std::size_t exponent);

// |G|^{-1} sum_c |C| chi(c^2); throws NotIndicator unless -1, 0 or 1.
int fs_indicator(const ClassFunction& chi);

// Value of chi restricted to h, as a class function of h.as_group().
ClassFunction restrict(const ClassFunction& chi, const Subgroup& h);
// chi is a class function of h.as_group(); result lives on h.parent().
ClassFunction induce(const Subgroup& h, const ClassFunction& chi);

// Integer combination of the irreducibles of a table.
class VirtualRep {
 public:
  VirtualRep(TablePtr table, std::vector<std::int64_t> multiplicities);
  static VirtualRep zero(TablePtr table);
  static VirtualRep irreducible(TablePtr table, std::size_t index, std::int64_t mult = 1);
  static VirtualRep trivial(TablePtr table);
  static VirtualRep regular(TablePtr table);
  // Expresses a class function in the irreducible basis; throws NotIntegral.
  static VirtualRep decompose(TablePtr table, const ClassFunction& chi);

  const TablePtr& table() const { return table_; }
  const std::vector<std::int64_t>& multiplicities() const { return mult_; }
  std::int64_t multiplicity(std::size_t i) const { return mult_[i]; }

  bool genuine() const;
  std::int64_t degree() const;
  ClassFunction character() const;
  // Character value at class `cls`.
  Cyclo value_at_class(std::size_t cls) const;
  VirtualRep dual() const;
  // Genuine, dual-invariant, and even on every symplectic irreducible.
  bool orthogonal() const;
  // Dual-invariant with even symplectic multiplicities (allows negatives).
  bool in_ro() const;

  VirtualRep operator+(const VirtualRep& o) const;
  VirtualRep operator-(const VirtualRep& o) const;
  VirtualRep operator*(std::int64_t s) const;
  bool operator==(const VirtualRep& o) const;

  // "2*X1 + X3 - X4" with 1-based labels.
  std::string to_string() const;

 private:
  TablePtr table_;
  std::vector<std::int64_t> mult_;
};

// S(pi) = pi + pi^dual.
VirtualRep symmetrize(const VirtualRep& pi);

// An orthogonally irreducible block: an orthogonal irreducible, or S(phi) for
// phi symplectic or the lower-indexed member of a non-self-dual pair.
struct OirLabel {
  bool symmetrized = false;
  std::size_t index = 0;
  friend bool operator==(const OirLabel&, const OirLabel&) = default;
  friend auto operator<=>(const OirLabel&, const OirLabel&) = default;
};

struct OirTerm {
  OirLabel label;
  std::int64_t multiplicity = 0;
};

std::string to_string(const OirLabel& label);
// Every OIR of the table, irreducible ones first, each ordered by index.
std::vector<OirLabel> oir_basis(const CharacterTable& table);
VirtualRep oir_rep(const TablePtr& table, const OirLabel& label);
// Multiplicities over the OIR basis; throws NotOrthogonal. Virtual input is
// accepted when it lies in RO(G).
std::vector<OirTerm> decompose_orthogonal(const VirtualRep& pi);

}  // namespace sl2swc
