#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "sl2swc/finite_field.hpp"

namespace sl2swc {

// Entries are field-element indices in row-major order: (a b; c d).
struct Mat2 {
  std::array<std::uint32_t, 4> e{};
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// a^k b^l in the generalized quaternion group of order 2^n.
struct QuatWord {
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  friend bool operator==(const QuatWord&, const QuatWord&) = default;
};

using GroupElem = std::variant<Mat2, QuatWord>;

enum class GroupFamily { SL2, GL2, GenQuaternion, MatrixSubgroup, QuaternionSubgroup };

struct ConjugacyData {
  std::vector<std::uint32_t> class_of;                // element -> class
  std::vector<std::vector<std::uint32_t>> members;    // class -> sorted elements
  std::vector<std::size_t> representative;            // least element of the class
  std::vector<std::size_t> size;
  std::vector<std::size_t> rep_order;                 // element order of the representative
  std::size_t identity_class = 0;
  std::size_t exponent = 1;
  // power_class[c][k] = class of rep(c)^k for 0 <= k < exponent.
  std::vector<std::vector<std::uint32_t>> power_class;

  std::size_t count() const { return representative.size(); }
  std::size_t power(std::size_t cls, std::int64_t k) const;
  std::size_t inverse_class(std::size_t cls) const { return power(cls, -1); }
};

// A concrete finite group, materialized as its sorted element list.
// Immutable after construction; conjugacy data is computed once on demand.
class Group {
 public:
  static constexpr int kDefaultCap = 81;

  static std::shared_ptr<const Group> sl2(int q, int cap = kDefaultCap);
  static std::shared_ptr<const Group> gl2(int q, int cap = kDefaultCap);
  static std::shared_ptr<const Group> gen_quaternion(int n);
  // Group on a subset of `parent`'s elements (closure is not checked here).
  static std::shared_ptr<const Group> from_subset(const Group& parent,
                                                  std::span<const std::size_t> indices,
                                                  std::string name);

  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  const std::string& name() const { return name_; }
  GroupFamily family() const { return family_; }
  // q for matrix groups, 0 otherwise.
  int q() const { return field_ ? static_cast<int>(field_->order()) : 0; }
  // n for quaternion words, 0 otherwise.
  int quaternion_n() const { return quat_n_; }
  const std::shared_ptr<const FiniteField>& field() const { return field_; }

  std::size_t order() const { return keys_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t power(std::size_t a, std::int64_t k) const;
  std::size_t conjugate(std::size_t g, std::size_t x) const;  // x g x^{-1}
  std::size_t element_order(std::size_t a) const;

  GroupElem element(std::size_t i) const;
  std::optional<std::size_t> find(const GroupElem& g) const;
  std::size_t index_of(const GroupElem& g) const;  // throws NotFound
  std::string element_string(std::size_t i) const;

  // Index of -1 for matrix groups over odd characteristic.
  std::optional<std::size_t> minus_identity() const;

  const ConjugacyData& classes() const;
  std::size_t exponent() const { return classes().exponent; }

 private:
  Group() = default;
  void finalize();
  std::uint64_t key_of(const GroupElem& g) const;
  GroupElem decode(std::uint64_t key) const;
  std::optional<std::size_t> lookup(std::uint64_t key) const;
  std::uint64_t product_key(std::uint64_t a, std::uint64_t b) const;

  std::string name_;
  GroupFamily family_ = GroupFamily::SL2;
  std::shared_ptr<const FiniteField> field_;
  int quat_n_ = 0;
  std::vector<std::uint64_t> keys_;  // strictly increasing
  std::vector<std::uint32_t> dense_;  // key -> index + 1, when the key space is small
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
  std::vector<std::uint32_t> table_;  // full product table for small groups
  std::vector<std::uint32_t> inv_;
  std::size_t identity_ = 0;

  mutable std::once_flag classes_once_;
  mutable std::unique_ptr<ConjugacyData> classes_;
};

using GroupPtr = std::shared_ptr<const Group>;

// Exhaustive orbit partition and power-class table.
const ConjugacyData& conjugacy(const Group& g);

enum class SubgroupTag { Z, N, T, B, ZN, Te, Q, Q1, Other };
std::string_view to_string(SubgroupTag tag);
SubgroupTag parse_subgroup_tag(std::string_view s);

class Subgroup {
 public:
  // Validates identity, closure and inverses.
  static Subgroup make(GroupPtr parent, std::vector<std::size_t> indices, SubgroupTag tag);

  const GroupPtr& parent() const { return parent_; }
  std::span<const std::size_t> indices() const { return indices_; }
  std::size_t order() const { return indices_.size(); }
  SubgroupTag tag() const { return tag_; }
  bool contains(std::size_t parent_index) const;
  std::optional<std::size_t> to_local(std::size_t parent_index) const;
  std::size_t to_parent(std::size_t local) const { return indices_[local]; }
  // Stand-alone group whose element i is parent element indices()[i].
  const GroupPtr& as_group() const { return group_; }

 private:
  Subgroup() = default;
  GroupPtr parent_;
  std::vector<std::size_t> indices_;
  SubgroupTag tag_ = SubgroupTag::Other;
  GroupPtr group_;
};

// Z, N, T, B, ZN for SL(2,q) and GL(2,q); Te only for GL(2,q) (unit group of
// GF(q)[C] for the companion matrix C of the lowest irreducible monic
// quadratic). For generalized quaternion groups: Z (center) and Q1 = <a^{2^{n-3}}, b>.
Subgroup standard_subgroup(const GroupPtr& g, SubgroupTag tag);

// n_0 = (1 1; 0 1).
std::size_t unipotent_n0(const Group& g);

struct QuaternionEmbedding {
  Subgroup subgroup;
  std::size_t x;  // parent indices with x^2 = y^2 = -1, y x y^{-1} = x^{-1}
  std::size_t y;
};

// First Q8 found in canonical element order; throws EvenQ for even q.
QuaternionEmbedding find_quaternion(const GroupPtr& g);
// Up to `limit` pairwise distinct Q8 subgroups, in discovery order.
std::vector<QuaternionEmbedding> find_quaternions(const GroupPtr& g, std::size_t limit);

// The canonical generator of a cyclic subgroup: least element of full order.
std::size_t cyclic_generator(const Subgroup& h);

}  // namespace sl2swc
