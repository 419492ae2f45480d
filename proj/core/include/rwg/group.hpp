#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rwg {

/// Dense index of a group element, in [0, order).
using Element = std::uint32_t;

enum class GroupKind { kCyclic, kCube, kSymmetric, kDihedral, kQuaternion, kHeisenberg };

/// Parsed form of `cyclic:11`, `cube:6`, `symmetric:5`, `dihedral:4`,
/// `quaternion`, `heisenberg:5`.
struct GroupDescriptor {
  GroupKind kind = GroupKind::kCyclic;
  int n = 0;

  static GroupDescriptor parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Largest symmetric group the catalogue will build (8! = 40320 elements).
inline constexpr int kMaxSymmetricDegree = 8;
/// Orders up to this size get a precomputed multiplication table.
inline constexpr std::size_t kTableOrderLimit = 4096;

/// A finite group on dense element indices with identity at index 0.
///
/// Element orderings are fixed per family:
///   cyclic(n)      residues 0..n-1
///   cube(n)        bit vectors (s_1..s_n) in lexicographic order, s_1 most significant
///   symmetric(n)   permutations in lexicographic one-line order
///   dihedral(4)    r^a s^b at index a + 4b
///   quaternion     1, -1, i, -i, j, -j, k, -k
///   heisenberg(n)  (a,b,c) triples in lexicographic order, index a n^2 + b n + c
///
/// Groups are immutable once built; share them through `GroupPtr`.
class Group {
 public:
  static std::shared_ptr<const Group> build(const GroupDescriptor& descriptor);
  static std::shared_ptr<const Group> build(std::string_view descriptor);

  const GroupDescriptor& descriptor() const noexcept { return descriptor_; }
  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }

  Element mul(Element a, Element b) const;
  Element inv(Element a) const { return inverse_[a]; }
  const std::string& label(Element a) const { return labels_[a]; }
  std::optional<Element> find(std::string_view label) const;

  /// Checked conversion of a raw index.
  Element element(std::size_t index) const;

  /// A fixed generating set for the family (used for conjugation orbits
  /// and as a canonical ergodic support).
  const std::vector<Element>& generators() const noexcept { return generators_; }

  bool has_table() const noexcept { return !table_.empty(); }
  bool is_abelian() const;

  /// Exhaustive associativity / identity / inverse check for orders up to
  /// `exhaustive_limit`, sampled triples above it.
  bool check_axioms(std::size_t exhaustive_limit = 512) const;

  // Family-specific views.
  std::vector<int> permutation(Element a) const;       // symmetric: one-line, 0-based images
  Element from_permutation(std::span<const int> one_line) const;
  std::uint32_t bits(Element a) const;                 // cube: packed bit vector
  std::array<int, 3> heisenberg_triple(Element a) const;

 private:
  Group(GroupDescriptor descriptor, std::size_t order);

  Element rule_mul(Element a, Element b) const;
  void finish();

  GroupDescriptor descriptor_;
  std::size_t order_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::vector<Element> table_;
  std::vector<Element> generators_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Lexicographic rank of a permutation of 0..n-1 and its inverse map.
std::uint64_t permutation_rank(std::span<const int> one_line);
std::vector<int> permutation_unrank(std::uint64_t rank, int n);

/// Set of element indices, kept sorted and unique.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::vector<Element> elements);

  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(Element g) const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<Element> elements_;
};

struct ConjugacyPartition {
  std::vector<std::vector<Element>> classes;  // each sorted; ordered by smallest member

  std::size_t size() const noexcept { return classes.size(); }
  /// Index of the class containing `g`.
  std::size_t class_of(Element g) const;
};

ConjugacyPartition conjugacy_classes(const Group& g);

/// Closure of `s` under multiplication (the subgroup it generates).
SupportSet generated_subgroup(const Group& g, const SupportSet& s);

}  // namespace rwg
