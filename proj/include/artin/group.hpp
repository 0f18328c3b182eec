#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artin/permutation.hpp"

namespace artin {

inline constexpr std::int64_t kDefaultOrderBound = 10080;
inline constexpr std::int64_t kDefaultSubgroupOrderBound = 200;

struct ConjugacyClass {
  Permutation representative;  // lexicographically least member
  std::int64_t size = 0;
  std::int64_t elementOrder = 0;
  int representativeIndex = 0;   // index into FiniteGroup elements
  std::vector<int> members;      // element indices, ascending
};

/// A finite permutation group with full element enumeration.  Elements are
/// stored sorted lexicographically (so the identity is element 0), classes
/// are ordered identity-first then by representative image lists.  Immutable
/// after construction; all queries are const.
class FiniteGroup {
public:
  static std::shared_ptr<const FiniteGroup> enumerate(std::vector<Permutation> generators,
                                                      int degree,
                                                      std::int64_t orderBound = kDefaultOrderBound);

  int degree() const { return degree_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  std::int64_t exponent() const { return exponent_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int classCount() const { return static_cast<int>(classes_.size()); }

  const Permutation& element(int index) const { return elements_[static_cast<std::size_t>(index)]; }
  /// -1 when the permutation is not an element.
  int indexOf(const Permutation& p) const;
  int classOf(int elementIndex) const { return memberClass_[static_cast<std::size_t>(elementIndex)]; }

  int identityIndex() const { return 0; }
  int multiply(int a, int b) const;
  int invert(int a) const;
  int power(int a, std::int64_t k) const;

  bool isCyclic() const;
  /// Structural identity: same degree and same element set.
  bool sameAs(const FiniteGroup& other) const;

private:
  FiniteGroup() = default;
  void computeClasses();

  int degree_ = 0;
  std::int64_t exponent_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> memberClass_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup of a fixed parent, carried both as a set of parent elements and
/// as a standalone group (same degree) with its own conjugacy data.
struct SubgroupHandle {
  GroupPtr parent;
  GroupPtr group;                         // the subgroup as a FiniteGroup
  std::vector<Permutation> generators;    // canonical generating set
  std::vector<int> parentElementIndices;  // ascending
  std::vector<int> ownIndexOfParentElement;  // |parent| entries, -1 outside

  std::int64_t order() const { return group->order(); }
  bool contains(int parentElementIndex) const {
    return ownIndexOfParentElement[static_cast<std::size_t>(parentElementIndex)] >= 0;
  }
};

/// Subgroup handle generated by the given parent element indices.
SubgroupHandle makeSubgroup(const GroupPtr& parent, const std::vector<int>& generatorIndices);

/// The map (class of x) -> (class of x^k); well-defined for any integer k.
std::vector<int> powerClassMap(const FiniteGroup& group, std::int64_t k);

/// Orbits of conjugacy classes under all power maps x -> x^k, gcd(k, e) = 1.
/// Each orbit lists class indices ascending; orbits sorted by first member.
std::vector<std::vector<int>> powerMapOrbits(const FiniteGroup& group);

/// One representative per conjugacy class of cyclic subgroups, ordered by
/// (order, element set).  Always includes the trivial subgroup.
std::vector<SubgroupHandle> cyclicSubgroupsUpToConjugacy(const GroupPtr& group);

/// One representative per conjugacy class of all subgroups.  Guarded by an
/// order bound (resource_error beyond it; cyclic-only mode stays available).
std::vector<SubgroupHandle> allSubgroupsUpToConjugacy(
    const GroupPtr& group, std::int64_t orderBound = kDefaultSubgroupOrderBound);

/// Left coset representatives of H in G, ascending by element index; exactly
/// [G:H] of them, the identity first.
std::vector<Permutation> cosetRepresentatives(const FiniteGroup& group, const SubgroupHandle& sub);

/// G x G' acting on the disjoint union of the two point sets.
GroupPtr directProduct(const FiniteGroup& left, const FiniteGroup& right,
                       std::int64_t orderBound = kDefaultOrderBound);

/// Named constructions: Cn, Dn (order 2n), Sn, An, Q8, and x-products such as
/// "S3xC2".  Throws input_error on unknown names.
GroupPtr namedGroup(const std::string& name, std::int64_t orderBound = kDefaultOrderBound);

}  // namespace artin
