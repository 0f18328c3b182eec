#pragma once

#include <memory>
#include <vector>

#include "artin/cyclotomic.hpp"
#include "artin/group.hpp"

namespace artin {

/// A class function on a group: one exact cyclotomic value per conjugacy
/// class, indexed in the group's class order.
class ClassFunction {
public:
  ClassFunction(GroupPtr group, std::vector<CycloNumber> values);

  const GroupPtr& group() const { return group_; }
  const std::vector<CycloNumber>& values() const { return values_; }
  const CycloNumber& valueAt(int classIndex) const {
    return values_[static_cast<std::size_t>(classIndex)];
  }
  /// Value at the class of an arbitrary element.
  const CycloNumber& valueAtElement(int elementIndex) const {
    return values_[static_cast<std::size_t>(group_->classOf(elementIndex))];
  }
  bool isZero() const;

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const Rat& q, const ClassFunction& a);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

private:
  GroupPtr group_;
  std::vector<CycloNumber> values_;
};

ClassFunction trivialCharacter(const GroupPtr& group);
ClassFunction regularCharacter(const GroupPtr& group);
ClassFunction zeroFunction(const GroupPtr& group);

/// Hermitian inner product (1/|G|) sum |C| chi(C) conj(psi(C)); conjugation
/// is the Galois automorphism k = -1.
CycloNumber innerProduct(const ClassFunction& chi, const ClassFunction& psi);

/// Induction from a subgroup: (Ind chi)(g) = (1/|H|) sum over x in G with
/// x^-1 g x in H of chi(x^-1 g x).
ClassFunction induce(const SubgroupHandle& sub, const ClassFunction& chiOnSub);
/// Ind_H^G of the trivial character of H.
ClassFunction inducedTrivial(const SubgroupHandle& sub);

ClassFunction restrictTo(const SubgroupHandle& sub, const ClassFunction& chiOnParent);

/// Galois action (g.chi)(x) = sigma_k(chi(x)) for k coprime to the exponent.
/// Debug builds also evaluate chi(x^k) and assert the two routes agree.
ClassFunction galoisAct(const ClassFunction& chi, std::int64_t k);

/// (1/phi(e)) sum of galoisAct over k in (Z/e)^x; always rational-valued.
ClassFunction galoisAverage(const ClassFunction& chi);

bool isRationalCharacter(const ClassFunction& chi);

/// Value at class (c, c') of the product group is chi(c) * psi(c').
ClassFunction externalProduct(const GroupPtr& product, const ClassFunction& chi,
                              const ClassFunction& psi);

/// Pullback along the surjection G -> G' determined by generator images.
/// The map is extended over the full element list and verified to be a
/// well-defined surjective homomorphism.
ClassFunction inflate(const GroupPtr& group, const std::vector<Permutation>& generatorImages,
                      const ClassFunction& chiOnQuotient);

/// Complete table of irreducible characters with exact cyclotomic values.
/// Rows are ordered by degree, then descending lexicographic value tuples
/// (this puts the trivial character first).
class CharacterTable {
public:
  CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles,
                 std::vector<std::int64_t> degrees);

  const GroupPtr& group() const { return group_; }
  const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
  const ClassFunction& irreducible(int i) const {
    return irreducibles_[static_cast<std::size_t>(i)];
  }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  int size() const { return static_cast<int>(irreducibles_.size()); }

private:
  GroupPtr group_;
  std::vector<ClassFunction> irreducibles_;
  std::vector<std::int64_t> degrees_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

/// Dixon-Burnside: simultaneous eigenvectors of class-sum matrices modulo a
/// prime p = 1 (mod e), p > 2 sqrt(|G|), lifted to Q(zeta) by the discrete
/// Fourier transform over power maps.  The result is self-checked against
/// the orthogonality relations before being returned.
TablePtr computeCharacterTable(const GroupPtr& group);

/// A vector of exact rational multiplicities over the irreducibles.
class VirtualCharacter {
public:
  VirtualCharacter(TablePtr table, std::vector<Rat> multiplicities);

  const TablePtr& table() const { return table_; }
  const std::vector<Rat>& multiplicities() const { return multiplicities_; }
  ClassFunction toClassFunction() const;

private:
  TablePtr table_;
  std::vector<Rat> multiplicities_;
};

/// Coordinates of chi in the irreducible basis: m_i = <chi, chi_i>.  Throws
/// input_error when some multiplicity is irrational (chi is then not a
/// virtual character).
VirtualCharacter decomposeIntoIrreducibles(const TablePtr& table, const ClassFunction& chi);

}  // namespace artin
