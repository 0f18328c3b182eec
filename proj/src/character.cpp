#include "artin/character.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "artin/errors.hpp"

namespace artin {

ClassFunction::ClassFunction(GroupPtr group, std::vector<CycloNumber> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != group_->classCount())
    throw input_error("class function needs one value per conjugacy class");
}

bool ClassFunction::isZero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const CycloNumber& v) { return v.isZero(); });
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group_->sameAs(*b.group_)) throw input_error("class functions on different groups");
  std::vector<CycloNumber> values;
  values.reserve(a.values_.size());
  for (std::size_t i = 0; i < a.values_.size(); ++i) values.push_back(a.values_[i] + b.values_[i]);
  return ClassFunction(a.group_, std::move(values));
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group_->sameAs(*b.group_)) throw input_error("class functions on different groups");
  std::vector<CycloNumber> values;
  values.reserve(a.values_.size());
  for (std::size_t i = 0; i < a.values_.size(); ++i) values.push_back(a.values_[i] - b.values_[i]);
  return ClassFunction(a.group_, std::move(values));
}

ClassFunction operator*(const Rat& q, const ClassFunction& a) {
  std::vector<CycloNumber> values;
  values.reserve(a.values_.size());
  for (const CycloNumber& v : a.values_) values.push_back(v * q);
  return ClassFunction(a.group_, std::move(values));
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  if (!a.group_->sameAs(*b.group_)) return false;
  for (std::size_t i = 0; i < a.values_.size(); ++i)
    if (!equal(a.values_[i], b.values_[i])) return false;
  return true;
}

ClassFunction trivialCharacter(const GroupPtr& group) {
  return ClassFunction(group, std::vector<CycloNumber>(
                                  static_cast<std::size_t>(group->classCount()),
                                  CycloNumber::one()));
}

ClassFunction regularCharacter(const GroupPtr& group) {
  std::vector<CycloNumber> values(static_cast<std::size_t>(group->classCount()),
                                  CycloNumber::zero());
  values[0] = CycloNumber::fromRational(Rat(static_cast<long>(group->order())));
  return ClassFunction(group, std::move(values));
}

ClassFunction zeroFunction(const GroupPtr& group) {
  return ClassFunction(group, std::vector<CycloNumber>(
                                  static_cast<std::size_t>(group->classCount()),
                                  CycloNumber::zero()));
}

CycloNumber innerProduct(const ClassFunction& chi, const ClassFunction& psi) {
  if (!chi.group()->sameAs(*psi.group()))
    throw input_error("inner product of class functions on different groups");
  const FiniteGroup& g = *chi.group();
  CycloNumber acc = CycloNumber::zero();
  for (int c = 0; c < g.classCount(); ++c) {
    const Rat size(static_cast<long>(g.classes()[static_cast<std::size_t>(c)].size));
    acc = acc + size * (chi.valueAt(c) * conjugate(psi.valueAt(c)));
  }
  return acc * Rat(1, static_cast<long>(g.order()));
}

ClassFunction induce(const SubgroupHandle& sub, const ClassFunction& chiOnSub) {
  if (!chiOnSub.group()->sameAs(*sub.group))
    throw input_error("character is not defined on the given subgroup");
  const FiniteGroup& g = *sub.parent;
  const FiniteGroup& h = *sub.group;
  std::vector<CycloNumber> values;
  values.reserve(static_cast<std::size_t>(g.classCount()));
  for (int c = 0; c < g.classCount(); ++c) {
    const int rep = g.classes()[static_cast<std::size_t>(c)].representativeIndex;
    CycloNumber sum = CycloNumber::zero();
    for (int x = 0; x < g.order(); ++x) {
      const int conj = g.multiply(g.multiply(g.invert(x), rep), x);
      const int own = sub.ownIndexOfParentElement[static_cast<std::size_t>(conj)];
      if (own < 0) continue;
      sum = sum + chiOnSub.valueAt(h.classOf(own));
    }
    values.push_back(sum * Rat(1, static_cast<long>(h.order())));
  }
  return ClassFunction(sub.parent, std::move(values));
}

ClassFunction inducedTrivial(const SubgroupHandle& sub) {
  return induce(sub, trivialCharacter(sub.group));
}

ClassFunction restrictTo(const SubgroupHandle& sub, const ClassFunction& chiOnParent) {
  if (!chiOnParent.group()->sameAs(*sub.parent))
    throw input_error("character is not defined on the parent group");
  const FiniteGroup& h = *sub.group;
  std::vector<CycloNumber> values;
  values.reserve(static_cast<std::size_t>(h.classCount()));
  for (int c = 0; c < h.classCount(); ++c) {
    const Permutation& rep = h.classes()[static_cast<std::size_t>(c)].representative;
    const int parentIndex = sub.parent->indexOf(rep);
    if (parentIndex < 0) throw defect_error("subgroup element missing from parent");
    values.push_back(chiOnParent.valueAtElement(parentIndex));
  }
  return ClassFunction(sub.group, std::move(values));
}

ClassFunction galoisAct(const ClassFunction& chi, std::int64_t k) {
  const FiniteGroup& g = *chi.group();
  const std::int64_t e = g.exponent();
  std::int64_t kk = k % e;
  if (kk < 0) kk += e;
  if (kk == 0) kk = e;  // e = 1 only; sigma_1 on Q
  if (std::gcd(kk, e) != 1)
    throw input_error("galoisAct: k = " + std::to_string(k) + " is not coprime to the exponent " +
                      std::to_string(e));
  std::vector<CycloNumber> values;
  values.reserve(chi.values().size());
  for (const CycloNumber& v : chi.values()) values.push_back(galoisConjugate(v, kk));
#ifndef NDEBUG
  // cross-check: for virtual characters sigma_k(chi(x)) = chi(x^k)
  const std::vector<int> pmap = powerClassMap(g, kk);
  for (int c = 0; c < g.classCount(); ++c)
    assert(equal(values[static_cast<std::size_t>(c)],
                 chi.valueAt(pmap[static_cast<std::size_t>(c)])));
#endif
  return ClassFunction(chi.group(), std::move(values));
}

ClassFunction galoisAverage(const ClassFunction& chi) {
  const std::int64_t e = chi.group()->exponent();
  ClassFunction sum = zeroFunction(chi.group());
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= e; ++k) {
    if (std::gcd(k, e) != 1) continue;
    sum = sum + galoisAct(chi, k);
    ++count;
  }
  return Rat(1, static_cast<long>(count)) * sum;
}

bool isRationalCharacter(const ClassFunction& chi) {
  return std::all_of(chi.values().begin(), chi.values().end(),
                     [](const CycloNumber& v) { return isRational(v); });
}

ClassFunction externalProduct(const GroupPtr& product, const ClassFunction& chi,
                              const ClassFunction& psi) {
  const FiniteGroup& left = *chi.group();
  const FiniteGroup& right = *psi.group();
  if (product->degree() != left.degree() + right.degree())
    throw input_error("product group degree does not match the two factors");
  std::vector<CycloNumber> values;
  values.reserve(static_cast<std::size_t>(product->classCount()));
  for (const ConjugacyClass& cls : product->classes()) {
    const Permutation& rep = cls.representative;
    std::vector<int> leftImages(static_cast<std::size_t>(left.degree()));
    std::vector<int> rightImages(static_cast<std::size_t>(right.degree()));
    for (int i = 0; i < left.degree(); ++i) {
      const int img = rep.apply(i);
      if (img >= left.degree())
        throw input_error("group is not a direct product of the two factors");
      leftImages[static_cast<std::size_t>(i)] = img;
    }
    for (int i = 0; i < right.degree(); ++i) {
      const int img = rep.apply(left.degree() + i);
      if (img < left.degree())
        throw input_error("group is not a direct product of the two factors");
      rightImages[static_cast<std::size_t>(i)] = img - left.degree();
    }
    const int li = left.indexOf(Permutation::fromImages(std::move(leftImages)));
    const int ri = right.indexOf(Permutation::fromImages(std::move(rightImages)));
    if (li < 0 || ri < 0) throw input_error("product element does not project to the factors");
    values.push_back(chi.valueAtElement(li) * psi.valueAtElement(ri));
  }
  return ClassFunction(product, std::move(values));
}

ClassFunction inflate(const GroupPtr& group, const std::vector<Permutation>& generatorImages,
                      const ClassFunction& chiOnQuotient) {
  const FiniteGroup& g = *group;
  const FiniteGroup& q = *chiOnQuotient.group();
  if (generatorImages.size() != g.generators().size())
    throw input_error("inflate needs one image per generator");
  std::vector<int> imageIdx;
  imageIdx.reserve(generatorImages.size());
  for (const Permutation& img : generatorImages) {
    const int idx = q.indexOf(img);
    if (idx < 0) throw input_error("generator image is not an element of the quotient group");
    imageIdx.push_back(idx);
  }

  // extend over the whole element list by breadth-first products, then check
  // every edge f(x s) = f(x) f(s); together these verify the homomorphism
  std::vector<int> f(static_cast<std::size_t>(g.order()), -1);
  f[static_cast<std::size_t>(g.identityIndex())] = q.identityIndex();
  std::vector<int> frontier = {g.identityIndex()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (std::size_t s = 0; s < generatorImages.size(); ++s) {
        const int xs = g.multiply(x, g.indexOf(g.generators()[s]));
        const int img = q.multiply(f[static_cast<std::size_t>(x)], imageIdx[s]);
        if (f[static_cast<std::size_t>(xs)] < 0) {
          f[static_cast<std::size_t>(xs)] = img;
          next.push_back(xs);
        }
      }
    }
    frontier = std::move(next);
  }
  for (int x = 0; x < g.order(); ++x) {
    if (f[static_cast<std::size_t>(x)] < 0)
      throw input_error("generator images do not define a map on the whole group");
    for (std::size_t s = 0; s < generatorImages.size(); ++s) {
      const int xs = g.multiply(x, g.indexOf(g.generators()[s]));
      if (f[static_cast<std::size_t>(xs)] !=
          q.multiply(f[static_cast<std::size_t>(x)], imageIdx[s]))
        throw input_error("generator images do not extend to a homomorphism");
    }
  }
  std::vector<bool> hit(static_cast<std::size_t>(q.order()), false);
  std::int64_t hitCount = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (!hit[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])]) {
      hit[static_cast<std::size_t>(f[static_cast<std::size_t>(x)])] = true;
      ++hitCount;
    }
  }
  if (hitCount != q.order()) throw input_error("generator images do not define a surjection");

  std::vector<CycloNumber> values;
  values.reserve(static_cast<std::size_t>(g.classCount()));
  for (const ConjugacyClass& cls : g.classes())
    values.push_back(chiOnQuotient.valueAtElement(
        f[static_cast<std::size_t>(cls.representativeIndex)]));
  return ClassFunction(group, std::move(values));
}

CharacterTable::CharacterTable(GroupPtr group, std::vector<ClassFunction> irreducibles,
                               std::vector<std::int64_t> degrees)
    : group_(std::move(group)),
      irreducibles_(std::move(irreducibles)),
      degrees_(std::move(degrees)) {}

VirtualCharacter::VirtualCharacter(TablePtr table, std::vector<Rat> multiplicities)
    : table_(std::move(table)), multiplicities_(std::move(multiplicities)) {
  if (multiplicities_.size() != static_cast<std::size_t>(table_->size()))
    throw input_error("virtual character needs one multiplicity per irreducible");
}

ClassFunction VirtualCharacter::toClassFunction() const {
  ClassFunction acc = zeroFunction(table_->group());
  for (std::size_t i = 0; i < multiplicities_.size(); ++i) {
    if (multiplicities_[i] == 0) continue;
    acc = acc + multiplicities_[i] * table_->irreducible(static_cast<int>(i));
  }
  return acc;
}

VirtualCharacter decomposeIntoIrreducibles(const TablePtr& table, const ClassFunction& chi) {
  if (!chi.group()->sameAs(*table->group()))
    throw input_error("character table belongs to a different group");
  std::vector<Rat> mults;
  mults.reserve(static_cast<std::size_t>(table->size()));
  for (int i = 0; i < table->size(); ++i) {
    const CycloNumber m = innerProduct(chi, table->irreducible(i));
    if (!isRational(m))
      throw input_error("multiplicity <chi, chi_" + std::to_string(i) +
                        "> = " + toString(m) + " is not rational; not a virtual character");
    mults.push_back(toRational(m));
  }
  VirtualCharacter result(table, std::move(mults));
  if (!(result.toClassFunction() == chi))
    throw defect_error("rational multiplicities failed to reconstruct the class function");
  return result;
}

}  // namespace artin
