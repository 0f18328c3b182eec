#include "artin/group.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "artin/errors.hpp"

namespace artin {

namespace {

std::vector<Permutation> closureOf(const std::vector<Permutation>& generators, int degree,
                                   std::int64_t bound) {
  std::set<Permutation> seen;
  std::vector<Permutation> frontier;
  const Permutation id = Permutation::identity(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& x : frontier) {
      for (const Permutation& g : generators) {
        Permutation y = x * g;
        if (seen.insert(y).second) {
          if (static_cast<std::int64_t>(seen.size()) > bound)
            throw resource_error("group order exceeds bound " + std::to_string(bound));
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};  // std::set iterates in lexicographic order
}

}  // namespace

std::shared_ptr<const FiniteGroup> FiniteGroup::enumerate(std::vector<Permutation> generators,
                                                          int degree, std::int64_t orderBound) {
  for (const Permutation& g : generators)
    if (g.degree() != degree)
      throw input_error("generator degree " + std::to_string(g.degree()) +
                        " does not match group degree " + std::to_string(degree));
  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = degree;
  group->generators_ = generators;
  group->elements_ = closureOf(generators, degree, orderBound);
  group->exponent_ = 1;
  for (const Permutation& x : group->elements_)
    group->exponent_ = std::lcm(group->exponent_, x.order());
  group->computeClasses();
  return group;
}

void FiniteGroup::computeClasses() {
  const int n = static_cast<int>(elements_.size());
  memberClass_.assign(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> classMembers;

  // conjugation orbits; generators suffice since conjugation is an action
  for (int start = 0; start < n; ++start) {
    if (memberClass_[static_cast<std::size_t>(start)] >= 0) continue;
    const int classIndex = static_cast<int>(classMembers.size());
    std::vector<int> members;
    std::queue<int> queue;
    memberClass_[static_cast<std::size_t>(start)] = classIndex;
    queue.push(start);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      members.push_back(x);
      for (const Permutation& g : generators_) {
        const Permutation conj = g * element(x) * g.inverse();
        const int y = indexOf(conj);
        if (memberClass_[static_cast<std::size_t>(y)] < 0) {
          memberClass_[static_cast<std::size_t>(y)] = classIndex;
          queue.push(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classMembers.push_back(std::move(members));
  }

  // order classes by representative (lex-least member); elements are sorted,
  // so representative index order is representative lex order and the
  // identity's class lands first
  std::vector<int> byRep(classMembers.size());
  std::iota(byRep.begin(), byRep.end(), 0);
  std::sort(byRep.begin(), byRep.end(),
            [&](int a, int b) { return classMembers[static_cast<std::size_t>(a)][0] <
                                       classMembers[static_cast<std::size_t>(b)][0]; });

  classes_.clear();
  std::vector<int> relabel(classMembers.size());
  for (std::size_t newIndex = 0; newIndex < byRep.size(); ++newIndex) {
    const auto& members = classMembers[static_cast<std::size_t>(byRep[newIndex])];
    ConjugacyClass cls;
    cls.representativeIndex = members[0];
    cls.representative = element(members[0]);
    cls.size = static_cast<std::int64_t>(members.size());
    cls.elementOrder = cls.representative.order();
    cls.members = members;
    relabel[static_cast<std::size_t>(byRep[newIndex])] = static_cast<int>(newIndex);
    classes_.push_back(std::move(cls));
  }
  for (auto& c : memberClass_) c = relabel[static_cast<std::size_t>(c)];
}

int FiniteGroup::indexOf(const Permutation& p) const {
  const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int FiniteGroup::multiply(int a, int b) const {
  return indexOf(element(a) * element(b));
}

int FiniteGroup::invert(int a) const { return indexOf(element(a).inverse()); }

int FiniteGroup::power(int a, std::int64_t k) const { return indexOf(element(a).power(k)); }

bool FiniteGroup::isCyclic() const {
  for (const Permutation& x : elements_)
    if (x.order() == order()) return true;
  return false;
}

bool FiniteGroup::sameAs(const FiniteGroup& other) const {
  return this == &other || (degree_ == other.degree_ && elements_ == other.elements_);
}

namespace {

std::vector<int> closureIndices(const FiniteGroup& g, std::vector<int> seed) {
  std::set<int> seen(seed.begin(), seed.end());
  seen.insert(g.identityIndex());
  std::queue<int> queue;
  for (int s : seen) queue.push(s);
  std::vector<int> gens = std::move(seed);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop();
    for (int s : gens) {
      const int y = g.multiply(x, s);
      if (seen.insert(y).second) queue.push(y);
      const int z = g.multiply(x, g.invert(s));
      if (seen.insert(z).second) queue.push(z);
    }
  }
  return {seen.begin(), seen.end()};
}

// canonical generating set: greedy over ascending element indices
std::vector<int> canonicalGenerators(const FiniteGroup& g, const std::vector<int>& subgroup) {
  std::vector<int> gens;
  std::vector<int> have = {g.identityIndex()};
  for (int x : subgroup) {
    if (static_cast<std::int64_t>(have.size()) == static_cast<std::int64_t>(subgroup.size())) break;
    if (std::binary_search(have.begin(), have.end(), x)) continue;
    gens.push_back(x);
    have = closureIndices(g, gens);
  }
  if (gens.empty()) gens.push_back(g.identityIndex());
  return gens;
}

std::vector<int> conjugateSet(const FiniteGroup& g, const std::vector<int>& subgroup, int by) {
  std::vector<int> image;
  image.reserve(subgroup.size());
  const Permutation conj = g.element(by);
  const Permutation conjInv = conj.inverse();
  for (int x : subgroup) image.push_back(g.indexOf(conj * g.element(x) * conjInv));
  std::sort(image.begin(), image.end());
  return image;
}

SubgroupHandle handleFromElements(const GroupPtr& parent, const std::vector<int>& elementIndices) {
  SubgroupHandle handle;
  handle.parent = parent;
  handle.parentElementIndices = elementIndices;
  const std::vector<int> genIdx = canonicalGenerators(*parent, elementIndices);
  handle.generators.reserve(genIdx.size());
  for (int i : genIdx) handle.generators.push_back(parent->element(i));
  handle.group = FiniteGroup::enumerate(handle.generators, parent->degree(),
                                        static_cast<std::int64_t>(elementIndices.size()));
  if (handle.group->order() != static_cast<std::int64_t>(elementIndices.size()))
    throw defect_error("subgroup closure mismatch");
  handle.ownIndexOfParentElement.assign(static_cast<std::size_t>(parent->order()), -1);
  for (int i : elementIndices) {
    const int own = handle.group->indexOf(parent->element(i));
    if (own < 0) throw defect_error("subgroup element missing from closure");
    handle.ownIndexOfParentElement[static_cast<std::size_t>(i)] = own;
  }
  return handle;
}

// orbit of a subgroup (as sorted element-index set) under conjugation;
// returns the lexicographically least member as canonical representative
std::vector<int> conjugacyOrbitRepresentative(const FiniteGroup& g, const std::vector<int>& sub,
                                              std::set<std::vector<int>>* orbitOut = nullptr) {
  std::set<std::vector<int>> orbit;
  std::queue<std::vector<int>> queue;
  orbit.insert(sub);
  queue.push(sub);
  while (!queue.empty()) {
    const std::vector<int> current = queue.front();
    queue.pop();
    for (const Permutation& gen : g.generators()) {
      const int by = g.indexOf(gen);
      std::vector<int> image = conjugateSet(g, current, by);
      if (orbit.insert(image).second) queue.push(std::move(image));
    }
  }
  if (orbitOut) *orbitOut = orbit;
  return *orbit.begin();
}

}  // namespace

SubgroupHandle makeSubgroup(const GroupPtr& parent, const std::vector<int>& generatorIndices) {
  for (int i : generatorIndices)
    if (i < 0 || i >= parent->order())
      throw input_error("subgroup generator index out of range");
  return handleFromElements(parent, closureIndices(*parent, generatorIndices));
}

std::vector<int> powerClassMap(const FiniteGroup& group, std::int64_t k) {
  std::vector<int> map(static_cast<std::size_t>(group.classCount()));
  for (int c = 0; c < group.classCount(); ++c) {
    const int rep = group.classes()[static_cast<std::size_t>(c)].representativeIndex;
    map[static_cast<std::size_t>(c)] = group.classOf(group.power(rep, k));
  }
  return map;
}

std::vector<std::vector<int>> powerMapOrbits(const FiniteGroup& group) {
  const int r = group.classCount();
  std::vector<int> orbitOf(static_cast<std::size_t>(r), -1);
  std::vector<std::vector<int>> orbits;
  std::vector<std::vector<int>> maps;
  for (std::int64_t k = 1; k <= group.exponent(); ++k)
    if (std::gcd(k, group.exponent()) == 1) maps.push_back(powerClassMap(group, k));
  for (int c = 0; c < r; ++c) {
    if (orbitOf[static_cast<std::size_t>(c)] >= 0) continue;
    std::set<int> orbit;
    for (const auto& m : maps) orbit.insert(m[static_cast<std::size_t>(c)]);
    // power maps form a group action, so the orbit of c is exactly its images
    std::vector<int> sorted(orbit.begin(), orbit.end());
    for (int member : sorted) orbitOf[static_cast<std::size_t>(member)] = static_cast<int>(orbits.size());
    orbits.push_back(std::move(sorted));
  }
  return orbits;
}

std::vector<SubgroupHandle> cyclicSubgroupsUpToConjugacy(const GroupPtr& group) {
  std::set<std::vector<int>> distinct;
  for (int i = 0; i < group->order(); ++i) {
    std::vector<int> elems;
    int x = group->identityIndex();
    do {
      elems.push_back(x);
      x = group->multiply(x, i);
    } while (x != group->identityIndex());
    std::sort(elems.begin(), elems.end());
    distinct.insert(std::move(elems));
  }
  std::set<std::vector<int>> representatives;
  for (const auto& sub : distinct) representatives.insert(conjugacyOrbitRepresentative(*group, sub));
  std::vector<std::vector<int>> ordered(representatives.begin(), representatives.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<SubgroupHandle> handles;
  handles.reserve(ordered.size());
  for (const auto& sub : ordered) handles.push_back(handleFromElements(group, sub));
  return handles;
}

std::vector<SubgroupHandle> allSubgroupsUpToConjugacy(const GroupPtr& group,
                                                      std::int64_t orderBound) {
  if (group->order() > orderBound)
    throw resource_error("subgroup enumeration bound " + std::to_string(orderBound) +
                         " exceeded by group of order " + std::to_string(group->order()) +
                         "; cyclic-only mode remains available");
  constexpr std::size_t kSubgroupCountGuard = 100000;

  std::set<std::vector<int>> found;
  std::queue<std::vector<int>> queue;
  for (int i = 0; i < group->order(); ++i) {
    std::vector<int> seed = closureIndices(*group, {i});
    if (found.insert(seed).second) queue.push(std::move(seed));
  }
  while (!queue.empty()) {
    const std::vector<int> sub = queue.front();
    queue.pop();
    if (static_cast<std::int64_t>(sub.size()) == group->order()) continue;
    for (int g = 0; g < group->order(); ++g) {
      if (std::binary_search(sub.begin(), sub.end(), g)) continue;
      std::vector<int> seed = sub;
      seed.push_back(g);
      std::vector<int> bigger = closureIndices(*group, seed);
      if (found.insert(bigger).second) {
        if (found.size() > kSubgroupCountGuard)
          throw resource_error("subgroup lattice too large; cyclic-only mode remains available");
        queue.push(std::move(bigger));
      }
    }
  }

  std::set<std::vector<int>> representatives;
  for (const auto& sub : found) representatives.insert(conjugacyOrbitRepresentative(*group, sub));
  std::vector<std::vector<int>> ordered(representatives.begin(), representatives.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<SubgroupHandle> handles;
  handles.reserve(ordered.size());
  for (const auto& sub : ordered) handles.push_back(handleFromElements(group, sub));
  return handles;
}

std::vector<Permutation> cosetRepresentatives(const FiniteGroup& group, const SubgroupHandle& sub) {
  if (!sub.parent->sameAs(group)) throw input_error("subgroup does not belong to this group");
  std::vector<bool> covered(static_cast<std::size_t>(group.order()), false);
  std::vector<Permutation> reps;
  for (int i = 0; i < group.order(); ++i) {
    if (covered[static_cast<std::size_t>(i)]) continue;
    reps.push_back(group.element(i));
    for (int h : sub.parentElementIndices)
      covered[static_cast<std::size_t>(group.multiply(i, h))] = true;
  }
  return reps;
}

GroupPtr directProduct(const FiniteGroup& left, const FiniteGroup& right, std::int64_t orderBound) {
  const int degree = left.degree() + right.degree();
  std::vector<Permutation> generators;
  for (const Permutation& g : left.generators()) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < left.degree(); ++i) images[static_cast<std::size_t>(i)] = g.apply(i);
    for (int i = 0; i < right.degree(); ++i)
      images[static_cast<std::size_t>(left.degree() + i)] = left.degree() + i;
    generators.push_back(Permutation::fromImages(std::move(images)));
  }
  for (const Permutation& g : right.generators()) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < left.degree(); ++i) images[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < right.degree(); ++i)
      images[static_cast<std::size_t>(left.degree() + i)] = left.degree() + g.apply(i);
    generators.push_back(Permutation::fromImages(std::move(images)));
  }
  GroupPtr product = FiniteGroup::enumerate(std::move(generators), degree, orderBound);
  if (product->order() != left.order() * right.order())
    throw defect_error("direct product order mismatch");
  return product;
}

namespace {

GroupPtr namedAtom(const std::string& name, std::int64_t orderBound) {
  auto number = [&](std::size_t from) -> std::int64_t {
    if (from >= name.size()) throw input_error("unknown group name '" + name + "'");
    for (std::size_t i = from; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i])))
        throw input_error("unknown group name '" + name + "'");
    return std::stoll(name.substr(from));
  };
  if (name == "Q8") {
    // regular representation on {1,-1,i,-i,j,-j,k,-k}
    const Permutation i = Permutation::fromImages({2, 3, 1, 0, 6, 7, 5, 4});
    const Permutation j = Permutation::fromImages({4, 5, 7, 6, 1, 0, 2, 3});
    return FiniteGroup::enumerate({i, j}, 8, orderBound);
  }
  const char kind = name.empty() ? '\0' : name[0];
  switch (kind) {
    case 'C': {
      const std::int64_t n = number(1);
      if (n < 1) throw input_error("C_n needs n >= 1");
      if (n == 1) return FiniteGroup::enumerate({}, 1, orderBound);
      std::vector<int> images(static_cast<std::size_t>(n));
      for (std::int64_t i = 0; i < n; ++i)
        images[static_cast<std::size_t>(i)] = static_cast<int>((i + 1) % n);
      return FiniteGroup::enumerate({Permutation::fromImages(std::move(images))},
                                    static_cast<int>(n), orderBound);
    }
    case 'D': {
      const std::int64_t n = number(1);
      if (n < 1) throw input_error("D_n needs n >= 1");
      if (n <= 2) {
        // degenerate dihedral groups: D1 = C2, D2 = C2 x C2
        GroupPtr c2 = namedAtom("C2", orderBound);
        return n == 1 ? c2 : directProduct(*c2, *c2, orderBound);
      }
      std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
      for (std::int64_t i = 0; i < n; ++i) {
        rot[static_cast<std::size_t>(i)] = static_cast<int>((i + 1) % n);
        refl[static_cast<std::size_t>(i)] = static_cast<int>((n - i) % n);
      }
      return FiniteGroup::enumerate(
          {Permutation::fromImages(std::move(rot)), Permutation::fromImages(std::move(refl))},
          static_cast<int>(n), orderBound);
    }
    case 'S': {
      const std::int64_t n = number(1);
      if (n < 1) throw input_error("S_n needs n >= 1");
      if (n == 1) return FiniteGroup::enumerate({}, 1, orderBound);
      std::vector<int> cycle(static_cast<std::size_t>(n));
      for (std::int64_t i = 0; i < n; ++i)
        cycle[static_cast<std::size_t>(i)] = static_cast<int>((i + 1) % n);
      return FiniteGroup::enumerate(
          {Permutation::fromCycles(static_cast<int>(n), {{0, 1}}),
           Permutation::fromImages(std::move(cycle))},
          static_cast<int>(n), orderBound);
    }
    case 'A': {
      const std::int64_t n = number(1);
      if (n < 1) throw input_error("A_n needs n >= 1");
      if (n <= 2) return FiniteGroup::enumerate({}, static_cast<int>(std::max<std::int64_t>(n, 1)), orderBound);
      std::vector<Permutation> gens = {Permutation::fromCycles(static_cast<int>(n), {{0, 1, 2}})};
      if (n > 3) {
        std::vector<std::vector<int>> big(1);
        if (n % 2 == 1) {
          for (std::int64_t i = 0; i < n; ++i) big[0].push_back(static_cast<int>(i));
        } else {
          for (std::int64_t i = 1; i < n; ++i) big[0].push_back(static_cast<int>(i));
        }
        gens.push_back(Permutation::fromCycles(static_cast<int>(n), big));
      }
      return FiniteGroup::enumerate(std::move(gens), static_cast<int>(n), orderBound);
    }
    default:
      throw input_error("unknown group name '" + name + "'");
  }
}

}  // namespace

GroupPtr namedGroup(const std::string& name, std::int64_t orderBound) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = name.find('x', start);
    if (pos == std::string::npos) {
      parts.push_back(name.substr(start));
      break;
    }
    parts.push_back(name.substr(start, pos - start));
    start = pos + 1;
  }
  if (parts.empty()) throw input_error("empty group name");
  GroupPtr current = namedAtom(parts[0], orderBound);
  for (std::size_t i = 1; i < parts.size(); ++i)
    current = directProduct(*current, *namedAtom(parts[i], orderBound), orderBound);
  return current;
}

}  // namespace artin
