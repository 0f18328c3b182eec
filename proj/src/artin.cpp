#include "artin/artin.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "artin/errors.hpp"
#include "artin/matrix.hpp"

namespace artin {

namespace {

void requireRationalValues(const ClassFunction& chi) {
  for (int c = 0; c < chi.group()->classCount(); ++c) {
    if (!isRational(chi.valueAt(c)))
      throw input_error(
          "character is not rational: value at class " + std::to_string(c) + " is " +
          toString(chi.valueAt(c)) + "; a Galois average of it is rational");
  }
}

std::vector<std::size_t> columnOrderBySizeDesc(const std::vector<SubgroupHandle>& subgroups) {
  std::vector<std::size_t> order(subgroups.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return subgroups[a].order() > subgroups[b].order();
  });
  return order;
}

}  // namespace

ArtinDecomposition decomposeRational(const TablePtr& table, const ClassFunction& chi,
                                     bool allSubgroups) {
  const GroupPtr& group = table->group();
  if (!chi.group()->sameAs(*group)) throw input_error("character belongs to a different group");
  requireRationalValues(chi);
  // rational values alone do not make a virtual character; reject early with
  // a precise message instead of reporting an unsolvable system
  decomposeIntoIrreducibles(table, chi);

  const std::vector<SubgroupHandle> subgroups =
      allSubgroups ? allSubgroupsUpToConjugacy(group) : cyclicSubgroupsUpToConjugacy(group);
  const std::vector<std::size_t> columns = columnOrderBySizeDesc(subgroups);

  const int r = group->classCount();
  std::vector<ClassFunction> induced;
  induced.reserve(subgroups.size());
  for (const SubgroupHandle& sub : subgroups) induced.push_back(inducedTrivial(sub));

  RatMatrix a(r, static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (int i = 0; i < r; ++i)
      a(i, static_cast<Eigen::Index>(j)) = toRational(induced[columns[j]].valueAt(i));
  RatVector b(r);
  for (int i = 0; i < r; ++i) b(i) = toRational(chi.valueAt(i));

  const auto solution = solveFreeVarsZero(a, b);
  if (!solution)
    throw defect_error(
        "rational virtual character is outside the induced-trivial span; "
        "the character table is corrupted");

  ArtinDecomposition d{group, {}, chi};
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Rat& coeff = (*solution)(static_cast<Eigen::Index>(j));
    if (coeff == 0) continue;
    d.terms.push_back(ArtinTerm{subgroups[columns[j]], coeff});
  }
  if (!verifyDecomposition(d)) throw defect_error("freshly solved decomposition failed to verify");
  return d;
}

namespace {

// Decomposition of the Galois-orbit sum of phi_k on an abstract cyclic group
// of prime-power order p^r, as subgroup-order -> coefficient.
std::map<std::int64_t, Rat> orbitWitnessPrimePower(std::int64_t p, int r, std::int64_t k) {
  if (r == 0) return {{1, Rat(1)}};
  std::int64_t n = 1;
  for (int i = 0; i < r; ++i) n *= p;
  k %= n;
  if (k < 0) k += n;
  if (k % p != 0) {
    // sum over all phi_j with p not dividing j equals Ind_1 1 - Ind_{C_p} 1
    return {{1, Rat(1)}, {p, Rat(-1)}};
  }
  // phi_k factors through the quotient of order p^(r-1); pull back, which
  // multiplies every subgroup order by p
  std::map<std::int64_t, Rat> inner = orbitWitnessPrimePower(p, r - 1, k / p);
  std::map<std::int64_t, Rat> out;
  for (const auto& [order, coeff] : inner) out.emplace(order * p, coeff);
  return out;
}

// CRT-combine prime-power witnesses: the subgroup of order m1*m2 of the
// product corresponds to the pair (order m1, order m2), and induced trivials
// multiply under external products.
std::map<std::int64_t, Rat> orbitWitness(std::int64_t n, std::int64_t k) {
  std::map<std::int64_t, Rat> acc = {{1, Rat(1)}};
  std::int64_t rest = n;
  for (std::int64_t p = 2; rest > 1; ++p) {
    if (p * p > rest) p = rest;  // remaining cofactor is prime
    if (rest % p != 0) continue;
    std::int64_t q = 1;
    int r = 0;
    while (rest % p == 0) {
      rest /= p;
      q *= p;
      ++r;
    }
    const std::map<std::int64_t, Rat> factor = orbitWitnessPrimePower(p, r, k % q);
    std::map<std::int64_t, Rat> next;
    for (const auto& [m1, c1] : acc)
      for (const auto& [m2, c2] : factor) next[m1 * m2] += c1 * c2;
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

ArtinDecomposition cyclicWitness(const ClassFunction& chi) {
  const GroupPtr& group = chi.group();
  const FiniteGroup& g = *group;
  const std::int64_t n = g.order();
  if (!g.isCyclic()) throw input_error("cyclicWitness requires a cyclic group");
  requireRationalValues(chi);

  // deterministic generator: least element of full order
  int generator = -1;
  for (int i = 0; i < g.order(); ++i) {
    if (g.element(i).order() == n) {
      generator = i;
      break;
    }
  }
  if (generator < 0) throw defect_error("cyclic group has no generator");

  // class of a^t for every t
  std::vector<int> classOfPower(static_cast<std::size_t>(n));
  for (std::int64_t t = 0; t < n; ++t)
    classOfPower[static_cast<std::size_t>(t)] = g.classOf(g.power(generator, t));

  // coordinates of chi in the phi_k basis: c_k = (1/n) sum_t chi(a^t) zeta^(-kt)
  std::vector<Rat> coords(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    CycloNumber sum = CycloNumber::zero();
    for (std::int64_t t = 0; t < n; ++t) {
      const CycloNumber zeta = CycloNumber::zeta(n, (-k * t) % n);
      sum = sum + chi.valueAt(classOfPower[static_cast<std::size_t>(t)]) * zeta;
    }
    sum = sum * Rat(1, static_cast<long>(n));
    if (!isRational(sum))
      throw input_error("multiplicity of phi_" + std::to_string(k) +
                        " is not rational; not a virtual character");
    coords[static_cast<std::size_t>(k)] = toRational(sum);
  }

  // rational characters have orbit-constant coordinates; accumulate one
  // witness per orbit of (Z/n)^x on the exponents
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::map<std::int64_t, Rat> totals;
  for (std::int64_t k = 0; k < n; ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    std::vector<std::int64_t> orbit;
    for (std::int64_t u = 1; u <= n; ++u) {
      if (std::gcd(u, n) != 1) continue;
      const std::int64_t uk = u * k % n;
      if (!seen[static_cast<std::size_t>(uk)]) {
        seen[static_cast<std::size_t>(uk)] = true;
        orbit.push_back(uk);
      }
    }
    const Rat& c = coords[static_cast<std::size_t>(k)];
    for (std::int64_t member : orbit)
      if (coords[static_cast<std::size_t>(member)] != c)
        throw defect_error("rational character has non-constant Galois orbit coordinates");
    if (c == 0) continue;
    for (const auto& [order, coeff] : orbitWitness(n, k)) totals[order] += c * coeff;
  }

  // map subgroup orders to the enumerated representatives (cyclic groups
  // have exactly one subgroup per divisor)
  const std::vector<SubgroupHandle> subgroups = cyclicSubgroupsUpToConjugacy(group);
  std::map<std::int64_t, std::size_t> byOrder;
  for (std::size_t i = 0; i < subgroups.size(); ++i) byOrder.emplace(subgroups[i].order(), i);

  ArtinDecomposition d{group, {}, chi};
  std::vector<std::pair<std::int64_t, Rat>> ordered(totals.begin(), totals.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [order, coeff] : ordered) {
    if (coeff == 0) continue;
    const auto it = byOrder.find(order);
    if (it == byOrder.end()) throw defect_error("missing cyclic subgroup of order " +
                                                std::to_string(order));
    d.terms.push_back(ArtinTerm{subgroups[it->second], coeff});
  }
  if (!verifyDecomposition(d)) throw defect_error("structural witness failed to verify");
  return d;
}

bool verifyDecomposition(const ArtinDecomposition& d) {
  ClassFunction sum = zeroFunction(d.group);
  for (const ArtinTerm& term : d.terms) {
    if (!term.subgroup.parent->sameAs(*d.group)) return false;
    sum = sum + term.coefficient * inducedTrivial(term.subgroup);
  }
  return sum == d.target;
}

int spanRankCyclic(const GroupPtr& group) {
  const std::vector<SubgroupHandle> subgroups = cyclicSubgroupsUpToConjugacy(group);
  const int r = group->classCount();
  RatMatrix a(r, static_cast<Eigen::Index>(subgroups.size()));
  for (std::size_t j = 0; j < subgroups.size(); ++j) {
    const ClassFunction ind = inducedTrivial(subgroups[j]);
    for (int i = 0; i < r; ++i)
      a(i, static_cast<Eigen::Index>(j)) = toRational(ind.valueAt(i));
  }
  return static_cast<int>(rankOf(std::move(a)));
}

}  // namespace artin
