#pragma once

#include <vector>

#include "artin/character.hpp"

namespace artin {

struct ArtinTerm {
  SubgroupHandle subgroup;
  Rat coefficient;
};

/// An explicit witness that `target` lies in the span of the induced-trivial
/// characters: sum over terms of coefficient * Ind_H^G 1 equals target,
/// pointwise and exactly.  Every subgroup is one of the enumerated
/// conjugacy-class representatives.
struct ArtinDecomposition {
  GroupPtr group;
  std::vector<ArtinTerm> terms;
  ClassFunction target;
};

/// Express a rational virtual character over cyclic subgroups (or over all
/// subgroup representatives when allSubgroups is set) by an exact rational
/// solve.  Columns are ordered by subgroup order descending, free variables
/// are zero, so answers are deterministic and small-support.
ArtinDecomposition decomposeRational(const TablePtr& table, const ClassFunction& chi,
                                     bool allSubgroups = false);

/// Structural decomposition for cyclic groups that follows the classical
/// reduction: split the order into prime powers, use the closed form
/// (Ind_1 - Ind_{order p subgroup}) scaled by 1/phi(p^r) on each factor when
/// p does not divide k, inflate from the quotient when it does, and combine
/// factors multiplicatively.  Cross-validated against decomposeRational.
ArtinDecomposition cyclicWitness(const ClassFunction& chi);

/// Recompute every induced trivial from scratch and compare with the target.
bool verifyDecomposition(const ArtinDecomposition& d);

/// Rank of { Ind_C^G 1 : C cyclic up to conjugacy } as rational vectors;
/// equals the number of power-map orbits on classes.
int spanRankCyclic(const GroupPtr& group);

}  // namespace artin
