#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "artin/errors.hpp"
#include "artin/group.hpp"
#include "oracles.hpp"

using namespace artin;

TEST_CASE("permutation basics") {
  const Permutation p = Permutation::fromCycles(4, {{0, 1, 2}});
  CHECK(p.apply(0) == 1);
  CHECK(p.apply(3) == 3);
  CHECK(p.order() == 3);
  CHECK((p * p * p).isIdentity());
  CHECK(p.power(-1) == p.inverse());
  CHECK(p.toCycleString() == "(0 1 2)");

  CHECK_THROWS_AS(Permutation::fromCycles(3, {{0, 0, 1}}), input_error);
  CHECK_THROWS_AS(Permutation::fromCycles(3, {{0, 5}}), input_error);
  CHECK_THROWS_AS(Permutation::fromImages({0, 0, 1}), input_error);
}

TEST_CASE("enumerate small groups against pairwise-closure oracle") {
  SUBCASE("C3") {
    const GroupPtr g = FiniteGroup::enumerate({Permutation::fromCycles(3, {{0, 1, 2}})}, 3);
    CHECK(g->order() == 3);
    CHECK(g->classCount() == 3);
    CHECK(g->exponent() == 3);
  }

  SUBCASE("S3 from transposition and 3-cycle") {
    const std::vector<Permutation> gens = {Permutation::fromCycles(3, {{0, 1}}),
                                           Permutation::fromCycles(3, {{0, 1, 2}})};
    const GroupPtr g = FiniteGroup::enumerate(gens, 3);
    CHECK(g->order() == 6);
    const auto oracle = oracles::pairwiseClosure(gens, 3);
    CHECK(oracle.size() == 6);
    for (const Permutation& x : g->elements()) CHECK(oracle.count(x) == 1);
    // classes: identity, transpositions (size 3), 3-cycles (size 2), in
    // representative-lex order
    REQUIRE(g->classCount() == 3);
    CHECK(g->classes()[0].size == 1);
    CHECK(g->classes()[1].size == 3);
    CHECK(g->classes()[1].elementOrder == 2);
    CHECK(g->classes()[2].size == 2);
    CHECK(g->classes()[2].elementOrder == 3);
  }

  SUBCASE("Q8 regular representation") {
    const GroupPtr g = namedGroup("Q8");
    CHECK(g->order() == 8);
    CHECK(g->exponent() == 4);
    REQUIRE(g->classCount() == 5);
    std::vector<std::int64_t> sizes;
    for (const auto& cls : g->classes()) sizes.push_back(cls.size);
    CHECK(sizes == std::vector<std::int64_t>{1, 1, 2, 2, 2});
    const auto oracle = oracles::pairwiseClosure(g->generators(), 8);
    CHECK(oracle.size() == 8);
  }

  SUBCASE("order bound") {
    CHECK_THROWS_AS(namedGroup("S4", 10), resource_error);
  }
}

TEST_CASE("class structure invariants") {
  for (const std::string& name : {"S3", "S4", "A4", "D6", "Q8", "C12"}) {
    const GroupPtr g = namedGroup(name);
    std::int64_t total = 0;
    for (const auto& cls : g->classes()) {
      total += cls.size;
      CHECK(g->order() % cls.size == 0);
      // conjugation by generators stays inside the class
      for (int m : cls.members)
        for (const Permutation& gen : g->generators()) {
          const int idx = g->indexOf(gen * g->element(m) * gen.inverse());
          CHECK(g->classOf(idx) == g->classOf(m));
        }
    }
    CHECK(total == g->order());
    CHECK(g->classes()[0].representative.isIdentity());
    // exponent is the lcm of element orders and every element obeys it
    for (const Permutation& x : g->elements()) CHECK(g->exponent() % x.order() == 0);
  }
}

TEST_CASE("power class map") {
  const GroupPtr s3 = namedGroup("S3");
  const auto identityMap = powerClassMap(*s3, 1);
  for (int c = 0; c < s3->classCount(); ++c) CHECK(identityMap[static_cast<std::size_t>(c)] == c);

  // S3 with k = 2: transpositions square to the identity, 3-cycles stay 3-cycles
  const auto squared = powerClassMap(*s3, 2);
  CHECK(squared[0] == 0);
  CHECK(squared[1] == 0);
  CHECK(squared[2] == 2);

  // C5 with k = 2: class of a maps to class of a^2
  const GroupPtr c5 = namedGroup("C5");
  const auto doubled = powerClassMap(*c5, 2);
  for (int c = 0; c < 5; ++c) {
    const int rep = c5->classes()[static_cast<std::size_t>(c)].representativeIndex;
    CHECK(doubled[static_cast<std::size_t>(c)] == c5->classOf(c5->power(rep, 2)));
  }

  // composition law on sampled groups
  for (const std::string& name : {"S4", "C12", "D5"}) {
    const GroupPtr g = namedGroup(name);
    const std::int64_t e = g->exponent();
    for (std::int64_t j : {1LL, 5LL, 7LL}) {
      for (std::int64_t k : {1LL, 5LL, 11LL}) {
        if (std::gcd(j, e) != 1 || std::gcd(k, e) != 1) continue;
        const auto mapJ = powerClassMap(*g, j);
        const auto mapK = powerClassMap(*g, k);
        const auto mapJK = powerClassMap(*g, j * k % e);
        for (int c = 0; c < g->classCount(); ++c)
          CHECK(mapJ[static_cast<std::size_t>(mapK[static_cast<std::size_t>(c)])] ==
                mapJK[static_cast<std::size_t>(c)]);
      }
    }
  }
}

TEST_CASE("cyclic subgroups up to conjugacy") {
  SUBCASE("C5: trivial and full") {
    const auto subs = cyclicSubgroupsUpToConjugacy(namedGroup("C5"));
    REQUIRE(subs.size() == 2);
    CHECK(subs[0].order() == 1);
    CHECK(subs[1].order() == 5);
  }

  SUBCASE("S3: e, C2, C3") {
    const auto subs = cyclicSubgroupsUpToConjugacy(namedGroup("S3"));
    REQUIRE(subs.size() == 3);
    CHECK(subs[0].order() == 1);
    CHECK(subs[1].order() == 2);
    CHECK(subs[2].order() == 3);
  }

  SUBCASE("Q8: e, center, three C4s") {
    const auto subs = cyclicSubgroupsUpToConjugacy(namedGroup("Q8"));
    REQUIRE(subs.size() == 5);
    std::vector<std::int64_t> orders;
    for (const auto& s : subs) orders.push_back(s.order());
    CHECK(orders == std::vector<std::int64_t>{1, 2, 4, 4, 4});
  }

  SUBCASE("A5 has four classes of cyclic subgroups") {
    const auto subs = cyclicSubgroupsUpToConjugacy(namedGroup("A5"));
    std::vector<std::int64_t> orders;
    for (const auto& s : subs) orders.push_back(s.order());
    CHECK(orders == std::vector<std::int64_t>{1, 2, 3, 5});
  }
}

TEST_CASE("all subgroups up to conjugacy") {
  SUBCASE("C4: one subgroup per divisor") {
    const auto subs = allSubgroupsUpToConjugacy(namedGroup("C4"));
    std::vector<std::int64_t> orders;
    for (const auto& s : subs) orders.push_back(s.order());
    CHECK(orders == std::vector<std::int64_t>{1, 2, 4});
  }

  SUBCASE("S3: e, C2, C3, S3") {
    CHECK(allSubgroupsUpToConjugacy(namedGroup("S3")).size() == 4);
  }

  SUBCASE("A4: e, C2, C3, V4, A4") {
    const auto subs = allSubgroupsUpToConjugacy(namedGroup("A4"));
    std::vector<std::int64_t> orders;
    for (const auto& s : subs) orders.push_back(s.order());
    CHECK(orders == std::vector<std::int64_t>{1, 2, 3, 4, 12});
  }

  SUBCASE("bound applies to the parent order") {
    CHECK_THROWS_AS(allSubgroupsUpToConjugacy(namedGroup("S4"), 10), resource_error);
  }

  SUBCASE("cyclic representatives appear among all representatives") {
    for (const std::string& name : {"S4", "A4", "D6", "Q8"}) {
      const GroupPtr g = namedGroup(name);
      std::set<std::vector<int>> all;
      for (const auto& s : allSubgroupsUpToConjugacy(g))
        if (s.group->isCyclic()) all.insert(s.parentElementIndices);
      std::set<std::vector<int>> cyclic;
      for (const auto& s : cyclicSubgroupsUpToConjugacy(g)) cyclic.insert(s.parentElementIndices);
      CHECK(all == cyclic);
    }
  }
}

TEST_CASE("coset representatives") {
  const GroupPtr s3 = namedGroup("S3");
  const auto subs = cyclicSubgroupsUpToConjugacy(s3);

  // H = G: single representative
  const SubgroupHandle whole =
      makeSubgroup(s3, {s3->indexOf(Permutation::fromCycles(3, {{0, 1}})),
                        s3->indexOf(Permutation::fromCycles(3, {{0, 1, 2}}))});
  CHECK(cosetRepresentatives(*s3, whole).size() == 1);

  // index 2 subgroup
  const SubgroupHandle c3 = subs[2];
  REQUIRE(c3.order() == 3);
  CHECK(cosetRepresentatives(*s3, c3).size() == 2);

  // Q8 / center: 4 cosets, disjoint cover
  const GroupPtr q8 = namedGroup("Q8");
  const auto q8subs = cyclicSubgroupsUpToConjugacy(q8);
  REQUIRE(q8subs[1].order() == 2);
  const auto reps = cosetRepresentatives(*q8, q8subs[1]);
  CHECK(reps.size() == 4);
  std::set<int> covered;
  for (const Permutation& rep : reps)
    for (int h : q8subs[1].parentElementIndices)
      covered.insert(q8->multiply(q8->indexOf(rep), h));
  CHECK(covered.size() == 8);

  // Lagrange on every enumerated subgroup of S4
  const GroupPtr s4 = namedGroup("S4");
  for (const auto& sub : allSubgroupsUpToConjugacy(s4)) {
    CHECK(s4->order() % sub.order() == 0);
    CHECK(static_cast<std::int64_t>(cosetRepresentatives(*s4, sub).size()) ==
          s4->order() / sub.order());
  }
}

TEST_CASE("direct products") {
  const GroupPtr c2xc2 = namedGroup("C2xC2");
  CHECK(c2xc2->order() == 4);
  CHECK(c2xc2->classCount() == 4);

  // C2 x C3 is cyclic of order 6
  const GroupPtr c6 = directProduct(*namedGroup("C2"), *namedGroup("C3"));
  CHECK(c6->order() == 6);
  CHECK(c6->isCyclic());
  CHECK(c6->exponent() == 6);

  const GroupPtr s3xc2 = namedGroup("S3xC2");
  CHECK(s3xc2->order() == 12);
  CHECK(s3xc2->classCount() == 6);
}

TEST_CASE("named groups") {
  CHECK(namedGroup("C6")->order() == 6);
  CHECK(namedGroup("C6")->isCyclic());
  const GroupPtr s4 = namedGroup("S4");
  CHECK(s4->order() == 24);
  CHECK(s4->classCount() == 5);
  CHECK(namedGroup("A5")->order() == 60);
  CHECK(namedGroup("A5")->classCount() == 5);
  CHECK(namedGroup("D4")->order() == 8);
  CHECK(namedGroup("D4")->classCount() == 5);
  CHECK_THROWS_AS(namedGroup("E8"), input_error);
  CHECK_THROWS_AS(namedGroup("Cfoo"), input_error);
}

TEST_CASE("subgroup handles map elements both ways") {
  const GroupPtr s4 = namedGroup("S4");
  const SubgroupHandle sub =
      makeSubgroup(s4, {s4->indexOf(Permutation::fromCycles(4, {{0, 1, 2}}))});
  CHECK(sub.order() == 3);
  for (int i : sub.parentElementIndices) {
    const int own = sub.ownIndexOfParentElement[static_cast<std::size_t>(i)];
    CHECK(own >= 0);
    CHECK(sub.group->element(own) == s4->element(i));
  }
}
