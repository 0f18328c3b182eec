#include "artin/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "artin/errors.hpp"
#include "artin/matrix.hpp"
#include "artin/modarith.hpp"

namespace artin {

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

struct EntryContext {
  GroupPtr group;
  TablePtr table;
  std::vector<SubgroupHandle> cyclicReps;
  std::vector<SubgroupHandle> allReps;  // empty when over the subgroup bound
  bool haveAllReps = false;
  std::mt19937_64 rng;

  std::int64_t randomBelow(std::int64_t n) {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
  }
};

void record(std::vector<CheckResult>& checks, const std::string& name, bool pass,
            const std::string& detail = "") {
  checks.push_back(CheckResult{name, pass, pass ? "" : detail});
}

CycloNumber randomCyclo(EntryContext& ctx, std::int64_t conductor) {
  CycloNumber value = CycloNumber::zero();
  const std::int64_t terms = 1 + ctx.randomBelow(3);
  for (std::int64_t t = 0; t < terms; ++t) {
    const Rat coeff = makeRat(static_cast<long>(ctx.randomBelow(11) - 5),
                              static_cast<long>(1 + ctx.randomBelow(3)));
    value = value + coeff * CycloNumber::zeta(conductor, ctx.randomBelow(conductor));
  }
  return value;
}

void suiteCyclotomic(EntryContext& ctx, std::vector<CheckResult>& checks) {
  const std::int64_t e = ctx.group->exponent();
  const std::int64_t conductor = std::max<std::int64_t>(e, 2);
  bool fieldAxioms = true, galoisHom = true, galoisCompose = true, galoisAverageRat = true,
       embedHom = true;
  for (int trial = 0; trial < 6; ++trial) {
    const CycloNumber a = randomCyclo(ctx, conductor);
    const CycloNumber b = randomCyclo(ctx, conductor);
    const CycloNumber c = randomCyclo(ctx, conductor);
    fieldAxioms = fieldAxioms && equal((a + b) + c, a + (b + c));
    fieldAxioms = fieldAxioms && equal(a * (b + c), a * b + a * c);
    fieldAxioms = fieldAxioms && equal(a * b, b * a);
    fieldAxioms = fieldAxioms && equal((a * b) * c, a * (b * c));

    const auto units = unitsMod(conductor);
    const std::int64_t k = units[static_cast<std::size_t>(ctx.randomBelow(
        static_cast<std::int64_t>(units.size())))];
    const std::int64_t j = units[static_cast<std::size_t>(ctx.randomBelow(
        static_cast<std::int64_t>(units.size())))];
    galoisHom = galoisHom && equal(galoisConjugate(a * b, k),
                                   galoisConjugate(a, k) * galoisConjugate(b, k));
    galoisCompose = galoisCompose && equal(galoisConjugate(galoisConjugate(a, k), j),
                                           galoisConjugate(a, j * k % conductor));
    CycloNumber sum = CycloNumber::zero();
    for (std::int64_t u : units) sum = sum + galoisConjugate(a, u);
    galoisAverageRat = galoisAverageRat && isRational(sum);

    const std::int64_t m = conductor * (1 + ctx.randomBelow(3));
    embedHom = embedHom && equal(embed(a * b, m), embed(a, m) * embed(b, m));
    embedHom = embedHom && equal(embed(a + b, m), embed(a, m) + embed(b, m));
    embedHom = embedHom && (equal(a, b) == equal(embed(a, m), embed(b, m)));
  }
  record(checks, "cyclotomic_field_axioms", fieldAxioms);
  record(checks, "cyclotomic_galois_ring_hom", galoisHom);
  record(checks, "cyclotomic_galois_composition", galoisCompose);
  record(checks, "cyclotomic_galois_sum_rational", galoisAverageRat);
  record(checks, "cyclotomic_embed_hom_injective", embedHom);
}

void suiteGroupAxioms(EntryContext& ctx, std::vector<CheckResult>& checks) {
  const FiniteGroup& g = *ctx.group;
  std::int64_t sizeSum = 0;
  bool sizesDivide = true;
  for (const ConjugacyClass& cls : g.classes()) {
    sizeSum += cls.size;
    sizesDivide = sizesDivide && (g.order() % cls.size == 0);
  }
  record(checks, "class_equation", sizeSum == g.order(),
         "class sizes sum to " + std::to_string(sizeSum));
  record(checks, "class_sizes_divide_order", sizesDivide);
  record(checks, "identity_class_first",
         g.classes()[0].size == 1 && g.classes()[0].representative.isIdentity());

  bool powerCompose = true;
  const std::int64_t e = g.exponent();
  const auto units = unitsMod(e);
  for (int trial = 0; trial < 8; ++trial) {
    const std::int64_t j = units[static_cast<std::size_t>(ctx.randomBelow(
        static_cast<std::int64_t>(units.size())))];
    const std::int64_t k = units[static_cast<std::size_t>(ctx.randomBelow(
        static_cast<std::int64_t>(units.size())))];
    const auto mapJ = powerClassMap(g, j);
    const auto mapK = powerClassMap(g, k);
    const auto mapJK = powerClassMap(g, j * k % e);
    for (int c = 0; c < g.classCount(); ++c)
      powerCompose = powerCompose &&
                     mapJ[static_cast<std::size_t>(mapK[static_cast<std::size_t>(c)])] ==
                         mapJK[static_cast<std::size_t>(c)];
  }
  record(checks, "power_class_map_composition", powerCompose);

  const auto& reps = ctx.haveAllReps ? ctx.allReps : ctx.cyclicReps;
  bool lagrange = true, cosetCover = true;
  for (const SubgroupHandle& sub : reps) {
    lagrange = lagrange && (g.order() % sub.order() == 0);
    const auto cosets = cosetRepresentatives(g, sub);
    cosetCover = cosetCover &&
                 static_cast<std::int64_t>(cosets.size()) == g.order() / sub.order();
    std::set<int> covered;
    for (const Permutation& rep : cosets) {
      const int repIdx = g.indexOf(rep);
      for (int h : sub.parentElementIndices) covered.insert(g.multiply(repIdx, h));
    }
    cosetCover = cosetCover && static_cast<std::int64_t>(covered.size()) == g.order();
  }
  record(checks, "lagrange", lagrange);
  record(checks, "coset_representatives_cover", cosetCover);

  if (ctx.haveAllReps) {
    std::set<std::vector<int>> cyclicSets, allCyclicMembers;
    for (const SubgroupHandle& sub : ctx.cyclicReps) cyclicSets.insert(sub.parentElementIndices);
    for (const SubgroupHandle& sub : ctx.allReps)
      if (sub.group->isCyclic()) allCyclicMembers.insert(sub.parentElementIndices);
    record(checks, "cyclic_subgroups_consistent", cyclicSets == allCyclicMembers);
  }
}

void suiteTableAxioms(EntryContext& ctx, std::vector<CheckResult>& checks) {
  const FiniteGroup& g = *ctx.group;
  const CharacterTable& table = *ctx.table;
  record(checks, "irreducible_count_equals_class_count", table.size() == g.classCount());

  std::int64_t squares = 0;
  for (std::int64_t d : table.degrees()) squares += d * d;
  record(checks, "degree_squares_sum_to_order", squares == g.order(),
         "sum of squares = " + std::to_string(squares));

  bool rows = true;
  for (int i = 0; i < table.size(); ++i)
    for (int j = i; j < table.size(); ++j) {
      const CycloNumber ip = innerProduct(table.irreducible(i), table.irreducible(j));
      rows = rows && equal(ip, i == j ? CycloNumber::one() : CycloNumber::zero());
    }
  record(checks, "row_orthogonality", rows);

  bool cols = true;
  for (int c = 0; c < g.classCount(); ++c)
    for (int cp = c; cp < g.classCount(); ++cp) {
      CycloNumber sum = CycloNumber::zero();
      for (int i = 0; i < table.size(); ++i)
        sum = sum + table.irreducible(i).valueAt(c) * conjugate(table.irreducible(i).valueAt(cp));
      const CycloNumber expected =
          c == cp ? CycloNumber::fromRational(makeRat(
                        static_cast<long>(g.order()),
                        static_cast<long>(g.classes()[static_cast<std::size_t>(c)].size)))
                  : CycloNumber::zero();
      cols = cols && equal(sum, expected);
    }
  record(checks, "column_orthogonality", cols);

  bool conductors = true;
  for (const ClassFunction& row : table.irreducibles())
    for (const CycloNumber& v : row.values()) conductors = conductors && (g.exponent() % v.conductor == 0);
  record(checks, "values_in_exponent_field", conductors);
}

void suitePowerMap(EntryContext& ctx, std::vector<CheckResult>& checks) {
  const FiniteGroup& g = *ctx.group;
  bool consistent = true;
  for (std::int64_t k : unitsMod(g.exponent())) {
    const auto map = powerClassMap(g, k);
    for (const ClassFunction& chi : ctx.table->irreducibles())
      for (int c = 0; c < g.classCount(); ++c)
        consistent = consistent &&
                     equal(chi.valueAt(map[static_cast<std::size_t>(c)]),
                           galoisConjugate(chi.valueAt(c), k));
  }
  record(checks, "power_map_consistency", consistent);
}

void suiteFrobeniusTransitivity(EntryContext& ctx, std::vector<CheckResult>& checks) {
  const FiniteGroup& g = *ctx.group;
  if (!ctx.haveAllReps) return;  // bounded out; cyclic-only groups skip this suite
  bool reciprocity = true, transitivity = true, restrictionCompat = true;
  for (const SubgroupHandle& sub : ctx.allReps) {
    const TablePtr subTable = computeCharacterTable(sub.group);
    for (const ClassFunction& phi : subTable->irreducibles()) {
      const ClassFunction induced = induce(sub, phi);
      for (const ClassFunction& psi : ctx.table->irreducibles()) {
        const CycloNumber lhs = innerProduct(induced, psi);
        const CycloNumber rhs = innerProduct(phi, restrictTo(sub, psi));
        reciprocity = reciprocity && equal(lhs, rhs);
      }
    }
    // chains J <= H <= G among enumerated representatives
    const std::int64_t subBound = std::max<std::int64_t>(sub.group->order(), 1);
    for (const SubgroupHandle& inner : allSubgroupsUpToConjugacy(sub.group, subBound)) {
      std::vector<int> parentIndices;
      parentIndices.reserve(inner.parentElementIndices.size());
      for (int ownIdx : inner.parentElementIndices)
        parentIndices.push_back(g.indexOf(sub.group->element(ownIdx)));
      std::sort(parentIndices.begin(), parentIndices.end());
      const SubgroupHandle chainAsG = makeSubgroup(ctx.group, parentIndices);
      transitivity =
          transitivity && induce(sub, inducedTrivial(inner)) == inducedTrivial(chainAsG);
    }
    restrictionCompat =
        restrictionCompat && restrictTo(sub, trivialCharacter(ctx.group)) ==
                                 trivialCharacter(sub.group);
  }
  record(checks, "frobenius_reciprocity", reciprocity);
  record(checks, "induction_transitivity", transitivity);
  record(checks, "restriction_of_trivial", restrictionCompat);
}

void suiteGalois(EntryContext& ctx, std::vector<CheckResult>& checks) {
  const FiniteGroup& g = *ctx.group;
  bool averaged = true, idempotent = true, permutesRows = true, inducedRational = true;
  for (const ClassFunction& chi : ctx.table->irreducibles()) {
    const ClassFunction avg = galoisAverage(chi);
    averaged = averaged && isRationalCharacter(avg);
    idempotent = idempotent && galoisAverage(avg) == avg;
  }
  for (std::int64_t k : unitsMod(g.exponent())) {
    for (const ClassFunction& chi : ctx.table->irreducibles()) {
      const ClassFunction image = galoisAct(chi, k);
      bool found = false;
      for (const ClassFunction& row : ctx.table->irreducibles())
        if (image == row) {
          found = true;
          break;
        }
      permutesRows = permutesRows && found;
    }
  }
  for (const SubgroupHandle& sub : ctx.cyclicReps)
    inducedRational = inducedRational && isRationalCharacter(inducedTrivial(sub));
  record(checks, "galois_average_rational", averaged);
  record(checks, "galois_average_idempotent", idempotent);
  record(checks, "galois_action_permutes_irreducibles", permutesRows);
  record(checks, "induced_trivial_rational", inducedRational);
}

ClassFunction galoisOrbitSum(const ClassFunction& chi) {
  ClassFunction sum = zeroFunction(chi.group());
  for (std::int64_t k : unitsMod(chi.group()->exponent())) sum = sum + galoisAct(chi, k);
  return sum;
}

void suiteArtin(EntryContext& ctx, std::vector<CheckResult>& checks) {
  const FiniteGroup& g = *ctx.group;
  bool sweep = true, denominators = true;
  std::vector<ClassFunction> targets;
  for (const ClassFunction& chi : ctx.table->irreducibles())
    targets.push_back(galoisOrbitSum(chi));
  const auto& reps = ctx.haveAllReps ? ctx.allReps : ctx.cyclicReps;
  for (const SubgroupHandle& sub : reps) targets.push_back(inducedTrivial(sub));

  for (const ClassFunction& target : targets) {
    try {
      const ArtinDecomposition d = decomposeRational(ctx.table, target);
      sweep = sweep && verifyDecomposition(d);
      for (const ArtinTerm& term : d.terms) {
        const Int denom = term.coefficient.get_den();
        denominators = denominators && (Int(static_cast<long>(g.order())) % denom == 0);
      }
    } catch (const std::exception&) {
      sweep = false;
    }
  }
  record(checks, "induction_span_sweep", sweep);
  record(checks, "coefficient_denominators_divide_order", denominators);

  const auto orbits = powerMapOrbits(g);
  const int rank = spanRankCyclic(ctx.group);
  record(checks, "span_rank_equals_rational_class_count",
         rank == static_cast<int>(orbits.size()),
         "rank " + std::to_string(rank) + " vs " + std::to_string(orbits.size()) + " orbits");

  if (g.isCyclic()) {
    bool agreement = true;
    for (const ClassFunction& target : targets) {
      try {
        const ArtinDecomposition viaWitness = cyclicWitness(target);
        const ArtinDecomposition viaSolver = decomposeRational(ctx.table, target);
        ClassFunction wSum = zeroFunction(ctx.group);
        for (const ArtinTerm& t : viaWitness.terms)
          wSum = wSum + t.coefficient * inducedTrivial(t.subgroup);
        ClassFunction sSum = zeroFunction(ctx.group);
        for (const ArtinTerm& t : viaSolver.terms)
          sSum = sSum + t.coefficient * inducedTrivial(t.subgroup);
        agreement = agreement && wSum == sSum && wSum == target;
      } catch (const std::exception&) {
        agreement = false;
      }
    }
    record(checks, "witness_solver_agreement", agreement);
  }
}

void suiteCertificates(EntryContext& ctx, std::vector<CheckResult>& checks) {
  bool sweep = true;
  std::vector<TheoremCertificate> certs;
  for (const ClassFunction& chi : ctx.table->irreducibles()) {
    try {
      TheoremCertificate cert = certifyGaloisOrbitSum(ctx.table, chi);
      sweep = sweep && checkCertificate(cert);
      certs.push_back(std::move(cert));
    } catch (const std::exception&) {
      sweep = false;
    }
  }
  record(checks, "certificate_sweep", sweep);

  bool mutations = true;
  int done = 0;
  while (done < 20 && !certs.empty()) {
    TheoremCertificate tampered =
        certs[static_cast<std::size_t>(ctx.randomBelow(static_cast<std::int64_t>(certs.size())))];
    if (tampered.decomposition.terms.empty()) break;
    auto& term = tampered.decomposition.terms[static_cast<std::size_t>(
        ctx.randomBelow(static_cast<std::int64_t>(tampered.decomposition.terms.size())))];
    term.coefficient += Rat(static_cast<long>(1 + ctx.randomBelow(3)));
    mutations = mutations && !checkCertificate(tampered);
    ++done;
  }
  record(checks, "mutation_detection", mutations && done == 20,
         "completed " + std::to_string(done) + " mutations");
}

}  // namespace

bool CorpusEntryResult::allPassed() const {
  if (!error.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> corpusSuiteNames() {
  return {"cyclotomic", "group", "table", "power_map", "frobenius", "galois", "artin",
          "certificates"};
}

std::vector<CorpusEntrySpec> defaultCorpus() {
  std::vector<CorpusEntrySpec> entries;
  auto named = [&](const std::string& name, std::int64_t order, std::int64_t classes) {
    Json spec = Json::object();
    spec["name"] = name;
    entries.push_back(CorpusEntrySpec{name, std::move(spec), order, classes});
  };
  for (std::int64_t n = 1; n <= 24; ++n) named("C" + std::to_string(n), n, n);
  named("C2xC2", 4, 4);
  named("C2xC4", 8, 8);
  for (std::int64_t n = 3; n <= 12; ++n)
    named("D" + std::to_string(n), 2 * n, n % 2 == 1 ? (n + 3) / 2 : n / 2 + 3);
  named("S3", 6, 3);
  named("S4", 24, 5);
  named("A4", 12, 4);
  named("A5", 60, 5);
  named("Q8", 8, 5);
  named("S3xC2", 12, 6);
  return entries;
}

std::vector<CorpusEntrySpec> corpusFromManifest(const Json& manifest,
                                                std::vector<std::string>* suitesOut) {
  if (!manifest.is_object()) throw input_error("manifest must be a JSON object");
  std::vector<CorpusEntrySpec> entries;
  if (manifest.contains("groups")) {
    const Json& groups = manifest.at("groups");
    if (!groups.is_array()) throw input_error("manifest \"groups\" must be an array");
    for (const Json& item : groups) {
      CorpusEntrySpec spec;
      spec.groupSpec = item;
      if (item.contains("label")) spec.label = item.at("label").get<std::string>();
      else if (item.contains("name")) spec.label = item.at("name").get<std::string>();
      else spec.label = "entry-" + std::to_string(entries.size());
      if (item.contains("expected_order"))
        spec.expectedOrder = item.at("expected_order").get<std::int64_t>();
      if (item.contains("expected_classes"))
        spec.expectedClasses = item.at("expected_classes").get<std::int64_t>();
      entries.push_back(std::move(spec));
    }
  }
  if (suitesOut && manifest.contains("suites")) {
    for (const Json& s : manifest.at("suites")) suitesOut->push_back(s.get<std::string>());
  }
  return entries;
}

CorpusEntryResult runCorpusEntry(const CorpusEntrySpec& spec, const CorpusOptions& options) {
  CorpusEntryResult result;
  result.label = spec.label;
  EntryContext ctx;
  ctx.rng.seed(fnv1a(spec.label));
  auto enabled = [&](const std::string& suite) {
    return options.suites.empty() ||
           std::find(options.suites.begin(), options.suites.end(), suite) != options.suites.end();
  };
  try {
    Json groupSpec = spec.groupSpec;
    groupSpec.erase("label");
    groupSpec.erase("expected_order");
    groupSpec.erase("expected_classes");
    ctx.group = groupFromJson(groupSpec, options.maxOrder).group;
    result.order = ctx.group->order();
    result.classes = ctx.group->classCount();
    result.exponent = ctx.group->exponent();
    if (spec.expectedOrder && *spec.expectedOrder != result.order)
      throw verification_error("expected order " + std::to_string(*spec.expectedOrder) +
                               ", enumerated " + std::to_string(result.order));
    if (spec.expectedClasses && *spec.expectedClasses != result.classes)
      throw verification_error("expected " + std::to_string(*spec.expectedClasses) +
                               " classes, found " + std::to_string(result.classes));
    ctx.table = computeCharacterTable(ctx.group);
    ctx.cyclicReps = cyclicSubgroupsUpToConjugacy(ctx.group);
    if (ctx.group->order() <= kDefaultSubgroupOrderBound) {
      ctx.allReps = allSubgroupsUpToConjugacy(ctx.group);
      ctx.haveAllReps = true;
    }
  } catch (const resource_error& err) {
    result.error = err.what();
    result.resourceError = true;
    return result;
  } catch (const std::exception& err) {
    result.error = err.what();
    return result;
  }

  try {
    if (enabled("cyclotomic")) suiteCyclotomic(ctx, result.checks);
    if (enabled("group")) suiteGroupAxioms(ctx, result.checks);
    if (enabled("table")) suiteTableAxioms(ctx, result.checks);
    if (enabled("power_map")) suitePowerMap(ctx, result.checks);
    if (enabled("frobenius")) suiteFrobeniusTransitivity(ctx, result.checks);
    if (enabled("galois")) suiteGalois(ctx, result.checks);
    if (enabled("artin")) suiteArtin(ctx, result.checks);
    if (enabled("certificates")) suiteCertificates(ctx, result.checks);
  } catch (const resource_error& err) {
    result.error = err.what();
    result.resourceError = true;
  } catch (const std::exception& err) {
    result.error = err.what();
  }
  return result;
}

CorpusOutcome runCorpus(const std::vector<CorpusEntrySpec>& entries,
                        const CorpusOptions& options) {
  std::vector<CorpusEntryResult> results(entries.size());
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(entries.size())));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      results[i] = runCorpusEntry(entries[i], options);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&]() {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= entries.size()) return;
          results[i] = runCorpusEntry(entries[i], options);
        }
      });
    }
    for (std::thread& t : workers) t.join();
  }

  std::vector<std::size_t> order(results.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return results[a].label < results[b].label; });

  CorpusOutcome outcome;
  Json report = Json::object();
  report["schema"] = "artin-corpus/1";
  Json jsonEntries = Json::array();
  std::int64_t failedChecks = 0, erroredEntries = 0;
  for (std::size_t i : order) {
    const CorpusEntryResult& r = results[i];
    Json e = Json::object();
    e["group"] = r.label;
    if (!r.error.empty()) {
      e["error"] = r.error;
      ++erroredEntries;
      outcome.anyEntryError = true;
      if (r.resourceError) outcome.anyResourceError = true;
    } else {
      e["order"] = r.order;
      e["classes"] = r.classes;
      e["exponent"] = r.exponent;
      Json checks = Json::array();
      for (const CheckResult& c : r.checks) {
        Json jc = Json::object();
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.pass) {
          jc["detail"] = c.detail;
          ++failedChecks;
          outcome.anyCheckFailed = true;
        }
        checks.push_back(std::move(jc));
      }
      e["checks"] = std::move(checks);
    }
    jsonEntries.push_back(std::move(e));
  }
  report["entries"] = std::move(jsonEntries);
  report["entry_count"] = static_cast<std::int64_t>(entries.size());
  report["errored_entries"] = erroredEntries;
  report["failed_checks"] = failedChecks;
  report["ok"] = !outcome.anyCheckFailed && !outcome.anyEntryError;
  outcome.report = std::move(report);
  return outcome;
}

}  // namespace artin
