#include <algorithm>
#include <cmath>
#include <numeric>

#include "artin/character.hpp"
#include "artin/errors.hpp"
#include "artin/modarith.hpp"

// Dixon-Burnside character table computation.
//
// The central characters omega_i = |C_i| chi(g_i) / chi(1) are the common
// eigenvectors of the class-multiplication matrices M_i with
// (M_i)_{jk} = #{ x in C_i : x^-1 z_k in C_j } for a fixed z_k in C_k.
// Working modulo a prime p = 1 (mod e) with p > 2 sqrt(|G|) makes every
// eigenvalue land in F_p; the integer character values are then recovered by
// an inverse DFT over the power maps, which determines each root-of-unity
// multiplicity exactly because it is bounded by the degree < p.

namespace artin {

namespace {

struct ModContext {
  std::int64_t p = 0;
  std::int64_t zetaE = 0;  // fixed e-th root of unity in F_p
};

ModMatrix classMatrix(const FiniteGroup& g, int i) {
  const int r = g.classCount();
  ModMatrix m = ModMatrix::Zero(r, r);
  const auto& classes = g.classes();
  for (int k = 0; k < r; ++k) {
    const int zk = classes[static_cast<std::size_t>(k)].representativeIndex;
    for (int x : classes[static_cast<std::size_t>(i)].members) {
      const int j = g.classOf(g.multiply(g.invert(x), zk));
      m(j, k) += 1;
    }
  }
  return m;
}

// Split the column spans in `spaces` into common eigenspaces of m.
std::vector<ModMatrix> splitAgainst(const std::vector<ModMatrix>& spaces, const ModMatrix& m,
                                    std::int64_t p) {
  std::vector<ModMatrix> out;
  for (const ModMatrix& w : spaces) {
    if (w.cols() <= 1) {
      out.push_back(w);
      continue;
    }
    // restriction A of m to the invariant subspace spanned by w's columns:
    // m * w = w * A, solvable column by column since w has full column rank
    const ModMatrix mw = mulMod(m, w, p);
    ModMatrix a = ModMatrix::Zero(w.cols(), w.cols());
    for (Eigen::Index c = 0; c < w.cols(); ++c) {
      const auto coords = coordinatesInBasisMod(w, mw.col(c), p);
      if (!coords) throw defect_error("class-sum matrix does not preserve eigenspace");
      a.col(c) = *coords;
    }
    const std::vector<std::int64_t> roots = polyRootsMod(charPolyMod(a, p), p);
    Eigen::Index total = 0;
    for (std::int64_t lambda : roots) {
      ModMatrix shifted = a;
      for (Eigen::Index d = 0; d < a.rows(); ++d)
        shifted(d, d) = (shifted(d, d) - lambda % p + p) % p;
      const ModMatrix kernel = kernelBasisMod(shifted, p);
      if (kernel.cols() == 0) continue;
      out.push_back(mulMod(w, kernel, p));
      total += kernel.cols();
    }
    if (total != w.cols())
      throw defect_error("eigenspace splitting lost dimensions (non-semisimple restriction)");
  }
  return out;
}

}  // namespace

TablePtr computeCharacterTable(const GroupPtr& group) {
  const FiniteGroup& g = *group;
  const int r = g.classCount();
  const std::int64_t e = g.exponent();
  const std::int64_t order = g.order();

  const std::int64_t lower =
      static_cast<std::int64_t>(2.0 * std::sqrt(static_cast<double>(order))) + 1;
  ModContext ctx;
  ctx.p = smallestPrimeInProgression(e, lower);
  ctx.zetaE = powMod(primitiveRootMod(ctx.p), (ctx.p - 1) / e, ctx.p);

  // process class-sum matrices in class-size order (ties by class index)
  std::vector<int> processOrder(static_cast<std::size_t>(r));
  std::iota(processOrder.begin(), processOrder.end(), 0);
  std::stable_sort(processOrder.begin(), processOrder.end(), [&](int a, int b) {
    return g.classes()[static_cast<std::size_t>(a)].size <
           g.classes()[static_cast<std::size_t>(b)].size;
  });

  std::vector<ModMatrix> spaces = {ModMatrix::Identity(r, r)};
  std::vector<ModMatrix> classMatrices(static_cast<std::size_t>(r));
  for (int i : processOrder) {
    const bool done = std::all_of(spaces.begin(), spaces.end(),
                                  [](const ModMatrix& w) { return w.cols() == 1; });
    classMatrices[static_cast<std::size_t>(i)] = classMatrix(g, i);
    if (done) continue;
    spaces = splitAgainst(spaces, classMatrices[static_cast<std::size_t>(i)], ctx.p);
  }
  if (static_cast<int>(spaces.size()) != r)
    throw defect_error("Dixon split produced " + std::to_string(spaces.size()) +
                       " eigenspaces for " + std::to_string(r) + " classes");

  // one central character per 1-dimensional common eigenspace
  std::vector<int> inverseClass(static_cast<std::size_t>(r));
  for (int c = 0; c < r; ++c)
    inverseClass[static_cast<std::size_t>(c)] =
        g.classOf(g.invert(g.classes()[static_cast<std::size_t>(c)].representativeIndex));

  std::vector<std::vector<std::int64_t>> charactersModP;
  std::vector<std::int64_t> degrees;
  for (const ModMatrix& w : spaces) {
    // normalize so the identity-class coordinate is 1
    ModVector v = w.col(0);
    if (v(0) % ctx.p == 0) throw defect_error("central character vanishes at the identity");
    const std::int64_t scale = invMod(v(0), ctx.p);
    std::vector<std::int64_t> omega(static_cast<std::size_t>(r));
    for (int c = 0; c < r; ++c) omega[static_cast<std::size_t>(c)] = v(c) % ctx.p * scale % ctx.p;
    // eigenvalue check: M_i v = omega_i v for every class sum
    for (int i = 0; i < r; ++i) {
      const ModVector mv = matVecMod(classMatrices[static_cast<std::size_t>(i)], v, ctx.p);
      for (int c = 0; c < r; ++c)
        if (mv(c) % ctx.p != omega[static_cast<std::size_t>(i)] * v(c) % ctx.p)
          throw defect_error("claimed eigenvector fails the class-sum equations");
    }

    // degree from 1/d^2 = (1/|G|) sum omega_c omega_{c^-1} / |C_c|
    std::int64_t s = 0;
    for (int c = 0; c < r; ++c) {
      const std::int64_t byClassSize =
          invMod(g.classes()[static_cast<std::size_t>(c)].size % ctx.p, ctx.p);
      s = (s + omega[static_cast<std::size_t>(c)] *
                   omega[static_cast<std::size_t>(inverseClass[static_cast<std::size_t>(c)])] %
                   ctx.p * byClassSize) %
          ctx.p;
    }
    const std::int64_t dSquaredModP = order % ctx.p * invMod(s, ctx.p) % ctx.p;
    std::int64_t degree = -1;
    for (std::int64_t d = 1; d * d <= order; ++d) {
      if (d * d % ctx.p == dSquaredModP) {
        degree = d;
        break;
      }
    }
    if (degree < 0) throw defect_error("no integer degree matches the orthogonality sum");

    std::vector<std::int64_t> chi(static_cast<std::size_t>(r));
    for (int c = 0; c < r; ++c) {
      const std::int64_t byClassSize =
          invMod(g.classes()[static_cast<std::size_t>(c)].size % ctx.p, ctx.p);
      chi[static_cast<std::size_t>(c)] =
          degree % ctx.p * omega[static_cast<std::size_t>(c)] % ctx.p * byClassSize % ctx.p;
    }
    charactersModP.push_back(std::move(chi));
    degrees.push_back(degree);
  }

  // lift each value chi(g_c) = sum_j n_j zeta_m^j by inverse DFT over the
  // cyclic group generated by g_c; the multiplicities n_j are < p
  std::vector<std::vector<int>> powerClassOfRep(static_cast<std::size_t>(r));
  for (int c = 0; c < r; ++c) {
    const std::int64_t m = g.classes()[static_cast<std::size_t>(c)].elementOrder;
    auto& row = powerClassOfRep[static_cast<std::size_t>(c)];
    row.resize(static_cast<std::size_t>(m));
    const int rep = g.classes()[static_cast<std::size_t>(c)].representativeIndex;
    for (std::int64_t t = 0; t < m; ++t) row[static_cast<std::size_t>(t)] = g.classOf(g.power(rep, t));
  }

  std::vector<ClassFunction> rows;
  std::vector<std::int64_t> rowDegrees;
  for (std::size_t chiIdx = 0; chiIdx < charactersModP.size(); ++chiIdx) {
    const auto& chiP = charactersModP[chiIdx];
    std::vector<CycloNumber> values;
    values.reserve(static_cast<std::size_t>(r));
    for (int c = 0; c < r; ++c) {
      const std::int64_t m = g.classes()[static_cast<std::size_t>(c)].elementOrder;
      const std::int64_t zetaM = powMod(ctx.zetaE, e / m, ctx.p);
      const std::int64_t zetaMInv = invMod(zetaM, ctx.p);
      const std::int64_t mInv = invMod(m % ctx.p, ctx.p);
      CycloNumber value = CycloNumber::zero();
      std::int64_t total = 0;
      for (std::int64_t j = 0; j < m; ++j) {
        std::int64_t nj = 0;
        for (std::int64_t t = 0; t < m; ++t) {
          const std::int64_t chiAtPower =
              chiP[static_cast<std::size_t>(powerClassOfRep[static_cast<std::size_t>(c)]
                                                           [static_cast<std::size_t>(t)])];
          nj = (nj + chiAtPower * powMod(zetaMInv, j * t % m, ctx.p)) % ctx.p;
        }
        nj = nj * mInv % ctx.p;
        if (nj == 0) continue;
        total += nj;
        value = value + Rat(static_cast<long>(nj)) * CycloNumber::zeta(m, j);
      }
      if (total != degrees[chiIdx])
        throw defect_error("root-of-unity multiplicities do not sum to the degree");
      values.push_back(std::move(value));
    }
    rows.emplace_back(group, std::move(values));
    rowDegrees.push_back(degrees[chiIdx]);
  }

  // deterministic row order: by degree, then descending lexicographic values
  std::vector<std::size_t> rowOrder(rows.size());
  std::iota(rowOrder.begin(), rowOrder.end(), 0);
  std::sort(rowOrder.begin(), rowOrder.end(), [&](std::size_t a, std::size_t b) {
    if (rowDegrees[a] != rowDegrees[b]) return rowDegrees[a] < rowDegrees[b];
    for (int c = 0; c < r; ++c) {
      const int cmp = compare(rows[a].valueAt(c), rows[b].valueAt(c));
      if (cmp != 0) return cmp > 0;
    }
    return false;
  });
  std::vector<ClassFunction> ordered;
  std::vector<std::int64_t> orderedDegrees;
  for (std::size_t i : rowOrder) {
    ordered.push_back(rows[i]);
    orderedDegrees.push_back(rowDegrees[i]);
  }

  // self-check before handing the table out: orthonormal rows, degree sum
  std::int64_t degreeSquareSum = 0;
  for (std::int64_t d : orderedDegrees) degreeSquareSum += d * d;
  if (degreeSquareSum != order)
    throw defect_error("table degrees violate sum of squares = |G|");
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      const CycloNumber ip = innerProduct(ordered[static_cast<std::size_t>(i)],
                                          ordered[static_cast<std::size_t>(j)]);
      const CycloNumber expected =
          i == j ? CycloNumber::one() : CycloNumber::zero();
      if (!equal(ip, expected)) throw defect_error("table rows are not orthonormal");
    }

  return std::make_shared<const CharacterTable>(group, std::move(ordered),
                                                std::move(orderedDegrees));
}

}  // namespace artin
