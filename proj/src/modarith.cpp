#include "artin/modarith.hpp"

#include <numeric>

#include "artin/errors.hpp"

namespace artin {

std::int64_t powMod(std::int64_t base, std::int64_t exp, std::int64_t p) {
  base %= p;
  if (base < 0) base += p;
  std::int64_t acc = 1;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

std::int64_t invMod(std::int64_t a, std::int64_t p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw defect_error("invMod: zero is not invertible");
  // extended gcd; p need not be prime as long as gcd(a, p) = 1
  std::int64_t old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw defect_error("invMod: element not invertible");
  old_s %= p;
  if (old_s < 0) old_s += p;
  return old_s;
}

bool isPrime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> primeFactors(std::int64_t n) {
  std::vector<std::int64_t> factors;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

std::int64_t smallestPrimeInProgression(std::int64_t modulus, std::int64_t lowerBound) {
  std::int64_t p = modulus + 1;
  while (p <= lowerBound) p += modulus;
  while (!isPrime(p)) {
    p += modulus;
    if (p >= (std::int64_t{1} << 31))
      throw resource_error("no suitable prime below 2^31 in progression 1 mod " +
                           std::to_string(modulus));
  }
  return p;
}

std::int64_t primitiveRootMod(std::int64_t p) {
  if (p == 2) return 1;
  const std::vector<std::int64_t> qs = primeFactors(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::int64_t q : qs) {
      if (powMod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw defect_error("primitiveRootMod: no generator found (p not prime?)");
}

std::int64_t eulerPhi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t q : primeFactors(n)) result = result / q * (q - 1);
  return result;
}

std::vector<std::int64_t> unitsMod(std::int64_t n) {
  std::vector<std::int64_t> units;
  for (std::int64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) units.push_back(k);
  if (units.empty()) units.push_back(1);  // n = 1
  return units;
}

ModMatrix mulMod(const ModMatrix& a, const ModMatrix& b, std::int64_t p) {
  ModMatrix out = ModMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        out(i, j) = (out(i, j) + aik * b(k, j)) % p;
    }
  return out;
}

ModVector matVecMod(const ModMatrix& a, const ModVector& v, std::int64_t p) {
  ModVector out = ModVector::Zero(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    std::int64_t acc = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) acc = (acc + a(i, j) * v(j)) % p;
    out(i) = acc;
  }
  return out;
}

std::vector<Eigen::Index> rowReduceMod(ModMatrix& m, std::int64_t p) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) % p != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const std::int64_t inv = invMod(m(row, col), p);
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(row, c) = m(row, c) % p * inv % p;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      const std::int64_t factor = m(r, col) % p;
      if (factor == 0) continue;
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        m(r, c) = (m(r, c) - factor * m(row, c)) % p;
        if (m(r, c) < 0) m(r, c) += p;
      }
    }
    pivots.push_back(col);
    ++row;
  }
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      m(r, c) %= p;
      if (m(r, c) < 0) m(r, c) += p;
    }
  return pivots;
}

ModMatrix kernelBasisMod(const ModMatrix& a, std::int64_t p) {
  ModMatrix m = a;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      m(r, c) %= p;
      if (m(r, c) < 0) m(r, c) += p;
    }
  const std::vector<Eigen::Index> pivots = rowReduceMod(m, p);
  std::vector<bool> isPivot(m.cols(), false);
  for (Eigen::Index c : pivots) isPivot[static_cast<std::size_t>(c)] = true;

  const Eigen::Index nullity = m.cols() - static_cast<Eigen::Index>(pivots.size());
  ModMatrix basis = ModMatrix::Zero(m.cols(), nullity);
  Eigen::Index which = 0;
  for (Eigen::Index free = 0; free < m.cols(); ++free) {
    if (isPivot[static_cast<std::size_t>(free)]) continue;
    basis(free, which) = 1;
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(pivots.size()); ++i) {
      const std::int64_t coeff = m(i, free);
      if (coeff != 0) basis(pivots[i], which) = p - coeff;
    }
    ++which;
  }
  return basis;
}

// Cohen, Algorithm 2.2.9: Hessenberg reduction followed by the determinant
// recurrence on leading principal minors.
std::vector<std::int64_t> charPolyMod(const ModMatrix& a, std::int64_t p) {
  const Eigen::Index n = a.rows();
  ModMatrix h = a;
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      h(r, c) %= p;
      if (h(r, c) < 0) h(r, c) += p;
    }

  for (Eigen::Index m = 1; m + 1 < n; ++m) {
    // want h(m, m-1) invertible; search below for a nonzero entry
    Eigen::Index piv = -1;
    for (Eigen::Index i = m; i < n; ++i) {
      if (h(i, m - 1) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != m) {
      h.row(piv).swap(h.row(m));
      h.col(piv).swap(h.col(m));
    }
    const std::int64_t inv = invMod(h(m, m - 1), p);
    for (Eigen::Index i = m + 1; i < n; ++i) {
      if (h(i, m - 1) == 0) continue;
      const std::int64_t u = h(i, m - 1) * inv % p;
      for (Eigen::Index j = 0; j < n; ++j) {
        h(i, j) = (h(i, j) - u * h(m, j)) % p;
        if (h(i, j) < 0) h(i, j) += p;
      }
      // column operation keeps the similarity
      for (Eigen::Index j = 0; j < n; ++j) h(j, m) = (h(j, m) + u * h(j, i)) % p;
    }
  }

  // p_m(x) = (x - h_mm) p_{m-1}(x) - sum_i h_im * (prod of subdiagonals) * p_{i-1}(x)
  std::vector<std::vector<std::int64_t>> minors(static_cast<std::size_t>(n) + 1);
  minors[0] = {1};
  for (Eigen::Index m = 1; m <= n; ++m) {
    const auto& prev = minors[static_cast<std::size_t>(m - 1)];
    std::vector<std::int64_t> poly(static_cast<std::size_t>(m) + 1, 0);
    const std::int64_t diag = h(m - 1, m - 1);
    for (std::size_t j = 0; j < prev.size(); ++j) {
      poly[j + 1] = (poly[j + 1] + prev[j]) % p;
      poly[j] = (poly[j] - diag * prev[j]) % p;
    }
    std::int64_t subProduct = 1;
    for (Eigen::Index i = m - 1; i >= 1; --i) {
      subProduct = subProduct * h(i, i - 1) % p;
      if (subProduct == 0) break;
      const std::int64_t coeff = h(i - 1, m - 1) * subProduct % p;
      if (coeff == 0) continue;
      const auto& lower = minors[static_cast<std::size_t>(i - 1)];
      for (std::size_t j = 0; j < lower.size(); ++j)
        poly[j] = (poly[j] - coeff * lower[j]) % p;
    }
    for (auto& c : poly) {
      c %= p;
      if (c < 0) c += p;
    }
    minors[static_cast<std::size_t>(m)] = std::move(poly);
  }
  return minors[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> polyRootsMod(const std::vector<std::int64_t>& poly, std::int64_t p) {
  std::vector<std::int64_t> roots;
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t acc = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = (acc * x + *it) % p;
    if (acc % p == 0) roots.push_back(x);
  }
  return roots;
}

std::optional<ModVector> coordinatesInBasisMod(const ModMatrix& basis, const ModVector& v,
                                               std::int64_t p) {
  ModMatrix aug(basis.rows(), basis.cols() + 1);
  aug.leftCols(basis.cols()) = basis;
  aug.col(basis.cols()) = v;
  const std::vector<Eigen::Index> pivots = rowReduceMod(aug, p);
  if (!pivots.empty() && pivots.back() == basis.cols()) return std::nullopt;
  ModVector x = ModVector::Zero(basis.cols());
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(pivots.size()); ++i)
    x(pivots[i]) = aug(i, basis.cols());
  return x;
}

}  // namespace artin
