#include "artin/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "artin/errors.hpp"
#include "artin/matrix.hpp"
#include "artin/modarith.hpp"

namespace artin {

namespace {

// Exact division of integer polynomials, remainder must vanish.
std::vector<Int> dividePoly(const std::vector<Int>& num, const std::vector<Int>& den) {
  std::vector<Int> rem = num;
  std::vector<Int> quot(num.size() - den.size() + 1, Int(0));
  const Int& lead = den.back();
  for (std::size_t i = quot.size(); i-- > 0;) {
    Int q = rem[i + den.size() - 1] / lead;
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= q * den[j];
  }
  for (const Int& c : rem)
    if (c != 0) throw defect_error("dividePoly: non-exact division");
  return quot;
}

std::vector<Int> computeCyclotomic(std::int64_t n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<Int> num(static_cast<std::size_t>(n) + 1, Int(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = dividePoly(num, cyclotomicPolynomial(d));
  }
  return num;
}

// Reduce a rational polynomial (low-to-high, any degree) mod the monic Phi_n.
std::vector<Rat> reduceModPhi(std::vector<Rat> poly, std::int64_t n) {
  const std::vector<Int> phi = cyclotomicPolynomial(n);
  const std::size_t degPhi = phi.size() - 1;
  while (poly.size() > degPhi) {
    const Rat c = poly.back();
    poly.pop_back();
    if (c == 0) continue;
    const std::size_t shift = poly.size() - degPhi;  // poly had degree shift+degPhi
    for (std::size_t j = 0; j < degPhi; ++j) poly[shift + j] -= c * Rat(phi[j]);
  }
  poly.resize(degPhi, Rat(0));
  return poly;
}

}  // namespace

std::vector<Int> cyclotomicPolynomial(std::int64_t n) {
  if (n < 1) throw input_error("cyclotomicPolynomial: n must be positive");
  // memoization is per-thread; values are immutable once computed
  thread_local std::map<std::int64_t, std::vector<Int>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Int> phi = computeCyclotomic(n);
  cache.emplace(n, phi);
  return phi;
}

CycloNumber CycloNumber::zero() { return CycloNumber{1, {Rat(0)}}; }

CycloNumber CycloNumber::one() { return CycloNumber{1, {Rat(1)}}; }

CycloNumber CycloNumber::fromRational(const Rat& q) { return CycloNumber{1, {q}}; }

CycloNumber CycloNumber::zeta(std::int64_t n, std::int64_t power) {
  if (n < 1) throw input_error("CycloNumber::zeta: conductor must be positive");
  power %= n;
  if (power < 0) power += n;
  std::vector<Rat> poly(static_cast<std::size_t>(power) + 1, Rat(0));
  poly[static_cast<std::size_t>(power)] = 1;
  return CycloNumber{n, reduceModPhi(std::move(poly), n)};
}

bool CycloNumber::isZero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& c) { return c == 0; });
}

CycloNumber add(const CycloNumber& a, const CycloNumber& b) {
  const std::int64_t n = std::lcm(a.conductor, b.conductor);
  const CycloNumber ea = embed(a, n);
  const CycloNumber eb = embed(b, n);
  CycloNumber out = ea;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += eb.coeffs[i];
  return out;
}

CycloNumber sub(const CycloNumber& a, const CycloNumber& b) { return add(a, negate(b)); }

CycloNumber negate(const CycloNumber& a) {
  CycloNumber out = a;
  for (Rat& c : out.coeffs) c = -c;
  return out;
}

CycloNumber mul(const CycloNumber& a, const CycloNumber& b) {
  const std::int64_t n = std::lcm(a.conductor, b.conductor);
  const CycloNumber ea = embed(a, n);
  const CycloNumber eb = embed(b, n);
  std::vector<Rat> prod(ea.coeffs.size() + eb.coeffs.size() - 1, Rat(0));
  for (std::size_t i = 0; i < ea.coeffs.size(); ++i) {
    if (ea.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < eb.coeffs.size(); ++j)
      prod[i + j] += ea.coeffs[i] * eb.coeffs[j];
  }
  return CycloNumber{n, reduceModPhi(std::move(prod), n)};
}

CycloNumber mul(const CycloNumber& a, const Rat& q) {
  CycloNumber out = a;
  for (Rat& c : out.coeffs) c *= q;
  return out;
}

CycloNumber galoisConjugate(const CycloNumber& a, std::int64_t k) {
  const std::int64_t n = a.conductor;
  std::int64_t kk = k % n;
  if (kk < 0) kk += n;
  if (std::gcd(kk == 0 ? n : kk, n) != 1)
    throw input_error("galoisConjugate: k = " + std::to_string(k) +
                      " is not coprime to the conductor " + std::to_string(n));
  std::vector<Rat> poly(static_cast<std::size_t>(n), Rat(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    poly[static_cast<std::size_t>(static_cast<std::int64_t>(i) * kk % n)] += a.coeffs[i];
  return CycloNumber{n, reduceModPhi(std::move(poly), n)};
}

CycloNumber conjugate(const CycloNumber& a) {
  return galoisConjugate(a, a.conductor - 1 == 0 ? 1 : a.conductor - 1);
}

bool isRational(const CycloNumber& a) {
  for (std::size_t i = 1; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] != 0) return false;
  return true;
}

Rat toRational(const CycloNumber& a) {
  if (!isRational(a))
    throw input_error("toRational: value " + toString(a) + " is not rational");
  return a.coeffs[0];
}

CycloNumber embed(const CycloNumber& a, std::int64_t m) {
  if (m % a.conductor != 0)
    throw input_error("embed: target conductor " + std::to_string(m) +
                      " is not a multiple of " + std::to_string(a.conductor));
  if (m == a.conductor) return a;
  const std::int64_t stride = m / a.conductor;
  std::vector<Rat> poly(static_cast<std::size_t>(m), Rat(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    poly[i * static_cast<std::size_t>(stride)] = a.coeffs[i];
  return CycloNumber{m, reduceModPhi(std::move(poly), m)};
}

bool equal(const CycloNumber& a, const CycloNumber& b) { return compare(a, b) == 0; }

int compare(const CycloNumber& a, const CycloNumber& b) {
  const std::int64_t n = std::lcm(a.conductor, b.conductor);
  const CycloNumber ea = embed(a, n);
  const CycloNumber eb = embed(b, n);
  for (std::size_t i = 0; i < ea.coeffs.size(); ++i) {
    const int c = ratCompare(ea.coeffs[i], eb.coeffs[i]);
    if (c != 0) return c;
  }
  return 0;
}

CycloNumber reduceToMinimalConductor(const CycloNumber& a) {
  const std::int64_t n = a.conductor;
  if (n == 1) return a;
  if (isRational(a)) return CycloNumber{1, {a.coeffs[0]}};
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    // basis of Q(zeta_d) inside Q(zeta_n); solve for coordinates
    const std::int64_t phiD = eulerPhi(d);
    const std::int64_t phiN = static_cast<std::int64_t>(a.coeffs.size());
    RatMatrix basis(phiN, phiD);
    for (std::int64_t j = 0; j < phiD; ++j) {
      const CycloNumber bj = embed(CycloNumber::zeta(d, j), n);
      for (std::int64_t i = 0; i < phiN; ++i) basis(i, j) = bj.coeffs[static_cast<std::size_t>(i)];
    }
    RatVector target(phiN);
    for (std::int64_t i = 0; i < phiN; ++i) target(i) = a.coeffs[static_cast<std::size_t>(i)];
    if (auto x = solveFreeVarsZero(basis, target)) {
      std::vector<Rat> coeffs(static_cast<std::size_t>(phiD));
      for (std::int64_t i = 0; i < phiD; ++i) coeffs[static_cast<std::size_t>(i)] = (*x)(i);
      return CycloNumber{d, std::move(coeffs)};
    }
  }
  return a;
}

std::string toString(const CycloNumber& value) {
  const CycloNumber a = reduceToMinimalConductor(value);
  if (isRational(a)) return toFractionString(a.coeffs[0]);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    const Rat& c = a.coeffs[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    Rat mag = negative ? Rat(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (i == 0) {
      out << toFractionString(mag);
      continue;
    }
    if (mag != 1) out << toFractionString(mag) << "*";
    out << "z" << a.conductor;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

}  // namespace artin
