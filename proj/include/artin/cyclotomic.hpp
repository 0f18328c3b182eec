#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artin/rational.hpp"

namespace artin {

/// n-th cyclotomic polynomial, monic with integer coefficients, low-to-high.
std::vector<Int> cyclotomicPolynomial(std::int64_t n);

/// An exact element of Q(zeta_n), written in the power basis
/// {1, zeta, ..., zeta^(phi(n)-1)} of Q[x]/(Phi_n).  Values are immutable
/// in practice: every operation returns a fresh value.
///
/// The stored conductor is whatever the producing operation used; it is not
/// forced minimal.  Equality embeds both sides into the lcm conductor and
/// compares canonical coordinates, which is exact and decidable.
struct CycloNumber {
  std::int64_t conductor = 1;
  std::vector<Rat> coeffs = {Rat(0)};  // length phi(conductor)

  static CycloNumber zero();
  static CycloNumber one();
  static CycloNumber fromRational(const Rat& q);
  /// zeta_n^power
  static CycloNumber zeta(std::int64_t n, std::int64_t power = 1);

  bool isZero() const;
};

CycloNumber add(const CycloNumber& a, const CycloNumber& b);
CycloNumber sub(const CycloNumber& a, const CycloNumber& b);
CycloNumber negate(const CycloNumber& a);
CycloNumber mul(const CycloNumber& a, const CycloNumber& b);
CycloNumber mul(const CycloNumber& a, const Rat& q);

/// Image under the automorphism zeta_n -> zeta_n^k; requires gcd(k, n) = 1.
CycloNumber galoisConjugate(const CycloNumber& a, std::int64_t k);

/// Complex conjugation, i.e. galoisConjugate with k = -1.
CycloNumber conjugate(const CycloNumber& a);

bool isRational(const CycloNumber& a);
/// Throws input_error when the value is not rational.
Rat toRational(const CycloNumber& a);

/// Rewrite in conductor m (requires conductor | m); same field element.
CycloNumber embed(const CycloNumber& a, std::int64_t m);

bool equal(const CycloNumber& a, const CycloNumber& b);

/// Total order used for deterministic sorting: align conductors, compare
/// coordinate vectors lexicographically.  Returns <0, 0, >0.
int compare(const CycloNumber& a, const CycloNumber& b);

/// Equivalent value with the smallest conductor that can carry it.
CycloNumber reduceToMinimalConductor(const CycloNumber& a);

/// Human-readable form like "1 - 1/2*z12^4" (z_n denotes zeta_n).
std::string toString(const CycloNumber& a);

inline CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) { return add(a, b); }
inline CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) { return sub(a, b); }
inline CycloNumber operator-(const CycloNumber& a) { return negate(a); }
inline CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) { return mul(a, b); }
inline CycloNumber operator*(const CycloNumber& a, const Rat& q) { return mul(a, q); }
inline CycloNumber operator*(const Rat& q, const CycloNumber& a) { return mul(a, q); }
inline bool operator==(const CycloNumber& a, const CycloNumber& b) { return equal(a, b); }
inline bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !equal(a, b); }

}  // namespace artin
