#pragma once

#include <cstdint>
#include <vector>

#include "artin/matrix.hpp"

namespace artin {

// Dense linear algebra over F_p with p < 2^31, stored in int64 matrices with
// entries normalized to [0, p).  Products fit in int64 before reduction.
using ModMatrix = Matrix<std::int64_t>;
using ModVector = Vector<std::int64_t>;

std::int64_t powMod(std::int64_t base, std::int64_t exp, std::int64_t p);
std::int64_t invMod(std::int64_t a, std::int64_t p);

bool isPrime(std::int64_t n);
std::vector<std::int64_t> primeFactors(std::int64_t n);

/// Smallest prime p with p ≡ 1 (mod modulus) and p > lowerBound.
std::int64_t smallestPrimeInProgression(std::int64_t modulus, std::int64_t lowerBound);

/// A generator of the multiplicative group of F_p.
std::int64_t primitiveRootMod(std::int64_t p);

std::int64_t eulerPhi(std::int64_t n);

/// Residues 1 <= k <= n with gcd(k, n) = 1, ascending.  For n = 1 this is {1}.
std::vector<std::int64_t> unitsMod(std::int64_t n);

ModMatrix mulMod(const ModMatrix& a, const ModMatrix& b, std::int64_t p);
ModVector matVecMod(const ModMatrix& a, const ModVector& v, std::int64_t p);

/// Reduced row echelon form mod p; returns pivot columns.
std::vector<Eigen::Index> rowReduceMod(ModMatrix& m, std::int64_t p);

/// Basis of the right kernel of a mod p (each column one basis vector).
ModMatrix kernelBasisMod(const ModMatrix& a, std::int64_t p);

/// Characteristic polynomial of a mod p, monic, coefficients low-to-high.
/// Hessenberg reduction; works for any size without needing p > size.
std::vector<std::int64_t> charPolyMod(const ModMatrix& a, std::int64_t p);

/// All roots in F_p of the given polynomial (coefficients low-to-high),
/// ascending.  Exhaustive scan; fine for the p this project ever sees.
std::vector<std::int64_t> polyRootsMod(const std::vector<std::int64_t>& poly, std::int64_t p);

/// Solve basis * x = v mod p where basis columns are independent; nullopt if
/// v is outside their span.
std::optional<ModVector> coordinatesInBasisMod(const ModMatrix& basis, const ModVector& v,
                                               std::int64_t p);

}  // namespace artin
