#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

namespace artin {

// Exact arbitrary-precision scalars.  All arithmetic in this project is
// exact; no floating point appears anywhere in the core.
using Int = mpz_class;
using Rat = mpq_class;

/// Parse "p", "-p" or "p/q" (decimal-free).  Throws input_error on anything else.
Rat ratFromString(const std::string& text);

/// Canonical decimal-free rendering: "3", "-1/2", "0".
std::string toFractionString(const Rat& value);

inline bool isIntegerRat(const Rat& value) { return value.get_den() == 1; }

/// mpq_class(num, den) does not canonicalize; this does.
inline Rat makeRat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Three-way comparison usable as a strict ordering key.
inline int ratCompare(const Rat& a, const Rat& b) { return cmp(a, b); }

}  // namespace artin

// Eigen scalar traits so Matrix<Rat> works as a dense exact matrix type.
namespace Eigen {
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};
}  // namespace Eigen
