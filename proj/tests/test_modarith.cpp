#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "artin/errors.hpp"
#include "artin/modarith.hpp"

using namespace artin;

TEST_CASE("prime search and primitive roots") {
  CHECK(smallestPrimeInProgression(1, 3) == 5);
  CHECK(smallestPrimeInProgression(6, 4) == 7);
  CHECK(smallestPrimeInProgression(24, 10) == 73);
  CHECK(smallestPrimeInProgression(4, 2) == 5);

  for (std::int64_t p : {5, 7, 73, 101}) {
    const std::int64_t g = primitiveRootMod(p);
    std::int64_t acc = 1;
    int count = 0;
    do {
      acc = acc * g % p;
      ++count;
    } while (acc != 1);
    CHECK(count == p - 1);
  }
}

TEST_CASE("euler phi and units") {
  CHECK(eulerPhi(1) == 1);
  CHECK(eulerPhi(12) == 4);
  CHECK(eulerPhi(30) == 8);
  CHECK(unitsMod(1) == std::vector<std::int64_t>{1});
  CHECK(unitsMod(8) == std::vector<std::int64_t>{1, 3, 5, 7});
}

TEST_CASE("mod-p kernels") {
  const std::int64_t p = 7;
  ModMatrix a(2, 3);
  a << 1, 2, 3,
       2, 4, 6;  // rank 1
  const ModMatrix kernel = kernelBasisMod(a, p);
  CHECK(kernel.cols() == 2);
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    const ModVector v = kernel.col(c);
    const ModVector image = matVecMod(a, v, p);
    for (Eigen::Index i = 0; i < image.rows(); ++i) CHECK(image(i) % p == 0);
  }
}

TEST_CASE("characteristic polynomial mod p") {
  const std::int64_t p = 101;

  SUBCASE("diagonal") {
    ModMatrix d = ModMatrix::Zero(3, 3);
    d(0, 0) = 2;
    d(1, 1) = 3;
    d(2, 2) = 5;
    // (x-2)(x-3)(x-5) = x^3 - 10x^2 + 31x - 30
    const auto poly = charPolyMod(d, p);
    CHECK(poly == std::vector<std::int64_t>{(p - 30) % p, 31, p - 10, 1});
  }

  SUBCASE("companion matrix of x^3 + 4x + 9") {
    ModMatrix c = ModMatrix::Zero(3, 3);
    c(1, 0) = 1;
    c(2, 1) = 1;
    c(0, 2) = p - 9;
    c(1, 2) = p - 4;
    c(2, 2) = 0;
    const auto poly = charPolyMod(c, p);
    CHECK(poly == std::vector<std::int64_t>{9, 4, 0, 1});
  }

  SUBCASE("random matrices satisfy their own polynomial") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 12; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      ModMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = static_cast<std::int64_t>(rng() % p);
      const auto poly = charPolyMod(m, p);
      REQUIRE(poly.size() == static_cast<std::size_t>(n) + 1);
      CHECK(poly.back() == 1);
      // Cayley-Hamilton: p(M) = 0
      ModMatrix acc = ModMatrix::Zero(n, n);
      ModMatrix power = ModMatrix::Identity(n, n);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        acc = (acc + poly[k] * power).eval();
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) acc(i, j) %= p;
        power = mulMod(power, m, p);
      }
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(acc(i, j) % p == 0);
    }
  }
}

TEST_CASE("polynomial roots mod p") {
  // x^2 - 1 mod 11
  CHECK(polyRootsMod({10, 0, 1}, 11) == std::vector<std::int64_t>{1, 10});
  // irreducible x^2 + 1 mod 7
  CHECK(polyRootsMod({1, 0, 1}, 7).empty());
}
