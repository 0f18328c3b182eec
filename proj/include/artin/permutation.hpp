#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace artin {

/// A permutation of {0, ..., degree-1}, stored as the image array.
class Permutation {
public:
  Permutation() = default;
  static Permutation identity(int degree);
  /// Validates that images is a bijection.
  static Permutation fromImages(std::vector<int> images);
  /// Cycles are arrays of 0-based points; points must be distinct across all
  /// cycles of one permutation and lie in [0, degree).
  static Permutation fromCycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  bool isIdentity() const;
  Permutation inverse() const;
  /// Order as lcm of cycle lengths.
  std::int64_t order() const;
  /// k may be negative.
  Permutation power(std::int64_t k) const;

  /// Canonical disjoint cycles: fixed points omitted, each cycle starts at
  /// its least point, cycles sorted by first point.
  std::vector<std::vector<int>> cycles() const;
  std::string toCycleString() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);  // a after b
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

}  // namespace artin
