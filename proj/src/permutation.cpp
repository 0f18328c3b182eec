#include "artin/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "artin/errors.hpp"

namespace artin {

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::fromImages(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || v >= static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v)])
      throw input_error("permutation image list is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::fromCycles(int degree, const std::vector<std::vector<int>>& cycles) {
  if (degree < 0) throw input_error("negative permutation degree");
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= degree)
        throw input_error("cycle point " + std::to_string(from) + " out of range for degree " +
                          std::to_string(degree));
      if (seen[static_cast<std::size_t>(from)])
        throw input_error("point " + std::to_string(from) + " repeated in cycle notation");
      seen[static_cast<std::size_t>(from)] = true;
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return fromImages(std::move(images));
}

bool Permutation::isIdentity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    images[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(images));
}

std::int64_t Permutation::order() const {
  std::int64_t result = 1;
  for (const auto& cycle : cycles())
    result = std::lcm(result, static_cast<std::int64_t>(cycle.size()));
  return result;
}

Permutation Permutation::power(std::int64_t k) const {
  const std::int64_t n = order();
  k %= n;
  if (k < 0) k += n;
  Permutation acc = identity(degree());
  Permutation base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || images_[static_cast<std::size_t>(start)] == start)
      continue;
    std::vector<int> cycle;
    int point = start;
    do {
      seen[static_cast<std::size_t>(point)] = true;
      cycle.push_back(point);
      point = images_[static_cast<std::size_t>(point)];
    } while (point != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::toCycleString() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << " ";
      out << cycle[i];
    }
    out << ")";
  }
  return out.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw input_error("composing permutations of unequal degree");
  std::vector<int> images(a.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = a.images_[static_cast<std::size_t>(b.images_[i])];
  return Permutation(std::move(images));
}

}  // namespace artin
