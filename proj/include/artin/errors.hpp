#pragma once

#include <stdexcept>
#include <string>

namespace artin {

/// Malformed or out-of-contract input (bad generators, irrational selection,
/// non-virtual character handed to a solver, ...).  CLI exit code 2.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A configured bound was exceeded (group order, subgroup enumeration).
/// CLI exit code 3.
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// An exact identity that must hold failed to re-verify.  CLI exit code 1.
class verification_error : public std::runtime_error {
public:
  explicit verification_error(const std::string& what) : std::runtime_error(what) {}
};

/// Internal invariant broken (a bug, never user input).  Surfaced loudly,
/// never absorbed.  CLI exit code 1.
class defect_error : public std::logic_error {
public:
  explicit defect_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace artin
