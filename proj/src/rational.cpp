#include "artin/rational.hpp"

#include <cctype>

#include "artin/errors.hpp"

namespace artin {

Rat ratFromString(const std::string& text) {
  if (text.empty()) throw input_error("empty rational literal");
  const std::size_t slash = text.find('/');
  auto digitsOnly = [](const std::string& s, bool allowSign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allowSign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!digitsOnly(text.substr(0, slash), true))
    throw input_error("bad rational literal: '" + text + "'");
  if (slash != std::string::npos) {
    const std::string den = text.substr(slash + 1);
    if (!digitsOnly(den, false) || Int(den) == 0)
      throw input_error("bad rational literal: '" + text + "'");
  }
  Rat value(text);
  value.canonicalize();
  return value;
}

std::string toFractionString(const Rat& value) { return value.get_str(); }

}  // namespace artin
