#pragma once

#include <json.hpp>
#include <string>

#include "artin/certify.hpp"

namespace artin {

// All emitted JSON uses insertion-ordered objects and string-encoded exact
// rationals, so identical inputs serialize byte-identically.
using Json = nlohmann::ordered_json;

struct LabeledGroup {
  GroupPtr group;
  std::string label;
};

/// Accepts {"name": "S4"} or {"degree": d, "generators": [[[0,1],[2,3]], ...]}
/// with cycles as arrays of 0-based points.  Diagnostics name the offending
/// generator.
LabeledGroup groupFromJson(const Json& spec, std::int64_t orderBound = kDefaultOrderBound);

Json groupToJson(const FiniteGroup& group, const std::string& label = "");

Json permutationToJson(const Permutation& p);
Permutation permutationFromJson(const Json& cycles, int degree);

Json cycloToJson(const CycloNumber& value);
CycloNumber cycloFromJson(const Json& j);

Json classFunctionValuesToJson(const ClassFunction& chi);
/// Values as "p/q" strings; requires a rational-valued function.
Json rationalValuesToJson(const ClassFunction& chi);

Json tableToJson(const CharacterTable& table, const std::string& label = "");

Json decompositionToJson(const ArtinDecomposition& d, const std::string& label = "");

Json certificateToJson(const TheoremCertificate& cert, const std::string& label = "");

Json kernelReportToJson(const KernelReport& report);

}  // namespace artin
