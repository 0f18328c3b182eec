#include "artin/json_io.hpp"

#include "artin/errors.hpp"
#include "artin/modarith.hpp"

namespace artin {

namespace {

std::vector<std::vector<int>> cyclesFromJson(const Json& j) {
  if (!j.is_array()) throw input_error("generator must be an array of cycles");
  std::vector<std::vector<int>> cycles;
  for (const Json& cycle : j) {
    if (!cycle.is_array()) throw input_error("cycle must be an array of 0-based points");
    std::vector<int> points;
    for (const Json& point : cycle) {
      if (!point.is_number_integer()) throw input_error("cycle points must be integers");
      points.push_back(point.get<int>());
    }
    cycles.push_back(std::move(points));
  }
  return cycles;
}

}  // namespace

Permutation permutationFromJson(const Json& cycles, int degree) {
  return Permutation::fromCycles(degree, cyclesFromJson(cycles));
}

Json permutationToJson(const Permutation& p) {
  Json out = Json::array();
  for (const auto& cycle : p.cycles()) {
    Json c = Json::array();
    for (int point : cycle) c.push_back(point);
    out.push_back(std::move(c));
  }
  return out;
}

LabeledGroup groupFromJson(const Json& spec, std::int64_t orderBound) {
  if (!spec.is_object()) throw input_error("group spec must be a JSON object");
  if (spec.contains("name")) {
    const std::string name = spec.at("name").get<std::string>();
    return LabeledGroup{namedGroup(name, orderBound), name};
  }
  if (!spec.contains("degree") || !spec.contains("generators"))
    throw input_error("group spec needs either \"name\" or \"degree\" + \"generators\"");
  const int degree = spec.at("degree").get<int>();
  if (degree < 0) throw input_error("degree must be nonnegative");
  std::vector<Permutation> generators;
  const Json& gens = spec.at("generators");
  if (!gens.is_array()) throw input_error("\"generators\" must be an array");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    try {
      generators.push_back(permutationFromJson(gens[i], degree));
    } catch (const input_error& err) {
      throw input_error("generator " + std::to_string(i) + ": " + err.what());
    }
  }
  GroupPtr group = FiniteGroup::enumerate(std::move(generators), degree, orderBound);
  return LabeledGroup{group, "degree-" + std::to_string(degree) + "-order-" +
                                 std::to_string(group->order())};
}

Json groupToJson(const FiniteGroup& group, const std::string& label) {
  Json out = Json::object();
  if (!label.empty()) out["name"] = label;
  out["degree"] = group.degree();
  out["order"] = group.order();
  Json gens = Json::array();
  for (const Permutation& g : group.generators()) gens.push_back(permutationToJson(g));
  out["generators"] = std::move(gens);
  return out;
}

Json cycloToJson(const CycloNumber& value) {
  Json out = Json::object();
  out["conductor"] = value.conductor;
  Json coeffs = Json::array();
  for (const Rat& c : value.coeffs) coeffs.push_back(toFractionString(c));
  out["coeffs"] = std::move(coeffs);
  return out;
}

CycloNumber cycloFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
    throw input_error("cyclotomic value needs \"conductor\" and \"coeffs\"");
  CycloNumber value;
  value.conductor = j.at("conductor").get<std::int64_t>();
  if (value.conductor < 1) throw input_error("conductor must be positive");
  value.coeffs.clear();
  for (const Json& c : j.at("coeffs")) value.coeffs.push_back(ratFromString(c.get<std::string>()));
  const auto expected = static_cast<std::size_t>(eulerPhi(value.conductor));
  if (value.coeffs.size() != expected)
    throw input_error("coefficient vector length " + std::to_string(value.coeffs.size()) +
                      " does not equal phi(conductor) = " + std::to_string(expected));
  return value;
}

Json classFunctionValuesToJson(const ClassFunction& chi) {
  Json out = Json::array();
  for (const CycloNumber& v : chi.values()) out.push_back(cycloToJson(v));
  return out;
}

Json rationalValuesToJson(const ClassFunction& chi) {
  Json out = Json::array();
  for (const CycloNumber& v : chi.values()) out.push_back(toFractionString(toRational(v)));
  return out;
}

namespace {

Json classesToJson(const FiniteGroup& group) {
  Json out = Json::array();
  for (const ConjugacyClass& cls : group.classes()) {
    Json c = Json::object();
    c["representative"] = permutationToJson(cls.representative);
    c["size"] = cls.size;
    c["element_order"] = cls.elementOrder;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

Json tableToJson(const CharacterTable& table, const std::string& label) {
  const FiniteGroup& g = *table.group();
  Json out = Json::object();
  out["schema"] = "artin-table/1";
  out["group"] = groupToJson(g, label);
  out["exponent"] = g.exponent();
  out["classes"] = classesToJson(g);
  Json rows = Json::array();
  for (int i = 0; i < table.size(); ++i) {
    Json row = Json::object();
    row["degree"] = table.degrees()[static_cast<std::size_t>(i)];
    row["values"] = classFunctionValuesToJson(table.irreducible(i));
    rows.push_back(std::move(row));
  }
  out["irreducibles"] = std::move(rows);
  return out;
}

Json decompositionToJson(const ArtinDecomposition& d, const std::string& label) {
  Json out = Json::object();
  out["schema"] = "artin-decomposition/1";
  out["group"] = groupToJson(*d.group, label);
  out["target"] = rationalValuesToJson(d.target);
  Json terms = Json::array();
  for (const ArtinTerm& term : d.terms) {
    Json t = Json::object();
    Json gens = Json::array();
    for (const Permutation& g : term.subgroup.generators) gens.push_back(permutationToJson(g));
    t["subgroup_generators"] = std::move(gens);
    t["subgroup_order"] = term.subgroup.order();
    t["coefficient"] = toFractionString(term.coefficient);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json certificateToJson(const TheoremCertificate& cert, const std::string& label) {
  Json out = Json::object();
  out["schema"] = "artin-cert/1";
  out["group"] = groupToJson(*cert.group, label);
  out["input_character"] = classFunctionValuesToJson(cert.inputCharacter);
  Json orbit = Json::array();
  for (const auto& [k, entry] : cert.orbit) {
    Json o = Json::object();
    o["k"] = k;
    o["values"] = classFunctionValuesToJson(entry);
    orbit.push_back(std::move(o));
  }
  out["orbit"] = std::move(orbit);
  out["orbit_sum"] = rationalValuesToJson(cert.orbitSum);
  out["rationality_witness"] = cert.rationalityWitness;
  out["decomposition"] = decompositionToJson(cert.decomposition, label);
  out["verified"] = cert.verified;
  return out;
}

Json kernelReportToJson(const KernelReport& report) {
  Json out = Json::object();
  out["schema"] = report.schema;
  out["hypothesis"] = report.hypothesis;
  out["conclusion"] = report.conclusion;
  out["input_is_rational"] = report.inputIsRational;
  if (report.inputIsRational) out["rational_scalar"] = toFractionString(report.rationalScalar);
  out["galois_group_order"] = report.galoisOrderUsed;
  out["field_note"] = report.fieldNote;
  return out;
}

}  // namespace artin
