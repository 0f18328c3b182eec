// Command line front end: character tables, induction decompositions,
// kernel-membership certificates, and the corpus property runner.
//
// Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
// bound exceeded.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "artin/corpus.hpp"
#include "artin/errors.hpp"

namespace {

using artin::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

Json parseJsonText(const std::string& text, const std::string& what) {
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw artin::input_error("malformed JSON in " + what);
  return parsed;
}

/// A group spec argument is a name ("S4", "C6", "S3xC2"), inline JSON
/// starting with '{', or a path to a JSON file.
artin::LabeledGroup loadGroupSpec(const std::string& arg, std::int64_t maxOrder) {
  if (!arg.empty() && arg.front() == '{')
    return artin::groupFromJson(parseJsonText(arg, "group spec"), maxOrder);
  if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") {
    std::ifstream in(arg);
    if (!in) throw artin::input_error("cannot open group spec file '" + arg + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return artin::groupFromJson(parseJsonText(buffer.str(), arg), maxOrder);
  }
  return artin::LabeledGroup{artin::namedGroup(arg, maxOrder), arg};
}

/// Character selectors: an irreducible index, "galois-average:i", or an
/// explicit JSON array of rational values (one per class).
artin::ClassFunction selectCharacter(const artin::TablePtr& table, const std::string& selector) {
  const auto& group = table->group();
  if (!selector.empty() && selector.front() == '[') {
    const Json values = parseJsonText(selector, "character value vector");
    if (static_cast<int>(values.size()) != group->classCount())
      throw artin::input_error("value vector has " + std::to_string(values.size()) +
                               " entries for " + std::to_string(group->classCount()) +
                               " classes");
    std::vector<artin::CycloNumber> parsed;
    for (const Json& v : values) {
      if (v.is_number_integer())
        parsed.push_back(artin::CycloNumber::fromRational(artin::Rat(v.get<long>())));
      else if (v.is_string())
        parsed.push_back(artin::CycloNumber::fromRational(artin::ratFromString(v.get<std::string>())));
      else
        throw artin::input_error("character values must be integers or \"p/q\" strings");
    }
    return artin::ClassFunction(group, std::move(parsed));
  }
  const std::string averagePrefix = "galois-average:";
  const bool average = selector.rfind(averagePrefix, 0) == 0;
  const std::string indexText = average ? selector.substr(averagePrefix.size()) : selector;
  if (indexText.empty() ||
      !std::all_of(indexText.begin(), indexText.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw artin::input_error("bad character selector '" + selector +
                             "'; use an irreducible index, galois-average:i, or a JSON value vector");
  const int index = std::stoi(indexText);
  if (index < 0 || index >= table->size())
    throw artin::input_error("irreducible index " + std::to_string(index) + " out of range 0.." +
                             std::to_string(table->size() - 1));
  const artin::ClassFunction& chi = table->irreducible(index);
  return average ? artin::galoisAverage(chi) : chi;
}

void printPrettyTable(const artin::CharacterTable& table, const std::string& label,
                      std::ostream& out) {
  const artin::FiniteGroup& g = *table.group();
  out << "group " << (label.empty() ? "(custom)" : label) << ": order " << g.order()
      << ", exponent " << g.exponent() << ", " << g.classCount() << " classes\n";
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header = {"class"};
  for (const auto& cls : g.classes()) header.push_back(cls.representative.toCycleString());
  cells.push_back(header);
  std::vector<std::string> sizes = {"size"};
  for (const auto& cls : g.classes()) sizes.push_back(std::to_string(cls.size));
  cells.push_back(sizes);
  for (int i = 0; i < table.size(); ++i) {
    std::vector<std::string> row = {"X" + std::to_string(i)};
    for (int c = 0; c < g.classCount(); ++c)
      row.push_back(artin::toString(table.irreducible(i).valueAt(c)));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> widths;
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (widths.size() <= c) widths.push_back(0);
      widths[c] = std::max(widths[c], row[c].size());
    }
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << std::string(widths[c] - row[c].size(), ' ') << row[c];
      out << (c + 1 == row.size() ? "\n" : "  ");
    }
  }
}

void printPrettyDecomposition(const artin::ArtinDecomposition& d, bool verified,
                              std::ostream& out) {
  out << "target = [";
  for (int c = 0; c < d.group->classCount(); ++c) {
    if (c) out << ", ";
    out << artin::toString(d.target.valueAt(c));
  }
  out << "]\n";
  for (const auto& term : d.terms) {
    out << "  " << artin::toFractionString(term.coefficient) << " * Ind from subgroup of order "
        << term.subgroup.order() << " generated by";
    for (const auto& gen : term.subgroup.generators) out << " " << gen.toCycleString();
    out << "\n";
  }
  out << "verified: " << (verified ? "true" : "false") << "\n";
}

int dispatch(int argc, char** argv) {
  CLI::App app{"exact character tables, induction decompositions, and kernel certificates"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may appear after the subcommand

  std::int64_t maxOrder = artin::kDefaultOrderBound;
  app.add_option("--max-order", maxOrder, "group order bound")
      ->envname("ARTIN_MAX_ORDER");
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable output instead of JSON");

  std::string tableSpec;
  CLI::App* cmdTable = app.add_subcommand("table", "compute a character table");
  cmdTable->add_option("spec", tableSpec, "group name, inline JSON, or .json file")->required();

  std::string decomposeSpec, decomposeChar;
  bool decomposeAll = false;
  CLI::App* cmdDecompose =
      app.add_subcommand("decompose", "express a rational character by induced trivials");
  cmdDecompose->add_option("spec", decomposeSpec, "group name, inline JSON, or .json file")
      ->required();
  cmdDecompose->add_option("--char", decomposeChar, "character selector")->required();
  cmdDecompose->add_flag("--all-subgroups", decomposeAll,
                         "solve over all subgroup representatives, not only cyclic ones");

  std::string certifySpec, certifyChar;
  bool certifyReport = false;
  CLI::App* cmdCertify =
      app.add_subcommand("certify", "certify the Galois orbit sum of a character");
  cmdCertify->add_option("spec", certifySpec, "group name, inline JSON, or .json file")
      ->required();
  cmdCertify->add_option("--char", certifyChar, "character selector")->required();
  cmdCertify->add_flag("--report", certifyReport,
                       "print the kernel conclusion report instead of the certificate");

  std::string manifestPath;
  int jobs = 1;
  CLI::App* cmdCorpus = app.add_subcommand("corpus", "run the property suites over a corpus");
  cmdCorpus->add_option("--manifest", manifestPath, "corpus manifest JSON file");
  cmdCorpus->add_option("--jobs", jobs, "parallel workers")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (cmdTable->parsed()) {
    const artin::LabeledGroup spec = loadGroupSpec(tableSpec, maxOrder);
    const artin::TablePtr table = artin::computeCharacterTable(spec.group);
    if (pretty)
      printPrettyTable(*table, spec.label, std::cout);
    else
      std::cout << artin::tableToJson(*table, spec.label).dump(2) << "\n";
    return kExitOk;
  }

  if (cmdDecompose->parsed()) {
    const artin::LabeledGroup spec = loadGroupSpec(decomposeSpec, maxOrder);
    const artin::TablePtr table = artin::computeCharacterTable(spec.group);
    const artin::ClassFunction chi = selectCharacter(table, decomposeChar);
    if (!artin::isRationalCharacter(chi) &&
        std::all_of(decomposeChar.begin(), decomposeChar.end(),
                    [](unsigned char ch) { return std::isdigit(ch); })) {
      for (int c = 0; c < spec.group->classCount(); ++c)
        if (!artin::isRational(chi.valueAt(c)))
          throw artin::input_error("irreducible " + decomposeChar +
                                   " is not rational: value at class " + std::to_string(c) +
                                   " is " + artin::toString(chi.valueAt(c)) +
                                   "; try --char galois-average:" + decomposeChar);
    }
    const artin::ArtinDecomposition d = artin::decomposeRational(table, chi, decomposeAll);
    const bool verified = artin::verifyDecomposition(d);
    if (pretty)
      printPrettyDecomposition(d, verified, std::cout);
    else {
      Json out = artin::decompositionToJson(d, spec.label);
      out["verified"] = verified;
      std::cout << out.dump(2) << "\n";
    }
    return verified ? kExitOk : kExitVerification;
  }

  if (cmdCertify->parsed()) {
    const artin::LabeledGroup spec = loadGroupSpec(certifySpec, maxOrder);
    const artin::TablePtr table = artin::computeCharacterTable(spec.group);
    const artin::ClassFunction chi = selectCharacter(table, certifyChar);
    const artin::TheoremCertificate cert = artin::certifyGaloisOrbitSum(table, chi);
    const bool ok = artin::checkCertificate(cert);
    if (certifyReport)
      std::cout << artin::kernelReportToJson(artin::kernelConclusion(cert)).dump(2) << "\n";
    else
      std::cout << artin::certificateToJson(cert, spec.label).dump(2) << "\n";
    return ok ? kExitOk : kExitVerification;
  }

  if (cmdCorpus->parsed()) {
    std::vector<artin::CorpusEntrySpec> entries;
    artin::CorpusOptions options;
    options.maxOrder = maxOrder;
    options.jobs = jobs;
    if (manifestPath.empty()) {
      entries = artin::defaultCorpus();
    } else {
      std::ifstream in(manifestPath);
      if (!in) throw artin::input_error("cannot open manifest '" + manifestPath + "'");
      std::stringstream buffer;
      buffer << in.rdbuf();
      entries = artin::corpusFromManifest(parseJsonText(buffer.str(), manifestPath),
                                          &options.suites);
    }
    const artin::CorpusOutcome outcome = artin::runCorpus(entries, options);
    if (pretty) {
      for (const Json& entry : outcome.report.at("entries")) {
        std::cout << entry.at("group").get<std::string>() << ": ";
        if (entry.contains("error"))
          std::cout << "ERROR " << entry.at("error").get<std::string>() << "\n";
        else {
          int passed = 0, total = 0;
          for (const Json& check : entry.at("checks")) {
            ++total;
            if (check.at("pass").get<bool>()) ++passed;
          }
          std::cout << passed << "/" << total << " checks passed\n";
        }
      }
      std::cout << (outcome.report.at("ok").get<bool>() ? "OK" : "FAILED") << "\n";
    } else {
      std::cout << outcome.report.dump(2) << "\n";
    }
    if (outcome.anyCheckFailed) return kExitVerification;
    if (outcome.anyResourceError) return kExitResource;
    if (outcome.anyEntryError) return kExitVerification;
    return kExitOk;
  }

  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const artin::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const artin::resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const artin::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const artin::defect_error& e) {
    std::cerr << "internal defect: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
}
