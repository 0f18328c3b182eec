#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "artin/corpus.hpp"
#include "artin/errors.hpp"

using namespace artin;

namespace {

struct CommandResult {
  int exitCode = -1;
  std::string output;
};

// run the CLI binary (path from the ARTIN_CLI_BIN environment variable set
// by ctest) and capture stdout+stderr
CommandResult runCli(const std::string& args) {
  const char* bin = std::getenv("ARTIN_CLI_BIN");
  REQUIRE(bin != nullptr);
  const std::string command = std::string(bin) + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  CommandResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("group specs from JSON") {
  SUBCASE("by name") {
    const LabeledGroup g = groupFromJson(Json::parse(R"({"name": "S4"})"));
    CHECK(g.label == "S4");
    CHECK(g.group->order() == 24);
  }

  SUBCASE("by generators in cycle notation") {
    const LabeledGroup g =
        groupFromJson(Json::parse(R"({"degree": 3, "generators": [[[0,1]], [[0,1,2]]]})"));
    CHECK(g.group->order() == 6);
  }

  SUBCASE("malformed cycle names the offending generator") {
    try {
      groupFromJson(Json::parse(R"({"degree": 3, "generators": [[[0,1,2]], [[0,0,1]]]})"));
      FAIL("expected input_error");
    } catch (const input_error& e) {
      CHECK(std::string(e.what()).find("generator 1") != std::string::npos);
    }
  }

  SUBCASE("missing fields") {
    CHECK_THROWS_AS(groupFromJson(Json::parse(R"({"foo": 1})")), input_error);
  }
}

TEST_CASE("cyclotomic JSON form") {
  const CycloNumber z = CycloNumber::zeta(12, 5) * makeRat(-3, 2);
  const Json j = cycloToJson(z);
  CHECK(j.at("conductor") == 12);
  CHECK(j.at("coeffs").size() == 4);  // phi(12)
  const CycloNumber back = cycloFromJson(j);
  CHECK(equal(back, z));

  // fraction strings are decimal-free "p/q"
  const Json half = cycloToJson(CycloNumber::fromRational(makeRat(-1, 2)));
  CHECK(half.at("coeffs")[0] == "-1/2");

  CHECK_THROWS_AS(cycloFromJson(Json::parse(R"({"conductor": 6, "coeffs": ["1"]})")),
                  input_error);
  CHECK_THROWS_AS(ratFromString("1.5"), input_error);
  CHECK_THROWS_AS(ratFromString("1/0"), input_error);
  CHECK(ratFromString("-4/6") == makeRat(-2, 3));
}

TEST_CASE("table JSON layout") {
  const TablePtr t = computeCharacterTable(namedGroup("S3"));
  const Json j = tableToJson(*t, "S3");
  CHECK(j.at("schema") == "artin-table/1");
  CHECK(j.at("group").at("name") == "S3");
  CHECK(j.at("exponent") == 6);
  REQUIRE(j.at("classes").size() == 3);
  CHECK(j.at("classes")[0].at("size") == 1);
  CHECK(j.at("classes")[1].at("size") == 3);
  CHECK(j.at("classes")[1].at("element_order") == 2);
  REQUIRE(j.at("irreducibles").size() == 3);
  CHECK(j.at("irreducibles")[2].at("degree") == 2);
  // the standard character row reads (2, 0, -1) as conductor-1 values
  CHECK(j.at("irreducibles")[2].at("values")[0].at("coeffs")[0] == "2");
  CHECK(j.at("irreducibles")[2].at("values")[2].at("coeffs")[0] == "-1");
}

TEST_CASE("decomposition and certificate JSON schemas") {
  const GroupPtr q8 = namedGroup("Q8");
  const TablePtr t = computeCharacterTable(q8);
  const ArtinDecomposition d = decomposeRational(t, t->irreducible(4));
  const Json dj = decompositionToJson(d, "Q8");
  CHECK(dj.at("schema") == "artin-decomposition/1");
  REQUIRE(dj.at("terms").size() == 2);
  CHECK(dj.at("terms")[0].at("subgroup_order") == 2);
  CHECK(dj.at("terms")[0].at("coefficient") == "-1/2");
  CHECK(dj.at("target")[0] == "2");

  const TheoremCertificate cert = certifyGaloisOrbitSum(t, t->irreducible(4));
  const Json cj = certificateToJson(cert, "Q8");
  CHECK(cj.at("schema") == "artin-cert/1");
  CHECK(cj.at("rationality_witness") == true);
  CHECK(cj.at("verified") == true);
  CHECK(cj.at("orbit").size() == 2);  // phi(4)
  CHECK(cj.at("decomposition").at("schema") == "artin-decomposition/1");

  const Json rj = kernelReportToJson(kernelConclusion(cert));
  CHECK(rj.at("schema") == "artin-kernel-report/1");
}

TEST_CASE("corpus manifest parsing") {
  SUBCASE("empty manifest gives an empty run that passes") {
    const auto entries = corpusFromManifest(Json::parse(R"({"groups": []})"));
    CHECK(entries.empty());
    const CorpusOutcome outcome = runCorpus(entries, CorpusOptions{});
    CHECK(outcome.report.at("ok") == true);
    CHECK(outcome.report.at("entries").empty());
  }

  SUBCASE("expected order mismatches are reported per entry") {
    const auto entries = corpusFromManifest(
        Json::parse(R"({"groups": [{"name": "S3", "expected_order": 7}]})"));
    const CorpusOutcome outcome = runCorpus(entries, CorpusOptions{});
    CHECK(outcome.anyEntryError);
    CHECK_FALSE(outcome.report.at("ok") == true);
  }

  SUBCASE("order bound 1 yields per-entry resource errors") {
    auto entries = corpusFromManifest(Json::parse(R"({"groups": [{"name": "S3"}]})"));
    CorpusOptions options;
    options.maxOrder = 1;
    const CorpusOutcome outcome = runCorpus(entries, options);
    CHECK(outcome.anyResourceError);
    CHECK(outcome.report.at("entries")[0].contains("error"));
  }

  SUBCASE("suite filter") {
    std::vector<std::string> suites;
    const auto entries = corpusFromManifest(
        Json::parse(R"({"groups": [{"name": "C4"}], "suites": ["table"]})"), &suites);
    CHECK(suites == std::vector<std::string>{"table"});
    CorpusOptions options;
    options.suites = suites;
    const CorpusOutcome outcome = runCorpus(entries, options);
    CHECK(outcome.report.at("ok") == true);
    for (const Json& check : outcome.report.at("entries")[0].at("checks"))
      CHECK(check.at("name").get<std::string>().rfind("power_map", 0) == std::string::npos);
  }
}

TEST_CASE("corpus runs are identical with different worker counts") {
  auto entries = corpusFromManifest(
      Json::parse(R"({"groups": [{"name": "C6"}, {"name": "S3"}, {"name": "Q8"}]})"));
  CorpusOptions serial;
  serial.jobs = 1;
  CorpusOptions parallel;
  parallel.jobs = 3;
  const std::string a = runCorpus(entries, serial).report.dump(2);
  const std::string b = runCorpus(entries, parallel).report.dump(2);
  CHECK(a == b);
}

TEST_CASE("cli: table") {
  const CommandResult ok = runCli("table C2");
  CHECK(ok.exitCode == 0);
  CHECK(ok.output.find("\"schema\": \"artin-table/1\"") != std::string::npos);

  // byte determinism across runs
  CHECK(runCli("table S4").output == runCli("table S4").output);

  const CommandResult pretty = runCli("--pretty table S3");
  CHECK(pretty.exitCode == 0);
  CHECK(pretty.output.find("order 6") != std::string::npos);

  const CommandResult malformed = runCli(R"(table '{"degree":3,"generators":[[[0,0,1]]]}')");
  CHECK(malformed.exitCode == 2);

  const CommandResult unknown = runCli("table E9");
  CHECK(unknown.exitCode == 2);

  const CommandResult bounded = runCli("table S4 --max-order 10");
  CHECK(bounded.exitCode == 3);
}

TEST_CASE("cli: decompose") {
  const CommandResult ok = runCli("decompose S3 --char 2");
  CHECK(ok.exitCode == 0);
  CHECK(ok.output.find("\"verified\": true") != std::string::npos);

  const CommandResult viaValues = runCli(R"(decompose S3 --char '[2,0,-1]')");
  CHECK(viaValues.exitCode == 0);

  const CommandResult irrational = runCli("decompose C3 --char 1");
  CHECK(irrational.exitCode == 2);
  CHECK(irrational.output.find("galois-average:1") != std::string::npos);

  const CommandResult prettyDecompose = runCli("--pretty decompose Q8 --char 4");
  CHECK(prettyDecompose.exitCode == 0);
  CHECK(prettyDecompose.output.find("verified: true") != std::string::npos);

  const CommandResult q8 = runCli("decompose Q8 --char 4");
  CHECK(q8.exitCode == 0);
  CHECK(q8.output.find("-1/2") != std::string::npos);
}

TEST_CASE("cli: certify") {
  const CommandResult c5 = runCli("certify C5 --char 1");
  CHECK(c5.exitCode == 0);
  CHECK(c5.output.find("\"schema\": \"artin-cert/1\"") != std::string::npos);

  const CommandResult report = runCli("certify C5 --char 1 --report");
  CHECK(report.exitCode == 0);
  CHECK(report.output.find("artin-kernel-report/1") != std::string::npos);

  const CommandResult trivialChar = runCli("certify S3 --char 0");
  CHECK(trivialChar.exitCode == 0);
}

TEST_CASE("cli: corpus with a small manifest") {
  const std::string path = "/tmp/artin_test_manifest.json";
  {
    std::ofstream out(path);
    out << R"({"groups": [{"name": "C4", "expected_order": 4}, {"name": "S3"}]})";
  }
  const CommandResult run = runCli("corpus --manifest " + path);
  CHECK(run.exitCode == 0);
  CHECK(run.output.find("\"ok\": true") != std::string::npos);

  const CommandResult rerun = runCli("corpus --manifest " + path);
  CHECK(run.output == rerun.output);

  const CommandResult prettyRun = runCli("--pretty corpus --manifest " + path);
  CHECK(prettyRun.exitCode == 0);
  CHECK(prettyRun.output.find("OK") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("cli: environment variable sets the order bound") {
  const char* bin = std::getenv("ARTIN_CLI_BIN");
  REQUIRE(bin != nullptr);
  const std::string command = std::string("ARTIN_MAX_ORDER=10 ") + bin + " table S4 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  while (fread(buffer.data(), 1, buffer.size(), pipe) > 0) {
  }
  const int status = pclose(pipe);
  CHECK(WEXITSTATUS(status) == 3);
}
