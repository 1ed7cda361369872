#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "g2forge/report.hpp"

#include <json.hpp>

namespace {

struct CliResult {
  int exitCode = -1;
  std::string output;
};

CliResult runCli(const std::string& args) {
  std::string cmd = std::string(G2FORGE_CLI_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof(buf), pipe)) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parseReport(const CliResult& r) {
  nlohmann::json doc = nlohmann::json::parse(r.output);
  std::string why;
  CHECK_MESSAGE(g2forge::validateReportJson(doc, &why), why);
  return doc;
}

const char* kPhi0 = "e123+e145+e167+e246-e257-e347-e356";

}  // namespace

TEST_CASE("cli exit codes") {
  CHECK(runCli("catalog").exitCode == 0);
  CHECK(runCli("catalog --filter nosuchtag").exitCode == 2);
  CHECK(runCli("catalog --no-such-flag").exitCode == 2);
  CHECK(runCli("").exitCode == 2);  // a subcommand is required
  CHECK(runCli("--help").exitCode == 0);
  CHECK(runCli("info nosuchalgebra").exitCode == 2);
  CHECK(runCli("closed R7 -k 9").exitCode == 2);
}

TEST_CASE("catalog listing and filters") {
  nlohmann::json full = parseReport(runCli("catalog --json"));
  CHECK(full["status"] == "ok");
  CHECK(full["results"]["count"] == 50);
  CHECK(full["results"]["entries"].size() == 50);

  CliResult filtered = runCli("catalog --filter unimodular --table 1 --json");
  CHECK(filtered.exitCode == 0);
  nlohmann::json doc = parseReport(filtered);
  auto names = doc["results"]["names"];
  REQUIRE(names.size() == 4);
  CHECK(names[0] == "L7_2");
  CHECK(names[1] == "L7_3");
  CHECK(names[2] == "L7_6");
  CHECK(names[3] == "L7_7");
}

TEST_CASE("info command") {
  nlohmann::json l72 = parseReport(runCli("info L7_2 --json"));
  CHECK(l72["results"]["unimodular"] == true);
  CHECK(l72["results"]["solvable"] == false);

  nlohmann::json rh3 = parseReport(runCli("info R+h3 --json"));
  CHECK(rh3["results"]["centerDimension"] == 2);

  CliResult bad = runCli("info L7_3 --param a=0 --json");
  CHECK(bad.exitCode == 2);
  nlohmann::json err = parseReport(bad);
  CHECK(err["status"] == "error");
  CHECK(!err["error"].get<std::string>().empty());
}

TEST_CASE("closed command") {
  nlohmann::json r7 = parseReport(runCli("closed R7 -k 3 --json"));
  CHECK(r7["results"]["dimension"] == 35);

  nlohmann::json app = parseReport(runCli("closed 'so3+aff+aff' --json"));
  CHECK(app["results"]["dimension"] == 16);

  // Text output carries the same result data.
  CliResult text = runCli("closed R7 -k 3");
  CHECK(text.exitCode == 0);
  CHECK(text.output.find("dimension: 35") != std::string::npos);
}

TEST_CASE("obstruct command") {
  CliResult h4 = runCli("obstruct 'so3+h4' --json");
  CHECK(h4.exitCode == 0);
  nlohmann::json doc = parseReport(h4);
  CHECK(doc["results"]["certificate"]["kind"] == "zero-diagonal");
  CHECK(doc["results"]["certificate"]["zeroIndices"] == nlohmann::json::array({7}));
  CHECK(doc["results"]["reverified"] == true);

  CliResult l76 = runCli("obstruct L7_6 --json");
  CHECK(l76.exitCode == 0);
  CHECK(parseReport(l76)["results"]["certificate"]["kind"] == "scripted-chain");

  CliResult none = runCli("obstruct 'sl2+r4_-1/2' --json");
  CHECK(none.exitCode == 1);
  nlohmann::json noneDoc = parseReport(none);
  CHECK(noneDoc["status"] == "no-result");
  CHECK(noneDoc["results"]["certificate"].is_null());

  CliResult sampled = runCli("obstruct 'so3+d4' --sample 40 --seed 3 --json");
  CHECK(sampled.exitCode == 0);
  nlohmann::json sdoc = parseReport(sampled);
  CHECK(sdoc["results"]["sampling"]["trials"] == 40);
  CHECK(sdoc["results"]["sampling"]["definite"] == 0);
}

TEST_CASE("verify command") {
  CliResult flat = runCli(std::string("verify R7 --form '") + kPhi0 + "' --json");
  CHECK(flat.exitCode == 0);
  nlohmann::json doc = parseReport(flat);
  CHECK(doc["results"]["verdict"]["closed"] == true);
  CHECK(doc["results"]["verdict"]["definiteSign"] == 1);
  CHECK(doc["results"]["coclosed"] == true);

  CHECK(runCli("verify R7 --form 'e123'").exitCode == 1);

  // Forms can come from files; this one is closed but not co-closed.
  auto path = std::filesystem::temp_directory_path() / "g2forge-test-form.txt";
  {
    std::ofstream out(path);
    out << "e157-e235-e267-3*e124-e126+e134-e136-e456+e367+e247\n";
  }
  CliResult fromFile =
      runCli("verify L7_3 --param a=-2 --form " + path.string() + " --json");
  CHECK(fromFile.exitCode == 0);
  nlohmann::json fdoc = parseReport(fromFile);
  CHECK(fdoc["results"]["verdict"]["isClosedG2"] == true);
  CHECK(fdoc["results"]["coclosed"] == false);
  std::filesystem::remove(path);
}

TEST_CASE("search command determinism") {
  std::string args = "search R7 --restarts 3 --budget 1200 --seed 7 --json";
  CliResult a = runCli(args);
  CliResult b = runCli(args);
  CHECK(a.exitCode == 0);
  CHECK(b.exitCode == 0);
  nlohmann::json da = parseReport(a);
  nlohmann::json db = parseReport(b);
  da.erase("timingsMs");
  db.erase("timingsMs");
  CHECK(da.dump() == db.dump());

  CHECK(runCli("search 'so3+d4' --restarts 2 --budget 100").exitCode == 1);
}

TEST_CASE("reproduce command") {
  CHECK(runCli("reproduce nosuchtarget").exitCode == 2);

  CliResult r = runCli("reproduce prop5.2 --json");
  CHECK(r.exitCode == 0);
  nlohmann::json doc = parseReport(r);
  CHECK(doc["results"]["failed"] == 0);
  CHECK(doc["results"]["passed"].get<int>() > 0);
}

TEST_CASE("reports can be written to a file") {
  auto path = std::filesystem::temp_directory_path() / "g2forge-test-report.json";
  CliResult r = runCli("info so3 --json --out " + path.string());
  CHECK(r.exitCode == 0);
  CHECK(r.output.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json doc = nlohmann::json::parse(in);
  std::string why;
  CHECK_MESSAGE(g2forge::validateReportJson(doc, &why), why);
  CHECK(doc["results"]["dimension"] == 3);
  std::filesystem::remove(path);
}
