#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "g2forge/report.hpp"

namespace cli = g2forge::cli;

int main(int argc, char** argv) {
  CLI::App app{"exact certificates for closed G2-structures on seven-dimensional Lie algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(g2forge::toolVersion()));

  cli::OutputOptions out;
  auto addOutput = [&out](CLI::App* cmd) {
    cmd->add_flag("--json", out.json, "emit the report as JSON");
    cmd->add_option("--out", out.outPath, "write the report to a file instead of stdout");
  };
  auto addParams = [](CLI::App* cmd, std::vector<std::string>& params) {
    cmd->add_option("--param", params, "bind a parameter, name=value (repeatable)");
  };

  int exitCode = 0;

  cli::CatalogArgs catalogArgs;
  CLI::App* catalogCmd = app.add_subcommand("catalog", "list the built-in algebra catalog");
  catalogCmd->add_option("--filter", catalogArgs.filter, "keep entries carrying this tag");
  catalogCmd->add_option("--table", catalogArgs.table, "keep entries of one catalog group");
  addOutput(catalogCmd);
  catalogCmd->callback([&] { exitCode = cli::runCatalog(catalogArgs, out); });

  cli::InfoArgs infoArgs;
  CLI::App* infoCmd = app.add_subcommand("info", "structural invariants of an algebra");
  infoCmd->add_option("algebra", infoArgs.algebra, "catalog name, sum A+B, or (...) equations")
      ->required();
  addParams(infoCmd, infoArgs.params);
  addOutput(infoCmd);
  infoCmd->callback([&] { exitCode = cli::runInfo(infoArgs, out); });

  cli::ClosedArgs closedArgs;
  CLI::App* closedCmd = app.add_subcommand("closed", "basis of the space of closed k-forms");
  closedCmd->add_option("algebra", closedArgs.algebra, "catalog name, sum A+B, or (...) equations")
      ->required();
  closedCmd->add_option("-k,--degree", closedArgs.degree, "form degree (default 3)");
  addParams(closedCmd, closedArgs.params);
  addOutput(closedCmd);
  closedCmd->callback([&] { exitCode = cli::runClosed(closedArgs, out); });

  cli::ObstructArgs obstructArgs;
  CLI::App* obstructCmd =
      app.add_subcommand("obstruct", "search for an exact nonexistence certificate");
  obstructCmd
      ->add_option("algebra", obstructArgs.algebra, "catalog name, sum A+B, or (...) equations")
      ->required();
  addParams(obstructCmd, obstructArgs.params);
  obstructCmd->add_option("--sample", obstructArgs.sample,
                          "also sample this many random closed 3-forms and count definiteness");
  obstructCmd->add_option("--seed", obstructArgs.seed, "seed for --sample (default 1)");
  addOutput(obstructCmd);
  obstructCmd->callback([&] { exitCode = cli::runObstruct(obstructArgs, out); });

  cli::VerifyArgs verifyArgs;
  CLI::App* verifyCmd = app.add_subcommand("verify", "evaluate a candidate 3-form");
  verifyCmd->add_option("algebra", verifyArgs.algebra, "catalog name, sum A+B, or (...) equations")
      ->required();
  verifyCmd->add_option("--form", verifyArgs.form, "3-form literal, or a path to a file with one")
      ->required();
  addParams(verifyCmd, verifyArgs.params);
  verifyCmd->add_option("--tolerance", verifyArgs.tolerance,
                        "numeric tolerance for the coclosedness check (default 1e-6)");
  addOutput(verifyCmd);
  verifyCmd->callback([&] { exitCode = cli::runVerify(verifyArgs, out); });

  cli::SearchArgs searchArgs;
  CLI::App* searchCmd =
      app.add_subcommand("search", "randomized search for a closed G2-structure, certified exactly");
  searchCmd->add_option("algebra", searchArgs.algebra, "catalog name, sum A+B, or (...) equations")
      ->required();
  addParams(searchCmd, searchArgs.params);
  searchCmd->add_option("--restarts", searchArgs.config.restarts, "number of restarts (default 50)");
  searchCmd->add_option("--budget", searchArgs.config.evalBudget,
                        "objective evaluations per restart (default 2000)");
  searchCmd->add_option("--seed", searchArgs.config.seed, "random seed (default 1)");
  searchCmd->add_option("--max-denominator", searchArgs.config.maxDenominator,
                        "largest denominator tried when rationalizing (default 48)");
  searchCmd->add_flag("--serial", searchArgs.serial, "disable parallel restarts");
  addOutput(searchCmd);
  searchCmd->callback([&] { exitCode = cli::runSearch(searchArgs, out); });

  cli::ReproduceArgs reproduceArgs;
  CLI::App* reproduceCmd =
      app.add_subcommand("reproduce", "run a pinned reproduction target and report pass/fail");
  reproduceCmd
      ->add_option("target", reproduceArgs.target,
                   "appendix, prop4.6, prop4.7, prop4.8, prop5.1, prop5.2, main-theorem, or all")
      ->required();
  reproduceCmd->add_option("--sweep", reproduceArgs.sweeps,
                           "override a parameter grid, name=from:to:step (repeatable)");
  reproduceCmd->add_option("--seed", reproduceArgs.seed, "seed for search checks (default 1)");
  addOutput(reproduceCmd);
  reproduceCmd->callback([&] { exitCode = cli::runReproduce(reproduceArgs, out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return exitCode;
}
