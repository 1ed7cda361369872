#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2forge/lie_algebra.hpp"
#include "g2forge/rational.hpp"
#include "g2forge/report.hpp"
#include "g2forge/search.hpp"

namespace g2forge::cli {

struct OutputOptions {
  bool json = false;
  std::string outPath;  // empty -> stdout
};

struct CatalogArgs {
  std::string filter;
  std::string table;
};

struct InfoArgs {
  std::string algebra;
  std::vector<std::string> params;
};

struct ClosedArgs {
  std::string algebra;
  int degree = 3;
  std::vector<std::string> params;
};

struct ObstructArgs {
  std::string algebra;
  std::vector<std::string> params;
  long sample = 0;
  std::uint64_t seed = 1;
};

struct VerifyArgs {
  std::string algebra;
  std::string form;  // literal form text, or a path to a file holding one
  std::vector<std::string> params;
  double tolerance = 1e-6;
};

struct SearchArgs {
  std::string algebra;
  std::vector<std::string> params;
  SearchConfig config;
  bool serial = false;
};

struct ReproduceArgs {
  std::string target;
  std::vector<std::string> sweeps;  // "mu=a:b:step" overrides for default grids
  std::uint64_t seed = 1;
};

int runCatalog(const CatalogArgs& args, const OutputOptions& out);
int runInfo(const InfoArgs& args, const OutputOptions& out);
int runClosed(const ClosedArgs& args, const OutputOptions& out);
int runObstruct(const ObstructArgs& args, const OutputOptions& out);
int runVerify(const VerifyArgs& args, const OutputOptions& out);
int runSearch(const SearchArgs& args, const OutputOptions& out);
int runReproduce(const ReproduceArgs& args, const OutputOptions& out);

// "k=v" pairs -> rational bindings (repeated keys rejected).
std::map<std::string, Rational> parseBindings(const std::vector<std::string>& args);

// Catalog name, composite "A + B", or inline "(...)" structure equations.
LieAlgebra resolveAlgebra(const std::string& text,
                          const std::map<std::string, Rational>& bindings);

// Validates against the shipped schema, renders text or JSON, honors --out.
// Returns the report's exit code.
int emit(Report& report, const OutputOptions& out);

}  // namespace g2forge::cli
