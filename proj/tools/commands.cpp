#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "g2forge/catalog.hpp"
#include "g2forge/certificates.hpp"
#include "g2forge/closed_space.hpp"
#include "g2forge/g2.hpp"
#include "g2forge/linalg.hpp"
#include "g2forge/parser.hpp"

namespace g2forge::cli {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

template <class F>
int guardedRun(const std::string& command, const OutputOptions& out, F&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    Report report;
    report.command = command;
    report.status = "error";
    report.error = e.what();
    return emit(report, out);
  }
}

nlohmann::json bindingsJson(const std::map<std::string, Rational>& bindings) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : bindings) j[k] = v.toString();
  return j;
}

bool isScalar(const nlohmann::json& v) {
  return v.is_primitive();
}

void renderValue(std::ostream& os, const nlohmann::json& v, int indent);

void renderKeyed(std::ostream& os, const std::string& key, const nlohmann::json& v, int indent) {
  std::string pad(indent, ' ');
  if (isScalar(v)) {
    os << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    return;
  }
  if (v.is_array()) {
    bool allScalar = true;
    for (const auto& e : v) allScalar = allScalar && isScalar(e);
    if (allScalar) {
      os << pad << key << ": [";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump());
      }
      os << "]\n";
      return;
    }
  }
  os << pad << key << ":\n";
  renderValue(os, v, indent + 2);
}

void renderValue(std::ostream& os, const nlohmann::json& v, int indent) {
  std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [k, sub] : v.items()) renderKeyed(os, k, sub, indent);
    return;
  }
  if (v.is_array()) {
    for (const auto& e : v) {
      if (isScalar(e)) {
        os << pad << "- " << (e.is_string() ? e.get<std::string>() : e.dump()) << "\n";
      } else {
        os << pad << "-\n";
        renderValue(os, e, indent + 2);
      }
    }
    return;
  }
  os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

std::string renderReportText(const nlohmann::json& doc) {
  std::ostringstream os;
  os << "command: " << doc.at("command").get<std::string>() << "\n";
  os << "status: " << doc.at("status").get<std::string>() << "\n";
  if (doc.contains("error")) os << "error: " << doc.at("error").get<std::string>() << "\n";
  if (!doc.at("inputs").empty()) {
    os << "inputs:\n";
    renderValue(os, doc.at("inputs"), 2);
  }
  if (!doc.at("results").empty()) {
    os << "results:\n";
    renderValue(os, doc.at("results"), 2);
  }
  if (!doc.at("timingsMs").empty()) {
    os << "timingsMs:\n";
    renderValue(os, doc.at("timingsMs"), 2);
  }
  os << "version: " << doc.at("version").get<std::string>() << "\n";
  return os.str();
}

nlohmann::json matrixJson(const QMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).toString());
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json matrixJson(const DMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json verdictJson(const G2Verdict& v) {
  nlohmann::json j;
  j["closed"] = v.closed;
  j["stable"] = v.stable;
  j["detB"] = v.detB.toString();
  j["definiteSign"] = v.definiteSign;
  j["isClosedG2"] = v.isClosedG2();
  if (v.hasMetric) {
    j["volumeCoefficient"] = v.volumeCoeff;
    j["metricNumeric"] = matrixJson(v.metricNumeric);
  }
  return j;
}

}  // namespace

std::map<std::string, Rational> parseBindings(const std::vector<std::string>& args) {
  std::map<std::string, Rational> bindings;
  for (const auto& arg : args) {
    std::size_t eq = arg.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("parameter binding must look like name=value: " + arg);
    std::string name = trimmed(arg.substr(0, eq));
    std::string value = trimmed(arg.substr(eq + 1));
    if (bindings.count(name)) throw std::invalid_argument("parameter bound twice: " + name);
    bindings.emplace(name, Rational::fromString(value));
  }
  return bindings;
}

LieAlgebra resolveAlgebra(const std::string& text,
                          const std::map<std::string, Rational>& bindings) {
  std::string body = trimmed(text);
  if (body.empty()) throw std::invalid_argument("empty algebra argument");
  if (body.front() == '(') {
    std::vector<std::string> names;
    for (const auto& [k, v] : bindings) names.push_back(k);
    LieAlgebra g = parseStructureEquations(body, names, "custom");
    if (!bindings.empty()) g = instantiate(g, bindings);
    JacobiResult jr = jacobiCheck(g);
    if (!jr.ok) {
      const auto& v = jr.violations.front();
      throw std::invalid_argument(
          "structure equations violate the Jacobi identity at (e" + std::to_string(v.i) + ",e" +
          std::to_string(v.j) + ",e" + std::to_string(v.k) + "), component e" +
          std::to_string(v.component) + ": residual " + v.residual.toString());
    }
    return g;
  }
  return Catalog::builtin().get(body, bindings);
}

int emit(Report& report, const OutputOptions& out) {
  nlohmann::json doc = report.toJson();
  std::string why;
  if (!validateReportJson(doc, &why))
    throw std::logic_error("internal: report does not match the shipped schema: " + why);
  std::string payload = out.json ? doc.dump(2) + "\n" : renderReportText(doc);
  if (!out.outPath.empty()) {
    std::ofstream file(out.outPath);
    if (!file) throw std::invalid_argument("cannot open output file: " + out.outPath);
    file << payload;
  } else {
    std::cout << payload;
  }
  return report.exitCode();
}

int runCatalog(const CatalogArgs& args, const OutputOptions& out) {
  return guardedRun("catalog", out, [&]() {
    Report report;
    report.command = "catalog";
    if (!args.filter.empty()) report.inputs["filter"] = args.filter;
    if (!args.table.empty()) report.inputs["table"] = args.table;

    Stopwatch sw;
    CatalogFilter filter;
    if (!args.filter.empty()) filter.tag = args.filter;
    if (!args.table.empty()) filter.group = args.table;
    auto rows = Catalog::builtin().list(filter);

    nlohmann::json names = nlohmann::json::array();
    nlohmann::json entries = nlohmann::json::array();
    for (const CatalogEntry* e : rows) {
      names.push_back(e->name);
      entries.push_back(e->toJson());
    }
    report.results["count"] = rows.size();
    report.results["names"] = names;
    report.results["entries"] = entries;
    report.timingsMs["list"] = sw.elapsedMs();
    return emit(report, out);
  });
}

int runInfo(const InfoArgs& args, const OutputOptions& out) {
  return guardedRun("info", out, [&]() {
    Report report;
    report.command = "info";
    auto bindings = parseBindings(args.params);
    report.inputs["algebra"] = args.algebra;
    if (!bindings.empty()) report.inputs["params"] = bindingsJson(bindings);

    Stopwatch sw;
    LieAlgebra g = resolveAlgebra(args.algebra, bindings);
    report.results["label"] = g.label();
    report.results["dimension"] = g.dim();
    report.results["equations"] = renderStructureEquationList(g);
    if (g.hasParams()) report.results["parameters"] = g.params();
    report.results["jacobi"] = jacobiCheck(g).ok;

    DerivedSeries series = derivedSeries(g);
    report.results["solvable"] = series.solvable;
    report.results["derivedSeriesDims"] = series.dims;

    if (g.hasParams()) {
      nlohmann::json conds = nlohmann::json::array();
      for (const auto& c : unimodularConditions(g))
        if (!c.isZero()) conds.push_back(c.toString() + " = 0");
      report.results["unimodular"] = conds.empty();
      if (!conds.empty()) report.results["unimodularConditions"] = conds;
    } else {
      report.results["unimodular"] = isUnimodular(g);
      Signature sig = signatureSymmetric(killingForm(g));
      report.results["killingSignature"] = {
          {"positive", sig.positive}, {"negative", sig.negative}, {"zero", sig.zero}};
      report.results["semisimple"] = isSemisimple(g);
      auto center = centerBasis(g);
      report.results["centerDimension"] = center.size();
      if (!center.empty()) {
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& v : center) {
          nlohmann::json row = nlohmann::json::array();
          for (const auto& c : v) row.push_back(c.toString());
          basis.push_back(row);
        }
        report.results["centerBasis"] = basis;
      }
    }
    report.timingsMs["analyze"] = sw.elapsedMs();
    return emit(report, out);
  });
}

int runClosed(const ClosedArgs& args, const OutputOptions& out) {
  return guardedRun("closed", out, [&]() {
    Report report;
    report.command = "closed";
    auto bindings = parseBindings(args.params);
    report.inputs["algebra"] = args.algebra;
    report.inputs["degree"] = args.degree;
    if (!bindings.empty()) report.inputs["params"] = bindingsJson(bindings);

    LieAlgebra g = resolveAlgebra(args.algebra, bindings);
    if (args.degree < 0 || args.degree > g.dim())
      throw std::invalid_argument("degree must be between 0 and the algebra dimension");

    Stopwatch sw;
    ClosedFormSpace space = closedSpace(g, args.degree);
    report.timingsMs["closedSpace"] = sw.elapsedMs();

    report.results["algebra"] = g.label();
    report.results["degree"] = args.degree;
    report.results["dimension"] = space.dimension();
    report.results["freeVariables"] = space.freeVars;
    report.results["genericElement"] = renderForm(space.genericElement);
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& f : space.basis) basis.push_back(renderForm(f));
    report.results["basis"] = basis;
    if (g.hasParams()) {
      nlohmann::json validity = nlohmann::json::array();
      for (const auto& p : space.validity)
        if (!p.isConstant()) validity.push_back(p.toString() + " != 0");
      if (!validity.empty()) report.results["validity"] = validity;
      if (!space.denominator.isConstant())
        report.results["denominator"] = space.denominator.toString();
    }
    return emit(report, out);
  });
}

int runObstruct(const ObstructArgs& args, const OutputOptions& out) {
  return guardedRun("obstruct", out, [&]() {
    Report report;
    report.command = "obstruct";
    auto bindings = parseBindings(args.params);
    report.inputs["algebra"] = args.algebra;
    if (!bindings.empty()) report.inputs["params"] = bindingsJson(bindings);
    if (args.sample > 0) {
      report.inputs["sample"] = args.sample;
      report.inputs["seed"] = args.seed;
    }

    LieAlgebra g = resolveAlgebra(args.algebra, bindings);
    if (g.dim() != 7)
      throw std::invalid_argument("obstruction certificates are about seven-dimensional algebras");
    report.results["algebra"] = g.label();

    Stopwatch sw;
    auto cert = obstruct(g);
    report.timingsMs["obstruct"] = sw.elapsedMs();

    if (g.hasParams()) {
      ClosedFormSpace space = closedSpace(g, 3);
      nlohmann::json validity = nlohmann::json::array();
      for (const auto& p : space.validity)
        if (!p.isConstant()) validity.push_back(p.toString() + " != 0");
      if (!validity.empty()) report.results["validity"] = validity;
    }

    if (cert) {
      std::string why;
      if (!verifyCertificate(g, *cert, &why))
        throw std::logic_error("internal: certificate failed re-verification: " + why);
      report.results["certificate"] = cert->toJson();
      report.results["reverified"] = true;
    } else {
      report.results["certificate"] = nullptr;
      report.status = "no-result";
    }

    if (args.sample > 0) {
      if (g.hasParams())
        throw std::invalid_argument("sampling requires all parameters bound; use --param");
      Stopwatch ssw;
      SampleCounts counts = sampleDefiniteness(g, args.sample, args.seed);
      report.timingsMs["sample"] = ssw.elapsedMs();
      report.results["sampling"] = {{"trials", args.sample},
                                    {"seed", args.seed},
                                    {"definite", counts.definite},
                                    {"indefinite", counts.indefinite},
                                    {"singular", counts.singular}};
    }
    return emit(report, out);
  });
}

int runVerify(const VerifyArgs& args, const OutputOptions& out) {
  return guardedRun("verify", out, [&]() {
    Report report;
    report.command = "verify";
    auto bindings = parseBindings(args.params);
    report.inputs["algebra"] = args.algebra;
    if (!bindings.empty()) report.inputs["params"] = bindingsJson(bindings);
    report.inputs["tolerance"] = args.tolerance;

    std::string formText = args.form;
    if (std::filesystem::exists(args.form)) {
      std::ifstream file(args.form);
      std::ostringstream buf;
      buf << file.rdbuf();
      formText = buf.str();
    }
    report.inputs["form"] = trimmed(formText);

    LieAlgebra g = resolveAlgebra(args.algebra, bindings);
    if (g.hasParams())
      throw std::invalid_argument("verification requires all parameters bound; use --param");
    if (g.dim() != 7) throw std::invalid_argument("verify expects a seven-dimensional algebra");

    KForm phi = parseForm(formText, 7, 3);
    Stopwatch sw;
    G2Verdict v = isG2(g, phi);
    report.results["algebra"] = g.label();
    report.results["verdict"] = verdictJson(v);
    if (v.isClosedG2())
      report.results["coclosed"] = isCoclosedNumeric(g, phi, args.tolerance);
    report.timingsMs["verify"] = sw.elapsedMs();
    report.status = v.isClosedG2() ? "ok" : "no-result";
    return emit(report, out);
  });
}

int runSearch(const SearchArgs& args, const OutputOptions& out) {
  return guardedRun("search", out, [&]() {
    Report report;
    report.command = "search";
    auto bindings = parseBindings(args.params);
    report.inputs["algebra"] = args.algebra;
    if (!bindings.empty()) report.inputs["params"] = bindingsJson(bindings);
    report.inputs["restarts"] = args.config.restarts;
    report.inputs["budget"] = args.config.evalBudget;
    report.inputs["seed"] = args.config.seed;
    report.inputs["maxDenominator"] = args.config.maxDenominator;
    report.inputs["serial"] = args.serial;

    LieAlgebra g = resolveAlgebra(args.algebra, bindings);
    if (g.hasParams())
      throw std::invalid_argument("search requires all parameters bound; use --param");
    if (g.dim() != 7) throw std::invalid_argument("search expects a seven-dimensional algebra");

    SearchConfig config = args.config;
    config.parallel = !args.serial;

    Stopwatch sw;
    SearchResult result = searchClosedG2(g, config);
    report.timingsMs["search"] = sw.elapsedMs();

    report.results["algebra"] = g.label();
    report.results["found"] = result.found;
    report.results["bestObjective"] = result.bestObjective;
    nlohmann::json stats = nlohmann::json::array();
    for (const auto& s : result.stats)
      stats.push_back({{"restart", s.restart},
                       {"bestObjective", s.bestObjective},
                       {"certified", s.certified}});
    report.results["restartStats"] = stats;

    if (result.found) {
      G2Verdict recheck = isG2(g, result.phi);
      if (!recheck.isClosedG2())
        throw std::logic_error("internal: search result failed exact re-verification");
      report.results["phi"] = renderForm(result.phi);
      report.results["restartIndex"] = result.restartIndex;
      report.results["denominatorUsed"] = result.denominatorUsed;
      report.results["verdict"] = verdictJson(recheck);
    } else {
      report.status = "no-result";
    }
    return emit(report, out);
  });
}

}  // namespace g2forge::cli
