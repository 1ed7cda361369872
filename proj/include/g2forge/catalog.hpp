#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "g2forge/lie_algebra.hpp"

namespace g2forge {

// Tag that may hold unconditionally, never, or exactly on the vanishing locus
// of a polynomial in the entry's parameters.
struct ConditionalTag {
  enum class State { no, yes, conditional };
  State state = State::no;
  Polynomial condition;  // meaningful only when conditional
  std::string display;   // human-readable condition, e.g. "a = -2"

  bool possible() const { return state != State::no; }
  // Truth at a full parameter binding.
  bool holdsAt(const std::map<std::string, Rational>& bindings) const;
};

// One inequality `poly <op> 0` restricting the parameter domain.
struct ParamConstraint {
  Polynomial poly;
  std::string op;  // "ne" | "gt" | "ge" | "lt" | "le"
  bool satisfiedAt(const std::map<std::string, Rational>& bindings) const;
  std::string render() const;
};

struct CatalogEntry {
  std::string name;
  int dim = 0;
  std::string equationText;
  std::vector<std::string> params;  // declared order = alias binding order
  std::vector<ParamConstraint> constraints;
  std::string group;   // "table1" | "table2" | "semisimple3" | "solvable4" | ...
  std::string source;  // short provenance-free description

  bool solvable = false;
  bool semisimple = false;
  ConditionalTag unimodular;
  ConditionalTag centerNontrivial;
  std::optional<std::string> expectedObstruction;
  std::optional<bool> expectedExistence;

  // Symbolic algebra (parameters left as variables).
  LieAlgebra algebra() const;
  nlohmann::json toJson() const;
  static CatalogEntry fromJson(const nlohmann::json& j);
};

struct CatalogFilter {
  std::optional<std::string> tag;    // "unimodular" | "solvable" | "semisimple" |
                                     // "nontrivial-center" | "existence" | "nonsolvable"
  std::optional<std::string> group;  // exact group, or "1"/"2" for the two tables
};

class Catalog {
 public:
  static Catalog fromJson(const nlohmann::json& doc);
  static const Catalog& builtin();  // embedded data

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& name) const;

  // Name resolution: exact entry; value-suffix alias ("r4_-1/2", "d4_1",
  // "r4p_1", "L7_3_-2"); composite names split on "+" (or a direct-sum sign)
  // resolved via directSum. Bindings instantiate declared parameters and are
  // checked against the entry's domain constraints.
  LieAlgebra get(const std::string& name,
                 const std::map<std::string, Rational>& bindings = {}) const;

  std::vector<const CatalogEntry*> list(const CatalogFilter& filter = {}) const;

  // True if the filter tag is recognized.
  static bool knownTag(const std::string& tag);

 private:
  std::vector<CatalogEntry> entries_;

  LieAlgebra resolve(const std::string& name,
                     const std::map<std::string, Rational>& bindings,
                     std::vector<std::string>& usedParams, int depth) const;
  LieAlgebra instantiateEntry(const CatalogEntry& entry,
                              const std::map<std::string, Rational>& bindings,
                              std::vector<std::string>& usedParams) const;
};

}  // namespace g2forge
