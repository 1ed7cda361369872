#include "g2forge/catalog.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "g2forge/parser.hpp"

namespace g2forge {

namespace embedded {
const char* catalogJson();
}

bool ConditionalTag::holdsAt(const std::map<std::string, Rational>& bindings) const {
  switch (state) {
    case State::yes: return true;
    case State::no: return false;
    case State::conditional: return condition.evaluate(bindings).isZero();
  }
  return false;
}

bool ParamConstraint::satisfiedAt(const std::map<std::string, Rational>& bindings) const {
  Rational v = poly.evaluate(bindings);
  if (op == "ne") return !v.isZero();
  if (op == "gt") return v.sign() > 0;
  if (op == "ge") return v.sign() >= 0;
  if (op == "lt") return v.sign() < 0;
  if (op == "le") return v.sign() <= 0;
  throw std::logic_error("unknown constraint op \"" + op + "\"");
}

std::string ParamConstraint::render() const {
  static const std::map<std::string, std::string> sym = {
      {"ne", "!="}, {"gt", ">"}, {"ge", ">="}, {"lt", "<"}, {"le", "<="}};
  auto it = sym.find(op);
  return poly.toString() + " " + (it == sym.end() ? op : it->second) + " 0";
}

LieAlgebra CatalogEntry::algebra() const {
  LieAlgebra g = parseStructureEquations(equationText, params, name);
  if (g.dim() != dim)
    throw std::logic_error("catalog entry " + name + " declares dim " + std::to_string(dim) +
                           " but equations give " + std::to_string(g.dim()));
  return g;
}

namespace {

ConditionalTag tagFromJson(const nlohmann::json& j, const std::vector<std::string>& params) {
  ConditionalTag t;
  if (j.is_boolean()) {
    t.state = j.get<bool>() ? ConditionalTag::State::yes : ConditionalTag::State::no;
    return t;
  }
  t.state = ConditionalTag::State::conditional;
  t.condition = parsePolynomialExpression(j.at("condition").get<std::string>(), params);
  t.display = j.value("display", t.condition.toString() + " = 0");
  return t;
}

nlohmann::json tagToJson(const ConditionalTag& t) {
  switch (t.state) {
    case ConditionalTag::State::yes: return true;
    case ConditionalTag::State::no: return false;
    case ConditionalTag::State::conditional:
      return {{"condition", t.condition.toString()}, {"display", t.display}};
  }
  return false;
}

}  // namespace

CatalogEntry CatalogEntry::fromJson(const nlohmann::json& j) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.dim = j.at("dim").get<int>();
  e.equationText = j.at("equations").get<std::string>();
  if (j.contains("params")) e.params = j.at("params").get<std::vector<std::string>>();
  if (j.contains("constraints")) {
    for (const auto& c : j.at("constraints")) {
      ParamConstraint pc;
      pc.poly = parsePolynomialExpression(c.at("poly").get<std::string>(), e.params);
      pc.op = c.at("op").get<std::string>();
      e.constraints.push_back(std::move(pc));
    }
  }
  e.group = j.value("group", std::string());
  e.source = j.value("source", std::string());
  const auto& tags = j.at("tags");
  e.solvable = tags.value("solvable", false);
  e.semisimple = tags.value("semisimple", false);
  e.unimodular = tagFromJson(tags.at("unimodular"), e.params);
  e.centerNontrivial = tagFromJson(tags.at("centerNontrivial"), e.params);
  if (tags.contains("expectedObstruction"))
    e.expectedObstruction = tags.at("expectedObstruction").get<std::string>();
  if (tags.contains("expectedExistence"))
    e.expectedExistence = tags.at("expectedExistence").get<bool>();
  return e;
}

nlohmann::json CatalogEntry::toJson() const {
  nlohmann::json j;
  j["name"] = name;
  j["dim"] = dim;
  j["equations"] = equationText;
  if (!params.empty()) j["params"] = params;
  if (!constraints.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : constraints) arr.push_back({{"poly", c.poly.toString()}, {"op", c.op}});
    j["constraints"] = arr;
  }
  if (!group.empty()) j["group"] = group;
  if (!source.empty()) j["source"] = source;
  nlohmann::json tags;
  tags["solvable"] = solvable;
  tags["semisimple"] = semisimple;
  tags["unimodular"] = tagToJson(unimodular);
  tags["centerNontrivial"] = tagToJson(centerNontrivial);
  if (expectedObstruction) tags["expectedObstruction"] = *expectedObstruction;
  if (expectedExistence) tags["expectedExistence"] = *expectedExistence;
  j["tags"] = tags;
  return j;
}

Catalog Catalog::fromJson(const nlohmann::json& doc) {
  Catalog c;
  std::set<std::string> seen;
  for (const auto& item : doc.at("entries")) {
    CatalogEntry e = CatalogEntry::fromJson(item);
    if (!seen.insert(e.name).second)
      throw std::invalid_argument("duplicate catalog entry \"" + e.name + "\"");
    c.entries_.push_back(std::move(e));
  }
  return c;
}

const Catalog& Catalog::builtin() {
  static const Catalog c = fromJson(nlohmann::json::parse(embedded::catalogJson()));
  return c;
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

namespace {

std::string normalizeName(const std::string& name) {
  std::string out;
  for (std::size_t i = 0; i < name.size();) {
    // UTF-8 direct-sum sign becomes '+'.
    if (name.compare(i, 3, "\xe2\x8a\x95") == 0) {
      out += '+';
      i += 3;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(name[i]))) out += name[i];
    ++i;
  }
  return out;
}

std::vector<std::string> splitTop(const std::string& name, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : name) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::optional<std::vector<Rational>> parseValueTokens(const std::string& rest,
                                                      std::size_t count) {
  std::vector<std::string> tokens = splitTop(rest, '_');
  if (tokens.size() != count) return std::nullopt;
  std::vector<Rational> values;
  for (const auto& t : tokens) {
    try {
      values.push_back(Rational::fromString(t));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return values;
}

// Stem of an entry name for value aliases: "r4_lambda" -> "r4",
// "r4_mu_lambda" -> "r4"; names not ending in their parameter list keep
// only themselves ("r4p", "L7_3").
std::vector<std::string> aliasStems(const CatalogEntry& e) {
  std::vector<std::string> stems = {e.name};
  std::string suffix;
  for (const auto& p : e.params) suffix += "_" + p;
  if (!suffix.empty() && e.name.size() > suffix.size() &&
      e.name.compare(e.name.size() - suffix.size(), suffix.size(), suffix) == 0)
    stems.push_back(e.name.substr(0, e.name.size() - suffix.size()));
  return stems;
}

}  // namespace

LieAlgebra Catalog::instantiateEntry(const CatalogEntry& entry,
                                     const std::map<std::string, Rational>& bindings,
                                     std::vector<std::string>& usedParams) const {
  LieAlgebra g = entry.algebra();
  if (entry.params.empty()) return g;
  std::map<std::string, Rational> relevant;
  for (const auto& p : entry.params) {
    auto it = bindings.find(p);
    if (it != bindings.end()) relevant.emplace(p, it->second);
  }
  if (relevant.empty()) return g;  // symbolic
  if (relevant.size() != entry.params.size())
    throw std::invalid_argument("entry " + entry.name +
                                " needs values for all of its parameters");
  for (const auto& c : entry.constraints)
    if (!c.satisfiedAt(relevant))
      throw std::domain_error("parameter out of domain for " + entry.name + ": need " +
                              c.render());
  LieAlgebra inst = instantiate(g, relevant);
  std::string label = entry.name + "(";
  bool first = true;
  for (const auto& p : entry.params) {
    if (!first) label += ",";
    first = false;
    label += p + "=" + relevant.at(p).toString();
  }
  inst.setLabel(label + ")");
  for (const auto& p : entry.params) usedParams.push_back(p);
  return inst;
}

LieAlgebra Catalog::resolve(const std::string& rawName,
                            const std::map<std::string, Rational>& bindings,
                            std::vector<std::string>& usedParams, int depth) const {
  if (depth > 4) throw std::invalid_argument("algebra name nested too deeply");
  if (const CatalogEntry* e = find(rawName)) return instantiateEntry(*e, bindings, usedParams);
  std::string name = normalizeName(rawName);
  if (const CatalogEntry* e = find(name)) return instantiateEntry(*e, bindings, usedParams);

  // Value-suffix aliases such as "r4_-1/2", "r4p_1", "L7_3_-2".
  for (const auto& e : entries_) {
    if (e.params.empty()) continue;
    for (const auto& stem : aliasStems(e)) {
      if (name.size() <= stem.size() + 1 || name.compare(0, stem.size(), stem) != 0 ||
          name[stem.size()] != '_')
        continue;
      auto values = parseValueTokens(name.substr(stem.size() + 1), e.params.size());
      if (!values) continue;
      std::map<std::string, Rational> aliasBindings;
      for (std::size_t i = 0; i < e.params.size(); ++i)
        aliasBindings.emplace(e.params[i], (*values)[i]);
      return instantiateEntry(e, aliasBindings, usedParams);
    }
  }

  // Composite names resolved as direct sums.
  std::vector<std::string> parts = splitTop(name, '+');
  if (parts.size() > 1) {
    std::optional<LieAlgebra> sum;
    for (const auto& part : parts) {
      if (part.empty()) throw std::invalid_argument("empty summand in \"" + rawName + "\"");
      LieAlgebra component = resolve(part, bindings, usedParams, depth + 1);
      sum = sum ? directSum(*sum, component) : component;
    }
    return *sum;
  }
  throw std::invalid_argument("unknown algebra \"" + rawName + "\"");
}

LieAlgebra Catalog::get(const std::string& name,
                        const std::map<std::string, Rational>& bindings) const {
  std::vector<std::string> usedParams;
  LieAlgebra g = resolve(name, bindings, usedParams, 0);
  for (const auto& [key, value] : bindings) {
    if (std::find(usedParams.begin(), usedParams.end(), key) == usedParams.end())
      throw std::invalid_argument("parameter \"" + key + "\" does not apply to \"" + name +
                                  "\"");
  }
  return g;
}

bool Catalog::knownTag(const std::string& tag) {
  static const std::set<std::string> tags = {"unimodular",       "solvable", "semisimple",
                                             "nontrivial-center", "center",   "existence",
                                             "nonsolvable"};
  return tags.count(tag) != 0;
}

std::vector<const CatalogEntry*> Catalog::list(const CatalogFilter& filter) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_) {
    if (filter.group) {
      std::string want = *filter.group;
      if (want == "1") want = "table1";
      if (want == "2") want = "table2";
      if (e.group != want) continue;
    }
    if (filter.tag) {
      const std::string& t = *filter.tag;
      if (!knownTag(t)) throw std::invalid_argument("unknown filter tag \"" + t + "\"");
      bool keep = false;
      if (t == "unimodular") keep = e.unimodular.possible();
      else if (t == "solvable") keep = e.solvable;
      else if (t == "nonsolvable") keep = !e.solvable;
      else if (t == "semisimple") keep = e.semisimple;
      else if (t == "nontrivial-center" || t == "center") keep = e.centerNontrivial.possible();
      else if (t == "existence") keep = e.expectedExistence && *e.expectedExistence;
      if (!keep) continue;
    }
    out.push_back(&e);
  }
  return out;
}

}  // namespace g2forge
