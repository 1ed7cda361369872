#include "g2forge/report.hpp"

namespace g2forge {

namespace embedded {
const char* reportSchemaJson();
}

std::string toolVersion() { return "0.1.0"; }

nlohmann::json Report::toJson() const {
  nlohmann::json j;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["timingsMs"] = timingsMs;
  j["status"] = status;
  if (!error.empty()) j["error"] = error;
  j["version"] = toolVersion();
  return j;
}

int Report::exitCode() const {
  if (status == "ok") return 0;
  if (status == "no-result") return 1;
  return 2;
}

namespace {

bool typeMatches(const nlohmann::json& doc, const std::string& type) {
  if (type == "object") return doc.is_object();
  if (type == "array") return doc.is_array();
  if (type == "string") return doc.is_string();
  if (type == "number") return doc.is_number();
  if (type == "integer") return doc.is_number_integer();
  if (type == "boolean") return doc.is_boolean();
  if (type == "null") return doc.is_null();
  return false;
}

bool validateAt(const nlohmann::json& doc, const nlohmann::json& schema, const std::string& path,
                std::string* why) {
  auto fail = [&](const std::string& message) {
    if (why) *why = path + ": " + message;
    return false;
  };
  if (schema.contains("enum")) {
    for (const auto& option : schema.at("enum"))
      if (doc == option) return true;
    return fail("value not in enum");
  }
  if (schema.contains("type") && !typeMatches(doc, schema.at("type").get<std::string>()))
    return fail("expected type " + schema.at("type").get<std::string>());
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema.at("required"))
        if (!doc.contains(key.get<std::string>()))
          return fail("missing required key \"" + key.get<std::string>() + "\"");
    const nlohmann::json* props =
        schema.contains("properties") ? &schema.at("properties") : nullptr;
    for (const auto& [key, value] : doc.items()) {
      if (props && props->contains(key)) {
        if (!validateAt(value, props->at(key), path + "/" + key, why)) return false;
      } else if (schema.contains("additionalProperties") &&
                 schema.at("additionalProperties").is_boolean() &&
                 !schema.at("additionalProperties").get<bool>()) {
        return fail("unexpected key \"" + key + "\"");
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    std::size_t i = 0;
    for (const auto& item : doc) {
      if (!validateAt(item, schema.at("items"), path + "/" + std::to_string(i), why))
        return false;
      ++i;
    }
  }
  return true;
}

}  // namespace

bool validateAgainstSchema(const nlohmann::json& doc, const nlohmann::json& schema,
                           std::string* why) {
  return validateAt(doc, schema, "$", why);
}

bool validateReportJson(const nlohmann::json& doc, std::string* why) {
  static const nlohmann::json schema = nlohmann::json::parse(embedded::reportSchemaJson());
  return validateAgainstSchema(doc, schema, why);
}

}  // namespace g2forge
