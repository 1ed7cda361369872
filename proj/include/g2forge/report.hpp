#pragma once

#include <chrono>
#include <map>
#include <string>

#include <json.hpp>

namespace g2forge {

std::string toolVersion();

// Uniform result envelope for CLI commands: what ran, with which inputs,
// what came out, and how long each stage took.
struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::map<std::string, double> timingsMs;
  std::string status = "ok";  // ok | no-result | error
  std::string error;

  nlohmann::json toJson() const;
  int exitCode() const;  // ok -> 0, no-result -> 1, error -> 2
};

// Structural validation against the JSON-schema subset used by the shipped
// schema: type, required, properties, enum, items, additionalProperties.
bool validateAgainstSchema(const nlohmann::json& doc, const nlohmann::json& schema,
                           std::string* why = nullptr);

// Validates against the schema embedded in the binary.
bool validateReportJson(const nlohmann::json& doc, std::string* why = nullptr);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsedMs() const {
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }
  void reset() { start_ = std::chrono::steady_clock::now(); }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace g2forge
