#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace seifert {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

// Result of one CLI command. Exact values are stored as strings ("p/q" for
// rationals, decimal digits for integers), so the JSON form is lossless.
struct Report {
  std::string command;
  std::vector<std::string> argv;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json outputs = nlohmann::json::object();
  std::vector<Check> checks;
  // Present only when decimal rendering was requested; never read back as data.
  nlohmann::json approximations;

  bool ok() const;
  void check(std::string name, bool pass, std::string detail = {});

  nlohmann::json to_json() const;
  // Throws ValidationError on a document that does not follow the schema.
  static Report from_json(const nlohmann::json& j);

  friend bool operator==(const Report&, const Report&) = default;
};

// Labelled decimal approximations of every non-integral rational string in
// the outputs, keyed by dotted path.
nlohmann::json decimal_approximations(const nlohmann::json& outputs, int digits = 6);

// Aligned "key  value" text, one leaf per line.
std::string render_table(const Report& r);

}  // namespace seifert
