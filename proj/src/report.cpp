#include "seifert/report.hpp"

#include <algorithm>
#include <regex>
#include <sstream>
#include <utility>

#include "seifert/error.hpp"
#include "seifert/rational.hpp"

namespace seifert {

using nlohmann::json;

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::check(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

json Report::to_json() const {
  json j;
  j["command"] = command;
  j["argv"] = argv;
  j["inputs"] = inputs;
  j["outputs"] = outputs;
  json cs = json::array();
  for (const auto& c : checks) cs.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = cs;
  j["ok"] = ok();
  if (!approximations.is_null()) j["approximations"] = approximations;
  return j;
}

Report Report::from_json(const json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.argv = j.at("argv").get<std::vector<std::string>>();
    r.inputs = j.at("inputs");
    r.outputs = j.at("outputs");
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("detail").get<std::string>()});
    }
    if (j.contains("approximations")) r.approximations = j.at("approximations");
    if (j.at("ok").get<bool>() != r.ok()) throw ValidationError("report 'ok' flag contradicts its checks");
    return r;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

namespace {

void collect_rationals(const json& node, const std::string& path, int digits, json& out) {
  static const std::regex fraction(R"(-?[0-9]+/[0-9]+)");
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) collect_rationals(value, path.empty() ? key : path + "." + key, digits, out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) collect_rationals(node[i], path + "[" + std::to_string(i) + "]", digits, out);
  } else if (node.is_string()) {
    const auto& s = node.get_ref<const std::string&>();
    if (std::regex_match(s, fraction)) out[path] = "approx " + Rational::parse(s).approximate_decimal(digits);
  }
}

void flatten(const json& node, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (node.is_object()) {
    if (node.empty()) rows.emplace_back(path, "{}");
    for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, rows);
    return;
  }
  if (node.is_array()) {
    const bool scalars = std::all_of(node.begin(), node.end(), [](const json& e) { return e.is_primitive(); });
    if (scalars) {
      std::string joined;
      for (const auto& e : node) joined += (joined.empty() ? "" : ", ") + (e.is_string() ? e.get<std::string>() : e.dump());
      rows.emplace_back(path, "[" + joined + "]");
    } else {
      for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "[" + std::to_string(i) + "]", rows);
    }
    return;
  }
  rows.emplace_back(path, node.is_string() ? node.get<std::string>() : node.dump());
}

}  // namespace

json decimal_approximations(const json& outputs, int digits) {
  json out = json::object();
  collect_rationals(outputs, "", digits, out);
  return out;
}

std::string render_table(const Report& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("command", r.command);
  flatten(r.inputs, "inputs", rows);
  flatten(r.outputs, "outputs", rows);
  for (const auto& c : r.checks) {
    rows.emplace_back("check." + c.name, std::string(c.pass ? "pass" : "FAIL") + (c.detail.empty() ? "" : "  " + c.detail));
  }
  if (!r.approximations.is_null()) flatten(r.approximations, "approximations", rows);
  rows.emplace_back("ok", r.ok() ? "true" : "false");
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  std::ostringstream out;
  for (const auto& [key, value] : rows) out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
  return out.str();
}

}  // namespace seifert
