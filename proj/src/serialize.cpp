#include "seifert/serialize.hpp"

#include <sstream>
#include <vector>

#include "seifert/error.hpp"

namespace seifert {

using nlohmann::json;

namespace {

// Splits the text into token lists, one per meaningful line.
std::vector<std::vector<std::string>> tokenize(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

Integer integer_token(const std::string& token) {
  try {
    return parse_integer(token);
  } catch (const DomainError&) {
    throw ValidationError("expected an integer, got '" + token + "'");
  }
}

std::size_t index_token(const std::string& token) {
  const Integer v = integer_token(token);
  if (v < 0 || !v.fits_ulong_p()) throw ValidationError("expected an index, got '" + token + "'");
  return v.get_ui();
}

int coefficient_token(const std::string& token) {
  const Integer v = integer_token(token);
  if (v != 1 && v != -1) throw ValidationError("contact coefficient must be +1 or -1");
  return static_cast<int>(v.get_si());
}

void expect_arity(const std::vector<std::string>& tokens, std::size_t n) {
  if (tokens.size() != n) throw ValidationError("malformed line starting with '" + tokens.front() + "'");
}

Integer integer_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return integer_token(j.get<std::string>());
  throw ValidationError("expected an integer string in JSON");
}

}  // namespace

std::string to_text(const PlumbingGraph& g) {
  std::ostringstream out;
  out << "# plumbing graph\n";
  for (std::size_t v = 0; v < g.framings.size(); ++v) out << "vertex " << v << ' ' << g.framings[v] << '\n';
  for (const auto& [a, b] : g.edges) out << "edge " << a << ' ' << b << '\n';
  return out.str();
}

std::string to_text(const SurgeryDiagram& d) {
  std::ostringstream out;
  out << "# contact surgery diagram\n";
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    out << "component " << i << ' ' << c.framing << ' ' << c.rot << ' ' << c.contact_coeff << '\n';
  }
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    for (std::size_t j = i + 1; j < d.components.size(); ++j) {
      if (d.linking(i, j) != 0) out << "link " << i << ' ' << j << ' ' << d.linking(i, j) << '\n';
    }
  }
  return out.str();
}

PlumbingGraph plumbing_from_text(std::string_view text) {
  PlumbingGraph g;
  for (const auto& tokens : tokenize(text)) {
    if (tokens[0] == "vertex") {
      expect_arity(tokens, 3);
      if (index_token(tokens[1]) != g.framings.size()) throw ValidationError("vertex ids must be consecutive from 0");
      g.framings.push_back(integer_token(tokens[2]));
    } else if (tokens[0] == "edge") {
      expect_arity(tokens, 3);
      g.edges.emplace_back(index_token(tokens[1]), index_token(tokens[2]));
    } else {
      throw ValidationError("unknown plumbing record '" + tokens[0] + "'");
    }
  }
  for (const auto& [a, b] : g.edges) {
    if (a >= g.framings.size() || b >= g.framings.size() || a == b) throw ValidationError("edge refers to a missing vertex");
  }
  return g;
}

SurgeryDiagram diagram_from_text(std::string_view text) {
  SurgeryDiagram d;
  struct Link {
    std::size_t i, j;
    Integer value;
  };
  std::vector<Link> links;
  for (const auto& tokens : tokenize(text)) {
    if (tokens[0] == "component") {
      expect_arity(tokens, 5);
      if (index_token(tokens[1]) != d.components.size()) throw ValidationError("component ids must be consecutive from 0");
      d.components.push_back({integer_token(tokens[2]), integer_token(tokens[3]), coefficient_token(tokens[4])});
    } else if (tokens[0] == "link") {
      expect_arity(tokens, 4);
      links.push_back({index_token(tokens[1]), index_token(tokens[2]), integer_token(tokens[3])});
    } else {
      throw ValidationError("unknown diagram record '" + tokens[0] + "'");
    }
  }
  const std::size_t n = d.components.size();
  d.linking = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) d.linking(i, i) = d.components[i].framing;
  for (const auto& l : links) {
    if (l.i >= l.j || l.j >= n) throw ValidationError("link entries need i < j < component count");
    d.linking(l.i, l.j) = l.value;
    d.linking(l.j, l.i) = l.value;
  }
  d.validate();
  return d;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw ValidationError("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = integer_json(j[r][c]);
  }
  return m;
}

json to_json(const PlumbingGraph& g) {
  json framings = json::array();
  for (const auto& f : g.framings) framings.push_back(f.get_str());
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return {{"framings", framings}, {"edges", edges}};
}

json to_json(const SurgeryDiagram& d) {
  json components = json::array();
  for (const auto& c : d.components) {
    components.push_back({{"framing", c.framing.get_str()}, {"rot", c.rot.get_str()}, {"contact_coeff", c.contact_coeff}});
  }
  return {{"components", components}, {"linking", to_json(d.linking)}};
}

PlumbingGraph plumbing_from_json(const json& j) {
  try {
    PlumbingGraph g;
    for (const auto& f : j.at("framings")) g.framings.push_back(integer_json(f));
    for (const auto& e : j.at("edges")) {
      g.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    }
    for (const auto& [a, b] : g.edges) {
      if (a >= g.framings.size() || b >= g.framings.size() || a == b) throw ValidationError("edge refers to a missing vertex");
    }
    return g;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed plumbing JSON: ") + e.what());
  }
}

SurgeryDiagram diagram_from_json(const json& j) {
  try {
    SurgeryDiagram d;
    for (const auto& c : j.at("components")) {
      d.components.push_back({integer_json(c.at("framing")), integer_json(c.at("rot")), c.at("contact_coeff").get<int>()});
    }
    d.linking = matrix_from_json(j.at("linking"));
    d.validate();
    return d;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed diagram JSON: ") + e.what());
  }
}

}  // namespace seifert
