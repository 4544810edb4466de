#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "seifert/homology.hpp"
#include "seifert/surgery.hpp"

namespace seifert {

// Line-based text formats (blank lines and '#' comments ignored):
//
//   plumbing                    diagram
//   vertex <id> <framing>       component <id> <framing> <rot> <contact_coeff>
//   edge <a> <b>                link <i> <j> <linking number>    (i < j)
//
// Vertex and component ids must appear in order 0, 1, 2, ... Unlisted link
// entries are 0. Parsers throw ValidationError on malformed input.
std::string to_text(const PlumbingGraph& g);
std::string to_text(const SurgeryDiagram& d);
PlumbingGraph plumbing_from_text(std::string_view text);
SurgeryDiagram diagram_from_text(std::string_view text);

// JSON forms; integers are written as decimal strings.
nlohmann::json to_json(const PlumbingGraph& g);
nlohmann::json to_json(const SurgeryDiagram& d);
nlohmann::json to_json(const IntMatrix& m);
PlumbingGraph plumbing_from_json(const nlohmann::json& j);
SurgeryDiagram diagram_from_json(const nlohmann::json& j);
IntMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace seifert
