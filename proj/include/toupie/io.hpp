#pragma once

// JSON interchange for presentations:
//   {vertices: [str], arrows: [{name, src, dst}],
//    relations: [[{coeff: "n" | "n/d", path: [arrow names]}]], order: [str]?}

#include "toupie/presentation.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace toupie {

struct TermSpec {
  std::string coeff = "1";
  std::vector<std::string> path;
};

struct PresentationSpec {
  std::vector<std::string> vertices;
  std::vector<ArrowSpec> arrows;
  std::vector<std::vector<TermSpec>> relations;
  std::vector<std::string> order;
};

/// Resolves names and builds the relations. Errors name the offending
/// location, e.g. "relations[1][0].path[2]".
Presentation build_presentation(const PresentationSpec& spec);

/// Schema check of an already parsed document. Errors carry a JSON path.
PresentationSpec spec_from_json(const nlohmann::json& doc);

/// Parses and builds. Syntax errors carry line and column.
Presentation parse_presentation(const std::string& text);

nlohmann::json presentation_to_json(const Presentation& p);

/// Relation as [{coeff, path}] in canonical (sorted) order.
nlohmann::json lincomb_to_json(const Quiver& q, const LinComb& c);
nlohmann::json path_to_json(const Quiver& q, const Path& p);

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

}  // namespace toupie
