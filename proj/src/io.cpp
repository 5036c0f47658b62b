#include "toupie/io.hpp"

#include <openssl/evp.h>

#include <cstdio>

namespace toupie {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(Errc::invalid_input, "at " + where + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing key '") + key + "'");
  return *it;
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) schema_error(where, "expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& where) {
  if (!v.is_array()) schema_error(where, "expected an array");
  return v;
}

std::vector<std::string> string_list(const json& v, const std::string& where) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const json& x : as_array(v, where)) {
    out.push_back(as_string(x, where + "[" + std::to_string(i) + "]"));
    ++i;
  }
  return out;
}

}  // namespace

PresentationSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) schema_error("$", "expected an object");
  for (const auto& [key, value] : doc.items())
    if (key != "vertices" && key != "arrows" && key != "relations" && key != "order")
      schema_error("$." + key, "unknown key");
  PresentationSpec spec;
  spec.vertices = string_list(member(doc, "vertices", "$"), "$.vertices");
  std::size_t i = 0;
  for (const json& a : as_array(member(doc, "arrows", "$"), "$.arrows")) {
    const std::string where = "$.arrows[" + std::to_string(i++) + "]";
    if (!a.is_object()) schema_error(where, "expected an object");
    spec.arrows.push_back({as_string(member(a, "name", where), where + ".name"),
                           as_string(member(a, "src", where), where + ".src"),
                           as_string(member(a, "dst", where), where + ".dst")});
  }
  i = 0;
  for (const json& rel : as_array(member(doc, "relations", "$"), "$.relations")) {
    const std::string where = "$.relations[" + std::to_string(i++) + "]";
    std::vector<TermSpec> terms;
    std::size_t j = 0;
    for (const json& t : as_array(rel, where)) {
      const std::string tw = where + "[" + std::to_string(j++) + "]";
      if (!t.is_object()) schema_error(tw, "expected an object");
      TermSpec term;
      term.coeff = as_string(member(t, "coeff", tw), tw + ".coeff");
      term.path = string_list(member(t, "path", tw), tw + ".path");
      terms.push_back(std::move(term));
    }
    spec.relations.push_back(std::move(terms));
  }
  if (doc.contains("order")) spec.order = string_list(doc["order"], "$.order");
  return spec;
}

Presentation build_presentation(const PresentationSpec& spec) {
  Presentation p;
  p.quiver = Quiver::build(spec.vertices, spec.arrows);
  p.order = spec.order;
  for (std::size_t i = 0; i < spec.order.size(); ++i)
    if (!p.quiver.find_arrow(spec.order[i]))
      schema_error("$.order[" + std::to_string(i) + "]",
                   "unknown arrow '" + spec.order[i] + "'");
  for (std::size_t i = 0; i < spec.relations.size(); ++i) {
    const std::string where = "$.relations[" + std::to_string(i) + "]";
    if (spec.relations[i].empty()) schema_error(where, "empty relation");
    LinComb rel;
    for (std::size_t j = 0; j < spec.relations[i].size(); ++j) {
      const TermSpec& t = spec.relations[i][j];
      const std::string tw = where + "[" + std::to_string(j) + "]";
      Scalar c;
      try {
        c = parse_scalar(t.coeff);
      } catch (const Error& e) {
        schema_error(tw + ".coeff", e.what());
      }
      if (t.path.empty()) schema_error(tw + ".path", "empty path");
      std::vector<ArrowId> arrows;
      for (std::size_t k = 0; k < t.path.size(); ++k) {
        auto a = p.quiver.find_arrow(t.path[k]);
        if (!a)
          schema_error(tw + ".path[" + std::to_string(k) + "]",
                       "unknown arrow '" + t.path[k] + "'");
        arrows.push_back(*a);
      }
      try {
        rel.add(Path::from_arrows(p.quiver, arrows), c);
      } catch (const Error& e) {
        schema_error(tw + ".path", "arrows do not form a path");
      }
    }
    if (rel.is_zero()) schema_error(where, "relation is zero");
    p.relations.push_back(std::move(rel));
  }
  return p;
}

Presentation parse_presentation(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::invalid_input, std::string("JSON syntax: ") + e.what());
  }
  return build_presentation(spec_from_json(doc));
}

json path_to_json(const Quiver& q, const Path& p) {
  json out = json::array();
  for (ArrowId a : p.arrows()) out.push_back(q.arrow(a).name);
  return out;
}

json lincomb_to_json(const Quiver& q, const LinComb& c) {
  json out = json::array();
  for (const auto& [p, x] : c.terms())
    out.push_back({{"coeff", format_scalar(x)}, {"path", path_to_json(q, p)}});
  return out;
}

json presentation_to_json(const Presentation& p) {
  json out;
  out["vertices"] = p.quiver.vertices();
  json arrows = json::array();
  for (const Arrow& a : p.quiver.arrows())
    arrows.push_back({{"name", a.name},
                      {"src", p.quiver.vertex_name(a.source)},
                      {"dst", p.quiver.vertex_name(a.target)}});
  out["arrows"] = std::move(arrows);
  json rels = json::array();
  for (const LinComb& r : p.relations) rels.push_back(lincomb_to_json(p.quiver, r));
  out["relations"] = std::move(rels);
  if (!p.order.empty()) out["order"] = p.order;
  return out;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

}  // namespace toupie
