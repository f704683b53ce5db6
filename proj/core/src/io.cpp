#include "latsize/io.hpp"

#include <json.hpp>

#include <cctype>

namespace latsize {

namespace {

using nlohmann::json;

// 2^53: the largest magnitude we emit as a plain JSON number.
const Int kJsonSafe = Int(1) << 53;

Int coordinate_from(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_string()) return parse_decimal_int(j.get<std::string>());
  if (j.is_number_float())
    throw ParseError("polytope document: non-integer coordinate " + j.dump());
  throw ParseError("polytope document: bad coordinate " + j.dump());
}

json coordinate_to(const Int& v) {
  if (v <= kJsonSafe && v >= -kJsonSafe) return json(v.convert_to<long long>());
  return json(v.str());
}

}  // namespace

Int parse_decimal_int(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size())
    throw ParseError("expected a decimal integer, got '" + text + "'");
  for (; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected a decimal integer, got '" + text + "'");
  return Int(text);
}

PolytopeDocument parse_polytope_document(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("polytope document: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("polytope document: expected a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("polytope document: missing integer field 'dim'");
  if (!j.contains("points") || !j["points"].is_array() || j["points"].empty())
    throw ParseError("polytope document: missing nonempty array 'points'");

  PolytopeDocument doc;
  doc.dim = j["dim"].get<int>();
  if (doc.dim < 1) throw ParseError("polytope document: dim must be >= 1");
  for (const json& row : j["points"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != doc.dim)
      throw ParseError("polytope document: each point needs exactly dim coordinates");
    Vec p;
    p.reserve(row.size());
    for (const json& c : row) p.push_back(coordinate_from(c));
    doc.points.push_back(std::move(p));
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("polytope document: 'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  return doc;
}

std::string to_json(const PolytopeDocument& doc, int indent) {
  json j;
  j["dim"] = doc.dim;
  json pts = json::array();
  for (const Vec& p : doc.points) {
    json row = json::array();
    for (const Int& c : p) row.push_back(coordinate_to(c));
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  if (doc.name) j["name"] = *doc.name;
  return j.dump(indent);
}

LatticePolytope to_polytope(const PolytopeDocument& doc) {
  return LatticePolytope(doc.points);
}

PolytopeDocument make_document(const LatticePolytope& P, std::optional<std::string> name) {
  PolytopeDocument doc;
  doc.dim = P.dim();
  doc.points = P.points();
  doc.name = std::move(name);
  return doc;
}

}  // namespace latsize
