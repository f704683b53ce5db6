#pragma once

#include "latsize/geometry.hpp"

#include <optional>
#include <string>

namespace latsize {

/// Exchange format for polytopes:
///   {"dim": n, "points": [[...], ...], "name": "optional"}
/// Coordinates are JSON integers; values beyond 2^53 may be written as
/// decimal strings and always round-trip exactly.
struct PolytopeDocument {
  int dim = 0;
  std::vector<Vec> points;
  std::optional<std::string> name;

  friend bool operator==(const PolytopeDocument&, const PolytopeDocument&) = default;
};

/// Throws ParseError on malformed JSON, non-integer coordinates, ragged
/// rows, or an empty point list.
PolytopeDocument parse_polytope_document(const std::string& json_text);

std::string to_json(const PolytopeDocument& doc, int indent = -1);

LatticePolytope to_polytope(const PolytopeDocument& doc);
PolytopeDocument make_document(const LatticePolytope& P,
                               std::optional<std::string> name = std::nullopt);

/// Decimal string <-> Int helpers shared by the document and table writers.
Int parse_decimal_int(const std::string& text);

}  // namespace latsize
