#pragma once

#include "metallic/pattern.hpp"
#include "metallic/substitution.hpp"
#include "metallic/tile.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace metallic {

using Json = nlohmann::json;

// {"n": 2, "family": "metallic-core", "tiles": [{"right": [1,1,1], ...}],
//  "names": [...]}. Array order is the tile index; "names" is optional.
Json tileset_to_json(const WangTileSet& s);
WangTileSet tileset_from_json(const Json& j);

// {"width": w, "height": h, "rows": [[bottom row], ..., [top row]]}
Json pattern_to_json(const Pattern2D& p);
Pattern2D pattern_from_json(const Json& j);

// {"codomain_size": k, "images": {"0": pattern, "1": pattern, ...}}
Json substitution_to_json(const Substitution2D& s);
Substitution2D substitution_from_json(const Json& j);

// Malformed input raises DomainError naming the offending field.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace metallic
