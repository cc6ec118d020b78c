#pragma once

#include "metallic/families.hpp"
#include "metallic/pattern.hpp"
#include "metallic/substitution.hpp"
#include "metallic/tile.hpp"

#include <map>
#include <string>

namespace metallic {

struct RenderStyle {
    double cell = 48;          // px per tile
    double label_font = 9;     // px
    bool show_labels = true;
    bool show_index = false;
    int columns = 4;           // panels per row in substitution sheets
    std::map<ColorClass, std::string> fill = default_fills();
    std::string custom_fill = "#e0e0e0"; // tiles of Custom sets

    static std::map<ColorClass, std::string> default_fills();
};

// SVG with one square per cell, bottom row drawn lowest. Cells whose
// right or top edge mismatches a neighbour are outlined in red. Throws
// RenderError on a letter outside `tiles`.
std::string render_pattern(const Pattern2D& p, const WangTileSet& tiles, const RenderStyle& style = {});

// One panel per letter: the source tile, an arrow, then its image.
std::string render_substitution(const Substitution2D& s, const WangTileSet& domain, const WangTileSet& codomain,
                                const RenderStyle& style = {});

// TikZ counterparts (one tikzpicture per pattern or per letter).
std::string pattern_tikz(const Pattern2D& p, const WangTileSet& tiles, const RenderStyle& style = {});
std::string substitution_tikz(const Substitution2D& s, const WangTileSet& domain, const WangTileSet& codomain,
                              const RenderStyle& style = {});

} // namespace metallic
