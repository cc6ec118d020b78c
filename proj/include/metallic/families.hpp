#pragma once

#include "metallic/tile.hpp"

#include <string>

namespace metallic {

enum class ColorClass {
    White,
    BlueH,
    GreenH,
    YellowH,
    AntigreenH,
    BlueV,
    GreenV,
    YellowV,
    AntigreenV,
    Junction
};

std::string class_name(ColorClass c);

struct Classification {
    ColorClass color;
    std::string name;       // e.g. "w12", "b0", "^g2", "j0111"
    bool in_d = false;      // one of b^n, hat(b^n), j^{0,0,1,1}, j^{1,1,0,0}
    bool last_blue = false; // b^n or its hat
    bool antigreen = false;
};

// Tile constructors for parameter n, following the family formulas.
WangTile white_tile(int n, int i, int j);          // 1 <= i,j <= n
WangTile blue_tile(int n, int i);                  // 0 <= i <= n
WangTile green_tile(int n, int i);                 // 0 <= i <= n
WangTile yellow_tile(int n, int i);                // 1 <= i <= n
WangTile antigreen_tile(int n, int i);             // 1 <= i <= n
WangTile junction_tile(int n, int k, int l, int r, int s);

bool is_horizontal_stripe(ColorClass c);
bool is_vertical_stripe(ColorClass c);

// Unique class of a V_n-labelled tile. Throws ClassificationError when
// the tile is not in T'_n.
Classification classify(const WangTile& t, int n);

// T_n (extended = false) or T'_n (extended = true) in canonical order:
// junctions, whites, horizontal stripes B, G, Y[, A], then the vertical
// hats in the same order. Indices are lexicographic inside each group.
WangTileSet metallic_tiles(int n, bool extended);

// sigma(i,j,k) = (i, 1+i-j, n+1+i-k), an involution on V_n minus 00(n+1).
Label sigma(const Label& v, int n);

// Rotates every tile a half turn and applies sigma to each label.
WangTileSet half_turn_image(const WangTileSet& s);

enum class Corner { SW, NE, NW, SE };
Corner parse_corner(const std::string& text);

// True iff no two distinct tiles share the two edge labels incident to
// the given corner.
bool deterministic(const WangTileSet& s, Corner corner);

} // namespace metallic
