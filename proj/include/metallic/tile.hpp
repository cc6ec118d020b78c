#pragma once

#include "metallic/label.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace metallic {

// A Wang tile in (right, top, left, bottom) order.
struct WangTile {
    Label right, top, left, bottom;

    auto operator<=>(const WangTile&) const = default;
    bool operator==(const WangTile&) const = default;

    std::string str() const;
};

// Mirror image along the positive diagonal: (a,b,c,d) -> (b,a,d,c).
WangTile hat(const WangTile& t);

enum class Family { MetallicCore, MetallicExtended, Custom };

std::string family_name(Family f);
Family parse_family(const std::string& name);

// An ordered set of distinct tiles. Index in `tiles` is the tile letter.
struct WangTileSet {
    int n = 0;
    Family family = Family::Custom;
    std::vector<WangTile> tiles;
    // Optional human-readable names, parallel to `tiles` (may be empty).
    std::vector<std::string> names;

    std::size_t size() const { return tiles.size(); }
    const WangTile& operator[](std::size_t i) const { return tiles[i]; }
    std::optional<int> index_of(const WangTile& t) const;
    std::string name(std::size_t i) const;

    // Throws DomainError on duplicates or labels outside V_n for
    // metallic families.
    void validate() const;
};

WangTileSet make_tileset(int n, Family family, std::vector<WangTile> tiles,
                         std::vector<std::string> names = {});

} // namespace metallic
