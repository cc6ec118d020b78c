#pragma once

#include "metallic/tile.hpp"

#include <map>
#include <optional>
#include <vector>

namespace metallic {

struct EquivalenceCertificate {
    // tile_bijection[i] = index in b of the image of tile i of a.
    std::vector<int> tile_bijection;
    // Labels on top/bottom edges.
    std::map<Label, Label> vertical;
    // Labels on left/right edges.
    std::map<Label, Label> horizontal;

    // Rebuilds b from a and checks equality tile by tile.
    bool verify(const WangTileSet& a, const WangTileSet& b) const;
};

// Exhaustive backtracking search for independent bijections of the
// horizontal and vertical edge labels of a that map a onto b.
std::optional<EquivalenceCertificate> equivalent(const WangTileSet& a, const WangTileSet& b);

} // namespace metallic
