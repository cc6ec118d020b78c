#include "metallic/tile.hpp"

#include "metallic/errors.hpp"

#include <set>

namespace metallic {

std::string WangTile::str() const {
    return "(" + right.str() + "," + top.str() + "," + left.str() + "," + bottom.str() + ")";
}

WangTile hat(const WangTile& t) { return WangTile{t.top, t.right, t.bottom, t.left}; }

std::string family_name(Family f) {
    switch (f) {
    case Family::MetallicCore: return "metallic-core";
    case Family::MetallicExtended: return "metallic-extended";
    case Family::Custom: return "custom";
    }
    return "custom";
}

Family parse_family(const std::string& name) {
    if (name == "metallic-core") return Family::MetallicCore;
    if (name == "metallic-extended") return Family::MetallicExtended;
    if (name == "custom") return Family::Custom;
    throw DomainError("unknown tile family '" + name + "'");
}

std::optional<int> WangTileSet::index_of(const WangTile& t) const {
    for (std::size_t i = 0; i < tiles.size(); ++i)
        if (tiles[i] == t) return static_cast<int>(i);
    return std::nullopt;
}

std::string WangTileSet::name(std::size_t i) const {
    if (i < names.size() && !names[i].empty()) return names[i];
    return std::to_string(i);
}

void WangTileSet::validate() const {
    std::set<WangTile> seen;
    for (const auto& t : tiles) {
        if (!seen.insert(t).second) throw DomainError("duplicate tile " + t.str());
        if (family != Family::Custom) {
            for (const Label* l : {&t.right, &t.top, &t.left, &t.bottom})
                if (!l->in_v(n))
                    throw DomainError("label " + l->str() + " of tile " + t.str() + " is outside V_" +
                                      std::to_string(n));
        }
    }
    if (!names.empty() && names.size() != tiles.size())
        throw DomainError("tile name list does not match tile count");
}

WangTileSet make_tileset(int n, Family family, std::vector<WangTile> tiles, std::vector<std::string> names) {
    WangTileSet s{n, family, std::move(tiles), std::move(names)};
    s.validate();
    return s;
}

} // namespace metallic
