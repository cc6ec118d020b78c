#include "metallic/io.hpp"

#include "metallic/errors.hpp"

#include <fstream>
#include <sstream>

namespace metallic {

namespace {

Json label_json(const Label& l) { return Json(l.digits()); }

Label label_from(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) throw DomainError(where + ": expected a nonempty array of digits");
    std::vector<int> digits;
    for (const Json& d : j) {
        if (!d.is_number_integer() || d.get<int>() < 0) throw DomainError(where + ": digits must be nonnegative integers");
        digits.push_back(d.get<int>());
    }
    return Label(digits);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(where + ": missing field '" + key + "'");
    return j.at(key);
}

int int_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_integer()) throw DomainError(where + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

} // namespace

Json tileset_to_json(const WangTileSet& s) {
    Json tiles = Json::array();
    for (const WangTile& t : s.tiles)
        tiles.push_back({{"right", label_json(t.right)},
                         {"top", label_json(t.top)},
                         {"left", label_json(t.left)},
                         {"bottom", label_json(t.bottom)}});
    Json out{{"n", s.n}, {"family", family_name(s.family)}, {"tiles", tiles}};
    if (!s.names.empty()) out["names"] = s.names;
    return out;
}

WangTileSet tileset_from_json(const Json& j) {
    WangTileSet s;
    s.n = int_field(j, "n", "tile set");
    const Json& fam = field(j, "family", "tile set");
    if (!fam.is_string()) throw DomainError("tile set: field 'family' must be a string");
    s.family = parse_family(fam.get<std::string>());
    const Json& tiles = field(j, "tiles", "tile set");
    if (!tiles.is_array()) throw DomainError("tile set: field 'tiles' must be an array");
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        const std::string where = "tile " + std::to_string(i);
        const Json& t = tiles[i];
        s.tiles.push_back(WangTile{label_from(field(t, "right", where), where + " right"),
                                   label_from(field(t, "top", where), where + " top"),
                                   label_from(field(t, "left", where), where + " left"),
                                   label_from(field(t, "bottom", where), where + " bottom")});
    }
    if (j.contains("names")) {
        const Json& names = j.at("names");
        if (!names.is_array() || names.size() != s.tiles.size())
            throw DomainError("tile set: 'names' must list one name per tile");
        for (const Json& nm : names) s.names.push_back(nm.get<std::string>());
    }
    s.validate();
    return s;
}

Json pattern_to_json(const Pattern2D& p) {
    return {{"width", p.width()}, {"height", p.height()}, {"rows", p.rows()}};
}

Pattern2D pattern_from_json(const Json& j) {
    const int w = int_field(j, "width", "pattern");
    const int h = int_field(j, "height", "pattern");
    const Json& rows = field(j, "rows", "pattern");
    if (w < 0 || h < 0) throw DomainError("pattern: negative size");
    if (!rows.is_array() || static_cast<int>(rows.size()) != h)
        throw DomainError("pattern: 'rows' must hold " + std::to_string(h) + " rows");
    std::vector<std::vector<int>> cells;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != w)
            throw DomainError("pattern: row " + std::to_string(r) + " must hold " + std::to_string(w) + " letters");
        std::vector<int> row;
        for (const Json& x : rows[r]) {
            if (!x.is_number_integer() || x.get<int>() < 0)
                throw DomainError("pattern: row " + std::to_string(r) + " has a non-letter entry");
            row.push_back(x.get<int>());
        }
        cells.push_back(std::move(row));
    }
    if (h == 0) return Pattern2D(w, 0);
    return Pattern2D::from_rows(cells);
}

Json substitution_to_json(const Substitution2D& s) {
    Json images = Json::object();
    for (int a = 0; a < s.domain_size(); ++a) images[std::to_string(a)] = pattern_to_json(s[a]);
    Json out{{"codomain_size", s.codomain_size}, {"images", images}};
    if (!s.names.empty()) out["names"] = s.names;
    return out;
}

Substitution2D substitution_from_json(const Json& j) {
    Substitution2D s;
    s.codomain_size = int_field(j, "codomain_size", "substitution");
    const Json& images = field(j, "images", "substitution");
    if (!images.is_object()) throw DomainError("substitution: 'images' must map letters to patterns");
    for (std::size_t a = 0; a < images.size(); ++a) {
        const std::string key = std::to_string(a);
        if (!images.contains(key)) throw DomainError("substitution: missing image of letter " + key);
        Pattern2D p = pattern_from_json(images.at(key));
        for (int y = 0; y < p.height(); ++y)
            for (int x = 0; x < p.width(); ++x)
                if (p.at(x, y) >= s.codomain_size)
                    throw DomainError("substitution: image of letter " + key + " uses letter " +
                                      std::to_string(p.at(x, y)) + " outside the codomain");
        s.images.push_back(std::move(p));
    }
    if (j.contains("names")) s.names = j.at("names").get<std::vector<std::string>>();
    return s;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw DomainError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
}

} // namespace metallic
