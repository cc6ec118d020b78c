#include "metallic/families.hpp"

#include "metallic/errors.hpp"

#include <array>
#include <cctype>
#include <map>
#include <utility>

namespace metallic {

namespace {

void require_n(int n) {
    if (n < 1) throw DomainError("n must be positive, got " + std::to_string(n));
}

void require_range(int v, int lo, int hi, const char* what) {
    if (v < lo || v > hi)
        throw DomainError(std::string(what) + " index " + std::to_string(v) + " outside [" + std::to_string(lo) +
                          "," + std::to_string(hi) + "]");
}

std::string idx(int v) { return std::to_string(v); }

std::string pair_name(int i, int j) {
    if (i < 10 && j < 10) return idx(i) + idx(j);
    return idx(i) + "-" + idx(j);
}

constexpr std::array<std::pair<int, int>, 3> kJunctionPairs{{{0, 0}, {0, 1}, {1, 1}}};

bool junction_pair_ok(int a, int b) {
    for (auto [x, y] : kJunctionPairs)
        if (x == a && y == b) return true;
    return false;
}

// Horizontal stripe classification shared with the vertical case via hat.
std::optional<Classification> classify_horizontal(const WangTile& t, int n) {
    const int i = t.left.v2();
    const int lv = t.left.v1(), rv = t.right.v1();
    Classification c{};
    WangTile expect;
    if (lv == 0 && rv == 0) {
        if (i < 0 || i > n) return std::nullopt;
        expect = blue_tile(n, i);
        c.color = ColorClass::BlueH;
        c.name = "b" + idx(i);
        c.last_blue = (i == n);
        c.in_d = c.last_blue;
    } else if (lv == 0 && rv == 1) {
        if (i < 0 || i > n) return std::nullopt;
        expect = green_tile(n, i);
        c.color = ColorClass::GreenH;
        c.name = "g" + idx(i);
    } else if (lv == 1 && rv == 1) {
        if (i < 1 || i > n) return std::nullopt;
        expect = yellow_tile(n, i);
        c.color = ColorClass::YellowH;
        c.name = "y" + idx(i);
    } else {
        if (i < 1 || i > n) return std::nullopt;
        expect = antigreen_tile(n, i);
        c.color = ColorClass::AntigreenH;
        c.name = "a" + idx(i);
        c.antigreen = true;
    }
    if (!(expect == t)) return std::nullopt;
    return c;
}

ColorClass to_vertical(ColorClass c) {
    switch (c) {
    case ColorClass::BlueH: return ColorClass::BlueV;
    case ColorClass::GreenH: return ColorClass::GreenV;
    case ColorClass::YellowH: return ColorClass::YellowV;
    case ColorClass::AntigreenH: return ColorClass::AntigreenV;
    default: return c;
    }
}

} // namespace

std::string class_name(ColorClass c) {
    switch (c) {
    case ColorClass::White: return "White";
    case ColorClass::BlueH: return "BlueH";
    case ColorClass::GreenH: return "GreenH";
    case ColorClass::YellowH: return "YellowH";
    case ColorClass::AntigreenH: return "AntigreenH";
    case ColorClass::BlueV: return "BlueV";
    case ColorClass::GreenV: return "GreenV";
    case ColorClass::YellowV: return "YellowV";
    case ColorClass::AntigreenV: return "AntigreenV";
    case ColorClass::Junction: return "Junction";
    }
    return "?";
}

bool is_horizontal_stripe(ColorClass c) {
    return c == ColorClass::BlueH || c == ColorClass::GreenH || c == ColorClass::YellowH ||
           c == ColorClass::AntigreenH;
}

bool is_vertical_stripe(ColorClass c) {
    return c == ColorClass::BlueV || c == ColorClass::GreenV || c == ColorClass::YellowV ||
           c == ColorClass::AntigreenV;
}

WangTile white_tile(int n, int i, int j) {
    require_n(n);
    require_range(i, 1, n, "white");
    require_range(j, 1, n, "white");
    return {Label{1, 1, i + 1}, Label{1, 1, j + 1}, Label{1, 1, i}, Label{1, 1, j}};
}

WangTile blue_tile(int n, int i) {
    require_n(n);
    require_range(i, 0, n, "blue");
    return {Label{0, 0, i + 1}, Label{1, 1, 1}, Label{0, 0, i}, Label{1, 1, n}};
}

WangTile green_tile(int n, int i) {
    require_n(n);
    require_range(i, 0, n, "green");
    return {Label{0, 1, i + 1}, Label{1, 1, 1}, Label{0, 0, i}, Label{1, 1, n + 1}};
}

WangTile yellow_tile(int n, int i) {
    require_n(n);
    require_range(i, 1, n, "yellow");
    return {Label{0, 1, i + 1}, Label{1, 1, 2}, Label{0, 1, i}, Label{1, 1, n + 1}};
}

WangTile antigreen_tile(int n, int i) {
    require_n(n);
    require_range(i, 1, n, "antigreen");
    return {Label{0, 0, i + 1}, Label{1, 1, 2}, Label{0, 1, i}, Label{1, 1, n}};
}

WangTile junction_tile(int n, int k, int l, int r, int s) {
    require_n(n);
    if (!junction_pair_ok(k, l) || !junction_pair_ok(r, s))
        throw DomainError("junction indices must be pairs in {00, 01, 11}");
    return {Label{0, k, l}, Label{0, r, s}, Label{0, s, r + n}, Label{0, l, k + n}};
}

Classification classify(const WangTile& t, int n) {
    require_n(n);
    for (const Label* l : {&t.right, &t.top, &t.left, &t.bottom})
        if (!l->in_v(n))
            throw ClassificationError("label " + l->str() + " of " + t.str() + " is outside V_" + idx(n));

    const bool r0 = t.right.v0() == 0, t0 = t.top.v0() == 0, l0 = t.left.v0() == 0, b0 = t.bottom.v0() == 0;
    auto fail = [&]() -> Classification {
        throw ClassificationError("tile " + t.str() + " is not a metallic tile for n=" + idx(n));
    };

    if (!r0 && !t0 && !l0 && !b0) {
        const int i = t.left.v2(), j = t.bottom.v2();
        if (i < 1 || i > n || j < 1 || j > n || !(white_tile(n, i, j) == t)) return fail();
        return Classification{ColorClass::White, "w" + pair_name(i, j)};
    }
    if (r0 && l0 && !t0 && !b0) {
        auto c = classify_horizontal(t, n);
        if (!c) return fail();
        return *c;
    }
    if (t0 && b0 && !r0 && !l0) {
        auto c = classify_horizontal(hat(t), n);
        if (!c) return fail();
        c->color = to_vertical(c->color);
        c->name = "^" + c->name;
        return *c;
    }
    if (r0 && t0 && l0 && b0) {
        const int k = t.right.v1(), l = t.right.v2(), r = t.top.v1(), s = t.top.v2();
        if (!junction_pair_ok(k, l) || !junction_pair_ok(r, s) || !(junction_tile(n, k, l, r, s) == t))
            return fail();
        Classification c{ColorClass::Junction, "j" + idx(k) + idx(l) + idx(r) + idx(s)};
        c.in_d = (k == 0 && l == 0 && r == 1 && s == 1) || (k == 1 && l == 1 && r == 0 && s == 0);
        return c;
    }
    return fail();
}

WangTileSet metallic_tiles(int n, bool extended) {
    require_n(n);
    std::vector<WangTile> tiles;
    std::vector<std::string> names;
    auto add = [&](const WangTile& t) {
        Classification c = classify(t, n);
        if (!extended && (c.in_d || c.antigreen)) return;
        tiles.push_back(t);
        names.push_back(c.name);
    };
    for (auto [k, l] : kJunctionPairs)
        for (auto [r, s] : kJunctionPairs) add(junction_tile(n, k, l, r, s));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) add(white_tile(n, i, j));
    for (int pass = 0; pass < 2; ++pass) {
        auto put = [&](const WangTile& t) { add(pass == 0 ? t : hat(t)); };
        for (int i = 0; i <= n; ++i) put(blue_tile(n, i));
        for (int i = 0; i <= n; ++i) put(green_tile(n, i));
        for (int i = 1; i <= n; ++i) put(yellow_tile(n, i));
        for (int i = 1; i <= n; ++i) put(antigreen_tile(n, i));
    }
    return make_tileset(n, extended ? Family::MetallicExtended : Family::MetallicCore, std::move(tiles),
                        std::move(names));
}

Label sigma(const Label& v, int n) {
    require_n(n);
    if (!v.in_v(n)) throw DomainError("sigma: label " + v.str() + " outside V_" + idx(n));
    if (v == Label{0, 0, n + 1}) throw DomainError("sigma is undefined on 00(n+1)");
    const int i = v.v0(), j = v.v1(), k = v.v2();
    return Label{i, 1 + i - j, n + 1 + i - k};
}

WangTileSet half_turn_image(const WangTileSet& s) {
    if (s.family != Family::MetallicCore) throw DomainError("half_turn_image requires a metallic-core tile set");
    std::vector<WangTile> out;
    out.reserve(s.size());
    for (const auto& t : s.tiles)
        out.push_back({sigma(t.left, s.n), sigma(t.bottom, s.n), sigma(t.right, s.n), sigma(t.top, s.n)});
    return make_tileset(s.n, Family::Custom, std::move(out));
}

Corner parse_corner(const std::string& text) {
    std::string upper = text;
    for (char& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (upper == "SW") return Corner::SW;
    if (upper == "NE") return Corner::NE;
    if (upper == "NW") return Corner::NW;
    if (upper == "SE") return Corner::SE;
    throw DomainError("unknown corner '" + text + "'");
}

bool deterministic(const WangTileSet& s, Corner corner) {
    std::map<std::pair<Label, Label>, int> seen;
    for (const auto& t : s.tiles) {
        std::pair<Label, Label> key;
        switch (corner) {
        case Corner::SW: key = {t.left, t.bottom}; break;
        case Corner::NE: key = {t.right, t.top}; break;
        case Corner::NW: key = {t.left, t.top}; break;
        case Corner::SE: key = {t.right, t.bottom}; break;
        }
        if (++seen[key] > 1) return false;
    }
    return true;
}

} // namespace metallic
