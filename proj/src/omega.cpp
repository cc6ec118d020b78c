#include "metallic/omega.hpp"

#include "metallic/errors.hpp"

#include <map>
#include <memory>

namespace metallic {

namespace {

void require_label(int n, const Label& v) {
    if (n < 1) throw DomainError("n must be positive");
    if (!v.in_v(n)) throw DomainError("label " + v.str() + " is outside V_" + std::to_string(n));
}

std::map<WangTile, int> index_map(const WangTileSet& s) {
    std::map<WangTile, int> m;
    for (std::size_t i = 0; i < s.size(); ++i) m.emplace(s.tiles[i], static_cast<int>(i));
    return m;
}

// Tiles of T'_n keyed by (left, bottom); unique by SW-determinism.
class SwTable {
public:
    explicit SwTable(const WangTileSet& s) {
        for (std::size_t i = 0; i < s.size(); ++i) by_sw_.emplace(std::make_pair(s[i].left, s[i].bottom), int(i));
    }
    std::optional<int> find(const Label& left, const Label& bottom) const {
        auto it = by_sw_.find({left, bottom});
        if (it == by_sw_.end()) return std::nullopt;
        return it->second;
    }

private:
    std::map<std::pair<Label, Label>, int> by_sw_;
};

Corner2 corner_for(int n, const Label& bottom) {
    if (bottom == Label{0, 0, n}) return {Label{0, 0, 0}, bottom};
    if (bottom == Label{0, 1, n}) return {Label{0, 0, 1}, bottom};
    if (bottom == Label{0, 1, n + 1}) return {Label{0, 1, 1}, bottom};
    throw ConsistencyError("no junction corner has bottom label " + bottom.str());
}

struct Extended {
    WangTileSet tiles;
    std::map<WangTile, int> index;
    SwTable sw;
    explicit Extended(int n) : tiles(metallic_tiles(n, true)), index(index_map(tiles)), sw(tiles) {}
};

// Per-thread cache; every operation stays a pure function of its inputs.
const Extended& extended_for(int n) {
    if (n < 1) throw DomainError("n must be positive");
    static thread_local std::map<int, std::unique_ptr<Extended>> cache;
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Extended>(n);
    return *slot;
}

} // namespace

BoundaryWord tau(int n, const Label& v) {
    require_label(n, v);
    const int x = v.v0(), y = v.v1(), z = v.v2();
    BoundaryWord w;
    if (x != z) {
        w.push_back(Label{0, x - y + 1, n});
        for (int k = 0; k < z - x - 1; ++k) w.push_back(Label{1, 1, n});
        for (int k = 0; k < n + 1 - z; ++k) w.push_back(Label{1, 1, n + 1});
    } else {
        w.push_back(Label{0, x - y + 1, n + 1});
        for (int k = 0; k < n - z; ++k) w.push_back(Label{1, 1, n + 1});
    }
    return w;
}

std::optional<Label> tau_inverse(int n, const BoundaryWord& w) {
    if (n < 1 || w.empty()) return std::nullopt;
    for (const auto& l : w)
        if (!l.in_v(n)) return std::nullopt;
    const int length = static_cast<int>(w.size());
    const int x = n + 1 - length;
    if (x < 0 || x > 1) return std::nullopt;
    if (w[0].v0() != 0) return std::nullopt;
    const int y = x + 1 - w[0].v1();
    int ending_in_n = 0;
    for (const auto& l : w)
        if (l.v2() == n) ++ending_in_n;
    // x != z: first label ends in n, then z - x - 1 more labels do.
    // x == z: no label ends in n.
    const int z = ending_in_n == 0 ? x : x + ending_in_n;
    const Label v{x, y < 0 ? 0 : y, z};
    if (y < 0 || !v.in_v(n)) return std::nullopt;
    if (tau(n, v) != w) return std::nullopt;
    return v;
}

StripResult horizontal_strip(int n, const Label& v) {
    require_label(n, v);
    const Extended* ext = &extended_for(n);
    const BoundaryWord bottom = tau(n, v);
    StripResult r;
    r.corner = corner_for(n, bottom[0]);
    Label current = r.corner.right;
    for (std::size_t k = 1; k < bottom.size(); ++k) {
        auto idx = ext->sw.find(current, bottom[k]);
        if (!idx) throw ConsistencyError("horizontal strip for " + v.str() + " breaks at position " + std::to_string(k));
        const WangTile& t = ext->tiles[*idx];
        r.tiles.push_back(t);
        r.gamma.push_back(t.top);
        current = t.right;
    }
    r.delta = current;
    return r;
}

Pattern2D block_image(int n, const WangTile& t) {
    const Extended* ext = &extended_for(n);
    if (!ext->index.count(t)) throw DomainError("tile " + t.str() + " is not in T'_" + std::to_string(n));

    const BoundaryWord bottom = tau(n, t.bottom), left = tau(n, t.left);
    const int w = static_cast<int>(bottom.size()), h = static_cast<int>(left.size());
    const StripResult row = horizontal_strip(n, t.bottom);
    const StripResult col = horizontal_strip(n, t.left); // mirrored below

    Pattern2D p(w, h, -1);
    const WangTile junction{row.corner.right, col.corner.right, col.corner.bottom, row.corner.bottom};
    auto lookup = [&](const WangTile& tile) {
        auto it = ext->index.find(tile);
        if (it == ext->index.end()) throw ConsistencyError("block for " + t.str() + " needs missing tile " + tile.str());
        return it->second;
    };
    p.at(0, 0) = lookup(junction);
    for (int i = 1; i < w; ++i) p.at(i, 0) = lookup(row.tiles[i - 1]);
    for (int j = 1; j < h; ++j) p.at(0, j) = lookup(hat(col.tiles[j - 1]));
    for (int j = 1; j < h; ++j)
        for (int i = 1; i < w; ++i) {
            const Label& l = ext->tiles[p.at(i - 1, j)].right;
            const Label& b = ext->tiles[p.at(i, j - 1)].top;
            auto idx = ext->sw.find(l, b);
            if (!idx) throw ConsistencyError("white fill for " + t.str() + " fails at (" + std::to_string(i) + "," +
                                             std::to_string(j) + ")");
            p.at(i, j) = *idx;
        }

    BoundaryWord right_word, top_word;
    for (int j = 0; j < h; ++j) right_word.push_back(ext->tiles[p.at(w - 1, j)].right);
    for (int i = 0; i < w; ++i) top_word.push_back(ext->tiles[p.at(i, h - 1)].top);
    if (right_word != tau(n, t.right) || top_word != tau(n, t.top))
        throw ConsistencyError("block for " + t.str() + " has boundary words that are not tau-images");
    return p;
}

Substitution2D build_omega(int n, bool extended) {
    const WangTileSet full = metallic_tiles(n, true);
    Substitution2D s;
    if (extended) {
        s.codomain_size = static_cast<int>(full.size());
        s.names = full.names;
        for (const auto& t : full.tiles) s.images.push_back(block_image(n, t));
        return s;
    }
    return build_omega_for(metallic_tiles(n, false));
}

Substitution2D build_omega_for(const WangTileSet& order) {
    const int n = order.n;
    const WangTileSet full = metallic_tiles(n, true);
    const auto target = index_map(order);
    std::vector<int> remap(full.size(), -1);
    for (std::size_t i = 0; i < full.size(); ++i) {
        auto it = target.find(full[i]);
        if (it != target.end()) remap[i] = it->second;
    }
    Substitution2D s;
    s.codomain_size = static_cast<int>(order.size());
    s.names = order.names;
    for (const auto& t : order.tiles) {
        Pattern2D img = block_image(n, t);
        for (int j = 0; j < img.height(); ++j)
            for (int i = 0; i < img.width(); ++i) {
                const int k = remap[img.at(i, j)];
                if (k < 0)
                    throw ConsistencyError("image of " + t.str() + " uses tile " + full[img.at(i, j)].str() +
                                           " outside the restricted set");
                img.at(i, j) = k;
            }
        s.images.push_back(std::move(img));
    }
    return s;
}

bool boundary_compatible(int n, const Label& u, const Label& v) {
    require_label(n, u);
    require_label(n, v);
    auto in_z = [](const Label& l) { return l.v0() == 0; };
    auto in_m = [n](const Label& l) { return l.v2() >= n; };
    const bool uz = in_z(u), vz = in_z(v), um = in_m(u), vm = in_m(v);
    return (!uz && !vz) || (um && uz && vm && vz) || (um && !uz && vz) || (uz && vm && !vz);
}

Substitution2D rho(int n) {
    if (n < 1) throw DomainError("n must be positive");
    std::vector<int> a{0}, b{0};
    for (int k = 0; k < n; ++k) a.push_back(1);
    for (int k = 0; k < n - 1; ++k) b.push_back(1);
    Substitution2D s;
    s.codomain_size = 2;
    s.names = {"a", "b"};
    s.images = {Pattern2D::from_rows({a}), Pattern2D::from_rows({b})};
    return s;
}

ZetaReport zeta_refinement_check(int n) {
    const WangTileSet tiles = metallic_tiles(n, false);
    const Substitution2D omega = build_omega(n, false);
    const Substitution2D r = rho(n);
    // zeta(t) = (horizontal letter, vertical letter) with a = 0, b = 1.
    auto zeta = [&](int idx) -> std::pair<int, int> {
        const ColorClass c = classify(tiles[idx], n).color;
        if (c == ColorClass::Junction) return {0, 0};
        if (is_horizontal_stripe(c)) return {1, 0};
        if (is_vertical_stripe(c)) return {0, 1};
        return {1, 1};
    };
    for (std::size_t t = 0; t < tiles.size(); ++t) {
        const auto [p, q] = zeta(static_cast<int>(t));
        const Pattern2D& img = omega[static_cast<int>(t)];
        const Pattern2D& rp = r[p];
        const Pattern2D& rq = r[q];
        if (img.width() != rp.width() || img.height() != rq.width())
            return {false, "tile " + tiles.name(t) + ": image is " + std::to_string(img.width()) + "x" +
                               std::to_string(img.height()) + ", rho gives " + std::to_string(rp.width()) + "x" +
                               std::to_string(rq.width())};
        for (int j = 0; j < img.height(); ++j)
            for (int i = 0; i < img.width(); ++i) {
                const auto [x, y] = zeta(img.at(i, j));
                if (x != rp.at(i, 0) || y != rq.at(j, 0))
                    return {false, "tile " + tiles.name(t) + " cell (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") projects to (" + std::to_string(x) + "," + std::to_string(y) + ")"};
            }
    }
    return {true, ""};
}

} // namespace metallic
