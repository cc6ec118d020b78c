#include "metallic/equivalence.hpp"

#include <array>
#include <tuple>
#include <utility>

namespace metallic {

namespace {

// Per-orientation occurrence counts, used to reject label matchings
// whose frequency profiles differ.
struct Profile {
    std::map<Label, std::pair<int, int>> horizontal; // (as right, as left)
    std::map<Label, std::pair<int, int>> vertical;   // (as top, as bottom)
};

Profile profile_of(const WangTileSet& s) {
    Profile p;
    for (const auto& t : s.tiles) {
        ++p.horizontal[t.right].first;
        ++p.horizontal[t.left].second;
        ++p.vertical[t.top].first;
        ++p.vertical[t.bottom].second;
    }
    return p;
}

class Search {
public:
    Search(const WangTileSet& a, const WangTileSet& b) : a_(a), b_(b), pa_(profile_of(a)), pb_(profile_of(b)) {}

    std::optional<EquivalenceCertificate> run() {
        if (a_.size() != b_.size()) return std::nullopt;
        if (pa_.horizontal.size() != pb_.horizontal.size() || pa_.vertical.size() != pb_.vertical.size())
            return std::nullopt;
        used_.assign(b_.size(), false);
        cert_.tile_bijection.assign(a_.size(), -1);
        if (!dfs(0)) return std::nullopt;
        return cert_;
    }

private:
    using Map = std::map<Label, Label>;

    // Binds x -> y in (fwd, bwd) if consistent; records whether a new
    // binding was made so the caller can undo it.
    static bool bind(Map& fwd, Map& bwd, const Label& x, const Label& y,
                     const std::map<Label, std::pair<int, int>>& px,
                     const std::map<Label, std::pair<int, int>>& py, bool& added) {
        added = false;
        auto f = fwd.find(x);
        if (f != fwd.end()) return f->second == y;
        if (bwd.count(y)) return false;
        if (px.at(x) != py.at(y)) return false;
        fwd.emplace(x, y);
        bwd.emplace(y, x);
        added = true;
        return true;
    }

    bool dfs(std::size_t i) {
        if (i == a_.size()) return true;
        const WangTile& s = a_.tiles[i];
        for (std::size_t j = 0; j < b_.size(); ++j) {
            if (used_[j]) continue;
            const WangTile& t = b_.tiles[j];
            std::vector<std::pair<bool, Label>> undo; // (is_vertical, source label)
            bool ok = true;
            const std::array<std::tuple<bool, const Label*, const Label*>, 4> edges{{
                {false, &s.right, &t.right},
                {true, &s.top, &t.top},
                {false, &s.left, &t.left},
                {true, &s.bottom, &t.bottom},
            }};
            for (auto [vertical, x, y] : edges) {
                bool added = false;
                bool fine = vertical ? bind(cert_.vertical, vinv_, *x, *y, pa_.vertical, pb_.vertical, added)
                                     : bind(cert_.horizontal, hinv_, *x, *y, pa_.horizontal, pb_.horizontal, added);
                if (added) undo.emplace_back(vertical, *x);
                if (!fine) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used_[j] = true;
                cert_.tile_bijection[i] = static_cast<int>(j);
                if (dfs(i + 1)) return true;
                used_[j] = false;
                cert_.tile_bijection[i] = -1;
            }
            for (auto& [vertical, x] : undo) {
                Map& fwd = vertical ? cert_.vertical : cert_.horizontal;
                Map& bwd = vertical ? vinv_ : hinv_;
                bwd.erase(fwd.at(x));
                fwd.erase(x);
            }
        }
        return false;
    }

    const WangTileSet& a_;
    const WangTileSet& b_;
    Profile pa_, pb_;
    std::vector<bool> used_;
    EquivalenceCertificate cert_;
    Map vinv_, hinv_;
};

} // namespace

bool EquivalenceCertificate::verify(const WangTileSet& a, const WangTileSet& b) const {
    if (a.size() != b.size() || tile_bijection.size() != a.size()) return false;
    std::vector<bool> hit(b.size(), false);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int j = tile_bijection[i];
        if (j < 0 || static_cast<std::size_t>(j) >= b.size() || hit[j]) return false;
        hit[j] = true;
        const WangTile& s = a.tiles[i];
        auto h = [&](const Label& l) -> const Label* {
            auto it = horizontal.find(l);
            return it == horizontal.end() ? nullptr : &it->second;
        };
        auto v = [&](const Label& l) -> const Label* {
            auto it = vertical.find(l);
            return it == vertical.end() ? nullptr : &it->second;
        };
        const Label *r = h(s.right), *l = h(s.left), *t = v(s.top), *bo = v(s.bottom);
        if (!r || !l || !t || !bo) return false;
        if (!(WangTile{*r, *t, *l, *bo} == b.tiles[j])) return false;
    }
    auto injective = [](const std::map<Label, Label>& m) {
        std::map<Label, int> seen;
        for (const auto& [k, v] : m)
            if (++seen[v] > 1) return false;
        return true;
    };
    return injective(horizontal) && injective(vertical);
}

std::optional<EquivalenceCertificate> equivalent(const WangTileSet& a, const WangTileSet& b) {
    return Search(a, b).run();
}

} // namespace metallic
