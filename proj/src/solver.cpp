#include "metallic/solver.hpp"

#include "metallic/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <deque>
#include <random>
#include <unordered_map>

namespace metallic {

namespace {

constexpr std::size_t kMaxTiles = 256;

class TileMask {
public:
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    bool empty() const { return (w_[0] | w_[1] | w_[2] | w_[3]) == 0; }
    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    TileMask& operator|=(const TileMask& o) {
        for (int k = 0; k < 4; ++k) w_[k] |= o.w_[k];
        return *this;
    }
    TileMask operator&(const TileMask& o) const {
        TileMask r;
        for (int k = 0; k < 4; ++k) r.w_[k] = w_[k] & o.w_[k];
        return r;
    }
    bool operator==(const TileMask&) const = default;
    template <class F>
    void for_each(F&& f) const {
        for (int k = 0; k < 4; ++k) {
            std::uint64_t x = w_[k];
            while (x) {
                const int b = std::countr_zero(x);
                f(k * 64 + b);
                x &= x - 1;
            }
        }
    }
    int first() const {
        for (int k = 0; k < 4; ++k)
            if (w_[k]) return k * 64 + std::countr_zero(w_[k]);
        return -1;
    }

private:
    std::array<std::uint64_t, 4> w_{};
};

// Integer-coded view of a tile set with neighbor-compatibility masks.
struct Compiled {
    int count = 0;
    std::vector<int> right, top, left, bottom;
    std::map<Label, int> hids, vids; // horizontal (left/right), vertical (top/bottom)
    TileMask all;
    // Tiles that may sit to the right of / above / left of / below tile t.
    std::vector<TileMask> east, north, west, south;
    std::vector<TileMask> with_left, with_right, with_bottom, with_top; // by label id

    explicit Compiled(const WangTileSet& s) {
        if (s.size() > kMaxTiles) throw DomainError("solver supports at most 256 tiles");
        count = static_cast<int>(s.size());
        auto hid = [&](const Label& l) { return hids.emplace(l, int(hids.size())).first->second; };
        auto vid = [&](const Label& l) { return vids.emplace(l, int(vids.size())).first->second; };
        for (const auto& t : s.tiles) {
            right.push_back(hid(t.right));
            left.push_back(hid(t.left));
            top.push_back(vid(t.top));
            bottom.push_back(vid(t.bottom));
        }
        with_left.resize(hids.size());
        with_right.resize(hids.size());
        with_bottom.resize(vids.size());
        with_top.resize(vids.size());
        for (int t = 0; t < count; ++t) {
            all.set(t);
            with_left[left[t]].set(t);
            with_right[right[t]].set(t);
            with_bottom[bottom[t]].set(t);
            with_top[top[t]].set(t);
        }
        for (int t = 0; t < count; ++t) {
            east.push_back(with_left[right[t]]);
            west.push_back(with_right[left[t]]);
            north.push_back(with_bottom[top[t]]);
            south.push_back(with_top[bottom[t]]);
        }
    }

    TileMask horizontal_mask(const Label& l, bool as_left) const {
        auto it = hids.find(l);
        if (it == hids.end()) return {};
        return as_left ? with_left[it->second] : with_right[it->second];
    }
    TileMask vertical_mask(const Label& l, bool as_bottom) const {
        auto it = vids.find(l);
        if (it == vids.end()) return {};
        return as_bottom ? with_bottom[it->second] : with_top[it->second];
    }
};

const WangTileSet& require_tiles(const TilingProblem& p) {
    if (!p.tileset) throw DomainError("tiling problem without a tile set");
    return *p.tileset;
}

class Search {
public:
    Search(const TilingProblem& p, const SolverOptions& opt)
        : p_(p), opt_(opt), c_(require_tiles(p)), w_(p.width), h_(p.height), rng_(opt.seed) {
        if (w_ < 1 || h_ < 1) throw DomainError("region dimensions must be positive");
    }

    // Returns false when the root is already inconsistent.
    bool init(std::vector<TileMask>& dom) {
        dom.assign(static_cast<std::size_t>(w_) * h_, c_.all);
        const auto& b = p_.boundary;
        auto check_len = [](const std::optional<BoundaryWord>& wd, int len, const char* side) {
            if (wd && static_cast<int>(wd->size()) != len)
                throw DomainError(std::string(side) + " boundary word has length " + std::to_string(wd->size()) +
                                  ", region side is " + std::to_string(len));
        };
        if (p_.torus && (b.bottom || b.top || b.left || b.right))
            throw DomainError("boundary words are not allowed on a torus");
        check_len(b.bottom, w_, "bottom");
        check_len(b.top, w_, "top");
        check_len(b.left, h_, "left");
        check_len(b.right, h_, "right");
        for (int i = 0; i < w_; ++i) {
            if (b.bottom) cell(dom, i, 0) = cell(dom, i, 0) & c_.vertical_mask((*b.bottom)[i], true);
            if (b.top) cell(dom, i, h_ - 1) = cell(dom, i, h_ - 1) & c_.vertical_mask((*b.top)[i], false);
        }
        for (int j = 0; j < h_; ++j) {
            if (b.left) cell(dom, 0, j) = cell(dom, 0, j) & c_.horizontal_mask((*b.left)[j], true);
            if (b.right) cell(dom, w_ - 1, j) = cell(dom, w_ - 1, j) & c_.horizontal_mask((*b.right)[j], false);
        }
        for (const auto& [pos, t] : p_.fixed) {
            const auto [i, j] = pos;
            if (i < 0 || j < 0 || i >= w_ || j >= h_) throw DomainError("fixed cell outside region");
            if (t < 0 || t >= c_.count) throw DomainError("fixed tile index out of range");
            TileMask m;
            m.set(t);
            cell(dom, i, j) = cell(dom, i, j) & m;
        }
        std::vector<int> all(dom.size());
        for (std::size_t k = 0; k < dom.size(); ++k) all[k] = static_cast<int>(k);
        return propagate(dom, all);
    }

    // Depth-first search; `visit` returns false to stop.
    bool dfs(std::vector<TileMask>& dom, const std::function<bool(const Pattern2D&)>& visit) {
        int pick = -1;
        for (std::size_t k = 0; k < dom.size(); ++k)
            if (dom[k].count() > 1) {
                pick = static_cast<int>(k);
                break;
            }
        if (pick < 0) {
            Pattern2D out(w_, h_);
            for (int j = 0; j < h_; ++j)
                for (int i = 0; i < w_; ++i) out.at(i, j) = cell(dom, i, j).first();
            return visit(out);
        }
        std::vector<int> values;
        dom[pick].for_each([&](int t) { values.push_back(t); });
        if (opt_.order == ValueOrder::Descending) std::reverse(values.begin(), values.end());
        if (opt_.order == ValueOrder::Shuffled) std::shuffle(values.begin(), values.end(), rng_);
        for (int t : values) {
            if (++stats_.nodes > opt_.node_cap)
                throw ResourceError("solver node cap of " + std::to_string(opt_.node_cap) + " reached");
            std::vector<TileMask> next = dom;
            TileMask m;
            m.set(t);
            next[pick] = m;
            if (propagate(next, {pick})) {
                if (!dfs(next, visit)) return false;
            } else {
                ++stats_.backtracks;
            }
        }
        return true;
    }

    SolveStats stats_;

private:
    TileMask& cell(std::vector<TileMask>& d, int i, int j) const { return d[static_cast<std::size_t>(j) * w_ + i]; }

    // Arc consistency over the grid's four neighbor relations.
    bool propagate(std::vector<TileMask>& dom, std::vector<int> queue) const {
        std::vector<char> queued(dom.size(), 0);
        for (int k : queue) queued[k] = 1;
        for (auto& d : dom)
            if (d.empty()) return false;
        std::size_t head = 0;
        while (head < queue.size()) {
            const int k = queue[head++];
            queued[k] = 0;
            const int i = k % w_, j = k / w_;
            const TileMask& d = dom[k];
            struct Dir {
                int di, dj;
                const std::vector<TileMask>* rel;
            };
            const std::array<Dir, 4> dirs{{{1, 0, &c_.east}, {-1, 0, &c_.west}, {0, 1, &c_.north}, {0, -1, &c_.south}}};
            for (const auto& dir : dirs) {
                int ni = i + dir.di, nj = j + dir.dj;
                if (p_.torus) {
                    ni = (ni + w_) % w_;
                    nj = (nj + h_) % h_;
                } else if (ni < 0 || nj < 0 || ni >= w_ || nj >= h_) {
                    continue;
                }
                TileMask support;
                d.for_each([&](int t) { support |= (*dir.rel)[t]; });
                const int nk = nj * w_ + ni;
                TileMask narrowed = dom[nk] & support;
                if (narrowed == dom[nk]) continue;
                if (narrowed.empty()) return false;
                dom[nk] = narrowed;
                if (!queued[nk]) {
                    queued[nk] = 1;
                    queue.push_back(nk);
                }
            }
        }
        return true;
    }

    const TilingProblem& p_;
    const SolverOptions& opt_;
    Compiled c_;
    int w_, h_;
    std::mt19937_64 rng_;
};

} // namespace

std::uint64_t SolverOptions::default_node_cap() {
    if (const char* env = std::getenv("METALLIC_NODE_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 50'000'000;
}

std::optional<Pattern2D> solve(const TilingProblem& p, const SolverOptions& opt, SolveStats* stats) {
    Search s(p, opt);
    std::vector<TileMask> dom;
    std::optional<Pattern2D> found;
    if (s.init(dom))
        s.dfs(dom, [&](const Pattern2D& out) {
            found = out;
            return false;
        });
    if (stats) *stats = s.stats_;
    return found;
}

std::uint64_t for_each_solution(const TilingProblem& p, const std::function<bool(const Pattern2D&)>& visit,
                                const SolverOptions& opt) {
    Search s(p, opt);
    std::vector<TileMask> dom;
    std::uint64_t count = 0;
    if (s.init(dom))
        s.dfs(dom, [&](const Pattern2D& out) {
            ++count;
            return visit(out);
        });
    return count;
}

std::optional<Pattern2D> solve_torus(const WangTileSet& tiles, int p, int q, const SolverOptions& opt) {
    if (p < 1 || q < 1) throw DomainError("torus dimensions must be positive");
    const Compiled c(tiles);

    // Horizontally wrapping rows of width p.
    std::vector<std::vector<int>> rows;
    std::vector<int> row(p);
    std::function<void(int)> grow = [&](int i) {
        if (i == p) {
            if (c.right[row[p - 1]] == c.left[row[0]]) {
                if (rows.size() >= opt.row_cap)
                    throw ResourceError("torus row enumeration exceeded cap of " + std::to_string(opt.row_cap));
                rows.push_back(row);
            }
            return;
        }
        const TileMask cand = i == 0 ? c.all : c.east[row[i - 1]];
        cand.for_each([&](int t) {
            row[i] = t;
            grow(i + 1);
        });
    };
    grow(0);

    // Rows keyed by their bottom label vector; r -> s iff top(r) == bottom(s).
    auto key = [&](const std::vector<int>& r, bool top) {
        std::vector<int> k(p);
        for (int i = 0; i < p; ++i) k[i] = top ? c.top[r[i]] : c.bottom[r[i]];
        return k;
    };
    std::map<std::vector<int>, std::vector<int>> by_bottom;
    for (std::size_t r = 0; r < rows.size(); ++r) by_bottom[key(rows[r], false)].push_back(static_cast<int>(r));
    std::vector<std::vector<int>> succ(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        auto it = by_bottom.find(key(rows[r], true));
        if (it != by_bottom.end()) succ[r] = it->second;
    }

    // Closed walk of length q through some start row, found by layered
    // reachability with parent pointers.
    for (std::size_t start = 0; start < rows.size(); ++start) {
        std::vector<std::unordered_map<int, int>> layer(q + 1);
        layer[0][static_cast<int>(start)] = -1;
        for (int k = 0; k < q; ++k)
            for (const auto& [r, parent] : layer[k])
                for (int s : succ[r]) layer[k + 1].try_emplace(s, r);
        if (!layer[q].count(static_cast<int>(start))) continue;
        std::vector<int> walk(q + 1);
        walk[q] = static_cast<int>(start);
        for (int k = q; k > 0; --k) walk[k - 1] = layer[k].at(walk[k]);
        Pattern2D out(p, q);
        for (int j = 0; j < q; ++j)
            for (int i = 0; i < p; ++i) out.at(i, j) = rows[walk[j]][i];
        return out;
    }
    return std::nullopt;
}

bool has_surrounding(const WangTileSet& tiles, const Pattern2D& center, int radius, const SolverOptions& opt) {
    if (radius < 0) throw DomainError("radius must be nonnegative");
    if (!is_valid(tiles, center)) return false;
    TilingProblem p{&tiles, center.width() + 2 * radius, center.height() + 2 * radius, {}, {}, false};
    for (int j = 0; j < center.height(); ++j)
        for (int i = 0; i < center.width(); ++i) p.fixed[{i + radius, j + radius}] = center.at(i, j);
    return solve(p, opt).has_value();
}

std::set<std::pair<int, int>> dominoes_with_surrounding(const WangTileSet& tiles, int axis, int radius,
                                                        const SolverOptions& opt) {
    if (radius < 1) throw DomainError("radius must be at least 1");
    if (axis != 1 && axis != 2) throw DomainError("axis must be 1 or 2");
    std::set<std::pair<int, int>> out;
    for (std::size_t a = 0; a < tiles.size(); ++a)
        for (std::size_t b = 0; b < tiles.size(); ++b) {
            const bool match = axis == 1 ? tiles[a].right == tiles[b].left : tiles[a].top == tiles[b].bottom;
            if (!match) continue;
            const Pattern2D d = axis == 1 ? Pattern2D::from_rows({{int(a), int(b)}})
                                          : Pattern2D::from_rows({{int(a)}, {int(b)}});
            if (has_surrounding(tiles, d, radius, opt)) out.emplace(int(a), int(b));
        }
    return out;
}

std::set<Pattern2D> patterns_with_surrounding(const WangTileSet& tiles, int w, int h, int radius,
                                              const SolverOptions& opt) {
    if (radius < 1) throw DomainError("radius must be at least 1");
    std::set<Pattern2D> out;
    TilingProblem p{&tiles, w, h, {}, {}, false};
    for_each_solution(
        p,
        [&](const Pattern2D& cand) {
            if (has_surrounding(tiles, cand, radius, opt)) out.insert(cand);
            return true;
        },
        opt);
    return out;
}

SubTileset tiles_allowing_surrounding(const WangTileSet& tiles, int radius, const SolverOptions& opt) {
    if (radius < 1) throw DomainError("radius must be at least 1");
    SubTileset r;
    r.tiles.n = tiles.n;
    r.tiles.family = Family::Custom;
    for (std::size_t t = 0; t < tiles.size(); ++t) {
        if (has_surrounding(tiles, Pattern2D::from_rows({{int(t)}}), radius, opt)) {
            r.kept.push_back(static_cast<int>(t));
            r.tiles.tiles.push_back(tiles[t]);
            if (!tiles.names.empty()) r.tiles.names.push_back(tiles.names[t]);
        } else {
            r.dropped.push_back(static_cast<int>(t));
        }
    }
    return r;
}

std::optional<std::pair<int, int>> first_invalid_cell(const WangTileSet& tiles, const Pattern2D& p) {
    const int n = static_cast<int>(tiles.size());
    for (int j = 0; j < p.height(); ++j)
        for (int i = 0; i < p.width(); ++i) {
            const int t = p.at(i, j);
            if (t < 0 || t >= n) return std::make_pair(i, j);
            if (i + 1 < p.width()) {
                const int u = p.at(i + 1, j);
                if (u < 0 || u >= n || !(tiles[t].right == tiles[u].left)) return std::make_pair(i, j);
            }
            if (j + 1 < p.height()) {
                const int u = p.at(i, j + 1);
                if (u < 0 || u >= n || !(tiles[t].top == tiles[u].bottom)) return std::make_pair(i, j);
            }
        }
    return std::nullopt;
}

BoundaryWord bottom_word(const WangTileSet& tiles, const Pattern2D& p) {
    BoundaryWord w;
    for (int i = 0; i < p.width(); ++i) w.push_back(tiles[p.at(i, 0)].bottom);
    return w;
}

BoundaryWord top_word(const WangTileSet& tiles, const Pattern2D& p) {
    BoundaryWord w;
    for (int i = 0; i < p.width(); ++i) w.push_back(tiles[p.at(i, p.height() - 1)].top);
    return w;
}

BoundaryWord left_word(const WangTileSet& tiles, const Pattern2D& p) {
    BoundaryWord w;
    for (int j = 0; j < p.height(); ++j) w.push_back(tiles[p.at(0, j)].left);
    return w;
}

BoundaryWord right_word(const WangTileSet& tiles, const Pattern2D& p) {
    BoundaryWord w;
    for (int j = 0; j < p.height(); ++j) w.push_back(tiles[p.at(p.width() - 1, j)].right);
    return w;
}

} // namespace metallic
