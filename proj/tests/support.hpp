#pragma once

// Shared oracles for the unit tests and the acceptance runner. Everything
// here is deliberately naive: exhaustive enumeration and direct checks that
// do not share code paths with the library routines they validate.

#include "metallic/omega.hpp"
#include "metallic/solver.hpp"

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace support {

using namespace metallic;

inline bool edges_match(const WangTileSet& t, const Pattern2D& p, bool torus) {
    const int w = p.width(), h = p.height();
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) {
            const WangTile& c = t[p.at(i, j)];
            if (i + 1 < w || torus)
                if (c.right != t[p.at((i + 1) % w, j)].left) return false;
            if (j + 1 < h || torus)
                if (c.top != t[p.at(i, (j + 1) % h)].bottom) return false;
        }
    return true;
}

// Every assignment in lexicographic order of the row-major cell sequence
// (bottom row first, left to right), which is the solver's search order.
inline void enumerate_all(int tiles, int w, int h, const std::function<bool(const Pattern2D&)>& visit) {
    Pattern2D p(w, h, 0);
    const int cells = w * h;
    while (true) {
        if (!visit(p)) return;
        int k = cells - 1;
        while (k >= 0) {
            int& c = p.at(k % w, k / w);
            if (++c < tiles) break;
            c = 0;
            --k;
        }
        if (k < 0) return;
    }
}

// Least solution of a rectangle problem by exhaustive enumeration.
inline std::optional<Pattern2D> brute_force_solve(const TilingProblem& pr) {
    const WangTileSet& t = *pr.tileset;
    std::optional<Pattern2D> found;
    enumerate_all(static_cast<int>(t.size()), pr.width, pr.height, [&](const Pattern2D& p) {
        for (const auto& [cell, tile] : pr.fixed)
            if (p.at(cell.first, cell.second) != tile) return true;
        if (!edges_match(t, p, pr.torus)) return true;
        const auto& b = pr.boundary;
        for (int i = 0; i < p.width(); ++i) {
            if (b.bottom && t[p.at(i, 0)].bottom != (*b.bottom)[i]) return true;
            if (b.top && t[p.at(i, p.height() - 1)].top != (*b.top)[i]) return true;
        }
        for (int j = 0; j < p.height(); ++j) {
            if (b.left && t[p.at(0, j)].left != (*b.left)[j]) return true;
            if (b.right && t[p.at(p.width() - 1, j)].right != (*b.right)[j]) return true;
        }
        found = p;
        return false;
    });
    return found;
}

// A uniformly seeded random valid pattern, found by the solver with
// shuffled candidate order. Validity is re-checked by the caller.
inline Pattern2D random_valid_pattern(const WangTileSet& t, int w, int h, std::uint64_t seed) {
    SolverOptions opt;
    opt.order = ValueOrder::Shuffled;
    opt.seed = seed;
    std::mt19937_64 rng(seed);
    TilingProblem pr{&t, w, h, {}, {}, false};
    // Pin a random corner tile first so different seeds spread out.
    for (int attempt = 0; attempt < 50; ++attempt) {
        pr.fixed = {{{static_cast<int>(rng() % w), static_cast<int>(rng() % h)}, static_cast<int>(rng() % t.size())}};
        if (auto p = solve(pr, opt)) return *p;
    }
    pr.fixed.clear();
    return *solve(pr, opt);
}

// Reachability from v back to v in at least one step, by plain DFS.
inline bool on_cycle_naive(const std::vector<std::vector<int>>& g, int v) {
    std::vector<bool> seen(g.size(), false);
    std::vector<int> stack(g[v].begin(), g[v].end());
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        if (u == v) return true;
        if (seen[u]) continue;
        seen[u] = true;
        for (int x : g[u]) stack.push_back(x);
    }
    return false;
}

// Index of each tile of `sub` inside `super` (both must be duplicate free).
inline std::vector<int> index_map(const WangTileSet& sub, const WangTileSet& super) {
    std::vector<int> out;
    for (const WangTile& t : sub.tiles) out.push_back(super.index_of(t).value_or(-1));
    return out;
}

// Independent recognizability oracle. Counts every way of covering y by a
// grid of omega'_n blocks anchored at an offset inside the first block:
// each grid cell is any tile of T'_n whose block agrees with y on the
// overlap, image widths agree down columns and heights along rows.
// A block counts as complete when it and the junction lines closing it
// on the right and top lie inside y; only those tiles are recorded,
// together with the position of the first complete block. Cells past the
// last closing line cannot tell a narrow block from a cut-off wide one. Returns the distinct
// (position, fully covered tiles) outcomes.
struct Representation {
    int x0 = 0, y0 = 0;                           // first complete block corner, or -1
    std::vector<std::pair<std::pair<int, int>, int>> complete; // (x, y) -> T'_n tile
    auto operator<=>(const Representation&) const = default;
};

inline std::set<Representation> all_representations(int n, const Pattern2D& y_core) {
    const WangTileSet full = metallic_tiles(n, true);
    const WangTileSet core = metallic_tiles(n, false);
    const std::vector<int> to_full = index_map(core, full);
    Pattern2D y(y_core.width(), y_core.height());
    for (int j = 0; j < y.height(); ++j)
        for (int i = 0; i < y.width(); ++i) y.at(i, j) = to_full[y_core.at(i, j)];

    std::vector<Pattern2D> blocks;
    for (const WangTile& t : full.tiles) blocks.push_back(block_image(n, t));
    const int W = y.width(), H = y.height();
    const int k = static_cast<int>(full.size());

    auto agrees = [&](int t, int x, int yy) {
        const Pattern2D& b = blocks[t];
        for (int j = 0; j < b.height(); ++j)
            for (int i = 0; i < b.width(); ++i) {
                const int X = x + i, Y = yy + j;
                if (X < 0 || Y < 0 || X >= W || Y >= H) continue;
                if (y.at(X, Y) != b.at(i, j)) return false;
            }
        return true;
    };

    std::set<Representation> out;
    // Offsets: the block covering cell (0,0) starts at (-ox, -oy).
    for (int ox = 0; ox <= n; ++ox)
        for (int oy = 0; oy <= n; ++oy) {
            std::vector<int> colx{-ox}, rowy{-oy};
            std::map<std::pair<int, int>, int> chosen;
            auto record = [&] {
                Representation r{-1, -1, {}};
                for (const auto& [cell, t] : chosen) {
                    const int x = colx[cell.first], yy = rowy[cell.second];
                    if (x >= 0 && yy >= 0 && x + blocks[t].width() < W && yy + blocks[t].height() < H) {
                        if (r.x0 < 0) r.x0 = x, r.y0 = yy;
                        r.complete.push_back({{x, yy}, t});
                    }
                }
                out.insert(r);
            };
            std::function<void(int, int)> place = [&](int ci, int cj) {
                const bool new_col = cj == 0 && ci == static_cast<int>(colx.size()) - 1;
                const bool new_row = ci == 0 && cj == static_cast<int>(rowy.size()) - 1;
                const int x = colx[ci], yy = rowy[cj];
                // A partially visible block only matters through its size.
                std::set<std::pair<int, int>> partial_sizes;
                for (int t = 0; t < k; ++t) {
                    const int bw = blocks[t].width(), bh = blocks[t].height();
                    if (x < 0 && bw <= -x) continue; // the offset lies inside the first block
                    if (yy < 0 && bh <= -yy) continue;
                    const bool complete = x >= 0 && yy >= 0 && x + bw < W && yy + bh < H;
                    if (!complete && partial_sizes.count({bw, bh})) continue;
                    if (!new_col && colx[ci + 1] - x != bw) continue;
                    if (!new_row && rowy[cj + 1] - yy != bh) continue;
                    if (!agrees(t, x, yy)) continue;
                    if (!complete) partial_sizes.insert({bw, bh});
                    if (new_col) colx.push_back(x + bw);
                    if (new_row) rowy.push_back(yy + bh);
                    chosen[{ci, cj}] = t;
                    const bool row_done = cj == 0 ? colx[ci + 1] >= W : ci + 2 == static_cast<int>(colx.size());
                    if (!row_done)
                        place(ci + 1, cj);
                    else if (rowy[cj + 1] < H)
                        place(0, cj + 1);
                    else
                        record();
                    chosen.erase({ci, cj});
                    if (new_row) rowy.pop_back();
                    if (new_col) colx.pop_back();
                }
            };
            place(0, 0);
        }
    return out;
}


// A random valid pattern x over T_n (canonical order) inside a frame of
// one extra column and row on each side. The lower-left frame tile is a
// junction, so the blocks to the left of and below x are n+1 wide and
// high and any shift k in {0..n}^2 stays inside them.
struct FramedSample {
    Pattern2D frame; // (w+2) x (h+2)
    Pattern2D x;     // frame.sub(1, 1, w, h)
};

inline FramedSample framed_sample(int n, int w, int h, std::uint64_t seed) {
    const WangTileSet core = metallic_tiles(n, false);
    std::mt19937_64 rng(seed);
    std::vector<int> junctions;
    for (std::size_t i = 0; i < core.size(); ++i)
        if (core[i].bottom.v0() == 0 && core[i].left.v0() == 0) junctions.push_back(static_cast<int>(i));
    SolverOptions opt;
    opt.order = ValueOrder::Shuffled;
    for (int attempt = 0;; ++attempt) {
        opt.seed = rng();
        TilingProblem pr{&core, w + 2, h + 2, {}, {}, false};
        pr.fixed[{0, 0}] = junctions[rng() % junctions.size()];
        pr.fixed[{static_cast<int>(1 + rng() % w), static_cast<int>(1 + rng() % h)}] = rng() % core.size();
        if (auto p = solve(pr, opt)) return {*p, p->sub(1, 1, w, h)};
        if (attempt > 200) throw std::runtime_error("framed_sample: no sample found");
    }
}

// The image of the framed sample cut so that x's blocks are complete,
// the closing junction lines are included, and k extra columns and rows
// of the neighbouring blocks stick out on the left and bottom.
inline Pattern2D shifted_image(int n, const FramedSample& s, int k1, int k2) {
    const Substitution2D w = build_omega(n, false);
    const Pattern2D y = apply(w, s.frame);
    const int x0 = w[s.frame.at(0, 0)].width(), y0 = w[s.frame.at(0, 0)].height();
    int x_end = x0, y_end = y0;
    for (int i = 1; i + 1 < s.frame.width(); ++i) x_end += w[s.frame.at(i, 0)].width();
    for (int j = 1; j + 1 < s.frame.height(); ++j) y_end += w[s.frame.at(0, j)].height();
    return y.sub(x0 - k1, y0 - k2, x_end - x0 + k1 + 1, y_end - y0 + k2 + 1);
}

} // namespace support
