#include "metallic/selfsim.hpp"

#include "metallic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace metallic {

namespace {

bool is_junction(const WangTile& t) {
    return t.right.size() > 0 && t.top.size() > 0 && t.left.size() > 0 && t.bottom.size() > 0 && t.right[0] == 0 &&
           t.top[0] == 0 && t.left[0] == 0 && t.bottom[0] == 0;
}

std::string at_str(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

} // namespace

GridResult find_junction_grid(const Pattern2D& p, const WangTileSet& tiles) {
    if (auto bad = first_invalid_cell(tiles, p))
        throw DomainError("pattern is not a valid tiling at " + at_str(bad->first, bad->second));
    const int n = tiles.n;
    std::set<int> cols, rows;
    std::vector<std::pair<int, int>> hits;
    for (int j = 0; j < p.height(); ++j)
        for (int i = 0; i < p.width(); ++i)
            if (is_junction(tiles[p.at(i, j)])) {
                cols.insert(i);
                rows.insert(j);
                hits.emplace_back(i, j);
            }
    GridResult r;
    if (hits.size() != cols.size() * rows.size()) {
        for (int c : cols)
            for (int rr : rows)
                if (!is_junction(tiles[p.at(c, rr)])) {
                    r.diagnostic = "junction positions are not a Cartesian product; missing junction at " + at_str(c, rr);
                    return r;
                }
    }
    auto gaps_ok = [&](const std::set<int>& s, const char* what) {
        int prev = -1;
        for (int x : s) {
            if (prev >= 0 && x - prev != n && x - prev != n + 1) {
                r.diagnostic = std::string(what) + " gap " + std::to_string(x - prev) + " at " + std::to_string(x) +
                               " is not n or n+1";
                return false;
            }
            prev = x;
        }
        return true;
    };
    if (!gaps_ok(cols, "column") || !gaps_ok(rows, "row")) return r;
    r.grid = ReturnBlockGrid{std::vector<int>(cols.begin(), cols.end()), std::vector<int>(rows.begin(), rows.end())};
    return r;
}

Desubstitution desubstitute(int n, const Pattern2D& p) {
    const WangTileSet core = metallic_tiles(n, false);
    const WangTileSet full = metallic_tiles(n, true);
    GridResult g = find_junction_grid(p, core);
    if (!g.grid) throw RecognizabilityError(g.diagnostic);
    const auto& A = g.grid->columns;
    const auto& B = g.grid->rows;
    if (A.size() < 2 || B.size() < 2)
        throw RecognizabilityError("pattern contains no return block bounded by junction lines on all sides");

    std::map<WangTile, int> full_index;
    for (std::size_t i = 0; i < full.size(); ++i) full_index.emplace(full[i], static_cast<int>(i));
    std::map<int, int> core_to_full;
    for (std::size_t i = 0; i < core.size(); ++i) core_to_full[static_cast<int>(i)] = full_index.at(core[i]);

    Pattern2D pre(static_cast<int>(A.size()) - 1, static_cast<int>(B.size()) - 1);
    for (std::size_t bj = 0; bj + 1 < B.size(); ++bj)
        for (std::size_t bi = 0; bi + 1 < A.size(); ++bi) {
            const int x = A[bi], y = B[bj], w = A[bi + 1] - x, h = B[bj + 1] - y;
            const Pattern2D block = p.sub(x, y, w, h);
            const std::string where = "block at " + at_str(x, y);
            auto decode = [&](const BoundaryWord& word, const char* side) {
                auto v = tau_inverse(n, word);
                if (!v) throw RecognizabilityError(where + ": " + side + " word " + join_labels(word) + " is not a tau-image");
                return *v;
            };
            const WangTile t{decode(right_word(core, block), "right"), decode(top_word(core, block), "top"),
                             decode(left_word(core, block), "left"), decode(bottom_word(core, block), "bottom")};
            auto it = full_index.find(t);
            if (it == full_index.end()) throw RecognizabilityError(where + ": decoded tile " + t.str() + " is not in T'_n");
            Pattern2D expect = block_image(n, t);
            for (int j = 0; j < h; ++j)
                for (int i = 0; i < w; ++i)
                    if (core_to_full.at(block.at(i, j)) != expect.at(i, j))
                        throw RecognizabilityError(where + ": contents differ from the image of " + t.str());
            pre.at(static_cast<int>(bi), static_cast<int>(bj)) = it->second;
        }
    return Desubstitution{pre, {A.front(), B.front()}, *g.grid};
}

// ---------------------------------------------------------------------------

std::vector<std::vector<int>> find_markers(const WangTileSet& tiles, int axis, int radius, const SolverOptions& opt) {
    if (axis != 1 && axis != 2) throw DomainError("axis must be 1 or 2");
    // Markers for e_1 fill whole columns: constant along vertical dominoes
    // (axis 2) and never adjacent along horizontal ones (axis 1).
    const int across = axis == 1 ? 2 : 1;
    const auto along_pairs = dominoes_with_surrounding(tiles, axis, radius, opt);
    const auto across_pairs = dominoes_with_surrounding(tiles, across, radius, opt);

    const int count = static_cast<int>(tiles.size());
    std::vector<int> parent(count);
    for (int i = 0; i < count; ++i) parent[i] = i;
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    std::vector<bool> seen(count, false);
    for (auto [a, b] : across_pairs) {
        seen[a] = seen[b] = true;
        parent[root(a)] = root(b);
    }
    std::map<int, std::vector<int>> classes_by_root;
    for (int i = 0; i < count; ++i)
        if (seen[i]) classes_by_root[root(i)].push_back(i);
    std::vector<std::vector<int>> classes;
    for (auto& [r, members] : classes_by_root) classes.push_back(members);
    std::sort(classes.begin(), classes.end());

    const int k = static_cast<int>(classes.size());
    std::vector<int> class_of(count, -1);
    for (int c = 0; c < k; ++c)
        for (int t : classes[c]) class_of[t] = c;
    std::vector<std::vector<bool>> conflict(k, std::vector<bool>(k, false));
    for (auto [a, b] : along_pairs) {
        const int ca = class_of[a], cb = class_of[b];
        if (ca >= 0 && cb >= 0) conflict[ca][cb] = conflict[cb][ca] = true;
    }

    // Maximal independent sets of the conflict graph (Bron-Kerbosch on
    // the complement), skipping self-conflicting classes.
    std::vector<std::vector<int>> found;
    std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> grow =
        [&](std::vector<int>& chosen, std::vector<int> cand, std::vector<int> excluded) {
            if (cand.empty() && excluded.empty()) {
                if (!chosen.empty()) found.push_back(chosen);
                return;
            }
            while (!cand.empty()) {
                const int v = cand.front();
                std::vector<int> nc, ne;
                for (int u : cand)
                    if (u != v && !conflict[u][v]) nc.push_back(u);
                for (int u : excluded)
                    if (!conflict[u][v]) ne.push_back(u);
                chosen.push_back(v);
                grow(chosen, nc, ne);
                chosen.pop_back();
                cand.erase(cand.begin());
                excluded.push_back(v);
            }
        };
    std::vector<int> usable;
    for (int c = 0; c < k; ++c)
        if (!conflict[c][c]) usable.push_back(c);
    std::vector<int> chosen;
    grow(chosen, usable, {});

    std::vector<std::vector<int>> out;
    for (const auto& set : found) {
        std::vector<int> tiles_in;
        for (int c : set) tiles_in.insert(tiles_in.end(), classes[c].begin(), classes[c].end());
        std::sort(tiles_in.begin(), tiles_in.end());
        out.push_back(std::move(tiles_in));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Side parse_side(const std::string& s) {
    if (s == "left") return Side::Left;
    if (s == "right") return Side::Right;
    throw DomainError("side must be 'left' or 'right'");
}

std::string side_name(Side s) { return s == Side::Left ? "left" : "right"; }

FusionStep fuse(const WangTileSet& tiles, const std::vector<int>& markers, int axis, Side side, int radius,
                const SolverOptions& opt) {
    if (axis != 1 && axis != 2) throw DomainError("axis must be 1 or 2");
    const int count = static_cast<int>(tiles.size());
    std::vector<bool> is_marker(count, false);
    for (int m : markers) {
        if (m < 0 || m >= count) throw DomainError("marker index out of range");
        is_marker[m] = true;
    }
    const auto along = dominoes_with_surrounding(tiles, axis, radius, opt);
    for (auto [a, b] : along)
        if (is_marker[a] && is_marker[b])
            throw PipelineError("markers " + std::to_string(a) + " and " + std::to_string(b) + " are adjacent along e" +
                                std::to_string(axis));

    FusionStep step;
    step.markers = markers;
    step.axis = axis;
    step.side = side;
    step.radius = radius;
    step.produced.n = tiles.n;
    step.produced.family = Family::Custom;
    step.substitution.codomain_size = count;
    const bool named = !tiles.names.empty();

    // A non-marker survives alone only if some surrounded domino places a
    // non-marker where its marker would sit; otherwise it is always absorbed.
    std::vector<bool> free_standing(count, false);
    for (auto [a, b] : along) {
        if (side == Side::Left && !is_marker[a] && !is_marker[b]) free_standing[b] = true;
        if (side == Side::Right && !is_marker[a] && !is_marker[b]) free_standing[a] = true;
    }
    for (int t = 0; t < count; ++t) {
        if (is_marker[t] || !free_standing[t]) continue;
        step.produced.tiles.push_back(tiles[t]);
        if (named) step.produced.names.push_back(tiles.names[t]);
        step.substitution.images.push_back(Pattern2D::from_rows({{t}}));
    }
    // (first, second) in reading order: left-to-right or bottom-to-top.
    for (auto [a, b] : along) {
        const bool take = side == Side::Left ? is_marker[a] : is_marker[b];
        if (!take) continue;
        const WangTile& u = tiles[a];
        const WangTile& v = tiles[b];
        WangTile f = axis == 1 ? WangTile{v.right, u.top + v.top, u.left, u.bottom + v.bottom}
                               : WangTile{u.right + v.right, v.top, u.left + v.left, u.bottom};
        step.produced.tiles.push_back(f);
        if (named) step.produced.names.push_back(tiles.names[a] + (axis == 1 ? "|" : "/") + tiles.names[b]);
        step.substitution.images.push_back(axis == 1 ? Pattern2D::from_rows({{a, b}}) : Pattern2D::from_rows({{a}, {b}}));
    }
    step.produced.validate();
    return step;
}

PipelineRadii default_radii(int n) {
    if (n < 1) throw DomainError("n must be positive");
    if (n <= 2) return {};
    return {2, 2, 2, 2 * n};
}

SelfSimilarityReport verify_self_similarity(const WangTileSet& tiles) {
    return verify_self_similarity(tiles, default_radii(tiles.n));
}

SelfSimilarityReport verify_self_similarity(const WangTileSet& tiles, const PipelineRadii& radii,
                                            const SolverOptions& opt) {
    const int n = tiles.n;
    if (n < 1) throw DomainError("n must be positive");
    SelfSimilarityReport rep;
    rep.n = n;
    WangTileSet current = tiles;
    for (int axis = 1; axis <= 2; ++axis)
        for (int k = 0; k < n; ++k) {
            const std::string stage = "fusion " + std::to_string(rep.steps.size() + 1) + " (e" + std::to_string(axis) + ")";
            auto sets = find_markers(current, axis, radii.markers, opt);
            if (sets.empty()) throw PipelineError(stage + ": no marker set found");
            if (sets.size() > 1) throw PipelineError(stage + ": " + std::to_string(sets.size()) + " marker sets, expected one");
            rep.marker_sets.push_back(sets.front());
            const Side side = k + 1 < n ? Side::Left : Side::Right;
            const int radius = rep.steps.empty() ? radii.first_fusion : radii.fusion;
            rep.steps.push_back(fuse(current, sets.front(), axis, side, radius, opt));
            current = rep.steps.back().produced;
        }
    rep.pruned = tiles_allowing_surrounding(current, radii.prune, opt);
    auto cert = equivalent(tiles, rep.pruned.tiles);
    if (!cert) throw PipelineError("pruned set of " + std::to_string(rep.pruned.tiles.size()) +
                                   " tiles is not equivalent to the input set");
    rep.certificate = *cert;

    // Compose: input letter -> pruned letter -> last fused set -> ... -> input.
    Substitution2D inclusion;
    inclusion.codomain_size = static_cast<int>(current.size());
    for (int k : rep.pruned.kept) inclusion.images.push_back(Pattern2D::from_rows({{k}}));
    Substitution2D bijection;
    bijection.codomain_size = static_cast<int>(rep.pruned.tiles.size());
    for (int j : rep.certificate.tile_bijection) bijection.images.push_back(Pattern2D::from_rows({{j}}));
    Substitution2D acc = compose(inclusion, bijection);
    for (auto it = rep.steps.rbegin(); it != rep.steps.rend(); ++it) acc = compose(it->substitution, acc);
    acc.names = tiles.names;
    rep.composed = acc;

    const IntMatrix m = incidence(rep.composed);
    rep.charpoly = char_poly(m);
    rep.factorization = factor_small(rep.charpoly);
    rep.perron = perron_eigenvalue(m, 1e-13).eigenvalue;
    Substitution2D omega = build_omega_for(tiles);
    rep.matches_omega = omega.images == rep.composed.images;
    return rep;
}

} // namespace metallic
