#pragma once

#include "metallic/omega.hpp"
#include "metallic/pattern.hpp"
#include "metallic/tile.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace metallic {

// Optional boundary words of a rectangle. bottom/top are read left to
// right, left/right bottom to top.
struct BoundaryWords {
    std::optional<BoundaryWord> bottom, left, right, top;
};

struct TilingProblem {
    const WangTileSet* tileset = nullptr;
    int width = 0, height = 0;
    std::map<std::pair<int, int>, int> fixed; // (i, j) -> tile index
    BoundaryWords boundary;
    bool torus = false; // wrap-around adjacency (used by oracles)
};

enum class ValueOrder { Ascending, Descending, Shuffled };

struct SolverOptions {
    std::uint64_t node_cap = default_node_cap();
    ValueOrder order = ValueOrder::Ascending;
    std::uint64_t seed = 0;          // for ValueOrder::Shuffled
    std::uint64_t row_cap = 2000000; // torus row enumeration cap

    // 50 million, or METALLIC_NODE_CAP when set.
    static std::uint64_t default_node_cap();
};

struct SolveStats {
    std::uint64_t nodes = 0;      // branching decisions
    std::uint64_t backtracks = 0; // failed branches
};

// First solution in row-major cell order (bottom row first) with
// candidates tried in the configured order; nullopt proves that no tiling
// exists. Throws ResourceError when the node cap is hit.
std::optional<Pattern2D> solve(const TilingProblem& p, const SolverOptions& opt = {}, SolveStats* stats = nullptr);

// Calls `visit` on every solution in search order until it returns false.
// Returns the number of solutions visited.
std::uint64_t for_each_solution(const TilingProblem& p, const std::function<bool(const Pattern2D&)>& visit,
                                const SolverOptions& opt = {});

// Periodic tiling of the p x q torus via the row-transfer graph.
std::optional<Pattern2D> solve_torus(const WangTileSet& tiles, int p, int q, const SolverOptions& opt = {});

// True iff the pattern extended by `radius` cells on every side tiles.
bool has_surrounding(const WangTileSet& tiles, const Pattern2D& center, int radius, const SolverOptions& opt = {});

// Edge-matched adjacent pairs (a, b) that admit a radius-r surrounding.
// axis 1: a left of b; axis 2: a below b.
std::set<std::pair<int, int>> dominoes_with_surrounding(const WangTileSet& tiles, int axis, int radius,
                                                        const SolverOptions& opt = {});

// All valid w x h patterns admitting a radius-r surrounding.
std::set<Pattern2D> patterns_with_surrounding(const WangTileSet& tiles, int w, int h, int radius,
                                              const SolverOptions& opt = {});

struct SubTileset {
    WangTileSet tiles;
    std::vector<int> kept;    // original indices, ascending
    std::vector<int> dropped; // original indices, ascending
};

// Tiles whose single-cell pattern admits a radius-r surrounding.
SubTileset tiles_allowing_surrounding(const WangTileSet& tiles, int radius, const SolverOptions& opt = {});

// Edge-matching check of a pattern; returns the first bad cell if any.
std::optional<std::pair<int, int>> first_invalid_cell(const WangTileSet& tiles, const Pattern2D& p);
inline bool is_valid(const WangTileSet& tiles, const Pattern2D& p) { return !first_invalid_cell(tiles, p); }

// Boundary words of a pattern.
BoundaryWord bottom_word(const WangTileSet& tiles, const Pattern2D& p);
BoundaryWord top_word(const WangTileSet& tiles, const Pattern2D& p);
BoundaryWord left_word(const WangTileSet& tiles, const Pattern2D& p);
BoundaryWord right_word(const WangTileSet& tiles, const Pattern2D& p);

} // namespace metallic
