#pragma once

#include "metallic/equivalence.hpp"
#include "metallic/linalg.hpp"
#include "metallic/omega.hpp"
#include "metallic/solver.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace metallic {

// Junction lines of a pattern: junction tiles sit exactly at
// columns x rows, with consecutive gaps in {n, n+1}.
struct ReturnBlockGrid {
    std::vector<int> columns; // A, strictly increasing
    std::vector<int> rows;    // B, strictly increasing
};

struct GridResult {
    std::optional<ReturnBlockGrid> grid;
    std::string diagnostic; // why no grid, with a position
};

// `tiles` must be a metallic set (classification decides junctions).
GridResult find_junction_grid(const Pattern2D& p, const WangTileSet& tiles);

struct Desubstitution {
    Pattern2D preimage;     // over canonical T'_n indices
    std::pair<int, int> shift; // lower-left corner of the first complete block
    ReturnBlockGrid grid;
};

// Decodes every return block bounded by junction lines on all four sides
// (tau-inverse of its boundary words), dropping incomplete border blocks.
// `p` is over metallic_tiles(n, false) in canonical order. Throws
// RecognizabilityError naming the block when a boundary is not a
// tau-image or the decoded block differs from its omega'-image.
Desubstitution desubstitute(int n, const Pattern2D& p);

// ---- marker / fusion pipeline ----

// Maximal marker sets for direction e_axis at the given surrounding
// radius: unions of connectivity classes of the surrounded dominoes
// perpendicular to the axis, with no surrounded domino along the axis
// joining two members.
std::vector<std::vector<int>> find_markers(const WangTileSet& tiles, int axis, int radius,
                                           const SolverOptions& opt = {});

enum class Side { Left, Right };
Side parse_side(const std::string& s);
std::string side_name(Side s);

struct FusionStep {
    std::vector<int> markers;
    int axis = 1;
    Side side = Side::Right;
    int radius = 1;
    WangTileSet produced;
    Substitution2D substitution; // produced tiles -> 1- or 2-cell patterns over the input
};

// Merges every marker with each surrounded neighbor on `side`
// (Left: marker on the left/bottom of the pair, Right: marker on the
// right/top); non-markers are kept. Labels along the fused edge are
// concatenated in reading order.
FusionStep fuse(const WangTileSet& tiles, const std::vector<int>& markers, int axis, Side side, int radius,
                const SolverOptions& opt = {});

struct PipelineRadii {
    int markers = 1;
    int first_fusion = 2;
    int fusion = 1;
    int prune = 2;
};

struct SelfSimilarityReport {
    int n = 0;
    std::vector<std::vector<int>> marker_sets; // marker set used at each fusion
    std::vector<FusionStep> steps;
    SubTileset pruned;                     // tiles of the last fusion kept by pruning
    EquivalenceCertificate certificate;    // input tile set -> pruned set
    Substitution2D composed;               // endomorphism of the input set
    IntPoly charpoly;
    Factorization factorization;
    double perron = 0;
    bool matches_omega = false; // composed == omega_n up to the certificate's bijection
};

// Radii that carry the pipeline through for T_n: the defaults for n <= 2,
// radius 2 searches and radius 2n pruning beyond (checked up to n = 4).
PipelineRadii default_radii(int n);

// Fuses along e_1 n times and along e_2 n times, prunes tiles without a
// surrounding, proves equivalence with the input and composes the steps.
// The first n-1 fusions of an axis take the marker on the left (bottom)
// so the block grows from its junction line; the last takes it on the
// right (top) to absorb the optional (n+1)-th column (row).
// `tiles` must be T_n in some order. Throws PipelineError naming the
// failing stage.
SelfSimilarityReport verify_self_similarity(const WangTileSet& tiles, const PipelineRadii& radii,
                                            const SolverOptions& opt = {});
SelfSimilarityReport verify_self_similarity(const WangTileSet& tiles);

} // namespace metallic
