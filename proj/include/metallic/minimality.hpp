#pragma once

#include "metallic/graph.hpp"
#include "metallic/pattern.hpp"
#include "metallic/solver.hpp"
#include "metallic/substitution.hpp"

#include <set>
#include <string>
#include <vector>

namespace metallic {

// 2x1 is a horizontal domino, 1x2 a vertical one.
enum class Shape { S2x2, S2x1, S1x2 };

std::string shape_name(Shape s); // "2x2", "2x1", "1x2"
Shape parse_shape(const std::string& s);
int shape_width(Shape s);
int shape_height(Shape s);

// Which candidate patterns become vertices.
enum class GraphScope {
    Full,  // every pattern whose letters have aligned images
    Image, // only targets of some edge; same recurrent vertices, far fewer for 2x2
};

// Graph of patterns straddling the images of neighbouring letters. Letters
// placed side by side must have images of equal height, letters placed one
// above the other images of equal width. An edge u -> v means v straddles
// the seams of s(u) at the matching position.
struct AdjacencyGraph {
    Shape shape = Shape::S2x2;
    std::vector<Pattern2D> vertices; // sorted
    Digraph edges;                   // successor lists over vertex indices

    int index_of(const Pattern2D& p) const; // -1 when absent
};

AdjacencyGraph build_graph(const Substitution2D& s, Shape shape, GraphScope scope = GraphScope::Full);

std::set<Pattern2D> recurrent_vertices(const AdjacencyGraph& g);

// Recurrent vertices of G^shape that never occur in the substitutive language.
std::set<Pattern2D> recurrent_outside_language(const Substitution2D& s, Shape shape);

struct MinimalityRadii {
    int r1x2 = 1;
    int r2x1 = 1;
    int r2x2 = 3;
};

struct ShapeReport {
    Shape shape = Shape::S2x2;
    int radius = 1;
    std::set<Pattern2D> solver_language;       // over-approximation at `radius`
    std::set<Pattern2D> substitutive_language;
    bool languages_equal = false;
    bool recurrent_computed = false;           // skipped when the languages agree
    std::set<Pattern2D> recurrent;
    std::set<Pattern2D> violations;            // solver ∩ recurrent, not substitutive
    bool inconclusive = false;                 // solver hit its node cap
    std::string note;

    bool holds() const { return !inconclusive && violations.empty(); }
};

struct MinimalityReport {
    int n = 0;
    std::vector<ShapeReport> shapes; // 2x2, 2x1, 1x2
    bool inconclusive() const;
    bool minimal() const; // criterion holds for all three shapes
};

// Evaluates the three-shape minimality criterion for the Wang shift of T_n
// (canonical order) against omega_n. Solver languages are computed from
// surroundings of the given radii.
MinimalityReport check_minimality(int n, const MinimalityRadii& radii = {}, const SolverOptions& opt = {});

} // namespace metallic
