#pragma once

#include "metallic/families.hpp"
#include "metallic/substitution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace metallic {

using BoundaryWord = std::vector<Label>;

// The boundary substitution tau_n. For v = xyz:
//   x != z: 0(x-y+1)n (11n)^(z-x-1) (11(n+1))^(n+1-z)
//   x == z: 0(x-y+1)(n+1) (11(n+1))^(n-z)
// The word has length n + 1 - x.
BoundaryWord tau(int n, const Label& v);

// Inverse of tau_n on its image.
std::optional<Label> tau_inverse(int n, const BoundaryWord& w);

// Bottom-right part of the junction tile at the start of a strip.
struct Corner2 {
    Label right, bottom;
};

struct StripResult {
    Corner2 corner;
    std::vector<WangTile> tiles; // stripe tiles left to right
    BoundaryWord gamma;          // their top labels
    Label delta;                 // right label of the last tile (or of the corner)
};

// The unique junction corner and horizontal stripe tiles whose bottom
// labels read tau_n(v).
StripResult horizontal_strip(int n, const Label& v);

// Rectangle over T'_n (canonical indices of metallic_tiles(n, true))
// whose boundary words are tau_n of the four labels of t.
Pattern2D block_image(int n, const WangTile& t);

// omega'_n over T'_n (extended) or its restriction omega_n to T_n, both
// expressed in the canonical ordering of the respective tile set.
Substitution2D build_omega(int n, bool extended);

// omega_n transported to another ordering of T_n (e.g. a published
// fixture): letter i of `order` maps to its block over `order` indices.
Substitution2D build_omega_for(const WangTileSet& order);

// Boundary compatibility: there is a rectangle whose left word is
// tau_n(u) and bottom word is tau_n(v).
bool boundary_compatible(int n, const Label& u, const Label& v);

// The one-dimensional substitution a -> a b^n, b -> a b^(n-1) as a
// height-1 2-D substitution over {a = 0, b = 1}.
Substitution2D rho(int n);

struct ZetaReport {
    bool ok = true;
    std::string detail; // first mismatch, if any
};

// Checks (rho_n x rho_n)(zeta(t)) = zeta(omega_n(t)) cell by cell for
// every tile t of T_n.
ZetaReport zeta_refinement_check(int n);

} // namespace metallic
