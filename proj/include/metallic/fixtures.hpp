#pragma once

#include "metallic/substitution.hpp"
#include "metallic/tile.hpp"

namespace metallic::fixtures {

// T_1 in the order used by the published computer session.
WangTileSet t1_published();
// T_2 in the order used by the published computer session.
WangTileSet t2_published();

// A 16-tile Ammann-type set over symbols 1..6, tiles permuted relative to
// T_1. Related to T_1 by the symbol map 1->112, 2->111, 3->001, 4->011,
// 5->012, 6->000 on both edge orientations.
WangTileSet ammann16();

// The 29-tile intermediate set obtained by fusing T_2 twice along each
// axis: the images under tau_2 of the 25 tiles of T_2 together with the
// two antigreen tiles a^1, hat(a^1) and the junctions j^{0011}, j^{1100}.
// The four extra tiles sit at indices 11, 14, 20 and 27.
WangTileSet u4_published();

// Three-letter substitution (a=0, b=1, c=2, every image 5x3) whose
// vertical domino (a over b) is recurrent in G^{1x2} yet absent from
// its substitutive language.
Substitution2D nu();

} // namespace metallic::fixtures
