#include "published.hpp"
#include "support.hpp"

#include "metallic/errors.hpp"
#include "metallic/families.hpp"
#include "metallic/fixtures.hpp"
#include "metallic/selfsim.hpp"

#include <doctest.h>

#include <cmath>

using namespace metallic;

TEST_SUITE("return blocks") {
    TEST_CASE("junction grid of an omega image has gaps n and n+1") {
        for (int n = 1; n <= 3; ++n) {
            const WangTileSet core = metallic_tiles(n, false);
            const Substitution2D w = build_omega(n, false);
            for (std::uint64_t seed = 1; seed <= 10; ++seed) {
                const Pattern2D x = support::random_valid_pattern(core, 3, 3, seed + 17 * n);
                const GridResult g = find_junction_grid(apply(w, x), core);
                REQUIRE_MESSAGE(g.grid, g.diagnostic);
                CHECK(g.grid->columns.size() == 3);
                CHECK(g.grid->rows.size() == 3);
                for (const auto* s : {&g.grid->columns, &g.grid->rows})
                    for (std::size_t i = 1; i < s->size(); ++i) {
                        const int gap = (*s)[i] - (*s)[i - 1];
                        CHECK((gap == n || gap == n + 1));
                    }
            }
        }
    }

    TEST_CASE("gaps stay in {n, n+1} on solver samples") {
        for (int n = 1; n <= 3; ++n) {
            const WangTileSet core = metallic_tiles(n, false);
            for (std::uint64_t seed = 1; seed <= 20; ++seed) {
                const Pattern2D p = support::random_valid_pattern(core, 9, 9, seed * 7 + n);
                const GridResult g = find_junction_grid(p, core);
                CHECK_MESSAGE(g.grid, g.diagnostic);
            }
        }
    }

    TEST_CASE("size laws of return blocks") {
        for (int n = 1; n <= 3; ++n) {
            const WangTileSet core = metallic_tiles(n, false);
            const Label zero_zero_n{0, 0, n};
            for (std::uint64_t seed = 1; seed <= 20; ++seed) {
                const Pattern2D p = support::random_valid_pattern(core, 10, 10, seed * 13 + n);
                const GridResult g = find_junction_grid(p, core);
                REQUIRE(g.grid);
                const auto& A = g.grid->columns;
                const auto& B = g.grid->rows;
                for (std::size_t bi = 0; bi + 1 < A.size(); ++bi)
                    for (std::size_t bj = 0; bj + 1 < B.size(); ++bj) {
                        const int w = A[bi + 1] - A[bi], h = B[bj + 1] - B[bj];
                        if (core[p.at(A[bi], B[bj])].bottom == zero_zero_n) CHECK(w == n + 1);
                        for (int i = A[bi]; i < A[bi + 1]; ++i)
                            if (classify(core[p.at(i, B[bj])], n).color == ColorClass::YellowH) CHECK(h == n);
                    }
            }
        }
    }

    TEST_CASE("junctions off a Cartesian product are rejected") {
        const WangTileSet core = metallic_tiles(1, false);
        const Substitution2D w = build_omega(1, false);
        const Pattern2D y = apply(w, support::random_valid_pattern(core, 3, 3, 5));
        const GridResult g = find_junction_grid(y, core);
        REQUIRE(g.grid);
        // Remove one junction: the remaining junction cells are no longer a product.
        Pattern2D broken = y;
        const int c = g.grid->columns[1], r = g.grid->rows[1];
        int replacement = -1;
        for (std::size_t t = 0; t < core.size(); ++t)
            if (classify(core[t], 1).color != ColorClass::Junction) replacement = static_cast<int>(t);
        broken.at(c, r) = replacement;
        CHECK_THROWS_AS(find_junction_grid(broken, core), DomainError); // also invalid as a tiling
    }
}

TEST_SUITE("desubstitution") {
    TEST_CASE("recovers the preimage and the shift") {
        for (int n = 1; n <= 3; ++n) {
            const WangTileSet core = metallic_tiles(n, false), full = metallic_tiles(n, true);
            const auto to_full = support::index_map(core, full);
            for (int s = 0; s < 100; ++s) {
                const int w = 1 + s % 8, h = 1 + (s / 8) % 8;
                const support::FramedSample fs = support::framed_sample(n, w, h, 7919u * s + n);
                Pattern2D expected(w, h);
                for (int j = 0; j < h; ++j)
                    for (int i = 0; i < w; ++i) expected.at(i, j) = to_full[fs.x.at(i, j)];
                for (int k1 = 0; k1 <= n; ++k1)
                    for (int k2 = 0; k2 <= n; ++k2) {
                        const Desubstitution d = desubstitute(n, support::shifted_image(n, fs, k1, k2));
                        CHECK(d.preimage == expected);
                        CHECK(d.shift == std::pair{k1, k2});
                    }
            }
        }
    }

    TEST_CASE("no second representation exists on 4x4 preimages") {
        for (int n = 1; n <= 3; ++n)
            for (int s = 0; s < 6; ++s) {
                const support::FramedSample fs = support::framed_sample(n, 4, 4, 100u * n + s);
                for (int k1 = 0; k1 <= n; ++k1)
                    for (int k2 = 0; k2 <= n; ++k2) {
                        const Pattern2D y = support::shifted_image(n, fs, k1, k2);
                        const auto reps = support::all_representations(n, y);
                        REQUIRE(reps.size() == 1);
                        const Desubstitution d = desubstitute(n, y);
                        CHECK(reps.begin()->complete.size() == 16);
                        CHECK(reps.begin()->x0 == d.shift.first);
                        CHECK(reps.begin()->y0 == d.shift.second);
                    }
            }
    }

    TEST_CASE("the brute-force oracle finds nothing on a corrupted image") {
        const support::FramedSample fs = support::framed_sample(1, 3, 3, 42);
        Pattern2D y = support::shifted_image(1, fs, 1, 1);
        y.at(2, 2) = (y.at(2, 2) + 1) % 16;
        CHECK(support::all_representations(1, y).empty());
    }

    TEST_CASE("errors") {
        const WangTileSet core = metallic_tiles(2, false);
        // A lone block has no closing junction lines.
        const Pattern2D lone = build_omega(2, false).images[0];
        CHECK_THROWS_AS(desubstitute(2, lone), RecognizabilityError);
        CHECK_THROWS_AS(desubstitute(2, Pattern2D::from_rows({{0, 0}})), DomainError);
    }
}

TEST_SUITE("markers and fusion") {
    TEST_CASE("markers of T_2 in the published order") {
        const auto sets = find_markers(fixtures::t2_published(), 1, 1);
        REQUIRE(sets.size() == 1);
        CHECK(sets[0] == published::t2_markers());
    }

    TEST_CASE("no markers when every tile neighbours every tile both ways") {
        const WangTileSet t = make_tileset(0, Family::Custom, {{Label{1}, Label{1}, Label{1}, Label{1}},
                                                               {Label{1}, Label{2}, Label{1}, Label{2}}});
        CHECK(find_markers(t, 1, 1).empty());
    }

    TEST_CASE("first fusion of T_2") {
        const WangTileSet t2 = fixtures::t2_published();
        const FusionStep u1 = fuse(t2, published::t2_markers(), 1, Side::Left, 2);
        CHECK(u1.produced.size() == 28);
        const auto pairs = dominoes_with_surrounding(t2, 1, 2);
        std::size_t glued = 0, singles = 0;
        for (auto [a, b] : pairs)
            glued += std::binary_search(published::t2_markers().begin(), published::t2_markers().end(), a);
        for (const Pattern2D& img : u1.substitution.images) singles += img.area() == 1;
        CHECK(u1.produced.size() == singles + glued);
        const auto next = find_markers(u1.produced, 1, 1);
        REQUIRE(next.size() == 1);
        CHECK(next[0] == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
        // Fused labels are concatenations of the glued pair's parallel labels.
        for (std::size_t i = 0; i < u1.produced.size(); ++i) {
            const Pattern2D& img = u1.substitution.images[i];
            if (img.area() != 2) continue;
            const WangTile& a = t2[img.at(0, 0)];
            const WangTile& b = t2[img.at(1, 0)];
            CHECK(u1.produced[i].top == a.top + b.top);
            CHECK(u1.produced[i].bottom == a.bottom + b.bottom);
            CHECK(u1.produced[i].left == a.left);
            CHECK(u1.produced[i].right == b.right);
        }
    }

    TEST_CASE("fusion substitutions map valid patterns to valid patterns") {
        const WangTileSet t2 = fixtures::t2_published();
        const SelfSimilarityReport rep = verify_self_similarity(t2);
        WangTileSet source = t2;
        for (const FusionStep& step : rep.steps) {
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                const Pattern2D p = support::random_valid_pattern(step.produced, 4, 4, seed);
                REQUIRE(support::edges_match(step.produced, p, false));
                CHECK(support::edges_match(source, apply(step.substitution, p), false));
            }
            source = step.produced;
        }
    }

    TEST_CASE("parse side") {
        CHECK(parse_side("left") == Side::Left);
        CHECK(side_name(Side::Right) == "right");
        CHECK_THROWS_AS(parse_side("up"), DomainError);
    }
}

TEST_SUITE("self-similarity") {
    TEST_CASE("T_2 in the published order") {
        const SelfSimilarityReport rep = verify_self_similarity(fixtures::t2_published());
        REQUIRE(rep.steps.size() == 4);
        CHECK(rep.steps[0].produced.size() == 28);
        CHECK(rep.steps[1].produced.size() == 34);
        CHECK(rep.steps[2].produced.size() == 29);
        CHECK(rep.steps[3].produced.size() == 29);
        CHECK(rep.marker_sets[0] == published::t2_markers());
        CHECK(rep.marker_sets[1] == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
        CHECK(rep.marker_sets[2] ==
              std::vector<int>{9, 10, 11, 12, 13, 14, 15, 16, 24, 25, 27, 28, 29, 30, 31, 32, 33});
        CHECK(rep.marker_sets[3] == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
        CHECK(rep.steps[3].produced.tiles == fixtures::u4_published().tiles);
        CHECK(rep.pruned.dropped == std::vector<int>{11, 14, 20, 27});
        CHECK(rep.certificate.verify(fixtures::t2_published(), rep.pruned.tiles));

        for (const auto* m : {&rep.certificate.vertical, &rep.certificate.horizontal}) {
            std::map<std::string, std::string> got;
            for (const auto& [k, v] : *m) got[k.str()] = v.str();
            CHECK(got == published::t2_fusion_bijection());
        }

        const auto& table = published::t2_self_similarity();
        REQUIRE(rep.composed.domain_size() == 25);
        for (int a = 0; a < 25; ++a) CHECK(rep.composed.images[a] == Pattern2D::from_rows_top_first(table[a]));

        CHECK(rep.factorization.str() == "(x - 1)^3 * x^11 * (x + 1)^5 * (x^2 - 6*x + 1) * (x^2 + 2*x - 1)^2");
        CHECK(std::abs(rep.perron - (3 + 2 * std::sqrt(2.0))) < 1e-8);
        CHECK(rep.matches_omega);
        for (const Pattern2D& img : rep.composed.images) CHECK(is_valid(fixtures::t2_published(), img));
    }

    TEST_CASE("other n with default radii") {
        for (int n : {1, 3}) {
            const SelfSimilarityReport rep = verify_self_similarity(metallic_tiles(n, false));
            CHECK(rep.matches_omega);
            CHECK(rep.pruned.tiles.size() == static_cast<std::size_t>((n + 3) * (n + 3)));
            const double beta = (n + std::sqrt(double(n * n + 4))) / 2;
            CHECK(std::abs(rep.perron - beta * beta) < 1e-8);
        }
        CHECK(default_radii(2).prune == 2);
        CHECK(default_radii(4).prune == 8);
    }

    TEST_CASE("the pipeline reports a named failure") {
        // Radius-1 searches on T_3 admit blocks that never occur and the
        // marker search splits.
        CHECK_THROWS_AS(verify_self_similarity(metallic_tiles(3, false), PipelineRadii{}), PipelineError);
    }
}
