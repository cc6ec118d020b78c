#include "metallic/equivalence.hpp"
#include "metallic/errors.hpp"
#include "metallic/families.hpp"
#include "metallic/fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace metallic;

namespace {

std::set<WangTile> as_set(const WangTileSet& s) { return {s.tiles.begin(), s.tiles.end()}; }

WangTile tile(const char* r, const char* t, const char* l, const char* b) {
    return {Label::parse(r), Label::parse(t), Label::parse(l), Label::parse(b)};
}

// V_n straight from its defining inequalities.
std::set<Label> v_by_definition(int n) {
    std::set<Label> out;
    for (int a = 0; a <= 1; ++a)
        for (int b = a; b <= 1; ++b)
            for (int c = b; c <= n + 1; ++c) out.insert(Label{a, b, c});
    return out;
}

} // namespace

TEST_SUITE("labels") {
    TEST_CASE("parse and print") {
        CHECK(Label::parse("012") == Label{0, 1, 2});
        CHECK(Label::parse("0-1-12") == Label{0, 1, 12});
        CHECK(Label{0, 1, 12}.str() == "0-1-12");
        CHECK(Label{1, 1, 3}.str() == "113");
        CHECK((Label{0, 1, 2} + Label{1, 1, 3}).str() == "012113");
        CHECK_THROWS_AS(Label::parse(""), DomainError);
        CHECK_THROWS_AS(Label::parse("0a1"), DomainError);
    }

    TEST_CASE("V_n has 3n+4 labels and matches its definition") {
        for (int n = 1; n <= 8; ++n) {
            const auto v = all_labels(n);
            CHECK(v.size() == static_cast<std::size_t>(3 * n + 4));
            CHECK(std::set<Label>(v.begin(), v.end()) == v_by_definition(n));
            CHECK(std::is_sorted(v.begin(), v.end()));
            for (const Label& l : v) CHECK(l.in_v(n));
        }
        CHECK_FALSE((Label{1, 0, 1}).in_v(2));
        CHECK_FALSE((Label{0, 0, 4}).in_v(2));
    }
}

TEST_SUITE("families") {
    TEST_CASE("tile counts") {
        for (int n = 1; n <= 8; ++n) {
            CHECK(metallic_tiles(n, false).size() == static_cast<std::size_t>((n + 3) * (n + 3)));
            CHECK(metallic_tiles(n, true).size() == static_cast<std::size_t>(n * n + 8 * n + 13));
        }
    }

    TEST_CASE("class census of T_n") {
        for (int n = 1; n <= 8; ++n) {
            std::map<ColorClass, int> census;
            for (const WangTile& t : metallic_tiles(n, false).tiles) ++census[classify(t, n).color];
            CHECK(census[ColorClass::White] == n * n);
            CHECK(census[ColorClass::YellowH] == n);
            CHECK(census[ColorClass::YellowV] == n);
            CHECK(census[ColorClass::BlueH] == n);
            CHECK(census[ColorClass::BlueV] == n);
            CHECK(census[ColorClass::GreenH] == n + 1);
            CHECK(census[ColorClass::GreenV] == n + 1);
            CHECK(census[ColorClass::Junction] == 7);
            CHECK(census[ColorClass::AntigreenH] == 0);
            CHECK(census[ColorClass::AntigreenV] == 0);
        }
    }

    TEST_CASE("extended set adds the antigreen tiles and the four tiles of D") {
        for (int n = 1; n <= 5; ++n) {
            const auto core = as_set(metallic_tiles(n, false));
            int antigreen = 0, in_d = 0;
            for (const WangTile& t : metallic_tiles(n, true).tiles) {
                const Classification c = classify(t, n);
                if (core.count(t)) {
                    CHECK_FALSE(c.in_d);
                    CHECK_FALSE(c.antigreen);
                    continue;
                }
                antigreen += c.antigreen;
                in_d += c.in_d;
            }
            CHECK(antigreen == 2 * n);
            CHECK(in_d == 4);
        }
    }

    TEST_CASE("classification examples") {
        const Classification w = classify(tile("112", "112", "111", "111"), 1);
        CHECK(w.color == ColorClass::White);
        CHECK(w.name == "w11");
        CHECK(classify(tile("000", "000", "002", "002"), 2).color == ColorClass::Junction);

        const Classification last_blue_v = classify(tile("111", "003", "112", "002"), 2);
        CHECK(last_blue_v.color == ColorClass::BlueV);
        CHECK(last_blue_v.in_d);
        CHECK(last_blue_v.last_blue);
        // The same four labels in the order (003,111,112,002) are not a tile of T'_2.
        CHECK_THROWS_AS(classify(tile("003", "111", "112", "002"), 2), ClassificationError);
        CHECK_THROWS_AS(classify(tile("111", "111", "111", "111"), 2), ClassificationError);
    }

    TEST_CASE("every tile of T'_n has exactly one class") {
        for (int n = 1; n <= 6; ++n) {
            std::set<std::string> names;
            for (const WangTile& t : metallic_tiles(n, true).tiles) names.insert(classify(t, n).name);
            CHECK(names.size() == metallic_tiles(n, true).size());
        }
    }

    TEST_CASE("hat is an involution that fixes T_n and T'_n") {
        const WangTile t = tile("111", "013", "113", "002");
        CHECK(hat(t) == tile("013", "111", "002", "113"));
        CHECK(metallic_tiles(2, false).index_of(hat(t)).has_value());
        for (int n = 1; n <= 5; ++n)
            for (bool ext : {false, true}) {
                const WangTileSet s = metallic_tiles(n, ext);
                std::set<WangTile> hats;
                for (const WangTile& x : s.tiles) {
                    CHECK(hat(hat(x)) == x);
                    hats.insert(hat(x));
                    const ColorClass c = classify(x, n).color;
                    if (c == ColorClass::White || c == ColorClass::Junction) CHECK(classify(hat(x), n).color == c);
                }
                CHECK(hats == as_set(s));
            }
    }

    TEST_CASE("sigma and the half-turn image") {
        CHECK(sigma(Label{1, 1, 1}, 2) == Label{1, 1, 3});
        CHECK_THROWS_AS(sigma(Label{0, 0, 3}, 2), DomainError);
        for (int n = 1; n <= 6; ++n)
            for (const Label& v : all_labels(n))
                if (v != Label{0, 0, n + 1}) CHECK(sigma(sigma(v, n), n) == v);
        for (int n = 1; n <= 5; ++n) {
            const WangTileSet t = metallic_tiles(n, false);
            CHECK(as_set(half_turn_image(t)) == as_set(t));
        }
        CHECK_THROWS_AS(half_turn_image(metallic_tiles(2, true)), DomainError);
    }

    TEST_CASE("corner determinism") {
        for (int n = 1; n <= 5; ++n) {
            CHECK(deterministic(metallic_tiles(n, true), Corner::SW));
            CHECK(deterministic(metallic_tiles(n, true), Corner::NE));
            CHECK_FALSE(deterministic(metallic_tiles(n, false), Corner::NW));
            CHECK_FALSE(deterministic(metallic_tiles(n, false), Corner::SE));
        }
        const WangTileSet one = make_tileset(0, Family::Custom, {tile("1", "2", "1", "2")});
        for (Corner c : {Corner::SW, Corner::NE, Corner::NW, Corner::SE}) CHECK(deterministic(one, c));
        CHECK(parse_corner("ne") == Corner::NE);
        CHECK_THROWS_AS(parse_corner("north"), DomainError);
    }

    TEST_CASE("tile set validation") {
        CHECK_THROWS_AS(make_tileset(1, Family::Custom, {tile("1", "2", "1", "2"), tile("1", "2", "1", "2")}),
                        DomainError);
        CHECK_THROWS_AS(make_tileset(1, Family::MetallicCore, {tile("004", "111", "111", "111")}), DomainError);
    }
}

TEST_SUITE("fixtures") {
    TEST_CASE("published T_1 and T_2 orderings list the generated sets") {
        CHECK(as_set(fixtures::t1_published()) == as_set(metallic_tiles(1, false)));
        CHECK(as_set(fixtures::t2_published()) == as_set(metallic_tiles(2, false)));
    }

    TEST_CASE("the printed T_1 tile 11 is not a metallic tile") {
        // Printed as (001,011,000,111); the blue stripe b^0 is (001,111,000,111).
        CHECK_THROWS_AS(classify(tile("001", "011", "000", "111"), 1), ClassificationError);
        const WangTile fixed = fixtures::t1_published()[11];
        CHECK(fixed == tile("001", "111", "000", "111"));
        CHECK(classify(fixed, 1).name == "b0");
    }

    TEST_CASE("U4 fixture consists of tau_2 images of T'_2") {
        const WangTileSet u4 = fixtures::u4_published();
        CHECK(u4.size() == 29);
        CHECK(u4.names.size() == 29);
        CHECK(u4.names[11] == "^a1");
        CHECK(u4.names[14] == "a1");
        CHECK(u4.names[20] == "j0011");
        CHECK(u4.names[27] == "j1100");
    }
}

TEST_SUITE("equivalence") {
    TEST_CASE("Ammann fixture is T_1 up to the symbol map") {
        const auto cert = equivalent(fixtures::ammann16(), metallic_tiles(1, false));
        REQUIRE(cert);
        CHECK(cert->verify(fixtures::ammann16(), metallic_tiles(1, false)));
        const std::map<std::string, std::string> expected{{"1", "112"}, {"2", "111"}, {"3", "001"},
                                                          {"4", "011"}, {"5", "012"}, {"6", "000"}};
        for (const auto* m : {&cert->horizontal, &cert->vertical}) {
            std::map<std::string, std::string> got;
            for (const auto& [k, v] : *m) got[k.str()] = v.str();
            CHECK(got == expected);
        }
    }

    TEST_CASE("different sizes are never equivalent") {
        CHECK_FALSE(equivalent(metallic_tiles(1, false), metallic_tiles(2, false)));
    }

    TEST_CASE("a relabelled and permuted set is recovered") {
        const WangTileSet t2 = metallic_tiles(2, false);
        std::vector<WangTile> moved;
        auto shift = [](const Label& l) { return Label::parse("9" + l.str()); };
        auto swap = [](const Label& l) { return Label::parse(l.str() + "7"); };
        for (auto it = t2.tiles.rbegin(); it != t2.tiles.rend(); ++it)
            moved.push_back({swap(it->right), shift(it->top), swap(it->left), shift(it->bottom)});
        const WangTileSet b = make_tileset(0, Family::Custom, moved);
        const auto cert = equivalent(t2, b);
        REQUIRE(cert);
        CHECK(cert->verify(t2, b));
        CHECK(cert->tile_bijection[0] == 24);
        CHECK(cert->vertical.at(Label::parse("113")).str() == "9113");
        CHECK(cert->horizontal.at(Label::parse("113")).str() == "1137");
    }

    TEST_CASE("a single changed label breaks equivalence") {
        const WangTileSet t1 = metallic_tiles(1, false);
        std::vector<WangTile> tiles = t1.tiles;
        tiles[0].top = Label::parse("111");
        tiles[0].bottom = Label::parse("111");
        const WangTileSet b = make_tileset(0, Family::Custom, tiles);
        if (b.size() == t1.size()) CHECK_FALSE(equivalent(t1, b));
    }
}
