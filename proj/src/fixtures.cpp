#include "metallic/fixtures.hpp"

#include <array>
#include <string>

namespace metallic::fixtures {

namespace {

using Row = std::array<const char*, 4>;

template <std::size_t N>
std::vector<WangTile> build(const std::array<Row, N>& rows) {
    std::vector<WangTile> out;
    out.reserve(N);
    for (const auto& r : rows)
        out.push_back({Label::parse(r[0]), Label::parse(r[1]), Label::parse(r[2]), Label::parse(r[3])});
    return out;
}

} // namespace

WangTileSet t1_published() {
    static const std::array<Row, 16> rows{{
        {"111", "012", "112", "001"},
        {"111", "001", "111", "000"},
        {"112", "012", "112", "011"},
        {"112", "112", "111", "111"},
        {"111", "011", "112", "000"},
        {"011", "001", "011", "012"},
        {"011", "011", "012", "012"},
        {"012", "112", "011", "112"},
        {"001", "000", "001", "011"},
        {"001", "001", "011", "011"},
        {"001", "011", "012", "011"},
        {"001", "111", "000", "111"},
        {"000", "000", "001", "001"},
        {"000", "001", "011", "001"},
        {"011", "111", "000", "112"},
        {"012", "111", "001", "112"},
    }};
    return make_tileset(1, Family::MetallicCore, build(rows));
}

WangTileSet t2_published() {
    static const std::array<Row, 25> rows{{
        {"111", "013", "113", "002"},
        {"111", "002", "112", "001"},
        {"112", "013", "113", "012"},
        {"112", "113", "111", "112"},
        {"113", "113", "112", "112"},
        {"111", "012", "113", "001"},
        {"111", "001", "112", "000"},
        {"112", "012", "113", "011"},
        {"112", "112", "111", "111"},
        {"113", "112", "112", "111"},
        {"111", "011", "113", "000"},
        {"011", "001", "012", "013"},
        {"011", "011", "013", "013"},
        {"012", "112", "011", "113"},
        {"013", "112", "012", "113"},
        {"001", "000", "002", "012"},
        {"001", "001", "012", "012"},
        {"001", "011", "013", "012"},
        {"001", "111", "000", "112"},
        {"002", "111", "001", "112"},
        {"000", "000", "002", "002"},
        {"000", "001", "012", "002"},
        {"011", "111", "000", "113"},
        {"012", "111", "001", "113"},
        {"013", "111", "002", "113"},
    }};
    return make_tileset(2, Family::MetallicCore, build(rows),
                        {"^g2", "^b1", "^y2", "w12", "w22", "^g1", "^b0", "^y1", "w11", "w21", "^g0", "j1101", "j1111",
                         "y1", "y2", "j0100", "j0101", "j0111", "b0", "b1", "j0000", "j0001", "g0", "g1", "g2"});
}

WangTileSet ammann16() {
    static const std::array<Row, 16> rows{{
        {"1", "1", "2", "2"},
        {"1", "5", "1", "4"},
        {"2", "3", "2", "6"},
        {"2", "4", "1", "6"},
        {"2", "5", "1", "3"},
        {"3", "2", "6", "2"},
        {"3", "3", "4", "4"},
        {"3", "4", "5", "4"},
        {"3", "6", "3", "4"},
        {"4", "2", "6", "1"},
        {"4", "3", "4", "5"},
        {"4", "4", "5", "5"},
        {"5", "1", "4", "1"},
        {"5", "2", "3", "1"},
        {"6", "3", "4", "3"},
        {"6", "6", "3", "3"},
    }};
    return make_tileset(0, Family::Custom, build(rows));
}

WangTileSet u4_published() {
    static const std::array<Row, 29> rows{{
        {"012112", "012113", "012113", "013113"}, // w21
        {"012113", "012113", "013113", "013113"}, // w11
        {"012112", "012112", "012113", "012113"}, // w22
        {"012113", "012112", "013113", "012113"}, // w12
        {"013113", "002113113", "012112", "013113113"}, // ^g0
        {"013113", "012113113", "012113", "013113113"}, // ^b0
        {"013113", "002112112", "012112", "012112113"}, // ^g2
        {"013113", "002112113", "012112", "012113113"}, // ^g1
        {"013113", "012112113", "012113", "012113113"}, // ^b1
        {"012113", "002112112", "012112", "002112113"}, // ^y2
        {"012113", "002112113", "012112", "002113113"}, // ^y1
        {"012113", "012112113", "012113", "002113113"}, // ^a1
        {"002112112", "012113", "002112113", "012112"}, // y2
        {"002112113", "012113", "002113113", "012112"}, // y1
        {"012112113", "012113", "002113113", "012113"}, // a1
        {"002112112", "013113", "012112113", "012112"}, // g2
        {"002112113", "013113", "012113113", "012112"}, // g1
        {"012112113", "013113", "012113113", "012113"}, // b1
        {"002113113", "013113", "013113113", "012112"}, // g0
        {"012113113", "013113", "013113113", "012113"}, // b0
        {"013113113", "002113113", "002112112", "012112113"}, // j0011
        {"013113113", "012113113", "002112113", "012112113"}, // j0001
        {"013113113", "013113113", "012112113", "012112113"}, // j0000
        {"002113113", "002113113", "002112112", "002112112"}, // j1111
        {"002113113", "012113113", "002112113", "002112112"}, // j1101
        {"012113113", "002113113", "002112112", "002112113"}, // j0111
        {"012113113", "012113113", "002112113", "002112113"}, // j0101
        {"002113113", "013113113", "012112113", "002112112"}, // j1100
        {"012113113", "013113113", "012112113", "002112113"}, // j0100
    }};
    return make_tileset(2, Family::Custom, build(rows),
                        {"w21", "w11", "w22", "w12", "^g0", "^b0", "^g2", "^g1", "^b1", "^y2", "^y1", "^a1", "y2", "y1", "a1",
                         "g2", "g1", "b1", "g0", "b0", "j0011", "j0001", "j0000", "j1111", "j1101", "j0111", "j0101",
                         "j1100", "j0100"});
}

Substitution2D nu() {
    constexpr int a = 0, b = 1, c = 2;
    Substitution2D s;
    s.codomain_size = 3;
    s.names = {"a", "b", "c"};
    s.images = {
        Pattern2D::from_rows_top_first({{c, c, c, c, c}, {c, c, c, c, c}, {c, c, a, c, c}}),
        Pattern2D::from_rows_top_first({{c, c, b, c, a}, {c, c, c, c, c}, {c, c, c, c, c}}),
        Pattern2D::from_rows_top_first({{c, c, a, c, c}, {c, c, c, b, c}, {c, c, c, c, c}}),
    };
    return s;
}

} // namespace metallic::fixtures
