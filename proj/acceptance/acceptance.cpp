// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "published.hpp"
#include "support.hpp"

#include "metallic/equivalence.hpp"
#include "metallic/families.hpp"
#include "metallic/fixtures.hpp"
#include "metallic/linalg.hpp"
#include "metallic/minimality.hpp"
#include "metallic/render.hpp"
#include "metallic/selfsim.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

using namespace metallic;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

std::map<std::string, std::string> as_strings(const std::map<Label, Label>& m) {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : m) out[k.str()] = v.str();
    return out;
}

double beta(int n) { return (n + std::sqrt(double(n) * n + 4)) / 2; }

int named(const WangTileSet& t, int n, const std::string& name) {
    for (std::size_t i = 0; i < t.size(); ++i)
        if (classify(t[i], n).name == name) return static_cast<int>(i);
    return -1;
}

void tile_counts(Outcome& o) {
    for (int n = 1; n <= 8; ++n) {
        o.require(metallic_tiles(n, false).size() == static_cast<std::size_t>((n + 3) * (n + 3)), "|T_n|");
        o.require(metallic_tiles(n, true).size() == static_cast<std::size_t>(n * n + 8 * n + 13), "|T'_n|");
        std::map<ColorClass, int> c;
        for (const WangTile& t : metallic_tiles(n, false).tiles) ++c[classify(t, n).color];
        o.require(c[ColorClass::White] == n * n && c[ColorClass::YellowH] == n && c[ColorClass::YellowV] == n &&
                      c[ColorClass::BlueH] == n && c[ColorClass::BlueV] == n && c[ColorClass::GreenH] == n + 1 &&
                      c[ColorClass::GreenV] == n + 1 && c[ColorClass::Junction] == 7,
                  "class census for n=" + std::to_string(n));
    }
    o.detail << "n = 1..8 sizes and census";
}

void ammann(Outcome& o) {
    const auto cert = equivalent(fixtures::ammann16(), metallic_tiles(1, false));
    o.require(cert.has_value(), "certificate exists");
    if (!cert) return;
    o.require(cert->verify(fixtures::ammann16(), metallic_tiles(1, false)), "certificate verifies");
    o.require(as_strings(cert->horizontal) == published::ammann_symbol_map(), "horizontal symbol map");
    o.require(as_strings(cert->vertical) == published::ammann_symbol_map(), "vertical symbol map");
    o.detail << "1->112 2->111 3->001 4->011 5->012 6->000 on both orientations";
}

void tau_tables(Outcome& o) {
    int lines = 0;
    for (const auto& [n, table] : published::tau_tables())
        for (const auto& [v, w] : table) {
            BoundaryWord expect;
            for (const auto& l : w) expect.push_back(Label::parse(l));
            o.require(tau(n, Label::parse(v)) == expect, "tau_" + std::to_string(n) + "(" + v + ")");
            ++lines;
        }
    for (int n = 1; n <= 8; ++n) {
        std::set<BoundaryWord> seen;
        for (const Label& v : all_labels(n)) {
            const BoundaryWord w = tau(n, v);
            o.require(w.size() == static_cast<std::size_t>(n + 1 - v.v0()), "length rule");
            seen.insert(w);
        }
        o.require(seen.size() == all_labels(n).size(), "injectivity for n=" + std::to_string(n));
    }
    o.detail << lines << " table lines; length and injectivity for n <= 8";
}

void substitution_fixture(Outcome& o) {
    const WangTileSet t1 = fixtures::t1_published();
    const Substitution2D w = build_omega_for(t1);
    const auto& listing = published::omega1_reading_order();
    for (int a = 0; a < 16; ++a) {
        std::vector<int> read;
        for (const auto& col : w[a].columns()) read.insert(read.end(), col.begin(), col.end());
        o.require(read == listing[a], "omega_1 letter " + std::to_string(a));
        o.require(is_valid(t1, w[a]), "omega_1 image validity");
    }
    for (int n = 1; n <= 5; ++n) {
        const WangTileSet core = metallic_tiles(n, false), full = metallic_tiles(n, true);
        const std::set<WangTile> core_set(core.tiles.begin(), core.tiles.end());
        for (const WangTile& t : core.tiles) {
            const Pattern2D b = block_image(n, t);
            o.require(is_valid(full, b), "block validity");
            for (int j = 0; j < b.height(); ++j)
                for (int i = 0; i < b.width(); ++i) o.require(core_set.count(full[b.at(i, j)]) == 1, "T_n closure");
        }
        for (const Pattern2D& img : build_omega(n, false).images) o.require(is_valid(core, img), "omega_n validity");
    }
    o.detail << "16 omega_1 entries in column-major reading order; validity and T_n closure for n <= 5";
}

void spectral(Outcome& o) {
    for (int n = 1; n <= 5; ++n) {
        const Substitution2D w = build_omega(n, false);
        const double ev = perron_eigenvalue(incidence(w), 1e-13).eigenvalue;
        o.require(std::abs(ev - beta(n) * beta(n)) < 1e-8, "Perron eigenvalue n=" + std::to_string(n));
        const auto e = primitivity_exponent(w, 20);
        o.require(e && *e <= 7, "primitivity exponent <= 7 for n=" + std::to_string(n));
        if (n <= 2) o.detail << "exp(omega_" << n << ")=" << (e ? *e : -1) << " ";
    }
    o.require(primitivity_exponent(build_omega(1, false), 20) == 5, "exp(omega_1) = 5");
    o.require(primitivity_exponent(build_omega(2, false), 20) == 4, "exp(omega_2) = 4");
    o.detail << "eigenvalues within 1e-8 for n = 1..5";
}

void zeta(Outcome& o) {
    for (int n = 1; n <= 4; ++n) {
        const ZetaReport r = zeta_refinement_check(n);
        o.require(r.ok, "n=" + std::to_string(n) + ": " + r.detail);
    }
    o.detail << "n = 1..4";
}

void solver_language(Outcome& o) {
    const WangTileSet t = fixtures::t1_published();
    const Substitution2D w = build_omega_for(t);
    const auto v = dominoes_with_surrounding(t, 2, 1);
    const auto h = dominoes_with_surrounding(t, 1, 1);
    const auto sq = patterns_with_surrounding(t, 2, 2, 3);
    o.require(v.size() == 30 && *v.begin() == std::pair{0, 5}, "vertical dominoes");
    o.require(h.size() == 30 && *h.begin() == std::pair{0, 1}, "horizontal dominoes");
    o.require(sq.size() == 51 && *sq.begin() == Pattern2D::from_columns({{0, 5}, {3, 7}}), "2x2 patterns");
    std::set<Pattern2D> vp, hp;
    for (auto [a, b] : v) vp.insert(Pattern2D::from_rows({{a}, {b}}));
    for (auto [a, b] : h) hp.insert(Pattern2D::from_rows({{a, b}}));
    o.require(vp == substitutive_language(w, 1, 2), "vertical languages equal");
    o.require(hp == substitutive_language(w, 2, 1), "horizontal languages equal");
    o.require(sq == substitutive_language(w, 2, 2), "2x2 languages equal");
    o.detail << "30 / 30 / 51, all equal to the substitutive languages";
}

void self_similarity(Outcome& o) {
    const WangTileSet t2 = fixtures::t2_published();
    const SelfSimilarityReport rep = verify_self_similarity(t2);
    o.require(!rep.marker_sets.empty() && rep.marker_sets[0] == published::t2_markers(), "14-element marker set");
    o.require(rep.pruned.tiles.size() == 25, "25-tile final set");
    o.require(rep.certificate.verify(t2, rep.pruned.tiles), "certificate verifies");
    o.require(as_strings(rep.certificate.vertical) == published::t2_fusion_bijection(), "vertical label bijection");
    o.require(as_strings(rep.certificate.horizontal) == published::t2_fusion_bijection(), "horizontal label bijection");
    // (x-1)^3 (x+1)^5 x^11 (x^2-6x+1) (x^2+2x-1)^2, built factor by factor.
    IntPoly p = IntPoly::from_ints({1});
    for (int i = 0; i < 3; ++i) p = p * IntPoly::from_ints({-1, 1});
    for (int i = 0; i < 5; ++i) p = p * IntPoly::from_ints({1, 1});
    for (int i = 0; i < 11; ++i) p = p * IntPoly::from_ints({0, 1});
    p = p * IntPoly::from_ints({1, -6, 1});
    for (int i = 0; i < 2; ++i) p = p * IntPoly::from_ints({-1, 2, 1});
    o.require(rep.charpoly == p, "characteristic polynomial");
    const auto& table = published::t2_self_similarity();
    for (int a = 0; a < 25; ++a)
        o.require(rep.composed.images[a] == Pattern2D::from_rows_top_first(table[a]), "composed image " + std::to_string(a));
    o.require(rep.matches_omega, "composed substitution equals omega_2");
    o.detail << "charpoly " << rep.factorization.str();
}

void forbidden_tiles(Outcome& o) {
    const SubTileset u5 = tiles_allowing_surrounding(fixtures::u4_published(), 2);
    o.require(u5.dropped == std::vector<int>{11, 14, 20, 27}, "U4 drops {11,14,20,27}");

    WangTileSet cur = metallic_tiles(1, true);
    std::vector<std::size_t> sizes{cur.size()};
    int r = 1;
    for (; r <= 10; ++r) {
        WangTileSet next = tiles_allowing_surrounding(cur, r).tiles;
        const bool stable = next.tiles == cur.tiles && r > 1;
        cur = next;
        sizes.push_back(cur.size());
        if (stable) break;
    }
    const WangTileSet t1 = metallic_tiles(1, false);
    o.require(std::set<WangTile>(cur.tiles.begin(), cur.tiles.end()) ==
                  std::set<WangTile>(t1.tiles.begin(), t1.tiles.end()),
              "T'_1 stabilizes at T_1");
    o.detail << "T'_1 sizes by radius:";
    for (std::size_t s : sizes) o.detail << " " << s;

    const WangTileSet t2 = metallic_tiles(2, false);
    for (auto [top, bottom] : {std::pair{"j1111", "^g2"}, std::pair{"j0111", "^g1"}}) {
        const Pattern2D d = Pattern2D::from_rows_top_first({{named(t2, 2, top)}, {named(t2, 2, bottom)}});
        int dead = -1;
        for (int rad = 1; rad <= 12 && dead < 0; ++rad)
            if (!has_surrounding(t2, d, rad)) dead = rad;
        o.require(dead > 0, std::string(top) + " over " + bottom + " has no surrounding up to radius 12");
        o.detail << "; " << top << " over " << bottom << " dies at radius " << dead;
    }
}

void aperiodicity(Outcome& o) {
    for (int n = 1; n <= 2; ++n)
        for (int p = 1; p <= 4; ++p)
            for (int q = 1; q <= 4; ++q)
                o.require(!solve_torus(metallic_tiles(n, false), p, q),
                          "T_" + std::to_string(n) + " tiles a " + std::to_string(p) + "x" + std::to_string(q) + " torus");
    o.detail << "no torus tiling for T_1, T_2 with 1 <= p,q <= 4";
}

void round_trip(Outcome& o) {
    for (int n = 1; n <= 3; ++n) {
        const WangTileSet core = metallic_tiles(n, false), full = metallic_tiles(n, true);
        const auto to_full = support::index_map(core, full);
        int cases = 0;
        for (int s = 0; s < 100; ++s) {
            const int w = 1 + s % 8, h = 1 + (s / 8) % 8;
            const support::FramedSample fs = support::framed_sample(n, w, h, 7919u * s + 1000 + n);
            o.require(is_valid(core, fs.x), "sample validity");
            Pattern2D expected(w, h);
            for (int j = 0; j < h; ++j)
                for (int i = 0; i < w; ++i) expected.at(i, j) = to_full[fs.x.at(i, j)];
            for (int k1 = 0; k1 <= n; ++k1)
                for (int k2 = 0; k2 <= n; ++k2) {
                    const Desubstitution d = desubstitute(n, support::shifted_image(n, fs, k1, k2));
                    o.require(d.preimage == expected && d.shift == std::pair{k1, k2},
                              "round trip n=" + std::to_string(n));
                    ++cases;
                }
        }
        int unique = 0;
        for (int s = 0; s < 10; ++s) {
            const support::FramedSample fs = support::framed_sample(n, 4, 4, 31u * s + n);
            for (int k1 = 0; k1 <= n; ++k1)
                for (int k2 = 0; k2 <= n; ++k2) {
                    const auto reps = support::all_representations(n, support::shifted_image(n, fs, k1, k2));
                    o.require(reps.size() == 1, "unique representation n=" + std::to_string(n));
                    unique += reps.size() == 1;
                }
        }
        o.detail << "n=" << n << ": " << cases << " round trips, " << unique << " unique 4x4; ";
    }
}

void nu_fixture(Outcome& o) {
    const Substitution2D nu = fixtures::nu();
    auto v = [](int top, int bottom) { return Pattern2D::from_rows_top_first({{top}, {bottom}}); };
    o.require(recurrent_vertices(build_graph(nu, Shape::S2x2)) ==
                  std::set<Pattern2D>{Pattern2D::from_rows_top_first({{2, 2}, {2, 2}})},
              "2x2 set");
    o.require(recurrent_vertices(build_graph(nu, Shape::S2x1)) == std::set<Pattern2D>{Pattern2D::from_rows({{2, 2}})},
              "2x1 set");
    o.require(recurrent_vertices(build_graph(nu, Shape::S1x2)) ==
                  std::set<Pattern2D>{v(0, 1), v(2, 2), v(0, 0), v(2, 1), v(2, 0), v(0, 2)},
              "1x2 set");
    o.detail << "{cc/cc}, {cc}, six vertical dominoes";
}

void existence(Outcome& o) {
    for (int n = 1; n <= 4; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const WangTileSet t = metallic_tiles(n, false);
        const auto p = solve({&t, 17, 23, {}, {}, false});
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(p && is_valid(t, *p), "17x23 for n=" + std::to_string(n));
        o.require(secs < 120, "time limit for n=" + std::to_string(n));
        if (p) o.require(render_pattern(*p, t) == render_pattern(*p, t), "deterministic SVG");
    }
    o.detail << "17x23 rectangles for T_1..T_4, SVG byte-identical on re-render";
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"tile counts and class census", tile_counts},
        {"Ammann equivalence", ammann},
        {"tau tables", tau_tables},
        {"omega_1 fixture and image validity", substitution_fixture},
        {"spectral data", spectral},
        {"zeta refinement", zeta},
        {"solver language for n = 1", solver_language},
        {"self-similarity pipeline for n = 2", self_similarity},
        {"forbidden tiles and dominoes", forbidden_tiles},
        {"aperiodicity evidence", aperiodicity},
        {"desubstitution round trip", round_trip},
        {"nu fixture", nu_fixture},
        {"existence of 17x23 rectangles", existence},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << " ("
                  << std::fixed << std::setprecision(2) << secs << " s): " << o.detail.str() << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
