#include "metallic/errors.hpp"
#include "metallic/fixtures.hpp"
#include "metallic/linalg.hpp"
#include "metallic/omega.hpp"
#include "metallic/substitution.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace metallic;

namespace {

Pattern2D top_first(std::vector<std::vector<int>> rows) { return Pattern2D::from_rows_top_first(rows); }

Substitution2D random_substitution(std::mt19937& rng, int letters) {
    // Widths per letter and heights per letter keep every pattern alignable
    // as long as all letters share one width and one height.
    Substitution2D s;
    s.codomain_size = letters;
    const int w = 1 + rng() % 2, h = 1 + rng() % 3;
    for (int a = 0; a < letters; ++a) {
        Pattern2D p(w, h);
        for (int j = 0; j < h; ++j)
            for (int i = 0; i < w; ++i) p.at(i, j) = rng() % letters;
        s.images.push_back(p);
    }
    return s;
}

IntMatrix naive_product(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b[0].size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

} // namespace

TEST_SUITE("patterns") {
    TEST_CASE("concatenation along e_2 puts the second word on top") {
        const Pattern2D u = top_first({{4, 5}, {10, 5}});
        const Pattern2D v = top_first({{3, 10}, {9, 9}, {0, 0}});
        CHECK(concat(u, v, 2) == top_first({{3, 10}, {9, 9}, {0, 0}, {4, 5}, {10, 5}}));
    }

    TEST_CASE("concatenation along e_1 puts the second word on the right") {
        const Pattern2D u = top_first({{2, 8, 7}, {7, 3, 9}, {1, 1, 0}, {6, 6, 7}, {7, 4, 3}});
        const Pattern2D v = top_first({{3, 10}, {9, 9}, {0, 0}, {4, 5}, {10, 5}});
        CHECK(concat(u, v, 1) == top_first({{2, 8, 7, 3, 10},
                                            {7, 3, 9, 9, 9},
                                            {1, 1, 0, 0, 0},
                                            {6, 6, 7, 4, 5},
                                            {7, 4, 3, 10, 5}}));
        CHECK(concat(u, Pattern2D(0, 5), 1) == u);
        CHECK_THROWS_AS(concat(u, top_first({{1}}), 1), AlignmentError);
    }

    TEST_CASE("concatenation is associative and adds areas") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const int h = 1 + rng() % 4;
            Pattern2D a(1 + rng() % 3, h), b(1 + rng() % 3, h), c(1 + rng() % 3, h);
            for (Pattern2D* p : {&a, &b, &c})
                for (int j = 0; j < h; ++j)
                    for (int i = 0; i < p->width(); ++i) p->at(i, j) = rng() % 9;
            CHECK(concat(concat(a, b, 1), c, 1) == concat(a, concat(b, c, 1), 1));
            CHECK(concat(a, b, 1).area() == a.area() + b.area());
        }
    }

    TEST_CASE("rows, columns and text agree") {
        const Pattern2D p = Pattern2D::from_rows({{1, 2, 3}, {4, 5, 6}});
        CHECK(p.at(0, 0) == 1);
        CHECK(p.at(2, 1) == 6);
        CHECK(Pattern2D::from_columns(p.columns()) == p);
        CHECK(top_first({{4, 5, 6}, {1, 2, 3}}) == p);
        CHECK(p.str() == "4 5 6\n1 2 3");
        CHECK(p.sub(1, 0, 2, 2) == Pattern2D::from_rows({{2, 3}, {5, 6}}));
    }

    TEST_CASE("ordering is by size then column by column") {
        const Pattern2D vertical_05 = Pattern2D::from_rows({{0}, {5}});
        const Pattern2D vertical_13 = Pattern2D::from_rows({{1}, {3}});
        CHECK(vertical_05 < vertical_13);
        CHECK(Pattern2D::from_rows({{9}}) < vertical_05);
        CHECK(Pattern2D::from_rows({{0, 9}, {3, 1}}) < Pattern2D::from_rows({{0, 1}, {5, 0}}));
    }

    TEST_CASE("factors") {
        const Pattern2D p = Pattern2D::from_rows({{0, 1}, {2, 3}});
        CHECK(factors(p, 1, 1).size() == 4);
        CHECK(factors(p, 2, 2) == std::set<Pattern2D>{p});
        CHECK(factors(p, 3, 1).empty());
    }
}

TEST_SUITE("substitutions") {
    TEST_CASE("apply places images in a grid") {
        const Substitution2D nu = fixtures::nu();
        const Pattern2D a = nu.images[0];
        CHECK(a.width() == 5);
        CHECK(a.height() == 3);
        CHECK(apply(nu, Pattern2D::from_rows({{0}})) == a);
        const Pattern2D ab = apply(nu, Pattern2D::from_rows({{0, 1}}));
        CHECK(ab == concat(nu.images[0], nu.images[1], 1));
        CHECK(apply(nu, Pattern2D::from_rows({{0, 1}, {2, 2}})).area() == 4 * 15);
    }

    TEST_CASE("apply rejects misaligned images") {
        Substitution2D s;
        s.codomain_size = 2;
        s.images = {Pattern2D(1, 1), Pattern2D(1, 2)};
        CHECK_THROWS_AS(apply(s, Pattern2D::from_rows({{0, 1}})), AlignmentError);
        CHECK_NOTHROW(apply(s, Pattern2D::from_rows({{0}, {1}})));
    }

    TEST_CASE("apply respects concatenation") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 40; ++trial) {
            const Substitution2D s = random_substitution(rng, 4);
            Pattern2D u(1 + rng() % 3, 2), v(1 + rng() % 3, 2);
            for (Pattern2D* p : {&u, &v})
                for (int j = 0; j < 2; ++j)
                    for (int i = 0; i < p->width(); ++i) p->at(i, j) = rng() % 4;
            CHECK(apply(s, concat(u, v, 1)) == concat(apply(s, u), apply(s, v), 1));
            const Pattern2D w = Pattern2D(u.width(), 3, int(rng() % 4));
            CHECK(apply(s, concat(u, w, 2)) == concat(apply(s, u), apply(s, w), 2));
        }
    }

    TEST_CASE("incidence of a composition is the matrix product") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 30; ++trial) {
            const Substitution2D s = random_substitution(rng, 5), t = random_substitution(rng, 5);
            CHECK(incidence(compose(s, t)) == naive_product(incidence(s), incidence(t)));
            CHECK(compose(s, t).images[2] == apply(s, t.images[2]));
        }
        const Substitution2D w = build_omega(2, false);
        CHECK(incidence(power(w, 2)) == naive_product(incidence(w), incidence(w)));
    }

    TEST_CASE("incidence examples") {
        for (int n = 1; n <= 5; ++n) CHECK(incidence(rho(n)) == IntMatrix{{1, 1}, {n, n - 1}});
        for (const auto& col : std::vector<int>{0, 1, 2}) {
            std::int64_t sum = 0;
            for (const auto& row : incidence(fixtures::nu())) sum += row[col];
            CHECK(sum == 15);
        }
        const IntMatrix m = incidence(build_omega(2, false));
        for (std::size_t a = 0; a < m.size(); ++a) {
            std::int64_t sum = 0;
            for (const auto& row : m) sum += row[a];
            CHECK((sum == 4 || sum == 6 || sum == 9));
        }
    }

    TEST_CASE("relabel renames domain and codomain letters") {
        const Substitution2D nu = fixtures::nu();
        const Substitution2D r = relabel(nu, {2, 0, 1}, {1, 2, 0});
        for (int a = 0; a < 3; ++a) {
            const Pattern2D& src = nu.images[a];
            const Pattern2D& dst = r.images[std::vector<int>{2, 0, 1}[a]];
            for (int j = 0; j < 3; ++j)
                for (int i = 0; i < 5; ++i) CHECK(dst.at(i, j) == std::vector<int>{1, 2, 0}[src.at(i, j)]);
        }
    }

    TEST_CASE("substitutive language of omega_1 in the published order") {
        const Substitution2D w = build_omega_for(fixtures::t1_published());
        const auto v = substitutive_language(w, 1, 2);
        CHECK(v.size() == 30);
        CHECK(*v.begin() == Pattern2D::from_rows({{0}, {5}}));
        const auto h = substitutive_language(w, 2, 1);
        CHECK(h.size() == 30);
        CHECK(*h.begin() == Pattern2D::from_rows({{0, 1}}));
        const auto sq = substitutive_language(w, 2, 2);
        CHECK(sq.size() == 51);
        CHECK(*sq.begin() == Pattern2D::from_columns({{0, 5}, {3, 7}}));
        // Dominoes read off a large iterate stay inside the language.
        const Pattern2D big = apply(power(w, 5), Pattern2D::from_rows({{0}}));
        for (const Pattern2D& d : factors(big, 1, 2)) CHECK(v.count(d));
    }

    TEST_CASE("substitutive language of nu misses (a over b)") {
        const auto v = substitutive_language(fixtures::nu(), 1, 2);
        CHECK_FALSE(v.count(Pattern2D::from_rows_top_first({{0}, {1}})));
    }

    TEST_CASE("substitutive languages stabilize for omega_n") {
        for (int n = 1; n <= 5; ++n) {
            const Substitution2D w = build_omega(n, false);
            for (auto [x, y] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 2}}) {
                const auto l = substitutive_language(w, x, y);
                // One more application of omega adds nothing new.
                std::set<Pattern2D> again;
                for (const Pattern2D& p : l)
                    for (const Pattern2D& f : factors(apply(w, p), x, y)) again.insert(f);
                for (const Pattern2D& f : again) CHECK(l.count(f));
            }
        }
    }
}

TEST_SUITE("linear algebra") {
    TEST_CASE("characteristic polynomial examples") {
        CHECK(char_poly({{1, 1}, {1, 0}}) == IntPoly::from_ints({-1, -1, 1}));
        for (int n = 1; n <= 5; ++n) CHECK(char_poly(incidence(rho(n))) == IntPoly::from_ints({-1, -n, 1}));
        CHECK(char_poly(identity_matrix(3)) == IntPoly::from_ints({-1, 3, -3, 1}));
    }

    TEST_CASE("Cayley-Hamilton on random matrices and omega incidence matrices") {
        std::mt19937 rng(5);
        std::vector<IntMatrix> ms;
        for (int trial = 0; trial < 20; ++trial) {
            const int k = 1 + rng() % 8;
            IntMatrix m(k, std::vector<std::int64_t>(k));
            for (auto& row : m)
                for (auto& x : row) x = static_cast<int>(rng() % 11) - 5;
            ms.push_back(m);
        }
        ms.push_back(incidence(build_omega(1, false)));
        ms.push_back(incidence(build_omega(2, false)));
        for (const IntMatrix& m : ms) {
            const auto z = evaluate_at_matrix(char_poly(m), m);
            for (const auto& row : z)
                for (const mpz_class& x : row) CHECK(x == 0);
        }
    }

    TEST_CASE("small-factor splitting") {
        const IntPoly p = IntPoly::from_ints({-1, 1}) * IntPoly::from_ints({0, 1}) * IntPoly::from_ints({0, 1}) *
                          IntPoly::from_ints({1, -6, 1});
        const Factorization f = factor_small(p);
        CHECK(f.rest == IntPoly::from_ints({1}));
        CHECK(f.str() == "(x - 1) * x^2 * (x^2 - 6*x + 1)");
        CHECK(factor_small(IntPoly::from_ints({-2, 0, 0, 1})).rest == IntPoly::from_ints({-2, 0, 0, 1}));
    }

    TEST_CASE("Perron eigenvalue of omega_n is the squared metallic mean") {
        for (int n = 1; n <= 5; ++n) {
            const double beta = (n + std::sqrt(double(n * n + 4))) / 2;
            const PerronResult r = perron_eigenvalue(incidence(build_omega(n, false)), 1e-13);
            CHECK(std::abs(r.eigenvalue - beta * beta) < 1e-8);
            double sum = 0;
            for (double x : r.eigenvector) {
                CHECK(x > 0);
                sum += x;
            }
            CHECK(std::abs(sum - 1) < 1e-9);
        }
        CHECK(std::abs(perron_eigenvalue(identity_matrix(4), 1e-12).eigenvalue - 1) < 1e-12);
    }

    TEST_CASE("primitivity exponents") {
        CHECK(primitivity_exponent(build_omega(1, false), 20) == 5);
        CHECK(primitivity_exponent(build_omega(2, false), 20) == 4);
        for (int n = 1; n <= 5; ++n) {
            const auto e = primitivity_exponent(build_omega(n, false), 20);
            REQUIRE(e);
            CHECK(*e <= 7);
        }
        CHECK_FALSE(primitivity_exponent(identity_matrix(2), 10));
    }
}
