#include "metallic/minimality.hpp"

#include "metallic/errors.hpp"
#include "metallic/families.hpp"
#include "metallic/graph.hpp"
#include "metallic/omega.hpp"

#include <algorithm>
#include <map>

namespace metallic {

std::string shape_name(Shape s) {
    switch (s) {
    case Shape::S2x2: return "2x2";
    case Shape::S2x1: return "2x1";
    case Shape::S1x2: return "1x2";
    }
    return "?";
}

Shape parse_shape(const std::string& s) {
    if (s == "2x2") return Shape::S2x2;
    if (s == "2x1") return Shape::S2x1;
    if (s == "1x2") return Shape::S1x2;
    throw DomainError("unknown shape '" + s + "' (expected 2x2, 2x1 or 1x2)");
}

int shape_width(Shape s) { return s == Shape::S1x2 ? 1 : 2; }
int shape_height(Shape s) { return s == Shape::S2x1 ? 1 : 2; }

int AdjacencyGraph::index_of(const Pattern2D& p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it == vertices.end() || *it != p) return -1;
    return static_cast<int>(it - vertices.begin());
}

namespace {

Pattern2D horizontal(int a, int b) { return Pattern2D::from_rows({{a, b}}); }
Pattern2D vertical(int top, int bottom) { return Pattern2D::from_rows_top_first({{top}, {bottom}}); }
Pattern2D square(int a, int b, int c, int d) { return Pattern2D::from_rows_top_first({{a, b}, {c, d}}); }

struct Geometry {
    const Substitution2D& s;
    int width(int a) const { return s[a].width(); }
    int height(int a) const { return s[a].height(); }
    bool side_by_side(int a, int b) const { return height(a) == height(b); }
    bool stacked(int a, int b) const { return width(a) == width(b); }

    bool is_vertex(const Pattern2D& p, Shape shape) const {
        switch (shape) {
        case Shape::S2x1: return side_by_side(p.at(0, 0), p.at(1, 0));
        case Shape::S1x2: return stacked(p.at(0, 1), p.at(0, 0));
        case Shape::S2x2: {
            const int a = p.at(0, 1), b = p.at(1, 1), c = p.at(0, 0), d = p.at(1, 0);
            return side_by_side(a, b) && side_by_side(c, d) && stacked(a, c) && stacked(b, d);
        }
        }
        return false;
    }

    // Targets of the edges leaving vertex `u`, vertex check excluded.
    std::vector<Pattern2D> straddles(const Pattern2D& u, Shape shape) const {
        std::vector<Pattern2D> out;
        switch (shape) {
        case Shape::S2x1: {
            const Pattern2D& e = s[u.at(0, 0)];
            const Pattern2D& f = s[u.at(1, 0)];
            for (int j = 0; j < e.height(); ++j) out.push_back(horizontal(e.at(e.width() - 1, j), f.at(0, j)));
            break;
        }
        case Shape::S1x2: {
            const Pattern2D& e = s[u.at(0, 1)];
            const Pattern2D& g = s[u.at(0, 0)];
            for (int i = 0; i < e.width(); ++i) out.push_back(vertical(e.at(i, 0), g.at(i, g.height() - 1)));
            break;
        }
        case Shape::S2x2: {
            const Pattern2D& e = s[u.at(0, 1)];
            const Pattern2D& f = s[u.at(1, 1)];
            const Pattern2D& g = s[u.at(0, 0)];
            const Pattern2D& h = s[u.at(1, 0)];
            out.push_back(square(e.at(e.width() - 1, 0), f.at(0, 0), g.at(g.width() - 1, g.height() - 1),
                                 h.at(0, h.height() - 1)));
            break;
        }
        }
        return out;
    }
};

std::vector<Pattern2D> all_vertices(const Geometry& geo, Shape shape) {
    const int n = geo.s.domain_size();
    std::vector<Pattern2D> out;
    if (shape == Shape::S2x1) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (geo.side_by_side(a, b)) out.push_back(horizontal(a, b));
    } else if (shape == Shape::S1x2) {
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c)
                if (geo.stacked(a, c)) out.push_back(vertical(a, c));
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!geo.side_by_side(a, b)) continue;
                for (int c = 0; c < n; ++c) {
                    if (!geo.stacked(a, c)) continue;
                    for (int d = 0; d < n; ++d)
                        if (geo.side_by_side(c, d) && geo.stacked(b, d)) out.push_back(square(a, b, c, d));
                }
            }
    }
    return out;
}

// Edge targets from every vertex without materializing the full 2x2
// vertex set: letters with equal image size contribute the same corner
// constraints, so it is enough to combine size classes.
std::set<Pattern2D> image_vertices(const Geometry& geo, Shape shape) {
    std::set<Pattern2D> out;
    if (shape != Shape::S2x2) {
        for (const Pattern2D& u : all_vertices(geo, shape))
            for (Pattern2D& v : geo.straddles(u, shape))
                if (geo.is_vertex(v, shape)) out.insert(std::move(v));
        return out;
    }
    struct Corners {
        std::set<int> lower_right, lower_left, top_right, top_left;
    };
    std::map<std::pair<int, int>, Corners> classes;
    for (int a = 0; a < geo.s.domain_size(); ++a) {
        const Pattern2D& img = geo.s[a];
        Corners& c = classes[{img.width(), img.height()}];
        c.lower_right.insert(img.at(img.width() - 1, 0));
        c.lower_left.insert(img.at(0, 0));
        c.top_right.insert(img.at(img.width() - 1, img.height() - 1));
        c.top_left.insert(img.at(0, img.height() - 1));
    }
    for (const auto& [se, ce] : classes)
        for (const auto& [sf, cf] : classes) {
            if (se.second != sf.second) continue;
            for (const auto& [sg, cg] : classes) {
                if (sg.first != se.first) continue;
                for (const auto& [sh, ch] : classes) {
                    if (sh.second != sg.second || sh.first != sf.first) continue;
                    for (int a : ce.lower_right)
                        for (int b : cf.lower_left)
                            for (int c : cg.top_right)
                                for (int d : ch.top_left) {
                                    Pattern2D v = square(a, b, c, d);
                                    if (geo.is_vertex(v, shape)) out.insert(std::move(v));
                                }
                }
            }
        }
    return out;
}

} // namespace

AdjacencyGraph build_graph(const Substitution2D& s, Shape shape, GraphScope scope) {
    if (!s.is_endomorphism()) throw DomainError("adjacency graphs need an endomorphism");
    const Geometry geo{s};
    AdjacencyGraph g;
    g.shape = shape;
    if (scope == GraphScope::Full) {
        g.vertices = all_vertices(geo, shape);
        std::sort(g.vertices.begin(), g.vertices.end());
    } else {
        const auto img = image_vertices(geo, shape);
        g.vertices.assign(img.begin(), img.end());
    }
    g.edges.assign(g.vertices.size(), {});
    for (std::size_t u = 0; u < g.vertices.size(); ++u) {
        std::set<int> targets;
        for (const Pattern2D& v : geo.straddles(g.vertices[u], shape)) {
            const int k = g.index_of(v);
            if (k >= 0) targets.insert(k);
        }
        g.edges[u].assign(targets.begin(), targets.end());
    }
    return g;
}

std::set<Pattern2D> recurrent_vertices(const AdjacencyGraph& g) {
    const std::vector<bool> cyc = on_cycle(g.edges);
    std::set<Pattern2D> out;
    for (std::size_t v = 0; v < cyc.size(); ++v)
        if (cyc[v]) out.insert(g.vertices[v]);
    return out;
}

std::set<Pattern2D> recurrent_outside_language(const Substitution2D& s, Shape shape) {
    const auto rec = recurrent_vertices(build_graph(s, shape, GraphScope::Image));
    const auto lang = substitutive_language(s, shape_width(shape), shape_height(shape));
    std::set<Pattern2D> out;
    std::set_difference(rec.begin(), rec.end(), lang.begin(), lang.end(), std::inserter(out, out.end()));
    return out;
}

bool MinimalityReport::inconclusive() const {
    return std::any_of(shapes.begin(), shapes.end(), [](const ShapeReport& r) { return r.inconclusive; });
}

bool MinimalityReport::minimal() const {
    return !shapes.empty() && std::all_of(shapes.begin(), shapes.end(), [](const ShapeReport& r) { return r.holds(); });
}

MinimalityReport check_minimality(int n, const MinimalityRadii& radii, const SolverOptions& opt) {
    if (n < 1) throw DomainError("n must be positive");
    const WangTileSet tiles = metallic_tiles(n, false);
    const Substitution2D omega = build_omega(n, false);
    MinimalityReport rep;
    rep.n = n;
    for (Shape shape : {Shape::S2x2, Shape::S2x1, Shape::S1x2}) {
        ShapeReport r;
        r.shape = shape;
        r.radius = shape == Shape::S2x2 ? radii.r2x2 : shape == Shape::S2x1 ? radii.r2x1 : radii.r1x2;
        try {
            if (shape == Shape::S2x2) {
                r.solver_language = patterns_with_surrounding(tiles, 2, 2, r.radius, opt);
            } else {
                const int axis = shape == Shape::S2x1 ? 1 : 2;
                for (auto [a, b] : dominoes_with_surrounding(tiles, axis, r.radius, opt))
                    r.solver_language.insert(axis == 1 ? horizontal(a, b) : vertical(b, a));
            }
        } catch (const ResourceError& e) {
            r.inconclusive = true;
            r.note = std::string("solver language incomplete: ") + e.what();
        }
        r.substitutive_language = substitutive_language(omega, shape_width(shape), shape_height(shape));
        if (!r.inconclusive) {
            r.languages_equal = r.solver_language == r.substitutive_language;
            if (r.languages_equal) {
                r.note = "languages agree, recurrent vertices not needed";
            } else {
                r.recurrent_computed = true;
                r.recurrent = recurrent_vertices(build_graph(omega, shape, GraphScope::Image));
                for (const Pattern2D& p : r.solver_language)
                    if (r.recurrent.count(p) && !r.substitutive_language.count(p)) r.violations.insert(p);
            }
        }
        rep.shapes.push_back(std::move(r));
    }
    return rep;
}

} // namespace metallic
