#include "metallic/substitution.hpp"

#include "metallic/errors.hpp"

#include <deque>

namespace metallic {

namespace {

std::string letter_name(const Substitution2D& s, int a) {
    if (a >= 0 && a < static_cast<int>(s.names.size())) return s.names[a];
    return std::to_string(a);
}

} // namespace

Pattern2D apply(const Substitution2D& s, const Pattern2D& p) {
    const int w = p.width(), h = p.height();
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) {
            const int a = p.at(i, j);
            if (a < 0 || a >= s.domain_size())
                throw DomainError("letter " + std::to_string(a) + " is outside the substitution alphabet");
        }
    std::vector<int> col_w(w), row_h(h);
    for (int i = 0; i < w; ++i) {
        col_w[i] = s[p.at(i, 0)].width();
        for (int j = 1; j < h; ++j)
            if (s[p.at(i, j)].width() != col_w[i])
                throw AlignmentError("images of letters " + letter_name(s, p.at(i, 0)) + " and " +
                                     letter_name(s, p.at(i, j)) + " in column " + std::to_string(i) +
                                     " have different widths");
    }
    for (int j = 0; j < h; ++j) {
        row_h[j] = s[p.at(0, j)].height();
        for (int i = 1; i < w; ++i)
            if (s[p.at(i, j)].height() != row_h[j])
                throw AlignmentError("images of letters " + letter_name(s, p.at(0, j)) + " and " +
                                     letter_name(s, p.at(i, j)) + " in row " + std::to_string(j) +
                                     " have different heights");
    }
    std::vector<int> x0(w + 1, 0), y0(h + 1, 0);
    for (int i = 0; i < w; ++i) x0[i + 1] = x0[i] + col_w[i];
    for (int j = 0; j < h; ++j) y0[j + 1] = y0[j] + row_h[j];
    Pattern2D out(x0[w], y0[h]);
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) {
            const Pattern2D& img = s[p.at(i, j)];
            for (int b = 0; b < img.height(); ++b)
                for (int a = 0; a < img.width(); ++a) out.at(x0[i] + a, y0[j] + b) = img.at(a, b);
        }
    return out;
}

Substitution2D compose(const Substitution2D& s, const Substitution2D& t) {
    if (t.codomain_size != s.domain_size())
        throw AlignmentError("cannot compose: codomain of inner substitution has " + std::to_string(t.codomain_size) +
                             " letters, outer domain has " + std::to_string(s.domain_size()));
    Substitution2D out;
    out.codomain_size = s.codomain_size;
    out.names = t.names;
    out.images.reserve(t.images.size());
    for (const auto& img : t.images) out.images.push_back(apply(s, img));
    return out;
}

Substitution2D power(const Substitution2D& s, int m) {
    if (!s.is_endomorphism()) throw DomainError("power of a substitution needs equal domain and codomain");
    if (m < 0) throw DomainError("negative power");
    Substitution2D out;
    out.codomain_size = s.codomain_size;
    out.names = s.names;
    for (int a = 0; a < s.domain_size(); ++a) out.images.push_back(Pattern2D::from_rows({{a}}));
    for (int k = 0; k < m; ++k) out = compose(s, out);
    return out;
}

IntMatrix incidence(const Substitution2D& s) {
    IntMatrix m(s.codomain_size, std::vector<std::int64_t>(s.domain_size(), 0));
    for (int a = 0; a < s.domain_size(); ++a) {
        const Pattern2D& img = s[a];
        for (int j = 0; j < img.height(); ++j)
            for (int i = 0; i < img.width(); ++i) {
                const int b = img.at(i, j);
                if (b < 0 || b >= s.codomain_size) throw DomainError("image letter outside codomain");
                ++m[b][a];
            }
    }
    return m;
}

Substitution2D relabel(const Substitution2D& s, const std::vector<int>& domain_map,
                       const std::vector<int>& codomain_map) {
    if (static_cast<int>(domain_map.size()) != s.domain_size() ||
        static_cast<int>(codomain_map.size()) != s.codomain_size)
        throw DomainError("relabel maps have the wrong size");
    Substitution2D out;
    out.codomain_size = s.codomain_size;
    out.images.resize(s.images.size());
    if (!s.names.empty()) out.names.resize(s.names.size());
    for (int a = 0; a < s.domain_size(); ++a) {
        Pattern2D img = s[a];
        for (int j = 0; j < img.height(); ++j)
            for (int i = 0; i < img.width(); ++i) img.at(i, j) = codomain_map.at(img.at(i, j));
        out.images.at(domain_map[a]) = std::move(img);
        if (!s.names.empty()) out.names.at(domain_map[a]) = s.names[a];
    }
    return out;
}

std::set<Pattern2D> substitutive_language(const Substitution2D& s, int w, int h, int max_rounds) {
    if (!s.is_endomorphism()) throw DomainError("substitutive language needs an endomorphism");
    if (w < 1 || h < 1 || w > 2 || h > 2) throw DomainError("supported shapes are 1x1, 1x2, 2x1 and 2x2");
    std::set<Pattern2D> out;
    if (s.domain_size() == 0) return out;

    // Iterate letters until every image is at least 2x2; collect the
    // shape-factors met on the way.
    std::vector<Pattern2D> current;
    for (int a = 0; a < s.domain_size(); ++a) current.push_back(Pattern2D::from_rows({{a}}));
    int rounds = 0;
    auto big_enough = [&] {
        for (const auto& p : current)
            if (p.width() < 2 || p.height() < 2) return false;
        return true;
    };
    for (;;) {
        for (const auto& p : current) {
            auto f = factors(p, w, h);
            out.insert(f.begin(), f.end());
        }
        if (big_enough()) break;
        if (++rounds > max_rounds)
            throw ResourceError("substitution is not expansive within " + std::to_string(max_rounds) + " rounds");
        for (auto& p : current) p = apply(s, p);
    }

    // Every 2x2 subword of s(x) lies in s(u) for a 2x2 subword u of x, so
    // the 2x2 factor set is closed by a worklist.
    std::set<Pattern2D> squares;
    std::deque<Pattern2D> work;
    for (const auto& p : current)
        for (const auto& f : factors(p, 2, 2))
            if (squares.insert(f).second) work.push_back(f);
    std::size_t processed = 0;
    std::size_t round_end = work.size();
    rounds = 0;
    while (!work.empty()) {
        Pattern2D u = work.front();
        work.pop_front();
        for (const auto& f : factors(apply(s, u), 2, 2))
            if (squares.insert(f).second) work.push_back(f);
        if (++processed == round_end) {
            if (++rounds > max_rounds)
                throw ResourceError("substitutive language did not stabilize within " + std::to_string(max_rounds) +
                                    " rounds");
            round_end = processed + work.size();
        }
    }
    for (const auto& q : squares) {
        auto f = factors(q, w, h);
        out.insert(f.begin(), f.end());
    }
    return out;
}

} // namespace metallic
