#include "metallic/render.hpp"

#include "metallic/errors.hpp"
#include "metallic/solver.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <vector>

namespace metallic {

std::map<ColorClass, std::string> RenderStyle::default_fills() {
    return {{ColorClass::White, "#ffffff"},      {ColorClass::BlueH, "#9ecae1"},   {ColorClass::GreenH, "#a1d99b"},
            {ColorClass::YellowH, "#fee391"},    {ColorClass::AntigreenH, "#fee391"}, {ColorClass::BlueV, "#9ecae1"},
            {ColorClass::GreenV, "#a1d99b"},     {ColorClass::YellowV, "#fee391"}, {ColorClass::AntigreenV, "#fee391"},
            {ColorClass::Junction, "#bdbdbd"}};
}

namespace {

std::string num(double v) {
    std::ostringstream o;
    o << std::fixed << std::setprecision(2) << v;
    std::string s = o.str();
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s == "-0" ? "0" : s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

struct Paint {
    std::string fill;
    std::string split; // second colour for antigreen tiles, drawn on the upper-left half
};

Paint paint(const WangTileSet& tiles, int t, const RenderStyle& style) {
    if (tiles.family == Family::Custom) return {style.custom_fill, ""};
    const Classification c = classify(tiles[t], tiles.n);
    auto colour = [&](ColorClass k) {
        auto it = style.fill.find(k);
        if (it == style.fill.end()) throw DomainError("render style has no fill for " + class_name(k));
        return it->second;
    };
    Paint p{colour(c.color), ""};
    if (c.antigreen) p.split = colour(c.color == ColorClass::AntigreenH ? ColorClass::BlueH : ColorClass::BlueV);
    return p;
}

void check_letters(const Pattern2D& p, const WangTileSet& tiles) {
    for (int j = 0; j < p.height(); ++j)
        for (int i = 0; i < p.width(); ++i)
            if (p.at(i, j) < 0 || p.at(i, j) >= static_cast<int>(tiles.size()))
                throw RenderError("cell (" + std::to_string(i) + "," + std::to_string(j) + ") holds letter " +
                                  std::to_string(p.at(i, j)) + " outside the tile set of size " +
                                  std::to_string(tiles.size()));
}

std::vector<bool> bad_cells(const Pattern2D& p, const WangTileSet& tiles) {
    std::vector<bool> bad(static_cast<std::size_t>(p.area()), false);
    auto mark = [&](int i, int j) { bad[static_cast<std::size_t>(j) * p.width() + i] = true; };
    for (int j = 0; j < p.height(); ++j)
        for (int i = 0; i < p.width(); ++i) {
            const WangTile& t = tiles[p.at(i, j)];
            if (i + 1 < p.width() && t.right != tiles[p.at(i + 1, j)].left) {
                mark(i, j);
                mark(i + 1, j);
            }
            if (j + 1 < p.height() && t.top != tiles[p.at(i, j + 1)].bottom) {
                mark(i, j);
                mark(i, j + 1);
            }
        }
    return bad;
}

// Tile with its top-left corner at (x, y) in SVG coordinates.
void svg_tile(std::ostream& o, double x, double y, const WangTileSet& tiles, int t, const RenderStyle& style,
              bool invalid) {
    const double c = style.cell;
    const Paint pt = paint(tiles, t, style);
    o << "<g>";
    o << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(c) << "\" height=\"" << num(c)
      << "\" fill=\"" << pt.fill << "\" stroke=\"#000000\" stroke-width=\"1\"/>";
    if (!pt.split.empty())
        o << "<polygon points=\"" << num(x) << "," << num(y) << " " << num(x + c) << "," << num(y) << " " << num(x)
          << "," << num(y + c) << "\" fill=\"" << pt.split << "\"/>";
    if (style.show_labels) {
        const WangTile& w = tiles[t];
        const double f = style.label_font;
        o << "<path d=\"M" << num(x) << " " << num(y) << "L" << num(x + c) << " " << num(y + c) << "M" << num(x + c)
          << " " << num(y) << "L" << num(x) << " " << num(y + c) << "\" stroke=\"#999999\" stroke-width=\"0.5\"/>";
        auto text = [&](double tx, double ty, const char* anchor, const std::string& s) {
            o << "<text x=\"" << num(tx) << "\" y=\"" << num(ty) << "\" text-anchor=\"" << anchor << "\">"
              << escape(s) << "</text>";
        };
        text(x + c - 2, y + c / 2 + f / 3, "end", w.right.str());
        text(x + c / 2, y + f, "middle", w.top.str());
        text(x + 2, y + c / 2 + f / 3, "start", w.left.str());
        text(x + c / 2, y + c - 2, "middle", w.bottom.str());
    }
    if (style.show_index)
        o << "<text x=\"" << num(x + c / 2) << "\" y=\"" << num(y + c / 2 + style.label_font / 3)
          << "\" text-anchor=\"middle\" font-weight=\"bold\">" << t << "</text>";
    if (invalid)
        o << "<rect x=\"" << num(x + 1) << "\" y=\"" << num(y + 1) << "\" width=\"" << num(c - 2) << "\" height=\""
          << num(c - 2) << "\" class=\"bad\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>";
    o << "</g>\n";
}

// Block with its top-left corner at (x, y).
void svg_block(std::ostream& o, double x, double y, const Pattern2D& p, const WangTileSet& tiles,
               const RenderStyle& style) {
    check_letters(p, tiles);
    const std::vector<bool> bad = bad_cells(p, tiles);
    for (int j = p.height() - 1; j >= 0; --j)
        for (int i = 0; i < p.width(); ++i)
            svg_tile(o, x + i * style.cell, y + (p.height() - 1 - j) * style.cell, tiles, p.at(i, j), style,
                     bad[static_cast<std::size_t>(j) * p.width() + i]);
}

std::string svg_open(double w, double h, const RenderStyle& style) {
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\"" << num(h)
      << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n"
      << "<g font-family=\"monospace\" font-size=\"" << num(style.label_font) << "\">\n";
    return o.str();
}

const char* svg_close = "</g>\n</svg>\n";

std::string tikz_colour(const std::string& hex) {
    std::string h = hex;
    if (!h.empty() && h[0] == '#') h = h.substr(1);
    std::transform(h.begin(), h.end(), h.begin(), [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    return "{rgb,255:red," + std::to_string(std::stoi(h.substr(0, 2), nullptr, 16)) + ";green," +
           std::to_string(std::stoi(h.substr(2, 2), nullptr, 16)) + ";blue," +
           std::to_string(std::stoi(h.substr(4, 2), nullptr, 16)) + "}";
}

void tikz_tile(std::ostream& o, double x, double y, const WangTileSet& tiles, int t, const RenderStyle& style) {
    const Paint pt = paint(tiles, t, style);
    o << "  \\fill[fill=" << tikz_colour(pt.fill) << "] (" << num(x) << "," << num(y) << ") rectangle +(1,1);\n";
    if (!pt.split.empty())
        o << "  \\fill[fill=" << tikz_colour(pt.split) << "] (" << num(x) << "," << num(y) << ") -- +(1,1) -- +(0,1) -- cycle;\n";
    o << "  \\draw (" << num(x) << "," << num(y) << ") rectangle +(1,1);\n";
    if (style.show_labels) {
        const WangTile& w = tiles[t];
        o << "  \\draw[gray,very thin] (" << num(x) << "," << num(y) << ") -- +(1,1) (" << num(x) << "," << num(y + 1)
          << ") -- +(1,-1);\n";
        o << "  \\node[font=\\tiny] at (" << num(x + 0.82) << "," << num(y + 0.5) << ") {" << w.right.str() << "};\n";
        o << "  \\node[font=\\tiny] at (" << num(x + 0.5) << "," << num(y + 0.85) << ") {" << w.top.str() << "};\n";
        o << "  \\node[font=\\tiny] at (" << num(x + 0.18) << "," << num(y + 0.5) << ") {" << w.left.str() << "};\n";
        o << "  \\node[font=\\tiny] at (" << num(x + 0.5) << "," << num(y + 0.15) << ") {" << w.bottom.str() << "};\n";
    }
    if (style.show_index) o << "  \\node at (" << num(x + 0.5) << "," << num(y + 0.5) << ") {" << t << "};\n";
}

} // namespace

std::string render_pattern(const Pattern2D& p, const WangTileSet& tiles, const RenderStyle& style) {
    std::ostringstream o;
    o << svg_open(p.width() * style.cell, p.height() * style.cell, style);
    svg_block(o, 0, 0, p, tiles, style);
    o << svg_close;
    return o.str();
}

std::string render_substitution(const Substitution2D& s, const WangTileSet& domain, const WangTileSet& codomain,
                                const RenderStyle& style) {
    const double c = style.cell;
    const double gap = c / 2;
    const double arrow = c;
    const int count = s.domain_size();
    if (count > static_cast<int>(domain.size())) throw RenderError("substitution has more letters than the domain set");
    const int cols = std::max(1, style.columns);
    const int rows = (count + cols - 1) / cols;
    std::vector<double> col_w(static_cast<std::size_t>(cols), 0), row_h(static_cast<std::size_t>(rows), 0);
    for (int a = 0; a < count; ++a) {
        const double w = c + arrow + s[a].width() * c;
        const double h = std::max(1, s[a].height()) * c;
        col_w[a % cols] = std::max(col_w[a % cols], w);
        row_h[a / cols] = std::max(row_h[a / cols], h);
    }
    double total_w = 0, total_h = 0;
    for (double w : col_w) total_w += w + gap;
    for (double h : row_h) total_h += h + gap;
    if (count == 0) total_w = total_h = 0;

    std::ostringstream o;
    o << svg_open(total_w, total_h, style);
    double y = gap / 2;
    for (int r = 0; r < rows; ++r) {
        double x = gap / 2;
        for (int k = 0; k < cols; ++k) {
            const int a = r * cols + k;
            if (a >= count) break;
            const Pattern2D& img = s[a];
            const double mid = y + row_h[r] / 2;
            o << "<g class=\"panel\">\n";
            svg_tile(o, x, mid - c / 2, domain, a, style, false);
            o << "<path d=\"M" << num(x + c + arrow * 0.15) << " " << num(mid) << "L" << num(x + c + arrow * 0.8) << " "
              << num(mid) << "M" << num(x + c + arrow * 0.65) << " " << num(mid - 4) << "L" << num(x + c + arrow * 0.8)
              << " " << num(mid) << "L" << num(x + c + arrow * 0.65) << " " << num(mid + 4)
              << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.2\"/>\n";
            svg_block(o, x + c + arrow, mid - img.height() * c / 2, img, codomain, style);
            o << "</g>\n";
            x += col_w[k] + gap;
        }
        y += row_h[r] + gap;
    }
    o << svg_close;
    return o.str();
}

std::string pattern_tikz(const Pattern2D& p, const WangTileSet& tiles, const RenderStyle& style) {
    check_letters(p, tiles);
    std::ostringstream o;
    o << "\\begin{tikzpicture}[scale=" << num(style.cell / 48.0) << "]\n";
    for (int j = 0; j < p.height(); ++j)
        for (int i = 0; i < p.width(); ++i) tikz_tile(o, i, j, tiles, p.at(i, j), style);
    o << "\\end{tikzpicture}\n";
    return o.str();
}

std::string substitution_tikz(const Substitution2D& s, const WangTileSet& domain, const WangTileSet& codomain,
                              const RenderStyle& style) {
    std::ostringstream o;
    for (int a = 0; a < s.domain_size(); ++a) {
        const Pattern2D& img = s[a];
        check_letters(img, codomain);
        const double mid = img.height() / 2.0;
        o << "% letter " << a << "\n\\begin{tikzpicture}[scale=" << num(style.cell / 48.0) << "]\n";
        tikz_tile(o, 0, mid - 0.5, domain, a, style);
        o << "  \\draw[->] (1.2," << num(mid) << ") -- (1.8," << num(mid) << ");\n";
        for (int j = 0; j < img.height(); ++j)
            for (int i = 0; i < img.width(); ++i) tikz_tile(o, 2 + i, j, codomain, img.at(i, j), style);
        o << "\\end{tikzpicture}\n";
    }
    return o.str();
}

} // namespace metallic
