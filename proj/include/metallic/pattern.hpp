#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace metallic {

// A finite rectangular 2-D word in Cartesian coordinates: cell (i, j) is
// column i from the left and row j from the bottom.
class Pattern2D {
public:
    Pattern2D() = default;
    Pattern2D(int width, int height, int fill = 0);

    // Rows listed bottom row first.
    static Pattern2D from_rows(const std::vector<std::vector<int>>& rows_bottom_first);
    // Rows listed top row first, the way matrices are printed.
    static Pattern2D from_rows_top_first(const std::vector<std::vector<int>>& rows_top_first);
    // Columns listed left to right, each bottom to top.
    static Pattern2D from_columns(const std::vector<std::vector<int>>& columns);

    int width() const { return width_; }
    int height() const { return height_; }
    int area() const { return width_ * height_; }

    int at(int i, int j) const { return cells_[static_cast<std::size_t>(j) * width_ + i]; }
    int& at(int i, int j) { return cells_[static_cast<std::size_t>(j) * width_ + i]; }

    std::vector<std::vector<int>> rows() const;    // bottom row first
    std::vector<std::vector<int>> columns() const; // left to right, bottom to top

    // The w x h subword occurring at position (x, y).
    Pattern2D sub(int x, int y, int w, int h) const;

    // Multiline rendering, top row first.
    std::string str() const;

    // Ordered by size, then column by column from the left, each column
    // read bottom to top. A vertical domino (a below b) compares as the
    // pair (a, b); a horizontal domino (a left of b) as (a, b).
    std::strong_ordering operator<=>(const Pattern2D& o) const;
    bool operator==(const Pattern2D& o) const = default;

private:
    int width_ = 0, height_ = 0;
    std::vector<int> cells_;
};

// u followed by v along e_1 (axis 1) or e_2 (axis 2).
Pattern2D concat(const Pattern2D& u, const Pattern2D& v, int axis);

// All distinct w x h subwords; empty when the shape does not fit.
std::set<Pattern2D> factors(const Pattern2D& p, int w, int h);

} // namespace metallic
