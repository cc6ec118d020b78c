#include "metallic/pattern.hpp"

#include "metallic/errors.hpp"

#include <sstream>

namespace metallic {

Pattern2D::Pattern2D(int width, int height, int fill) : width_(width), height_(height) {
    if (width < 0 || height < 0) throw AlignmentError("pattern dimensions must be nonnegative");
    cells_.assign(static_cast<std::size_t>(width) * height, fill);
}

Pattern2D Pattern2D::from_rows(const std::vector<std::vector<int>>& rows) {
    const int h = static_cast<int>(rows.size());
    const int w = h == 0 ? 0 : static_cast<int>(rows[0].size());
    Pattern2D p(w, h);
    for (int j = 0; j < h; ++j) {
        if (static_cast<int>(rows[j].size()) != w) throw AlignmentError("ragged rows in pattern");
        for (int i = 0; i < w; ++i) p.at(i, j) = rows[j][i];
    }
    return p;
}

Pattern2D Pattern2D::from_rows_top_first(const std::vector<std::vector<int>>& rows) {
    return from_rows(std::vector<std::vector<int>>(rows.rbegin(), rows.rend()));
}

Pattern2D Pattern2D::from_columns(const std::vector<std::vector<int>>& columns) {
    const int w = static_cast<int>(columns.size());
    const int h = w == 0 ? 0 : static_cast<int>(columns[0].size());
    Pattern2D p(w, h);
    for (int i = 0; i < w; ++i) {
        if (static_cast<int>(columns[i].size()) != h) throw AlignmentError("ragged columns in pattern");
        for (int j = 0; j < h; ++j) p.at(i, j) = columns[i][j];
    }
    return p;
}

std::vector<std::vector<int>> Pattern2D::rows() const {
    std::vector<std::vector<int>> out(height_, std::vector<int>(width_));
    for (int j = 0; j < height_; ++j)
        for (int i = 0; i < width_; ++i) out[j][i] = at(i, j);
    return out;
}

std::vector<std::vector<int>> Pattern2D::columns() const {
    std::vector<std::vector<int>> out(width_, std::vector<int>(height_));
    for (int i = 0; i < width_; ++i)
        for (int j = 0; j < height_; ++j) out[i][j] = at(i, j);
    return out;
}

Pattern2D Pattern2D::sub(int x, int y, int w, int h) const {
    if (x < 0 || y < 0 || w < 0 || h < 0 || x + w > width_ || y + h > height_)
        throw AlignmentError("subword window outside pattern");
    Pattern2D p(w, h);
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < w; ++i) p.at(i, j) = at(x + i, y + j);
    return p;
}

std::string Pattern2D::str() const {
    std::ostringstream os;
    for (int j = height_ - 1; j >= 0; --j) {
        for (int i = 0; i < width_; ++i) {
            if (i > 0) os << ' ';
            os << at(i, j);
        }
        if (j > 0) os << '\n';
    }
    return os.str();
}

std::strong_ordering Pattern2D::operator<=>(const Pattern2D& o) const {
    if (auto c = width_ <=> o.width_; c != 0) return c;
    if (auto c = height_ <=> o.height_; c != 0) return c;
    for (int i = 0; i < width_; ++i)
        for (int j = 0; j < height_; ++j)
            if (auto c = at(i, j) <=> o.at(i, j); c != 0) return c;
    return std::strong_ordering::equal;
}

Pattern2D concat(const Pattern2D& u, const Pattern2D& v, int axis) {
    if (axis == 1) {
        if (u.area() == 0 && u.width() == 0) return v;
        if (v.area() == 0 && v.width() == 0) return u;
        if (u.height() != v.height())
            throw AlignmentError("concat along e1 needs equal heights (" + std::to_string(u.height()) + " vs " +
                                 std::to_string(v.height()) + ")");
        Pattern2D p(u.width() + v.width(), u.height());
        for (int j = 0; j < u.height(); ++j) {
            for (int i = 0; i < u.width(); ++i) p.at(i, j) = u.at(i, j);
            for (int i = 0; i < v.width(); ++i) p.at(u.width() + i, j) = v.at(i, j);
        }
        return p;
    }
    if (axis == 2) {
        if (u.height() == 0) return v;
        if (v.height() == 0) return u;
        if (u.width() != v.width())
            throw AlignmentError("concat along e2 needs equal widths (" + std::to_string(u.width()) + " vs " +
                                 std::to_string(v.width()) + ")");
        Pattern2D p(u.width(), u.height() + v.height());
        for (int i = 0; i < u.width(); ++i) {
            for (int j = 0; j < u.height(); ++j) p.at(i, j) = u.at(i, j);
            for (int j = 0; j < v.height(); ++j) p.at(i, u.height() + j) = v.at(i, j);
        }
        return p;
    }
    throw DomainError("axis must be 1 or 2");
}

std::set<Pattern2D> factors(const Pattern2D& p, int w, int h) {
    std::set<Pattern2D> out;
    if (w < 0 || h < 0 || w > p.width() || h > p.height()) return out;
    for (int y = 0; y + h <= p.height(); ++y)
        for (int x = 0; x + w <= p.width(); ++x) out.insert(p.sub(x, y, w, h));
    return out;
}

} // namespace metallic
