#pragma once

#include <cassert>
#include <cstdint>
#include <compare>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace polyguard {

// Cell (x,y) occupies the closed unit square [x,x+1] x [y,y+1].
struct Cell {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Lattice point. Vertices of polyominoes and guard positions live here.
struct Point {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

inline Cell cell_of(Point p) { return {p.x, p.y}; }

constexpr int kInfDist = std::numeric_limits<int>::max() / 4;

// A unit-length cell side given by its two endpoints.
struct Side {
    Point a, b;  // normalized: a < b
    Side() = default;
    Side(Point p, Point q) : a(p < q ? p : q), b(p < q ? q : p) {
        assert(std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1);
    }
    bool horizontal() const { return a.y == b.y; }
    bool vertical() const { return a.x == b.x; }
    friend auto operator<=>(const Side&, const Side&) = default;
};

struct BBox {
    int min_x = 0, min_y = 0, max_x = -1, max_y = -1;  // inclusive cell range
    int width() const { return max_x - min_x + 1; }
    int height() const { return max_y - min_y + 1; }
    bool contains(Cell c) const {
        return c.x >= min_x && c.x <= max_x && c.y >= min_y && c.y <= max_y;
    }
    void expand(Cell c) {
        if (max_x < min_x) {
            min_x = max_x = c.x;
            min_y = max_y = c.y;
        } else {
            min_x = std::min(min_x, c.x);
            max_x = std::max(max_x, c.x);
            min_y = std::min(min_y, c.y);
            max_y = std::max(max_y, c.y);
        }
    }
};

// Occupancy mask over a fixed bounding box. The workhorse for all cell-set
// computations (sub-polyominoes of a recursion share their parent's frame).
class CellSet {
public:
    CellSet() = default;
    explicit CellSet(BBox box)
        : box_(box), bits_(static_cast<size_t>(box.width()) * box.height(), 0) {}

    const BBox& box() const { return box_; }
    int count() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(Cell c) const {
        return box_.contains(c) && bits_[index(c)] != 0;
    }
    void insert(Cell c) {
        assert(box_.contains(c));
        auto& b = bits_[index(c)];
        if (!b) {
            b = 1;
            ++count_;
        }
    }
    void erase(Cell c) {
        if (!box_.contains(c)) return;
        auto& b = bits_[index(c)];
        if (b) {
            b = 0;
            --count_;
        }
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(count_);
        for (int y = box_.min_y; y <= box_.max_y; ++y)
            for (int x = box_.min_x; x <= box_.max_x; ++x)
                if (bits_[index({x, y})]) out.push_back({x, y});
        return out;
    }

    friend bool operator==(const CellSet& a, const CellSet& b) {
        if (a.count_ != b.count_) return false;
        for (int y = a.box_.min_y; y <= a.box_.max_y; ++y)
            for (int x = a.box_.min_x; x <= a.box_.max_x; ++x)
                if (a.bits_[a.index({x, y})] && !b.contains({x, y})) return false;
        return true;
    }

private:
    size_t index(Cell c) const {
        return static_cast<size_t>(c.y - box_.min_y) * box_.width() + (c.x - box_.min_x);
    }
    BBox box_;
    std::vector<uint8_t> bits_;
    int count_ = 0;
};

inline CellSet make_cellset(BBox box, std::span<const Cell> cells) {
    CellSet s(box);
    for (Cell c : cells) s.insert(c);
    return s;
}

constexpr Cell kCellSteps[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

// Cells incident to a lattice point, NE/NW/SE/SW of it.
inline std::array<Cell, 4> cells_around(Point p) {
    return {Cell{p.x, p.y}, Cell{p.x - 1, p.y}, Cell{p.x, p.y - 1}, Cell{p.x - 1, p.y - 1}};
}

// Whether a lattice point is a vertex (boundary direction change) of the set.
// Patterns: 1 or 3 incident cells, or the two-diagonal pinch configuration.
inline bool is_vertex_point(const CellSet& s, Point p) {
    const bool ne = s.contains({p.x, p.y});
    const bool nw = s.contains({p.x - 1, p.y});
    const bool se = s.contains({p.x, p.y - 1});
    const bool sw = s.contains({p.x - 1, p.y - 1});
    const int n = int(ne) + int(nw) + int(se) + int(sw);
    if (n == 1 || n == 3) return true;
    if (n == 2) return (ne && sw) || (nw && se);
    return false;
}

// True iff p lies on the closed region (has at least one incident cell).
inline bool on_closed(const CellSet& s, Point p) {
    for (Cell c : cells_around(p))
        if (s.contains(c)) return true;
    return false;
}

// Unit lattice edge p->q (axis step) lies in the closed region iff one of the
// two flanking cells is present. This is what makes boundary edges walkable.
inline bool segment_in_closed(const CellSet& s, Point p, Point q) {
    if (p.x == q.x) {  // vertical step
        const int y = std::min(p.y, q.y);
        return s.contains({p.x, y}) || s.contains({p.x - 1, y});
    }
    const int x = std::min(p.x, q.x);
    return s.contains({x, p.y}) || s.contains({x, p.y - 1});
}

inline int64_t point_key(Point p) {
    return (static_cast<int64_t>(p.x) << 32) ^ static_cast<uint32_t>(p.y);
}
inline int64_t cell_key(Cell c) {
    return (static_cast<int64_t>(c.x) << 32) ^ static_cast<uint32_t>(c.y);
}

// One of the 8 axis symmetries, applied as p -> M*p + t on lattice points.
// Cells transform as their min corners after mapping the unit square.
struct Transform {
    int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    int tx = 0, ty = 0;

    Point apply(Point p) const {
        return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty};
    }
    Cell apply(Cell c) const {
        // image of the closed unit square; min corner of the image cell
        Point a = apply(Point{c.x, c.y});
        Point b = apply(Point{c.x + 1, c.y + 1});
        return {std::min(a.x, b.x), std::min(a.y, b.y)};
    }
    bool reflection() const { return m00 * m11 - m01 * m10 < 0; }

    static Transform translation(int dx, int dy) { return {1, 0, 0, 1, dx, dy}; }
    // mirror across the vertical axis, then translate
    static Transform mirror_x(int dx = 0, int dy = 0) { return {-1, 0, 0, 1, dx, dy}; }
};

}  // namespace polyguard

template <>
struct std::hash<polyguard::Point> {
    size_t operator()(polyguard::Point p) const noexcept {
        return std::hash<int64_t>()(polyguard::point_key(p));
    }
};
template <>
struct std::hash<polyguard::Cell> {
    size_t operator()(polyguard::Cell c) const noexcept {
        return std::hash<int64_t>()(polyguard::cell_key(c));
    }
};
