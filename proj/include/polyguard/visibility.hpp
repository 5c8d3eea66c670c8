#pragma once

#include "polyomino.hpp"

namespace polyguard {

// r-visibility at cell granularity: g sees cell c iff every cell of the
// axis-aligned cell box spanning from c to the cell row/column touching g
// (on the side toward c) is occupied. A guard therefore sees a cell's
// interior entirely or not at all.
inline bool cell_visible(Point g, Cell c, const CellSet& s) {
    const int x0 = std::min(c.x, g.x > c.x ? g.x - 1 : g.x);
    const int x1 = std::max(c.x, g.x > c.x ? g.x - 1 : g.x);
    const int y0 = std::min(c.y, g.y > c.y ? g.y - 1 : g.y);
    const int y1 = std::max(c.y, g.y > c.y ? g.y - 1 : g.y);
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x)
            if (!s.contains({x, y})) return false;
    return true;
}

inline bool cell_visible(Point g, Cell c, const Polyomino& p) {
    if (!p.contains(c)) throw Error(Errc::OutsideShape, "cell not in polyomino");
    return cell_visible(g, c, p.cells());
}

// All cells visible from g, by quadrant dynamic programming: a cell is visible
// iff it is occupied and its box-neighbors toward g are visible.
inline CellSet visible_cells(Point g, const CellSet& s) {
    CellSet vis(s.box());
    const BBox& bb = s.box();
    // column/row bands touching g
    auto base_x = [&](int x) { return x == g.x || x == g.x - 1; };
    auto base_y = [&](int y) { return y == g.y || y == g.y - 1; };
    auto sweep = [&](int sx, int sy) {
        const int x_from = sx > 0 ? std::max(bb.min_x, g.x - 1) : std::min(bb.max_x, g.x);
        const int y_from = sy > 0 ? std::max(bb.min_y, g.y - 1) : std::min(bb.max_y, g.y);
        const int x_to = sx > 0 ? bb.max_x : bb.min_x;
        const int y_to = sy > 0 ? bb.max_y : bb.min_y;
        for (int y = y_from; sy > 0 ? y <= y_to : y >= y_to; y += sy) {
            for (int x = x_from; sx > 0 ? x <= x_to : x >= x_to; x += sx) {
                Cell c{x, y};
                if (!s.contains(c)) continue;
                const bool ok_x = base_x(x) || vis.contains({x - sx, y});
                const bool ok_y = base_y(y) || vis.contains({x, y - sy});
                if (ok_x && ok_y) vis.insert(c);
            }
        }
    };
    sweep(1, 1);
    sweep(1, -1);
    sweep(-1, 1);
    sweep(-1, -1);
    return vis;
}

struct VisibilityRegion {
    Point owner;
    CellSet cells;
};

inline VisibilityRegion visibility_region(Point g, const Polyomino& p) {
    return {g, visible_cells(g, p.cells())};
}

// p sees q iff the closed axis-aligned rectangle spanned by them lies in the
// closed polyomino; degenerate rectangles may run along the boundary.
inline bool point_sees_point(Point a, Point b, const CellSet& s) {
    if (a == b) return on_closed(s, a);
    if (a.x == b.x) {
        const int y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
        for (int y = y0; y < y1; ++y)
            if (!segment_in_closed(s, {a.x, y}, {a.x, y + 1})) return false;
        return true;
    }
    if (a.y == b.y) {
        const int x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
        for (int x = x0; x < x1; ++x)
            if (!segment_in_closed(s, {x, a.y}, {x + 1, a.y})) return false;
        return true;
    }
    const int x0 = std::min(a.x, b.x), x1 = std::max(a.x, b.x);
    const int y0 = std::min(a.y, b.y), y1 = std::max(a.y, b.y);
    for (int y = y0; y < y1; ++y)
        for (int x = x0; x < x1; ++x)
            if (!s.contains({x, y})) return false;
    return true;
}

inline bool point_sees_point(Point a, Point b, const Polyomino& p) {
    return point_sees_point(a, b, p.cells());
}

}  // namespace polyguard
