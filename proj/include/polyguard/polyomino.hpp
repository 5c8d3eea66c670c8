#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "geometry.hpp"

namespace polyguard {

enum class Errc {
    EmptyShape,
    Disconnected,
    BadChar,
    OutsideShape,
    NotAVertex,
    NotSimple,
    NotTreeShaped,
    DegenerateRectangle,
    GrowthStuck,
    FullyVisible,
    Overlap,
    PortMismatch,
    UnsatisfiedClause,
    ParseError,
    Internal,
};

struct Error : std::runtime_error {
    Errc code;
    Error(Errc c, const std::string& what) : std::runtime_error(what), code(c) {}
};

inline std::vector<std::vector<Cell>> components_of(const CellSet& s) {
    std::vector<std::vector<Cell>> comps;
    CellSet seen(s.box());
    for (Cell start : s.cells()) {
        if (seen.contains(start)) continue;
        comps.emplace_back();
        std::vector<Cell> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            Cell c = stack.back();
            stack.pop_back();
            comps.back().push_back(c);
            for (Cell d : kCellSteps) {
                Cell n{c.x + d.x, c.y + d.y};
                if (s.contains(n) && !seen.contains(n)) {
                    seen.insert(n);
                    stack.push_back(n);
                }
            }
        }
    }
    return comps;
}

// Directed boundary edge: travelling a->b keeps the occupied side on the right,
// which makes the induced traversal clockwise (y grows upward).
struct BoundaryEdge {
    Point a, b;
};

namespace detail {

// Outgoing clockwise boundary edges at point p (0, 1, or 2 at a pinch).
inline int outgoing_boundary(const CellSet& s, Point p, BoundaryEdge out[2]) {
    const bool ne = s.contains({p.x, p.y});
    const bool nw = s.contains({p.x - 1, p.y});
    const bool se = s.contains({p.x, p.y - 1});
    const bool sw = s.contains({p.x - 1, p.y - 1});
    int n = 0;
    // east along y=p.y: inside below => eastbound
    if (se && !ne) out[n++] = {p, {p.x + 1, p.y}};
    // west along y=p.y: inside above => westbound
    if (nw && !sw) out[n++] = {p, {p.x - 1, p.y}};
    // north along x=p.x: inside east => northbound
    if (ne && !nw) out[n++] = {p, {p.x, p.y + 1}};
    // south along x=p.x: inside west => southbound
    if (sw && !se) out[n++] = {p, {p.x, p.y - 1}};
    return n;
}

inline BoundaryEdge next_edge(const CellSet& s, BoundaryEdge e) {
    BoundaryEdge cand[2];
    int n = outgoing_boundary(s, e.b, cand);
    assert(n >= 1 && n <= 2);
    if (n == 1) return cand[0];
    // Pinch point: take the right turn so the trace hugs the current cell.
    const int dx = e.b.x - e.a.x, dy = e.b.y - e.a.y;
    const int rx = dy, ry = -dx;  // right of travel direction
    for (int i = 0; i < n; ++i) {
        if (cand[i].b.x - cand[i].a.x == rx && cand[i].b.y - cand[i].a.y == ry) return cand[i];
    }
    assert(false && "pinch without right turn");
    return cand[0];
}

}  // namespace detail

// All clockwise boundary cycles of a cell set (outer cycle(s) plus holes).
inline std::vector<std::vector<BoundaryEdge>> boundary_cycles(const CellSet& s) {
    std::vector<std::vector<BoundaryEdge>> cycles;
    std::unordered_set<int64_t> used;  // key of directed edge by midpoint*2
    auto edge_key = [](BoundaryEdge e) {
        return (point_key({e.a.x + e.b.x, e.a.y + e.b.y}) << 1) ^
               (e.a < e.b ? 0 : 1);
    };
    const BBox& bb = s.box();
    for (int y = bb.min_y; y <= bb.max_y + 1; ++y) {
        for (int x = bb.min_x; x <= bb.max_x + 1; ++x) {
            BoundaryEdge cand[2];
            int n = detail::outgoing_boundary(s, {x, y}, cand);
            for (int i = 0; i < n; ++i) {
                if (used.count(edge_key(cand[i]))) continue;
                std::vector<BoundaryEdge> cyc;
                BoundaryEdge e = cand[i];
                while (!used.count(edge_key(e))) {
                    used.insert(edge_key(e));
                    cyc.push_back(e);
                    e = detail::next_edge(s, e);
                }
                cycles.push_back(std::move(cyc));
            }
        }
    }
    return cycles;
}

// Absent cells enclosed by the shape (4-connected complement flood fill).
inline int hole_count(const CellSet& s) {
    const BBox& bb = s.box();
    BBox outer{bb.min_x - 1, bb.min_y - 1, bb.max_x + 1, bb.max_y + 1};
    CellSet seen(outer);
    std::vector<Cell> stack{{outer.min_x, outer.min_y}};
    seen.insert(stack[0]);
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (Cell d : kCellSteps) {
            Cell n{c.x + d.x, c.y + d.y};
            if (!outer.contains(n) || seen.contains(n) || s.contains(n)) continue;
            seen.insert(n);
            stack.push_back(n);
        }
    }
    int holes = 0;
    std::vector<bool> hole_seen(static_cast<size_t>(outer.width()) * outer.height(), false);
    auto idx = [&](Cell c) {
        return static_cast<size_t>(c.y - outer.min_y) * outer.width() + (c.x - outer.min_x);
    };
    for (int y = bb.min_y; y <= bb.max_y; ++y) {
        for (int x = bb.min_x; x <= bb.max_x; ++x) {
            Cell c{x, y};
            if (s.contains(c) || seen.contains(c) || hole_seen[idx(c)]) continue;
            ++holes;  // flood this enclosed pocket
            std::vector<Cell> st{c};
            hole_seen[idx(c)] = true;
            while (!st.empty()) {
                Cell u = st.back();
                st.pop_back();
                for (Cell d : kCellSteps) {
                    Cell n{u.x + d.x, u.y + d.y};
                    if (!bb.contains(n) || s.contains(n) || seen.contains(n) || hole_seen[idx(n)])
                        continue;
                    hole_seen[idx(n)] = true;
                    st.push_back(n);
                }
            }
        }
    }
    return holes;
}

class Polyomino {
public:
    explicit Polyomino(std::vector<Cell> cells) {
        if (cells.empty()) throw Error(Errc::EmptyShape, "polyomino needs at least one cell");
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        BBox bb;
        for (Cell c : cells) bb.expand(c);
        set_ = make_cellset(bb, cells);
        if (components_of(set_).size() != 1)
            throw Error(Errc::Disconnected, "cells are not edge-connected");
        cells_ = std::move(cells);
        derive();
    }

    const CellSet& cells() const { return set_; }
    const std::vector<Cell>& cell_list() const { return cells_; }
    const BBox& box() const { return set_.box(); }
    int size() const { return static_cast<int>(cells_.size()); }
    bool contains(Cell c) const { return set_.contains(c); }

    const std::vector<Point>& vertices() const { return vertices_; }
    bool is_vertex(Point p) const { return vertex_set_.count(point_key(p)) != 0; }

    bool simple() const { return holes_ == 0; }
    bool thin() const { return thin_; }
    bool tree_shaped() const { return tree_shaped_; }
    int holes() const { return holes_; }
    const std::vector<std::vector<BoundaryEdge>>& boundary() const { return boundary_; }

    int dual_degree(Cell c) const {
        int d = 0;
        for (Cell s : kCellSteps)
            if (contains({c.x + s.x, c.y + s.y})) ++d;
        return d;
    }

    std::vector<Cell> niches() const {
        std::vector<Cell> out;
        for (Cell c : cells_)
            if (dual_degree(c) == 1) out.push_back(c);
        return out;
    }

private:
    void derive() {
        boundary_ = boundary_cycles(set_);
        holes_ = hole_count(set_);
        thin_ = true;
        int dual_edges = 0;
        for (Cell c : cells_) {
            if (contains({c.x + 1, c.y}) && contains({c.x, c.y + 1}) &&
                contains({c.x + 1, c.y + 1}))
                thin_ = false;
            if (contains({c.x + 1, c.y})) ++dual_edges;
            if (contains({c.x, c.y + 1})) ++dual_edges;
        }
        tree_shaped_ = (dual_edges == size() - 1);  // connected, so acyclic <=> n-1 edges
        std::set<Point> vs;
        for (const auto& cyc : boundary_)
            for (const auto& e : cyc)
                if (is_vertex_point(set_, e.a)) vs.insert(e.a);
        vertices_.assign(vs.begin(), vs.end());
        for (Point p : vertices_) vertex_set_.insert(point_key(p));
    }

    CellSet set_;
    std::vector<Cell> cells_;
    std::vector<Point> vertices_;
    std::unordered_set<int64_t> vertex_set_;
    std::vector<std::vector<BoundaryEdge>> boundary_;
    int holes_ = 0;
    bool thin_ = false;
    bool tree_shaped_ = false;
};

struct Classification {
    bool simple;
    bool thin;
    bool tree_shaped;
};

inline Classification classify(const Polyomino& p) {
    return {p.simple(), p.thin(), p.tree_shaped()};
}

// Grid text: '#' occupied, '.' or ' ' empty; first line is the top row.
inline Polyomino from_grid(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    std::vector<Cell> cells;
    const int h = static_cast<int>(lines.size());
    for (int r = 0; r < h; ++r) {
        for (int i = 0; i < static_cast<int>(lines[r].size()); ++i) {
            const char ch = lines[r][i];
            if (ch == '#')
                cells.push_back({i, h - 1 - r});
            else if (ch != '.' && ch != ' ' && ch != '\r')
                throw Error(Errc::BadChar, std::string("bad grid character '") + ch + "'");
        }
    }
    if (cells.empty()) throw Error(Errc::EmptyShape, "grid has no '#' cells");
    return Polyomino(std::move(cells));
}

// Inverse of from_grid: cells at nonnegative coordinates render anchored at the
// origin so the coordinates survive a round trip; otherwise anchor at the box.
inline std::string render_grid(const Polyomino& p) {
    const BBox& bb = p.box();
    const int x0 = std::min(0, bb.min_x);
    const int y0 = std::min(0, bb.min_y);
    std::string out;
    for (int y = bb.max_y; y >= y0; --y) {
        for (int x = x0; x <= bb.max_x; ++x) out.push_back(p.contains({x, y}) ? '#' : '.');
        if (y > y0) out.push_back('\n');
    }
    return out;
}

}  // namespace polyguard
