#pragma once

#include <queue>

#include "polyomino.hpp"

namespace polyguard {

// Single-source L1 geodesic distances over the lattice points of the closed
// region, by BFS on unit steps whose segments stay in the closed region.
// For lattice endpoints this equals the continuous L1 geodesic.
class DistanceField {
public:
    DistanceField(Point source, const CellSet& s) : source_(source) {
        const BBox& bb = s.box();
        ox_ = bb.min_x;
        oy_ = bb.min_y;
        w_ = bb.width() + 1;
        h_ = bb.height() + 1;
        dist_.assign(static_cast<size_t>(w_) * h_, kInfDist);
        if (!on_closed(s, source)) return;
        std::vector<Point> queue{source}, next;
        at(source) = 0;
        int d = 0;
        while (!queue.empty()) {
            ++d;
            for (Point p : queue) {
                const Point steps[4] = {
                    {p.x + 1, p.y}, {p.x - 1, p.y}, {p.x, p.y + 1}, {p.x, p.y - 1}};
                for (Point q : steps) {
                    if (!in_grid(q) || at(q) <= d) continue;
                    if (!segment_in_closed(s, p, q)) continue;
                    at(q) = d;
                    next.push_back(q);
                }
            }
            std::swap(queue, next);
            next.clear();
        }
    }

    Point source() const { return source_; }
    bool reachable(Point p) const { return in_grid(p) && at(p) < kInfDist; }
    int operator[](Point p) const { return in_grid(p) ? at(p) : kInfDist; }

private:
    bool in_grid(Point p) const {
        return p.x >= ox_ && p.x <= ox_ + w_ - 1 && p.y >= oy_ && p.y <= oy_ + h_ - 1;
    }
    int& at(Point p) { return dist_[static_cast<size_t>(p.y - oy_) * w_ + (p.x - ox_)]; }
    int at(Point p) const { return dist_[static_cast<size_t>(p.y - oy_) * w_ + (p.x - ox_)]; }

    Point source_;
    int ox_, oy_, w_, h_;
    std::vector<int> dist_;
};

inline DistanceField distance_field(Point p, const Polyomino& poly) {
    return DistanceField(p, poly.cells());
}

inline int geodesic_distance(Point a, Point b, const CellSet& s) {
    DistanceField f(a, s);
    const int d = f[b];
    if (d >= kInfDist) throw Error(Errc::Internal, "unreachable lattice point");
    return d;
}

inline int geodesic_distance(Point a, Point b, const Polyomino& p) {
    return geodesic_distance(a, b, p.cells());
}

// Minimum pairwise geodesic distance; kInfDist for fewer than two guards.
inline int dispersion_distance(std::span<const Point> guards, const Polyomino& p) {
    for (Point g : guards)
        if (!p.is_vertex(g)) throw Error(Errc::NotAVertex, "guard not on a polyomino vertex");
    int best = kInfDist;
    for (size_t i = 0; i < guards.size(); ++i) {
        DistanceField f(guards[i], p.cells());
        for (size_t j = i + 1; j < guards.size(); ++j) best = std::min(best, f[guards[j]]);
    }
    return best;
}

}  // namespace polyguard
