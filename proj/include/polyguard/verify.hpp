#pragma once

#include "geodesic.hpp"
#include "visibility.hpp"

namespace polyguard {

struct GuardSet {
    std::vector<Point> guards;
};

inline bool is_guard_set(std::span<const Point> guards, const Polyomino& p) {
    for (Point g : guards)
        if (!p.is_vertex(g)) throw Error(Errc::NotAVertex, "guard not on a polyomino vertex");
    CellSet covered(p.box());
    for (Point g : guards) {
        for (Cell c : visible_cells(g, p.cells()).cells()) covered.insert(c);
        if (covered.count() == p.size()) return true;
    }
    return covered.count() == p.size();
}

struct VerifyResult {
    bool covered = false;
    int dispersion = kInfDist;  // kInfDist encodes Infinity
    bool ok = false;
};

// Certificate check: coverage of cells(P) \ pre_covered plus dispersion bound.
// Polynomial, never searches.
inline VerifyResult verify(std::span<const Point> guards, const Polyomino& p,
                           int required_dispersion = 1, std::span<const Cell> pre_covered = {}) {
    VerifyResult r;
    CellSet covered(p.box());
    for (Cell c : pre_covered) {
        if (!p.contains(c)) throw Error(Errc::OutsideShape, "pre-covered cell not in polyomino");
        covered.insert(c);
    }
    for (Point g : guards) {
        if (!p.is_vertex(g)) throw Error(Errc::NotAVertex, "guard not on a polyomino vertex");
        for (Cell c : visible_cells(g, p.cells()).cells()) covered.insert(c);
    }
    r.covered = covered.count() == p.size();
    r.dispersion = dispersion_distance(guards, p);
    r.ok = r.covered && r.dispersion >= required_dispersion;
    return r;
}

}  // namespace polyguard
