#pragma once

#include <random>
#include <unordered_set>

#include "polyomino.hpp"

namespace polyguard {

namespace detail {

class GrowthSet {
public:
    bool contains(Cell c) const { return cells_.count(cell_key(c)) != 0; }
    void insert(Cell c) {
        cells_.insert(cell_key(c));
        list_.push_back(c);
        box_.expand(c);
    }
    const std::vector<Cell>& list() const { return list_; }
    const BBox& box() const { return box_; }

    // Would the shape stay hole-free after adding c? (flood of absent cells)
    bool hole_free_with(Cell c) const {
        BBox bb = box_;
        bb.expand(c);
        BBox outer{bb.min_x - 1, bb.min_y - 1, bb.max_x + 1, bb.max_y + 1};
        auto absent = [&](Cell u) { return !(u == c) && !contains(u); };
        const int total_absent =
            outer.width() * outer.height() - static_cast<int>(list_.size()) - 1;
        std::unordered_set<int64_t> seen;
        std::vector<Cell> stack{{outer.min_x, outer.min_y}};
        seen.insert(cell_key(stack[0]));
        int reached = 1;
        while (!stack.empty()) {
            Cell u = stack.back();
            stack.pop_back();
            for (Cell d : kCellSteps) {
                Cell v{u.x + d.x, u.y + d.y};
                if (!outer.contains(v) || !absent(v) || seen.count(cell_key(v))) continue;
                seen.insert(cell_key(v));
                ++reached;
                stack.push_back(v);
            }
        }
        return reached == total_absent;
    }

private:
    std::unordered_set<int64_t> cells_;
    std::vector<Cell> list_;
    BBox box_;
};

inline Polyomino normalized(const std::vector<Cell>& cells) {
    BBox bb;
    for (Cell c : cells) bb.expand(c);
    std::vector<Cell> out;
    out.reserve(cells.size());
    for (Cell c : cells) out.push_back({c.x - bb.min_x, c.y - bb.min_y});
    return Polyomino(std::move(out));
}

}  // namespace detail

// Random simple polyomino of exactly cell_count cells: site growth that
// rejects hole-creating additions. Deterministic in the seed.
inline Polyomino random_simple(uint64_t seed, int cell_count) {
    if (cell_count < 1) throw Error(Errc::EmptyShape, "cell_count must be >= 1");
    std::mt19937_64 rng(seed);
    for (int restart = 0; restart < 50; ++restart) {
        detail::GrowthSet s;
        s.insert({0, 0});
        std::vector<Cell> frontier{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        bool stuck = false;
        while (static_cast<int>(s.list().size()) < cell_count && !stuck) {
            int tries = 0;
            for (;; ++tries) {
                if (tries > 200 || frontier.empty()) {
                    stuck = true;
                    break;
                }
                const size_t i = rng() % frontier.size();
                Cell c = frontier[i];
                if (s.contains(c)) {
                    frontier[i] = frontier.back();
                    frontier.pop_back();
                    continue;
                }
                if (!s.hole_free_with(c)) continue;
                s.insert(c);
                frontier[i] = frontier.back();
                frontier.pop_back();
                for (Cell d : kCellSteps) {
                    Cell n{c.x + d.x, c.y + d.y};
                    if (!s.contains(n)) frontier.push_back(n);
                }
                break;
            }
        }
        if (static_cast<int>(s.list().size()) == cell_count) return detail::normalized(s.list());
    }
    throw Error(Errc::GrowthStuck, "random_simple failed after retry budget");
}

// Random tree-shaped polyomino: growth only accepts cells with exactly one
// occupied side-neighbor and no diagonal contact, so the dual graph stays a
// tree and the shape stays hole-free (hence also thin).
inline Polyomino random_tree(uint64_t seed, int cell_count) {
    if (cell_count < 1) throw Error(Errc::EmptyShape, "cell_count must be >= 1");
    std::mt19937_64 rng(seed);
    for (int restart = 0; restart < 50; ++restart) {
        detail::GrowthSet s;
        s.insert({0, 0});
        std::vector<Cell> frontier{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        bool stuck = false;
        auto addable = [&](Cell c) {
            int side = 0;
            for (Cell d : kCellSteps)
                if (s.contains({c.x + d.x, c.y + d.y})) ++side;
            if (side != 1) return false;
            const int corners[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
            for (auto [dx, dy] : corners) {
                if (s.contains({c.x + dx, c.y + dy}) && !s.contains({c.x + dx, c.y}) &&
                    !s.contains({c.x, c.y + dy}))
                    return false;  // pinch contact
            }
            return true;
        };
        while (static_cast<int>(s.list().size()) < cell_count && !stuck) {
            int tries = 0;
            for (;; ++tries) {
                if (tries > 200 || frontier.empty()) {
                    stuck = true;
                    break;
                }
                const size_t i = rng() % frontier.size();
                Cell c = frontier[i];
                if (s.contains(c)) {
                    frontier[i] = frontier.back();
                    frontier.pop_back();
                    continue;
                }
                if (!addable(c)) continue;
                s.insert(c);
                frontier[i] = frontier.back();
                frontier.pop_back();
                for (Cell d : kCellSteps) {
                    Cell n{c.x + d.x, c.y + d.y};
                    if (!s.contains(n)) frontier.push_back(n);
                }
                break;
            }
        }
        if (static_cast<int>(s.list().size()) == cell_count) return detail::normalized(s.list());
    }
    throw Error(Errc::GrowthStuck, "random_tree failed after retry budget");
}

}  // namespace polyguard
