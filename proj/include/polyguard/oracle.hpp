#pragma once

#include <chrono>

#include "bitset.hpp"
#include "verify.hpp"

namespace polyguard {

struct OracleBudget {
    long long node_limit = 200'000'000;
    std::chrono::milliseconds time_limit = std::chrono::minutes(10);
};

enum class OracleStatus { Ok, Timeout, Unguardable };

struct MaxDispersionResult {
    OracleStatus status = OracleStatus::Ok;
    int best = 0;  // kInfDist encodes Infinity
    std::vector<Point> witness;
};

struct EnumerationResult {
    OracleStatus status = OracleStatus::Ok;
    std::vector<std::vector<Point>> sets;
};

struct MinGuardsResult {
    OracleStatus status = OracleStatus::Ok;
    std::vector<Point> witness;
};

namespace detail {

struct BudgetClock {
    long long nodes_left;
    std::chrono::steady_clock::time_point deadline;
    bool out = false;

    explicit BudgetClock(const OracleBudget& b)
        : nodes_left(b.node_limit), deadline(std::chrono::steady_clock::now() + b.time_limit) {}

    bool tick() {
        if (out) return false;
        if (--nodes_left <= 0 || (nodes_left & 0x3ff) == 0) {
            if (nodes_left <= 0 || std::chrono::steady_clock::now() >= deadline) out = true;
        }
        return !out;
    }
};

// Precomputed search context: vertex visibility bitsets over cell indices,
// all-pairs vertex geodesic distances, per-cell seer lists.
struct SearchContext {
    const Polyomino& p;
    std::vector<Point> verts;
    std::vector<Bits> vis;
    std::vector<std::vector<int>> dist;
    std::vector<std::vector<int>> seers;
    Bits pre;
    int n_cells;

    SearchContext(const Polyomino& poly, std::span<const Cell> pre_covered) : p(poly) {
        verts = p.vertices();  // already lexicographic
        n_cells = p.size();
        std::unordered_map<int64_t, int> cell_id;
        for (int i = 0; i < n_cells; ++i) cell_id[cell_key(p.cell_list()[i])] = i;
        vis.reserve(verts.size());
        seers.assign(n_cells, {});
        for (size_t v = 0; v < verts.size(); ++v) {
            Bits b(n_cells);
            for (Cell c : visible_cells(verts[v], p.cells()).cells()) {
                const int id = cell_id.at(cell_key(c));
                b.set(id);
                seers[id].push_back(static_cast<int>(v));
            }
            vis.push_back(std::move(b));
        }
        dist.assign(verts.size(), std::vector<int>(verts.size(), 0));
        for (size_t i = 0; i < verts.size(); ++i) {
            DistanceField f(verts[i], p.cells());
            for (size_t j = 0; j < verts.size(); ++j) dist[i][j] = f[verts[j]];
        }
        pre = Bits(n_cells);
        for (Cell c : pre_covered) {
            auto it = cell_id.find(cell_key(c));
            if (it == cell_id.end())
                throw Error(Errc::OutsideShape, "pre-covered cell not in polyomino");
            pre.set(it->second);
        }
    }

    bool unguardable() const {
        for (int c = 0; c < n_cells; ++c)
            if (seers[c].empty() && !pre.test(c)) return true;
        return false;
    }
};

// Depth-first feasibility search for a covering set with pairwise distance
// >= min_dist: branch on the most constrained uncovered cell, candidates
// ordered by newly covered cells.
class FeasibilitySearch {
public:
    FeasibilitySearch(const SearchContext& ctx, int min_dist, BudgetClock& clock)
        : ctx_(ctx), min_dist_(min_dist), clock_(clock) {}

    bool run(std::vector<Point>& witness) {
        covered_ = ctx_.pre;
        active_.assign(ctx_.verts.size(), 1);
        chosen_.clear();
        if (!dfs()) return false;
        witness.clear();
        for (int v : chosen_) witness.push_back(ctx_.verts[v]);
        return true;
    }

private:
    bool dfs() {
        if (!clock_.tick()) return false;
        if (covered_.all()) return true;
        int best_cell = -1, best_count = kInfDist;
        for (int c = 0; c < ctx_.n_cells; ++c) {
            if (covered_.test(c)) continue;
            int cnt = 0;
            for (int v : ctx_.seers[c])
                if (active_[v]) ++cnt;
            if (cnt < best_count) {
                best_count = cnt;
                best_cell = c;
                if (cnt == 0) return false;
            }
        }
        std::vector<std::pair<int, int>> cands;  // (-new_coverage, vertex)
        for (int v : ctx_.seers[best_cell])
            if (active_[v]) cands.push_back({covered_.count() - covered_.count_or(ctx_.vis[v]), v});
        std::sort(cands.begin(), cands.end());
        for (auto [neg, v] : cands) {
            const Bits saved_cov = covered_;
            std::vector<int> banned;
            for (size_t u = 0; u < active_.size(); ++u) {
                if (active_[u] && ctx_.dist[v][u] < min_dist_) {
                    active_[u] = 0;
                    banned.push_back(static_cast<int>(u));
                }
            }
            covered_ |= ctx_.vis[v];
            chosen_.push_back(v);
            if (dfs()) return true;
            chosen_.pop_back();
            covered_ = saved_cov;
            for (int u : banned) active_[u] = 1;
            if (clock_.out) return false;
        }
        return false;
    }

    const SearchContext& ctx_;
    int min_dist_;
    BudgetClock& clock_;
    Bits covered_;
    std::vector<uint8_t> active_;
    std::vector<int> chosen_;
};

}  // namespace detail

// Exact maximum dispersion over all guard sets covering cells(P) \ pre_covered.
inline MaxDispersionResult exact_max_dispersion(const Polyomino& p,
                                                std::span<const Cell> pre_covered = {},
                                                const OracleBudget& budget = {}) {
    detail::SearchContext ctx(p, pre_covered);
    MaxDispersionResult r;
    if (ctx.pre.all()) {
        r.best = kInfDist;
        return r;
    }
    if (ctx.unguardable()) {
        r.status = OracleStatus::Unguardable;
        return r;
    }
    // single guard covering everything => dispersion Infinity
    for (size_t v = 0; v < ctx.verts.size(); ++v) {
        if (ctx.vis[v].count_or(ctx.pre) == ctx.n_cells) {
            r.best = kInfDist;
            r.witness = {ctx.verts[v]};
            return r;
        }
    }
    std::vector<int> ladder{1};
    for (size_t i = 0; i < ctx.verts.size(); ++i)
        for (size_t j = i + 1; j < ctx.verts.size(); ++j) ladder.push_back(ctx.dist[i][j]);
    std::sort(ladder.begin(), ladder.end());
    ladder.erase(std::unique(ladder.begin(), ladder.end()), ladder.end());

    detail::BudgetClock clock(budget);
    // binary search the largest feasible rung (feasibility is monotone)
    int lo = 0, hi = static_cast<int>(ladder.size()) - 1, best_idx = -1;
    std::vector<Point> best_witness;
    while (lo <= hi) {
        const int mid = (lo + hi) / 2;
        std::vector<Point> witness;
        detail::FeasibilitySearch search(ctx, ladder[mid], clock);
        const bool ok = search.run(witness);
        if (clock.out) {
            r.status = OracleStatus::Timeout;
            return r;
        }
        if (ok) {
            best_idx = mid;
            best_witness = std::move(witness);
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    if (best_idx < 0) {
        r.status = OracleStatus::Unguardable;  // not expected: ladder includes 1
        return r;
    }
    r.best = ladder[best_idx];
    r.witness = std::move(best_witness);
    return r;
}

// All guard sets (including non-minimal ones) with full coverage of
// cells(P) \ pre_covered and pairwise distances >= min_dist.
inline EnumerationResult enumerate_guard_sets(const Polyomino& p, int min_dist,
                                              std::span<const Cell> pre_covered = {},
                                              const OracleBudget& budget = {}) {
    detail::SearchContext ctx(p, pre_covered);
    EnumerationResult r;
    if (ctx.unguardable() && !ctx.pre.all()) return r;  // no sets
    detail::BudgetClock clock(budget);

    const int nv = static_cast<int>(ctx.verts.size());
    // remaining[c]: undecided-or-chosen seers of cell c; prune when a cell
    // can no longer be covered
    std::vector<int> remaining(ctx.n_cells);
    for (int c = 0; c < ctx.n_cells; ++c) remaining[c] = static_cast<int>(ctx.seers[c].size());
    std::vector<uint8_t> state(nv, 0);  // 0 undecided, 1 chosen, 2 excluded
    std::vector<int> chosen;
    Bits covered = ctx.pre;

    auto exclude = [&](int v, std::vector<int>& undo) {
        state[v] = 2;
        undo.push_back(v);
        for (int c = 0; c < ctx.n_cells; ++c)
            if (ctx.vis[v].test(c)) --remaining[c];
    };
    auto unexclude = [&](std::span<const int> undo) {
        for (int v : undo) {
            state[v] = 0;
            for (int c = 0; c < ctx.n_cells; ++c)
                if (ctx.vis[v].test(c)) ++remaining[c];
        }
    };
    auto coverable = [&]() {
        for (int c = 0; c < ctx.n_cells; ++c)
            if (remaining[c] == 0 && !covered.test(c)) return false;
        return true;
    };

    std::function<void(int)> rec = [&](int i) {
        if (!clock.tick()) return;
        if (i == nv) {
            if (covered.all()) r.sets.push_back([&] {
                std::vector<Point> set;
                for (int v : chosen) set.push_back(ctx.verts[v]);
                return set;
            }());
            return;
        }
        // include v_i if compatible with everything chosen
        bool compatible = true;
        for (int u : chosen)
            if (ctx.dist[i][u] < min_dist) {
                compatible = false;
                break;
            }
        if (compatible) {
            const Bits saved = covered;
            covered |= ctx.vis[i];
            chosen.push_back(i);
            state[i] = 1;
            rec(i + 1);
            state[i] = 0;
            chosen.pop_back();
            covered = saved;
        }
        if (clock.out) return;
        std::vector<int> undo;
        exclude(i, undo);
        if (coverable()) rec(i + 1);
        unexclude(undo);
    };
    rec(0);
    if (clock.out) {
        r.status = OracleStatus::Timeout;
        r.sets.clear();
    }
    return r;
}

// Minimum-cardinality vertex guard set under r-visibility (branch and bound).
inline MinGuardsResult classic_min_guards(const Polyomino& p, const OracleBudget& budget = {}) {
    detail::SearchContext ctx(p, {});
    MinGuardsResult r;
    if (ctx.unguardable()) {
        r.status = OracleStatus::Unguardable;
        return r;
    }
    detail::BudgetClock clock(budget);
    // greedy upper bound
    std::vector<int> greedy;
    {
        Bits covered(ctx.n_cells);
        while (!covered.all()) {
            int best = -1, gain = -1;
            for (size_t v = 0; v < ctx.verts.size(); ++v) {
                const int g = covered.count_or(ctx.vis[v]) - covered.count();
                if (g > gain) {
                    gain = g;
                    best = static_cast<int>(v);
                }
            }
            greedy.push_back(best);
            covered |= ctx.vis[best];
        }
    }
    std::vector<int> best_set = greedy, chosen;
    Bits covered(ctx.n_cells);
    std::function<void()> dfs = [&]() {
        if (!clock.tick()) return;
        if (covered.all()) {
            if (chosen.size() < best_set.size()) best_set = chosen;
            return;
        }
        if (chosen.size() + 1 >= best_set.size()) return;
        int best_cell = -1, best_count = kInfDist;
        for (int c = 0; c < ctx.n_cells; ++c) {
            if (covered.test(c)) continue;
            const int cnt = static_cast<int>(ctx.seers[c].size());
            if (cnt < best_count) {
                best_count = cnt;
                best_cell = c;
            }
        }
        std::vector<std::pair<int, int>> cands;
        for (int v : ctx.seers[best_cell])
            cands.push_back({covered.count_or(ctx.vis[v]) - covered.count(), v});
        std::sort(cands.begin(), cands.end(), [](auto a, auto b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        for (auto [gain, v] : cands) {
            const Bits saved = covered;
            covered |= ctx.vis[v];
            chosen.push_back(v);
            dfs();
            chosen.pop_back();
            covered = saved;
            if (clock.out) return;
        }
    };
    dfs();
    if (clock.out) {
        r.status = OracleStatus::Timeout;
        return r;
    }
    std::sort(best_set.begin(), best_set.end());
    for (int v : best_set) r.witness.push_back(ctx.verts[v]);
    return r;
}

}  // namespace polyguard
