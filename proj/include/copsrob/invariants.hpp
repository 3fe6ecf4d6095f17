#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob {

struct IndependentSetWitness {
    std::vector<int> vertices;  // sorted ascending
    int size() const { return int(vertices.size()); }
};

struct DominatingSetWitness {
    std::vector<int> vertices;
    int lower_bound = 0;  // ceil(n / (maxdeg+1)), reported alongside
    int size() const { return int(vertices.size()); }
};

struct SolverLimits {
    int vertex_cap = 128;  // exact solvers refuse larger instances
};

inline void check_instance_size(const Graph& g, const SolverLimits& lim) {
    if (g.n() > lim.vertex_cap)
        throw std::runtime_error("instance too large: n=" + std::to_string(g.n()) +
                                 " exceeds vertex cap " + std::to_string(lim.vertex_cap));
}

inline bool is_independent(const Graph& g, const Bitset& s) {
    for (int v = s.next(); v >= 0; v = s.next(v + 1))
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

inline bool is_dominating(const Graph& g, const Bitset& s) {
    Bitset covered = s;
    for (int v = s.next(); v >= 0; v = s.next(v + 1)) covered |= g.neighbors(v);
    return covered.count() == g.n();
}

namespace detail {

// Max clique on the complement = maximum independent set. Branch and bound
// with a greedy-colouring upper bound (colour classes of the complement are
// cliques of G, i.e. a clique cover of the candidate set).
class MaxIndependentSet {
public:
    explicit MaxIndependentSet(const Graph& g) : g_(g), n_(g.n()) {
        comp_.reserve(n_);
        for (int v = 0; v < n_; ++v) {
            Bitset row(n_);
            for (int u = 0; u < n_; ++u)
                if (u != v && !g.has_edge(u, v)) row.set(u);
            comp_.push_back(row);
        }
    }

    IndependentSetWitness solve(const Bitset& domain) {
        best_.clear();
        Bitset cur(n_);
        expand(domain, cur, 0);
        IndependentSetWitness w;
        w.vertices = best_;
        std::sort(w.vertices.begin(), w.vertices.end());
        return w;
    }

private:
    // greedy colouring of candidates in the complement graph; returns the
    // candidates ordered by colour with per-vertex colour numbers
    int colour_bound(const Bitset& cand, std::vector<int>& order, std::vector<int>& col) {
        order.clear();
        col.clear();
        Bitset left = cand;
        int colours = 0;
        while (left.any()) {
            ++colours;
            Bitset avail = left;
            for (int v = avail.next(); v >= 0; v = avail.next(v + 1)) {
                order.push_back(v);
                col.push_back(colours);
                left.reset(v);
                avail -= comp_[v];
                avail.reset(v);
            }
        }
        return colours;
    }

    void expand(const Bitset& cand, Bitset& cur, int cur_size) {
        std::vector<int> order, col;
        colour_bound(cand, order, col);
        for (int idx = int(order.size()) - 1; idx >= 0; --idx) {
            if (cur_size + col[idx] <= int(best_.size())) return;
            int v = order[idx];
            cur.set(v);
            Bitset next = cand & comp_[v];
            if (cur_size + 1 > int(best_.size())) {
                best_ = cur.to_vector();
            }
            if (next.any()) expand(next, cur, cur_size + 1);
            cur.reset(v);
        }
    }

    const Graph& g_;
    int n_;
    std::vector<Bitset> comp_;  // complement adjacency
    std::vector<int> best_;
};

}  // namespace detail

inline IndependentSetWitness max_independent_set(const Graph& g, const Bitset& domain,
                                                 const SolverLimits& lim = {}) {
    check_instance_size(g, lim);
    detail::MaxIndependentSet solver(g);
    IndependentSetWitness w = solver.solve(domain);
    Bitset s(g.n());
    for (int v : w.vertices) s.set(v);
    if (!is_independent(g, s)) throw std::logic_error("witness not independent");
    return w;
}

inline std::pair<int, IndependentSetWitness> independence_number(const Graph& g,
                                                                 const SolverLimits& lim = {}) {
    Bitset all(g.n());
    for (int v = 0; v < g.n(); ++v) all.set(v);
    IndependentSetWitness w = max_independent_set(g, all, lim);
    return {w.size(), w};
}

// ---------------------------------------------------------------------------
// minimum dominating set

namespace detail {

class MinDominatingSet {
public:
    explicit MinDominatingSet(const Graph& g) : g_(g), n_(g.n()) {
        for (int v = 0; v < n_; ++v) closed_.push_back(g.closed_neighbors(v));
        int maxdeg = 0;
        for (int v = 0; v < n_; ++v) maxdeg = std::max(maxdeg, g.degree(v));
        lb_ = (n_ + maxdeg) / (maxdeg + 1);
        maxdeg_ = maxdeg;
    }

    DominatingSetWitness solve() {
        // greedy incumbent: repeatedly take the vertex covering the most
        // uncovered vertices
        best_ = greedy();
        std::vector<int> cur;
        Bitset covered(n_);
        branch(cur, covered);
        DominatingSetWitness w;
        w.vertices = best_;
        std::sort(w.vertices.begin(), w.vertices.end());
        w.lower_bound = lb_;
        return w;
    }

private:
    std::vector<int> greedy() {
        std::vector<int> out;
        Bitset covered(n_);
        while (covered.count() < n_) {
            int bestv = -1, bestgain = -1;
            for (int v = 0; v < n_; ++v) {
                int gain = (closed_[v] - covered).count();
                if (gain > bestgain) {
                    bestgain = gain;
                    bestv = v;
                }
            }
            out.push_back(bestv);
            covered |= closed_[bestv];
        }
        return out;
    }

    void branch(std::vector<int>& cur, const Bitset& covered) {
        if (int(best_.size()) == lb_) return;  // provably optimal already
        int uncovered = n_ - covered.count();
        if (uncovered == 0) {
            if (cur.size() < best_.size()) best_ = cur;
            return;
        }
        int bound = int(cur.size()) + (uncovered + maxdeg_) / (maxdeg_ + 1);
        if (bound >= int(best_.size())) return;
        // branch on the dominators of the lowest-index uncovered vertex
        int v = 0;
        while (covered.test(v)) ++v;
        const Bitset& cand = closed_[v];
        for (int u = cand.next(); u >= 0; u = cand.next(u + 1)) {
            cur.push_back(u);
            branch(cur, covered | closed_[u]);
            cur.pop_back();
            if (int(best_.size()) == lb_) return;
        }
    }

    const Graph& g_;
    int n_;
    int lb_;
    int maxdeg_;
    std::vector<Bitset> closed_;
    std::vector<int> best_;
};

}  // namespace detail

inline std::pair<int, DominatingSetWitness> domination_number(const Graph& g,
                                                              const SolverLimits& lim = {}) {
    check_instance_size(g, lim);
    detail::MinDominatingSet solver(g);
    DominatingSetWitness w = solver.solve();
    Bitset s(g.n());
    for (int v : w.vertices) s.set(v);
    if (!is_dominating(g, s)) throw std::logic_error("witness not dominating");
    return {w.size(), w};
}

// ---------------------------------------------------------------------------
// constrained maximum independent set

namespace detail {

// Lexicographic two-objective search: maximise |S|, then minimise
// |S ∩ penalty|, then prefer the lexicographically smallest vertex set.
// Branches on the lowest-index remaining vertex, include first, so among
// equal (size, overlap) solutions the first one found is lexicographically
// least.
class ConstrainedMis {
public:
    ConstrainedMis(const Graph& g, Bitset penalty) : g_(g), n_(g.n()), penalty_(penalty) {}

    IndependentSetWitness solve(const Bitset& domain) {
        best_size_ = -1;
        best_overlap_ = 0;
        std::vector<int> cur;
        branch(domain, cur, 0);
        IndependentSetWitness w;
        w.vertices = best_;
        return w;
    }

    int best_overlap() const { return best_overlap_; }

private:
    // cheap clique-cover bound on the candidate set
    int cover_bound(Bitset cand) const {
        int cliques = 0;
        while (cand.any()) {
            ++cliques;
            int v = cand.next();
            // grow a clique greedily and remove it
            Bitset clique(n_);
            Bitset common = cand;
            while (v >= 0) {
                clique.set(v);
                common &= g_.neighbors(v);
                v = common.next();
            }
            cand -= clique;
        }
        return cliques;
    }

    void branch(const Bitset& cand, std::vector<int>& cur, int overlap) {
        int size = int(cur.size());
        if (size > best_size_ || (size == best_size_ && overlap < best_overlap_)) {
            best_size_ = size;
            best_overlap_ = overlap;
            best_ = cur;
        }
        if (cand.none()) return;
        int ub = size + cover_bound(cand);
        if (ub < best_size_) return;
        if (ub == best_size_ && overlap >= best_overlap_) return;
        int v = cand.next();
        // include v
        cur.push_back(v);
        Bitset next = cand - g_.neighbors(v);
        next.reset(v);
        branch(next, cur, overlap + (penalty_.test(v) ? 1 : 0));
        cur.pop_back();
        // exclude v
        Bitset rest = cand;
        rest.reset(v);
        branch(rest, cur, overlap);
    }

    const Graph& g_;
    int n_;
    Bitset penalty_;
    int best_size_, best_overlap_;
    std::vector<int> best_;
};

}  // namespace detail

struct ConstrainedMisResult {
    IndependentSetWitness witness;
    int penalty_overlap = 0;
};

inline ConstrainedMisResult constrained_max_independent_set(const Graph& g, const Bitset& domain,
                                                            const Bitset& penalty,
                                                            const SolverLimits& lim = {}) {
    check_instance_size(g, lim);
    if (domain.none()) throw std::invalid_argument("constrained MIS: empty domain");
    detail::ConstrainedMis solver(g, penalty);
    ConstrainedMisResult r;
    r.witness = solver.solve(domain);
    r.penalty_overlap = solver.best_overlap();
    Bitset s(g.n());
    for (int v : r.witness.vertices) s.set(v);
    if (!is_independent(g, s)) throw std::logic_error("witness not independent");
    return r;
}

// ---------------------------------------------------------------------------
// block scan (three-layer windows B_i = N_i u N_{i+1} u N_{i+2})

struct BlockScan {
    struct Block {
        int index = 0;
        Bitset vertices;
        int alpha = 0;
    };
    int base = 0;
    std::vector<Block> blocks;
    int argmax = -1;  // smallest index attaining the max alpha
    IndependentSetWitness witness;

    int max_alpha() const { return argmax < 0 ? 0 : blocks[argmax].alpha; }
};

inline BlockScan block_scan(const Graph& g, const LayerDecomposition& ld,
                            const SolverLimits& lim = {}) {
    BlockScan scan;
    scan.base = ld.base;
    int d = ld.eccentricity();
    if (d < 2) return scan;  // degenerate: no valid window
    for (int i = 0; i <= d - 2; ++i) {
        BlockScan::Block b;
        b.index = i;
        b.vertices = ld.layer_range(i, i + 2);
        IndependentSetWitness w = max_independent_set(g, b.vertices, lim);
        b.alpha = w.size();
        if (scan.argmax < 0 || b.alpha > scan.blocks[scan.argmax].alpha) {
            scan.argmax = i;
            scan.witness = w;
        }
        scan.blocks.push_back(std::move(b));
    }
    return scan;
}

// ---------------------------------------------------------------------------
// greedy maximal extension

// Extends an independent seed to a maximal independent set of the induced
// subgraph on `domain`, adding vertices in ascending index order.
inline Bitset maximal_independent_extension(const Graph& g, const Bitset& domain,
                                            const Bitset& seed) {
    if (!seed.is_subset_of(domain))
        throw std::invalid_argument("maximal_independent_extension: seed outside domain");
    if (!is_independent(g, seed))
        throw std::invalid_argument("maximal_independent_extension: seed not independent");
    Bitset out = seed;
    Bitset blocked(g.n());
    for (int v = seed.next(); v >= 0; v = seed.next(v + 1)) blocked |= g.neighbors(v);
    for (int v = domain.next(); v >= 0; v = domain.next(v + 1)) {
        if (out.test(v) || blocked.test(v)) continue;
        out.set(v);
        blocked |= g.neighbors(v);
    }
    return out;
}

}  // namespace copsrob
