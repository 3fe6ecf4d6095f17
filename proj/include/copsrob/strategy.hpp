#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsrob/game.hpp"
#include "copsrob/graph.hpp"
#include "copsrob/invariants.hpp"

namespace copsrob {

// Raised when a strategy's diameter precondition fails; callers fall back to
// plain dominating-set placement.
class NotApplicableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by the validator when a strategy emits a move of distance > 1
// (a bug in the strategy, not a robber escape).
class IllegalStrategyMove : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One scripted single step: cop slot `slot` walks to vertex `to`.
struct ScriptMove {
    int slot;
    int to;
    std::string phase;
};

// Deterministic cop strategy: fixed placement plus a precomputed move script
// selected by the robber's placement vertex. The implicit rule on every cop
// turn is capture-first: if any cop sits in the robber's closed
// neighbourhood it steps onto the robber; otherwise the next scripted move
// fires; after the script all cops hold position.
struct CopStrategy {
    std::string name;
    int theorem = 0;
    int cop_count = 0;
    std::vector<int> initial_placement;           // per slot
    std::vector<std::vector<ScriptMove>> scripts;
    std::vector<int> script_of_start;             // robber start vertex -> script id

    const std::vector<ScriptMove>& script_for(int robber_start) const {
        return scripts[script_of_start[robber_start]];
    }
};

namespace detail {

// Lowest-index-tie-break shortest path from `from` to `to`, as the list of
// vertices after `from`.
inline std::vector<int> shortest_route(const Graph& g, int from, int to) {
    auto dist = bfs_distances(g, to);
    if (dist[from] < 0) throw std::logic_error("shortest_route: unreachable target");
    std::vector<int> route;
    int cur = from;
    while (cur != to) {
        const Bitset& nb = g.neighbors(cur);
        int next = -1;
        for (int v = nb.next(); v >= 0; v = nb.next(v + 1))
            if (dist[v] == dist[cur] - 1) {
                next = v;
                break;
            }
        route.push_back(next);
        cur = next;
    }
    return route;
}

inline void append_route(const Graph& g, std::vector<ScriptMove>& script, int slot, int from,
                         int to, const std::string& phase) {
    for (int v : shortest_route(g, from, to)) script.push_back({slot, v, phase});
}

inline Bitset dominated_region(const Graph& g, const std::vector<int>& cop_positions) {
    Bitset d(g.n());
    for (int c : cop_positions) d |= g.closed_neighbors(c);
    return d;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Strategy 1: independent-set placement with one relocating cop.
// Cops stand on a maximum independent set I of G[N_{>=2}] chosen with
// minimal overlap with N_3; one cop walks home to the base vertex.
inline CopStrategy synth_alpha_minus_one(const Graph& g, const SolverLimits& lim = {}) {
    LayerDecomposition ld = diameter_layers(g);
    int d = ld.eccentricity();
    if (d < 4) throw NotApplicableError("alpha-minus-one needs diameter >= 4");

    Bitset domain = ld.suffix_union(2);
    Bitset penalty = ld.layers[3];
    ConstrainedMisResult mis = constrained_max_independent_set(g, domain, penalty, lim);
    const std::vector<int>& I = mis.witness.vertices;

    Bitset iset(g.n());
    for (int v : I) iset.set(v);

    // relocating cop: any cop in N_{>=4}; in the d=4, I cap N_4 empty case
    // the chosen cop is the lowest one in I cap N_3, whose N_2 neighbours
    // are all covered by the rest of I (this is what minimal |I cap N_3|
    // buys us -- checked structurally below).
    int mover = -1;
    Bitset far = iset & ld.suffix_union(4);
    if (far.any()) {
        mover = far.next();
    } else {
        Bitset in3 = iset & ld.layers[3];
        if (in3.none()) throw std::logic_error("alpha-minus-one: I misses N_3 and N_{>=4}");
        mover = in3.next();
        Bitset rest = iset;
        rest.reset(mover);
        Bitset n2_neighbours = g.neighbors(mover) & ld.layers[2];
        for (int w = n2_neighbours.next(); w >= 0; w = n2_neighbours.next(w + 1))
            if (!g.neighbors(w).intersects(rest))
                throw std::logic_error("alpha-minus-one: exchange property violated");
    }

    CopStrategy s;
    s.name = "alpha-minus-one";
    s.theorem = 1;
    s.initial_placement = I;
    s.cop_count = int(I.size());
    std::vector<ScriptMove> script;
    int slot = int(std::find(I.begin(), I.end(), mover) - I.begin());
    detail::append_route(g, script, slot, mover, ld.base, "relocate-to-base");
    s.scripts.push_back(std::move(script));
    s.script_of_start.assign(g.n(), 0);
    return s;
}

// ---------------------------------------------------------------------------
// Strategy 2: sliding three-layer blocks. Cops hold a maximal independent
// set of the window N_i..N_{i+2} and advance it window by window, keeping
// N_{i+2} dominated throughout.
inline CopStrategy synth_sliding_blocks(const Graph& g, const SolverLimits& lim = {}) {
    LayerDecomposition ld = diameter_layers(g);
    int d = ld.eccentricity();
    if (d < 5) throw NotApplicableError("sliding-blocks needs diameter >= 5");

    BlockScan scan = block_scan(g, ld, lim);
    int cop_count = scan.max_alpha();

    Bitset target = maximal_independent_extension(g, ld.layer_range(0, 2), Bitset(g.n()));
    std::vector<int> occupied = target.to_vector();
    if (int(occupied.size()) > cop_count)
        throw std::logic_error("sliding-blocks: initial set exceeds cop budget");

    CopStrategy s;
    s.name = "sliding-blocks";
    s.theorem = 2;
    s.cop_count = cop_count;
    s.initial_placement = occupied;
    // spare cops stack on the lowest occupied vertex
    while (int(s.initial_placement.size()) < cop_count)
        s.initial_placement.push_back(occupied.front());

    std::vector<int> pos = s.initial_placement;  // per-slot simulation
    std::vector<ScriptMove> script;
    for (int i = 0; i + 3 <= d; ++i) {
        std::string phase = "advance-to-block-" + std::to_string(i + 1);
        Bitset window = ld.layer_range(i + 1, i + 3);
        Bitset seed = target & ld.layer_range(i + 1, i + 2);
        target = maximal_independent_extension(g, window, seed);

        // one keeper per seed vertex stays put; everyone else may move
        std::vector<bool> keeper(pos.size(), false);
        for (int v = seed.next(); v >= 0; v = seed.next(v + 1))
            for (size_t j = 0; j < pos.size(); ++j)
                if (pos[j] == v) {
                    keeper[j] = true;
                    break;
                }
        Bitset unfilled = target - seed;
        for (int t = unfilled.next(); t >= 0; t = unfilled.next(t + 1)) {
            int slot = -1;
            for (size_t j = 0; j < pos.size(); ++j)
                if (!keeper[j]) {
                    slot = int(j);
                    break;
                }
            if (slot < 0) throw std::logic_error("sliding-blocks: out of movable cops");
            keeper[slot] = true;  // committed to this target
            detail::append_route(g, script, slot, pos[slot], t, phase);
            pos[slot] = t;
        }
    }
    s.scripts.push_back(std::move(script));
    s.script_of_start.assign(g.n(), 0);
    return s;
}

// ---------------------------------------------------------------------------
// Strategy 3: dominating set minus one. Cops stand on Gamma \ {w} for a
// vertex w dominating the base; a far cop walks to w, completing Gamma.
inline CopStrategy synth_gamma_minus_one(const Graph& g, const SolverLimits& lim = {}) {
    LayerDecomposition ld = diameter_layers(g);
    int d = ld.eccentricity();
    if (d < 6) throw NotApplicableError("gamma-minus-one needs diameter >= 6");

    auto [gamma, dom] = domination_number(g, lim);
    (void)gamma;
    Bitset gset(g.n());
    for (int v : dom.vertices) gset.set(v);

    Bitset near = gset & ld.layer_range(0, 1);
    if (near.none()) throw std::logic_error("gamma-minus-one: base not dominated");
    int w = near.next();

    std::vector<int> placement;
    for (int v : dom.vertices)
        if (v != w) placement.push_back(v);

    int mover_slot = -1;
    for (size_t j = 0; j < placement.size(); ++j)
        if (ld.layer_of[placement[j]] >= 5) {
            mover_slot = int(j);
            break;
        }
    if (mover_slot < 0) throw std::logic_error("gamma-minus-one: no cop in N_{>=5}");

    CopStrategy s;
    s.name = "gamma-minus-one";
    s.theorem = 3;
    s.cop_count = int(placement.size());
    s.initial_placement = placement;
    std::vector<ScriptMove> script;
    detail::append_route(g, script, mover_slot, placement[mover_slot], w, "complete-gamma");
    s.scripts.push_back(std::move(script));
    s.script_of_start.assign(g.n(), 0);
    return s;
}

// ---------------------------------------------------------------------------
// Strategy 4: barrier blocks. The layer range is split into blocks of 3k+3
// layers separated by barrier triples; k dominating-set vertices per block
// interior are left vacant at placement and refilled by far-away barrier
// cops once the robber commits to a block.

struct BarrierPlan {
    int k = 0;
    int m = 0;
    // block i (1-based) spans layers lo(i)..lo(i)+3k+2
    int block_lo(int i) const { return (i - 1) * (3 * k + 3); }
    std::vector<std::vector<int>> reserved;  // S_i per block, |S_i| = k
};

inline std::optional<std::pair<int, int>> barrier_parameters(int diameter) {
    std::optional<std::pair<int, int>> best;
    for (int k = 1;; ++k) {
        int m = diameter / (3 * k + 3);
        if (m - 2 < k) break;
        best = {k, m};
    }
    return best;
}

inline CopStrategy synth_barrier_blocks(const Graph& g, const SolverLimits& lim = {}) {
    LayerDecomposition ld = diameter_layers(g);
    int d = ld.eccentricity();
    auto params = barrier_parameters(d);
    if (!params) throw NotApplicableError("barrier-blocks needs diameter >= 18");
    auto [k, m] = *params;
    int width = 3 * k + 3;

    auto [gamma, dom] = domination_number(g, lim);
    (void)gamma;
    Bitset gset(g.n());
    for (int v : dom.vertices) gset.set(v);

    BarrierPlan plan;
    plan.k = k;
    plan.m = m;
    Bitset vacated(g.n());
    for (int i = 1; i <= m; ++i) {
        int lo = plan.block_lo(i);
        Bitset interior = ld.layer_range(lo + 2, lo + 3 * k + 1) & gset;
        std::vector<int> si;
        for (int v = interior.next(); v >= 0 && int(si.size()) < k; v = interior.next(v + 1))
            si.push_back(v);
        if (int(si.size()) < k)
            throw std::logic_error("barrier-blocks: block interior has fewer than k dominators");
        for (int v : si) vacated.set(v);
        plan.reserved.push_back(std::move(si));
    }

    std::vector<int> placement;
    for (int v : dom.vertices)
        if (!vacated.test(v)) placement.push_back(v);

    CopStrategy s;
    s.name = "barrier-blocks";
    s.theorem = 4;
    s.cop_count = int(placement.size());
    s.initial_placement = placement;
    s.script_of_start.assign(g.n(), 0);
    s.scripts.emplace_back();  // script 0: robber placed dominated, no moves

    Bitset placed_dom = detail::dominated_region(g, placement);

    // barrier triple membership per slot, by layer
    auto barrier_of = [&](int layer) {
        for (int b = 1; b < m; ++b)
            if (layer >= b * width - 1 && layer <= b * width + 1) return b;
        return 0;  // not on a barrier triple
    };

    std::vector<int> block_script(m + 1, -1);
    for (int r = 0; r < g.n(); ++r) {
        if (placed_dom.test(r)) continue;  // capture rule handles these starts
        int layer = ld.layer_of[r];
        int i = layer / width + 1;
        if (i > m) i = m;
        if (block_script[i] < 0) {
            std::string phase = "reinforce-block-" + std::to_string(i);
            int lo = plan.block_lo(i);
            auto in_block = [&](int l) { return l >= lo && l <= lo + 3 * k + 2; };
            auto in_bounding_barrier = [&](int l) {
                int b = barrier_of(l);
                return b == i - 1 || b == i;
            };
            // donors: cops on barrier triples away from block i, then any
            // cop clear of the block and its bounding barriers
            std::vector<int> donors;
            for (size_t j = 0; j < placement.size(); ++j) {
                int b = barrier_of(ld.layer_of[placement[j]]);
                if (b != 0 && b != i - 1 && b != i) donors.push_back(int(j));
            }
            for (size_t j = 0; j < placement.size(); ++j) {
                int l = ld.layer_of[placement[j]];
                int b = barrier_of(l);
                if (b == 0 && !in_block(l) && !in_bounding_barrier(l))
                    donors.push_back(int(j));
            }
            if (int(donors.size()) < k)
                throw std::logic_error("barrier-blocks: not enough donor cops");
            std::vector<ScriptMove> script;
            for (int t = 0; t < k; ++t)
                detail::append_route(g, script, donors[t], placement[donors[t]],
                                     plan.reserved[i - 1][t], phase);
            block_script[i] = int(s.scripts.size());
            s.scripts.push_back(std::move(script));
        }
        s.script_of_start[r] = block_script[i];
    }
    return s;
}

// Fallback used when the theorem preconditions fail: gamma cops on a
// minimum dominating set capture on the first move.
inline CopStrategy dominating_set_strategy(const Graph& g, const SolverLimits& lim = {}) {
    auto [gamma, dom] = domination_number(g, lim);
    (void)gamma;
    CopStrategy s;
    s.name = "dominating-set";
    s.theorem = 0;
    s.cop_count = int(dom.vertices.size());
    s.initial_placement = dom.vertices;
    s.scripts.emplace_back();
    s.script_of_start.assign(g.n(), 0);
    return s;
}

// ---------------------------------------------------------------------------
// strategy execution

namespace detail {

// Per-slot cop positions after each script prefix; validates move legality.
inline std::vector<std::vector<int>> script_timeline(const Graph& g, const CopStrategy& s,
                                                     const std::vector<ScriptMove>& script) {
    std::vector<std::vector<int>> timeline;
    timeline.reserve(script.size() + 1);
    timeline.push_back(s.initial_placement);
    std::vector<int> pos = s.initial_placement;
    for (const ScriptMove& mv : script) {
        if (mv.slot < 0 || mv.slot >= int(pos.size()))
            throw IllegalStrategyMove("script references unknown cop slot");
        int from = pos[mv.slot];
        if (mv.to != from && !g.has_edge(from, mv.to))
            throw IllegalStrategyMove("script move of distance > 1: " + std::to_string(from) +
                                      " -> " + std::to_string(mv.to));
        pos[mv.slot] = mv.to;
        timeline.push_back(pos);
    }
    return timeline;
}

}  // namespace detail

struct Verdict {
    enum class Kind { Sound, Unsound, Inconclusive };
    Kind kind = Kind::Inconclusive;
    int max_capture_turns = 0;     // Sound
    std::vector<int> escape_path;  // Unsound: robber placement then moves
    uint64_t states_explored = 0;
};

namespace detail {

class StrategyValidator {
public:
    StrategyValidator(const Graph& g, const CopStrategy& s, int turn_limit, uint64_t budget)
        : g_(g), s_(s), turn_limit_(turn_limit), budget_(budget) {}

    Verdict run() {
        Verdict out;
        int worst = 0;
        for (size_t sc = 0; sc < s_.scripts.size(); ++sc)
            timelines_.push_back(script_timeline(g_, s_, s_.scripts[sc]));
        try {
            for (size_t sc = 0; sc < s_.scripts.size(); ++sc) {
                script_ = int(sc);
                memo_.assign((s_.scripts[sc].size() + 1) * size_t(g_.n()), kUnknown);
                for (int r = 0; r < g_.n(); ++r) {
                    if (s_.script_of_start[r] != int(sc)) continue;
                    if (std::find(s_.initial_placement.begin(), s_.initial_placement.end(), r) !=
                        s_.initial_placement.end())
                        continue;  // captured at placement
                    int v = rec(0, r);
                    if (v == kEscape || v > turn_limit_) {
                        out.kind = Verdict::Kind::Unsound;
                        out.escape_path = reconstruct_path(r);
                        out.states_explored = explored_;
                        return out;
                    }
                    worst = std::max(worst, v);
                }
            }
        } catch (const BudgetHit&) {
            out.kind = Verdict::Kind::Inconclusive;
            out.states_explored = explored_;
            return out;
        }
        out.kind = Verdict::Kind::Sound;
        out.max_capture_turns = worst;
        out.states_explored = explored_;
        return out;
    }

private:
    struct BudgetHit {};
    static constexpr int kUnknown = -2;
    static constexpr int kEscape = -1;

    const std::vector<int>& pos_at(int cursor) const { return timelines_[script_][cursor]; }

    bool cop_adjacent(const std::vector<int>& pos, int robber) const {
        Bitset cn = g_.closed_neighbors(robber);
        for (int c : pos)
            if (cn.test(c)) return true;
        return false;
    }

    // turns to capture starting from a cop turn with the script at `cursor`
    // and the robber on `robber`; kEscape if the robber has an evasion.
    int rec(int cursor, int robber) {
        int& slot = memo_[size_t(cursor) * size_t(g_.n()) + size_t(robber)];
        if (slot != kUnknown) return slot;
        if (++explored_ > budget_) throw BudgetHit{};

        const auto& script = s_.scripts[script_];
        const std::vector<int>& pos = pos_at(cursor);
        if (cop_adjacent(pos, robber)) return slot = 1;
        if (cursor == int(script.size())) return slot = kEscape;  // cops are static now

        const std::vector<int>& next_pos = pos_at(cursor + 1);
        if (script[cursor].to == robber) return slot = 1;  // scripted step captures

        int best = 0;
        Bitset moves = g_.closed_neighbors(robber);
        for (int r2 = moves.next(); r2 >= 0; r2 = moves.next(r2 + 1)) {
            int v;
            if (std::find(next_pos.begin(), next_pos.end(), r2) != next_pos.end())
                v = 0;  // robber walks into a cop
            else
                v = rec(cursor + 1, r2);
            if (v == kEscape) return slot = kEscape;
            best = std::max(best, v);
        }
        return slot = 1 + best;
    }

    std::vector<int> reconstruct_path(int start) {
        std::vector<int> path{start};
        int cursor = 0, robber = start;
        const auto& script = s_.scripts[script_];
        while (true) {
            const std::vector<int>& pos = pos_at(cursor);
            if (cop_adjacent(pos, robber)) break;                  // shouldn't happen
            if (cursor == int(script.size())) break;               // static evasion
            if (script[cursor].to == robber) break;
            const std::vector<int>& next_pos = pos_at(cursor + 1);
            Bitset moves = g_.closed_neighbors(robber);
            int pick = -1;
            for (int r2 = moves.next(); r2 >= 0; r2 = moves.next(r2 + 1)) {
                if (std::find(next_pos.begin(), next_pos.end(), r2) != next_pos.end()) continue;
                int v = memo_[size_t(cursor + 1) * size_t(g_.n()) + size_t(r2)];
                if (v == kEscape) {
                    pick = r2;
                    break;
                }
            }
            if (pick < 0) break;
            robber = pick;
            ++cursor;
            path.push_back(robber);
            if (path.size() > 4 * s_.scripts[script_].size() + 8) break;  // safety stop
        }
        return path;
    }

    const Graph& g_;
    const CopStrategy& s_;
    int turn_limit_;
    uint64_t budget_;
    uint64_t explored_ = 0;
    int script_ = 0;
    std::vector<int> memo_;
    std::vector<std::vector<std::vector<int>>> timelines_;
};

}  // namespace detail

// Exhaustive robber best-response check of a deterministic strategy.
inline Verdict validate_strategy(const Graph& g, const CopStrategy& s, int turn_limit = 1 << 20,
                                 uint64_t state_budget = 10'000'000) {
    return detail::StrategyValidator(g, s, turn_limit, state_budget).run();
}

// Plays the strategy against a robber policy, annotating the transcript with
// the active script phase.
inline Transcript play_strategy(const Graph& g, const CopStrategy& s, const RobberPolicy& robber,
                                int turn_limit) {
    Transcript t;
    std::vector<int> pos = s.initial_placement;
    GameState state;
    state.cops = pos;
    state.canonicalize();
    state.turn = Turn::Cops;
    state.robber = robber.place(state.cops);
    t.states.push_back(state);
    t.notes.push_back("phase=placement");
    if (state.captured()) {
        t.result = Transcript::Result::Captured;
        t.at = 0;
        return t;
    }
    const auto& script = s.script_for(state.robber);
    size_t cursor = 0;
    for (int turn = 1; turn <= turn_limit; ++turn) {
        // capture-first rule
        Bitset cn = g.closed_neighbors(state.robber);
        int catcher = -1;
        for (size_t j = 0; j < pos.size(); ++j)
            if (cn.test(pos[j])) {
                catcher = int(j);
                break;
            }
        std::string phase = "phase=hold";
        if (catcher >= 0) {
            pos[catcher] = state.robber;
            phase = "phase=capture";
        } else if (cursor < script.size()) {
            const ScriptMove& mv = script[cursor++];
            int from = pos[mv.slot];
            if (mv.to != from && !g.has_edge(from, mv.to))
                throw IllegalStrategyMove("scripted move of distance > 1");
            pos[mv.slot] = mv.to;
            phase = "phase=" + mv.phase;
        }
        state.cops = pos;
        state.canonicalize();
        state.turn = Turn::Robber;
        t.states.push_back(state);
        t.notes.push_back(phase);
        if (state.captured()) {
            t.result = Transcript::Result::Captured;
            t.at = turn;
            return t;
        }
        int r = robber.move(state);
        if (r != state.robber && !g.has_edge(state.robber, r))
            throw std::runtime_error("illegal robber move");
        state.robber = r;
        state.turn = Turn::Cops;
        t.states.push_back(state);
        t.notes.push_back("");
        if (state.captured()) {
            t.result = Transcript::Result::Captured;
            t.at = turn;
            return t;
        }
    }
    t.result = Transcript::Result::Escaped;
    t.at = turn_limit;
    return t;
}

}  // namespace copsrob
