#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob {

enum class Turn : uint8_t { Cops, Robber };

// One game position: cops as a sorted multiset, robber vertex, side to move.
struct GameState {
    std::vector<int> cops;  // sorted ascending (canonical form)
    int robber = 0;
    Turn turn = Turn::Cops;

    void canonicalize() { std::sort(cops.begin(), cops.end()); }

    bool captured() const {
        return std::find(cops.begin(), cops.end(), robber) != cops.end();
    }
};

struct SolveOptions {
    uint64_t state_budget = 50'000'000;
};

namespace detail {

// Colex ranking of size-k multisets over 0..n-1 via the standard
// strictly-increasing transform m_i -> m_i + i.
class MultisetIndexer {
public:
    MultisetIndexer(int n, int k) : n_(n), k_(k) {
        int top = n + k;  // binomials up to C(n+k-1, k)
        binom_.assign(top + 1, std::vector<uint64_t>(k + 1, 0));
        for (int a = 0; a <= top; ++a) {
            binom_[a][0] = 1;
            for (int b = 1; b <= std::min(a, k); ++b)
                binom_[a][b] = binom_[a - 1][b - 1] + binom_[a - 1][b];
        }
    }

    uint64_t count() const { return binom_[n_ + k_ - 1][k_]; }

    uint64_t rank(const std::vector<int>& multiset) const {
        uint64_t r = 0;
        for (int i = 0; i < k_; ++i) r += binom_[multiset[i] + i][i + 1];
        return r;
    }

    std::vector<int> unrank(uint64_t r) const {
        std::vector<int> out(k_);
        for (int i = k_ - 1; i >= 0; --i) {
            int c = i;  // smallest value with C(c, i+1) defined
            while (c + 1 <= n_ + k_ - 1 && binom_[c + 1][i + 1] <= r) ++c;
            r -= binom_[c][i + 1];
            out[i] = c - i;
        }
        return out;
    }

private:
    int n_, k_;
    std::vector<std::vector<uint64_t>> binom_;
};

}  // namespace detail

// Solved k-cop game: optimal capture time for every canonical position,
// computed by retrograde analysis (level 0 = capture, level t+1 from states
// forced into level <= t).
class SolutionTable {
public:
    static constexpr int32_t kRobberWin = -1;

    SolutionTable(Graph g, int k, const SolveOptions& opt = {})
        : g_(std::move(g)), k_(k), idx_(g_.n(), k) {
        if (k < 1) throw std::invalid_argument("solve_k_cops: k >= 1");
        if (!is_connected(g_)) throw std::invalid_argument("solve_k_cops: graph disconnected");
        uint64_t states = idx_.count() * uint64_t(g_.n()) * 2;
        if (states > opt.state_budget)
            throw std::runtime_error("state budget exceeded: need " + std::to_string(states) +
                                     " states, budget " + std::to_string(opt.state_budget));
        solve();
        pick_placement();
    }

    const Graph& graph() const { return g_; }
    int k() const { return k_; }
    bool cops_win() const { return cops_win_; }

    // Lexicographically least optimal opening multiset (only when cops win).
    const std::vector<int>& optimal_placement() const {
        if (!cops_win_) throw std::logic_error("no placement: robber wins");
        return placement_;
    }
    int placement_value() const { return placement_value_; }

    // Turns to capture under optimal play, or nullopt for robber win.
    std::optional<int> outcome(const GameState& s) const {
        int32_t v = value_[state_index(s)];
        return v == kRobberWin ? std::nullopt : std::optional<int>(int(v));
    }

    // One-step recomputation of a state's value from its successors; used by
    // the self-consistency checks.
    std::optional<int> recompute(const GameState& s) const {
        if (s.captured()) return 0;
        std::optional<int> best;
        if (s.turn == Turn::Cops) {
            for_each_cop_successor(s.cops, [&](const std::vector<int>& cs) {
                GameState t{cs, s.robber, Turn::Robber};
                auto v = outcome(t);
                if (v && (!best || *v < *best)) best = v;
            });
            return best ? std::optional<int>(*best + 1) : std::nullopt;
        }
        Bitset moves = g_.closed_neighbors(s.robber);
        int worst = -1;
        for (int r = moves.next(); r >= 0; r = moves.next(r + 1)) {
            GameState t{s.cops, r, Turn::Cops};
            auto v = outcome(t);
            if (!v) return std::nullopt;  // robber has an escaping reply
            worst = std::max(worst, *v);
        }
        return worst + 1;
    }

    uint64_t state_count() const { return value_.size(); }

    GameState state_at(uint64_t index) const {
        GameState s;
        s.turn = (index & 1) ? Turn::Robber : Turn::Cops;
        uint64_t rest = index >> 1;
        s.robber = int(rest % uint64_t(g_.n()));
        s.cops = idx_.unrank(rest / uint64_t(g_.n()));
        return s;
    }

    // Enumerates canonical cop successors (sorted multisets) of a cop-turn
    // position and invokes fn on each.
    template <typename Fn>
    void for_each_cop_successor(const std::vector<int>& cops, Fn&& fn) const {
        std::vector<int> next(k_);
        enumerate(cops, next, 0, fn);
    }

private:
    uint64_t state_index(const GameState& s) const {
        return ((idx_.rank(s.cops) * uint64_t(g_.n())) + uint64_t(s.robber)) * 2 +
               (s.turn == Turn::Robber ? 1 : 0);
    }

    template <typename Fn>
    void enumerate(const std::vector<int>& cops, std::vector<int>& next, int i, Fn&& fn) const {
        if (i == k_) {
            std::vector<int> sorted = next;
            std::sort(sorted.begin(), sorted.end());
            fn(sorted);
            return;
        }
        Bitset moves = g_.closed_neighbors(cops[i]);
        for (int v = moves.next(); v >= 0; v = moves.next(v + 1)) {
            next[i] = v;
            enumerate(cops, next, i + 1, fn);
        }
    }

    void solve() {
        uint64_t total = idx_.count() * uint64_t(g_.n()) * 2;
        value_.assign(total, kRobberWin);
        // level 0: capture positions, either side to move
        for (uint64_t m = 0; m < idx_.count(); ++m) {
            std::vector<int> cops = idx_.unrank(m);
            for (int c : cops) {
                uint64_t base = (m * uint64_t(g_.n()) + uint64_t(c)) * 2;
                value_[base] = 0;
                value_[base + 1] = 0;
            }
        }
        std::vector<bool> resolved(total, false);
        for (uint64_t i = 0; i < total; ++i)
            if (value_[i] == 0) resolved[i] = true;

        int32_t level = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (uint64_t m = 0; m < idx_.count(); ++m) {
                std::vector<int> cops = idx_.unrank(m);
                for (int r = 0; r < g_.n(); ++r) {
                    uint64_t base = (m * uint64_t(g_.n()) + uint64_t(r)) * 2;
                    // cop to move: resolves as soon as any successor sits at
                    // the current level
                    if (!resolved[base]) {
                        bool hit = false;
                        for_each_cop_successor(cops, [&](const std::vector<int>& cs) {
                            if (hit) return;
                            uint64_t t =
                                (idx_.rank(cs) * uint64_t(g_.n()) + uint64_t(r)) * 2 + 1;
                            if (resolved[t] && value_[t] == level) hit = true;
                        });
                        if (hit) {
                            value_[base] = level + 1;
                            changed = true;
                        }
                    }
                    // robber to move: resolves once every reply is resolved
                    if (!resolved[base + 1]) {
                        Bitset moves = g_.closed_neighbors(r);
                        bool all = true;
                        int32_t worst = -1;
                        for (int r2 = moves.next(); all && r2 >= 0; r2 = moves.next(r2 + 1)) {
                            uint64_t t = (m * uint64_t(g_.n()) + uint64_t(r2)) * 2;
                            if (!resolved[t])
                                all = false;
                            else
                                worst = std::max(worst, value_[t]);
                        }
                        if (all && worst == level) {
                            value_[base + 1] = level + 1;
                            changed = true;
                        }
                    }
                }
            }
            // commit this level before scanning the next
            for (uint64_t i = 0; i < total; ++i)
                if (!resolved[i] && value_[i] == level + 1) resolved[i] = true;
            ++level;
        }
    }

    void pick_placement() {
        cops_win_ = false;
        placement_value_ = 0;
        for (uint64_t m = 0; m < idx_.count(); ++m) {
            std::vector<int> cops = idx_.unrank(m);
            int worst = 0;
            bool win = true;
            for (int r = 0; r < g_.n() && win; ++r) {
                if (std::find(cops.begin(), cops.end(), r) != cops.end()) continue;
                int32_t v = value_[(m * uint64_t(g_.n()) + uint64_t(r)) * 2];
                if (v == kRobberWin)
                    win = false;
                else
                    worst = std::max(worst, int(v));
            }
            if (win && (!cops_win_ || worst < placement_value_ ||
                        (worst == placement_value_ && cops < placement_))) {
                cops_win_ = true;
                placement_value_ = worst;
                placement_ = cops;
            }
        }
    }

    Graph g_;
    int k_;
    detail::MultisetIndexer idx_;
    std::vector<int32_t> value_;
    bool cops_win_ = false;
    std::vector<int> placement_;
    int placement_value_ = 0;
};

inline SolutionTable solve_k_cops(const Graph& g, int k, const SolveOptions& opt = {}) {
    return SolutionTable(g, k, opt);
}

// Least k <= k_max with a cop win. Defaults k_max to the domination number
// at the call site (a dominating set always wins).
inline int cop_number(const Graph& g, int k_max, const SolveOptions& opt = {}) {
    if (k_max < 1) throw std::invalid_argument("cop_number: k_max >= 1");
    for (int k = 1; k <= k_max; ++k)
        if (solve_k_cops(g, k, opt).cops_win()) return k;
    throw std::runtime_error("cop_number: no cop win with k <= " + std::to_string(k_max));
}

// ---------------------------------------------------------------------------
// policies and playback

struct CopPolicy {
    std::vector<int> placement;
    // called with a cop-turn state, returns the new sorted cop multiset
    std::function<std::vector<int>(const GameState&)> move;
};

struct RobberPolicy {
    // placement reply to the cop opening
    std::function<int(const std::vector<int>&)> place;
    // called with a robber-turn state, returns the robber's next vertex
    std::function<int(const GameState&)> move;
};

// Table-optimal cop policy: strictly decreases turns-to-capture, breaking
// ties toward the lexicographically least successor multiset.
inline CopPolicy optimal_cop_policy(const SolutionTable& table) {
    if (!table.cops_win()) throw std::logic_error("optimal_cop_policy: robber wins this table");
    CopPolicy p;
    p.placement = table.optimal_placement();
    p.move = [&table](const GameState& s) {
        if (s.captured()) return s.cops;  // already over
        std::vector<int> best;
        std::optional<int> best_v;
        table.for_each_cop_successor(s.cops, [&](const std::vector<int>& cs) {
            auto v = table.outcome(GameState{cs, s.robber, Turn::Robber});
            if (!v) return;
            if (!best_v || *v < *best_v || (*v == *best_v && cs < best)) {
                best_v = v;
                best = cs;
            }
        });
        if (!best_v) throw std::logic_error("optimal_cop_policy: no winning successor");
        return best;
    };
    return p;
}

// Table-optimal robber: move to a robber-win successor when one exists,
// otherwise maximise turns-to-capture; lowest vertex on ties.
inline RobberPolicy optimal_robber_policy(const SolutionTable& table) {
    RobberPolicy p;
    const Graph& g = table.graph();
    p.place = [&table, &g](const std::vector<int>& cops) {
        int best = -1;
        std::optional<int> best_v;
        bool found_escape = false;
        for (int r = 0; r < g.n(); ++r) {
            if (std::find(cops.begin(), cops.end(), r) != cops.end()) continue;
            auto v = table.outcome(GameState{cops, r, Turn::Cops});
            if (!v) {
                if (!found_escape) {
                    found_escape = true;
                    best = r;
                }
            } else if (!found_escape && (!best_v || *v > *best_v)) {
                best_v = v;
                best = r;
            }
        }
        return best < 0 ? 0 : best;  // all vertices occupied: forced capture
    };
    p.move = [&table, &g](const GameState& s) {
        Bitset moves = g.closed_neighbors(s.robber);
        int best = -1;
        std::optional<int> best_v;
        for (int r = moves.next(); r >= 0; r = moves.next(r + 1)) {
            auto v = table.outcome(GameState{s.cops, r, Turn::Cops});
            if (!v) return r;  // escape forever
            if (!best_v || *v > *best_v) {
                best_v = v;
                best = r;
            }
        }
        return best;
    };
    return p;
}

struct Transcript {
    enum class Result { Captured, Escaped };
    std::vector<GameState> states;
    std::vector<std::string> notes;  // parallel annotations ("phase=...")
    Result result = Result::Escaped;
    int at = 0;  // capture turn or the turn limit

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& s : states) {
            os << (s.turn == Turn::Cops ? "cops" : "robber") << "; cops=";
            for (size_t i = 0; i < s.cops.size(); ++i)
                os << (i ? "," : "") << s.cops[i];
            os << "; robber=" << s.robber;
            size_t idx = &s - states.data();
            if (idx < notes.size() && !notes[idx].empty()) os << "; " << notes[idx];
            os << "\n";
        }
        if (result == Result::Captured)
            os << "CAPTURED " << at << "\n";
        else
            os << "ESCAPED " << at << "\n";
        return os.str();
    }
};

namespace detail {

inline void check_cop_move_legal(const Graph& g, const std::vector<int>& from,
                                 const std::vector<int>& to, const GameState& at) {
    if (from.size() != to.size())
        throw std::runtime_error("illegal cop move: cop count changed");
    // sorted multisets: verify a perfect matching between old and new
    // positions with distance <= 1. Greedy on sorted order is not sound in
    // general, so do a small backtracking match.
    size_t k = from.size();
    std::vector<bool> used(k, false);
    std::function<bool(size_t)> match = [&](size_t i) -> bool {
        if (i == k) return true;
        for (size_t j = 0; j < k; ++j) {
            if (used[j]) continue;
            int a = from[i], b = to[j];
            if (a == b || g.has_edge(a, b)) {
                used[j] = true;
                if (match(i + 1)) return true;
                used[j] = false;
            }
        }
        return false;
    };
    for (int v : to)
        if (v < 0 || v >= g.n()) throw std::runtime_error("illegal cop move: vertex out of range");
    if (!match(0)) {
        std::ostringstream os;
        os << "illegal cop move at state cops=";
        for (size_t i = 0; i < from.size(); ++i) os << (i ? "," : "") << from[i];
        os << " robber=" << at.robber;
        throw std::runtime_error(os.str());
    }
}

}  // namespace detail

// Plays the game out; every emitted move is legality-checked. `turn_limit`
// counts cop turns.
inline Transcript play(const Graph& g, const CopPolicy& cop, const RobberPolicy& robber,
                       int turn_limit) {
    Transcript t;
    GameState s;
    s.cops = cop.placement;
    s.canonicalize();
    for (int v : s.cops)
        if (v < 0 || v >= g.n()) throw std::runtime_error("illegal placement vertex");

    s.robber = robber.place(s.cops);
    if (s.robber < 0 || s.robber >= g.n())
        throw std::runtime_error("illegal robber placement");
    s.turn = Turn::Cops;
    t.states.push_back(s);
    if (s.captured()) {
        t.result = Transcript::Result::Captured;
        t.at = 0;
        return t;
    }
    for (int turn = 1; turn <= turn_limit; ++turn) {
        std::vector<int> next = cop.move(s);
        std::sort(next.begin(), next.end());
        detail::check_cop_move_legal(g, s.cops, next, s);
        s.cops = next;
        s.turn = Turn::Robber;
        t.states.push_back(s);
        if (s.captured()) {
            t.result = Transcript::Result::Captured;
            t.at = turn;
            return t;
        }
        int r = robber.move(s);
        if (r != s.robber && !(r >= 0 && r < g.n() && g.has_edge(s.robber, r)))
            throw std::runtime_error("illegal robber move to " + std::to_string(r));
        s.robber = r;
        s.turn = Turn::Cops;
        t.states.push_back(s);
        if (s.captured()) {  // robber stepped onto a cop
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
