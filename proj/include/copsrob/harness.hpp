#pragma once

#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "copsrob/game.hpp"
#include "copsrob/graph.hpp"
#include "copsrob/invariants.hpp"
#include "copsrob/strategy.hpp"

namespace copsrob {

using nlohmann::json;

// Girth >= 5 lower bound: the cop number is at least the minimum degree.
inline std::optional<int> aigner_fromme_lower_bound(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("aigner_fromme: graph disconnected");
    if (girth(g) >= 5) return min_degree(g);  // forests count as infinite girth
    return std::nullopt;
}

struct Certificate {
    enum class Kind { GirthDegreeSandwich, ExactSolve, Interval };
    Kind kind = Kind::Interval;
    int lower = 1;
    int upper = 0;
    std::optional<int> exact;
    DominatingSetWitness gamma_witness;

    json to_json() const {
        json j;
        switch (kind) {
            case Kind::GirthDegreeSandwich: j["kind"] = "girth-degree-sandwich"; break;
            case Kind::ExactSolve: j["kind"] = "exact-solve"; break;
            case Kind::Interval: j["kind"] = "interval"; break;
        }
        j["lower"] = lower;
        j["upper"] = upper;
        if (exact)
            j["copNumber"] = *exact;
        else
            j["copNumber"] = nullptr;
        return j;
    }
};

// Sandwich first: when the Aigner-Fromme lower bound meets the domination
// upper bound, the cop number is certified without any game solving.
inline Certificate certify_equality(const Graph& g, const SolveOptions& opt = {},
                                    const SolverLimits& lim = {}) {
    Certificate cert;
    auto [gamma, dom] = domination_number(g, lim);
    cert.gamma_witness = dom;
    cert.upper = gamma;
    auto af = aigner_fromme_lower_bound(g);
    cert.lower = af.value_or(1);
    if (af && *af == gamma) {
        cert.kind = Certificate::Kind::GirthDegreeSandwich;
        cert.exact = gamma;
        return cert;
    }
    try {
        for (int k = std::max(1, cert.lower); k <= gamma; ++k)
            if (solve_k_cops(g, k, opt).cops_win()) {
                cert.kind = Certificate::Kind::ExactSolve;
                cert.exact = k;
                return cert;
            }
        throw std::logic_error("certify_equality: dominating set did not win");
    } catch (const std::runtime_error&) {
        cert.kind = Certificate::Kind::Interval;  // budget-bound: interval only
        return cert;
    }
}

struct TheoremCheck {
    int id = 0;
    bool applicable = false;
    int bound = 0;
    bool satisfied = true;
};

struct StrategyVerdict {
    int theorem = 0;
    bool applicable = false;
    int cop_count = 0;
    std::string verdict;  // sound | unsound | inconclusive | not-applicable | error
    int max_capture_turns = 0;
};

struct BoundReport {
    std::string graph6;
    int n = 0, diameter = 0, alpha = 0, gamma = 0;
    std::optional<int> cop_number;  // absent when the budget stops the solve
    int d1 = 0, d2 = 0;             // layer split around the best block
    std::vector<TheoremCheck> theorems;
    std::vector<StrategyVerdict> strategy_verdicts;

    bool all_satisfied() const {
        for (const auto& t : theorems)
            if (!t.satisfied) return false;
        for (const auto& s : strategy_verdicts)
            if (s.verdict == "unsound" || s.verdict == "error") return false;
        return true;
    }

    json to_json() const {
        json j;
        j["graph6"] = graph6;
        j["n"] = n;
        j["diameter"] = diameter;
        j["alpha"] = alpha;
        j["gamma"] = gamma;
        if (cop_number)
            j["copNumber"] = *cop_number;
        else
            j["copNumber"] = nullptr;
        j["d1"] = d1;
        j["d2"] = d2;
        j["theorems"] = json::array();
        for (const auto& t : theorems)
            j["theorems"].push_back({{"id", t.id},
                                     {"applicable", t.applicable},
                                     {"bound", t.bound},
                                     {"satisfied", t.satisfied}});
        j["strategyVerdicts"] = json::array();
        for (const auto& s : strategy_verdicts)
            j["strategyVerdicts"].push_back({{"theorem", s.theorem},
                                             {"applicable", s.applicable},
                                             {"copCount", s.cop_count},
                                             {"verdict", s.verdict},
                                             {"maxCaptureTurns", s.max_capture_turns}});
        return j;
    }
};

inline int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

struct CheckOptions {
    SolveOptions solve;
    SolverLimits limits;
    bool run_strategies = false;
    int validate_turn_limit = 1 << 20;
    uint64_t validate_budget = 10'000'000;
};

inline BoundReport check_bounds(const Graph& g, const CheckOptions& opt = {}) {
    if (!is_connected(g)) throw std::invalid_argument("check_bounds: graph disconnected");
    BoundReport r;
    r.graph6 = encode_graph6(g);
    r.n = g.n();
    r.diameter = diameter(g);
    r.alpha = independence_number(g, opt.limits).first;
    r.gamma = domination_number(g, opt.limits).first;
    try {
        r.cop_number = cop_number(g, r.gamma, opt.solve);
    } catch (const std::runtime_error&) {
        r.cop_number = std::nullopt;  // state budget exceeded
    }
    if (r.diameter >= 2) {
        BlockScan scan = block_scan(g, diameter_layers(g), opt.limits);
        r.d1 = scan.argmax;
        r.d2 = r.diameter - 2 - scan.argmax;
    }

    auto add = [&](int id, bool applicable, int bound) {
        TheoremCheck t;
        t.id = id;
        t.applicable = applicable;
        t.bound = bound;
        t.satisfied = !applicable || !r.cop_number || *r.cop_number <= bound;
        r.theorems.push_back(t);
    };
    add(1, r.diameter >= 4, r.alpha - 1);
    add(2, true, r.alpha - floor_div(r.diameter - 3, 2));
    add(3, r.diameter >= 6, r.gamma - 1);
    auto params = barrier_parameters(r.diameter);
    add(4, params.has_value(), params ? r.gamma - params->first * params->second : 0);

    if (opt.run_strategies) {
        auto run = [&](int id, CopStrategy (*synth)(const Graph&, const SolverLimits&)) {
            StrategyVerdict sv;
            sv.theorem = id;
            try {
                CopStrategy s = synth(g, opt.limits);
                sv.applicable = true;
                sv.cop_count = s.cop_count;
                Verdict v = validate_strategy(g, s, opt.validate_turn_limit, opt.validate_budget);
                switch (v.kind) {
                    case Verdict::Kind::Sound:
                        sv.verdict = "sound";
                        sv.max_capture_turns = v.max_capture_turns;
                        break;
                    case Verdict::Kind::Unsound: sv.verdict = "unsound"; break;
                    case Verdict::Kind::Inconclusive: sv.verdict = "inconclusive"; break;
                }
            } catch (const NotApplicableError&) {
                sv.verdict = "not-applicable";
            } catch (const std::exception&) {
                sv.verdict = "error";
            }
            r.strategy_verdicts.push_back(sv);
        };
        run(1, synth_alpha_minus_one);
        run(2, synth_sliding_blocks);
        run(3, synth_gamma_minus_one);
        run(4, synth_barrier_blocks);
    }
    return r;
}

// ---------------------------------------------------------------------------
// corpus verification

struct CorpusOptions {
    CheckOptions check;
    int jobs = int(std::thread::hardware_concurrency());
};

struct CorpusReport {
    std::vector<BoundReport> reports;             // input order preserved
    std::vector<std::pair<int, std::string>> parse_errors;  // 1-based line, message
    int violations = 0;

    void write_jsonl(std::ostream& os) const {
        for (const auto& r : reports) os << r.to_json().dump() << "\n";
    }
};

inline std::vector<std::string> read_graph6_lines(std::istream& is) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line == ">>graph6<<") continue;
        lines.push_back(line);
    }
    return lines;
}

inline CorpusReport verify_corpus(const std::vector<std::string>& lines,
                                  const CorpusOptions& opt = {}) {
    CorpusReport out;
    int jobs = std::max(1, opt.jobs);
    std::vector<std::optional<BoundReport>> results(lines.size());
    std::vector<std::optional<std::string>> errors(lines.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= lines.size()) return;
            try {
                Graph g = parse_graph6(lines[i]);
                results[i] = check_bounds(g, opt.check);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    for (size_t i = 0; i < lines.size(); ++i) {
        if (errors[i]) {
            out.parse_errors.emplace_back(int(i) + 1, *errors[i]);
        } else if (results[i]) {
            if (!results[i]->all_satisfied()) ++out.violations;
            out.reports.push_back(std::move(*results[i]));
        }
    }
    return out;
}

inline CorpusReport verify_corpus_file(const std::string& path, const CorpusOptions& opt = {}) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    auto lines = read_graph6_lines(in);
    return verify_corpus(lines, opt);
}

// ---------------------------------------------------------------------------
// extremal search

struct SearchPredicate {
    enum class Equality { CopAlpha, CopGamma };
    Equality equality = Equality::CopAlpha;
    int min_value = 1;
    int min_diameter = 0;
};

struct SearchWitness {
    std::string graph6;
    int n = 0, diameter = 0, value = 0, cop_number = 0;
};

struct SearchResult {
    std::vector<SearchWitness> witnesses;
    size_t processed = 0;  // progress watermark when the budget stops the run
    bool budget_exhausted = false;
};

// Scans a corpus for graphs with c = alpha (or c = gamma); cheap invariants
// filter before any game solving.
inline SearchResult search_extremal(const std::vector<std::string>& lines,
                                    const SearchPredicate& pred, const SolveOptions& opt = {},
                                    const SolverLimits& lim = {}) {
    SearchResult out;
    for (const auto& line : lines) {
        Graph g = parse_graph6(line);
        if (!is_connected(g)) {
            ++out.processed;
            continue;
        }
        int d = diameter(g);
        if (d < pred.min_diameter) {
            ++out.processed;
            continue;
        }
        int value = pred.equality == SearchPredicate::Equality::CopAlpha
                        ? independence_number(g, lim).first
                        : domination_number(g, lim).first;
        if (value < pred.min_value) {
            ++out.processed;
            continue;
        }
        try {
            // c = value iff no smaller k wins and k = value does (gamma
            // always suffices, and value <= gamma fails only for alpha runs
            // where c < alpha anyway)
            bool smaller_wins = false;
            for (int k = 1; k < value && !smaller_wins; ++k)
                smaller_wins = solve_k_cops(g, k, opt).cops_win();
            if (!smaller_wins && solve_k_cops(g, value, opt).cops_win()) {
                SearchWitness w;
                w.graph6 = line;
                w.n = g.n();
                w.diameter = d;
                w.value = value;
                w.cop_number = value;
                out.witnesses.push_back(w);
            }
        } catch (const std::runtime_error&) {
            out.budget_exhausted = true;
            return out;
        }
        ++out.processed;
    }
    return out;
}

}  // namespace copsrob
