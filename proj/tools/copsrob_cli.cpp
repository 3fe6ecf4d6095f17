// Command-line front end: exact invariants, cop numbers, theorem bounds,
// constructive strategies, corpus verification and extremal search.
//
// Exit codes: 0 success, 1 bound violation or unsound strategy, 2
// operational error (bad input, budget exceeded).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "copsrob/harness.hpp"

using namespace copsrob;
using nlohmann::json;

namespace {

struct GraphInput {
    std::string g6;
    std::string file;
    std::string generator;

    void add_flags(CLI::App* cmd) {
        auto* a = cmd->add_option("--g6", g6, "graph6 string");
        auto* b = cmd->add_option("--file", file, "file with one graph6 line");
        auto* c = cmd->add_option("--gen", generator,
                                  "generator: path:n, cycle:n, complete:n, petersen, "
                                  "paley:q, hoffman-singleton");
        a->excludes(b)->excludes(c);
        b->excludes(c);
    }

    Graph load() const {
        if (!g6.empty()) return parse_graph6(g6);
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw std::runtime_error("cannot open " + file);
            auto lines = read_graph6_lines(in);
            if (lines.empty()) throw std::runtime_error("no graph in " + file);
            return parse_graph6(lines.front());
        }
        if (!generator.empty()) {
            std::string name = generator;
            int param = -1;
            if (auto pos = name.find(':'); pos != std::string::npos) {
                param = std::stoi(name.substr(pos + 1));
                name = name.substr(0, pos);
            }
            if (name == "path") return gen::path(param);
            if (name == "cycle") return gen::cycle(param);
            if (name == "complete") return gen::complete(param);
            if (name == "petersen") return gen::petersen();
            if (name == "paley") return gen::paley(param);
            if (name == "hoffman-singleton") return gen::hoffman_singleton();
            throw std::runtime_error("unknown generator: " + name);
        }
        throw std::runtime_error("no graph given: use --g6, --file or --gen");
    }
};

SolveOptions solve_options_from_env(uint64_t budget_flag) {
    SolveOptions opt;
    if (budget_flag > 0) {
        opt.state_budget = budget_flag;
    } else if (const char* env = std::getenv("COPSROB_STATE_BUDGET")) {
        opt.state_budget = std::strtoull(env, nullptr, 10);
    }
    return opt;
}

const char* verdict_name(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::Sound: return "sound";
        case Verdict::Kind::Unsound: return "unsound";
        default: return "inconclusive";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"copsrob: exact cops-and-robbers workbench"};
    app.require_subcommand(1);
    bool as_json = false;
    uint64_t budget_flag = 0;
    app.add_flag("--json", as_json, "machine-readable JSON output");
    app.add_option("--budget", budget_flag,
                   "state budget for game solving (env COPSROB_STATE_BUDGET)");

    GraphInput gin;

    auto* inv = app.add_subcommand("invariants", "n, diameter, alpha, gamma, girth, min degree");
    gin.add_flags(inv);

    auto* cop = app.add_subcommand("copnumber", "exact cop number");
    gin.add_flags(cop);
    int kmax = 0;
    cop->add_option("--kmax", kmax, "largest k to try (default: gamma)");

    auto* bounds = app.add_subcommand("bounds", "theorem bound report");
    gin.add_flags(bounds);

    auto* strat = app.add_subcommand("strategy", "synthesize a constructive strategy");
    gin.add_flags(strat);
    int theorem = 0;
    bool do_validate = false;
    strat->add_option("--theorem", theorem, "1..4")->required()->check(CLI::Range(1, 4));
    strat->add_flag("--validate", do_validate, "exhaustive robber best-response check");

    auto* verify = app.add_subcommand("verify", "verify theorem bounds over a graph6 corpus");
    std::string corpus_path, out_path;
    bool with_strategies = false;
    int jobs = 0;
    verify->add_option("corpus", corpus_path, "graph6 file")->required();
    verify->add_option("--out", out_path, "write JSON-lines report here");
    verify->add_flag("--strategies", with_strategies, "also synthesize and validate strategies");
    verify->add_option("--jobs", jobs, "worker threads (default: cores)");

    auto* certify = app.add_subcommand("certify", "cop-number certificate");
    gin.add_flags(certify);

    auto* search = app.add_subcommand("search", "search a corpus for c=alpha / c=gamma graphs");
    std::string search_path, equality = "alpha";
    int min_diameter = 0, min_value = 1;
    search->add_option("corpus", search_path, "graph6 file")->required();
    search->add_option("--equality", equality, "alpha or gamma")
        ->check(CLI::IsMember({"alpha", "gamma"}));
    search->add_option("--min-diameter", min_diameter, "diameter filter");
    search->add_option("--min-value", min_value, "minimum alpha/gamma value");

    CLI11_PARSE(app, argc, argv);

    try {
        SolveOptions sopt = solve_options_from_env(budget_flag);

        if (inv->parsed()) {
            Graph g = gin.load();
            if (!is_connected(g)) throw std::runtime_error("graph is disconnected");
            int gi = girth(g);
            json j{{"n", g.n()},
                   {"diameter", diameter(g)},
                   {"alpha", independence_number(g).first},
                   {"gamma", domination_number(g).first},
                   {"minDegree", min_degree(g)}};
            if (gi == kInfiniteGirth)
                j["girth"] = "infinite";
            else
                j["girth"] = gi;
            if (as_json) {
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "n          " << j["n"] << "\n"
                          << "diameter   " << j["diameter"] << "\n"
                          << "alpha      " << j["alpha"] << "\n"
                          << "gamma      " << j["gamma"] << "\n"
                          << "girth      " << (gi == kInfiniteGirth ? "infinite"
                                                                    : std::to_string(gi))
                          << "\n"
                          << "min degree " << j["minDegree"] << "\n";
            }
            return 0;
        }

        if (cop->parsed()) {
            Graph g = gin.load();
            int cap = kmax > 0 ? kmax : domination_number(g).first;
            int c = cop_number(g, cap, sopt);
            if (as_json)
                std::cout << json{{"copNumber", c}}.dump() << "\n";
            else
                std::cout << c << "\n";
            return 0;
        }

        if (bounds->parsed()) {
            Graph g = gin.load();
            CheckOptions copt;
            copt.solve = sopt;
            BoundReport r = check_bounds(g, copt);
            if (as_json) {
                std::cout << r.to_json().dump() << "\n";
            } else {
                std::cout << "n=" << r.n << " D=" << r.diameter << " alpha=" << r.alpha
                          << " gamma=" << r.gamma << " c=";
                if (r.cop_number)
                    std::cout << *r.cop_number;
                else
                    std::cout << "?";
                std::cout << "\n";
                for (const auto& t : r.theorems) {
                    std::cout << "theorem " << t.id << ": ";
                    if (!t.applicable)
                        std::cout << "not applicable\n";
                    else
                        std::cout << "c <= " << t.bound << (t.satisfied ? "  ok" : "  VIOLATED")
                                  << "\n";
                }
            }
            return r.all_satisfied() ? 0 : 1;
        }

        if (strat->parsed()) {
            Graph g = gin.load();
            CopStrategy s;
            bool fell_back = false;
            try {
                switch (theorem) {
                    case 1: s = synth_alpha_minus_one(g); break;
                    case 2: s = synth_sliding_blocks(g); break;
                    case 3: s = synth_gamma_minus_one(g); break;
                    default: s = synth_barrier_blocks(g); break;
                }
            } catch (const NotApplicableError& e) {
                // precondition on the diameter not met: total coverage via
                // gamma stationary cops on a minimum dominating set
                std::cerr << "theorem " << theorem << " not applicable (" << e.what()
                          << "); falling back to dominating-set placement\n";
                s = dominating_set_strategy(g);
                fell_back = true;
            }
            std::optional<Verdict> v;
            if (do_validate) v = validate_strategy(g, s);
            if (as_json) {
                json j{{"strategy", s.name}, {"copCount", s.cop_count}};
                j["placement"] = s.initial_placement;
                j["fallback"] = fell_back;
                if (v) j["verdict"] = verdict_name(v->kind);
                if (v && v->kind == Verdict::Kind::Sound)
                    j["maxCaptureTurns"] = v->max_capture_turns;
                if (v && v->kind == Verdict::Kind::Unsound) j["escapePath"] = v->escape_path;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << s.name << ": " << s.cop_count << " cops, placement";
                for (int p : s.initial_placement) std::cout << " " << p;
                std::cout << "\n";
                if (v) {
                    std::cout << "verdict: " << verdict_name(v->kind);
                    if (v->kind == Verdict::Kind::Sound)
                        std::cout << " (capture within " << v->max_capture_turns << " turns)";
                    std::cout << "\n";
                }
                // sample transcript against the table-optimal robber
                SolutionTable t = solve_k_cops(g, std::max(1, s.cop_count), sopt);
                Transcript tr = play_strategy(g, s, optimal_robber_policy(t), 4 * g.n() + 16);
                std::cout << tr.to_text();
            }
            return (v && v->kind != Verdict::Kind::Sound) ? 1 : 0;
        }

        if (verify->parsed()) {
            CorpusOptions copt;
            copt.check.solve = sopt;
            copt.check.run_strategies = with_strategies;
            if (jobs > 0) copt.jobs = jobs;
            CorpusReport rep = verify_corpus_file(corpus_path, copt);
            if (!out_path.empty()) {
                std::ofstream out(out_path);
                rep.write_jsonl(out);
            } else if (as_json) {
                rep.write_jsonl(std::cout);
            }
            for (const auto& [lineno, msg] : rep.parse_errors)
                std::cerr << "line " << lineno << ": " << msg << "\n";
            std::cout << rep.reports.size() << " graphs, " << rep.violations << " violations, "
                      << rep.parse_errors.size() << " parse errors\n";
            return rep.violations == 0 ? 0 : 1;
        }

        if (certify->parsed()) {
            Graph g = gin.load();
            Certificate cert = certify_equality(g, sopt);
            if (as_json) {
                std::cout << cert.to_json().dump() << "\n";
            } else if (cert.exact) {
                std::cout << "c = " << *cert.exact
                          << (cert.kind == Certificate::Kind::GirthDegreeSandwich
                                  ? " (girth/degree sandwich, no game solve)"
                                  : " (exact solve)")
                          << "\n";
            } else {
                std::cout << cert.lower << " <= c <= " << cert.upper << " (budget-bound)\n";
            }
            return 0;
        }

        if (search->parsed()) {
            std::ifstream in(search_path);
            if (!in) throw std::runtime_error("cannot open " + search_path);
            auto lines = read_graph6_lines(in);
            SearchPredicate pred;
            pred.equality = equality == "alpha" ? SearchPredicate::Equality::CopAlpha
                                                : SearchPredicate::Equality::CopGamma;
            pred.min_diameter = min_diameter;
            pred.min_value = min_value;
            SearchResult res = search_extremal(lines, pred, sopt);
            for (const auto& w : res.witnesses) {
                if (as_json)
                    std::cout << json{{"graph6", w.graph6},
                                      {"n", w.n},
                                      {"diameter", w.diameter},
                                      {"value", w.value},
                                      {"copNumber", w.cop_number}}
                                     .dump()
                              << "\n";
                else
                    std::cout << w.graph6 << "  n=" << w.n << " D=" << w.diameter
                              << " c=" << equality << "=" << w.value << "\n";
            }
            if (res.budget_exhausted) {
                std::cerr << "budget exhausted after " << res.processed << " graphs\n";
                return 2;
            }
            std::cout << res.witnesses.size() << " witnesses in " << res.processed
                      << " graphs\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
