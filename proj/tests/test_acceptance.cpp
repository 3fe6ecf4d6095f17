// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Run via ctest or directly.
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "copsrob/harness.hpp"
#include "test_util.hpp"

using namespace copsrob;

namespace {

struct Criterion {
    const char* name;
    bool ok = true;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(const char* n) : name(n) {}
    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("[%s] %s (%lld ms)\n", ok ? "PASS" : "FAIL", name, (long long)ms);
        std::fflush(stdout);
    }
    void require(bool cond) { ok = ok && cond; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

TEST_CASE("criterion 1: path formulas for n = 2..12") {
    Criterion c("1 path formulas c=1, alpha=ceil(n/2), gamma=ceil(n/3), D=n-1");
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 2; n <= 12; ++n) {
        Graph g = gen::path(n);
        bool ok = cop_number(g, 2) == 1 && independence_number(g).first == (n + 1) / 2 &&
                  domination_number(g).first == (n + 2) / 3 && diameter(g) == n - 1;
        CHECK(ok);
        c.require(ok);
    }
    bool in_time = seconds_since(t0) < 5.0;
    CHECK(in_time);
    c.require(in_time);
}

TEST_CASE("criterion 2: paley(17) has c = alpha = 3") {
    Criterion c("2 paley(17): alpha=3, k=2 robber wins, k=3 cops win");
    auto t0 = std::chrono::steady_clock::now();
    Graph g = gen::paley(17);
    bool alpha_ok = independence_number(g).first == 3;
    bool k2_ok = !solve_k_cops(g, 2).cops_win();
    bool k3_ok = solve_k_cops(g, 3).cops_win();
    bool in_time = seconds_since(t0) < 120.0;
    CHECK(alpha_ok);
    CHECK(k2_ok);
    CHECK(k3_ok);
    CHECK(in_time);
    c.require(alpha_ok && k2_ok && k3_ok && in_time);
}

TEST_CASE("criterion 3: hoffman-singleton certified c = 7 without game solving") {
    Criterion c("3 hoffman-singleton: girth/degree lower 7, gamma 7, certificate c=7");
    auto t0 = std::chrono::steady_clock::now();
    Graph g = gen::hoffman_singleton();
    bool structural = g.n() == 50 && min_degree(g) == 7 && girth(g) == 5;
    bool af_ok = aigner_fromme_lower_bound(g) == 7;
    auto [gamma, w] = domination_number(g);
    bool gamma_ok = gamma == 7 && w.lower_bound == 7;  // ceil(50/8) = 7
    Certificate cert = certify_equality(g);
    bool cert_ok = cert.kind == Certificate::Kind::GirthDegreeSandwich && cert.exact == 7;
    bool in_time = seconds_since(t0) < 600.0;
    CHECK(structural);
    CHECK(af_ok);
    CHECK(gamma_ok);
    CHECK(cert_ok);
    CHECK(in_time);
    c.require(structural && af_ok && gamma_ok && cert_ok && in_time);
}

TEST_CASE("criterion 4: theorems 1-4 hold on all connected graphs with n <= 7") {
    Criterion c("4 zero violations of theorems 1-4 over the n<=7 corpus");
    auto t0 = std::chrono::steady_clock::now();
    auto lines = testutil::load_corpus("connected_le7.g6");
    REQUIRE(lines.size() == 996);
    CorpusOptions opt;
    CorpusReport rep = verify_corpus(lines, opt);
    CHECK(rep.parse_errors.empty());
    CHECK(rep.reports.size() == 996);
    CHECK(rep.violations == 0);
    int with_c = 0;
    for (const auto& r : rep.reports)
        if (r.cop_number) ++with_c;
    CHECK(with_c == 996);  // exact c everywhere at this scale
    bool in_time = seconds_since(t0) < 1800.0;
    CHECK(in_time);
    c.require(rep.parse_errors.empty() && rep.violations == 0 && with_c == 996 && in_time);
}

TEST_CASE("criterion 5: strategy soundness by exhaustive best response") {
    Criterion c("5 strategies 1-4 sound with cop-count ledgers on random corpora");
    std::mt19937 rng(20260823);
    int sound1 = 0, sound2 = 0, sound3 = 0;
    bool all_ok = true;
    int attempts = 0;
    while ((sound1 < 200 || sound2 < 200 || sound3 < 200) && attempts < 200000) {
        ++attempts;
        int n = 8 + int(rng() % 9);  // 8..16 vertices
        Graph g = testutil::random_connected_graph(n, int(rng() % 4), rng);
        int d = diameter(g);
        int alpha = -1, gamma = -1;
        if (d >= 4 && sound1 < 200) {
            alpha = independence_number(g).first;
            CopStrategy s = synth_alpha_minus_one(g);
            bool ok = s.cop_count <= alpha - 1 &&
                      validate_strategy(g, s).kind == Verdict::Kind::Sound;
            CHECK(ok);
            all_ok = all_ok && ok;
            ++sound1;
        }
        if (d >= 5 && sound2 < 200) {
            if (alpha < 0) alpha = independence_number(g).first;
            CopStrategy s = synth_sliding_blocks(g);
            bool ok = s.cop_count <= alpha - (d - 3) / 2 &&
                      validate_strategy(g, s).kind == Verdict::Kind::Sound;
            CHECK(ok);
            all_ok = all_ok && ok;
            ++sound2;
        }
        if (d >= 6 && sound3 < 200) {
            gamma = domination_number(g).first;
            CopStrategy s = synth_gamma_minus_one(g);
            bool ok = s.cop_count == gamma - 1 &&
                      validate_strategy(g, s).kind == Verdict::Kind::Sound;
            CHECK(ok);
            all_ok = all_ok && ok;
            ++sound3;
        }
    }
    CHECK(sound1 == 200);
    CHECK(sound2 == 200);
    CHECK(sound3 == 200);
    // theorem 4 on paths 19..25
    for (int n = 19; n <= 25; ++n) {
        Graph g = gen::path(n);
        int gamma = domination_number(g).first;
        auto params = barrier_parameters(diameter(g));
        REQUIRE(params.has_value());
        auto [k, m] = *params;
        CopStrategy s = synth_barrier_blocks(g);
        bool ok = s.cop_count == gamma - k * m && s.cop_count <= gamma - k * k - 2 * k &&
                  validate_strategy(g, s).kind == Verdict::Kind::Sound;
        CHECK(ok);
        all_ok = all_ok && ok;
    }
    c.require(all_ok && sound1 == 200 && sound2 == 200 && sound3 == 200);
}

TEST_CASE("criterion 6: diameter gates for c=alpha and c=gamma") {
    Criterion c("6 no c=alpha with D>=4 and no c=gamma with D>=6 on n<=7; C_4 witness exists");
    auto lines = testutil::load_corpus("connected_le7.g6");

    SearchPredicate pa;
    pa.equality = SearchPredicate::Equality::CopAlpha;
    pa.min_diameter = 4;
    SearchResult ra = search_extremal(lines, pa);
    CHECK(ra.witnesses.empty());

    SearchPredicate pg;
    pg.equality = SearchPredicate::Equality::CopGamma;
    pg.min_diameter = 6;
    SearchResult rg = search_extremal(lines, pg);
    CHECK(rg.witnesses.empty());

    SearchPredicate pw;
    pw.equality = SearchPredicate::Equality::CopAlpha;
    pw.min_value = 2;
    SearchResult rw = search_extremal(lines, pw);
    bool has_c4 = false;
    bool all_small_diameter = true;
    for (const auto& w : rw.witnesses) {
        all_small_diameter = all_small_diameter && w.diameter <= 3;
        Graph g = parse_graph6(w.graph6);
        if (w.n == 4 && g.edge_count() == 4 && girth(g) == 4)
            has_c4 = cop_number(g, 2) == 2;  // 4-cycle confirmed by the solver
    }
    CHECK(has_c4);
    CHECK(all_small_diameter);
    c.require(ra.witnesses.empty() && rg.witnesses.empty() && has_c4 && all_small_diameter);
}

TEST_CASE("criterion 7: branch-and-bound equals brute force") {
    Criterion c("7 alpha/gamma/constrained-MIS agree with subset brute force on n<=8");
    bool all_ok = true;
    // the whole n<=7 corpus plus random graphs on 8 vertices
    auto lines = testutil::load_corpus("connected_le7.g6");
    std::vector<Graph> graphs;
    for (const auto& l : lines) graphs.push_back(parse_graph6(l));
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 1200; ++trial)
        graphs.push_back(testutil::random_connected_graph(8, int(rng() % 8), rng));
    CHECK(graphs.size() >= 2000);
    for (const auto& g : graphs) {
        bool ok = independence_number(g).first == testutil::brute_force_alpha(g) &&
                  domination_number(g).first == testutil::brute_force_gamma(g);
        CHECK(ok);
        all_ok = all_ok && ok;
    }
    // constrained MIS on layer instances
    int instances = 0;
    for (size_t i = 0; i < graphs.size() && instances < 600; i += 3) {
        const Graph& g = graphs[i];
        LayerDecomposition ld = distance_layers(g, 0);
        if (ld.eccentricity() < 2) continue;
        Bitset domain = ld.suffix_union(2);
        if (domain.none()) continue;
        Bitset penalty = ld.layers.size() > 3 ? ld.layers[3] : Bitset(g.n());
        auto r = constrained_max_independent_set(g, domain, penalty);
        auto [bsize, boverlap] = testutil::brute_force_constrained_mis(g, domain, penalty);
        bool ok = r.witness.size() == bsize && r.penalty_overlap == boverlap;
        CHECK(ok);
        all_ok = all_ok && ok;
        ++instances;
    }
    CHECK(instances >= 300);
    c.require(all_ok && graphs.size() >= 2000 && instances >= 300);
}

TEST_CASE("criterion 8: graph6 round trip on 10^4 random graphs") {
    Criterion c("8 encode->decode identity on 10000 random graphs with n<=12");
    std::mt19937 rng(777777);
    bool all_ok = true;
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 1 + int(rng() % 12);
        std::vector<std::pair<int, int>> edges;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        double p = coin(rng);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng) < p) edges.emplace_back(a, b);
        Graph g = Graph::from_edges(n, edges);
        Graph back = parse_graph6(encode_graph6(g));
        bool ok = back.n() == n;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) ok = back.has_edge(a, b) == g.has_edge(a, b);
        if (!ok) CHECK(ok);
        all_ok = all_ok && ok;
    }
    CHECK(all_ok);
    c.require(all_ok);
}
