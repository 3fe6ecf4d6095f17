#include <doctest.h>

#include <random>

#include "copsrob/game.hpp"
#include "copsrob/invariants.hpp"
#include "copsrob/strategy.hpp"
#include "test_util.hpp"

using namespace copsrob;

namespace {

// confinement check: after placement the robber stays inside `region` except
// possibly on its very last recorded position (stepping out means capture on
// the next cop move)
void check_confinement(const Transcript& tr, const Bitset& region) {
    REQUIRE(tr.result == Transcript::Result::Captured);
    for (size_t i = 1; i + 2 < tr.states.size(); ++i)
        CHECK(region.test(tr.states[i].robber));
}

}  // namespace

TEST_CASE("alpha-minus-one on path(5)") {
    Graph p5 = gen::path(5);
    CopStrategy s = synth_alpha_minus_one(p5);
    CHECK(s.cop_count == 2);  // alpha(P_5) - 1
    CHECK(s.initial_placement == std::vector<int>{2, 4});
    Verdict v = validate_strategy(p5, s);
    CHECK(v.kind == Verdict::Kind::Sound);

    int alpha = independence_number(p5).first;
    CHECK(s.cop_count <= alpha - 1);
}

TEST_CASE("alpha-minus-one preconditions") {
    CHECK_THROWS_AS(synth_alpha_minus_one(gen::complete(4)), NotApplicableError);
    CHECK_THROWS_AS(synth_alpha_minus_one(gen::cycle(6)), NotApplicableError);  // D = 3
}

TEST_CASE("alpha-minus-one relocator starts far out when D >= 5") {
    for (int n : {6, 8, 11}) {
        Graph g = gen::path(n);
        CopStrategy s = synth_alpha_minus_one(g);
        LayerDecomposition ld = diameter_layers(g);
        // the scripted cop's start lies in N_{>=4}
        REQUIRE_FALSE(s.scripts[0].empty());
        int slot = s.scripts[0].front().slot;
        CHECK(ld.layer_of[s.initial_placement[slot]] >= 4);
        CHECK(validate_strategy(g, s).kind == Verdict::Kind::Sound);
    }
}

TEST_CASE("alpha-minus-one confinement to {u} u N_1") {
    Graph g = gen::path(7);
    CopStrategy s = synth_alpha_minus_one(g);
    LayerDecomposition ld = diameter_layers(g);
    SolutionTable t = solve_k_cops(g, s.cop_count);
    Transcript tr = play_strategy(g, s, optimal_robber_policy(t), 64);
    Bitset region = ld.layer_range(0, 1);
    // the optimal robber starts inside the confinement region
    CHECK(region.test(tr.states.front().robber));
    check_confinement(tr, ld.layer_range(0, 2));
}

TEST_CASE("sliding blocks on path(8)") {
    Graph p8 = gen::path(8);
    CopStrategy s = synth_sliding_blocks(p8);
    CHECK(s.cop_count == 2);
    Verdict v = validate_strategy(p8, s);
    CHECK(v.kind == Verdict::Kind::Sound);
}

TEST_CASE("sliding blocks cop-count ledger") {
    for (int n : {8, 10, 13}) {
        Graph g = gen::path(n);
        CopStrategy s = synth_sliding_blocks(g);
        int alpha = independence_number(g).first;
        int d = diameter(g);
        CHECK(s.cop_count <= alpha - (d - 3) / 2);
        CHECK(validate_strategy(g, s).kind == Verdict::Kind::Sound);
    }
    Graph c12 = gen::cycle(12);
    CopStrategy s = synth_sliding_blocks(c12);
    CHECK(validate_strategy(c12, s).kind == Verdict::Kind::Sound);
    CHECK_THROWS_AS(synth_sliding_blocks(gen::cycle(8)), NotApplicableError);  // D = 4
}

TEST_CASE("gamma-minus-one on path(7)") {
    Graph p7 = gen::path(7);
    CopStrategy s = synth_gamma_minus_one(p7);
    CHECK(s.cop_count == 2);  // gamma(P_7) - 1
    CHECK(validate_strategy(p7, s).kind == Verdict::Kind::Sound);
    CHECK_THROWS_AS(synth_gamma_minus_one(gen::path(5)), NotApplicableError);
}

TEST_CASE("gamma-minus-one confinement to {u} u N_1 u N_2") {
    Graph g = gen::path(9);
    CopStrategy s = synth_gamma_minus_one(g);
    LayerDecomposition ld = diameter_layers(g);
    SolutionTable t = solve_k_cops(g, std::max(s.cop_count, 1));
    Transcript tr = play_strategy(g, s, optimal_robber_policy(t), 64);
    check_confinement(tr, ld.layer_range(0, 3));
}

TEST_CASE("barrier blocks on paths") {
    Graph p19 = gen::path(19);
    CopStrategy s = synth_barrier_blocks(p19);
    int gamma = domination_number(p19).first;
    CHECK(gamma == 7);
    CHECK(s.cop_count == gamma - 3);  // k=1, m=3
    CHECK(validate_strategy(p19, s).kind == Verdict::Kind::Sound);

    CHECK_THROWS_AS(synth_barrier_blocks(gen::path(10)), NotApplicableError);

    // every barrier triple holds at least one cop at placement
    LayerDecomposition ld = diameter_layers(p19);
    for (int b = 1; b <= 2; ++b) {
        Bitset triple = ld.layer_range(6 * b - 1, 6 * b + 1);
        bool has_cop = false;
        for (int c : s.initial_placement) has_cop |= triple.test(c);
        CHECK(has_cop);
    }
}

TEST_CASE("barrier parameter selection") {
    CHECK_FALSE(barrier_parameters(17).has_value());
    auto p18 = barrier_parameters(18);
    REQUIRE(p18.has_value());
    CHECK(p18->first == 1);   // k
    CHECK(p18->second == 3);  // m
    // k grows with the diameter and always satisfies m-2 >= k
    for (int d = 18; d <= 400; ++d) {
        auto p = barrier_parameters(d);
        REQUIRE(p.has_value());
        CHECK(p->second - 2 >= p->first);
        CHECK(p->second == d / (3 * p->first + 3));
    }
}

TEST_CASE("validator flags hopeless stationary cops") {
    Graph p5 = gen::path(5);
    CopStrategy bad;
    bad.name = "stationary";
    bad.cop_count = 1;
    bad.initial_placement = {0};
    bad.scripts.emplace_back();
    bad.script_of_start.assign(5, 0);
    Verdict v = validate_strategy(p5, bad);
    CHECK(v.kind == Verdict::Kind::Unsound);
    REQUIRE_FALSE(v.escape_path.empty());
    CHECK(v.escape_path.front() >= 2);  // robber starts out of reach
}

TEST_CASE("validator budget exit") {
    Graph p8 = gen::path(8);
    CopStrategy s = synth_sliding_blocks(p8);
    Verdict v = validate_strategy(p8, s, 1 << 20, /*state_budget=*/1);
    CHECK(v.kind == Verdict::Kind::Inconclusive);
}

TEST_CASE("validator rejects illegal scripts") {
    Graph p5 = gen::path(5);
    CopStrategy bad;
    bad.cop_count = 1;
    bad.initial_placement = {0};
    bad.scripts.push_back({{0, 4, "teleport"}});
    bad.script_of_start.assign(5, 0);
    CHECK_THROWS_AS(validate_strategy(p5, bad), IllegalStrategyMove);
}

TEST_CASE("strategies sound on random graphs meeting their preconditions") {
    std::mt19937 rng(2024);
    int done1 = 0, done2 = 0, done3 = 0;
    for (int trial = 0; trial < 4000 && (done1 < 25 || done2 < 25 || done3 < 25); ++trial) {
        int n = 8 + int(rng() % 9);
        Graph g = testutil::random_connected_graph(n, int(rng() % 4), rng);
        int d = diameter(g);
        if (d >= 4 && done1 < 25) {
            CopStrategy s = synth_alpha_minus_one(g);
            CHECK(s.cop_count <= independence_number(g).first - 1);
            CHECK(validate_strategy(g, s).kind == Verdict::Kind::Sound);
            ++done1;
        }
        if (d >= 5 && done2 < 25) {
            CopStrategy s = synth_sliding_blocks(g);
            CHECK(s.cop_count <= independence_number(g).first - (d - 3) / 2);
            CHECK(validate_strategy(g, s).kind == Verdict::Kind::Sound);
            ++done2;
        }
        if (d >= 6 && done3 < 25) {
            CopStrategy s = synth_gamma_minus_one(g);
            CHECK(s.cop_count == domination_number(g).first - 1);
            CHECK(validate_strategy(g, s).kind == Verdict::Kind::Sound);
            ++done3;
        }
    }
    CHECK(done1 == 25);
    CHECK(done2 == 25);
    CHECK(done3 == 25);
}

TEST_CASE("dominating-set fallback is sound everywhere") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + int(rng() % 10);
        Graph g = testutil::random_connected_graph(n, int(rng() % 6), rng);
        CopStrategy s = dominating_set_strategy(g);
        Verdict v = validate_strategy(g, s);
        CHECK(v.kind == Verdict::Kind::Sound);
        CHECK(v.max_capture_turns <= 1);  // capture within one move of placement
    }
}

TEST_CASE("strategy transcripts carry phase annotations") {
    Graph p7 = gen::path(7);
    CopStrategy s = synth_gamma_minus_one(p7);
    SolutionTable t = solve_k_cops(p7, s.cop_count);
    Transcript tr = play_strategy(p7, s, optimal_robber_policy(t), 32);
    CHECK(tr.to_text().find("phase=") != std::string::npos);
}
