#include <doctest.h>

#include <algorithm>

#include "qtsp/adjacent.hpp"
#include "qtsp/bench.hpp"
#include "qtsp/oracle.hpp"

using namespace qtsp;

TEST_CASE("adjacent SEE DP equals the exhaustive oracle") {
    for (auto sizes : std::vector<std::vector<int>>{{3, 3}, {4, 3}, {3, 3, 3}}) {
        GStarGraph g(sizes);
        Adjacent zero = random_adjacent(g.graph(), 0, 0, 0);
        CHECK(solve_adjacent_see(g, zero).value == 0);
        Adjacent ones = random_adjacent(g.graph(), 0, 1, 1);
        CHECK(solve_adjacent_see(g, ones).value == g.graph().num_vertices());
        for (std::uint64_t seed = 0; seed < 70; ++seed) {
            Adjacent q = random_adjacent(g.graph(), seed, 0, 9);
            AdjSolution sol = solve_adjacent_see(g, q);
            CHECK(sol.value == oracle_tour(g, Family::SEE, q).value);
            CHECK(eval_adjacent(sol.tour, q) == sol.value);
            CHECK(validate_tour(sol.tour, g, Family::SEE).member);
        }
    }
}

TEST_CASE("adjacent DEE DP equals the exhaustive oracle") {
    for (auto sizes : std::vector<std::vector<int>>{{3, 3}, {3, 3, 3}}) {
        GStarGraph g(sizes);
        Adjacent zero = random_adjacent(g.graph(), 0, 0, 0);
        CHECK(solve_adjacent_dee(g, zero).value == 0);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            Adjacent q = random_adjacent(g.graph(), seed, 0, 9);
            AdjSolution sol = solve_adjacent_dee(g, q);
            CHECK(sol.value == oracle_tour(g, Family::DEE, q).value);
            CHECK(eval_adjacent(sol.tour, q) == sol.value);
            CHECK(validate_tour(sol.tour, g, Family::DEE).member);
        }
    }
}

TEST_CASE("DEE expanded-cycle identity on the r=(4,3,5) graph with unit costs") {
    // With every triple costing 1, the caption's eight-term expansion reads
    // 13 = 8 + 3 + 4 - 2: the full structure over three cycles costs one per
    // vertex; the sub-structure over the first two cycles likewise; the
    // last-cycle chain contributes its r-2 interior triples; four junction
    // triples enter and the two ejected-edge triples leave.
    GStarGraph g({4, 3, 5});
    Adjacent ones = random_adjacent(g.graph(), 0, 1, 1);
    Cost full = solve_adjacent_dee(g, ones).value;
    CHECK(full == 13);

    GStarGraph sub({4, 3});
    Adjacent sub_ones = random_adjacent(sub.graph(), 0, 1, 1);
    Cost d2 = oracle_tour(sub, Family::DEE, sub_ones).value;
    CHECK(d2 == 8);
    Cost interior = 5 - 2;
    CHECK(full == d2 + interior + 4 - 2);
}

TEST_CASE("adjacent PV DP equals the exhaustive oracle") {
    {
        PVGraph g(4);
        Adjacent zero = random_adjacent(g.graph(), 0, 0, 0);
        CHECK(solve_adjacent_pv(g, zero).value == 0);
        Adjacent q = random_adjacent(g.graph(), 5, 0, 9);
        auto tours = enumerate_pv(g);
        REQUIRE(tours.size() == 2);
        Cost hand = std::min(eval_adjacent(tours[0], q), eval_adjacent(tours[1], q));
        CHECK(solve_adjacent_pv(g, q).value == hand);
    }
    int done = 0;
    for (int n : {6, 8, 10, 12}) {
        PVGraph g(n);
        for (std::uint64_t seed = 0; seed < 125; ++seed) {
            Adjacent q = random_adjacent(g.graph(), seed, 0, 9);
            AdjSolution sol = solve_adjacent_pv(g, q);
            CHECK(sol.value == oracle_tour(g, q).value);
            CHECK(eval_adjacent(sol.tour, q) == sol.value);
            CHECK(validate_tour(sol.tour, g).member);
            ++done;
        }
    }
    CHECK(done == 500);
}

TEST_CASE("linear PV greedy equals the exhaustive oracle") {
    PVGraph g(8);
    const int m = g.graph().num_edges();
    CHECK(solve_linear_pv(g, std::vector<Cost>(m, 0)).value == 0);

    std::vector<Cost> c(m, 0);
    for (int k = 1; k < g.pairs(); ++k) {
        c[g.graph().edge_id(g.v(k), g.v(k + 1))] = 1;
        c[g.graph().edge_id(g.vp(k), g.vp(k + 1))] = 1;
        c[g.graph().edge_id(g.v(k), g.vp(k + 1))] = 2;
        c[g.graph().edge_id(g.vp(k), g.v(k + 1))] = 2;
    }
    c[g.graph().edge_id(g.v(1), g.vp(1))] = 3;
    c[g.graph().edge_id(g.v(4), g.vp(4))] = 3;
    CHECK(solve_linear_pv(g, c).value == 2 * 3 + (g.pairs() - 1) * 2);

    int done = 0;
    for (int n : {6, 8, 10, 12}) {
        PVGraph gn(n);
        for (std::uint64_t seed = 0; seed < 125; ++seed) {
            std::vector<Cost> rc = random_costs(gn.graph().num_edges(), seed, 0, 9);
            AdjSolution sol = solve_linear_pv(gn, rc);
            CHECK(sol.value == oracle_tour(gn, LinearCosts{rc}).value);
            CHECK(eval_linear(gn.graph(), sol.tour, LinearCosts{rc}) == sol.value);
            ++done;
        }
    }
    CHECK(done == 500);
}

TEST_CASE("PV polytope membership") {
    PVGraph g(8);
    const int m = g.graph().num_edges();
    for (const Tour& t : enumerate_pv(g)) {
        std::vector<double> x(m, 0.0);
        for (EdgeId e : t.edge_ids(g.graph())) x[e] = 1.0;
        CHECK(pv_polytope_check(x, g).satisfied());
    }
    PolytopeReport zero = pv_polytope_check(std::vector<double>(m, 0.0), g);
    CHECK_FALSE(zero.satisfied());
    CHECK_FALSE(zero.first_pair);
    CHECK_THROWS(pv_polytope_check(std::vector<double>(m + 1, 0.0), g));

    // Exhaustive 0/1 scan for the one-gap graph: only the two tours pass.
    PVGraph g4(4);
    const int m4 = g4.graph().num_edges();
    REQUIRE(m4 == 6);
    std::vector<std::vector<double>> winners;
    for (unsigned mask = 0; mask < (1u << m4); ++mask) {
        std::vector<double> x(m4);
        for (int e = 0; e < m4; ++e) x[e] = (mask >> e) & 1 ? 1.0 : 0.0;
        if (pv_polytope_check(x, g4).satisfied()) winners.push_back(x);
    }
    CHECK(winners.size() == 2);
    for (const Tour& t : enumerate_pv(g4)) {
        std::vector<double> x(m4, 0.0);
        for (EdgeId e : t.edge_ids(g4.graph())) x[e] = 1.0;
        CHECK(std::find(winners.begin(), winners.end(), x) != winners.end());
    }
}
