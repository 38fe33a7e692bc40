#include <doctest.h>

#include <random>

#include "qtsp/qspp.hpp"

using namespace qtsp;

namespace {

QsppInstance random_dag(std::mt19937_64& rng, int p, Cost lo, Cost hi) {
    QsppInstance inst;
    inst.n = 4 + static_cast<int>(rng() % 7);
    inst.p = p;
    inst.s = 0;
    inst.t = inst.n - 1;
    auto delta = [&] {
        std::vector<Cost> d(2 * p);
        for (Cost& x : d) x = lo + static_cast<Cost>(rng() % (hi - lo + 1));
        return d;
    };
    for (int v = 1; v < inst.n; ++v) inst.edges.push_back({v - 1, v, delta()});
    int extra = static_cast<int>(rng() % 12);
    for (int e = 0; e < extra && static_cast<int>(inst.edges.size()) < 20; ++e) {
        int a = static_cast<int>(rng() % inst.n), b = static_cast<int>(rng() % inst.n);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        inst.edges.push_back({a, b, delta()});
    }
    return inst;
}

}  // namespace

TEST_CASE("single and parallel edge bases") {
    QsppInstance inst{2, 1, 0, 1, {{0, 1, {2, 3}}}};
    QsppSolution sol = solve_exact(inst);
    CHECK(sol.value == 6);
    CHECK(sol.path_edges == std::vector<int>{0});

    inst.edges.push_back({0, 1, {3, 2}});
    sol = solve_exact(inst);
    CHECK(sol.value == 6);
    CHECK(sol.path_edges == std::vector<int>{0});
}

TEST_CASE("prune_and_order removes dead vertices, rejects cycles") {
    QsppInstance inst{4, 1, 0, 2, {{0, 1, {1, 1}}, {1, 2, {1, 1}}}};  // vertex 3 isolated
    PruneResult pr = prune_and_order(inst);
    CHECK(pr.inst.n == 3);
    CHECK(pr.vertex_map[3] == -1);
    CHECK(pr.inst.s == 0);
    CHECK(pr.inst.t == pr.inst.n - 1);

    QsppInstance cyc{3, 1, 0, 2, {{0, 1, {1, 1}}, {1, 0, {1, 1}}, {1, 2, {1, 1}}}};
    CHECK_THROWS(prune_and_order(cyc));

    QsppInstance nopath{3, 1, 0, 2, {{0, 1, {1, 1}}}};
    CHECK_THROWS(prune_and_order(nopath));
}

TEST_CASE("solve_exact equals the path oracle on random DAGs") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 200; ++it) {
        int p = 1 + static_cast<int>(rng() % 2);
        QsppInstance inst = prune_and_order(random_dag(rng, p, -5, 5)).inst;
        QsppSolution dp = solve_exact(inst);
        QsppSolution brute = oracle_paths(inst);
        CHECK(dp.value == brute.value);
        CHECK(qspp_objective(inst, dp.path_edges) == dp.value);
        // Label monotonicity, re-asserted from the outside.
        for (std::size_t s : dp.omega_sizes) CHECK(dp.omega_sizes.back() >= s);
    }
}

TEST_CASE("fptas stays within 1+eps of the exact value") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        int p = 1 + static_cast<int>(rng() % 2);
        QsppInstance inst = prune_and_order(random_dag(rng, p, 0, 5)).inst;
        Cost exact = solve_exact(inst).value;
        QsppSolution approx = solve_fptas(inst, 0.1);
        CHECK(approx.value >= exact);
        CHECK(static_cast<double>(approx.value) <= 1.1 * static_cast<double>(exact) + 1e-9);
        CHECK(qspp_objective(inst, approx.path_edges) == approx.value);
    }

    QsppInstance chain{3, 1, 0, 2, {{0, 1, {4, 1}}, {1, 2, {1, 3}}}};
    CHECK(solve_fptas(chain, 0.5).value == solve_exact(chain).value);

    QsppInstance zero{3, 1, 0, 2, {{0, 1, {0, 0}}, {1, 2, {0, 0}}}};
    CHECK(solve_fptas(zero, 0.1).value == 0);

    QsppInstance neg{2, 1, 0, 1, {{0, 1, {-1, 2}}}};
    CHECK_THROWS(solve_fptas(neg, 0.1));
}
