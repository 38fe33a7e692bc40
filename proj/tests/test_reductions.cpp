#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "qtsp/bench.hpp"
#include "qtsp/oracle.hpp"
#include "qtsp/qspp.hpp"
#include "qtsp/reductions.hpp"

using namespace qtsp;

namespace {

std::vector<Cost> all_path_values(const QsppInstance& inst) {
    std::vector<std::vector<int>> out(inst.n);
    for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e)
        out[inst.edges[e].tail].push_back(e);
    std::vector<Cost> values;
    std::vector<int> path;
    std::function<void(int)> dfs = [&](int v) {
        if (v == inst.t) {
            values.push_back(qspp_objective(inst, path));
            return;
        }
        for (int e : out[v]) {
            path.push_back(e);
            dfs(inst.edges[e].head);
            path.pop_back();
        }
    };
    dfs(inst.s);
    return values;
}

template <typename G>
void bijection_check(const ReductionMap& map, const G& g, const std::vector<Tour>& tours,
                     const RankP& model) {
    std::vector<Cost> tour_values;
    for (const Tour& t : tours)
        tour_values.push_back(map.scale * eval_rank(g.graph(), t, model));
    std::vector<Cost> path_values = all_path_values(map.inst);
    REQUIRE(path_values.size() == tour_values.size());
    std::sort(tour_values.begin(), tour_values.end());
    std::sort(path_values.begin(), path_values.end());
    CHECK(tour_values == path_values);

    QsppSolution sol = solve_exact(map.inst);
    CHECK(sol.value == tour_values.front());
    Tour best = path_to_tour(map, sol.path_edges);
    CHECK(map.scale * eval_rank(g.graph(), best, model) == sol.value);
}

}  // namespace

TEST_CASE("SEE reduction is a value-preserving bijection") {
    GStarGraph g({4, 3, 5});
    for (std::uint64_t seed : {1, 2}) {
        RankP model = random_rank(g.graph().num_edges(), 2, seed, -5, 5);
        ReductionMap map = see_to_qspp(g, model);
        bijection_check(map, g, enumerate_see(g), model);
    }
    RankP zero = random_rank(g.graph().num_edges(), 1, 0, 0, 0);
    CHECK(solve_exact(see_to_qspp(g, zero).inst).value == 0);
}

TEST_CASE("DEE reduction is a value-preserving bijection") {
    GStarGraph g({3, 3});
    for (std::uint64_t seed : {1, 2, 3}) {
        RankP model = random_rank(g.graph().num_edges(), 2, seed, -5, 5);
        ReductionMap map = dee_to_qspp(g, model);
        bijection_check(map, g, enumerate_dee(g), model);
    }
    GStarGraph g3({3, 4, 3});
    RankP model = random_rank(g3.graph().num_edges(), 1, 9, -5, 5);
    bijection_check(dee_to_qspp(g3, model), g3, enumerate_dee(g3), model);
}

TEST_CASE("PV reduction is a value-preserving bijection") {
    PVGraph g(8);
    for (std::uint64_t seed : {1, 2, 3}) {
        RankP model = random_rank(g.graph().num_edges(), 2, seed, -5, 5);
        bijection_check(pv_to_qspp(g, model), g, enumerate_pv(g), model);
    }
    PVGraph g12(12);
    RankP model = random_rank(g12.graph().num_edges(), 1, 4, -5, 5);
    ReductionMap map = pv_to_qspp(g12, model);
    CHECK(map.inst.n == 6);
    CHECK(map.inst.edges.size() == 10);
    bijection_check(map, g12, enumerate_pv(g12), model);
}

TEST_CASE("linear terms fold into an extra homogeneous factor") {
    PVGraph g(8);
    RankP model = random_rank(g.graph().num_edges(), 2, 5, -5, 5);
    model.c = random_costs(g.graph().num_edges(), 77, -5, 5);
    RankP folded = fold_linear(model, g.graph().num_vertices());
    CHECK(folded.p == 3);
    // Every tour has n edges, so the folded objective is n times the original.
    for (const Tour& t : enumerate_pv(g))
        CHECK(8 * eval_rank(g.graph(), t, model) == eval_rank(g.graph(), t, folded));
    // The reduction folds on its own when c is nonzero.
    bijection_check(pv_to_qspp(g, model), g, enumerate_pv(g), model);
}

TEST_CASE("partition generators: zero optimum iff a partition exists") {
    auto opt_see = [](const std::vector<Cost>& alpha) {
        auto [g, m] = gen_partition_see(alpha);
        return oracle_tour(g, Family::SEE, m).value;
    };
    auto opt_dee = [](const std::vector<Cost>& alpha) {
        auto [g, m] = gen_partition_dee(alpha);
        return oracle_tour(g, Family::DEE, m).value;
    };
    auto opt_pv = [](const std::vector<Cost>& alpha) {
        auto [g, m] = gen_partition_pv(alpha);
        return oracle_tour(g, m).value;
    };
    for (auto alpha : std::vector<std::vector<Cost>>{
             {1, 2, 3}, {1, 1, 3}, {0, 0}, {2, 1, 1}, {1, 2, 4}, {3, 1, 1, 1}, {5, 2}}) {
        bool exists = oracle_partition(alpha).exists;
        INFO("alpha size " << alpha.size());
        CHECK((opt_see(alpha) == 0) == exists);
        CHECK((opt_dee(alpha) == 0) == exists);
        CHECK((opt_pv(alpha) == 0) == exists);
        CHECK(opt_see(alpha) >= 0);
        CHECK(opt_dee(alpha) >= 0);
        CHECK(opt_pv(alpha) >= 0);
    }
}

TEST_CASE("UBQP generators agree with the binary brute force") {
    std::mt19937_64 rng(3);
    auto rand_q = [&](int n) {
        std::vector<std::vector<Cost>> Q(n, std::vector<Cost>(n));
        for (auto& row : Q)
            for (Cost& x : row) x = static_cast<Cost>(rng() % 11) - 5;
        return Q;
    };
    for (int it = 0; it < 8; ++it) {
        auto Q = rand_q(3);
        Cost want = oracle_ubqp(Q).value;
        auto [gs, fs] = gen_ubqp_see(Q);
        CHECK(oracle_tour(gs, Family::SEE, fs).value == want);
        auto [gp, fp] = gen_ubqp_pv(Q);
        CHECK(oracle_tour(gp, fp).value == want);
    }
    auto zero = std::vector<std::vector<Cost>>(3, std::vector<Cost>(3, 0));
    auto [gz, fz] = gen_ubqp_see(zero);
    CHECK(oracle_tour(gz, Family::SEE, fz).value == 0);
    auto ident = std::vector<std::vector<Cost>>{{1, 0}, {0, 1}};
    auto [gi, fi] = gen_ubqp_see(ident);
    CHECK(oracle_tour(gi, Family::SEE, fi).value == 0);
}

TEST_CASE("TSP embeds into adjacent-cost MEE") {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 5; ++it) {
        const int n = 4;
        std::vector<std::vector<Cost>> C(n, std::vector<Cost>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) C[i][j] = C[j][i] = static_cast<Cost>(rng() % 10);
        auto [g, q] = gen_tsp_mee(C);
        std::vector<int> perm{0, 1, 2, 3};
        Cost tsp = -1;
        do {
            Cost v = 0;
            for (int i = 0; i < n; ++i) v += C[perm[i]][perm[(i + 1) % n]];
            if (tsp < 0 || v < tsp) tsp = v;
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(oracle_tour(g, q).value == tsp);
    }
    auto zero = std::vector<std::vector<Cost>>(4, std::vector<Cost>(4, 0));
    auto [g0, q0] = gen_tsp_mee(zero);
    CHECK(oracle_tour(g0, q0).value == 0);
}

TEST_CASE("odd QAP insertion weights solve the per-column systems") {
    std::mt19937_64 rng(12);
    const int n = 3;
    auto rand_grid = [&] {
        std::vector<std::vector<Cost>> w(n, std::vector<Cost>(n));
        for (auto& row : w)
            for (Cost& x : row) x = static_cast<Cost>(rng() % 9) - 4;
        return w;
    };
    for (int it = 0; it < 6; ++it) {
        auto alpha = std::vector<std::vector<std::vector<Cost>>>{rand_grid()};
        auto beta = std::vector<std::vector<std::vector<Cost>>>{rand_grid()};
        QapToMee red = gen_qap_to_mee(alpha, beta);
        const auto& g = red.g;
        for (int j = 1; j <= n; ++j) {
            for (int i = 1; i <= n; ++i) {
                Cost lhs = red.model.a[0][g.graph().edge_id(g.u(i), g.v(j))] +
                           red.model.a[0][g.graph().edge_id(g.u(i + 1), g.v(j))];
                CHECK(lhs == red.alpha[0][i - 1][j - 1]);
                Cost lhs_b = red.model.b[0][g.graph().edge_id(g.u(i), g.v(j))] +
                             red.model.b[0][g.graph().edge_id(g.u(i + 1), g.v(j))];
                CHECK(lhs_b == red.beta[0][i - 1][j - 1]);
            }
        }
        // MEE optimum vs brute force over the 3! matchings of columns to
        // cycle edges.
        std::vector<int> sigma{0, 1, 2};
        Cost qap = 0;
        bool first = true;
        do {
            Cost sa = 0, sb = 0;
            for (int j = 0; j < n; ++j) {
                sa += red.alpha[0][sigma[j]][j];
                sb += red.beta[0][sigma[j]][j];
            }
            if (first || sa * sb < qap) qap = sa * sb;
            first = false;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        CHECK(oracle_tour(g, red.model).value == qap);
        CHECK_THROWS(gen_qap_to_mee({rand_grid(), rand_grid()}, {rand_grid()}));
    }
    auto zeros = std::vector<std::vector<std::vector<Cost>>>{
        std::vector<std::vector<Cost>>(n, std::vector<Cost>(n, 0))};
    QapToMee z = gen_qap_to_mee(zeros, zeros);
    for (Cost x : z.model.a[0]) CHECK(x == 0);
    for (Cost x : z.model.b[0]) CHECK(x == 0);
}
