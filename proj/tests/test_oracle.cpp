#include <doctest.h>

#include <algorithm>

#include "qtsp/bench.hpp"
#include "qtsp/oracle.hpp"
#include "qtsp/reductions.hpp"

using namespace qtsp;

TEST_CASE("oracle_tour: zero costs, canonical tie-break, hard cap") {
    GStarGraph g({3, 3});
    LinearCosts zero{std::vector<Cost>(g.graph().num_edges(), 0)};
    OracleResult res = oracle_tour(g, Family::SEE, zero);
    CHECK(res.value == 0);
    auto tours = enumerate_see(g);
    CHECK(res.tour == *std::min_element(tours.begin(), tours.end()));

    auto [pg, pm] = gen_partition_see({1, 2, 3});
    CHECK(oracle_tour(pg, Family::SEE, pm).value == 0);

    MEEGraph big(10, 9);  // 10!/1! > 1e6
    LinearCosts bz{std::vector<Cost>(big.graph().num_edges(), 0)};
    CHECK_THROWS_AS(oracle_tour(big, bz), std::runtime_error);
    CHECK_THROWS(oracle_tour(g, Family::PV, zero));
}

TEST_CASE("oracle_ubqp enumerates binary vectors") {
    auto zero = std::vector<std::vector<Cost>>(3, std::vector<Cost>(3, 0));
    UbqpResult rz = oracle_ubqp(zero);
    CHECK(rz.value == 0);
    CHECK(rz.x == std::vector<int>{0, 0, 0});

    auto ident = std::vector<std::vector<Cost>>{{1, 0}, {0, 1}};
    CHECK(oracle_ubqp(ident).value == 0);

    auto neg = std::vector<std::vector<Cost>>{{-2, 1}, {1, -1}};
    // Candidates: 0, -2, -1, -2+1+1-1 = -1; minimum -2 at x = (1,0).
    UbqpResult rn = oracle_ubqp(neg);
    CHECK(rn.value == -2);
    CHECK(rn.x == std::vector<int>{1, 0});

    CHECK_THROWS(oracle_ubqp(std::vector<std::vector<Cost>>(21, std::vector<Cost>(21, 0))));
}

TEST_CASE("oracle_partition finds witnesses") {
    PartitionResult yes = oracle_partition({1, 2, 3});
    CHECK(yes.exists);
    Cost s0 = 0, s1 = 0;
    for (std::size_t i = 0; i < 3; ++i)
        (yes.side[i] ? s1 : s0) += std::vector<Cost>{1, 2, 3}[i];
    CHECK(s0 == s1);

    CHECK_FALSE(oracle_partition({1, 1, 3}).exists);
    CHECK(oracle_partition({}).exists);
    CHECK_THROWS(oracle_partition(std::vector<Cost>(25, 1)));
}
