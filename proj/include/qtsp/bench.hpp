#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtsp/core.hpp"
#include "qtsp/graphs.hpp"

namespace qtsp {

struct BenchRow {
    std::string family;
    int n = 0;
    std::string solver;
    Cost value = 0;
    long long micros = 0;
};

// Deterministic random models with costs in [lo, hi].
Adjacent random_adjacent(const Graph& g, std::uint64_t seed, Cost lo, Cost hi);
std::vector<Cost> random_costs(int m, std::uint64_t seed, Cost lo, Cost hi);
RankP random_rank(int m, int p, std::uint64_t seed, Cost lo, Cost hi);
FullQuadratic random_full(int m, std::uint64_t seed, Cost lo, Cost hi);

// Adjacent-DP timings on a doubling ladder of PV and layered graphs, for
// the scaling sanity check.
std::vector<BenchRow> run_scaling_bench(std::uint64_t seed);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace qtsp
