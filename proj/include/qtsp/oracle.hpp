#pragma once

#include <vector>

#include "qtsp/core.hpp"
#include "qtsp/graphs.hpp"

namespace qtsp {

struct OracleResult {
    Cost value = 0;
    Tour tour;
};

// Full enumeration of the tour family, refusing (never sampling) when the
// family size exceeds the cap.  Ties break towards the canonically smallest
// tour.
OracleResult oracle_tour(const GStarGraph& g, Family f, const CostModel& model,
                         long long cap = 1'000'000);
OracleResult oracle_tour(const PVGraph& g, const CostModel& model,
                         long long cap = 1'000'000);
OracleResult oracle_tour(const MEEGraph& g, const CostModel& model,
                         long long cap = 1'000'000);

Cost eval_model(const Graph& g, const Tour& t, const CostModel& model);

struct UbqpResult {
    Cost value = 0;
    std::vector<int> x;
};

// Exact minimum of x^T Q x over binary vectors, n <= 20.
UbqpResult oracle_ubqp(const std::vector<std::vector<Cost>>& Q);

struct PartitionResult {
    bool exists = false;
    std::vector<int> side;  // 0/1 per element when a split exists
};

// Equal-sum bipartition search with witness, n <= 24.
PartitionResult oracle_partition(const std::vector<Cost>& alpha);

}  // namespace qtsp
