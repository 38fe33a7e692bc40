#pragma once

#include <cstddef>
#include <vector>

#include "qtsp/core.hpp"

namespace qtsp {

// Directed acyclic multigraph with per-edge 2p-dimensional weight vectors
// delta (first p coordinates a^h, last p coordinates b^h).
struct QsppEdge {
    int tail = 0;
    int head = 0;
    std::vector<Cost> delta;
};

struct QsppInstance {
    int n = 0;
    int p = 1;
    int s = 0;
    int t = 0;
    std::vector<QsppEdge> edges;
};

struct PruneResult {
    QsppInstance inst;
    std::vector<int> vertex_map;  // old id -> new id, -1 when removed
    std::vector<int> edge_map;    // old id -> new id, -1 when removed
};

// Removes vertices unreachable from s or not co-reachable to t, relabels the
// survivors in topological order with s first and t last.  Throws on cycles
// and when no s-t path exists.
PruneResult prune_and_order(const QsppInstance& inst);

struct QsppSolution {
    Cost value = 0;
    std::vector<int> path_edges;       // edge ids along the optimal path
    std::vector<std::size_t> omega_sizes;  // |Omega_j| per vertex, for inspection
};

// Pseudopolynomial label DP.  Expects a pruned, topologically ordered
// instance (prune_and_order output); verifies ordering and the label-count
// invariants on every run.
QsppSolution solve_exact(const QsppInstance& inst);

// Label-trimming FPTAS; requires nonnegative delta coordinates.  The value
// returned is the exact objective of the reconstructed path, hence >= OPT.
QsppSolution solve_fptas(const QsppInstance& inst, double eps);

// Exhaustive s-t path enumeration, guarded by a path-count cap.
QsppSolution oracle_paths(const QsppInstance& inst, std::size_t cap = 1'000'000);

Cost qspp_objective(const QsppInstance& inst, const std::vector<int>& path_edges);

}  // namespace qtsp
