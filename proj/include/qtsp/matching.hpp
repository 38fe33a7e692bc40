#pragma once

#include <vector>

#include "qtsp/core.hpp"
#include "qtsp/graphs.hpp"

namespace qtsp {

struct AssignmentInstance {
    std::vector<std::vector<Cost>> w;  // square integer grid
};

struct AssignmentResult {
    Cost value = 0;
    std::vector<int> match;  // row -> column
};

// O(n^3) potential-based assignment; ties broken towards the
// lexicographically smallest row->column matching.
AssignmentResult solve_assignment(const AssignmentInstance& inst);

struct MeeSolution {
    Cost value = 0;
    Tour tour;
};

// Linear TSP over the MEE family via an r x r assignment: rows are cycle
// edges, columns are inserted vertices plus r-s dummies that stand for
// keeping the cycle edge.  The assignment value is the tour cost directly.
MeeSolution solve_linear_mee(const MEEGraph& g, const std::vector<Cost>& c);

// (sum a)(sum b) over MEE tours, a,b >= 0, within factor 1+eps.
MeeSolution solve_rank1_mee_fptas(const MEEGraph& g, const std::vector<Cost>& a,
                                  const std::vector<Cost>& b, double eps);

}  // namespace qtsp
