#pragma once

#include <string>
#include <vector>

#include "qtsp/core.hpp"
#include "qtsp/graphs.hpp"

namespace qtsp {

struct AdjSolution {
    Cost value = 0;
    Tour tour;
};

// Dynamic programs over the adjacent (2-path) cost model.  Each solver
// requires the model to be total over the 2-paths its family can use; a
// missing triple surfaces as an exception from Adjacent::at.
AdjSolution solve_adjacent_see(const GStarGraph& g, const Adjacent& model);
AdjSolution solve_adjacent_dee(const GStarGraph& g, const Adjacent& model);
AdjSolution solve_adjacent_pv(const PVGraph& g, const Adjacent& model);

// Linear costs on the paired-vertex graph: per-gap greedy choice.
AdjSolution solve_linear_pv(const PVGraph& g, const std::vector<Cost>& c);

struct PolytopeReport {
    bool bounds = false;       // 0 <= x_e <= 1
    bool backward = false;     // x(v_{k-1},v) + x(v'_{k-1},v) = 1
    bool forward = false;      // x(v,v_{k+1}) + x(v,v'_{k+1}) = 1
    bool first_pair = false;   // x(v_1,v'_1) = 1
    bool last_pair = false;    // x(v_K,v'_K) = 1
    std::vector<std::string> violations;
    bool satisfied() const {
        return bounds && backward && forward && first_pair && last_pair;
    }
};

PolytopeReport pv_polytope_check(const std::vector<double>& x, const PVGraph& g);

}  // namespace qtsp
