#pragma once

#include <utility>
#include <vector>

#include "qtsp/core.hpp"
#include "qtsp/graphs.hpp"
#include "qtsp/qspp.hpp"

namespace qtsp {

// Cost-preserving embedding of a tour family into a QSPP instance.  Each
// QSPP arc records the tour edges of the source graph it stands for; the arc
// weight vector is the coordinate-wise sum of a^h/b^h over that list, so the
// cross/non-cross parallel arcs stay distinguishable even when their weights
// coincide.
struct ReductionMap {
    QsppInstance inst;
    std::vector<std::vector<EdgeId>> arc_edges;  // per QSPP edge
    Graph source;
    // Path objectives equal scale * tour objectives (scale > 1 only when a
    // linear term was folded; division is always exact).
    Cost scale = 1;
};

ReductionMap see_to_qspp(const GStarGraph& g, const RankP& model);
ReductionMap dee_to_qspp(const GStarGraph& g, const RankP& model);
ReductionMap pv_to_qspp(const PVGraph& g, const RankP& model);

Tour path_to_tour(const ReductionMap& map, const std::vector<int>& path_edges);

// Homogenization: QTSP(p,c) -> QTSP(p+1,H) by appending the factor pair
// (a^{p+1} = c, b^{p+1} = 1).  Because every tour has exactly n edges the
// appended product contributes n * (linear term); the original factors are
// scaled by n in compensation, so the folded objective is exactly n times
// the original and minimizers coincide.
RankP fold_linear(const RankP& model, int n_tour_edges);

// Hardness-construction instance generators.
std::pair<GStarGraph, RankP> gen_partition_see(const std::vector<Cost>& alpha);
std::pair<GStarGraph, RankP> gen_partition_dee(const std::vector<Cost>& alpha);
std::pair<PVGraph, RankP> gen_partition_pv(const std::vector<Cost>& alpha);
std::pair<GStarGraph, FullQuadratic> gen_ubqp_see(const std::vector<std::vector<Cost>>& Q);
std::pair<PVGraph, FullQuadratic> gen_ubqp_pv(const std::vector<std::vector<Cost>>& Q);
std::pair<MEEGraph, Adjacent> gen_tsp_mee(const std::vector<std::vector<Cost>>& C);

struct QapToMee {
    MEEGraph g;
    RankP model;
    // The QAP weights actually encoded (inputs pre-scaled by 2 to keep the
    // per-column linear systems integral).
    std::vector<std::vector<std::vector<Cost>>> alpha, beta;
};
QapToMee gen_qap_to_mee(const std::vector<std::vector<std::vector<Cost>>>& alpha,
                        const std::vector<std::vector<std::vector<Cost>>>& beta);

// The labelled edge carrying variable x_i in the UBQP constructions.
EdgeId ubqp_see_edge(const GStarGraph& g, int i);
EdgeId ubqp_pv_edge(const PVGraph& g, int i);

}  // namespace qtsp
