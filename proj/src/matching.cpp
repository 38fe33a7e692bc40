#include "qtsp/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qtsp {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

// Shortest-augmenting-path assignment with integer potentials.
std::vector<int> assignment_match(const std::vector<std::vector<Cost>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<Cost> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);  // p[j]: row matched to col j, 1-based
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<Cost> minv(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0], j1 = -1;
            Cost delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                Cost cur = a[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    std::vector<int> match(n, -1);
    for (int j = 1; j <= n; ++j) match[p[j] - 1] = j - 1;
    return match;
}

Cost grid_value(const std::vector<std::vector<Cost>>& a, const std::vector<int>& match) {
    Cost v = 0;
    for (int i = 0; i < static_cast<int>(a.size()); ++i) v += a[i][match[i]];
    return v;
}

Cost assignment_value(const std::vector<std::vector<Cost>>& a) {
    if (a.empty()) return 0;
    return grid_value(a, assignment_match(a));
}

}  // namespace

AssignmentResult solve_assignment(const AssignmentInstance& inst) {
    const int n = static_cast<int>(inst.w.size());
    if (n == 0) throw std::invalid_argument("empty assignment instance");
    for (const auto& row : inst.w)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("assignment instance must be square");
    const Cost opt = assignment_value(inst.w);

    // Fix columns row by row, keeping the value optimal, so ties always
    // resolve to the lexicographically smallest matching.
    std::vector<int> match(n, -1);
    std::vector<bool> col_used(n, false);
    Cost fixed = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (col_used[j]) continue;
            std::vector<std::vector<Cost>> rest;
            for (int i2 = i + 1; i2 < n; ++i2) {
                std::vector<Cost> row;
                for (int j2 = 0; j2 < n; ++j2)
                    if (!col_used[j2] && j2 != j) row.push_back(inst.w[i2][j2]);
                rest.push_back(std::move(row));
            }
            if (fixed + inst.w[i][j] + assignment_value(rest) == opt) {
                match[i] = j;
                col_used[j] = true;
                fixed += inst.w[i][j];
                break;
            }
        }
    }
    return {opt, std::move(match)};
}

MeeSolution solve_linear_mee(const MEEGraph& g, const std::vector<Cost>& c) {
    if (static_cast<int>(c.size()) != g.graph().num_edges())
        throw std::invalid_argument("cost vector length must match edge count");
    const int r = g.r(), s = g.s();
    AssignmentInstance inst;
    inst.w.assign(r, std::vector<Cost>(r, 0));
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= s; ++j)
            inst.w[i - 1][j - 1] = c[g.graph().edge_id(g.u(i), g.v(j))] +
                                   c[g.graph().edge_id(g.v(j), g.u(i + 1))];
        for (int j = s + 1; j <= r; ++j) inst.w[i - 1][j - 1] = c[g.cycle_edge(i)];
    }
    AssignmentResult res = solve_assignment(inst);
    std::vector<EdgeId> edges;
    for (int i = 1; i <= r; ++i) {
        int j = res.match[i - 1] + 1;
        if (j <= s) {
            edges.push_back(g.graph().edge_id(g.u(i), g.v(j)));
            edges.push_back(g.graph().edge_id(g.v(j), g.u(i + 1)));
        } else {
            edges.push_back(g.cycle_edge(i));
        }
    }
    return {res.value, tour_from_edges(g.graph(), edges)};
}

MeeSolution solve_rank1_mee_fptas(const MEEGraph& g, const std::vector<Cost>& a,
                                  const std::vector<Cost>& b, double eps) {
    const int m = g.graph().num_edges();
    if (static_cast<int>(a.size()) != m || static_cast<int>(b.size()) != m)
        throw std::invalid_argument("cost vector length must match edge count");
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    for (int e = 0; e < m; ++e)
        if (a[e] < 0 || b[e] < 0)
            throw std::invalid_argument("FPTAS requires nonnegative costs");

    constexpr Cost kScale = 1 << 20;
    MeeSolution best;
    bool have = false;
    auto consider = [&](const std::vector<Cost>& combined) {
        Tour t = solve_linear_mee(g, combined).tour;
        Cost sa = 0, sb = 0;
        for (EdgeId e : t.edge_ids(g.graph())) {
            sa += a[e];
            sb += b[e];
        }
        Cost prod = sa * sb;
        if (!have || prod < best.value) {
            have = true;
            best = {prod, std::move(t)};
        }
    };
    // Pure extremes catch the zero-sum cases the ratio grid cannot span.
    consider(a);
    consider(b);
    Cost max_a = 0, max_b = 0, min_nza = 0, min_nzb = 0;
    for (int e = 0; e < m; ++e) {
        max_a = std::max(max_a, a[e]);
        max_b = std::max(max_b, b[e]);
        if (a[e] > 0 && (min_nza == 0 || a[e] < min_nza)) min_nza = a[e];
        if (b[e] > 0 && (min_nzb == 0 || b[e] < min_nzb)) min_nzb = b[e];
    }
    const double lo = static_cast<double>(std::max<Cost>(1, min_nza)) /
                      (static_cast<double>(g.r()) * static_cast<double>(max_b + 1));
    const double hi = static_cast<double>(g.r()) * static_cast<double>(max_a + 1) /
                      static_cast<double>(std::max<Cost>(1, min_nzb));
    std::vector<Cost> combined(m);
    for (double lam = lo; lam <= hi * (1 + eps / 3); lam *= 1 + eps / 3) {
        const Cost lam_fixed = std::llround(lam * static_cast<double>(kScale));
        for (int e = 0; e < m; ++e) combined[e] = a[e] * kScale + b[e] * lam_fixed;
        consider(combined);
    }
    return best;
}

}  // namespace qtsp
