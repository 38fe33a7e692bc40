#include "qtsp/qspp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <unordered_map>

namespace qtsp {

namespace {

void check_shape(const QsppInstance& inst) {
    if (inst.n < 1 || inst.p < 1) throw std::invalid_argument("malformed QSPP instance");
    for (const auto& e : inst.edges) {
        if (e.tail < 0 || e.tail >= inst.n || e.head < 0 || e.head >= inst.n)
            throw std::invalid_argument("QSPP edge endpoint out of range");
        if (e.delta.size() != static_cast<std::size_t>(2 * inst.p))
            throw std::invalid_argument("QSPP edge weight vector has wrong dimension");
    }
}

struct VecHash {
    std::size_t operator()(const std::vector<Cost>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Cost x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct Label {
    std::vector<Cost> d;
    int pred_edge = -1;
    int pred_label = -1;
};

Cost label_objective(const std::vector<Cost>& d, int p) {
    Cost v = 0;
    for (int i = 0; i < p; ++i) v += d[i] * d[p + i];
    return v;
}

void require_ordered(const QsppInstance& inst) {
    check_shape(inst);
    if (inst.s != 0 || inst.t != inst.n - 1)
        throw std::invalid_argument("instance must be pruned and topologically ordered");
    for (const auto& e : inst.edges)
        if (e.tail >= e.head)
            throw std::invalid_argument("instance must be pruned and topologically ordered");
}

QsppSolution finish(const QsppInstance& inst, const std::vector<std::vector<Label>>& omega) {
    const int p = inst.p;
    const auto& final_set = omega[inst.t];
    if (final_set.empty()) throw std::runtime_error("no path from s to t");
    int best = 0;
    for (int i = 1; i < static_cast<int>(final_set.size()); ++i) {
        Cost vi = label_objective(final_set[i].d, p);
        Cost vb = label_objective(final_set[best].d, p);
        if (vi < vb || (vi == vb && final_set[i].d < final_set[best].d)) best = i;
    }
    QsppSolution sol;
    sol.value = label_objective(final_set[best].d, p);
    int vtx = inst.t, lab = best;
    while (vtx != inst.s) {
        const Label& L = omega[vtx][lab];
        sol.path_edges.push_back(L.pred_edge);
        lab = L.pred_label;
        vtx = inst.edges[L.pred_edge].tail;
    }
    std::reverse(sol.path_edges.begin(), sol.path_edges.end());
    for (const auto& set : omega) sol.omega_sizes.push_back(set.size());
    return sol;
}

void check_label_invariants(const QsppInstance& inst, const std::vector<std::size_t>& sizes) {
    // The sink collects every distinct vector, so |Omega_n| >= |Omega_j|;
    // the pseudopolynomial label-count bound serves as a sanity ceiling.
    for (std::size_t s : sizes)
        if (sizes.back() < s) throw std::logic_error("label monotonicity violated");
    long double ceiling = 1.0L;
    for (int h = 0; h < inst.p; ++h) {
        Cost ma = 0, mb = 0;
        for (const auto& e : inst.edges) {
            ma = std::max(ma, std::abs(e.delta[h]));
            mb = std::max(mb, std::abs(e.delta[inst.p + h]));
        }
        ceiling *= 2.0L * (inst.n - 1) * static_cast<long double>(ma) + 1.0L;
        ceiling *= 2.0L * (inst.n - 1) * static_cast<long double>(mb) + 1.0L;
    }
    for (std::size_t s : sizes)
        if (static_cast<long double>(s) > ceiling)
            throw std::logic_error("label count exceeds the pseudopolynomial ceiling");
}

}  // namespace

PruneResult prune_and_order(const QsppInstance& inst) {
    check_shape(inst);
    std::vector<std::vector<int>> out(inst.n), in(inst.n);
    for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e) {
        out[inst.edges[e].tail].push_back(e);
        in[inst.edges[e].head].push_back(e);
    }
    auto bfs = [&](int start, const std::vector<std::vector<int>>& side, bool forward) {
        std::vector<bool> vis(inst.n, false);
        std::deque<int> q{start};
        vis[start] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int e : side[v]) {
                int w = forward ? inst.edges[e].head : inst.edges[e].tail;
                if (!vis[w]) {
                    vis[w] = true;
                    q.push_back(w);
                }
            }
        }
        return vis;
    };
    std::vector<bool> fwd = bfs(inst.s, out, true), bwd = bfs(inst.t, in, false);
    if (!fwd[inst.t]) throw std::runtime_error("no path from s to t");
    std::vector<bool> keep(inst.n);
    for (int v = 0; v < inst.n; ++v) keep[v] = fwd[v] && bwd[v];

    // Kahn's algorithm restricted to the kept subgraph.
    std::vector<int> indeg(inst.n, 0);
    for (const auto& e : inst.edges)
        if (keep[e.tail] && keep[e.head]) ++indeg[e.head];
    std::deque<int> q;
    if (indeg[inst.s] != 0) throw std::runtime_error("cycle through the source");
    q.push_back(inst.s);
    std::vector<int> order;
    std::vector<bool> queued(inst.n, false);
    queued[inst.s] = true;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        order.push_back(v);
        for (int e : out[v]) {
            int w = inst.edges[e].head;
            if (!keep[w]) continue;
            if (--indeg[w] == 0 && !queued[w]) {
                queued[w] = true;
                q.push_back(w);
            }
        }
    }
    int kept_count = 0;
    for (int v = 0; v < inst.n; ++v) kept_count += keep[v];
    if (static_cast<int>(order.size()) != kept_count)
        throw std::runtime_error("cycle detected in QSPP instance");

    PruneResult res;
    res.vertex_map.assign(inst.n, -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) res.vertex_map[order[i]] = i;
    res.inst.n = kept_count;
    res.inst.p = inst.p;
    res.inst.s = res.vertex_map[inst.s];
    res.inst.t = res.vertex_map[inst.t];
    res.edge_map.assign(inst.edges.size(), -1);
    for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e) {
        const auto& ed = inst.edges[e];
        if (!keep[ed.tail] || !keep[ed.head]) continue;
        res.edge_map[e] = static_cast<int>(res.inst.edges.size());
        res.inst.edges.push_back({res.vertex_map[ed.tail], res.vertex_map[ed.head], ed.delta});
    }
    if (res.inst.s != 0 || res.inst.t != res.inst.n - 1)
        throw std::logic_error("topological relabeling failed to pin s and t");
    return res;
}

QsppSolution solve_exact(const QsppInstance& inst) {
    require_ordered(inst);
    const int p = inst.p;
    std::vector<std::vector<int>> in(inst.n);
    for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e)
        in[inst.edges[e].head].push_back(e);

    std::vector<std::vector<Label>> omega(inst.n);
    omega[0].push_back({std::vector<Cost>(2 * p, 0), -1, -1});
    for (int j = 1; j < inst.n; ++j) {
        std::unordered_map<std::vector<Cost>, int, VecHash> distinct;
        for (int e : in[j]) {
            const auto& ed = inst.edges[e];
            for (int li = 0; li < static_cast<int>(omega[ed.tail].size()); ++li) {
                std::vector<Cost> d = omega[ed.tail][li].d;
                for (int h = 0; h < 2 * p; ++h) d[h] += ed.delta[h];
                if (distinct.emplace(d, static_cast<int>(omega[j].size())).second)
                    omega[j].push_back({std::move(d), e, li});
            }
        }
    }
    QsppSolution sol = finish(inst, omega);
    check_label_invariants(inst, sol.omega_sizes);
    return sol;
}

QsppSolution solve_fptas(const QsppInstance& inst, double eps) {
    require_ordered(inst);
    if (eps <= 0) throw std::invalid_argument("eps must be positive");
    for (const auto& e : inst.edges)
        for (Cost x : e.delta)
            if (x < 0)
                throw std::invalid_argument(
                    "FPTAS requires nonnegative weights; use solve_exact instead");
    const int p = inst.p;
    const double gamma = std::min(0.5, eps / (8.0 * p * inst.n));
    const double log_base = std::log1p(gamma);
    auto bucket = [&](Cost x) {
        return static_cast<long long>(std::floor(std::log1p(static_cast<double>(x)) / log_base));
    };

    std::vector<std::vector<int>> in(inst.n);
    for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e)
        in[inst.edges[e].head].push_back(e);

    std::vector<std::vector<Label>> omega(inst.n);
    omega[0].push_back({std::vector<Cost>(2 * p, 0), -1, -1});
    for (int j = 1; j < inst.n; ++j) {
        std::unordered_map<std::vector<Cost>, int, VecHash> cells;  // bucket key -> label index
        auto coord_sum = [](const std::vector<Cost>& d) {
            Cost s = 0;
            for (Cost x : d) s += x;
            return s;
        };
        for (int e : in[j]) {
            const auto& ed = inst.edges[e];
            for (int li = 0; li < static_cast<int>(omega[ed.tail].size()); ++li) {
                std::vector<Cost> d = omega[ed.tail][li].d;
                for (int h = 0; h < 2 * p; ++h) d[h] += ed.delta[h];
                std::vector<Cost> key(2 * p);
                for (int h = 0; h < 2 * p; ++h) key[h] = bucket(d[h]);
                auto [it, fresh] = cells.emplace(std::move(key), static_cast<int>(omega[j].size()));
                if (fresh) {
                    omega[j].push_back({std::move(d), e, li});
                } else {
                    Label& cur = omega[j][it->second];
                    if (coord_sum(d) < coord_sum(cur.d) ||
                        (coord_sum(d) == coord_sum(cur.d) && d < cur.d)) {
                        cur = {std::move(d), e, li};
                    }
                }
            }
        }
    }
    return finish(inst, omega);
}

QsppSolution oracle_paths(const QsppInstance& inst, std::size_t cap) {
    require_ordered(inst);
    std::vector<std::vector<int>> out(inst.n);
    for (int e = 0; e < static_cast<int>(inst.edges.size()); ++e)
        out[inst.edges[e].tail].push_back(e);

    QsppSolution sol;
    bool found = false;
    std::size_t count = 0;
    std::vector<int> path;
    std::vector<Cost> acc(2 * inst.p, 0);
    std::function<void(int)> dfs = [&](int v) {
        if (v == inst.t) {
            if (++count > cap) throw std::runtime_error("oracle path-count cap exceeded");
            Cost val = label_objective(acc, inst.p);
            if (!found || val < sol.value) {
                found = true;
                sol.value = val;
                sol.path_edges = path;
            }
            return;
        }
        for (int e : out[v]) {
            const auto& ed = inst.edges[e];
            path.push_back(e);
            for (int h = 0; h < 2 * inst.p; ++h) acc[h] += ed.delta[h];
            dfs(ed.head);
            for (int h = 0; h < 2 * inst.p; ++h) acc[h] -= ed.delta[h];
            path.pop_back();
        }
    };
    dfs(inst.s);
    if (!found) throw std::runtime_error("no path from s to t");
    return sol;
}

Cost qspp_objective(const QsppInstance& inst, const std::vector<int>& path_edges) {
    std::vector<Cost> acc(2 * inst.p, 0);
    for (int e : path_edges)
        for (int h = 0; h < 2 * inst.p; ++h) acc[h] += inst.edges.at(e).delta[h];
    return label_objective(acc, inst.p);
}

}  // namespace qtsp
