#include "qtsp/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace qtsp {

namespace {

bool has_linear_part(const RankP& model) {
    return std::any_of(model.c.begin(), model.c.end(), [](Cost c) { return c != 0; });
}

std::vector<Cost> delta_for(const RankP& model, const std::vector<EdgeId>& edges) {
    std::vector<Cost> d(2 * model.p, 0);
    for (EdgeId e : edges) {
        for (int h = 0; h < model.p; ++h) {
            d[h] += model.a[h][e];
            d[model.p + h] += model.b[h][e];
        }
    }
    return d;
}

void add_arc(ReductionMap& map, const RankP& model, int tail, int head,
             std::vector<EdgeId> edges) {
    map.inst.edges.push_back({tail, head, delta_for(model, edges)});
    map.arc_edges.push_back(std::move(edges));
}

}  // namespace

RankP fold_linear(const RankP& model, int n_tour_edges) {
    RankP out = model;
    out.p = model.p + 1;
    for (auto& arr : out.a)
        for (Cost& x : arr) x *= n_tour_edges;
    out.a.push_back(model.c);
    out.b.emplace_back(model.c.size(), 1);
    std::fill(out.c.begin(), out.c.end(), 0);
    return out;
}

ReductionMap see_to_qspp(const GStarGraph& g, const RankP& raw) {
    const bool folded = has_linear_part(raw);
    const RankP model = folded ? fold_linear(raw, g.graph().num_vertices()) : raw;
    const int m = g.m();
    // Vertex layout (already topological): s, then per cycle V^k followed by
    // its copy, t last.
    std::vector<int> base(m + 1);
    int next = 1;
    for (int k = 1; k <= m; ++k) {
        base[k] = next;
        next += 2 * g.r(k);
    }
    auto vnode = [&](int k, int i) { return base[k] + ((i - 1) % g.r(k) + g.r(k)) % g.r(k); };
    auto hnode = [&](int k, int i) {
        return base[k] + g.r(k) + ((i - 1) % g.r(k) + g.r(k)) % g.r(k);
    };
    ReductionMap map{{next + 1, model.p, 0, next, {}}, {}, g.graph()};
    if (folded) map.scale = g.graph().num_vertices();
    for (int j = 1; j <= g.r(1); ++j)
        add_arc(map, model, 0, vnode(1, j), {g.graph().edge_id(g.tip(), g.vertex(1, j))});
    for (int k = 1; k <= m; ++k) {
        for (int i = 1; i <= g.r(k); ++i) {
            std::vector<EdgeId> kept;
            for (int l = 1; l <= g.r(k); ++l)
                if (l != i) kept.push_back(g.cycle_edge(k, l));
            // Ejecting e^k_i: enter at v_i leave at v_{i+1}, or the reverse.
            add_arc(map, model, vnode(k, i), hnode(k, i + 1), kept);
            add_arc(map, model, vnode(k, i + 1), hnode(k, i), kept);
        }
        if (k < m) {
            for (int i = 1; i <= g.r(k); ++i)
                for (int j = 1; j <= g.r(k + 1); ++j)
                    add_arc(map, model, hnode(k, i), vnode(k + 1, j),
                            {g.graph().edge_id(g.vertex(k, i), g.vertex(k + 1, j))});
        }
    }
    for (int i = 1; i <= g.r(m); ++i)
        add_arc(map, model, hnode(m, i), map.inst.t,
                {g.graph().edge_id(g.tip(), g.vertex(m, i))});
    return map;
}

ReductionMap dee_to_qspp(const GStarGraph& g, const RankP& raw) {
    const bool folded = has_linear_part(raw);
    const RankP model = folded ? fold_linear(raw, g.graph().num_vertices()) : raw;
    const int m = g.m();
    // Vertex layout: t1, then per cycle k < m the layer E(k) followed by its
    // copy, then E(m), t2 last.
    std::vector<int> base(m + 1);
    int next = 1;
    for (int k = 1; k < m; ++k) {
        base[k] = next;
        next += 2 * g.r(k);
    }
    base[m] = next;
    next += g.r(m);
    auto enode = [&](int k, int i) { return base[k] + ((i - 1) % g.r(k) + g.r(k)) % g.r(k); };
    auto hnode = [&](int k, int i) {
        return base[k] + g.r(k) + ((i - 1) % g.r(k) + g.r(k)) % g.r(k);
    };
    ReductionMap map{{next + 1, model.p, 0, next, {}}, {}, g.graph()};
    if (folded) map.scale = g.graph().num_vertices();
    for (int i = 1; i <= g.r(1); ++i)
        add_arc(map, model, 0, enode(1, i),
                {g.graph().edge_id(g.tip(), g.vertex(1, i)),
                 g.graph().edge_id(g.tip(), g.vertex(1, i + 1))});
    for (int k = 1; k < m; ++k) {
        for (int i = 1; i <= g.r(k); ++i) {
            for (int j = 1; j <= g.r(k); ++j) {
                if (i == j) continue;
                std::vector<EdgeId> kept;
                for (int l = 1; l <= g.r(k); ++l)
                    if (l != i && l != j) kept.push_back(g.cycle_edge(k, l));
                add_arc(map, model, enode(k, i), hnode(k, j), std::move(kept));
            }
        }
        for (int j = 1; j <= g.r(k); ++j) {
            VertexId u1 = g.vertex(k, j), u2 = g.vertex(k, j + 1);
            for (int s = 1; s <= g.r(k + 1); ++s) {
                VertexId v1 = g.vertex(k + 1, s), v2 = g.vertex(k + 1, s + 1);
                add_arc(map, model, hnode(k, j), enode(k + 1, s),
                        {g.graph().edge_id(u1, v1), g.graph().edge_id(u2, v2)});
                add_arc(map, model, hnode(k, j), enode(k + 1, s),
                        {g.graph().edge_id(u1, v2), g.graph().edge_id(u2, v1)});
            }
        }
    }
    // C(m) keeps everything except its entry edge; the remainder rides on
    // the sink arcs so the path objective matches the tour objective.
    for (int i = 1; i <= g.r(m); ++i) {
        std::vector<EdgeId> kept;
        for (int l = 1; l <= g.r(m); ++l)
            if (l != i) kept.push_back(g.cycle_edge(m, l));
        add_arc(map, model, enode(m, i), map.inst.t, std::move(kept));
    }
    return map;
}

ReductionMap pv_to_qspp(const PVGraph& g, const RankP& raw) {
    const bool folded = has_linear_part(raw);
    const RankP model = folded ? fold_linear(raw, g.graph().num_vertices()) : raw;
    const int K = g.pairs();
    ReductionMap map{{K, model.p, 0, K - 1, {}}, {}, g.graph()};
    if (folded) map.scale = g.graph().num_vertices();
    for (int k = 1; k < K; ++k) {
        std::vector<EdgeId> straight = {g.graph().edge_id(g.v(k), g.v(k + 1)),
                                        g.graph().edge_id(g.vp(k), g.vp(k + 1))};
        std::vector<EdgeId> cross = {g.graph().edge_id(g.v(k), g.vp(k + 1)),
                                     g.graph().edge_id(g.vp(k), g.v(k + 1))};
        if (k == 1) {
            EdgeId pair1 = g.graph().edge_id(g.v(1), g.vp(1));
            straight.push_back(pair1);
            cross.push_back(pair1);
        }
        if (k == K - 1) {
            EdgeId pairK = g.graph().edge_id(g.v(K), g.vp(K));
            straight.push_back(pairK);
            cross.push_back(pairK);
        }
        add_arc(map, model, k - 1, k, std::move(straight));
        add_arc(map, model, k - 1, k, std::move(cross));
    }
    return map;
}

Tour path_to_tour(const ReductionMap& map, const std::vector<int>& path_edges) {
    std::vector<EdgeId> edges;
    for (int e : path_edges) {
        const auto& frag = map.arc_edges.at(e);
        edges.insert(edges.end(), frag.begin(), frag.end());
    }
    return tour_from_edges(map.source, edges);
}

namespace {

RankP squared_model(std::vector<Cost> a) {
    RankP model;
    model.p = 1;
    model.b.push_back(a);
    model.a.push_back(std::move(a));
    model.c.assign(model.a[0].size(), 0);
    return model;
}

}  // namespace

std::pair<GStarGraph, RankP> gen_partition_see(const std::vector<Cost>& alpha) {
    const int n = static_cast<int>(alpha.size());
    if (n < 2) throw std::invalid_argument("partition needs at least two numbers");
    GStarGraph g(std::vector<int>(n, 3));
    // Per cycle: v^k_1 = v_y, v^k_2 = v_u, v^k_3 = v_w.
    Cost M = 1;
    for (Cost x : alpha) M += std::llabs(x);
    std::vector<Cost> a(g.graph().num_edges(), 0);
    for (int k = 1; k <= n; ++k) {
        a[g.cycle_edge(k, 1)] = alpha[k - 1];   // (v_y, v_u)
        a[g.cycle_edge(k, 3)] = -alpha[k - 1];  // (v_w, v_y)
        if (k < n) {
            a[g.graph().edge_id(g.vertex(k, 2), g.vertex(k + 1, 1))] = -M;
            a[g.graph().edge_id(g.vertex(k, 3), g.vertex(k + 1, 1))] = -M;
        }
    }
    // Entering C(1) anywhere but v_1 must cost on the M scale, otherwise a
    // small alpha sum can absorb the penalty and fake a zero optimum.
    a[g.graph().edge_id(g.tip(), g.vertex(1, 1))] = n * M;
    a[g.graph().edge_id(g.tip(), g.vertex(1, 2))] = (n + 1) * M;
    a[g.graph().edge_id(g.tip(), g.vertex(1, 3))] = (n + 1) * M;
    a[g.graph().edge_id(g.tip(), g.vertex(n, 2))] = -M;
    a[g.graph().edge_id(g.tip(), g.vertex(n, 3))] = -M;
    return {std::move(g), squared_model(std::move(a))};
}

std::pair<GStarGraph, RankP> gen_partition_dee(const std::vector<Cost>& alpha) {
    const int n = static_cast<int>(alpha.size());
    if (n < 2) throw std::invalid_argument("partition needs at least two numbers");
    GStarGraph g(std::vector<int>(n, 3));
    std::vector<Cost> sc(alpha);
    for (Cost& x : sc) x *= 4;
    Cost sum = 0, mx = 0;
    for (Cost x : sc) {
        sum += std::llabs(x);
        mx = std::max(mx, std::llabs(x));
    }
    const Cost M = 1 + n * sum + mx;
    std::vector<Cost> a(g.graph().num_edges(), 0);
    // A DEE tour keeps exactly one edge of each cycle before the last, so
    // those cycles offer {alpha_k, -alpha_k, M}.  The last cycle keeps two
    // edges; its weights are arranged so the two cheap options sum to
    // +alpha_n or -alpha_n while anything keeping the -M edge pair is
    // penalized.
    for (int k = 1; k < n; ++k) {
        a[g.cycle_edge(k, 1)] = sc[k - 1];
        a[g.cycle_edge(k, 2)] = -sc[k - 1];
        a[g.cycle_edge(k, 3)] = M;
    }
    a[g.cycle_edge(n, 1)] = M + sc[n - 1];
    a[g.cycle_edge(n, 2)] = -M;
    a[g.cycle_edge(n, 3)] = M - sc[n - 1];
    return {std::move(g), squared_model(std::move(a))};
}

std::pair<PVGraph, RankP> gen_partition_pv(const std::vector<Cost>& alpha) {
    const int n = static_cast<int>(alpha.size());
    if (n < 1) throw std::invalid_argument("partition needs at least one number");
    PVGraph g(2 * (n + 1));
    std::vector<Cost> a(g.graph().num_edges(), 0);
    for (int i = 1; i <= n; ++i) {
        a[g.graph().edge_id(g.v(i), g.v(i + 1))] = alpha[i - 1];
        a[g.graph().edge_id(g.v(i), g.vp(i + 1))] = -alpha[i - 1];
    }
    return {std::move(g), squared_model(std::move(a))};
}

EdgeId ubqp_see_edge(const GStarGraph& g, int i) { return g.cycle_edge(i, 1); }
EdgeId ubqp_pv_edge(const PVGraph& g, int i) { return g.graph().edge_id(g.v(i), g.v(i + 1)); }

std::pair<GStarGraph, FullQuadratic> gen_ubqp_see(const std::vector<std::vector<Cost>>& Q) {
    const int n = static_cast<int>(Q.size());
    if (n < 2) throw std::invalid_argument("UBQP instance needs at least two variables");
    GStarGraph g(std::vector<int>(n, 3));
    FullQuadratic f;
    f.q.assign(g.graph().num_edges(), std::vector<Cost>(g.graph().num_edges(), 0));
    f.c.assign(g.graph().num_edges(), 0);
    for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(Q[i - 1].size()) != n) throw std::invalid_argument("Q must be square");
        for (int j = 1; j <= n; ++j)
            f.q[ubqp_see_edge(g, i)][ubqp_see_edge(g, j)] = Q[i - 1][j - 1];
    }
    return {std::move(g), std::move(f)};
}

std::pair<PVGraph, FullQuadratic> gen_ubqp_pv(const std::vector<std::vector<Cost>>& Q) {
    const int n = static_cast<int>(Q.size());
    if (n < 1) throw std::invalid_argument("UBQP instance needs at least one variable");
    PVGraph g(2 * (n + 1));
    FullQuadratic f;
    f.q.assign(g.graph().num_edges(), std::vector<Cost>(g.graph().num_edges(), 0));
    f.c.assign(g.graph().num_edges(), 0);
    for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(Q[i - 1].size()) != n) throw std::invalid_argument("Q must be square");
        for (int j = 1; j <= n; ++j)
            f.q[ubqp_pv_edge(g, i)][ubqp_pv_edge(g, j)] = Q[i - 1][j - 1];
    }
    return {std::move(g), std::move(f)};
}

std::pair<MEEGraph, Adjacent> gen_tsp_mee(const std::vector<std::vector<Cost>>& C) {
    const int n = static_cast<int>(C.size());
    if (n < 3) throw std::invalid_argument("TSP instance needs at least three cities");
    MEEGraph g(n, n);
    Adjacent q;
    // Cost on the 2-path v_j - u_i - v_k; in the insertion tour the vertex
    // between v_{pi(i-1)} and v_{pi(i)} is u_i, so the tour collects exactly
    // the TSP edge costs of pi.
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (static_cast<int>(C[j - 1].size()) != n)
                throw std::invalid_argument("C must be square");
            for (int k = j + 1; k <= n; ++k) q.set(g.v(j), g.u(i), g.v(k), C[j - 1][k - 1]);
        }
        for (int j = 1; j <= n; ++j) q.set(g.u(i), g.v(j), g.u(i + 1), 0);
    }
    // Zero-fill the remaining 2-paths so the model is total; with r = s no
    // tour retains a cycle edge, so they never contribute.
    for (VertexId v = 0; v < g.graph().num_vertices(); ++v) {
        const auto& nb = g.graph().neighbours(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!q.has(nb[i].first, v, nb[j].first)) q.set(nb[i].first, v, nb[j].first, 0);
    }
    return {std::move(g), std::move(q)};
}

QapToMee gen_qap_to_mee(const std::vector<std::vector<std::vector<Cost>>>& alpha,
                        const std::vector<std::vector<std::vector<Cost>>>& beta) {
    if (alpha.empty() || alpha.size() != beta.size())
        throw std::invalid_argument("alpha and beta need the same positive rank");
    const int p = static_cast<int>(alpha.size());
    const int n = static_cast<int>(alpha[0].size());
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("the insertion weight system needs odd n >= 3");
    QapToMee out{MEEGraph(n, n), {}, {}, {}};
    out.model.p = p;
    const int m = out.g.graph().num_edges();
    out.model.c.assign(m, 0);
    auto solve_side = [&](const std::vector<std::vector<std::vector<Cost>>>& w,
                          std::vector<std::vector<Cost>>& arrays,
                          std::vector<std::vector<std::vector<Cost>>>& scaled) {
        for (int h = 0; h < p; ++h) {
            if (static_cast<int>(w[h].size()) != n)
                throw std::invalid_argument("QAP weight grids must be n x n");
            std::vector<Cost> arr(m, 0);
            scaled.emplace_back(n, std::vector<Cost>(n, 0));
            for (int j = 1; j <= n; ++j) {
                // a_{u_i,v_j} + a_{u_{i+1},v_j} = alpha_{ij} around the odd
                // cycle; the alternating sum pins a_{u_1,v_j}.
                Cost a1 = 0;
                for (int i = 1; i <= n; ++i) {
                    if (static_cast<int>(w[h][i - 1].size()) != n)
                        throw std::invalid_argument("QAP weight grids must be n x n");
                    Cost sc = 2 * w[h][i - 1][j - 1];
                    scaled.back()[i - 1][j - 1] = sc;
                    a1 += (i % 2 == 1) ? sc : -sc;
                }
                a1 /= 2;
                Cost cur = a1;
                for (int i = 1; i <= n; ++i) {
                    arr[out.g.graph().edge_id(out.g.u(i), out.g.v(j))] = cur;
                    cur = scaled.back()[i - 1][j - 1] - cur;
                }
            }
            arrays.push_back(std::move(arr));
        }
    };
    solve_side(alpha, out.model.a, out.alpha);
    solve_side(beta, out.model.b, out.beta);
    return out;
}

}  // namespace qtsp
