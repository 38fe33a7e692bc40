#include "qtsp/adjacent.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

namespace qtsp {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

// A chain through cycle k obtained by ejecting edge i: the remaining path,
// read from one end to the other.  Two orientations per ejected edge.
struct Chain {
    std::vector<VertexId> seq;
    Cost internal = 0;  // triples centered at interior chain vertices
};

std::vector<Chain> cycle_chains(const GStarGraph& g, int k, const Adjacent& q) {
    std::vector<Chain> out;
    const int r = g.r(k);
    for (int i = 1; i <= r; ++i) {
        Chain c;
        for (int l = 1; l <= r; ++l) c.seq.push_back(g.vertex(k, i + l));
        for (int j = 1; j + 1 < r; ++j)
            c.internal += q.at(c.seq[j - 1], c.seq[j], c.seq[j + 1]);
        Chain rev = c;
        std::reverse(rev.seq.begin(), rev.seq.end());
        out.push_back(std::move(c));
        out.push_back(std::move(rev));
    }
    return out;
}

}  // namespace

AdjSolution solve_adjacent_see(const GStarGraph& g, const Adjacent& q) {
    const int m = g.m();
    std::vector<std::vector<Chain>> chains;
    for (int k = 1; k <= m; ++k) chains.push_back(cycle_chains(g, k, q));

    Cost best = kInf;
    std::vector<int> best_pick;
    // The closing triples at the tip couple the last cycle to the first, so
    // the chain DP runs once per first-cycle chain.
    for (int c1 = 0; c1 < static_cast<int>(chains[0].size()); ++c1) {
        const Chain& first = chains[0][c1];
        std::vector<Cost> cur(chains[0].size(), kInf);
        std::vector<std::vector<int>> pred(m);
        cur[c1] = first.internal + q.at(g.tip(), first.seq.front(), first.seq[1]);
        for (int k = 1; k < m; ++k) {
            std::vector<Cost> nxt(chains[k].size(), kInf);
            pred[k].assign(chains[k].size(), -1);
            for (int a = 0; a < static_cast<int>(chains[k - 1].size()); ++a) {
                if (cur[a] >= kInf) continue;
                const Chain& ca = chains[k - 1][a];
                VertexId exit = ca.seq.back(), pre = ca.seq[ca.seq.size() - 2];
                for (int b = 0; b < static_cast<int>(chains[k].size()); ++b) {
                    const Chain& cb = chains[k][b];
                    Cost v = cur[a] + cb.internal + q.at(pre, exit, cb.seq.front()) +
                             q.at(exit, cb.seq.front(), cb.seq[1]);
                    if (v < nxt[b]) {
                        nxt[b] = v;
                        pred[k][b] = a;
                    }
                }
            }
            cur = std::move(nxt);
        }
        for (int b = 0; b < static_cast<int>(chains[m - 1].size()); ++b) {
            if (cur[b] >= kInf) continue;
            const Chain& cb = chains[m - 1][b];
            Cost v = cur[b] + q.at(cb.seq[cb.seq.size() - 2], cb.seq.back(), g.tip()) +
                     q.at(cb.seq.back(), g.tip(), first.seq.front());
            if (v < best) {
                best = v;
                best_pick.assign(m, -1);
                best_pick[m - 1] = b;
                for (int k = m - 1; k > 0; --k) best_pick[k - 1] = pred[k][best_pick[k]];
            }
        }
    }
    std::vector<VertexId> cycle{g.tip()};
    for (int k = 0; k < m; ++k)
        for (VertexId v : chains[k][best_pick[k]].seq) cycle.push_back(v);
    return {best, Tour(std::move(cycle))};
}

namespace {

// DEE state while entering cycle k: the entry edge (v_s, v_{s+1}) is ejected
// and its endpoints hang off external vertices w0 (at v_s) and w1 (at
// v_{s+1}); for k = 1 both are the tip.
struct DeeState {
    int s;
    VertexId w0, w1;
    bool operator<(const DeeState& o) const {
        return std::tie(s, w0, w1) < std::tie(o.s, o.w0, o.w1);
    }
};

struct DeeEntry {
    Cost value = kInf;
    DeeState from{0, -1, -1};
    int exit_edge = -1;  // ejected exit edge of the previous cycle
};

// Triples centered at the vertices of cycle k once its full local structure
// is known: entry edge s with external attachments (w0, w1), exit edge j
// with external attachments x0 (at v_j) and x1 (at v_{j+1}).
Cost cycle_triples(const GStarGraph& g, const Adjacent& q, int k, int s, VertexId w0,
                   VertexId w1, int j, VertexId x0, VertexId x1) {
    const int r = g.r(k);
    Cost total = 0;
    auto arc = [&](VertexId head, int lo, int hi, VertexId tail) {
        // Positions lo..hi (forward around the cycle), flanked by the
        // external vertices head and tail.
        std::vector<VertexId> seq{head};
        for (int i = lo; i <= hi; ++i) seq.push_back(g.vertex(k, i));
        seq.push_back(tail);
        for (std::size_t t = 1; t + 1 < seq.size(); ++t)
            total += q.at(seq[t - 1], seq[t], seq[t + 1]);
    };
    // Strand from v_{s+1} forward to v_j; strand from v_{j+1} forward to v_s.
    int len1 = ((j - (s + 1)) % r + r) % r;  // hops from s+1 to j
    arc(w1, s + 1, s + 1 + len1, x0);
    int len2 = ((s - (j + 1)) % r + r) % r;
    arc(x1, j + 1, j + 1 + len2, w0);
    return total;
}

}  // namespace

AdjSolution solve_adjacent_dee(const GStarGraph& g, const Adjacent& q) {
    const int m = g.m();
    std::vector<std::map<DeeState, DeeEntry>> layers(m + 1);
    for (int s = 1; s <= g.r(1); ++s) {
        DeeEntry e;
        e.value = q.at(g.vertex(1, s), g.tip(), g.vertex(1, s + 1));
        layers[1][{s, g.tip(), g.tip()}] = e;
    }
    for (int k = 1; k < m; ++k) {
        for (const auto& [st, en] : layers[k]) {
            for (int j = 1; j <= g.r(k); ++j) {
                if (j == st.s) continue;
                VertexId e0 = g.vertex(k, j), e1 = g.vertex(k, j + 1);
                for (int s2 = 1; s2 <= g.r(k + 1); ++s2) {
                    VertexId n0 = g.vertex(k + 1, s2), n1 = g.vertex(k + 1, s2 + 1);
                    for (int patch = 0; patch < 2; ++patch) {
                        VertexId x0 = patch ? n1 : n0;  // attached to v_j
                        VertexId x1 = patch ? n0 : n1;  // attached to v_{j+1}
                        Cost v = en.value +
                                 cycle_triples(g, q, k, st.s, st.w0, st.w1, j, x0, x1);
                        DeeState ns{s2, patch ? e1 : e0, patch ? e0 : e1};
                        auto& slot = layers[k + 1][ns];
                        if (v < slot.value) slot = {v, st, j};
                    }
                }
            }
        }
    }
    Cost best = kInf;
    DeeState best_st{0, -1, -1};
    for (const auto& [st, en] : layers[m]) {
        // Cycle m keeps everything but its entry edge: one chain from
        // v_{s+1} around to v_s.
        std::vector<VertexId> seq{st.w1};
        for (int l = 1; l <= g.r(m); ++l) seq.push_back(g.vertex(m, st.s + l));
        seq.push_back(st.w0);
        Cost v = en.value;
        for (std::size_t t = 1; t + 1 < seq.size(); ++t)
            v += q.at(seq[t - 1], seq[t], seq[t + 1]);
        if (v < best) {
            best = v;
            best_st = st;
        }
    }

    // Rebuild the edge set by walking the predecessor chain.
    std::vector<EdgeId> edges;
    DeeState st = best_st;
    {
        std::vector<EdgeId> kept;
        for (int l = 1; l <= g.r(m); ++l)
            if (l != st.s) kept.push_back(g.cycle_edge(m, l));
        edges.insert(edges.end(), kept.begin(), kept.end());
    }
    for (int k = m; k > 1; --k) {
        const DeeEntry& en = layers[k].at(st);
        DeeState prev = en.from;
        int j = en.exit_edge;
        edges.push_back(g.graph().edge_id(st.w0, g.vertex(k, st.s)));
        edges.push_back(g.graph().edge_id(st.w1, g.vertex(k, st.s + 1)));
        for (int l = 1; l <= g.r(k - 1); ++l)
            if (l != prev.s && l != j) edges.push_back(g.cycle_edge(k - 1, l));
        st = prev;
    }
    edges.push_back(g.graph().edge_id(g.tip(), g.vertex(1, st.s)));
    edges.push_back(g.graph().edge_id(g.tip(), g.vertex(1, st.s + 1)));
    return {best, tour_from_edges(g.graph(), edges)};
}

namespace {

// Gap bit 0: straight edges (v_k,v_{k+1}), (v'_k,v'_{k+1}); bit 1: crossed.
VertexId right_mate(const PVGraph& g, int k, bool prime, int bit) {
    bool p = prime ^ (bit == 1);
    return p ? g.vp(k + 1) : g.v(k + 1);
}

VertexId left_mate(const PVGraph& g, int k, bool prime, int bit) {
    bool p = prime ^ (bit == 1);
    return p ? g.vp(k - 1) : g.v(k - 1);
}

}  // namespace

AdjSolution solve_adjacent_pv(const PVGraph& g, const Adjacent& q) {
    const int K = g.pairs();
    auto pair_cost = [&](int k, int bl, int br) {
        // Triples centered at v_k and v'_k; bl/br are the bits of the gaps
        // on each side, -1 when the side is the pair edge.
        VertexId lv = bl < 0 ? g.vp(k) : left_mate(g, k, false, bl);
        VertexId rv = br < 0 ? g.vp(k) : right_mate(g, k, false, br);
        VertexId lp = bl < 0 ? g.v(k) : left_mate(g, k, true, bl);
        VertexId rp = br < 0 ? g.v(k) : right_mate(g, k, true, br);
        return q.at(lv, g.v(k), rv) + q.at(lp, g.vp(k), rp);
    };
    std::vector<std::array<Cost, 2>> f(K);
    std::vector<std::array<int, 2>> pred(K);
    for (int b = 0; b < 2; ++b) f[1][b] = pair_cost(1, -1, b);
    for (int k = 2; k < K; ++k) {
        for (int b = 0; b < 2; ++b) {
            f[k][b] = kInf;
            for (int a = 0; a < 2; ++a) {
                Cost v = f[k - 1][a] + pair_cost(k, a, b);
                if (v < f[k][b]) {
                    f[k][b] = v;
                    pred[k][b] = a;
                }
            }
        }
    }
    Cost best = kInf;
    int last = 0;
    for (int a = 0; a < 2; ++a) {
        Cost v = f[K - 1][a] + pair_cost(K, a, -1);
        if (v < best) {
            best = v;
            last = a;
        }
    }
    std::vector<int> bits(K);  // bits[k] for gap k, 1-based
    bits[K - 1] = last;
    for (int k = K - 1; k > 1; --k) bits[k - 1] = pred[k][bits[k]];
    std::vector<VertexId> cyc;
    VertexId top = g.v(1), bot = g.vp(1);
    std::vector<VertexId> down{top}, up{bot};
    bool flip = false;
    for (int k = 1; k < K; ++k) {
        flip ^= (bits[k] == 1);
        down.push_back(flip ? g.vp(k + 1) : g.v(k + 1));
        up.push_back(flip ? g.v(k + 1) : g.vp(k + 1));
    }
    cyc = down;
    cyc.insert(cyc.end(), up.rbegin(), up.rend());
    return {best, Tour(std::move(cyc))};
}

AdjSolution solve_linear_pv(const PVGraph& g, const std::vector<Cost>& c) {
    if (static_cast<int>(c.size()) != g.graph().num_edges())
        throw std::invalid_argument("cost vector length must match edge count");
    const int K = g.pairs();
    Cost total = c[g.graph().edge_id(g.v(1), g.vp(1))] +
                 c[g.graph().edge_id(g.v(K), g.vp(K))];
    std::vector<VertexId> down{g.v(1)}, up{g.vp(1)};
    bool flip = false;
    for (int k = 1; k < K; ++k) {
        Cost straight = c[g.graph().edge_id(g.v(k), g.v(k + 1))] +
                        c[g.graph().edge_id(g.vp(k), g.vp(k + 1))];
        Cost crossed = c[g.graph().edge_id(g.v(k), g.vp(k + 1))] +
                       c[g.graph().edge_id(g.vp(k), g.v(k + 1))];
        bool cross = crossed < straight;
        total += cross ? crossed : straight;
        flip ^= cross;
        down.push_back(flip ? g.vp(k + 1) : g.v(k + 1));
        up.push_back(flip ? g.v(k + 1) : g.vp(k + 1));
    }
    std::vector<VertexId> cyc = down;
    cyc.insert(cyc.end(), up.rbegin(), up.rend());
    return {total, Tour(std::move(cyc))};
}

PolytopeReport pv_polytope_check(const std::vector<double>& x, const PVGraph& g) {
    if (static_cast<int>(x.size()) != g.graph().num_edges())
        throw std::invalid_argument("vector length must match edge count");
    const double tol = 1e-9;
    const int K = g.pairs();
    PolytopeReport rep;
    rep.bounds = rep.backward = rep.forward = rep.first_pair = rep.last_pair = true;
    for (int e = 0; e < g.graph().num_edges(); ++e) {
        if (x[e] < -tol || x[e] > 1 + tol) {
            rep.bounds = false;
            rep.violations.push_back("bound violated at edge " + std::to_string(e));
        }
    }
    auto xe = [&](VertexId u, VertexId v) { return x[g.graph().edge_id(u, v)]; };
    for (int k = 2; k <= K; ++k) {
        for (VertexId v : {g.v(k), g.vp(k)}) {
            if (std::abs(xe(g.v(k - 1), v) + xe(g.vp(k - 1), v) - 1.0) > tol) {
                rep.backward = false;
                rep.violations.push_back("backward degree equality fails at vertex " +
                                         std::to_string(v));
            }
        }
    }
    for (int k = 1; k < K; ++k) {
        for (VertexId v : {g.v(k), g.vp(k)}) {
            if (std::abs(xe(v, g.v(k + 1)) + xe(v, g.vp(k + 1)) - 1.0) > tol) {
                rep.forward = false;
                rep.violations.push_back("forward degree equality fails at vertex " +
                                         std::to_string(v));
            }
        }
    }
    if (std::abs(xe(g.v(1), g.vp(1)) - 1.0) > tol) {
        rep.first_pair = false;
        rep.violations.push_back("first pair edge not fixed to 1");
    }
    if (std::abs(xe(g.v(K), g.vp(K)) - 1.0) > tol) {
        rep.last_pair = false;
        rep.violations.push_back("last pair edge not fixed to 1");
    }
    return rep;
}

}  // namespace qtsp
