#include "qtsp/graphs.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

namespace qtsp {

std::string family_name(Family f) {
    switch (f) {
        case Family::SEE: return "see";
        case Family::DEE: return "dee";
        case Family::PV: return "pv";
        case Family::MEE: return "mee";
    }
    throw std::logic_error("bad family");
}

Family family_from_name(const std::string& s) {
    if (s == "see") return Family::SEE;
    if (s == "dee") return Family::DEE;
    if (s == "pv") return Family::PV;
    if (s == "mee") return Family::MEE;
    throw std::invalid_argument("unknown family: " + s);
}

static int total_vertices(const std::vector<int>& r) {
    int n = 1;
    for (int x : r) n += x;
    return n;
}

GStarGraph::GStarGraph(std::vector<int> cycle_sizes)
    : r_(std::move(cycle_sizes)), g_(total_vertices(r_)) {
    if (r_.size() < 2) throw std::invalid_argument("G* needs at least two cycles");
    int base = 1;
    for (int x : r_) {
        if (x < 3) throw std::invalid_argument("cycle sizes must be >= 3");
        base_.push_back(base);
        base += x;
    }
    const int mm = m();
    for (int i = 1; i <= r(1); ++i) g_.add_edge(tip(), vertex(1, i));
    for (int k = 1; k <= mm; ++k) {
        for (int i = 1; i <= r(k); ++i) g_.add_edge(vertex(k, i), vertex(k, i + 1));
        if (k < mm) {
            for (int i = 1; i <= r(k); ++i)
                for (int j = 1; j <= r(k + 1); ++j) g_.add_edge(vertex(k, i), vertex(k + 1, j));
        }
    }
    for (int i = 1; i <= r(mm); ++i) g_.add_edge(tip(), vertex(mm, i));
}

VertexId GStarGraph::vertex(int k, int i) const {
    const int rk = r(k);
    int ii = ((i - 1) % rk + rk) % rk;
    return base_[k - 1] + ii;
}

EdgeId GStarGraph::cycle_edge(int k, int i) const {
    return g_.edge_id(vertex(k, i), vertex(k, i + 1));
}

PVGraph::PVGraph(int n) : n_(n), g_(n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("PV graph needs even n >= 4");
    g_.add_edge(v(1), vp(1));
    for (int k = 1; k < pairs(); ++k) {
        g_.add_edge(v(k), v(k + 1));
        g_.add_edge(v(k), vp(k + 1));
        g_.add_edge(vp(k), v(k + 1));
        g_.add_edge(vp(k), vp(k + 1));
    }
    g_.add_edge(v(pairs()), vp(pairs()));
}

MEEGraph::MEEGraph(int r, int s) : r_(r), s_(s), g_(r + s) {
    if (s < 3 || s > r) throw std::invalid_argument("MEE graph needs 3 <= s <= r");
    for (int i = 1; i <= r_; ++i) g_.add_edge(u(i), u(i + 1));
    for (int i = 1; i <= r_; ++i)
        for (int j = 1; j <= s_; ++j) g_.add_edge(u(i), v(j));
}

Tour tour_from_edges(const Graph& g, const std::vector<EdgeId>& edges) {
    const int n = g.num_vertices();
    if (static_cast<int>(edges.size()) != n)
        throw std::invalid_argument("edge set size must equal vertex count");
    std::vector<std::array<VertexId, 2>> nb(n, {-1, -1});
    for (EdgeId e : edges) {
        auto [u, v] = g.edge(e);
        for (VertexId x : {u, v}) {
            VertexId y = (x == u) ? v : u;
            auto& slots = nb[x];
            if (slots[0] < 0) slots[0] = y;
            else if (slots[1] < 0) slots[1] = y;
            else throw std::invalid_argument("vertex degree exceeds 2 in edge set");
        }
    }
    std::vector<VertexId> seq;
    seq.reserve(n);
    VertexId prev = -1, cur = 0;
    for (int i = 0; i < n; ++i) {
        if (nb[cur][0] < 0 || nb[cur][1] < 0)
            throw std::invalid_argument("edge set does not cover every vertex twice");
        seq.push_back(cur);
        VertexId nxt = (nb[cur][0] == prev) ? nb[cur][1] : nb[cur][0];
        prev = cur;
        cur = nxt;
    }
    if (cur != 0) throw std::invalid_argument("edge set is not a single cycle");
    return Tour(seq);
}

void for_each_see(const GStarGraph& g, const std::function<void(const Tour&)>& fn) {
    const int m = g.m();
    std::vector<VertexId> seq;
    seq.push_back(g.tip());
    // Per cycle: entry vertex j and ejected edge (v_j, v_{j+d}); the chain
    // then runs j, j-d, ..., j+d.
    std::function<void(int)> rec = [&](int k) {
        if (k > m) {
            fn(Tour(seq));
            return;
        }
        for (int j = 1; j <= g.r(k); ++j) {
            for (int d : {+1, -1}) {
                std::size_t mark = seq.size();
                for (int step = 0; step < g.r(k); ++step) seq.push_back(g.vertex(k, j - step * d));
                rec(k + 1);
                seq.resize(mark);
            }
        }
    };
    rec(1);
}

void for_each_dee(const GStarGraph& g, const std::function<void(const Tour&)>& fn) {
    const int m = g.m();
    std::unordered_set<Tour, TourHash> seen;
    std::vector<EdgeId> edges;
    // entry: index of the ejected entry edge of the current cycle.
    std::function<void(int, int)> rec = [&](int k, int entry) {
        if (k == m) {
            std::size_t mark = edges.size();
            for (int i = 1; i <= g.r(m); ++i)
                if (i != entry) edges.push_back(g.cycle_edge(m, i));
            Tour t = tour_from_edges(g.graph(), edges);
            if (seen.insert(t).second) fn(t);
            edges.resize(mark);
            return;
        }
        for (int j = 1; j <= g.r(k); ++j) {
            if (j == entry) continue;  // step 2 requires i != j
            std::size_t mark = edges.size();
            for (int i = 1; i <= g.r(k); ++i)
                if (i != entry && i != j) edges.push_back(g.cycle_edge(k, i));
            VertexId x0 = g.vertex(k, j), x1 = g.vertex(k, j + 1);
            for (int s = 1; s <= g.r(k + 1); ++s) {
                VertexId y0 = g.vertex(k + 1, s), y1 = g.vertex(k + 1, s + 1);
                for (int cross = 0; cross <= 1; ++cross) {
                    edges.push_back(g.graph().edge_id(x0, cross ? y1 : y0));
                    edges.push_back(g.graph().edge_id(x1, cross ? y0 : y1));
                    rec(k + 1, s);
                    edges.pop_back();
                    edges.pop_back();
                }
            }
            edges.resize(mark);
        }
    };
    for (int i1 = 1; i1 <= g.r(1); ++i1) {
        edges.clear();
        edges.push_back(g.graph().edge_id(g.tip(), g.vertex(1, i1)));
        edges.push_back(g.graph().edge_id(g.tip(), g.vertex(1, i1 + 1)));
        rec(1, i1);
    }
}

void for_each_pv(const PVGraph& g, const std::function<void(const Tour&)>& fn) {
    const int K = g.pairs();
    std::vector<EdgeId> edges;
    std::function<void(int)> rec = [&](int k) {
        if (k == K) {
            edges.push_back(g.graph().edge_id(g.v(K), g.vp(K)));
            fn(tour_from_edges(g.graph(), edges));
            edges.pop_back();
            return;
        }
        for (int cross = 0; cross <= 1; ++cross) {
            edges.push_back(g.graph().edge_id(g.v(k), cross ? g.vp(k + 1) : g.v(k + 1)));
            edges.push_back(g.graph().edge_id(g.vp(k), cross ? g.v(k + 1) : g.vp(k + 1)));
            rec(k + 1);
            edges.pop_back();
            edges.pop_back();
        }
    };
    edges.push_back(g.graph().edge_id(g.v(1), g.vp(1)));
    rec(1);
}

void for_each_mee(const MEEGraph& g, const std::function<void(const Tour&)>& fn) {
    const int r = g.r(), s = g.s();
    std::vector<int> assign;       // assign[j-1] = cycle edge index receiving v_j
    std::vector<bool> used(r + 1, false);
    std::function<void(int)> rec = [&](int j) {
        if (j > s) {
            std::vector<EdgeId> edges;
            for (int i = 1; i <= r; ++i)
                if (!used[i]) edges.push_back(g.cycle_edge(i));
            for (int jj = 1; jj <= s; ++jj) {
                int i = assign[jj - 1];
                edges.push_back(g.graph().edge_id(g.u(i), g.v(jj)));
                edges.push_back(g.graph().edge_id(g.u(i + 1), g.v(jj)));
            }
            fn(tour_from_edges(g.graph(), edges));
            return;
        }
        for (int i = 1; i <= r; ++i) {
            if (used[i]) continue;
            used[i] = true;
            assign.push_back(i);
            rec(j + 1);
            assign.pop_back();
            used[i] = false;
        }
    };
    rec(1);
}

std::vector<Tour> enumerate_see(const GStarGraph& g) {
    std::vector<Tour> out;
    for_each_see(g, [&](const Tour& t) { out.push_back(t); });
    return out;
}
std::vector<Tour> enumerate_dee(const GStarGraph& g) {
    std::vector<Tour> out;
    for_each_dee(g, [&](const Tour& t) { out.push_back(t); });
    return out;
}
std::vector<Tour> enumerate_pv(const PVGraph& g) {
    std::vector<Tour> out;
    for_each_pv(g, [&](const Tour& t) { out.push_back(t); });
    return out;
}
std::vector<Tour> enumerate_mee(const MEEGraph& g) {
    std::vector<Tour> out;
    for_each_mee(g, [&](const Tour& t) { out.push_back(t); });
    return out;
}

long long count_family(const GStarGraph& g, Family f) {
    if (f == Family::SEE) {
        long long c = 1;
        for (int k = 1; k <= g.m(); ++k) c *= 2LL * g.r(k);
        return c;
    }
    if (f == Family::DEE) {
        long long c = 0;
        for_each_dee(g, [&](const Tour&) { ++c; });
        return c;
    }
    throw std::invalid_argument("G* hosts only SEE and DEE families");
}

long long count_family(const PVGraph& g) { return 1LL << (g.pairs() - 1); }

long long count_family(const MEEGraph& g) {
    long long c = 1;
    for (int i = 0; i < g.s(); ++i) c *= g.r() - i;
    return c;
}

long long dee_closed_form(const GStarGraph& g) {
    long long c = 1;
    for (int k = 1; k < g.m(); ++k) c *= 2;
    for (int k = 1; k <= g.m(); ++k) c *= g.r(k);
    for (int k = 1; k < g.m(); ++k) c *= g.r(k + 1);
    return c;
}

namespace {

struct GStarProfile {
    std::vector<int> kept;           // kept cycle edges per cycle (1-based)
    std::vector<int> cross;          // cross edges per gap k (between C(k), C(k+1))
    int tip_first = 0, tip_last = 0; // tip edges to C(1) / C(m)
    // per gap, the cycle-k-side and cycle-(k+1)-side endpoints of cross edges
    std::vector<std::vector<VertexId>> gap_lo, gap_hi;
    std::vector<VertexId> tip_nbrs;  // tour neighbours of t
};

int cycle_of(const GStarGraph& g, VertexId v, int& pos) {
    // returns cycle index (1-based) and 1-based position, or 0 for the tip
    if (v == g.tip()) return 0;
    int off = v - 1;
    for (int k = 1; k <= g.m(); ++k) {
        if (off < g.r(k)) {
            pos = off + 1;
            return k;
        }
        off -= g.r(k);
    }
    throw std::logic_error("vertex outside G*");
}

bool cycle_adjacent(const GStarGraph& g, int k, VertexId a, VertexId b) {
    int pa = 0, pb = 0;
    cycle_of(g, a, pa);
    cycle_of(g, b, pb);
    int rk = g.r(k);
    int d = (pa - pb + rk) % rk;
    return d == 1 || d == rk - 1;
}

GStarProfile profile_gstar_tour(const GStarGraph& g, const Tour& t) {
    GStarProfile pr;
    pr.kept.assign(g.m() + 1, 0);
    pr.cross.assign(g.m(), 0);
    pr.gap_lo.assign(g.m(), {});
    pr.gap_hi.assign(g.m(), {});
    for (EdgeId e : t.edge_ids(g.graph())) {
        auto [u, v] = g.graph().edge(e);
        int pu = 0, pv = 0;
        int ku = cycle_of(g, u, pu), kv = cycle_of(g, v, pv);
        if (ku > kv) {
            std::swap(ku, kv);
            std::swap(u, v);
        }
        if (ku == 0) {
            pr.tip_nbrs.push_back(v);
            if (kv == 1) ++pr.tip_first;
            else ++pr.tip_last;
        } else if (ku == kv) {
            ++pr.kept[ku];
        } else {
            ++pr.cross[ku];
            pr.gap_lo[ku].push_back(u);
            pr.gap_hi[ku].push_back(v);
        }
    }
    return pr;
}

}  // namespace

TourReport validate_tour(const Tour& t, const GStarGraph& g, Family f) {
    TourReport rep;
    rep.family_checked = true;
    rep.hamiltonian = is_hamiltonian(g.graph(), t);
    if (!rep.hamiltonian) {
        rep.message = "not a Hamiltonian cycle of G*";
        return rep;
    }
    GStarProfile pr = profile_gstar_tour(g, t);
    const int m = g.m();
    auto fail = [&](const std::string& msg) {
        rep.member = false;
        rep.message = msg;
        return rep;
    };
    if (f == Family::SEE) {
        if (pr.tip_first != 1 || pr.tip_last != 1)
            return fail("SEE tours use exactly one tip edge on each side");
        for (int k = 1; k <= m; ++k)
            if (pr.kept[k] != g.r(k) - 1) return fail("SEE tours eject exactly one edge per cycle");
        for (int k = 1; k < m; ++k)
            if (pr.cross[k] != 1) return fail("SEE tours use one crossing edge per gap");
        rep.member = true;
        return rep;
    }
    if (f != Family::DEE) throw std::invalid_argument("G* hosts only SEE and DEE families");
    if (pr.tip_first != 2 || pr.tip_last != 0)
        return fail("DEE tours attach the tip to C(1) with two edges");
    if (!cycle_adjacent(g, 1, pr.tip_nbrs[0], pr.tip_nbrs[1]))
        return fail("tip neighbours must span one ejected edge of C(1)");
    for (int k = 1; k < m; ++k)
        if (pr.kept[k] != g.r(k) - 2)
            return fail("DEE tours eject exactly two edges per cycle before the last");
    if (pr.kept[m] != g.r(m) - 1) return fail("DEE tours eject exactly one edge from C(m)");
    for (int k = 1; k < m; ++k) {
        if (pr.cross[k] != 2) return fail("DEE tours use two crossing edges per gap");
        if (!cycle_adjacent(g, k, pr.gap_lo[k][0], pr.gap_lo[k][1]))
            return fail("crossing edges must leave through one ejected edge");
        if (!cycle_adjacent(g, k + 1, pr.gap_hi[k][0], pr.gap_hi[k][1]))
            return fail("crossing edges must enter through one ejected edge");
    }
    rep.member = true;
    return rep;
}

TourReport validate_tour(const Tour& t, const PVGraph& g) {
    TourReport rep;
    rep.family_checked = true;
    rep.hamiltonian = is_hamiltonian(g.graph(), t);
    if (!rep.hamiltonian) {
        rep.message = "not a Hamiltonian cycle of G^p";
        return rep;
    }
    std::vector<EdgeId> es = t.edge_ids(g.graph());
    EdgeId first = g.graph().edge_id(g.v(1), g.vp(1));
    EdgeId last = g.graph().edge_id(g.v(g.pairs()), g.vp(g.pairs()));
    bool has_first = std::count(es.begin(), es.end(), first) > 0;
    bool has_last = std::count(es.begin(), es.end(), last) > 0;
    if (!has_first || !has_last) {
        rep.message = "PV tours contain both pair edges";
        return rep;
    }
    rep.member = true;
    return rep;
}

TourReport validate_tour(const Tour& t, const MEEGraph& g) {
    TourReport rep;
    rep.family_checked = true;
    rep.hamiltonian = is_hamiltonian(g.graph(), t);
    if (!rep.hamiltonian) {
        rep.message = "not a Hamiltonian cycle of G^M";
        return rep;
    }
    const auto& seq = t.vertices();
    const int n = t.size();
    std::vector<bool> used(g.r() + 1, false);
    for (int idx = 0; idx < n; ++idx) {
        VertexId x = seq[idx];
        if (x < g.r()) continue;  // U vertex
        VertexId a = seq[(idx + n - 1) % n], b = seq[(idx + 1) % n];
        if (a >= g.r() || b >= g.r()) {
            rep.message = "inserted vertices have U neighbours only";
            return rep;
        }
        int ia = a + 1, ib = b + 1;  // 1-based cycle positions
        int lo;
        if ((ia % g.r()) + 1 == ib) lo = ia;
        else if ((ib % g.r()) + 1 == ia) lo = ib;
        else {
            rep.message = "inserted vertex must replace a single cycle edge";
            return rep;
        }
        if (used[lo]) {
            rep.message = "two vertices inserted into the same cycle edge";
            return rep;
        }
        used[lo] = true;
    }
    rep.member = true;
    return rep;
}

}  // namespace qtsp
