#include <doctest.h>

#include <random>

#include "qtsp/bench.hpp"
#include "qtsp/core.hpp"
#include "qtsp/graphs.hpp"

using namespace qtsp;

namespace {

Graph triangle() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    return g;
}

}  // namespace

TEST_CASE("canonical tour form is rotation and reversal invariant") {
    std::vector<VertexId> base{3, 0, 2, 1, 4};
    Tour t(base);
    for (std::size_t k = 0; k < base.size(); ++k) {
        std::vector<VertexId> rot(base.begin() + k, base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + k);
        CHECK(Tour(rot) == t);
        std::reverse(rot.begin(), rot.end());
        CHECK(Tour(rot) == t);
    }
    CHECK(t.vertices().front() == 0);
    CHECK(t.vertices()[1] < t.vertices().back());
    // Idempotence.
    CHECK(Tour(t.vertices()) == t);
}

TEST_CASE("eval_full sums ordered pairs including the diagonal") {
    Graph g = triangle();
    Tour t(std::vector<VertexId>{0, 1, 2});
    FullQuadratic zero{std::vector<std::vector<Cost>>(3, std::vector<Cost>(3, 0)),
                       std::vector<Cost>(3, 0)};
    CHECK(eval_full(g, t, zero) == 0);

    FullQuadratic m = zero;
    m.q[0][1] = 3;
    m.q[1][0] = 3;
    CHECK(eval_full(g, t, m) == 6);

    std::mt19937_64 rng(11);
    FullQuadratic r = zero;
    for (auto& row : r.q)
        for (Cost& x : row) x = static_cast<Cost>(rng() % 19) - 9;
    for (Cost& x : r.c) x = static_cast<Cost>(rng() % 19) - 9;
    Cost hand = 0;
    std::vector<EdgeId> es = t.edge_ids(g);
    for (EdgeId e : es)
        for (EdgeId f : es) hand += r.q[e][f];
    for (EdgeId e : es) hand += r.c[e];
    CHECK(eval_full(g, t, r) == hand);
}

TEST_CASE("eval_rank matches its closed form and the expansion oracle") {
    PVGraph g(8);
    const int m = g.graph().num_edges();
    auto tours = enumerate_pv(g);

    RankP lin;
    lin.p = 1;
    lin.a.emplace_back(m, 0);
    lin.b.emplace_back(m, 0);
    lin.c = random_costs(m, 5, -4, 4);
    for (const Tour& t : tours) {
        Cost cs = 0;
        for (EdgeId e : t.edge_ids(g.graph())) cs += lin.c[e];
        CHECK(eval_rank(g.graph(), t, lin) == cs);
    }

    RankP sq;
    sq.p = 1;
    sq.a.push_back(random_costs(m, 6, -4, 4));
    sq.b = sq.a;
    sq.c.assign(m, 0);
    for (const Tour& t : tours) {
        Cost s = 0;
        for (EdgeId e : t.edge_ids(g.graph())) s += sq.a[0][e];
        CHECK(eval_rank(g.graph(), t, sq) == s * s);
    }

    int checked = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        RankP rp = random_rank(m, 2, seed, -5, 5);
        rp.c = random_costs(m, seed + 100, -5, 5);
        FullQuadratic fq;
        fq.q.assign(m, std::vector<Cost>(m, 0));
        for (int e = 0; e < m; ++e)
            for (int f = 0; f < m; ++f)
                for (int h = 0; h < rp.p; ++h) fq.q[e][f] += rp.a[h][e] * rp.b[h][f];
        fq.c = rp.c;
        for (const Tour& t : tours) {
            CHECK(eval_rank(g.graph(), t, rp) == eval_full(g.graph(), t, fq));
            ++checked;
        }
    }
    CHECK(checked >= 100);
}

TEST_CASE("eval_adjacent: one term per vertex, orientation independent") {
    PVGraph g(8);
    auto tours = enumerate_pv(g);
    Adjacent zero = random_adjacent(g.graph(), 1, 0, 0);
    Adjacent ones = random_adjacent(g.graph(), 1, 1, 1);
    for (const Tour& t : tours) {
        CHECK(eval_adjacent(t, zero) == 0);
        CHECK(eval_adjacent(t, ones) == 8);
    }
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Adjacent q = random_adjacent(g.graph(), seed, 0, 9);
        for (const Tour& t : tours) {
            const auto& seq = t.vertices();
            const int n = t.size();
            Cost fwd = 0, bwd = 0;
            for (int i = 0; i < n; ++i) {
                fwd += q.at(seq[(i + n - 1) % n], seq[i], seq[(i + 1) % n]);
                bwd += q.at(seq[(i + 1) % n], seq[i], seq[(i + n - 1) % n]);
            }
            CHECK(fwd == bwd);
            CHECK(eval_adjacent(t, q) == fwd);
        }
    }
    CHECK(zero.at(g.v(1), g.vp(1), g.v(2)) == zero.at(g.v(2), g.vp(1), g.v(1)));
    CHECK_THROWS_AS(zero.at(0, 1, 0), std::exception);
}

TEST_CASE("validate_tour separates families and rejects non-cycles") {
    GStarGraph g({3, 3});
    auto see = enumerate_see(g);
    for (const Tour& t : see) {
        TourReport rep = validate_tour(t, g, Family::SEE);
        CHECK(rep.hamiltonian);
        CHECK(rep.member);
    }
    bool found_counterexample = false;
    for (const Tour& t : enumerate_dee(g)) {
        bool in_see = std::find(see.begin(), see.end(), t) != see.end();
        TourReport rep = validate_tour(t, g, Family::SEE);
        CHECK(rep.member == in_see);
        if (!in_see) found_counterexample = true;
    }
    CHECK(found_counterexample);

    PVGraph pv(6);
    Tour bad(std::vector<VertexId>{0, 1, 2, 3, 4, 4});
    CHECK_FALSE(validate_tour(bad, pv).hamiltonian);
}
