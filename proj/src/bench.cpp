#include "qtsp/bench.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "qtsp/adjacent.hpp"

namespace qtsp {

namespace {

Cost draw(std::mt19937_64& rng, Cost lo, Cost hi) {
    return lo + static_cast<Cost>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

Adjacent random_adjacent(const Graph& g, std::uint64_t seed, Cost lo, Cost hi) {
    std::mt19937_64 rng(seed);
    Adjacent q;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& nb = g.neighbours(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                q.set(nb[i].first, v, nb[j].first, draw(rng, lo, hi));
    }
    return q;
}

std::vector<Cost> random_costs(int m, std::uint64_t seed, Cost lo, Cost hi) {
    std::mt19937_64 rng(seed);
    std::vector<Cost> c(m);
    for (Cost& x : c) x = draw(rng, lo, hi);
    return c;
}

RankP random_rank(int m, int p, std::uint64_t seed, Cost lo, Cost hi) {
    std::mt19937_64 rng(seed);
    RankP r;
    r.p = p;
    for (int h = 0; h < p; ++h) {
        r.a.emplace_back(m);
        r.b.emplace_back(m);
        for (Cost& x : r.a.back()) x = draw(rng, lo, hi);
        for (Cost& x : r.b.back()) x = draw(rng, lo, hi);
    }
    r.c.assign(m, 0);
    return r;
}

FullQuadratic random_full(int m, std::uint64_t seed, Cost lo, Cost hi) {
    std::mt19937_64 rng(seed);
    FullQuadratic f;
    f.q.assign(m, std::vector<Cost>(m));
    for (auto& row : f.q)
        for (Cost& x : row) x = draw(rng, lo, hi);
    f.c.assign(m, 0);
    return f;
}

namespace {

template <typename Fn>
long long time_min_of_3(Fn&& fn) {
    long long best = -1;
    for (int rep = 0; rep < 3; ++rep) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        long long us = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
        if (best < 0 || us < best) best = us;
    }
    return best;
}

}  // namespace

std::vector<BenchRow> run_scaling_bench(std::uint64_t seed) {
    std::vector<BenchRow> rows;
    for (int n : {2048, 4096}) {
        PVGraph g(n);
        Adjacent q = random_adjacent(g.graph(), seed + n, 0, 9);
        Cost value = 0;
        long long us = time_min_of_3([&] { value = solve_adjacent_pv(g, q).value; });
        rows.push_back({"pv", n, "adjacent-dp", value, us});
    }
    for (int m : {700, 1400}) {
        GStarGraph g(std::vector<int>(m, 3));
        Adjacent q = random_adjacent(g.graph(), seed + m, 0, 9);
        Cost value = 0;
        long long us = time_min_of_3([&] { value = solve_adjacent_see(g, q).value; });
        rows.push_back({"see", g.graph().num_vertices(), "adjacent-dp", value, us});
    }
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "family,n,solver,value,micros\n";
    for (const auto& r : rows)
        out << r.family << ',' << r.n << ',' << r.solver << ',' << r.value << ','
            << r.micros << '\n';
    return out.str();
}

}  // namespace qtsp
