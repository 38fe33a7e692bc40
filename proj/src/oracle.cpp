#include "qtsp/oracle.hpp"

#include <functional>
#include <stdexcept>
#include <variant>

namespace qtsp {

Cost eval_model(const Graph& g, const Tour& t, const CostModel& model) {
    return std::visit(
        [&](const auto& m) -> Cost {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, FullQuadratic>) return eval_full(g, t, m);
            else if constexpr (std::is_same_v<T, RankP>) return eval_rank(g, t, m);
            else if constexpr (std::is_same_v<T, Adjacent>) return eval_adjacent(t, m);
            else return eval_linear(g, t, m);
        },
        model);
}

namespace {

template <typename EnumFn>
OracleResult sweep(const Graph& g, const CostModel& model, long long count, long long cap,
                   EnumFn&& enumerate) {
    if (count > cap) throw std::runtime_error("oracle refused: family size exceeds cap");
    OracleResult best;
    bool have = false;
    enumerate([&](const Tour& t) {
        Cost v = eval_model(g, t, model);
        if (!have || v < best.value || (v == best.value && t < best.tour)) {
            have = true;
            best = {v, t};
        }
    });
    if (!have) throw std::runtime_error("empty tour family");
    return best;
}

}  // namespace

OracleResult oracle_tour(const GStarGraph& g, Family f, const CostModel& model,
                         long long cap) {
    if (f != Family::SEE && f != Family::DEE)
        throw std::invalid_argument("layered graphs carry SEE or DEE families");
    return sweep(g.graph(), model, count_family(g, f), cap,
                 [&](const std::function<void(const Tour&)>& fn) {
                     f == Family::SEE ? for_each_see(g, fn) : for_each_dee(g, fn);
                 });
}

OracleResult oracle_tour(const PVGraph& g, const CostModel& model, long long cap) {
    return sweep(g.graph(), model, count_family(g), cap,
                 [&](const std::function<void(const Tour&)>& fn) { for_each_pv(g, fn); });
}

OracleResult oracle_tour(const MEEGraph& g, const CostModel& model, long long cap) {
    return sweep(g.graph(), model, count_family(g), cap,
                 [&](const std::function<void(const Tour&)>& fn) { for_each_mee(g, fn); });
}

UbqpResult oracle_ubqp(const std::vector<std::vector<Cost>>& Q) {
    const int n = static_cast<int>(Q.size());
    if (n > 20) throw std::invalid_argument("UBQP oracle capped at n = 20");
    for (const auto& row : Q)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("Q must be square");
    UbqpResult best;
    best.x.assign(n, 0);
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        Cost v = 0;
        for (int i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = 0; j < n; ++j)
                if (mask >> j & 1) v += Q[i][j];
        }
        if (mask == 0 || v < best.value) {
            best.value = v;
            for (int i = 0; i < n; ++i) best.x[i] = static_cast<int>(mask >> i & 1);
        }
    }
    return best;
}

PartitionResult oracle_partition(const std::vector<Cost>& alpha) {
    const int n = static_cast<int>(alpha.size());
    if (n > 24) throw std::invalid_argument("partition oracle capped at n = 24");
    Cost total = 0;
    for (Cost x : alpha) total += x;
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        Cost s = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s += alpha[i];
        if (2 * s == total) {
            PartitionResult res;
            res.exists = true;
            for (int i = 0; i < n; ++i) res.side.push_back(static_cast<int>(mask >> i & 1));
            return res;
        }
    }
    return {};
}

}  // namespace qtsp
