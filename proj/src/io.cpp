#include "qtsp/io.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qtsp {

using nlohmann::ordered_json;

const Graph& Instance::base() const {
    return std::visit([](const auto& g) -> const Graph& { return g.graph(); }, graph);
}

namespace {

Cost as_int(const ordered_json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    return j.get<Cost>();
}

std::vector<Cost> int_array(const ordered_json& j, int expect, const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != expect)
        throw std::invalid_argument(std::string(what) + " has the wrong length");
    std::vector<Cost> out;
    for (const auto& x : j) out.push_back(as_int(x, what));
    return out;
}

std::vector<std::vector<Cost>> int_matrix(const ordered_json& j, int rows, int cols,
                                          const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        throw std::invalid_argument(std::string(what) + " has the wrong shape");
    std::vector<std::vector<Cost>> out;
    for (const auto& row : j) out.push_back(int_array(row, cols, what));
    return out;
}

void check_adjacent_total(const Graph& g, const Adjacent& q) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const auto& nb = g.neighbours(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!q.has(nb[i].first, v, nb[j].first))
                    throw std::invalid_argument("adjacent model misses a 2-path triple");
    }
}

CostModel parse_costs(const ordered_json& j, const Graph& g) {
    const int m = g.num_edges();
    const std::string model = j.at("model").get<std::string>();
    if (model == "linear") return LinearCosts{int_array(j.at("c"), m, "c")};
    if (model == "full") {
        FullQuadratic f;
        f.q = int_matrix(j.at("q"), m, m, "q");
        f.c = int_array(j.at("c"), m, "c");
        return f;
    }
    if (model == "rank") {
        RankP r;
        r.p = j.at("p").get<int>();
        if (r.p < 1) throw std::invalid_argument("rank must be positive");
        r.a = int_matrix(j.at("a"), r.p, m, "a");
        r.b = int_matrix(j.at("b"), r.p, m, "b");
        r.c = int_array(j.at("c"), m, "c");
        return r;
    }
    if (model == "adjacent") {
        Adjacent q;
        for (const auto& t : j.at("triples")) {
            if (!t.is_array() || t.size() != 4)
                throw std::invalid_argument("adjacent triples must be [u,v,w,cost]");
            VertexId u = static_cast<VertexId>(as_int(t[0], "triple vertex"));
            VertexId v = static_cast<VertexId>(as_int(t[1], "triple vertex"));
            VertexId w = static_cast<VertexId>(as_int(t[2], "triple vertex"));
            if (u == w || !g.has_edge(u, v) || !g.has_edge(v, w))
                throw std::invalid_argument("adjacent triple is not a 2-path of the graph");
            q.set(u, v, w, as_int(t[3], "triple cost"));
        }
        check_adjacent_total(g, q);
        return q;
    }
    throw std::invalid_argument("unknown cost model tag: " + model);
}

ordered_json render_costs(const CostModel& model, const Graph& g) {
    ordered_json j;
    std::visit(
        [&](const auto& mo) {
            using T = std::decay_t<decltype(mo)>;
            if constexpr (std::is_same_v<T, LinearCosts>) {
                j["model"] = "linear";
                j["c"] = mo.c;
            } else if constexpr (std::is_same_v<T, FullQuadratic>) {
                j["model"] = "full";
                j["q"] = mo.q;
                j["c"] = mo.c;
            } else if constexpr (std::is_same_v<T, RankP>) {
                j["model"] = "rank";
                j["p"] = mo.p;
                j["a"] = mo.a;
                j["b"] = mo.b;
                j["c"] = mo.c;
            } else {
                j["model"] = "adjacent";
                std::vector<std::array<Cost, 4>> rows;
                for (const auto& [key, cost] : mo.raw()) {
                    VertexId u, v, w;
                    Adjacent::unkey(key, u, v, w);
                    rows.push_back({u, v, w, cost});
                }
                std::sort(rows.begin(), rows.end());
                j["triples"] = rows;
            }
        },
        model);
    return j;
}

}  // namespace

Instance parse_instance(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    Instance inst;
    inst.family = family_from_name(j.at("family").get<std::string>());
    const ordered_json& gj = j.at("graph");
    if (gj.contains("gstar")) {
        if (inst.family != Family::SEE && inst.family != Family::DEE)
            throw std::invalid_argument("layered graphs carry SEE or DEE families");
        inst.graph = GStarGraph(gj.at("gstar").at("cycles").get<std::vector<int>>());
    } else if (gj.contains("pv")) {
        if (inst.family != Family::PV)
            throw std::invalid_argument("paired-vertex graphs carry the PV family");
        inst.graph = PVGraph(gj.at("pv").at("n").get<int>());
    } else if (gj.contains("mee")) {
        if (inst.family != Family::MEE)
            throw std::invalid_argument("cycle-insertion graphs carry the MEE family");
        inst.graph = MEEGraph(gj.at("mee").at("r").get<int>(), gj.at("mee").at("s").get<int>());
    } else {
        throw std::invalid_argument("unknown graph tag");
    }
    inst.costs = parse_costs(j.at("costs"), inst.base());
    inst.meta = j.value("meta", ordered_json::object());
    return inst;
}

std::string render_instance(const Instance& inst) {
    ordered_json j;
    j["family"] = family_name(inst.family);
    std::visit(
        [&](const auto& g) {
            using T = std::decay_t<decltype(g)>;
            if constexpr (std::is_same_v<T, GStarGraph>) {
                j["graph"] = {{"gstar", {{"cycles", g.cycle_sizes()}}}};
            } else if constexpr (std::is_same_v<T, PVGraph>) {
                j["graph"] = {{"pv", {{"n", g.n()}}}};
            } else {
                j["graph"] = {{"mee", {{"r", g.r()}, {"s", g.s()}}}};
            }
        },
        inst.graph);
    j["costs"] = render_costs(inst.costs, inst.base());
    j["meta"] = inst.meta;
    return j.dump(2) + "\n";
}

}  // namespace qtsp
