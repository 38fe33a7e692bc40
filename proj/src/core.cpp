#include "qtsp/core.hpp"

#include <algorithm>

namespace qtsp {

EdgeId Graph::add_edge(VertexId u, VertexId v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (index_.count(key(u, v))) throw std::invalid_argument("duplicate edge");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.emplace_back(u, v);
    adj_[u].emplace_back(v, id);
    adj_[v].emplace_back(u, id);
    index_[key(u, v)] = id;
    return id;
}

EdgeId Graph::find_edge(VertexId u, VertexId v) const {
    auto it = index_.find(key(u, v));
    return it == index_.end() ? -1 : it->second;
}

EdgeId Graph::edge_id(VertexId u, VertexId v) const {
    EdgeId e = find_edge(u, v);
    if (e < 0)
        throw std::invalid_argument("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return e;
}

std::vector<VertexId> Tour::canonicalize(std::vector<VertexId> cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("a tour needs at least 3 vertices");
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    if (cycle.back() < cycle[1]) {
        std::reverse(cycle.begin() + 1, cycle.end());
    }
    return cycle;
}

std::vector<EdgeId> Tour::edge_ids(const Graph& g) const {
    std::vector<EdgeId> out;
    out.reserve(seq_.size());
    for (std::size_t i = 0; i < seq_.size(); ++i) {
        out.push_back(g.edge_id(seq_[i], seq_[(i + 1) % seq_.size()]));
    }
    return out;
}

Cost Adjacent::at(VertexId u, VertexId v, VertexId w) const {
    auto it = q_.find(key(u, v, w));
    if (it == q_.end())
        throw std::invalid_argument("missing adjacent cost q(" + std::to_string(u) + "," +
                                    std::to_string(v) + "," + std::to_string(w) + ")");
    return it->second;
}

Cost eval_full(const Graph& g, const Tour& tour, const FullQuadratic& model) {
    const std::size_t m = g.num_edges();
    if (model.q.size() != m || model.c.size() != m)
        throw std::invalid_argument("FullQuadratic model size does not match graph");
    std::vector<EdgeId> es = tour.edge_ids(g);
    Cost total = 0;
    for (EdgeId e : es) {
        for (EdgeId f : es) total += model.q[e][f];
        total += model.c[e];
    }
    return total;
}

Cost eval_rank(const Graph& g, const Tour& tour, const RankP& model) {
    const std::size_t m = g.num_edges();
    if (model.p < 1 || model.a.size() != static_cast<std::size_t>(model.p) ||
        model.b.size() != static_cast<std::size_t>(model.p) || model.c.size() != m)
        throw std::invalid_argument("RankP model is malformed");
    for (int h = 0; h < model.p; ++h)
        if (model.a[h].size() != m || model.b[h].size() != m)
            throw std::invalid_argument("RankP array length does not match edge count");
    std::vector<EdgeId> es = tour.edge_ids(g);
    Cost total = 0;
    for (int h = 0; h < model.p; ++h) {
        Cost sa = 0, sb = 0;
        for (EdgeId e : es) {
            sa += model.a[h][e];
            sb += model.b[h][e];
        }
        total += sa * sb;
    }
    for (EdgeId e : es) total += model.c[e];
    return total;
}

Cost eval_adjacent(const Tour& tour, const Adjacent& model) {
    const auto& v = tour.vertices();
    const std::size_t n = v.size();
    Cost total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        total += model.at(v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
    }
    return total;
}

Cost eval_linear(const Graph& g, const Tour& tour, const LinearCosts& model) {
    if (model.c.size() != static_cast<std::size_t>(g.num_edges()))
        throw std::invalid_argument("linear cost array length does not match edge count");
    Cost total = 0;
    for (EdgeId e : tour.edge_ids(g)) total += model.c[e];
    return total;
}

bool is_hamiltonian(const Graph& g, const Tour& tour) {
    const auto& v = tour.vertices();
    if (static_cast<int>(v.size()) != g.num_vertices()) return false;
    std::vector<bool> seen(g.num_vertices(), false);
    for (VertexId x : v) {
        if (x < 0 || x >= g.num_vertices() || seen[x]) return false;
        seen[x] = true;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!g.has_edge(v[i], v[(i + 1) % v.size()])) return false;
    }
    return true;
}

}  // namespace qtsp
