#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace qtsp {

using VertexId = int;
using EdgeId = int;
using Cost = long long;

// Undirected simple graph with a canonical, dense edge indexing.  The order
// in which add_edge is called defines the edge ids; cost arrays are always
// laid out in that order.
class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(n) {
        if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    }

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    EdgeId add_edge(VertexId u, VertexId v);

    const std::pair<VertexId, VertexId>& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    // -1 when the edge does not exist.
    EdgeId find_edge(VertexId u, VertexId v) const;
    EdgeId edge_id(VertexId u, VertexId v) const;  // throws when missing
    bool has_edge(VertexId u, VertexId v) const { return find_edge(u, v) >= 0; }

    const std::vector<std::pair<VertexId, EdgeId>>& neighbours(VertexId v) const {
        return adj_.at(v);
    }

private:
    static std::uint64_t key(VertexId u, VertexId v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }

    int n_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
    std::unordered_map<std::uint64_t, EdgeId> index_;
};

// A Hamiltonian cycle stored as a cyclic vertex sequence in canonical form:
// the smallest vertex first, second element the smaller of its two
// neighbours.  Each undirected cycle has exactly one such representation.
class Tour {
public:
    Tour() = default;
    explicit Tour(std::vector<VertexId> cycle) : seq_(canonicalize(std::move(cycle))) {}

    const std::vector<VertexId>& vertices() const { return seq_; }
    int size() const { return static_cast<int>(seq_.size()); }

    bool operator==(const Tour& o) const { return seq_ == o.seq_; }
    bool operator<(const Tour& o) const { return seq_ < o.seq_; }

    // Edge ids of consecutive pairs (including the closing edge); throws if
    // some pair is not an edge of g.
    std::vector<EdgeId> edge_ids(const Graph& g) const;

    static std::vector<VertexId> canonicalize(std::vector<VertexId> cycle);

private:
    std::vector<VertexId> seq_;
};

struct TourHash {
    std::size_t operator()(const Tour& t) const {
        std::size_t h = 1469598103934665603ull;
        for (VertexId v : t.vertices()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Cost models.  All values are integers; rationals are rejected at parse
// time (see io.cpp).
struct FullQuadratic {
    std::vector<std::vector<Cost>> q;  // m x m, ordered pairs
    std::vector<Cost> c;               // m
};

struct RankP {
    int p = 1;
    std::vector<std::vector<Cost>> a;  // p x m
    std::vector<std::vector<Cost>> b;  // p x m
    std::vector<Cost> c;               // m
};

// 2-path costs q(u,v,w) with v the middle vertex, stored once per unordered
// orientation: q(u,v,w) == q(w,v,u) by construction.
class Adjacent {
public:
    void set(VertexId u, VertexId v, VertexId w, Cost value) { q_[key(u, v, w)] = value; }
    bool has(VertexId u, VertexId v, VertexId w) const { return q_.count(key(u, v, w)) > 0; }
    Cost at(VertexId u, VertexId v, VertexId w) const;
    std::size_t size() const { return q_.size(); }
    const std::unordered_map<std::uint64_t, Cost>& raw() const { return q_; }

    static std::uint64_t key(VertexId u, VertexId v, VertexId w) {
        if (u > w) std::swap(u, w);
        return (static_cast<std::uint64_t>(v) << 42) |
               (static_cast<std::uint64_t>(u) << 21) |
               static_cast<std::uint64_t>(w);
    }
    static void unkey(std::uint64_t k, VertexId& u, VertexId& v, VertexId& w) {
        v = static_cast<VertexId>(k >> 42);
        u = static_cast<VertexId>((k >> 21) & ((1u << 21) - 1));
        w = static_cast<VertexId>(k & ((1u << 21) - 1));
    }

private:
    std::unordered_map<std::uint64_t, Cost> q_;
};

struct LinearCosts {
    std::vector<Cost> c;  // m
};

using CostModel = std::variant<FullQuadratic, RankP, Adjacent, LinearCosts>;

Cost eval_full(const Graph& g, const Tour& tour, const FullQuadratic& model);
Cost eval_rank(const Graph& g, const Tour& tour, const RankP& model);
Cost eval_adjacent(const Tour& tour, const Adjacent& model);
Cost eval_linear(const Graph& g, const Tour& tour, const LinearCosts& model);

// Hamiltonicity check against a graph (family membership lives in graphs.hpp
// where the graph structure is known).
bool is_hamiltonian(const Graph& g, const Tour& tour);

}  // namespace qtsp
