#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qtsp/core.hpp"

namespace qtsp {

enum class Family { SEE, DEE, PV, MEE };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Layered graph G*: tip vertex t plus m cycles C(1)..C(m), consecutive
// cycles fully interconnected, t joined to C(1) and C(m).  Canonical edge
// order: E^0, then per cycle k its cycle edges followed by the cross edges
// to C(k+1) in lexicographic (i,j) order, finally E^m.
//
// m >= 2 is required: with a single cycle E^0 and E^m coincide and the SEE
// count formula double-counts reversal-equal tours.
class GStarGraph {
public:
    explicit GStarGraph(std::vector<int> cycle_sizes);

    int m() const { return static_cast<int>(r_.size()); }
    int r(int k) const { return r_.at(k - 1); }  // 1-based cycle index
    const std::vector<int>& cycle_sizes() const { return r_; }

    VertexId tip() const { return 0; }
    // 1-based cycle index k, 1-based position i (taken modulo r_k, with the
    // convention r_k+1 == 1 and 0 == r_k).
    VertexId vertex(int k, int i) const;
    EdgeId cycle_edge(int k, int i) const;  // edge (v^k_i, v^k_{i+1})

    const Graph& graph() const { return g_; }

private:
    std::vector<int> r_;
    std::vector<int> base_;  // first vertex id of each cycle
    Graph g_;
};

// Paired vertex graph G^p on an even number n >= 4 of vertices.  Canonical
// edge order: (v_1,v'_1), then per gap k the four cross edges
// (v_k,v_{k+1}), (v_k,v'_{k+1}), (v'_k,v_{k+1}), (v'_k,v'_{k+1}),
// finally (v_{n/2},v'_{n/2}).
class PVGraph {
public:
    explicit PVGraph(int n);

    int n() const { return n_; }
    int pairs() const { return n_ / 2; }
    VertexId v(int k) const { return 2 * (k - 1); }       // 1-based pair index
    VertexId vp(int k) const { return 2 * (k - 1) + 1; }

    const Graph& graph() const { return g_; }

private:
    int n_;
    Graph g_;
};

// G^M: cycle on U = {u_1..u_r} plus complete bipartite edges to
// V = {v_1..v_s}, 3 <= s <= r.  Canonical edge order: cycle edges
// e_i = (u_i, u_{i+1}) by i, then E_uv lexicographic.
class MEEGraph {
public:
    MEEGraph(int r, int s);

    int r() const { return r_; }
    int s() const { return s_; }
    VertexId u(int i) const { return ((i - 1) % r_ + r_) % r_; }  // 1-based, modulo r
    VertexId v(int j) const { return r_ + j - 1; }                // 1-based
    EdgeId cycle_edge(int i) const { return ((i - 1) % r_ + r_) % r_; }

    const Graph& graph() const { return g_; }

private:
    int r_, s_;
    Graph g_;
};

// Enumerators visit each tour of the family exactly once, in a deterministic
// lexicographic order over the per-cycle (per-gap, per-injection) choice
// tuples.  The callback form is the lazy primitive; the vector form collects.
void for_each_see(const GStarGraph& g, const std::function<void(const Tour&)>& fn);
void for_each_dee(const GStarGraph& g, const std::function<void(const Tour&)>& fn);
void for_each_pv(const PVGraph& g, const std::function<void(const Tour&)>& fn);
void for_each_mee(const MEEGraph& g, const std::function<void(const Tour&)>& fn);

std::vector<Tour> enumerate_see(const GStarGraph& g);
std::vector<Tour> enumerate_dee(const GStarGraph& g);
std::vector<Tour> enumerate_pv(const PVGraph& g);
std::vector<Tour> enumerate_mee(const MEEGraph& g);

// Closed-form counts.  For DEE the enumerator is authoritative and this
// runs it; dee_closed_form gives the printed formula under the V^{k+1}
// reading for comparison.
long long count_family(const GStarGraph& g, Family f);
long long count_family(const PVGraph& g);
long long count_family(const MEEGraph& g);
long long dee_closed_form(const GStarGraph& g);

struct TourReport {
    bool hamiltonian = false;
    bool family_checked = false;
    bool member = false;
    std::string message;
};

// Structural family membership (edge-count profiles), no enumeration.
TourReport validate_tour(const Tour& t, const GStarGraph& g, Family f);
TourReport validate_tour(const Tour& t, const PVGraph& g);
TourReport validate_tour(const Tour& t, const MEEGraph& g);

// Assemble a tour from an edge set that covers every vertex with degree 2.
Tour tour_from_edges(const Graph& g, const std::vector<EdgeId>& edges);

}  // namespace qtsp
