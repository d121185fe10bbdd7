#pragma once
#include <cstdint>
#include <vector>

#include "groupie/graph.hpp"
#include "groupie/rational.hpp"

namespace groupie {

// A vertex is a groupie when the average degree of its neighbors is at
// least the graph's average degree 2e/n; an isolated vertex only when the
// whole graph is edgeless.  The comparison n*r(v) >= 2e*deg(v) runs in
// 128-bit integers, so ties (regular graphs) are exact at any n.
bool is_groupie(const Graph& g, vertex_t v);

struct GroupieReport {
    std::vector<bool> flags;  // per-vertex groupie classification
    std::uint64_t count = 0;  // number of groupies N
    vertex_t n = 0;
    std::uint64_t e = 0;

    double proportion() const { return static_cast<double>(count) / static_cast<double>(n); }
    Rational proportion_rational() const {
        return Rational(static_cast<int128>(count), static_cast<int128>(n));
    }
};

// Classifies every vertex; r(v) values accumulate in one pass over the
// edges, O(n + e) total.
GroupieReport groupie_report(const Graph& g);

// Partition of the edges of G around a vertex v: V1 = neighbors of v,
// V2 = the other n-1-i vertices; e1/e2/e3 = edges inside V1, inside V2,
// and across.  Always i + e1 + e2 + e3 = e.
struct NeighborhoodStats {
    vertex_t v = 0;
    std::uint32_t i = 0;  // deg(v)
    std::uint64_t e1 = 0;
    std::uint64_t e2 = 0;
    std::uint64_t e3 = 0;
};

NeighborhoodStats neighborhood_stats(const Graph& g, vertex_t v);

// S = 2(n-i)e1 + (n-2i)(e3+i) - 2i*e2.  For deg(v) >= 1, S >= 0 is
// equivalent to v being a groupie.
std::int64_t single_vertex_statistic(const NeighborhoodStats& stats, vertex_t n);

// Partition of the other n-2 vertices around an ordered pair (v1, v2):
// V1 adjacent to v1 only, V2 to both, V3 to v2 only, V4 to neither.
// e_jk counts edges with endpoints in V_j and V_k (edges incident to v1 or
// v2 are excluded; they are determined by i1, i2, i3 and `adjacent`).
struct PairPartitionStats {
    vertex_t v1 = 0, v2 = 0;
    bool adjacent = false;
    std::uint32_t i1 = 0, i2 = 0, i3 = 0, i4 = 0;
    std::uint64_t e11 = 0, e12 = 0, e13 = 0, e14 = 0;
    std::uint64_t e22 = 0, e23 = 0, e24 = 0;
    std::uint64_t e33 = 0, e34 = 0;
    std::uint64_t e44 = 0;

    std::uint64_t edge_sum() const {
        return e11 + e12 + e13 + e14 + e22 + e23 + e24 + e33 + e34 + e44;
    }
    // Edges of the whole graph reconstructed from the partition.
    std::uint64_t reconstructed_edges() const {
        return edge_sum() + i1 + 2ULL * i2 + i3 + (adjacent ? 1 : 0);
    }
};

PairPartitionStats pair_partition_stats(const Graph& g, vertex_t v1, vertex_t v2);

struct PairStatistics {
    std::int64_t b1 = 0;
    std::int64_t b2 = 0;
};

// The adjacent-pair statistics: B1 >= 0 and B2 >= 0 together are
// equivalent to both endpoints being groupies.  Only defined when
// stats.adjacent; throws std::invalid_argument otherwise.
PairStatistics pair_statistics(const PairPartitionStats& stats, vertex_t n);

}  // namespace groupie
