#include "groupie/analysis.hpp"

#include <stdexcept>

namespace groupie {

namespace {

using uint128 = unsigned __int128;

bool groupie_from_parts(std::uint64_t n, std::uint64_t e, std::uint64_t deg, std::uint64_t r) {
    if (deg == 0) return e == 0;
    return uint128(n) * r >= uint128(2) * e * deg;
}

}  // namespace

bool is_groupie(const Graph& g, vertex_t v) {
    if (g.vertex_count() == 0) throw std::invalid_argument("is_groupie on empty graph");
    return groupie_from_parts(g.vertex_count(), g.edge_count(), g.degree(v),
                              g.neighbor_degree_sum(v));
}

GroupieReport groupie_report(const Graph& g) {
    const vertex_t n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("groupie_report on empty graph");
    const std::uint64_t e = g.edge_count();

    // r(v) for all v in one sweep: each directed adjacency entry (v, u)
    // contributes deg(u).
    std::vector<std::uint64_t> r(n, 0);
    for (vertex_t v = 0; v < n; ++v)
        for (vertex_t u : g.neighbors(v)) r[v] += g.degree(u);

    GroupieReport rep;
    rep.flags.resize(n);
    rep.n = n;
    rep.e = e;
    for (vertex_t v = 0; v < n; ++v) {
        bool flag = groupie_from_parts(n, e, g.degree(v), r[v]);
        rep.flags[v] = flag;
        rep.count += flag;
    }
    return rep;
}

NeighborhoodStats neighborhood_stats(const Graph& g, vertex_t v) {
    const vertex_t n = g.vertex_count();
    NeighborhoodStats s;
    s.v = v;
    s.i = g.degree(v);

    // Mark V1, then bucket every edge not incident to v by endpoint
    // membership.
    std::vector<bool> in_v1(n, false);
    for (vertex_t u : g.neighbors(v)) in_v1[u] = true;

    for (vertex_t u = 0; u < n; ++u) {
        if (u == v) continue;
        for (vertex_t w : g.neighbors(u)) {
            if (w <= u || w == v) continue;  // each edge once, skip v's edges
            if (in_v1[u] && in_v1[w])
                ++s.e1;
            else if (!in_v1[u] && !in_v1[w])
                ++s.e2;
            else
                ++s.e3;
        }
    }
    return s;
}

std::int64_t single_vertex_statistic(const NeighborhoodStats& stats, vertex_t n) {
    const auto N = static_cast<std::int64_t>(n);
    const auto i = static_cast<std::int64_t>(stats.i);
    return 2 * (N - i) * static_cast<std::int64_t>(stats.e1) +
           (N - 2 * i) * (static_cast<std::int64_t>(stats.e3) + i) -
           2 * i * static_cast<std::int64_t>(stats.e2);
}

PairPartitionStats pair_partition_stats(const Graph& g, vertex_t v1, vertex_t v2) {
    if (v1 == v2) throw std::invalid_argument("pair_partition_stats requires distinct vertices");
    const vertex_t n = g.vertex_count();

    PairPartitionStats s;
    s.v1 = v1;
    s.v2 = v2;
    s.adjacent = g.has_edge(v1, v2);

    // class 0 = V1 (adj v1 only), 1 = V2 (both), 2 = V3 (adj v2 only),
    // 3 = V4 (neither); v1/v2 themselves get a sentinel.
    constexpr std::uint8_t kSelf = 0xff;
    std::vector<std::uint8_t> cls(n, 3);
    cls[v1] = kSelf;
    cls[v2] = kSelf;
    for (vertex_t u : g.neighbors(v1))
        if (u != v2) cls[u] = 0;
    for (vertex_t u : g.neighbors(v2))
        if (u != v1) cls[u] = (cls[u] == 0) ? 1 : 2;

    std::uint32_t sizes[4] = {0, 0, 0, 0};
    for (vertex_t u = 0; u < n; ++u)
        if (cls[u] != kSelf) ++sizes[cls[u]];
    s.i1 = sizes[0];
    s.i2 = sizes[1];
    s.i3 = sizes[2];
    s.i4 = sizes[3];

    std::uint64_t cross[4][4] = {};
    for (vertex_t u = 0; u < n; ++u) {
        if (cls[u] == kSelf) continue;
        for (vertex_t w : g.neighbors(u)) {
            if (w <= u || cls[w] == kSelf) continue;
            auto a = cls[u], b = cls[w];
            if (a > b) std::swap(a, b);
            ++cross[a][b];
        }
    }
    s.e11 = cross[0][0];
    s.e12 = cross[0][1];
    s.e13 = cross[0][2];
    s.e14 = cross[0][3];
    s.e22 = cross[1][1];
    s.e23 = cross[1][2];
    s.e24 = cross[1][3];
    s.e33 = cross[2][2];
    s.e34 = cross[2][3];
    s.e44 = cross[3][3];
    return s;
}

PairStatistics pair_statistics(const PairPartitionStats& stats, vertex_t n) {
    if (!stats.adjacent)
        throw std::invalid_argument("pair_statistics is defined for adjacent pairs only");

    const auto N = static_cast<std::int64_t>(n);
    const auto i1 = static_cast<std::int64_t>(stats.i1);
    const auto i2 = static_cast<std::int64_t>(stats.i2);
    const auto i3 = static_cast<std::int64_t>(stats.i3);
    const std::int64_t d1 = i1 + i2 + 1;  // deg(v1)
    const std::int64_t d2 = i3 + i2 + 1;  // deg(v2)
    const std::int64_t t = i1 + i2 + i3 + 1;

    const auto e11 = static_cast<std::int64_t>(stats.e11);
    const auto e12 = static_cast<std::int64_t>(stats.e12);
    const auto e13 = static_cast<std::int64_t>(stats.e13);
    const auto e14 = static_cast<std::int64_t>(stats.e14);
    const auto e22 = static_cast<std::int64_t>(stats.e22);
    const auto e23 = static_cast<std::int64_t>(stats.e23);
    const auto e24 = static_cast<std::int64_t>(stats.e24);
    const auto e33 = static_cast<std::int64_t>(stats.e33);
    const auto e34 = static_cast<std::int64_t>(stats.e34);
    const auto e44 = static_cast<std::int64_t>(stats.e44);

    PairStatistics out;
    out.b1 = 2 * (N - d1) * (e11 + e22 + e12 + i2) +
             (N - 2 * d1) * (e13 + e14 + e23 + e24 + t) - 2 * d1 * (e33 + e34 + e44);
    out.b2 = 2 * (N - d2) * (e33 + e22 + e23 + i2) +
             (N - 2 * d2) * (e13 + e34 + e12 + e24 + t) - 2 * d2 * (e11 + e14 + e44);
    return out;
}

}  // namespace groupie
