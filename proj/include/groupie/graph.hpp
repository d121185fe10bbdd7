#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "groupie/errors.hpp"

namespace groupie {

using vertex_t = std::uint32_t;

// Simple undirected graph: sorted neighbor arrays plus a cached degree
// vector.  Immutable after construction; safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Adopts an adjacency list whose rows are already sorted, mirror and
    // self-loop free (generator fast path).  Degree cache and edge count
    // are derived here.
    static Graph from_sorted_adjacency(std::vector<std::vector<vertex_t>> adjacency);

    // Full-validation path: sorts rows, rejects self-loops, duplicates and
    // asymmetric input.
    static Graph from_edges(vertex_t n, std::span<const std::pair<vertex_t, vertex_t>> edges);

    vertex_t vertex_count() const noexcept { return static_cast<vertex_t>(adjacency_.size()); }
    std::uint64_t edge_count() const noexcept { return edges_; }

    std::uint32_t degree(vertex_t v) const {
        check_vertex(v);
        return degrees_[v];
    }
    std::span<const vertex_t> neighbors(vertex_t v) const {
        check_vertex(v);
        return adjacency_[v];
    }
    bool has_edge(vertex_t u, vertex_t v) const;

    // r(v): sum of the degrees of v's neighbors; 0 for isolated v.
    std::uint64_t neighbor_degree_sum(vertex_t v) const;

    // Structural invariant sweep (symmetry, sortedness, no loops,
    // sum deg = 2e).  Throws std::logic_error on violation.
    void check_consistency() const;

private:
    void check_vertex(vertex_t v) const {
        if (v >= adjacency_.size())
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                                    std::to_string(adjacency_.size()) + ")");
    }

    std::vector<std::vector<vertex_t>> adjacency_;
    std::vector<std::uint32_t> degrees_;
    std::uint64_t edges_ = 0;
};

// Model parameters for the two random families.
struct GnpParams {
    vertex_t n = 0;
    double p = 0.0;
};
struct BipartiteParams {
    vertex_t n1 = 0;
    vertex_t n2 = 0;
    double p = 0.0;
};
using ModelParams = std::variant<GnpParams, BipartiteParams>;

vertex_t total_vertices(const ModelParams& params);
double edge_probability(const ModelParams& params);
std::string model_name(const ModelParams& params);
// Throws std::invalid_argument on empty parts or p outside [0,1].
void validate_params(const ModelParams& params);

// G(n,p): each of the C(n,2) unordered pairs is an edge independently with
// probability p.  Deterministic in (n, p, seed).
Graph gen_gnp(vertex_t n, double p, std::uint64_t seed);

// Random bipartite graph on n1+n2 vertices (part 1 = [0, n1)); only
// cross-part pairs are edge candidates.
Graph gen_bipartite(vertex_t n1, vertex_t n2, double p, std::uint64_t seed);

Graph generate(const ModelParams& params, std::uint64_t seed);

// Edge-list text: optional first line "n <N>", then one "u v" pair per line
// with 0 <= u < v < N; '#' starts a comment.  Without the header, N is
// 1 + max vertex index.  Throws parse_error naming the offending line.
Graph load_edge_list(std::string_view text);
Graph load_edge_list_file(const std::string& path);

}  // namespace groupie
