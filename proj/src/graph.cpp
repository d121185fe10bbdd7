#include "groupie/graph.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "groupie/rng.hpp"

namespace groupie {

namespace {

// Lexicographic linearization of unordered pairs (u,v), u < v, over n
// vertices: pairs with first vertex u occupy a contiguous block.
std::uint64_t pair_block_start(std::uint64_t u, std::uint64_t n) {
    return u * (2 * n - 1 - u) / 2;
}

std::pair<vertex_t, vertex_t> unrank_pair(std::uint64_t k, std::uint64_t n) {
    // Invert k = u(2n-1-u)/2 + (v-u-1) via the quadratic root, then fix up
    // the float estimate with exact integer comparisons.
    double nn = static_cast<double>(n);
    double disc = (2 * nn - 1) * (2 * nn - 1) - 8.0 * static_cast<double>(k);
    auto u = static_cast<std::uint64_t>(std::max(0.0, (2 * nn - 1 - std::sqrt(std::max(0.0, disc))) / 2));
    if (u >= n - 1) u = n - 2;
    while (u > 0 && pair_block_start(u, n) > k) --u;
    while (pair_block_start(u + 1, n) <= k) ++u;
    auto v = static_cast<std::uint64_t>(u + 1 + (k - pair_block_start(u, n)));
    return {static_cast<vertex_t>(u), static_cast<vertex_t>(v)};
}

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0,1], got " + std::to_string(p));
}

// Visits the indices of the sampled pairs among [0, total) in increasing
// order.  Dense path: one Bernoulli per pair keyed by pair index.  Sparse
// path (p < 0.25): geometric gap skipping driven by a counter-based draw
// stream; same marginal distribution, far fewer draws.
template <typename OnPair>
void sample_pair_indices(std::uint64_t total, double p, std::uint64_t seed, OnPair&& on_pair) {
    if (total == 0 || p <= 0.0) return;
    if (p >= 0.25) {
        for (std::uint64_t k = 0; k < total; ++k)
            if (rng::unit(rng::stream(seed, k)) < p) on_pair(k);
        return;
    }
    const double log_q = std::log1p(-p);
    std::uint64_t draw = 0;
    std::uint64_t idx = 0;
    while (idx < total) {
        double u = rng::unit_pos(rng::stream(seed, draw++));
        double gap = std::floor(std::log(u) / log_q);
        if (gap >= static_cast<double>(total - idx)) break;
        idx += static_cast<std::uint64_t>(gap);
        on_pair(idx);
        ++idx;
    }
}

}  // namespace

Graph Graph::from_sorted_adjacency(std::vector<std::vector<vertex_t>> adjacency) {
    Graph g;
    g.adjacency_ = std::move(adjacency);
    g.degrees_.resize(g.adjacency_.size());
    std::uint64_t deg_sum = 0;
    for (std::size_t v = 0; v < g.adjacency_.size(); ++v) {
        g.degrees_[v] = static_cast<std::uint32_t>(g.adjacency_[v].size());
        deg_sum += g.degrees_[v];
    }
    assert(deg_sum % 2 == 0);
    g.edges_ = deg_sum / 2;
    return g;
}

Graph Graph::from_edges(vertex_t n, std::span<const std::pair<vertex_t, vertex_t>> edges) {
    std::vector<std::vector<vertex_t>> adj(n);
    for (const auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                        std::to_string(v));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (vertex_t v = 0; v < n; ++v) {
        auto& row = adj[v];
        std::sort(row.begin(), row.end());
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    }
    return from_sorted_adjacency(std::move(adj));
}

bool Graph::has_edge(vertex_t u, vertex_t v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

std::uint64_t Graph::neighbor_degree_sum(vertex_t v) const {
    check_vertex(v);
    std::uint64_t r = 0;
    for (vertex_t u : adjacency_[v]) r += degrees_[u];
    return r;
}

void Graph::check_consistency() const {
    std::uint64_t deg_sum = 0;
    for (vertex_t v = 0; v < vertex_count(); ++v) {
        const auto& row = adjacency_[v];
        if (row.size() != degrees_[v]) throw std::logic_error("degree cache mismatch");
        if (!std::is_sorted(row.begin(), row.end()))
            throw std::logic_error("unsorted neighbor row");
        if (std::adjacent_find(row.begin(), row.end()) != row.end())
            throw std::logic_error("duplicate neighbor entry");
        for (vertex_t u : row) {
            if (u == v) throw std::logic_error("self-loop");
            if (u >= vertex_count()) throw std::logic_error("neighbor out of range");
            if (!has_edge(u, v)) throw std::logic_error("asymmetric adjacency");
        }
        deg_sum += row.size();
    }
    if (deg_sum != 2 * edges_) throw std::logic_error("sum of degrees != 2e");
}

vertex_t total_vertices(const ModelParams& params) {
    return std::visit(
        [](const auto& m) -> vertex_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, GnpParams>)
                return m.n;
            else
                return m.n1 + m.n2;
        },
        params);
}

double edge_probability(const ModelParams& params) {
    return std::visit([](const auto& m) { return m.p; }, params);
}

std::string model_name(const ModelParams& params) {
    return std::holds_alternative<GnpParams>(params) ? "gnp" : "bipartite";
}

void validate_params(const ModelParams& params) {
    std::visit(
        [](const auto& m) {
            check_probability(m.p);
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>, GnpParams>) {
                if (m.n < 1) throw std::invalid_argument("gnp requires n >= 1");
            } else {
                if (m.n1 < 1 || m.n2 < 1)
                    throw std::invalid_argument("bipartite requires n1, n2 >= 1");
            }
        },
        params);
}

Graph gen_gnp(vertex_t n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_gnp requires n >= 1");
    check_probability(p);
    std::vector<std::vector<vertex_t>> adj(n);
    if (n >= 2) {
        const std::uint64_t total = pair_block_start(n - 1, n);  // C(n,2)
        // Lexicographic pair order keeps every neighbor row sorted as built.
        sample_pair_indices(total, p, seed, [&](std::uint64_t k) {
            auto [u, v] = unrank_pair(k, n);
            adj[u].push_back(v);
            adj[v].push_back(u);
        });
    }
    return Graph::from_sorted_adjacency(std::move(adj));
}

Graph gen_bipartite(vertex_t n1, vertex_t n2, double p, std::uint64_t seed) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("gen_bipartite requires n1, n2 >= 1");
    check_probability(p);
    std::vector<std::vector<vertex_t>> adj(static_cast<std::size_t>(n1) + n2);
    const std::uint64_t total = static_cast<std::uint64_t>(n1) * n2;
    sample_pair_indices(total, p, seed, [&](std::uint64_t k) {
        auto u = static_cast<vertex_t>(k / n2);
        auto w = static_cast<vertex_t>(n1 + k % n2);
        adj[u].push_back(w);
        adj[w].push_back(u);
    });
    return Graph::from_sorted_adjacency(std::move(adj));
}

Graph generate(const ModelParams& params, std::uint64_t seed) {
    validate_params(params);
    if (const auto* g = std::get_if<GnpParams>(&params)) return gen_gnp(g->n, g->p, seed);
    const auto& b = std::get<BipartiteParams>(params);
    return gen_bipartite(b.n1, b.n2, b.p, seed);
}

namespace {

[[noreturn]] void fail_line(std::size_t line_no, const std::string& why, std::string_view line) {
    throw parse_error("edge list line " + std::to_string(line_no) + ": " + why + " ('" +
                      std::string(line) + "')");
}

bool parse_u64(std::string_view tok, std::uint64_t& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) toks.push_back(s.substr(i, j - i));
        i = j;
    }
    return toks;
}

}  // namespace

Graph load_edge_list(std::string_view text) {
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    std::unordered_set<std::uint64_t> seen_pairs;
    bool have_header = false;
    bool seen_content = false;
    std::uint64_t declared_n = 0;
    std::uint64_t max_index = 0;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#') continue;

        if (!seen_content && toks[0] == "n") {
            if (toks.size() != 2 || !parse_u64(toks[1], declared_n) ||
                declared_n > 0xffffffffULL)
                fail_line(line_no, "malformed header, expected 'n <N>'", line);
            have_header = true;
            seen_content = true;
            continue;
        }
        seen_content = true;

        std::uint64_t u = 0, v = 0;
        if (toks.size() != 2 || !parse_u64(toks[0], u) || !parse_u64(toks[1], v))
            fail_line(line_no, "expected two vertex indices", line);
        if (u > 0xffffffffULL || v > 0xffffffffULL)
            fail_line(line_no, "vertex index too large", line);
        if (u == v) fail_line(line_no, "self-loop", line);
        if (u > v) fail_line(line_no, "endpoints must satisfy u < v", line);
        if (have_header && v >= declared_n)
            fail_line(line_no, "vertex index exceeds declared n=" + std::to_string(declared_n),
                      line);
        if (!seen_pairs.insert((u << 32) | v).second) fail_line(line_no, "duplicate edge", line);
        max_index = std::max(max_index, v);
        edges.emplace_back(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
    }

    if (!seen_content) throw parse_error("edge list: empty document");
    std::uint64_t n = have_header ? declared_n : max_index + 1;

    try {
        return Graph::from_edges(static_cast<vertex_t>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("edge list: ") + e.what());
    }
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_edge_list(buf.str());
}

}  // namespace groupie
