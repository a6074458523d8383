#include "pst/graph.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "pst/contract.hpp"
#include "pst/detail/rng_util.hpp"

namespace pst {

namespace {

void check_weight_range(const WeightRange& wr) {
    require(wr.lo > 0.0 && std::isfinite(wr.lo), "WeightRange: lo must be > 0");
    require(wr.hi >= wr.lo && std::isfinite(wr.hi), "WeightRange: hi must be >= lo");
}

std::uint64_t pair_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw std::runtime_error("load_graph: line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const EdgeTriple> edges) {
    require(n >= 1, "Graph: need at least one vertex");
    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.adj_.resize(static_cast<std::size_t>(n));

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (const auto& [u, v, w] : edges) {
        require(u >= 0 && u < n && v >= 0 && v < n, "Graph: vertex id out of range");
        require(u != v, "Graph: self-loops are not allowed");
        require(w > 0.0 && std::isfinite(w), "Graph: edge weights must be strictly positive");
        require(seen.insert(pair_key(u, v)).second, "Graph: parallel edge");
        g.adj_[static_cast<std::size_t>(u)].push_back({v, w});
        g.adj_[static_cast<std::size_t>(v)].push_back({u, w});
    }
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end(),
                  [](const NeighborEdge& a, const NeighborEdge& b) { return a.to < b.to; });
    }
    return g;
}

std::optional<double> Graph::edge_weight(int u, int v) const {
    const auto& nbrs = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const NeighborEdge& e, int id) { return e.to < id; });
    if (it != nbrs.end() && it->to == v) return it->weight;
    return std::nullopt;
}

Graph gen_hypercube(int dim, const WeightRange& wr, std::uint64_t seed) {
    require(dim >= 1 && dim <= 20, "gen_hypercube: dimension must be in [1, 20]");
    check_weight_range(wr);

    const int n = 1 << dim;
    std::mt19937_64 rng(seed);
    std::vector<EdgeTriple> edges;
    edges.reserve(static_cast<std::size_t>(n) * dim / 2);
    for (int v = 0; v < n; ++v) {
        for (int b = 0; b < dim; ++b) {
            const int u = v ^ (1 << b);
            if (u > v) edges.emplace_back(v, u, detail::uniform_real(rng, wr.lo, wr.hi));
        }
    }
    return Graph::from_edges(n, edges);
}

Graph gen_scale_free(int n, int n_prime, const WeightRange& wr, std::uint64_t seed) {
    require(n_prime >= 2, "gen_scale_free: n_prime must be >= 2");
    require(n_prime < n, "gen_scale_free: n_prime must be < n");
    check_weight_range(wr);

    std::mt19937_64 rng(seed);
    std::vector<EdgeTriple> edges;
    edges.reserve(static_cast<std::size_t>(n_prime) * (n_prime - 1) / 2 +
                  static_cast<std::size_t>(n - n_prime) * n_prime);

    std::vector<std::uint64_t> degree(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n_prime; ++i) {
        for (int j = i + 1; j < n_prime; ++j) {
            edges.emplace_back(i, j, detail::uniform_real(rng, wr.lo, wr.hi));
            ++degree[static_cast<std::size_t>(i)];
            ++degree[static_cast<std::size_t>(j)];
        }
    }

    // Each new vertex picks n_prime distinct targets without replacement,
    // proportionally to the degrees as they were before it arrived.
    std::vector<std::uint64_t> available;
    std::vector<int> picks;
    for (int v = n_prime; v < n; ++v) {
        available.assign(degree.begin(), degree.begin() + v);
        std::uint64_t total = 0;
        for (int i = 0; i < v; ++i) total += available[static_cast<std::size_t>(i)];
        picks.clear();
        for (int k = 0; k < n_prime; ++k) {
            const std::uint64_t ticket = detail::uniform_below(rng, total);
            const std::size_t target = detail::pick_weighted(available, ticket);
            picks.push_back(static_cast<int>(target));
            total -= available[target];
            available[target] = 0;  // without replacement
        }
        for (int target : picks) {
            edges.emplace_back(target, v, detail::uniform_real(rng, wr.lo, wr.hi));
            ++degree[static_cast<std::size_t>(target)];
            ++degree[static_cast<std::size_t>(v)];
        }
    }
    return Graph::from_edges(n, edges);
}

void save_graph(const Graph& g, std::ostream& out) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    char buf[64];
    for (int u = 0; u < g.num_vertices(); ++u) {
        for (const auto& e : g.neighbors(u)) {
            if (e.to < u) continue;  // emit each edge once, u < v
            std::snprintf(buf, sizeof buf, "%.17g", e.weight);
            out << u << ' ' << e.to << ' ' << buf << '\n';
        }
    }
    if (!out) throw std::runtime_error("save_graph: write failed");
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_graph: cannot open " + path);
    save_graph(g, out);
}

Graph load_graph(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) parse_fail(1, "missing header");
    ++line_no;
    long long n = 0, m = 0;
    {
        std::istringstream hdr(line);
        std::string extra;
        if (!(hdr >> n >> m) || (hdr >> extra)) parse_fail(line_no, "header must be 'n m'");
        if (n < 1) parse_fail(line_no, "vertex count must be >= 1");
        if (m < 0) parse_fail(line_no, "edge count must be >= 0");
    }

    std::vector<EdgeTriple> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(m) * 2);

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
        long long u = 0, v = 0;
        double w = 0.0;
        std::istringstream row(line);
        std::string extra;
        if (!(row >> u >> v >> w) || (row >> extra)) parse_fail(line_no, "expected 'u v weight'");
        if (u < 0 || u >= n || v < 0 || v >= n) parse_fail(line_no, "vertex id out of range");
        if (u >= v) parse_fail(line_no, "edges must be listed with u < v");
        if (!(w > 0.0) || !std::isfinite(w)) parse_fail(line_no, "weight must be strictly positive");
        if (!seen.insert(pair_key(static_cast<int>(u), static_cast<int>(v))).second)
            parse_fail(line_no, "duplicate edge");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v), w);
    }

    if (static_cast<long long>(edges.size()) != m)
        throw std::runtime_error("load_graph: header promised " + std::to_string(m) +
                                 " edges, file has " + std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_graph: cannot open " + path);
    return load_graph(in);
}

GraphStats graph_stats(const Graph& g) {
    GraphStats st;
    st.n = g.num_vertices();
    st.m = g.num_edges();
    st.average_degree = 2.0 * static_cast<double>(st.m) / static_cast<double>(st.n);

    std::vector<char> visited(static_cast<std::size_t>(st.n), 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const auto& e : g.neighbors(u)) {
            if (!visited[static_cast<std::size_t>(e.to)]) {
                visited[static_cast<std::size_t>(e.to)] = 1;
                ++reached;
                stack.push_back(e.to);
            }
        }
    }
    st.connected = (reached == st.n);
    return st;
}

}  // namespace pst
