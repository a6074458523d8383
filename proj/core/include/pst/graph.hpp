#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace pst {

struct NeighborEdge {
    std::int32_t to;
    double weight;

    friend bool operator==(const NeighborEdge&, const NeighborEdge&) = default;
};

// Half-open range of uniformly drawn edge weights. Weights must stay
// strictly positive, so lo > 0.
struct WeightRange {
    double lo = 0.1;
    double hi = 1.0;
};

using EdgeTriple = std::tuple<int, int, double>;  // (u, v, weight)

// Undirected weighted graph with strictly positive edge weights, no
// self-loops and no parallel edges. Vertex ids are 0..n-1. Immutable after
// construction; adjacency lists are sorted by neighbor id.
class Graph {
public:
    // Validates and builds; each input triple is one undirected edge.
    static Graph from_edges(int n, std::span<const EdgeTriple> edges);

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return m_; }

    std::span<const NeighborEdge> neighbors(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    // Weight of edge (u, v), or nullopt when absent.
    std::optional<double> edge_weight(int u, int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph() = default;

    std::int32_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<NeighborEdge>> adj_;
};

/**
 * d-dimensional hypercube graph: n = 2^d vertices, an edge wherever two ids
 * differ in exactly one bit, so every vertex has degree d. Weights are drawn
 * uniformly from [wr.lo, wr.hi). Identical (d, wr, seed) give bit-identical
 * graphs. Requires 1 <= d <= 20.
 */
Graph gen_hypercube(int dim, const WeightRange& wr, std::uint64_t seed);

/**
 * Scale-free graph by preferential attachment: a complete graph on n_prime
 * seed vertices, then each remaining vertex attaches to n_prime distinct
 * existing vertices chosen with probability proportional to current degree.
 * m = n_prime*(n_prime-1)/2 + (n-n_prime)*n_prime. Requires 2 <= n_prime < n.
 * Identical (n, n_prime, wr, seed) give bit-identical graphs.
 */
Graph gen_scale_free(int n, int n_prime, const WeightRange& wr, std::uint64_t seed);

// Text edge-list persistence: header "n m", then one "u v weight" line per
// edge with u < v, weights printed with enough digits to round-trip exactly.
void save_graph(const Graph& g, std::ostream& out);
void save_graph(const Graph& g, const std::string& path);

// Parses the format above. Malformed lines, ids out of range, nonpositive
// weights and duplicate edges are rejected with the offending line number.
Graph load_graph(std::istream& in);
Graph load_graph(const std::string& path);

struct GraphStats {
    int n = 0;
    std::size_t m = 0;
    double average_degree = 0.0;
    bool connected = false;
};

GraphStats graph_stats(const Graph& g);

}  // namespace pst
