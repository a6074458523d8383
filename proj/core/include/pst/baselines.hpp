#pragma once

#include <cstdint>
#include <vector>

#include "pst/graph.hpp"
#include "pst/matrices.hpp"
#include "pst/metrics.hpp"

namespace pst {

struct SsspResult {
    std::vector<double> dist;          // infinity for unreachable vertices
    std::vector<std::int32_t> parent;  // kNoParent at the source, kNotSearched if unreachable
};

// Classic single-source shortest paths with the indexed queue. If `accesses`
// is non-null, adds one per adjacency entry scanned (deg(u) per settled u).
SsspResult sssp_dijkstra(const Graph& g, int source, std::uint64_t* accesses = nullptr);

// n independent single-source runs; access count is exactly 2m per source.
ApspResult apsp_dijkstra(const Graph& g);

// All-pairs solver that recycles already-solved rows: sources are processed
// in decreasing-degree order, and inside a run, popping a vertex x whose own
// row is already known lets the run fill every remaining distance through x
// from that row instead of continuing the scan. Vertices covered that way
// are skipped outright when popped later, so high-degree hubs make most of
// the later sources nearly free. Only genuine adjacency scans count as
// accesses.
ApspResult apsp_peng(const Graph& g);

// Cubic dynamic-programming oracle used for verification. Rejects graphs
// with more than `max_n` vertices so a mistyped size cannot wedge a run;
// raise the cap explicitly (or via PST_ORACLE_CAP in the CLI) when a bigger
// oracle run is intended.
inline constexpr int kDefaultOracleCap = 2048;
ApspResult apsp_floyd_warshall(const Graph& g, int max_n = kDefaultOracleCap);

}  // namespace pst
