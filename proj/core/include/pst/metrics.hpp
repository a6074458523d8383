#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>

#include "pst/graph.hpp"
#include "pst/matrices.hpp"

namespace pst {

// Instrumentation counters shared by every all-pairs solver. `access_count`
// is the number of adjacency-list entries the algorithm touched; dividing by
// n^2 gives the per-pair access cost `alpha`, the quantity the benchmark
// harness reports.
struct RunMetrics {
    std::uint64_t access_count = 0;
    std::uint64_t wait_count = 0;   // tree-growth re-enqueues (zero for baselines)
    std::uint64_t sweeps = 0;       // round-robin passes (zero for baselines)
    double wall_seconds = 0.0;
    std::string algorithm;
};

inline double alpha(std::uint64_t access_count, int n) {
    return static_cast<double>(access_count) / (static_cast<double>(n) * static_cast<double>(n));
}

struct ApspResult {
    DistanceMatrix dist;
    ParentMatrix parent;
    RunMetrics metrics;
};

// Outcome of checking one solver's output against a reference.
struct VerifyReport {
    double max_abs_error = 0.0;
    std::uint64_t mismatch_count = 0;   // entries differing beyond tolerance
    std::uint64_t tree_violations = 0;  // parent entries inconsistent with distances
    bool pass = true;
};

inline constexpr double kVerifyTolerance = 1e-9;

// Entry-wise comparison of two distance matrices of equal size.
VerifyReport verify_distances(const DistanceMatrix& got, const DistanceMatrix& want,
                              double tol = kVerifyTolerance);

// Checks that `parent` encodes shortest-path trees consistent with `dist`:
// every non-root entry parent[s][v] = p must be a real edge (p, v) with
// dist[s][v] = dist[s][p] + w(p, v) up to `tol`, and roots must sit at
// distance zero.
VerifyReport verify_tree(const ParentMatrix& parent, const DistanceMatrix& dist,
                         const Graph& g, double tol = kVerifyTolerance);

// Runs `fn()` and returns {result, elapsed seconds}.
template <typename F>
auto timed(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = std::forward<F>(fn)();
    const auto t1 = std::chrono::steady_clock::now();
    return std::pair{std::move(result), std::chrono::duration<double>(t1 - t0).count()};
}

}  // namespace pst
