#pragma once

#include <cstdint>
#include <vector>

#include "pst/graph.hpp"
#include "pst/indexed_min_queue.hpp"
#include "pst/matrices.hpp"
#include "pst/metrics.hpp"

namespace pst {

// All-pairs shortest paths by growing one shortest-path tree per source,
// all trees advancing together in round-robin sweeps.
//
// Each tree T(v) settles vertices outward from its root v exactly as a
// single-source run would, but instead of scanning a settled vertex's
// adjacency list, a non-root node of T(v) keeps a link ("cor") to the node
// for the same vertex in T(g), where g is the neighbor of v through which
// that vertex's current path enters v. The children of the cor node are the
// only extension candidates considered, so T(v) reuses the expansion work
// T(g) already did and touches far fewer adjacency entries than n
// independent single-source runs.
//
// A settled node's candidate children are final only once the cor target
// has itself been settled by its owning tree. When the minimum-priority
// candidate's cor target is not yet settled, the candidate is re-enqueued
// unchanged and the tree waits for a later sweep (a "wait"). With positive
// weights some tree can always make progress, so the sweeps never deadlock.
class PstwEngine {
public:
    // Builds per-source state and the result matrices. Rejects disconnected
    // graphs: distances are zero-initialized, so an unreached vertex would
    // be indistinguishable from one at distance zero.
    explicit PstwEngine(const Graph& g);

    // Advances tree T(source) by one step. Returns true while that tree
    // needs further calls, false once it is complete. Steps:
    //   1. first call: create the settled root;
    //   2. second call: record and enqueue the root's full adjacency list;
    //   3. later calls: pop the best candidate; settle it and consider the
    //      children of its cor node, or re-enqueue it untouched if the cor
    //      target is not settled yet (a "wait").
    bool extend(int source);

    // Runs sweeps over all unfinished trees in ascending source id order
    // until every tree is complete. Throws contract_error if a full sweep
    // makes no progress or the sweep count exceeds 10 * n * n; both are
    // impossible per the progress argument and would indicate a bug.
    void run();

    bool finished() const { return active_count_ == 0; }
    int active_count() const { return active_count_; }

    // Introspection for tests.
    int tree_size(int source) const;        // nodes created in T(source)
    int determined_count(int source) const; // settled vertices in T(source)
    std::size_t queue_size(int source) const;
    bool is_determined(int source, int vertex) const;

    // Full structural check of every tree: parent/child links, cor targets,
    // arena bookkeeping, and distance/parent-matrix consistency. Throws
    // contract_error on the first breakage. O(total nodes); meant for tests.
    void audit_trees() const;

    const DistanceMatrix& distances() const { return dist_; }
    const ParentMatrix& parents() const { return parent_; }
    const RunMetrics& metrics() const { return metrics_; }
    RunMetrics& metrics() { return metrics_; }

    // Moves the matrices and metrics out; the engine must not be used after.
    ApspResult release_result();

private:
    static constexpr std::uint32_t kNull = UINT32_MAX;

    // Tree nodes live in one shared arena addressed by 32-bit handles;
    // `cor` is a handle into another source's tree. Child lists are
    // intrusive and doubly linked so a node can be detached in O(1) when a
    // cheaper path re-parents it.
    struct TreeNode {
        std::int32_t vertex = -1;
        std::int32_t owner = -1;  // source whose tree this node belongs to
        std::uint32_t cor = kNull;
        std::uint32_t parent = kNull;
        std::uint32_t first_child = kNull;
        std::uint32_t next_sibling = kNull;
        std::uint32_t prev_sibling = kNull;
        double parent_edge_len = 0.0;
        bool determined = false;
    };

    // Per-source search state.
    struct SourceState {
        IndexedMinQueue queue;            // keyed by vertex id
        std::vector<std::uint32_t> node;  // vertex id -> arena handle (kNull if absent)
        int created = 0;
        int settled = 0;
        bool root_created = false;
        bool seeded = false;  // root adjacency recorded
        bool done = false;
    };

    std::uint32_t new_node(int owner, int vertex);
    void attach_child(std::uint32_t parent, std::uint32_t child);
    void detach(std::uint32_t child);
    void audit_one_tree(int source) const;

    const Graph& g_;
    int n_;
    std::vector<TreeNode> arena_;
    std::vector<SourceState> trees_;
    DistanceMatrix dist_;
    ParentMatrix parent_;
    RunMetrics metrics_;
    std::uint64_t settled_total_ = 0;
    int active_count_;
};

// Convenience wrapper: construct, run to completion, return the result.
// Wall time covers the sweeps only, not graph or state construction.
ApspResult run_pstw(const Graph& g);

}  // namespace pst
