#include "pst/pstw.hpp"

#include <utility>
#include <vector>

#include "pst/contract.hpp"

namespace pst {

PstwEngine::PstwEngine(const Graph& g)
    : g_(g), n_(g.num_vertices()), dist_(n_), parent_(n_), active_count_(n_) {
    require(graph_stats(g).connected, "PstwEngine: graph must be connected");
    arena_.reserve(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_));
    trees_.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
        trees_.push_back(SourceState{
            IndexedMinQueue(n_),
            std::vector<std::uint32_t>(static_cast<std::size_t>(n_), kNull)});
    }
    metrics_.algorithm = "pstw";
}

std::uint32_t PstwEngine::new_node(int owner, int vertex) {
    const std::uint32_t h = static_cast<std::uint32_t>(arena_.size());
    TreeNode node;
    node.vertex = vertex;
    node.owner = owner;
    arena_.push_back(node);
    SourceState& st = trees_[static_cast<std::size_t>(owner)];
    st.node[static_cast<std::size_t>(vertex)] = h;
    ++st.created;
    return h;
}

void PstwEngine::attach_child(std::uint32_t parent, std::uint32_t child) {
    const std::uint32_t head = arena_[parent].first_child;
    arena_[child].parent = parent;
    arena_[child].prev_sibling = kNull;
    arena_[child].next_sibling = head;
    if (head != kNull) arena_[head].prev_sibling = child;
    arena_[parent].first_child = child;
}

void PstwEngine::detach(std::uint32_t child) {
    const std::uint32_t prev = arena_[child].prev_sibling;
    const std::uint32_t next = arena_[child].next_sibling;
    if (prev != kNull) {
        arena_[prev].next_sibling = next;
    } else {
        arena_[arena_[child].parent].first_child = next;
    }
    if (next != kNull) arena_[next].prev_sibling = prev;
    arena_[child].parent = kNull;
    arena_[child].prev_sibling = kNull;
    arena_[child].next_sibling = kNull;
}

bool PstwEngine::extend(int source) {
    require(source >= 0 && source < n_, "extend: source out of range");
    SourceState& st = trees_[static_cast<std::size_t>(source)];
    require(!st.done, "extend: tree already complete");

    if (!st.root_created) {
        // Step 1: the root settles immediately at distance zero.
        const std::uint32_t root = new_node(source, source);
        arena_[root].determined = true;
        st.root_created = true;
        st.settled = 1;
        ++settled_total_;
        return true;
    }

    if (!st.seeded) {
        // Step 2: record the source's own adjacency — the one full scan no
        // amount of tree reuse can avoid. Each neighbor's node links to the
        // root of that neighbor's own tree.
        st.seeded = true;
        const auto nbrs = g_.neighbors(source);
        metrics_.access_count += nbrs.size();
        const std::uint32_t root = st.node[static_cast<std::size_t>(source)];
        for (const NeighborEdge& nb : nbrs) {
            const SourceState& nb_tree = trees_[static_cast<std::size_t>(nb.to)];
            require(nb_tree.root_created,
                    "extend: neighbor tree has no root yet; drive sources round-robin");
            dist_.at(nb.to, source) = nb.weight;
            parent_.at(nb.to, source) = source;
            const std::uint32_t h = new_node(source, nb.to);
            arena_[h].cor = nb_tree.node[static_cast<std::size_t>(nb.to)];
            arena_[h].parent_edge_len = nb.weight;
            attach_child(root, h);
            st.queue.enqueue(nb.to, nb.weight);
        }
        if (st.queue.empty()) {  // single-vertex graph: nothing left to search
            st.done = true;
            --active_count_;
            return false;
        }
        return true;
    }

    // Step 3: settle the best candidate or wait for its cor target.
    const auto top = st.queue.dequeue_min();
    require(top.has_value(), "extend: queue empty in scan step");
    const int w = top->key;
    const std::uint32_t wh = st.node[static_cast<std::size_t>(w)];
    const std::uint32_t wcor = arena_[wh].cor;
    if (!arena_[wcor].determined) {
        st.queue.enqueue(w, top->priority);  // wait: retried at unchanged priority
        ++metrics_.wait_count;
        return true;
    }

    arena_[wh].determined = true;
    ++st.settled;
    ++settled_total_;
    const double dw = dist_.at(w, source);

    // The cor target is settled, so its child list is final: children only
    // ever attach during the call that settles their parent. The list
    // belongs to another source's tree, so nothing below mutates it.
    for (std::uint32_t ch = arena_[wcor].first_child; ch != kNull;
         ch = arena_[ch].next_sibling) {
        ++metrics_.access_count;
        const int x = arena_[ch].vertex;
        if (x == source) continue;
        const double edge_len = arena_[ch].parent_edge_len;
        const double dx = dw + edge_len;
        if (parent_.at(x, source) == kNotSearched) {
            const std::uint32_t xh = new_node(source, x);
            arena_[xh].cor = ch;
            arena_[xh].parent_edge_len = edge_len;
            attach_child(wh, xh);
            st.queue.enqueue(x, dx);
            dist_.at(x, source) = dx;
            parent_.at(x, source) = w;
        } else if (dx < dist_.at(x, source)) {
            // A cheaper route through w: re-key, re-parent, re-point cor.
            // Strict '<' means a settled vertex can never land here, so the
            // queue update below cannot miss.
            const std::uint32_t xh = st.node[static_cast<std::size_t>(x)];
            st.queue.update(x, dx);
            arena_[xh].cor = ch;
            detach(xh);
            attach_child(wh, xh);
            arena_[xh].parent_edge_len = edge_len;
            dist_.at(x, source) = dx;
            parent_.at(x, source) = w;
        }
    }

    if (st.queue.empty()) {
        st.done = true;
        --active_count_;
        return false;
    }
    return true;
}

void PstwEngine::run() {
    std::vector<int> active;
    active.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
        if (!trees_[static_cast<std::size_t>(v)].done) active.push_back(v);
    }
    const std::uint64_t sweep_limit = 10ull * static_cast<std::uint64_t>(n_) *
                                      static_cast<std::uint64_t>(n_);
    std::vector<int> next;
    while (!active.empty()) {
        require(metrics_.sweeps < sweep_limit,
                "run: sweep limit exceeded; tree growth is stuck");
        ++metrics_.sweeps;
        const std::size_t nodes_before = arena_.size();
        const std::uint64_t settled_before = settled_total_;
        next.clear();
        for (int v : active) {
            if (extend(v)) next.push_back(v);
        }
        active.swap(next);
        if (!active.empty()) {
            require(arena_.size() > nodes_before || settled_total_ > settled_before,
                    "run: a full sweep neither settled nor created a vertex");
        }
#ifdef PST_INTERNAL_CHECKS
        audit_trees();
#endif
    }
    // On a connected graph every tree must have settled every vertex; a
    // queue that drained early would otherwise leave silent zero distances.
    for (int v = 0; v < n_; ++v) {
        require(trees_[static_cast<std::size_t>(v)].settled == n_,
                "run: a tree finished without settling every vertex");
    }
}

int PstwEngine::tree_size(int source) const {
    require(source >= 0 && source < n_, "tree_size: source out of range");
    return trees_[static_cast<std::size_t>(source)].created;
}

int PstwEngine::determined_count(int source) const {
    require(source >= 0 && source < n_, "determined_count: source out of range");
    return trees_[static_cast<std::size_t>(source)].settled;
}

std::size_t PstwEngine::queue_size(int source) const {
    require(source >= 0 && source < n_, "queue_size: source out of range");
    return trees_[static_cast<std::size_t>(source)].queue.len();
}

bool PstwEngine::is_determined(int source, int vertex) const {
    require(source >= 0 && source < n_, "is_determined: source out of range");
    require(vertex >= 0 && vertex < n_, "is_determined: vertex out of range");
    const std::uint32_t h =
        trees_[static_cast<std::size_t>(source)].node[static_cast<std::size_t>(vertex)];
    return h != kNull && arena_[h].determined;
}

void PstwEngine::audit_one_tree(int source) const {
    const SourceState& st = trees_[static_cast<std::size_t>(source)];
    if (!st.root_created) {
        require(st.created == 0 && st.settled == 0 && st.queue.empty(),
                "audit: tree has no root but is not pristine");
        return;
    }
    int found = 0;
    int found_settled = 0;
    for (int x = 0; x < n_; ++x) {
        const std::uint32_t h = st.node[static_cast<std::size_t>(x)];
        if (h == kNull) {
            require(st.queue.contains(x) == false, "audit: queued vertex has no node");
            require(x == source || parent_.at(x, source) == kNotSearched,
                    "audit: matrix entry set for a vertex absent from the tree");
            continue;
        }
        ++found;
        const TreeNode& node = arena_[h];
        require(node.vertex == x, "audit: node vertex does not match its map slot");
        require(node.owner == source, "audit: node owned by a different tree");
        if (node.determined) ++found_settled;
        require(node.determined != st.queue.contains(x),
                "audit: a created vertex must be exactly one of settled or queued");

        if (x == source) {
            require(node.parent == kNull && node.cor == kNull && node.determined,
                    "audit: malformed root");
            require(parent_.at(x, source) == kNoParent, "audit: root parent entry");
            require(dist_.at(x, source) == 0.0, "audit: root distance entry");
            continue;
        }

        // Non-root: cor names the same vertex inside the tree of the
        // neighbor of `source` through which the current path enters it.
        require(node.cor != kNull, "audit: non-root node lacks a cor target");
        const TreeNode& cor = arena_[node.cor];
        require(cor.vertex == x, "audit: cor names a different vertex");
        require(cor.owner != source, "audit: cor points into this node's own tree");
        require(g_.edge_weight(cor.owner, source).has_value(),
                "audit: cor tree's source is not adjacent to this tree's source");

        // Parent linkage and matrix consistency.
        require(node.parent != kNull, "audit: non-root node lacks a parent");
        const TreeNode& par = arena_[node.parent];
        require(par.owner == source, "audit: parent node lives in another tree");
        require(par.vertex == parent_.at(x, source), "audit: parent matrix mismatch");
        const auto w = g_.edge_weight(par.vertex, x);
        require(w.has_value(), "audit: parent edge is not a graph edge");
        require(*w == node.parent_edge_len, "audit: stored edge length mismatch");
        require(dist_.at(x, source) == dist_.at(par.vertex, source) + node.parent_edge_len,
                "audit: distance does not equal parent distance plus edge");
        if (node.determined) {
            require(par.determined, "audit: settled node has an unsettled parent");
        }

        // Membership in the parent's child list, and list link sanity.
        bool linked = false;
        for (std::uint32_t ch = par.first_child; ch != kNull; ch = arena_[ch].next_sibling) {
            const std::uint32_t prev = arena_[ch].prev_sibling;
            if (prev == kNull) {
                require(par.first_child == ch, "audit: broken child list head");
            } else {
                require(arena_[prev].next_sibling == ch, "audit: broken sibling links");
            }
            require(arena_[ch].parent == node.parent, "audit: child list crosses parents");
            if (ch == h) linked = true;
        }
        require(linked, "audit: node missing from its parent's child list");

        // Walking up must reach the root in fewer than n steps.
        int steps = 0;
        std::uint32_t cur = h;
        while (arena_[cur].parent != kNull) {
            cur = arena_[cur].parent;
            require(++steps < n_, "audit: parent chain does not terminate");
        }
        require(arena_[cur].vertex == source, "audit: parent chain ends off-root");
    }
    require(found == st.created, "audit: created-node count drifted");
    require(found_settled == st.settled, "audit: settled count drifted");
    require(st.created == st.settled + static_cast<int>(st.queue.len()),
            "audit: created != settled + queued");
}

void PstwEngine::audit_trees() const {
    for (int v = 0; v < n_; ++v) audit_one_tree(v);
}

ApspResult PstwEngine::release_result() {
    return ApspResult{std::move(dist_), std::move(parent_), std::move(metrics_)};
}

ApspResult run_pstw(const Graph& g) {
    PstwEngine engine(g);
    const auto [unused, seconds] = timed([&engine] {
        engine.run();
        return 0;
    });
    (void)unused;
    engine.metrics().wall_seconds = seconds;
    return engine.release_result();
}

}  // namespace pst
