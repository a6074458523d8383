#include "pst/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "pst/contract.hpp"

namespace pst {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

VerifyReport verify_distances(const DistanceMatrix& got, const DistanceMatrix& want,
                              double tol) {
    require(got.size() == want.size(), "verify_distances: matrix sizes differ");
    VerifyReport rep;
    const int n = got.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double a = got.at(i, j);
            const double b = want.at(i, j);
            double delta;
            if (std::isinf(a) && std::isinf(b) && a == b) {
                delta = 0.0;  // both report the pair unreachable
            } else {
                delta = std::fabs(a - b);
                if (std::isnan(delta)) delta = kInf;
            }
            if (delta > tol) ++rep.mismatch_count;
            if (delta > rep.max_abs_error) rep.max_abs_error = delta;
        }
    }
    rep.pass = rep.mismatch_count == 0 && rep.tree_violations == 0;
    return rep;
}

VerifyReport verify_tree(const ParentMatrix& parent, const DistanceMatrix& dist,
                         const Graph& g, double tol) {
    require(parent.size() == dist.size(), "verify_tree: matrix sizes differ");
    require(parent.size() == g.num_vertices(), "verify_tree: graph size differs");
    VerifyReport rep;
    const int n = parent.size();

    // Per vertex and column: 0 = unresolved, 1 = on the current walk,
    // 2 = chain reaches the source, 3 = chain broken (cycle or bad pointer).
    std::vector<std::uint8_t> state(static_cast<std::size_t>(n));
    std::vector<int> path;

    for (int j = 0; j < n; ++j) {
        // Local checks: every recorded parent edge must exist and close the
        // distance equation.
        if (parent.at(j, j) != kNoParent || std::fabs(dist.at(j, j)) > tol) {
            ++rep.tree_violations;
        }
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            const std::int32_t p = parent.at(i, j);
            if (p == kNotSearched) {
                // Legitimately unreached only if the distance agrees.
                if (dist.at(i, j) != kInf) ++rep.tree_violations;
                continue;
            }
            if (p < 0 || p >= n || p == i) {
                ++rep.tree_violations;
                continue;
            }
            const auto w = g.edge_weight(p, i);
            if (!w.has_value()) {
                ++rep.tree_violations;
                continue;
            }
            const double expect = dist.at(p, j) + *w;
            const double delta = std::fabs(dist.at(i, j) - expect);
            if (!(delta <= tol)) ++rep.tree_violations;
        }

        // Chain checks: following parents from any reached vertex must end
        // at j in fewer than n steps. Resolved states are memoized per
        // column; unreached vertices are valid chain endpoints on their own
        // (a reached vertex pointing at one is caught by the local checks).
        std::fill(state.begin(), state.end(), 0);
        state[static_cast<std::size_t>(j)] = 2;
        for (int i = 0; i < n; ++i) {
            if (i != j && parent.at(i, j) == kNotSearched && dist.at(i, j) == kInf)
                state[static_cast<std::size_t>(i)] = 2;
        }
        for (int i = 0; i < n; ++i) {
            if (state[static_cast<std::size_t>(i)] != 0) {
                if (state[static_cast<std::size_t>(i)] == 3) ++rep.tree_violations;
                continue;  // counted when first resolved or seeded
            }
            path.clear();
            int cur = i;
            std::uint8_t verdict;
            for (;;) {
                state[static_cast<std::size_t>(cur)] = 1;
                path.push_back(cur);
                const std::int32_t p = parent.at(cur, j);
                if (p < 0 || p >= n) {
                    verdict = 3;  // broken pointer
                    break;
                }
                const std::uint8_t ps = state[static_cast<std::size_t>(p)];
                if (ps == 1) {
                    verdict = 3;  // cycle
                    break;
                }
                if (ps != 0) {
                    verdict = ps;  // memoized outcome
                    break;
                }
                cur = p;
            }
            for (const int v : path) state[static_cast<std::size_t>(v)] = verdict;
            if (verdict == 3) ++rep.tree_violations;
        }
    }

    rep.pass = rep.mismatch_count == 0 && rep.tree_violations == 0;
    return rep;
}

}  // namespace pst
