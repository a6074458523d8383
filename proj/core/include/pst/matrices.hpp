#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pst/contract.hpp"

namespace pst {

// Sentinels for ParentMatrix entries. Vertex ids are 0-based, so both
// sentinels sit outside the id range.
inline constexpr std::int32_t kNoParent = -1;     // entry (i, i): a source has no parent
inline constexpr std::int32_t kNotSearched = -2;  // vertex i not reached yet from source j

// n x n matrix of distances. at(i, j) is the distance from vertex i to
// vertex j (column j holds the result of the search rooted at j).
// Freshly constructed matrices are zero-filled.
class DistanceMatrix {
public:
    explicit DistanceMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n, 0.0) {
        require(n >= 1, "DistanceMatrix: n must be >= 1");
    }

    int size() const { return n_; }

    double at(int i, int j) const { return cells_[idx(i, j)]; }
    double& at(int i, int j) { return cells_[idx(i, j)]; }

    const std::vector<double>& cells() const { return cells_; }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

    int n_;
    std::vector<double> cells_;
};

// n x n matrix of shortest-path-tree parents. at(i, j) is the predecessor of
// vertex i on the shortest path from source j, kNoParent on the diagonal and
// kNotSearched where no path has been recorded yet.
class ParentMatrix {
public:
    explicit ParentMatrix(int n)
        : n_(n), cells_(static_cast<std::size_t>(n) * n, kNotSearched) {
        require(n >= 1, "ParentMatrix: n must be >= 1");
        for (int i = 0; i < n; ++i) cells_[idx(i, i)] = kNoParent;
    }

    int size() const { return n_; }

    std::int32_t at(int i, int j) const { return cells_[idx(i, j)]; }
    std::int32_t& at(int i, int j) { return cells_[idx(i, j)]; }

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

    int n_;
    std::vector<std::int32_t> cells_;
};

// Debug dumps. The parent dump uses 1-based ids with -1 for "no parent" and
// 0 for "not searched", which keeps diffs against older tooling readable.
void write_distance_matrix_csv(const DistanceMatrix& d, std::ostream& out);
void write_parent_matrix_csv(const ParentMatrix& s, std::ostream& out);

}  // namespace pst
