#include "pst/matrices.hpp"

#include <cstdio>
#include <ostream>

namespace pst {

void write_distance_matrix_csv(const DistanceMatrix& d, std::ostream& out) {
    char buf[64];
    const int n = d.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", d.at(i, j));
            out << buf << (j + 1 < n ? "," : "\n");
        }
    }
}

void write_parent_matrix_csv(const ParentMatrix& s, std::ostream& out) {
    // 1-based vertex ids with -1 for "no parent" and 0 for "not searched",
    // the convention older matrix dumps used, so outputs stay diffable.
    const int n = s.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::int32_t v = s.at(i, j);
            std::int32_t shown;
            if (v == kNoParent) {
                shown = -1;
            } else if (v == kNotSearched) {
                shown = 0;
            } else {
                shown = v + 1;
            }
            out << shown << (j + 1 < n ? "," : "\n");
        }
    }
}

}  // namespace pst
