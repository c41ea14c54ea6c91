#pragma once

// Shared fixtures and corpus generators for the test suites.

#include "crystal/format.hpp"
#include "crystal/multipartition.hpp"

namespace crystal::fixtures {

inline Partition P(const std::string& text) { return parse_partition(text); }

/// Three-row abacus with large and small beads pinned by the drawing.
inline ChargedMultipartition three_row() {
    return ChargedMultipartition({P("10,9,1"), P("9^3,7,6,4,1"), P("6,3^2")}, {-4, 0, -5}, 3);
}

/// Five-row fixture whose downstream moves exist exactly at k = 1,2,3,4,6 and
/// upstream moves at k = 1,2,3,5.
inline ChargedMultipartition five_row() {
    return ChargedMultipartition(
        {P("9,2"), P("5^2,4,3,2,1^2"), P("2,1^2"), P("6,4,2,1^2"), P("4^2,2^2,1^2")},
        {-4, 2, -1, 2, 3}, 4);
}

/// Four-row fixture with two adrift beads and position (2,1^4).
inline ChargedMultipartition four_row() {
    return ChargedMultipartition(
        {P("10,7,6,6,2"), P("9,8,4,3,3"), P("5,5,5,3,3,3,3,2,2,2"), P("10,9,8,8,6,4")},
        {0, 0, 3, -1}, 3);
}

/// Two-row fixture at position theta = (4,4,2,2), depth 12.
inline ChargedMultipartition depth12() {
    return ChargedMultipartition({P("6,4,4,2,2,1"), P("5,5,5,3,3")}, {0, -1}, 2);
}

/// Three-row highest weight vertex of the big crystal (e = 5).
inline ChargedMultipartition hw_e5() {
    return ChargedMultipartition({P("4,1"), P("7,2"), P("2,1^5")}, {3, -3, 1}, 5);
}

/// Totally 4-periodic three-row fixture at position (2,2).
inline ChargedMultipartition periodic_e4() {
    return ChargedMultipartition({P("2,2,2,2"), P("7,7,7"), P("6,3,3,3,1,1")}, {4, -1, 1}, 4);
}

/// The column multipartition ((1^n), {}, ..., {}).
inline ChargedMultipartition column(int n, int levels, Charge s, int e) {
    std::vector<Partition> comps(static_cast<std::size_t>(levels));
    comps[0] = Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
    return ChargedMultipartition(std::move(comps), std::move(s), e);
}

/// All l-tuples of partitions of total size at most n.
inline std::vector<std::vector<Partition>> multipartitions_up_to(int levels, int n) {
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur(static_cast<std::size_t>(levels));
    auto rec = [&](auto&& self, int level, int rest) -> void {
        if (level == levels) {
            out.push_back(cur);
            return;
        }
        for (int m = 0; m <= rest; ++m)
            for (const Partition& p : partitions_of(m)) {
                cur[static_cast<std::size_t>(level)] = p;
                self(self, level + 1, rest - m);
            }
    };
    rec(rec, 0, n);
    return out;
}

/// All charges with entries in [lo, hi].
inline std::vector<Charge> charges_in(int levels, int lo, int hi) {
    std::vector<Charge> out;
    Charge cur(static_cast<std::size_t>(levels), lo);
    for (;;) {
        out.push_back(cur);
        int i = 0;
        while (i < levels && cur[static_cast<std::size_t>(i)] == hi) {
            cur[static_cast<std::size_t>(i)] = lo;
            ++i;
        }
        if (i == levels) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

} // namespace crystal::fixtures
