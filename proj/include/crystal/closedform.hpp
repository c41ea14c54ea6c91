#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "crystal/multipartition.hpp"

namespace crystal {

/// The filling of the empty abacus with charge e*z: entry k marks the row
/// holding the k'th peeled period. Rows follow abacus row indices 1..l; each
/// row's entries are increasing. z must be non-negative with minimum 0.
struct Tabloid {
    std::vector<std::vector<int>> rows;
    std::vector<int> z;

    int level() const { return static_cast<int>(z.size()); }
    const std::vector<int>& row(int j) const { return rows[static_cast<std::size_t>(j - 1)]; }
};

namespace detail {

inline void check_z(const std::vector<int>& z) {
    if (z.size() < 2) throw std::invalid_argument("z must have at least two entries");
    int mn = z[0];
    for (int v : z) {
        if (v < 0) throw std::invalid_argument("z entries must be non-negative");
        mn = std::min(mn, v);
    }
    if (mn != 0) throw std::invalid_argument("z must attain 0");
}

} // namespace detail

/// Peeling the packed abacus with charge e*z assigns period k to the row whose
/// remaining run reaches furthest right; the row index breaks ties. Each row
/// is materialized to at least `depth` entries.
inline Tabloid tabloid_of(const std::vector<int>& z, int depth) {
    detail::check_z(z);
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
    int l = static_cast<int>(z.size());
    Tabloid t;
    t.z = z;
    t.rows.assign(static_cast<std::size_t>(l), {});
    std::vector<int> peeled(static_cast<std::size_t>(l), 0);
    int entry = 1;
    auto shallow = [&] {
        for (const auto& row : t.rows)
            if (static_cast<int>(row.size()) < depth) return true;
        return false;
    };
    while (shallow()) {
        int best = 0;
        for (int j = 1; j < l; ++j)
            if (z[static_cast<std::size_t>(j)] - peeled[static_cast<std::size_t>(j)] >
                z[static_cast<std::size_t>(best)] - peeled[static_cast<std::size_t>(best)])
                best = j;
        t.rows[static_cast<std::size_t>(best)].push_back(entry++);
        ++peeled[static_cast<std::size_t>(best)];
    }
    return t;
}

/// lambda^j = sigma[T_j, e]: the entries of row j select parts of sigma, each
/// repeated e times. The result is the vertex b~_sigma reaches from the empty
/// multipartition with charge e*z.
inline ChargedMultipartition b_sigma_closed(const Partition& sigma, const std::vector<int>& z,
                                            int e) {
    detail::check_z(z);
    if (e < 2) throw std::invalid_argument("modulus e must be at least 2");
    Tabloid t = tabloid_of(z, sigma.length() + 1);
    std::vector<Partition> comps;
    Charge charge;
    for (int j = 1; j <= t.level(); ++j) {
        std::vector<int> parts;
        for (int entry : t.row(j)) {
            int v = entry <= sigma.length() ? sigma.part(entry) : 0;
            if (v == 0) break;
            for (int i = 0; i < e; ++i) parts.push_back(v);
        }
        comps.emplace_back(std::move(parts));
        charge.push_back(e * z[static_cast<std::size_t>(j - 1)]);
    }
    return ChargedMultipartition(std::move(comps), std::move(charge), e);
}

/// Closed form for weakly decreasing z ending in 0, written
/// z = (y_1^{a_1},...,y_m^{a_m},0^b). Row j of the tabloid consists of the
/// blocks base_i + (t-1)*A_i + j for each level i from j's block onward
/// (A_i = a_1+...+a_i, d_i = y_i - y_{i+1}, base_{i+1} = base_i + d_i*A_i),
/// followed by the tail N + (t-1)*l + j.
inline ChargedMultipartition zpartition_closed(const Partition& sigma, const std::vector<int>& z,
                                               int e) {
    detail::check_z(z);
    if (e < 2) throw std::invalid_argument("modulus e must be at least 2");
    int l = static_cast<int>(z.size());
    for (std::size_t i = 1; i < z.size(); ++i)
        if (z[i] > z[i - 1]) throw std::invalid_argument("z must be weakly decreasing");
    if (z.back() != 0) throw std::invalid_argument("z must end in 0");

    std::vector<int> y, a;
    for (int v : z) {
        if (v == 0) break;
        if (!y.empty() && y.back() == v)
            ++a.back();
        else {
            y.push_back(v);
            a.push_back(1);
        }
    }
    int m = static_cast<int>(y.size());
    std::vector<int> prefix(static_cast<std::size_t>(m) + 1, 0); // A_0..A_m
    for (int i = 1; i <= m; ++i)
        prefix[static_cast<std::size_t>(i)] =
            prefix[static_cast<std::size_t>(i - 1)] + a[static_cast<std::size_t>(i - 1)];
    std::vector<int> base(static_cast<std::size_t>(m) + 1, 0); // base_1..base_{m+1}
    int big_n = 0;
    for (int i = 1; i <= m; ++i) {
        int yi = y[static_cast<std::size_t>(i - 1)];
        int yn = i < m ? y[static_cast<std::size_t>(i)] : 0;
        base[static_cast<std::size_t>(i)] =
            base[static_cast<std::size_t>(i - 1)] + (yi - yn) * prefix[static_cast<std::size_t>(i)];
        big_n += a[static_cast<std::size_t>(i - 1)] * yi;
    }
    // the bases telescope onto N
    if (base[static_cast<std::size_t>(m)] != big_n)
        throw std::logic_error("tabloid base bookkeeping failed");

    std::vector<Partition> comps;
    Charge charge;
    for (int j = 1; j <= l; ++j) {
        int block = m; // first level whose round-robin includes row j
        for (int i = 1; i <= m; ++i)
            if (j <= prefix[static_cast<std::size_t>(i)]) {
                block = i - 1;
                break;
            }
        std::vector<int> parts;
        auto push_index = [&](int idx) {
            int v = idx <= sigma.length() ? sigma.part(idx) : 0;
            if (v == 0) return false;
            for (int i = 0; i < e; ++i) parts.push_back(v);
            return true;
        };
        bool more = true;
        for (int i = block + 1; i <= m && more; ++i) {
            int yi = y[static_cast<std::size_t>(i - 1)];
            int yn = i < m ? y[static_cast<std::size_t>(i)] : 0;
            for (int tt = 1; tt <= yi - yn && more; ++tt)
                more = push_index(base[static_cast<std::size_t>(i - 1)] +
                                  (tt - 1) * prefix[static_cast<std::size_t>(i)] + j);
        }
        for (int tt = 1; more; ++tt) more = push_index(big_n + (tt - 1) * l + j);
        comps.emplace_back(std::move(parts));
        charge.push_back(e * z[static_cast<std::size_t>(j - 1)]);
    }
    return ChargedMultipartition(std::move(comps), std::move(charge), e);
}

/// Swap charges z_j and z_j2 and slide the entries of the affected rectangle
/// (columns with a cell in exactly one of the two rows, rows j2..j) to the
/// next available spot in the same column; everything else is unchanged.
/// Columns are indexed by period slots: the c'th entry of row r sits in slot
/// z_r - c.
inline Tabloid tabloid_swap(const Tabloid& tab, int j, int j2) {
    int l = tab.level();
    if (j < 1 || j > l || j2 < 1 || j2 > l) throw std::out_of_range("row out of range");
    if (j2 > j) std::swap(j, j2);
    if (j == j2) return tab;

    int zj = tab.z[static_cast<std::size_t>(j - 1)];
    int zj2 = tab.z[static_cast<std::size_t>(j2 - 1)];
    std::vector<int> znew = tab.z;
    std::swap(znew[static_cast<std::size_t>(j - 1)], znew[static_cast<std::size_t>(j2 - 1)]);
    if (zj == zj2) {
        Tabloid same = tab;
        same.z = znew;
        return same;
    }

    int slot_lo = std::min(zj, zj2);       // rectangle columns: slots [slot_lo, slot_hi]
    int slot_hi = std::max(zj, zj2) - 1;

    // deep enough that every band row covers the rectangle plus a spare column
    int depth = 1;
    for (const auto& row : tab.rows) depth = std::max(depth, static_cast<int>(row.size()));
    for (int r = j2; r <= j; ++r)
        depth = std::max(depth, tab.z[static_cast<std::size_t>(r - 1)] - slot_lo + 2);
    Tabloid base = tabloid_of(tab.z, depth);

    Tabloid out;
    out.z = znew;
    out.rows.assign(static_cast<std::size_t>(l), {});
    // entry lookup by (row, slot)
    auto entry_at = [&](int r, int slot) -> int {
        int c = base.z[static_cast<std::size_t>(r - 1)] - slot;
        const auto& row = base.row(r);
        if (c < 1 || c > static_cast<int>(row.size())) return 0;
        return row[static_cast<std::size_t>(c - 1)];
    };
    std::vector<std::vector<std::pair<int, int>>> placed(static_cast<std::size_t>(l)); // (slot, entry)
    int slot_min = 1 - depth; // low cushion; every materialized entry sits above it
    int slot_max = slot_hi;
    for (int r = 1; r <= l; ++r) {
        slot_min = std::min(slot_min, base.z[static_cast<std::size_t>(r - 1)] -
                                          static_cast<int>(base.row(r).size()));
        slot_max = std::max(slot_max, base.z[static_cast<std::size_t>(r - 1)] - 1);
    }
    for (int slot = slot_max; slot >= slot_min; --slot) {
        bool rectangle = slot >= slot_lo && slot <= slot_hi;
        if (!rectangle) {
            for (int r = 1; r <= l; ++r)
                if (int v = entry_at(r, slot))
                    placed[static_cast<std::size_t>(r - 1)].push_back({slot, v});
            continue;
        }
        for (int r = 1; r < j2; ++r)
            if (int v = entry_at(r, slot)) placed[static_cast<std::size_t>(r - 1)].push_back({slot, v});
        for (int r = j + 1; r <= l; ++r)
            if (int v = entry_at(r, slot)) placed[static_cast<std::size_t>(r - 1)].push_back({slot, v});
        // band rows reflow bottom to top into the swapped shape
        std::vector<int> entries;
        for (int r = j2; r <= j; ++r)
            if (int v = entry_at(r, slot)) entries.push_back(v);
        std::size_t next = 0;
        for (int r = j2; r <= j; ++r) {
            if (znew[static_cast<std::size_t>(r - 1)] <= slot) continue; // no cell here
            if (next >= entries.size()) throw std::logic_error("tabloid slide lost an entry");
            placed[static_cast<std::size_t>(r - 1)].push_back({slot, entries[next++]});
        }
        if (next != entries.size()) throw std::logic_error("tabloid slide had spare entries");
    }
    for (int r = 1; r <= l; ++r) {
        auto& cells = placed[static_cast<std::size_t>(r - 1)];
        // emitted in slot-descending order already, which is entry-ascending
        for (auto& [slot, v] : cells) out.rows[static_cast<std::size_t>(r - 1)].push_back(v);
        for (std::size_t i = 1; i < out.rows[static_cast<std::size_t>(r - 1)].size(); ++i)
            if (out.rows[static_cast<std::size_t>(r - 1)][i] <=
                out.rows[static_cast<std::size_t>(r - 1)][i - 1])
                throw std::logic_error("tabloid slide broke row monotonicity");
    }
    return out;
}

} // namespace crystal
