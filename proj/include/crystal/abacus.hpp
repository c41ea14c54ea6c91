#pragma once

#include <cassert>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "crystal/multipartition.hpp"

namespace crystal {

/// A bead at column beta, row 1..l.
struct Bead {
    int beta = 0;
    int row = 1;

    friend bool operator==(Bead a, Bead b) = default;
};

/// The total bead order: b < b' iff beta < beta', or equal betas and the row
/// of b is larger. At a fixed column, row 1 is the largest bead.
inline bool bead_less(Bead a, Bead b) {
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.row > b.row;
}

inline bool operator<(Bead a, Bead b) { return bead_less(a, b); }

/// Three-way comparison in the bead order: -1, 0, +1.
inline int bead_compare(Bead a, Bead b) {
    if (bead_less(a, b)) return -1;
    if (bead_less(b, a)) return 1;
    return 0;
}

using BeadSet = std::set<Bead>;

/// Dense bead-set membership aligned to a window; out-of-range queries read
/// as absent. Cheap enough for the inner loops of the period searches.
class BeadMask {
public:
    BeadMask(int lo, int hi, int levels)
        : lo_(lo), hi_(hi), levels_(levels),
          bits_(static_cast<std::size_t>(levels) * static_cast<std::size_t>(hi - lo + 1), 0) {}

    bool count(Bead b) const {
        if (b.beta < lo_ || b.beta > hi_ || b.row < 1 || b.row > levels_) return false;
        return bits_[index(b)] != 0;
    }
    void insert(Bead b) {
        if (b.beta < lo_ || b.beta > hi_ || b.row < 1 || b.row > levels_)
            throw std::out_of_range("bead outside mask window");
        bits_[index(b)] = 1;
    }

private:
    std::size_t index(Bead b) const {
        return static_cast<std::size_t>(b.row - 1) * static_cast<std::size_t>(hi_ - lo_ + 1) +
               static_cast<std::size_t>(b.beta - lo_);
    }
    int lo_, hi_, levels_;
    std::vector<uint8_t> bits_;
};

/// beta(b_k^row) = lambda^row_k + s_row + 1 - k.
inline int beta_number(const ChargedMultipartition& cm, int row, int k) {
    return cm.component(row).part(k) + cm.charge_at(row) + 1 - k;
}

/// The first `count` beta-numbers of a row, strictly decreasing.
inline std::vector<int> beta_numbers(const ChargedMultipartition& cm, int row, int count) {
    if (count < 1) throw std::invalid_argument("count must be at least 1");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 1; k <= count; ++k) out.push_back(beta_number(cm, row, k));
    return out;
}

/// Largest column index at or below which every position of the abacus is a
/// bead: min_j (s_j - len(lambda^j)).
inline int full_threshold(const ChargedMultipartition& cm) {
    int b = cm.charge_at(1) - cm.component(1).length();
    for (int j = 2; j <= cm.level(); ++j)
        b = std::min(b, cm.charge_at(j) - cm.component(j).length());
    return b;
}

inline int max_bead_column(const ChargedMultipartition& cm) {
    int m = beta_number(cm, 1, 1);
    for (int j = 2; j <= cm.level(); ++j) m = std::max(m, beta_number(cm, j, 1));
    return m;
}

/// A materialized window [lo,hi] of an abacus. Columns below lo are full by
/// the window invariant (lo sits at least e below the full threshold), columns
/// above hi are empty. Mutable so that bead shifts can build working copies.
class Abacus {
public:
    Abacus(int lo, int hi, int levels, int e)
        : lo_(lo), hi_(hi), levels_(levels), e_(e),
          cells_(static_cast<std::size_t>(levels) * width(), 0) {
        if (lo > hi) throw std::invalid_argument("window bounds out of order");
        if (levels < 2 || e < 2) throw std::invalid_argument("bad abacus dimensions");
    }

    /// Window of cm wide enough to search about `periods` fore periods and to
    /// shift beads one step either way.
    static Abacus materialize(const ChargedMultipartition& cm, int periods) {
        int bfull = crystal::full_threshold(cm);
        int lo = bfull - cm.modulus() * (periods + 2);
        int hi = max_bead_column(cm) + cm.modulus() + 1;
        if (hi <= lo) hi = lo + cm.modulus();
        Abacus a(lo, hi, cm.level(), cm.modulus());
        for (int j = 1; j <= cm.level(); ++j) {
            int len = cm.component(j).length();
            for (int k = 1; k <= len; ++k) a.set(Bead{beta_number(cm, j, k), j}, true);
            // packed tail: consecutive from s_j - len downward
            for (int beta = cm.charge_at(j) - len; beta >= lo; --beta)
                a.set(Bead{beta, j}, true);
        }
        a.recompute_full_threshold();
        assert(a.full_threshold_ == bfull);
        return a;
    }

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int levels() const { return levels_; }
    int modulus() const { return e_; }
    int full_threshold() const { return full_threshold_; }

    bool is_bead(Bead b) const {
        if (b.row < 1 || b.row > levels_) return false;
        if (b.beta < lo_) return true; // full far left
        if (b.beta > hi_) return false;
        return cells_[index(b)] != 0;
    }

    bool in_window(int beta) const { return beta >= lo_ && beta <= hi_; }

    void set(Bead b, bool value) {
        if (!in_window(b.beta) || b.row < 1 || b.row > levels_)
            throw std::out_of_range("bead outside window");
        cells_[index(b)] = value ? 1 : 0;
    }

    void move_bead(Bead from, Bead to) {
        assert(is_bead(from) && !is_bead(to));
        set(from, false);
        set(to, true);
        recompute_full_threshold();
    }

    /// Largest column c such that every column <= c of the window is fully
    /// beaded. Mutations call this to keep the threshold honest.
    void recompute_full_threshold() {
        int t = lo_ - 1;
        for (int beta = lo_; beta <= hi_; ++beta) {
            bool full = true;
            for (int row = 1; row <= levels_ && full; ++row)
                full = cells_[index(Bead{beta, row})] != 0;
            if (!full) break;
            t = beta;
        }
        full_threshold_ = t;
    }

    /// Number of beads in columns above the full threshold.
    int beads_above_threshold() const {
        int n = 0;
        for (int beta = full_threshold_ + 1; beta <= hi_; ++beta)
            for (int row = 1; row <= levels_; ++row)
                n += cells_[index(Bead{beta, row})] ? 1 : 0;
        return n;
    }

    /// Largest bead of the window in the bead order.
    std::optional<Bead> max_bead(const BeadSet& removed = {}) const {
        for (int beta = hi_; beta >= lo_; --beta)
            for (int row = 1; row <= levels_; ++row) {
                Bead b{beta, row};
                if (is_bead(b) && !removed.count(b)) return b;
            }
        return std::nullopt;
    }

    /// Round-trip inverse of materialize. Throws when the bead set leaves the
    /// reconstructed full region closer than e columns to the window edge,
    /// which means the window cannot be trusted by the period searches.
    ChargedMultipartition to_multipartition() const {
        std::vector<Partition> comps;
        Charge charge;
        for (int j = 1; j <= levels_; ++j) {
            std::vector<int> betas;
            for (int beta = hi_; beta >= lo_; --beta)
                if (cells_[index(Bead{beta, j})]) betas.push_back(beta);
            int count = static_cast<int>(betas.size());
            int sj = lo_ + count - 1;
            std::vector<int> parts;
            for (int k = 1; k <= count; ++k) {
                int part = betas[static_cast<std::size_t>(k - 1)] - sj + k - 1;
                if (part == 0) break;
                parts.push_back(part);
            }
            comps.emplace_back(std::move(parts));
            charge.push_back(sj);
        }
        ChargedMultipartition cm(std::move(comps), std::move(charge), e_);
        if (crystal::full_threshold(cm) < lo_ + e_)
            throw std::invalid_argument("window is not full below its threshold");
        return cm;
    }

private:
    int width() const { return hi_ - lo_ + 1; }
    std::size_t index(Bead b) const {
        return static_cast<std::size_t>(b.row - 1) * static_cast<std::size_t>(width()) +
               static_cast<std::size_t>(b.beta - lo_);
    }

    int lo_, hi_, levels_, e_;
    int full_threshold_ = 0;
    std::vector<uint8_t> cells_;
};

} // namespace crystal
