#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "crystal/abacus.hpp"

namespace crystal {

/// One letter of the signature word of residue i: a shiftable bead encoded +
/// for right-shiftable, - for left-shiftable.
struct SignatureEntry {
    Bead bead;
    bool plus = false;

    friend bool operator==(SignatureEntry a, SignatureEntry b) = default;
};

struct SignatureWord {
    std::vector<SignatureEntry> entries; // in increasing bead order
    std::vector<SignatureEntry> reduced; // after deleting -+ pairs, shape +..+-..-
};

inline int mod_e(int value, int e) {
    int m = value % e;
    return m < 0 ? m + e : m;
}

/// Deleting adjacent "-+" subwords recursively; the result is independent of
/// deletion order.
inline std::vector<SignatureEntry> reduce_signature(const std::vector<SignatureEntry>& word) {
    std::vector<SignatureEntry> stack;
    for (const auto& entry : word) {
        if (entry.plus && !stack.empty() && !stack.back().plus)
            stack.pop_back();
        else
            stack.push_back(entry);
    }
    return stack;
}

/// The word of left-/right-shiftable i-beads. A bead (beta,j) contributes +
/// when beta = i mod e and (beta+1,j) is empty, and - when (beta-1,j) is empty
/// and beta-1 = i mod e. Only columns above the full region can carry a
/// letter. Letters sort by the bead order of the left cell of their move,
/// (beta,j) for + and (beta-1,j) for -; sorting on the beads' own positions
/// breaks the inverse relation between the two operators.
inline SignatureWord signature_word_on(const Abacus& a, int i) {
    SignatureWord w;
    int e = a.modulus();
    for (int beta = a.full_threshold() - e; beta <= a.hi(); ++beta)
        for (int row = 1; row <= a.levels(); ++row) {
            Bead b{beta, row};
            if (!a.is_bead(b)) continue;
            if (mod_e(beta, e) == i && !a.is_bead(Bead{beta + 1, row}))
                w.entries.push_back({b, true});
            if (mod_e(beta - 1, e) == i && !a.is_bead(Bead{beta - 1, row}))
                w.entries.push_back({b, false});
        }
    auto left_cell = [](const SignatureEntry& s) {
        return Bead{s.plus ? s.bead.beta : s.bead.beta - 1, s.bead.row};
    };
    std::sort(w.entries.begin(), w.entries.end(),
              [&](const SignatureEntry& x, const SignatureEntry& y) {
                  return bead_less(left_cell(x), left_cell(y));
              });
    w.reduced = reduce_signature(w.entries);
    return w;
}

inline SignatureWord signature_word(const ChargedMultipartition& cm, int i) {
    if (i < 0 || i >= cm.modulus()) throw std::invalid_argument("residue out of range");
    Abacus a = Abacus::materialize(cm, 1);
    return signature_word_on(a, i);
}

/// Kashiwara operator f~_i: shift the good right-shiftable i-bead (the
/// rightmost + of the reduced word) one unit right. Null when no + survives.
inline std::optional<ChargedMultipartition> f_tilde(const ChargedMultipartition& cm, int i) {
    if (i < 0 || i >= cm.modulus()) throw std::invalid_argument("residue out of range");
    Abacus a = Abacus::materialize(cm, 1);
    SignatureWord w = signature_word_on(a, i);
    const SignatureEntry* good = nullptr;
    for (const auto& entry : w.reduced)
        if (entry.plus) good = &entry;
    if (!good) return std::nullopt;
    a.move_bead(good->bead, Bead{good->bead.beta + 1, good->bead.row});
    return a.to_multipartition();
}

/// Kashiwara operator e~_i: shift the good left-shiftable bead (the leftmost -
/// of the reduced word) one unit left. Null when no - survives.
inline std::optional<ChargedMultipartition> e_tilde(const ChargedMultipartition& cm, int i) {
    if (i < 0 || i >= cm.modulus()) throw std::invalid_argument("residue out of range");
    Abacus a = Abacus::materialize(cm, 1);
    SignatureWord w = signature_word_on(a, i);
    const SignatureEntry* good = nullptr;
    for (const auto& entry : w.reduced)
        if (!entry.plus) {
            good = &entry;
            break;
        }
    if (!good) return std::nullopt;
    a.move_bead(good->bead, Bead{good->bead.beta - 1, good->bead.row});
    return a.to_multipartition();
}

struct SleDepth {
    int p = 0;
    ChargedMultipartition source;
};

/// Depth in this crystal: apply any applicable e~_i until none applies
/// (smallest residue first). The endpoint is the component's source vertex and
/// the step count is path-independent.
inline SleDepth p_depth(const ChargedMultipartition& cm) {
    ChargedMultipartition cur = cm;
    int steps = 0;
    for (;;) {
        bool moved = false;
        for (int i = 0; i < cur.modulus() && !moved; ++i)
            if (auto up = e_tilde(cur, i)) {
                cur = std::move(*up);
                ++steps;
                moved = true;
            }
        if (!moved) break;
    }
    return SleDepth{steps, std::move(cur)};
}

/// An ordered run of e beads with consecutive decreasing columns and weakly
/// decreasing rows, largest bead first.
struct Quasiperiod {
    std::vector<Bead> beads;

    Bead first() const { return beads.front(); }
    Bead last() const { return beads.back(); }

    friend bool operator==(const Quasiperiod& a, const Quasiperiod& b) = default;
};

/// First period of the abacus-minus-used: starts at the maximal bead, takes
/// the minimal-row bead of each successive column, and requires the rows to
/// weakly decrease. Null when any of that fails.
inline std::optional<Quasiperiod> jl_first_period(const Abacus& a, const BeadSet& used) {
    auto top = a.max_bead(used);
    if (!top) return std::nullopt;
    Quasiperiod p;
    p.beads.push_back(*top);
    for (int step = 1; step < a.modulus(); ++step) {
        int beta = top->beta - step;
        std::optional<Bead> next;
        for (int row = 1; row <= a.levels(); ++row) {
            Bead b{beta, row};
            if (a.is_bead(b) && !used.count(b)) {
                next = b;
                break; // minimal row in this column
            }
        }
        if (!next || next->row > p.beads.back().row) return std::nullopt;
        p.beads.push_back(*next);
    }
    return p;
}

namespace detail {

/// True when the remaining bead set is a packed abacus: in every row the
/// in-window beads form one run ending at the window floor.
inline bool is_packed(const Abacus& a, const BeadSet& used) {
    for (int row = 1; row <= a.levels(); ++row) {
        bool seen_space = false;
        for (int beta = a.lo(); beta <= a.hi(); ++beta) {
            Bead b{beta, row};
            bool bead = a.is_bead(b) && !used.count(b);
            if (bead && seen_space) return false;
            if (!bead) seen_space = true;
        }
        // a removed cell at the floor would fake a packed row
        if (used.count(Bead{a.lo(), row})) return false;
    }
    return true;
}

} // namespace detail

/// The peeled periods of a totally periodic abacus, in peeling order; nullopt
/// when the peeling gets stuck first. The number of beads above the full
/// threshold bounds the number of peels that can make progress.
inline std::optional<std::vector<Quasiperiod>> jl_peeling(const ChargedMultipartition& cm) {
    int above = 0;
    for (int j = 1; j <= cm.level(); ++j)
        above += cm.charge_at(j) - full_threshold(cm);
    int cap = above + 2 * cm.level() + 8;
    Abacus a = Abacus::materialize(cm, cap + 2);
    BeadSet used;
    std::vector<Quasiperiod> periods;
    for (int iter = 0; iter <= cap; ++iter) {
        if (detail::is_packed(a, used)) return periods;
        auto p = jl_first_period(a, used);
        if (!p) return std::nullopt;
        if (p->last().beta < a.lo() + a.modulus())
            throw std::logic_error("peeling reached the window edge");
        used.insert(p->beads.begin(), p->beads.end());
        periods.push_back(std::move(*p));
    }
    throw std::logic_error("peeling did not terminate");
}

/// Peeling reaches a packed abacus exactly at the highest weight vertices of
/// the small crystal.
inline bool is_totally_periodic(const ChargedMultipartition& cm) {
    return jl_peeling(cm).has_value();
}

} // namespace crystal
