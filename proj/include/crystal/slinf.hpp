#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "crystal/sle.hpp"

namespace crystal {

/// Thrown by period searches that reach the left edge of a window; callers
/// retry with a wider materialization.
struct WindowTooSmall : std::logic_error {
    WindowTooSmall() : std::logic_error("abacus window too small for period search") {}
};

namespace detail {

inline bool extend_largest(const Abacus& a, const BeadMask& used, std::vector<Bead>& acc, int e) {
    if (static_cast<int>(acc.size()) == e) return true;
    Bead prev = acc.back();
    for (int row = 1; row <= prev.row; ++row) { // largest candidate = smallest row
        Bead b{prev.beta - 1, row};
        if (!a.is_bead(b) || used.count(b)) continue;
        acc.push_back(b);
        if (extend_largest(a, used, acc, e)) return true;
        acc.pop_back();
    }
    return false;
}

inline bool extend_smallest(const BeadSet& within, std::vector<Bead>& acc, int e, int levels) {
    if (static_cast<int>(acc.size()) == e) return true;
    Bead prev = acc.back();
    for (int row = prev.row; row >= 1; --row) { // smallest candidate = largest row
        Bead b{prev.beta - 1, row};
        if (!within.count(b)) continue;
        acc.push_back(b);
        if (extend_smallest(within, acc, e, levels)) return true;
        acc.pop_back();
    }
    return false;
}

} // namespace detail

/// Largest quasiperiod disjoint from `used`, first bead strictly below `bound`
/// when given. Found by depth-first search that maximizes bead by bead.
inline std::optional<Quasiperiod> max_quasiperiod(const Abacus& a, const BeadMask& used,
                                                  std::optional<Bead> bound) {
    int start = bound ? bound->beta : a.hi();
    for (int beta = start; beta >= a.lo() + a.modulus(); --beta)
        for (int row = 1; row <= a.levels(); ++row) {
            Bead b{beta, row};
            if (bound && !bead_less(b, *bound)) continue;
            if (!a.is_bead(b) || used.count(b)) continue;
            std::vector<Bead> acc{b};
            if (detail::extend_largest(a, used, acc, a.modulus()))
                return Quasiperiod{std::move(acc)};
        }
    throw WindowTooSmall{};
}

/// Lexicographically minimal quasiperiod whose beads all lie in `within`.
inline std::optional<Quasiperiod> min_quasiperiod_in(const BeadSet& within, int e, int levels) {
    for (auto it = within.begin(); it != within.end(); ++it) { // ascending bead order
        std::vector<Bead> acc{*it};
        if (detail::extend_smallest(within, acc, e, levels)) return Quasiperiod{std::move(acc)};
    }
    return std::nullopt;
}

/// Fore periods P_1 > P_2 > ... of an abacus, each the largest quasiperiod
/// disjoint from the earlier ones, plus their bead set. Extraction continues
/// past `count` until no later period can reach the column range of any
/// requested vessel; with cover_full_region it also descends one period's
/// width below the full threshold, which makes free beads identifiable.
struct ForeData {
    std::vector<Quasiperiod> fore;
    BeadMask used;

    explicit ForeData(const Abacus& a) : used(a.lo(), a.hi(), a.levels()) {}
};

inline ForeData compute_fore(const Abacus& a, int count, bool cover_full_region = false) {
    ForeData fd(a);
    int cap = count + 1 + a.levels() * (a.modulus() + 2) + 8;
    if (cover_full_region) cap += a.beads_above_threshold() + a.levels() * a.modulus();
    for (int iter = 0; iter <= cap; ++iter) {
        int have = static_cast<int>(fd.fore.size());
        if (have >= count + 1) {
            int rmin = fd.fore[static_cast<std::size_t>(count)].last().beta;
            int last_first = fd.fore.back().first().beta;
            bool done = last_first < rmin;
            if (cover_full_region)
                done = done && last_first <= a.full_threshold() - a.modulus();
            if (done) return fd;
        }
        std::optional<Bead> bound;
        if (have > 0) bound = fd.fore.back().first();
        auto p = max_quasiperiod(a, fd.used, bound);
        for (Bead b : p->beads) fd.used.insert(b);
        fd.fore.push_back(std::move(*p));
    }
    throw std::logic_error("fore period extraction did not terminate");
}

/// The k'th vessel: P_k together with the free beads between P_k and P_{k+1}
/// admitted by the collision and connectivity rules. Free beads are scanned in
/// decreasing column order so that connectivity refers to already-admitted
/// members.
inline BeadSet vessel(const Abacus& a, const ForeData& fd, int k) {
    const Quasiperiod& pk = fd.fore[static_cast<std::size_t>(k - 1)];
    const Quasiperiod& pk1 = fd.fore[static_cast<std::size_t>(k)];
    BeadSet v(pk.beads.begin(), pk.beads.end());
    for (int beta = pk.first().beta; beta >= pk1.last().beta; --beta)
        for (int row = 1; row <= a.levels(); ++row) {
            Bead b{beta, row};
            if (!a.is_bead(b) || fd.used.count(b)) continue;
            bool ok = true;
            for (Bead pb : pk.beads)
                if (pb.beta == beta && row <= pb.row) ok = false;
            for (Bead pb : pk1.beads)
                if (pb.beta == beta && row >= pb.row) ok = false;
            if (!ok) continue;
            if (beta < pk.last().beta) {
                bool connected = false;
                for (int r2 = 1; r2 <= a.levels() && !connected; ++r2)
                    connected = v.count(Bead{beta + 1, r2}) > 0;
                if (!connected) continue;
            }
            v.insert(b);
        }
    return v;
}

inline Quasiperiod aft_period(const Abacus& a, const BeadSet& v) {
    auto q = min_quasiperiod_in(v, a.modulus(), a.levels());
    if (!q) throw std::logic_error("vessel contains no quasiperiod");
    return *q;
}

/// Fore periods, free beads, vessels, aft periods and adrift beads of an
/// abacus, down to the k'th vessel for every k <= count that the window can
/// justify.
struct PeriodDecomposition {
    int requested = 0;
    std::vector<Quasiperiod> fore;   // all extracted periods, P_1 first
    std::vector<Bead> free_beads;    // beads above the full region in no fore period
    std::vector<BeadSet> vessels;    // V_1..V_m
    std::vector<Quasiperiod> aft;    // Q_1..Q_m
    std::vector<Bead> adrift;        // free beads in no vessel
};

namespace detail {

template <typename F>
auto with_window(const ChargedMultipartition& cm, int periods, F&& body) {
    // periods stack about levels-deep per column in the full region, so the
    // first attempt can sit well above the worst case; the retry covers it
    for (int margin = periods / cm.level() + 4;; margin *= 2) {
        Abacus a = Abacus::materialize(cm, margin);
        try {
            return body(a);
        } catch (const WindowTooSmall&) {
            if (margin > (1 << 20)) throw;
        }
    }
}

inline std::vector<Bead> free_beads_of(const Abacus& a, const ForeData& fd) {
    std::vector<Bead> free;
    for (int beta = a.hi(); beta > a.full_threshold(); --beta)
        for (int row = 1; row <= a.levels(); ++row) {
            Bead b{beta, row};
            if (a.is_bead(b) && !fd.used.count(b)) free.push_back(b);
        }
    return free;
}

inline PeriodDecomposition decompose(const Abacus& a, int count, bool with_vessels) {
    PeriodDecomposition d;
    d.requested = count;
    ForeData fd = compute_fore(a, count, /*cover_full_region=*/true);
    d.free_beads = free_beads_of(a, fd);
    if (with_vessels) {
        // vessels below the full region cannot hold a free bead, so going one
        // period past the threshold-crossing index settles every adrift call
        int crossing = 1;
        while (fd.fore[static_cast<std::size_t>(crossing - 1)].first().beta > a.full_threshold())
            ++crossing;
        int vessel_max = std::min(std::max(count, crossing),
                                  static_cast<int>(fd.fore.size()) - 1);
        BeadSet in_vessels;
        for (int k = 1; k <= vessel_max; ++k) {
            BeadSet v = vessel(a, fd, k);
            in_vessels.insert(v.begin(), v.end());
            if (k <= count) {
                d.aft.push_back(aft_period(a, v));
                d.vessels.push_back(std::move(v));
            }
        }
        for (Bead b : d.free_beads)
            if (!in_vessels.count(b)) d.adrift.push_back(b);
    }
    d.fore = std::move(fd.fore);
    return d;
}

} // namespace detail

/// The first `count` fore periods and the free beads of the abacus of cm.
inline PeriodDecomposition fore_periods(const ChargedMultipartition& cm, int count) {
    if (count < 1) throw std::invalid_argument("count must be at least 1");
    return detail::with_window(cm, count,
                               [&](Abacus& a) { return detail::decompose(a, count, false); });
}

/// Fore periods, vessels and aft periods down to index `count`.
inline PeriodDecomposition vessels_and_aft(const ChargedMultipartition& cm, int count) {
    if (count < 1) throw std::invalid_argument("count must be at least 1");
    return detail::with_window(cm, count,
                               [&](Abacus& a) { return detail::decompose(a, count, true); });
}

namespace detail {

inline Quasiperiod shifted(const Quasiperiod& p, int delta) {
    Quasiperiod s = p;
    for (Bead& b : s.beads) b.beta += delta;
    return s;
}

/// A quasiperiod is right-shiftable when, for every row it occupies, the cell
/// right of its rightmost bead in that row is empty; left version symmetric.
inline bool shiftable(const Abacus& a, const Quasiperiod& p, int direction) {
    for (std::size_t i = 0; i < p.beads.size(); ++i) {
        Bead b = p.beads[i];
        bool row_extremum = true;
        for (std::size_t m = 0; m < p.beads.size(); ++m)
            if (p.beads[m].row == b.row &&
                (direction > 0 ? p.beads[m].beta > b.beta : p.beads[m].beta < b.beta))
                row_extremum = false;
        if (row_extremum && a.is_bead(Bead{b.beta + direction, b.row})) return false;
    }
    return true;
}

inline void apply_shift(Abacus& a, const Quasiperiod& p, int delta) {
    for (Bead b : p.beads) a.set(b, false);
    for (Bead b : p.beads) {
        Bead nb{b.beta + delta, b.row};
        if (a.is_bead(nb)) throw std::logic_error("shift collided with a bead");
        a.set(nb, true);
    }
    a.recompute_full_threshold();
}

} // namespace detail

/// Downstream move: shift the k'th fore period one unit right; the move is an
/// edge exactly when the shift is the k'th aft period of the result.
inline std::optional<ChargedMultipartition> upsilon_plus(const ChargedMultipartition& cm, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    return detail::with_window(cm, k + 2, [&](Abacus& a) -> std::optional<ChargedMultipartition> {
        ForeData fd = compute_fore(a, k);
        const Quasiperiod& pk = fd.fore[static_cast<std::size_t>(k - 1)];
        if (!detail::shiftable(a, pk, +1)) return std::nullopt;
        Abacus a2 = a;
        detail::apply_shift(a2, pk, +1);
        ForeData fd2 = compute_fore(a2, k);
        BeadSet v2 = vessel(a2, fd2, k);
        Quasiperiod q2 = aft_period(a2, v2);
        if (!(q2 == detail::shifted(pk, +1))) return std::nullopt;
        return a2.to_multipartition();
    });
}

/// Upstream move: shift the k'th aft period one unit left; the move is an edge
/// exactly when the shift is the k'th fore period of the result.
inline std::optional<ChargedMultipartition> upsilon_minus(const ChargedMultipartition& cm, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    return detail::with_window(cm, k + 2, [&](Abacus& a) -> std::optional<ChargedMultipartition> {
        ForeData fd = compute_fore(a, k);
        BeadSet v = vessel(a, fd, k);
        Quasiperiod qk = aft_period(a, v);
        if (!detail::shiftable(a, qk, -1)) return std::nullopt;
        Abacus a2 = a;
        detail::apply_shift(a2, qk, -1);
        ForeData fd2 = compute_fore(a2, k);
        const Quasiperiod& pk2 = fd2.fore[static_cast<std::size_t>(k - 1)];
        if (!(pk2 == detail::shifted(qk, -1))) return std::nullopt;
        return a2.to_multipartition();
    });
}

/// Position of a vertex inside its component: alpha_k counts how often the
/// k'th aft period can travel upstream starting from cm itself, and theta is
/// assembled from the partial sums. The source is reached by exhaustive
/// upstream application, smallest k first, and checked against |theta|.
struct ThetaPosition {
    Partition theta;
    int q = 0;
    ChargedMultipartition source;
    std::map<int, int> alphas;
    int r = 0;
};

inline ThetaPosition theta_position(const ChargedMultipartition& cm) {
    int qmax = cm.rank() / cm.modulus();
    std::map<int, int> alphas;
    int r = 0;
    for (int k = 1; k <= qmax; ++k) {
        int count = 0;
        ChargedMultipartition cur = cm;
        while (auto up = upsilon_minus(cur, k)) {
            cur = std::move(*up);
            ++count;
        }
        if (count > 0) {
            alphas[k] = count;
            r = k;
        }
    }
    std::vector<int> delta(static_cast<std::size_t>(r), 0);
    for (auto [k, ak] : alphas)
        for (int m = 1; m <= k; ++m) delta[static_cast<std::size_t>(m - 1)] += ak;
    Partition theta(std::move(delta));

    ChargedMultipartition src = cm;
    int steps = 0;
    for (;;) {
        bool moved = false;
        int bound = src.rank() / src.modulus();
        for (int k = 1; k <= bound && !moved; ++k)
            if (auto up = upsilon_minus(src, k)) {
                src = std::move(*up);
                ++steps;
                moved = true;
            }
        if (!moved) break;
    }
    if (steps != theta.size())
        throw std::logic_error("upstream path length disagrees with theta");
    return ThetaPosition{std::move(theta), steps, std::move(src), std::move(alphas), r};
}

/// All downstream edges out of a vertex with known position; complete because
/// edges beyond row parts(theta)+1 cannot exist.
inline std::map<int, ChargedMultipartition> outgoing_edges(const ChargedMultipartition& cm,
                                                           const Partition& theta) {
    std::map<int, ChargedMultipartition> out;
    for (int k = 1; k <= theta.length() + 1; ++k)
        if (auto down = upsilon_plus(cm, k)) out.emplace(k, std::move(*down));
    return out;
}

inline std::map<int, ChargedMultipartition> outgoing_edges(const ChargedMultipartition& cm) {
    return outgoing_edges(cm, theta_position(cm).theta);
}

/// All upstream edges; a known position caps the scan at its removable rows.
inline std::map<int, ChargedMultipartition> incoming_edges(const ChargedMultipartition& cm,
                                                           const Partition& theta) {
    std::map<int, ChargedMultipartition> in;
    for (int k = 1; k <= theta.length(); ++k)
        if (auto up = upsilon_minus(cm, k)) in.emplace(k, std::move(*up));
    return in;
}

inline std::map<int, ChargedMultipartition> incoming_edges(const ChargedMultipartition& cm) {
    std::map<int, ChargedMultipartition> in;
    int bound = cm.rank() / cm.modulus();
    for (int k = 1; k <= bound; ++k)
        if (auto up = upsilon_minus(cm, k)) in.emplace(k, std::move(*up));
    return in;
}

/// Whether any move travels upstream; stops at the first hit.
inline bool has_upstream(const ChargedMultipartition& cm) {
    int bound = cm.rank() / cm.modulus();
    for (int k = 1; k <= bound; ++k)
        if (upsilon_minus(cm, k)) return true;
    return false;
}

} // namespace crystal
