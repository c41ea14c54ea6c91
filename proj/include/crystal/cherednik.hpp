#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "crystal/slinf.hpp"

namespace crystal {

/// Exact rational value; classifier predicates are equality tests, so no
/// floating point anywhere.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend bool operator==(Rational a, Rational b) = default;

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

struct FockParams {
    int e;
    Charge charge;
    int n = 0;
};

struct CherednikParams {
    Rational h;                 // -1/e
    std::vector<Rational> h_p;  // (s_{p+1} - s_p)/e for p = 1..l-1
    Rational kappa;             // 1/e
    std::optional<std::pair<Rational, Rational>> typeB_c; // (1/e, (s_2-s_1)/e - 1/2) when l = 2
};

inline CherednikParams fock_to_cherednik(const FockParams& fp) {
    if (fp.e < 2) throw std::invalid_argument("modulus e must be at least 2");
    if (fp.charge.size() < 2) throw std::invalid_argument("charge must have length at least 2");
    CherednikParams cp;
    cp.h = Rational(-1, fp.e);
    cp.kappa = Rational(1, fp.e);
    for (std::size_t p = 1; p < fp.charge.size(); ++p)
        cp.h_p.emplace_back(fp.charge[p] - fp.charge[p - 1], fp.e);
    if (fp.charge.size() == 2)
        cp.typeB_c = {Rational(1, fp.e),
                      Rational(fp.charge[1] - fp.charge[0], fp.e) - Rational(1, 2)};
    return cp;
}

/// Bidepth (q, p) of the column multipartition ((1^n), {}, ..., {}). The
/// charge is renormalized internally so that s_1 = n - e - 1; with n = qe + r
/// and m = min over {r} and the residues of the non-negative s_j (j >= 2):
/// q if every s_j < 0 else 0, and p is r in the first case and m in the
/// second.
inline std::pair<int, int> triv_bidepth(int n, int e, const Charge& s) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (e < 2) throw std::invalid_argument("modulus e must be at least 2");
    if (s.size() < 2) throw std::invalid_argument("charge must have length at least 2");
    int shift = (n - e - 1) - s[0];
    int q = n / e, r = n % e;
    bool any_nonneg = false;
    int m = r;
    for (std::size_t j = 1; j < s.size(); ++j) {
        int sj = s[j] + shift;
        if (sj >= 0) {
            any_nonneg = true;
            m = std::min(m, mod_e(sj, e));
        }
    }
    if (!any_nonneg) return {q, r};
    return {0, m};
}

/// Translation-invariant finite-dimensionality test for the column
/// multipartition: some s_j - s_1 equals ke - n + 1 with k >= 1, or e divides
/// n and some s_j - s_1 is at least e - n + 1 (j >= 2 throughout).
inline bool triv_is_fd(int n, int e, const Charge& s) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (e < 2) throw std::invalid_argument("modulus e must be at least 2");
    if (s.size() < 2) throw std::invalid_argument("charge must have length at least 2");
    for (std::size_t j = 1; j < s.size(); ++j) {
        int d = s[j] - s[0] + n - 1; // = ke demands a positive multiple of e
        if (d >= e && d % e == 0) return true;
    }
    if (n % e == 0)
        for (std::size_t j = 1; j < s.size(); ++j)
            if (s[j] - s[0] >= e - n + 1) return true;
    return false;
}

/// Depth in the big crystal of the multipartition with lambda^a = (m^n) and
/// all other components empty; the charge is renormalized so s_a = n - e - m.
inline int rectangle_q(int m, int n, int a, int e, const Charge& s) {
    if (m < 0 || n < 0) throw std::invalid_argument("rectangle sides must be non-negative");
    if (e < 2) throw std::invalid_argument("modulus e must be at least 2");
    if (a < 1 || a > static_cast<int>(s.size()))
        throw std::invalid_argument("component index out of range");
    if (s.size() < 2) throw std::invalid_argument("charge must have length at least 2");
    int shift = (n - e - m) - s[static_cast<std::size_t>(a - 1)];
    bool all_negative = true;
    int tprime = 0;
    bool first = true;
    for (int j = 1; j <= static_cast<int>(s.size()); ++j) {
        if (j == a) continue;
        int v = s[static_cast<std::size_t>(j - 1)] + shift + (j < a ? e : 0);
        if (v >= 0) all_negative = false;
        if (first || v > tprime) tprime = v;
        first = false;
    }
    if (!all_negative) tprime = 0;
    int t = std::min(-tprime, m);
    return t * (n / e);
}

namespace detail {

struct FirstComp {
    std::vector<int> values;  // distinct parts, largest first
    std::vector<int> mults;
    std::vector<int> suffix;  // sum of multiplicities after index i
    int total = 0;            // number of parts of lambda
};

inline FirstComp analyze(const Partition& lambda) {
    FirstComp fc;
    for (auto [v, c] : lambda.runs()) {
        fc.values.push_back(v);
        fc.mults.push_back(c);
        fc.total += c;
    }
    fc.suffix.assign(fc.values.size(), 0);
    for (int i = static_cast<int>(fc.values.size()) - 2; i >= 0; --i)
        fc.suffix[static_cast<std::size_t>(i)] = fc.suffix[static_cast<std::size_t>(i + 1)] +
                                                 fc.mults[static_cast<std::size_t>(i + 1)];
    return fc;
}

} // namespace detail

/// Highest weight test in both crystals for (lambda, {}, ..., {}); the charge
/// is renormalized so s_1 equals the number of parts of lambda. Clause one
/// asks each distinct part's multiplicity to be divisible by e or matched by
/// some s_j = ke + lambda_i + (parts after i); clause two asks some s_j to
/// clear lambda_1 + N - a_1 + e. Clause one treats the distinct parts
/// independently, so shapes whose parts interact through a shared matching
/// row can fall outside its range (already (3,1) vs (3,2) at e=2, s=(2,6));
/// is_totally_periodic plus the upstream moves give the general answer.
inline bool firstcomp_is_hw(const Partition& lambda, int e, const Charge& s) {
    if (e < 2) throw std::invalid_argument("modulus e must be at least 2");
    if (s.size() < 2) throw std::invalid_argument("charge must have length at least 2");
    if (lambda.empty()) return true;
    auto fc = detail::analyze(lambda);
    int shift = fc.total - s[0];
    for (std::size_t i = 0; i < fc.values.size(); ++i) {
        if (fc.mults[i] % e == 0) continue;
        bool matched = false;
        for (std::size_t j = 1; j < s.size() && !matched; ++j) {
            int d = (s[j] + shift) - fc.values[i] - fc.suffix[i];
            matched = d >= e && d % e == 0;
        }
        if (!matched) return false;
    }
    int need = fc.values[0] + fc.total - fc.mults[0] + e;
    for (std::size_t j = 1; j < s.size(); ++j)
        if (s[j] + shift >= need) return true;
    return false;
}

/// Position of (lambda, {}, ..., {}) in the big crystal, by the case split on
/// the largest s_j, j >= 2 (charge renormalized so s_1 = number of parts).
inline Partition firstcomp_theta(const Partition& lambda, int e, const Charge& s) {
    if (e < 2) throw std::invalid_argument("modulus e must be at least 2");
    if (s.size() < 2) throw std::invalid_argument("charge must have length at least 2");
    auto fc = detail::analyze(lambda);
    int shift = fc.total - s[0];
    int big = s[1] + shift;
    for (std::size_t j = 2; j < s.size(); ++j) big = std::max(big, s[j] + shift);

    // distinct parts with multiplicity at least e, with the gaps between them
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < fc.values.size(); ++i)
        if (fc.mults[i] >= e) idx.push_back(i);
    if (idx.empty()) return Partition();
    int ns = static_cast<int>(idx.size());
    auto qsum = [&](int u) { // q_{i_1} + ... + q_{i_u}
        int total = 0;
        for (int w = 0; w < u; ++w) total += fc.mults[idx[static_cast<std::size_t>(w)]] / e;
        return total;
    };
    auto gap = [&](int u) { // delta_{i_u}, 1-based
        int v = fc.values[idx[static_cast<std::size_t>(u - 1)]];
        return u < ns ? v - fc.values[idx[static_cast<std::size_t>(u)]] : v;
    };
    auto boundary = [&](int u) { // C_u = lambda_{i_u} + parts after i_u
        return fc.values[idx[static_cast<std::size_t>(u - 1)]] +
               fc.suffix[idx[static_cast<std::size_t>(u - 1)]];
    };
    auto transpose_of = [&](const std::vector<std::pair<int, int>>& runs) {
        return Partition::from_runs(runs).transpose();
    };

    if (big >= boundary(1) + e) return Partition();
    for (int u = 2; u <= ns; ++u) {
        int low = boundary(u) + e;
        int high = low + fc.mults[idx[static_cast<std::size_t>(u - 1)]];
        if (big >= low && big <= high) {
            std::vector<std::pair<int, int>> runs;
            for (int w = u - 1; w >= 1; --w) runs.push_back({qsum(w), gap(w)});
            return transpose_of(runs);
        }
    }
    for (int u = 1; u <= ns; ++u) {
        int low = u < ns ? boundary(u + 1) + fc.mults[idx[static_cast<std::size_t>(u)]] + e : e;
        int high = boundary(u) + e;
        if (big > low && big < high) {
            // blocked after C_u - (big - e) steps minus the stray beads passed
            int stray = 0;
            for (int k = 1; k <= fc.total; ++k) {
                int beta = lambda.part(k) + fc.total + 1 - k;
                if (beta > big - e && beta < boundary(u)) ++stray;
            }
            int b = boundary(u) - (big - e) - stray;
            std::vector<std::pair<int, int>> runs{{qsum(u), b}};
            for (int w = u - 1; w >= 1; --w) runs.push_back({qsum(w), gap(w)});
            return transpose_of(runs);
        }
    }
    // big <= e: nothing blocks inside the abacus
    std::vector<std::pair<int, int>> runs;
    for (int w = ns; w >= 1; --w) runs.push_back({qsum(w), gap(w)});
    return transpose_of(runs);
}

/// One of the e+1 forbidden two-row configurations: spaces at (beta,2) and
/// (beta-k,1) with every other cell of the 2 x (k+1) block occupied.
struct PatternViolation {
    int beta = 0;
    int k = 0;
};

/// Scan for a forbidden pattern left of the first fore period's first bead.
/// The abacus is a highest weight vertex for the big crystal exactly when no
/// pattern occurs.
inline std::optional<PatternViolation> typeB_pattern(const ChargedMultipartition& cm) {
    if (cm.level() != 2) throw std::invalid_argument("type B requires level 2");
    int e = cm.modulus();
    return detail::with_window(cm, 4, [&](Abacus& a) -> std::optional<PatternViolation> {
        ForeData fd = compute_fore(a, 1);
        int n_col = fd.fore[0].first().beta;
        for (int beta = n_col; beta > a.full_threshold(); --beta)
            for (int k = 0; k <= e; ++k) {
                if (a.is_bead(Bead{beta, 2}) || a.is_bead(Bead{beta - k, 1})) continue;
                bool filled = true;
                for (int c = beta - k; c <= beta && filled; ++c) {
                    if (c != beta - k && !a.is_bead(Bead{c, 1})) filled = false;
                    if (c != beta && !a.is_bead(Bead{c, 2})) filled = false;
                }
                if (filled) return PatternViolation{beta, k};
            }
        return std::nullopt;
    });
}

inline bool typeB_slinf_hw(const ChargedMultipartition& cm) {
    return !typeB_pattern(cm).has_value();
}

/// Finite-dimensionality for a charged bipartition: the pattern avoidance
/// above plus the period conditions on beads with a space to their left. The
/// periods are the peeled ones, and the peeling must exhaust the abacus: a
/// stuck peel leaves a bead that sits in no period at all, which the two
/// letter conditions cannot see when it lies right of the pattern range.
inline bool typeB_is_fd(const ChargedMultipartition& cm) {
    if (cm.level() != 2) throw std::invalid_argument("type B requires level 2");
    if (typeB_pattern(cm).has_value()) return false;
    auto periods = jl_peeling(cm);
    if (!periods) return false;
    BeadSet last_beads;
    for (const auto& p : *periods) last_beads.insert(p.last());
    Abacus a = Abacus::materialize(cm, 2);
    for (int beta = a.full_threshold() + 1; beta <= a.hi(); ++beta) {
        Bead r1{beta, 1}, r2{beta, 2};
        if (a.is_bead(r1) && !a.is_bead(Bead{beta - 1, 1}) && !last_beads.count(r1)) return false;
        if (a.is_bead(r2) && !a.is_bead(Bead{beta - 1, 2})) {
            if (a.is_bead(r1) && !last_beads.count(r1)) return false;
        }
    }
    return true;
}

/// Support data: q from the big crystal, p from the small one, and the
/// parabolic shape G(l,1,n-eq-p) x S_e^q, plus the vertex reached by taking
/// the small-crystal source and then the big-crystal source.
struct SupportDescriptor {
    int q = 0;
    int p = 0;
    int level = 0;
    int m1 = 0; // n - e*q - p
    int e = 0;
    ChargedMultipartition doubly_source;
};

inline SupportDescriptor support(const ChargedMultipartition& cm) {
    auto theta = theta_position(cm);
    auto depth = p_depth(cm);
    int n = cm.rank();
    int m1 = n - cm.modulus() * theta.q - depth.p;
    if (m1 < 0) throw std::logic_error("support shape out of range");
    auto inner = theta_position(depth.source);
    return SupportDescriptor{theta.q,  depth.p, cm.level(), m1, cm.modulus(),
                             std::move(inner.source)};
}

} // namespace crystal
