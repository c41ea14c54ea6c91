#pragma once

#include <stdexcept>
#include <vector>

#include "crystal/partition.hpp"

namespace crystal {

using Charge = std::vector<int>; // (s_1,...,s_l), row 1 first

/// A charged l-partition |lambda,s> together with the modulus e.
/// This is the canonical finite encoding of an l-row abacus that is full far
/// to the left and empty far to the right.
class ChargedMultipartition {
public:
    ChargedMultipartition(std::vector<Partition> components, Charge charge, int e)
        : components_(std::move(components)), charge_(std::move(charge)), e_(e) {
        if (components_.size() != charge_.size())
            throw std::invalid_argument("component count must match charge length");
        if (components_.size() < 2)
            throw std::invalid_argument("level must be at least 2");
        if (e_ < 2) throw std::invalid_argument("modulus e must be at least 2");
    }

    static ChargedMultipartition empty(Charge charge, int e) {
        std::vector<Partition> comps(charge.size());
        return ChargedMultipartition(std::move(comps), std::move(charge), e);
    }

    int level() const { return static_cast<int>(components_.size()); }
    int modulus() const { return e_; }

    /// |lambda| = total number of boxes.
    int rank() const {
        int n = 0;
        for (const auto& c : components_) n += c.size();
        return n;
    }

    /// Component lambda^j, 1-based row index.
    const Partition& component(int row) const {
        check_row(row);
        return components_[row - 1];
    }
    const std::vector<Partition>& components() const { return components_; }

    int charge_at(int row) const {
        check_row(row);
        return charge_[row - 1];
    }
    const Charge& charge() const { return charge_; }

    ChargedMultipartition with_component(int row, Partition p) const {
        check_row(row);
        auto comps = components_;
        comps[row - 1] = std::move(p);
        return ChargedMultipartition(std::move(comps), charge_, e_);
    }

    friend bool operator==(const ChargedMultipartition& a,
                           const ChargedMultipartition& b) = default;

private:
    void check_row(int row) const {
        if (row < 1 || row > level()) throw std::out_of_range("row out of range");
    }

    std::vector<Partition> components_;
    Charge charge_;
    int e_;
};

/// Componentwise charge translation s -> s + (t,...,t). The abacus shifts
/// horizontally by t; both crystals are insensitive to it.
inline ChargedMultipartition translate_charge(const ChargedMultipartition& cm, int t) {
    Charge s = cm.charge();
    for (int& sj : s) sj += t;
    return ChargedMultipartition(cm.components(), std::move(s), cm.modulus());
}

} // namespace crystal
