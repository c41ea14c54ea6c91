#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace crystal {

/// An integer partition: weakly decreasing positive parts, trailing zeros
/// implicit. Values are immutable after construction.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }

    static Partition single_row(int m) {
        return m > 0 ? Partition(std::vector<int>{m}) : Partition();
    }

    // (value, multiplicity) run, e.g. (12^7,4^2) -> {(12,7),(4,2)}
    static Partition from_runs(const std::vector<std::pair<int, int>>& runs) {
        std::vector<int> parts;
        for (auto [value, count] : runs)
            for (int i = 0; i < count; ++i) parts.push_back(value);
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// k'th part, 1-based; zero beyond the stored parts.
    int part(int k) const {
        if (k < 1) throw std::out_of_range("partition part index is 1-based");
        return k <= length() ? parts_[k - 1] : 0;
    }

    Partition transpose() const {
        std::vector<int> t;
        for (int col = 1; col <= part(1); ++col) {
            int count = 0;
            for (int p : parts_) count += (p >= col) ? 1 : 0;
            t.push_back(count);
        }
        return Partition(std::move(t));
    }

    /// Distinct part values with multiplicities, largest first.
    std::vector<std::pair<int, int>> runs() const {
        std::vector<std::pair<int, int>> r;
        for (int p : parts_) {
            if (!r.empty() && r.back().first == p)
                ++r.back().second;
            else
                r.emplace_back(p, 1);
        }
        return r;
    }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// All partitions of n, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

} // namespace crystal
