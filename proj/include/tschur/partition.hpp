#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace tschur {

/// Weakly decreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const
    {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }
    /// 1-based part, zero beyond the length.
    int operator()(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }

    Partition conjugate() const
    {
        std::vector<int> c;
        if (!parts_.empty()) {
            c.resize(parts_[0]);
            for (int j = 1; j <= parts_[0]; ++j) {
                int cnt = 0;
                for (int p : parts_)
                    if (p >= j) ++cnt;
                c[j - 1] = cnt;
            }
        }
        return Partition(std::move(c));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& l) { return l.conjugate(); }

/// JSON array form, e.g. [3,1]; the empty partition is [].
inline std::string to_string(const Partition& l)
{
    std::string s = "[";
    for (int i = 0; i < l.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(l.parts()[i]);
    }
    return s + "]";
}

enum class EnumerateMode { exact_weight, up_to_weight };

namespace detail {
inline void enumerate_rec(int remaining, int max_part, int max_len, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& f)
{
    if (remaining == 0) {
        f(cur);
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate_rec(remaining - p, p, max_len - 1, cur, f);
        cur.pop_back();
    }
}
} // namespace detail

/// Partitions of N (or of every weight 0..N), reverse lexicographic within each
/// weight and by increasing weight in up-to mode.  max_length < 0 means unbounded.
inline std::vector<Partition> enumerate(int N, EnumerateMode mode = EnumerateMode::exact_weight, int max_length = -1)
{
    if (N < 0) throw std::invalid_argument("enumerate: N must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    int lo = mode == EnumerateMode::exact_weight ? N : 0;
    for (int w = lo; w <= N; ++w)
        detail::enumerate_rec(w, w, max_length < 0 ? w : max_length, cur,
                              [&](const std::vector<int>& p) { out.emplace_back(p); });
    return out;
}

/// Number of standard Young tableaux, by the hook-length formula.
inline Integer syt_count(const Partition& l)
{
    Partition c = l.conjugate();
    Integer num = 1, den = 1;
    int n = l.size();
    for (int k = 2; k <= n; ++k) num *= k;
    for (int i = 1; i <= l.length(); ++i)
        for (int j = 1; j <= l(i); ++j) den *= (l(i) - j) + (c(j) - i) + 1;
    return num / den;
}

/// Points d_i = λ_i − i in integer form: the actual point is d + 1/2.
struct PointSet {
    std::vector<int> points;
    int depth = 0;
};

inline PointSet frobenius_points(const Partition& l, int depth)
{
    if (depth < l.length()) throw std::invalid_argument("frobenius_points: depth below partition length");
    PointSet s;
    s.depth = depth;
    for (int i = 1; i <= depth; ++i) s.points.push_back(l(i) - i);
    return s;
}

inline bool contains_points(const Partition& l, const std::vector<int>& X)
{
    for (int x : X) {
        // λ_i − i is strictly decreasing and equals −i beyond the length.
        bool found = false;
        for (int i = 1;; ++i) {
            int d = l(i) - i;
            if (d == x) {
                found = true;
                break;
            }
            if (d < x) break;
        }
        if (!found) return false;
    }
    return true;
}

inline bool contains_points(const Partition& l, const PointSet& X) { return contains_points(l, X.points); }

} // namespace tschur
