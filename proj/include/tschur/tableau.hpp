#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "partition.hpp"

namespace tschur {

/// Letter of the marked alphabet 1' < 1 < 2' < 2 < ...
struct MarkedLetter {
    int value = 1;
    bool primed = false;

    int key() const { return 2 * value - (primed ? 1 : 0); }
    friend bool operator==(const MarkedLetter&, const MarkedLetter&) = default;
    friend auto operator<=>(const MarkedLetter& a, const MarkedLetter& b) { return a.key() <=> b.key(); }
};

inline std::string to_string(const MarkedLetter& a) { return std::to_string(a.value) + (a.primed ? "'" : ""); }

/// Rows of a marked filling; shape read off the row lengths.
struct MarkedTableau {
    std::vector<std::vector<MarkedLetter>> rows;

    Partition shape() const
    {
        std::vector<int> p;
        for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
        return Partition(p);
    }
    int marks() const
    {
        int m = 0;
        for (const auto& r : rows)
            for (const auto& a : r) m += a.primed;
        return m;
    }
    friend bool operator==(const MarkedTableau&, const MarkedTableau&) = default;
};

/// Rows of positive integers (recording tableau).
struct RecordingTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const
    {
        std::vector<int> p;
        for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
        return Partition(p);
    }
    friend bool operator==(const RecordingTableau&, const RecordingTableau&) = default;
};

namespace detail {
template <class Rows>
bool is_shape(const Rows& rows)
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) return false;
        if (i > 0 && rows[i].size() > rows[i - 1].size()) return false;
    }
    return true;
}
} // namespace detail

/// (T1): weak increase along rows and columns.
inline bool satisfies_t1(const MarkedTableau& s)
{
    if (!detail::is_shape(s.rows)) return false;
    for (std::size_t i = 0; i < s.rows.size(); ++i)
        for (std::size_t j = 0; j < s.rows[i].size(); ++j) {
            if (j > 0 && s.rows[i][j] < s.rows[i][j - 1]) return false;
            if (i > 0 && s.rows[i][j] < s.rows[i - 1][j]) return false;
        }
    return true;
}

/// (T2): each row holds at most one k', each column at most one unmarked k.
inline bool satisfies_t2(const MarkedTableau& s)
{
    for (const auto& r : s.rows)
        for (std::size_t j = 0; j < r.size(); ++j)
            for (std::size_t l = j + 1; l < r.size(); ++l)
                if (r[j].primed && r[l] == r[j]) return false;
    std::size_t w = s.rows.empty() ? 0 : s.rows[0].size();
    for (std::size_t j = 0; j < w; ++j)
        for (std::size_t i = 0; i < s.rows.size() && j < s.rows[i].size(); ++i)
            for (std::size_t k = i + 1; k < s.rows.size() && j < s.rows[k].size(); ++k)
                if (!s.rows[i][j].primed && s.rows[k][j] == s.rows[i][j]) return false;
    return true;
}

inline bool is_marked_tableau(const MarkedTableau& s) { return satisfies_t1(s) && satisfies_t2(s); }

inline bool rows_weakly_increasing(const RecordingTableau& u)
{
    if (!detail::is_shape(u.rows)) return false;
    for (const auto& r : u.rows)
        for (std::size_t j = 1; j < r.size(); ++j)
            if (r[j] < r[j - 1]) return false;
    return true;
}

inline bool columns_strictly_increasing(const RecordingTableau& u)
{
    for (std::size_t i = 1; i < u.rows.size(); ++i)
        for (std::size_t j = 0; j < u.rows[i].size(); ++j)
            if (u.rows[i][j] <= u.rows[i - 1][j]) return false;
    return true;
}

inline bool is_semistandard(const RecordingTableau& u) { return rows_weakly_increasing(u) && columns_strictly_increasing(u); }

/// Calls f on every marked tableau of shape λ with letters of value 1..m that
/// satisfies (T1) and (T2).
inline void for_each_marked_tableau(const Partition& shape, int m, const std::function<void(const MarkedTableau&)>& f)
{
    MarkedTableau t;
    for (int r = 1; r <= shape.length(); ++r) t.rows.emplace_back(shape(r));
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < shape.length(); ++r)
        for (int c = 0; c < shape(r + 1); ++c) cells.emplace_back(r, c);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            f(t);
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 1; v <= m; ++v)
            for (int pr = 1; pr >= 0; --pr) {
                MarkedLetter a{v, pr == 1};
                if (c > 0) {
                    const auto& left = t.rows[r][c - 1];
                    if (a < left) continue;
                    if (a.primed && a == left) continue;
                }
                if (r > 0) {
                    const auto& up = t.rows[r - 1][c];
                    if (a < up) continue;
                    if (!a.primed && a == up) continue;
                }
                t.rows[r][c] = a;
                rec(k + 1);
            }
    };
    rec(0);
}

} // namespace tschur
