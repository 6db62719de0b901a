#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"
#include "tableau.hpp"

namespace tschur {

/// Entry of a matrix over the marked alphabet plus zero: magnitude v, mark p.
struct AEntry {
    int v = 0;
    bool p = false;
    friend bool operator==(const AEntry&, const AEntry&) = default;
};

/// m×n matrix; row index i feeds the inserted tableau, column index j the recording one.
struct AMatrix {
    int m = 0, n = 0;
    std::vector<std::vector<AEntry>> a;

    AMatrix() = default;
    AMatrix(int m_, int n_) : m(m_), n(n_), a(m_, std::vector<AEntry>(n_))
    {
        if (m_ <= 0 || n_ <= 0) throw std::invalid_argument("AMatrix: dimensions must be positive");
    }
    explicit AMatrix(std::vector<std::vector<AEntry>> rows) : a(std::move(rows))
    {
        m = static_cast<int>(a.size());
        n = m ? static_cast<int>(a[0].size()) : 0;
        if (m == 0 || n == 0) throw std::invalid_argument("AMatrix: dimensions must be positive");
        for (const auto& r : a) {
            if (static_cast<int>(r.size()) != n) throw std::invalid_argument("AMatrix: ragged rows");
            for (const auto& e : r) {
                if (e.v < 0) throw std::invalid_argument("AMatrix: negative magnitude");
                if (e.p && e.v == 0) throw std::invalid_argument("AMatrix: marked zero entry");
            }
        }
    }

    AEntry& operator()(int i, int j) { return a.at(i - 1).at(j - 1); }
    const AEntry& operator()(int i, int j) const { return a.at(i - 1).at(j - 1); }

    int mark() const
    {
        int k = 0;
        for (const auto& r : a)
            for (const auto& e : r) k += e.p;
        return k;
    }
    /// u_i = sum_j |a_ij|.
    std::vector<int> row_sums() const
    {
        std::vector<int> u(m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) u[i] += a[i][j].v;
        return u;
    }
    /// s_j = sum_i |a_ij|.
    std::vector<int> column_sums() const
    {
        std::vector<int> s(n, 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) s[j] += a[i][j].v;
        return s;
    }
    friend bool operator==(const AMatrix&, const AMatrix&) = default;
};

enum class TieOrder {
    increasing,        // within equal β, α increasing in 1' < 1 < 2' < ...
    marked_decreasing  // within equal β, marked letters first in decreasing order, then unmarked increasing
};

enum class CopyMarking {
    first,  // a marked entry of magnitude k gives one i' and k−1 copies of i
    all     // a marked entry of magnitude k gives k copies of i'
};

struct RskConvention {
    TieOrder tie = TieOrder::increasing;
    CopyMarking copies = CopyMarking::first;
};

struct BiwordPair {
    int beta = 1;
    MarkedLetter alpha;
    friend bool operator==(const BiwordPair&, const BiwordPair&) = default;
};

using Biword = std::vector<BiwordPair>;

namespace detail {
inline bool tie_less(const MarkedLetter& a, const MarkedLetter& b, TieOrder o)
{
    if (o == TieOrder::increasing) return a < b;
    if (a.primed != b.primed) return a.primed;
    return a.primed ? a.value > b.value : a.value < b.value;
}
} // namespace detail

inline Biword biword(const AMatrix& A, RskConvention conv = {})
{
    Biword w;
    for (int j = 1; j <= A.n; ++j) {
        std::size_t start = w.size();
        for (int i = 1; i <= A.m; ++i) {
            const auto& e = A(i, j);
            for (int c = 0; c < e.v; ++c) {
                bool primed = e.p && (conv.copies == CopyMarking::all || c == 0);
                w.push_back({j, {i, primed}});
            }
        }
        std::stable_sort(w.begin() + start, w.end(),
                         [&](const BiwordPair& x, const BiwordPair& y) { return detail::tie_less(x.alpha, y.alpha, conv.tie); });
    }
    return w;
}

/// 1-based cell position.
struct Cell {
    int row = 1, col = 1;
    friend bool operator==(const Cell&, const Cell&) = default;
};

namespace detail {
// Column (0-based) bumped in `row` by `a`, or row.size() for an append.
inline std::size_t bump_position(const std::vector<MarkedLetter>& row, const MarkedLetter& a)
{
    if (a.primed) return std::lower_bound(row.begin(), row.end(), a) - row.begin();
    return std::upper_bound(row.begin(), row.end(), a) - row.begin();
}
} // namespace detail

/// Row insertion: an unmarked letter bumps the leftmost γ > α, a marked one the leftmost γ ≥ α.
inline Cell insert(MarkedTableau& T, MarkedLetter a)
{
    for (std::size_t r = 0;; ++r) {
        if (r == T.rows.size()) {
            T.rows.push_back({a});
            return {static_cast<int>(r) + 1, 1};
        }
        auto& row = T.rows[r];
        std::size_t p = detail::bump_position(row, a);
        if (p == row.size()) {
            row.push_back(a);
            return {static_cast<int>(r) + 1, static_cast<int>(p) + 1};
        }
        std::swap(row[p], a);
    }
}

struct RskResult {
    MarkedTableau S;
    RecordingTableau U;
    Partition shape() const { return S.shape(); }
};

inline RskResult rsk_word(const Biword& w)
{
    RskResult r;
    for (const auto& pr : w) {
        Cell c = insert(r.S, pr.alpha);
        if (c.row > static_cast<int>(r.U.rows.size())) r.U.rows.emplace_back();
        r.U.rows[c.row - 1].push_back(pr.beta);
    }
    return r;
}

inline RskResult rsk(const AMatrix& A, RskConvention conv = {}) { return rsk_word(biword(A, conv)); }

class NotInImage : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inverse of rsk for pairs in its image; anything else raises NotInImage.
inline AMatrix inverse_rsk(const MarkedTableau& S_in, const RecordingTableau& U_in, int m = 0, int n = 0, RskConvention conv = {})
{
    if (S_in.rows.size() != U_in.rows.size()) throw NotInImage("inverse_rsk: shapes differ");
    for (std::size_t r = 0; r < S_in.rows.size(); ++r)
        if (S_in.rows[r].size() != U_in.rows[r].size()) throw NotInImage("inverse_rsk: shapes differ");
    if (!is_marked_tableau(S_in)) throw NotInImage("inverse_rsk: S violates (T1)/(T2)");
    if (!rows_weakly_increasing(U_in) && !U_in.rows.empty()) throw NotInImage("inverse_rsk: U rows not weakly increasing");

    MarkedTableau S = S_in;
    RecordingTableau U = U_in;
    Biword rev;
    int maxi = 0, maxj = 0;
    while (!U.rows.empty()) {
        // largest recording entry, rightmost among ties
        int best = -1;
        std::size_t br = 0, bc = 0;
        for (std::size_t r = 0; r < U.rows.size(); ++r) {
            int v = U.rows[r].back();
            if (v > best || (v == best && U.rows[r].size() > bc)) {
                best = v;
                br = r;
                bc = U.rows[r].size();
            }
        }
        U.rows[br].pop_back();
        MarkedLetter x = S.rows[br].back();
        S.rows[br].pop_back();
        for (std::size_t r = br; r-- > 0;) {
            auto& row = S.rows[r];
            // rightmost γ that could have bumped x
            std::size_t p = row.size();
            for (std::size_t k = row.size(); k-- > 0;)
                if (row[k] < x || (row[k] == x && row[k].primed)) {
                    p = k;
                    break;
                }
            if (p == row.size()) throw NotInImage("inverse_rsk: reverse bump failed");
            std::swap(row[p], x);
        }
        while (!U.rows.empty() && U.rows.back().empty()) {
            U.rows.pop_back();
            S.rows.pop_back();
        }
        rev.push_back({best, x});
        maxi = std::max(maxi, x.value);
        maxj = std::max(maxj, best);
    }
    std::reverse(rev.begin(), rev.end());
    if (m == 0) m = std::max(maxi, 1);
    if (n == 0) n = std::max(maxj, 1);
    if (maxi > m || maxj > n) throw NotInImage("inverse_rsk: letters exceed matrix dimensions");

    AMatrix A(m, n);
    std::vector<std::vector<int>> primes(m, std::vector<int>(n, 0));
    for (const auto& pr : rev) {
        auto& e = A(pr.alpha.value, pr.beta);
        e.v++;
        primes[pr.alpha.value - 1][pr.beta - 1] += pr.alpha.primed;
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            int k = primes[i][j], v = A.a[i][j].v;
            bool ok = conv.copies == CopyMarking::first ? k <= 1 : (k == 0 || k == v);
            if (!ok) throw NotInImage("inverse_rsk: mark pattern not produced by any matrix");
            A.a[i][j].p = k > 0;
        }
    if (biword(A, conv) != rev) throw NotInImage("inverse_rsk: recovered word is not a sorted biword");
    auto chk = rsk(A, conv);
    if (!(chk.S == S_in) || !(chk.U == U_in)) throw NotInImage("inverse_rsk: pair not in the image");
    return A;
}

/// Longest weakly increasing subsequence with at most one k' per value k (O(N²) DP).
inline std::vector<int> lis_marked_ending(const std::vector<MarkedLetter>& w)
{
    std::vector<int> L(w.size(), 1);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (w[j] <= w[i] && !(w[j] == w[i] && w[i].primed)) L[i] = std::max(L[i], L[j] + 1);
    return L;
}

inline int lis_marked(const std::vector<MarkedLetter>& w)
{
    auto L = lis_marked_ending(w);
    return L.empty() ? 0 : *std::max_element(L.begin(), L.end());
}

/// First-row insertion only; returns λ₁ of the full insertion.
inline int first_row_length(const std::vector<MarkedLetter>& w)
{
    std::vector<MarkedLetter> row;
    for (const auto& a : w) {
        std::size_t p = detail::bump_position(row, a);
        if (p == row.size())
            row.push_back(a);
        else
            row[p] = a;
    }
    return static_cast<int>(row.size());
}

/// For every prefix, the column of the letter's landing cell in the first row
/// equals the longest admissible subsequence ending at that letter.
inline bool column_of_new_cell_check(const std::vector<MarkedLetter>& w)
{
    auto L = lis_marked_ending(w);
    std::vector<MarkedLetter> row;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::size_t p = detail::bump_position(row, w[i]);
        if (p == row.size())
            row.push_back(w[i]);
        else
            row[p] = w[i];
        if (static_cast<int>(p) + 1 != L[i]) return false;
    }
    return true;
}

inline std::vector<MarkedLetter> lower_word(const Biword& w)
{
    std::vector<MarkedLetter> r;
    for (const auto& p : w) r.push_back(p.alpha);
    return r;
}

/// Schensted shape of a sequence of distinct integers (row bumping).
inline Partition schensted_shape(const std::vector<int>& w)
{
    std::vector<std::vector<int>> rows;
    for (int a : w) {
        for (std::size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({a});
                break;
            }
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), a);
            if (it == rows[r].end()) {
                rows[r].push_back(a);
                break;
            }
            std::swap(*it, a);
        }
    }
    std::vector<int> p;
    for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
    return Partition(p);
}

} // namespace tschur
