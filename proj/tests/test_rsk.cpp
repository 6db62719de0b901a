#include <gtest/gtest.h>

#include <map>
#include <random>

#include "tschur/rsk.hpp"
#include "tschur/symfunc.hpp"

using namespace tschur;
using Q = Rational;

namespace {

MarkedLetter L(int v, bool p = false) { return {v, p}; }

// All m×n matrices with magnitudes <= B (each nonzero entry marked or not).
template <class F>
void for_each_matrix(int m, int n, int B, F&& f)
{
    std::vector<AEntry> choices{{0, false}};
    for (int v = 1; v <= B; ++v) {
        choices.push_back({v, false});
        choices.push_back({v, true});
    }
    const int cells = m * n;
    std::vector<int> idx(cells, 0);
    for (;;) {
        AMatrix A(m, n);
        for (int c = 0; c < cells; ++c) A.a[c / n][c % n] = choices[idx[c]];
        f(A);
        int c = 0;
        while (c < cells && ++idx[c] == static_cast<int>(choices.size())) idx[c++] = 0;
        if (c == cells) break;
    }
}

AMatrix random_matrix(std::mt19937_64& g, int m, int n)
{
    std::uniform_int_distribution<int> mag(0, 3);
    std::bernoulli_distribution pr(0.4);
    AMatrix A(m, n);
    for (auto& r : A.a)
        for (auto& e : r) {
            e.v = mag(g);
            e.p = e.v > 0 && pr(g);
        }
    return A;
}

struct PropertyResult {
    bool tableau_ok = true, recording_ok = true, marks_ok = true, content_ok = true, lis_ok = true, roundtrip_ok = true;
};

PropertyResult check_all(const AMatrix& A, RskConvention conv)
{
    PropertyResult p;
    auto w = biword(A, conv);
    auto r = rsk_word(w);
    p.tableau_ok = is_marked_tableau(r.S);
    p.recording_ok = is_semistandard(r.U);
    p.marks_ok = r.S.marks() == A.mark();
    std::vector<int> cu(A.m, 0), cs(A.n, 0);
    for (const auto& row : r.S.rows)
        for (const auto& a : row) cu[a.value - 1]++;
    for (const auto& row : r.U.rows)
        for (int b : row) cs[b - 1]++;
    p.content_ok = cu == A.row_sums() && cs == A.column_sums();
    int l1 = r.S.rows.empty() ? 0 : static_cast<int>(r.S.rows[0].size());
    p.lis_ok = lis_marked(lower_word(w)) == l1;
    try {
        p.roundtrip_ok = inverse_rsk(r.S, r.U, A.m, A.n, conv) == A;
    } catch (const NotInImage&) {
        p.roundtrip_ok = false;
    }
    return p;
}

} // namespace

TEST(Rsk, LetterOrder)
{
    EXPECT_LT(L(1, true), L(1));
    EXPECT_LT(L(1), L(2, true));
    EXPECT_LT(L(2, true), L(2));
    EXPECT_EQ(to_string(L(3, true)), "3'");
}

TEST(Rsk, BiwordExamples)
{
    AMatrix A(std::vector<std::vector<AEntry>>{{{2, false}}});
    EXPECT_EQ(biword(A), (Biword{{1, L(1)}, {1, L(1)}}));
    AMatrix B(std::vector<std::vector<AEntry>>{{{2, true}}});
    RskConvention literal{TieOrder::increasing, CopyMarking::all};
    EXPECT_EQ(biword(B, literal), (Biword{{1, L(1, true)}, {1, L(1, true)}}));
    EXPECT_EQ(biword(B), (Biword{{1, L(1, true)}, {1, L(1)}}));
    EXPECT_TRUE(biword(AMatrix(2, 3)).empty());
}

TEST(Rsk, InsertExamples)
{
    MarkedTableau T{{{L(1)}}};
    EXPECT_EQ(insert(T, L(1)), (Cell{1, 2}));
    EXPECT_EQ(T.rows[0], (std::vector<MarkedLetter>{L(1), L(1)}));
    MarkedTableau P{{{L(1, true)}}};
    EXPECT_EQ(insert(P, L(1, true)), (Cell{2, 1}));
    EXPECT_EQ(P.rows.size(), 2u);
    MarkedTableau E;
    EXPECT_EQ(insert(E, L(4)), (Cell{1, 1}));
}

TEST(Rsk, ShapeExamples)
{
    AMatrix A(std::vector<std::vector<AEntry>>{{{2, false}}});
    EXPECT_EQ(rsk(A).shape(), Partition{2});
    AMatrix B(std::vector<std::vector<AEntry>>{{{2, true}}});
    // k copies of 1' stack a column under the literal copy rule
    RskConvention literal{TieOrder::increasing, CopyMarking::all};
    EXPECT_EQ(rsk(B, literal).shape(), (Partition{1, 1}));
    EXPECT_EQ(rsk(B).shape(), Partition{2});
    auto z = rsk(AMatrix(2, 2));
    EXPECT_TRUE(z.S.rows.empty());
    EXPECT_TRUE(z.U.rows.empty());
    EXPECT_EQ(inverse_rsk(z.S, z.U, 2, 2), AMatrix(2, 2));
}

TEST(Rsk, DefaultConventionExhaustive2x2)
{
    int count = 0;
    for_each_matrix(2, 2, 2, [&](const AMatrix& A) {
        auto p = check_all(A, {});
        ++count;
        EXPECT_TRUE(p.tableau_ok && p.recording_ok && p.marks_ok && p.content_ok && p.lis_ok && p.roundtrip_ok);
    });
    EXPECT_EQ(count, 625);
}

TEST(Rsk, DefaultConventionRandom4x4)
{
    std::mt19937_64 g(2024);
    for (int rep = 0; rep < 2000; ++rep) {
        auto A = random_matrix(g, 4, 4);
        auto p = check_all(A, {});
        ASSERT_TRUE(p.tableau_ok && p.recording_ok && p.marks_ok && p.content_ok && p.lis_ok && p.roundtrip_ok) << rep;
    }
}

TEST(Rsk, AlternativeConventionsFailTheGate)
{
    // Only the default satisfies every postcondition on small cases.
    for (RskConvention c : {RskConvention{TieOrder::increasing, CopyMarking::all}, RskConvention{TieOrder::marked_decreasing, CopyMarking::all},
                            RskConvention{TieOrder::marked_decreasing, CopyMarking::first}}) {
        bool all_ok = true;
        for_each_matrix(2, 2, 2, [&](const AMatrix& A) {
            auto p = check_all(A, c);
            all_ok = all_ok && p.tableau_ok && p.recording_ok && p.marks_ok && p.roundtrip_ok;
        });
        EXPECT_FALSE(all_ok);
    }
}

TEST(Rsk, WeightIdentity)
{
    // Sum over matrices of (−t)^{mark} x^u y^s grouped by shape equals S_λ(x;t) s_λ(y),
    // compared on monomials with every exponent <= B.
    const int m = 2, n = 2, B = 2;
    Q t(-2, 3);
    std::vector<Q> x{Q(1, 2), Q(1, 3)}, y{Q(1, 5), Q(2, 7)};
    std::map<Partition, Q> lhs;
    for_each_matrix(m, n, B, [&](const AMatrix& A) {
        auto u = A.row_sums();
        auto s = A.column_sums();
        for (int v : u)
            if (v > B) return;
        for (int v : s)
            if (v > B) return;
        Q w = 1;
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < u[i]; ++k) w *= x[i];
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < s[j]; ++k) w *= y[j];
        for (int k = 0; k < A.mark(); ++k) w *= -t;
        lhs[rsk(A).shape()] += w;
    });
    // Right side restricted to the same monomials: enumerate SSYT-free via tableau sums.
    for (const auto& [l, val] : lhs) {
        Q rhs = 0;
        std::map<std::vector<int>, Q> sx, sy;
        for_each_marked_tableau(l, m, [&](const MarkedTableau& S) {
            std::vector<int> c(m, 0);
            for (const auto& r : S.rows)
                for (const auto& a : r) c[a.value - 1]++;
            Q w = 1;
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < c[i]; ++k) w *= x[i];
            for (int k = 0; k < S.marks(); ++k) w *= -t;
            sx[c] += w;
        });
        for_each_marked_tableau(l, n, [&](const MarkedTableau& S) {
            if (S.marks() != 0) return;
            std::vector<int> c(n, 0);
            for (const auto& r : S.rows)
                for (const auto& a : r) c[a.value - 1]++;
            Q w = 1;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < c[j]; ++k) w *= y[j];
            sy[c] += w;
        });
        for (const auto& [cx, wx] : sx) {
            if (*std::max_element(cx.begin(), cx.end()) > B) continue;
            for (const auto& [cy, wy] : sy)
                if (*std::max_element(cy.begin(), cy.end()) <= B) rhs += wx * wy;
        }
        EXPECT_EQ(val, rhs) << to_string(l);
    }
}

TEST(Rsk, InverseRejectsNonImage)
{
    MarkedTableau S{{{L(1), L(2)}}};
    RecordingTableau U{{{1}, {1}}};
    EXPECT_THROW(inverse_rsk(S, U), NotInImage);
    RecordingTableau U2{{{2, 1}}};
    EXPECT_THROW(inverse_rsk(S, U2), NotInImage);
}

TEST(Rsk, LisExamples)
{
    EXPECT_EQ(lis_marked({L(1), L(1)}), 2);
    EXPECT_EQ(lis_marked({L(1, true), L(1, true)}), 1);
    EXPECT_EQ(lis_marked({}), 0);
    EXPECT_EQ(lis_marked({L(1, true), L(1), L(1)}), 3);
}

TEST(Rsk, ColumnOfNewCell)
{
    EXPECT_TRUE(column_of_new_cell_check({L(1), L(1)}));
    EXPECT_TRUE(column_of_new_cell_check({L(2), L(1)}));
    EXPECT_TRUE(column_of_new_cell_check({L(5, true)}));
    std::mt19937_64 g(4);
    std::uniform_int_distribution<int> v(1, 4);
    std::bernoulli_distribution p(0.5);
    for (int rep = 0; rep < 500; ++rep) {
        std::vector<MarkedLetter> w;
        for (int k = 0; k < 12; ++k) w.push_back(L(v(g), p(g)));
        EXPECT_TRUE(column_of_new_cell_check(w));
        EXPECT_EQ(first_row_length(w), lis_marked(w));
    }
}

TEST(Rsk, SchenstedShape)
{
    EXPECT_EQ(schensted_shape({}), Partition{});
    EXPECT_EQ(schensted_shape({1, 2, 3}), Partition{3});
    EXPECT_EQ(schensted_shape({3, 2, 1}), (Partition{1, 1, 1}));
    EXPECT_EQ(schensted_shape({2, 1, 3}), (Partition{2, 1}));
}
