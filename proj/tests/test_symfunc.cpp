#include <gtest/gtest.h>

#include <random>

#include "tschur/symfunc.hpp"

using namespace tschur;
using Q = Rational;

namespace {

std::vector<Q> random_vars(std::mt19937_64& g, int m)
{
    std::uniform_int_distribution<int> num(-5, 5), den(1, 6);
    std::vector<Q> x;
    for (int i = 0; i < m; ++i) {
        Q v(num(g), den(g));
        v.canonicalize();
        x.push_back(v);
    }
    return x;
}

// Ordinary Schur of finitely many variables by the bialternant formula.
Q schur_bialternant(const std::vector<Q>& x, const Partition& l)
{
    const int n = static_cast<int>(x.size());
    if (l.length() > n) return 0;
    Matrix<Q> num(n, std::vector<Q>(n)), den(n, std::vector<Q>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Q a = 1, b = 1;
            for (int k = 0; k < l(j + 1) + n - 1 - j; ++k) a *= x[i];
            for (int k = 0; k < n - 1 - j; ++k) b *= x[i];
            num[i][j] = a;
            den[i][j] = b;
        }
    return det_field(num) / det_field(den);
}

} // namespace

TEST(Symfunc, HtOneVariable)
{
    Q x(2, 3), t(-1, 2);
    auto spec = PowerSumSpec<Q>::finite({x}, 8);
    auto h = h_t(spec, t, 8);
    EXPECT_EQ(h[0], 1);
    Q pw = 1;
    for (int n = 1; n <= 8; ++n) {
        pw *= x;
        EXPECT_EQ(h[n], (1 - t) * pw);
    }
    EXPECT_THROW(h_t(spec, t, 9), std::out_of_range);
}

TEST(Symfunc, HtMatchesProductExpansion)
{
    std::mt19937_64 g(3);
    for (Q t : {Q(0), Q(-1), Q(-1, 2), Q(2, 5)}) {
        auto x = random_vars(g, 3);
        auto spec = PowerSumSpec<Q>::finite(x, 10);
        EXPECT_EQ(h_t(spec, t, 10), h_t_product(x, t, 10));
        EXPECT_EQ(e_t(spec, t, 10), e_t_product(x, t, 10));
    }
}

TEST(Symfunc, TZeroGivesOrdinary)
{
    std::vector<Q> x{Q(1, 2), Q(-1, 3), Q(2)};
    auto spec = PowerSumSpec<Q>::finite(x, 8);
    auto h = h_t(spec, Q(0), 8);
    auto hd = complete_homogeneous_direct(x, 8);
    for (int n = 0; n <= 8; ++n) EXPECT_EQ(h[n], hd[n]);
    auto e = e_t(spec, Q(0), 8);
    EXPECT_EQ(e[1], x[0] + x[1] + x[2]);
    EXPECT_EQ(e[2], x[0] * x[1] + x[0] * x[2] + x[1] * x[2]);
    EXPECT_EQ(e[3], x[0] * x[1] * x[2]);
    EXPECT_EQ(e[4], 0);
}

TEST(Symfunc, PlancherelSpec)
{
    Q a(3, 4), t(-2);
    auto h = h_t(PowerSumSpec<Q>::plancherel(a, 7), t, 7);
    Q c = (1 - t) * a, pw = 1, fact = 1;
    for (int n = 0; n <= 7; ++n) {
        if (n) {
            pw *= c;
            fact *= n;
        }
        EXPECT_EQ(h[n], pw / fact);
    }
}

TEST(Symfunc, EOneVariable)
{
    Q x(3, 7), t(-5, 2);
    auto e = e_t(PowerSumSpec<Q>::finite({x}, 4), t, 4);
    EXPECT_EQ(e[1], (1 - t) * x);
    EXPECT_EQ(e[2], -t * (1 - t) * x * x);
}

TEST(Symfunc, EHInversion)
{
    std::mt19937_64 g(5);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<Q> p;
        for (int k = 0; k < 10; ++k) p.push_back(Q(num(g), den(g)));
        for (auto& v : p) v.canonicalize();
        auto spec = PowerSumSpec<Q>::free(p);
        Q t(num(g), den(g));
        t.canonicalize();
        auto e = e_t(spec, t, 10);
        auto h = h_t(spec, t, 10);
        auto hm = scale_argument(h, Q(-1));
        EXPECT_EQ(e * hm, TruncatedSeries<Q>::one(10));
    }
}

TEST(Symfunc, PrincipalSpec)
{
    auto s = PowerSumSpec<Q>::principal(Q(3), 5);
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(s.power_sum(k), 3);
    // 1^3 is three variables equal to 1
    auto f = PowerSumSpec<Q>::finite({1, 1, 1}, 5);
    EXPECT_EQ(t_schur(s, Q(-1, 2), Partition{2, 1}), t_schur(f, Q(-1, 2), Partition{2, 1}));
}

TEST(Symfunc, TSchurExamples)
{
    Q x(5, 3), t(-3, 4);
    auto spec = PowerSumSpec<Q>::finite({x}, 6);
    EXPECT_EQ(t_schur(spec, t, Partition{1, 1}), -t * (1 - t) * x * x);
    EXPECT_EQ(t_schur(spec, t, Partition{2}), (1 - t) * x * x);
    EXPECT_EQ(t_schur_dual(spec, t, Partition{1, 1}), -t * (1 - t) * x * x);
    EXPECT_EQ(t_schur_dual(spec, t, Partition{1}), h_t(spec, t, 1)[1]);
    EXPECT_EQ(t_schur(spec, t, Partition{}), 1);
    EXPECT_THROW(t_schur(spec, t, Partition{4, 3}), std::out_of_range);
}

TEST(Symfunc, TZeroEqualsSchur)
{
    std::mt19937_64 g(9);
    auto x = random_vars(g, 3);
    auto spec = PowerSumSpec<Q>::finite(x, 6);
    for (const auto& l : enumerate(6, EnumerateMode::up_to_weight)) {
        Q s = schur(spec, l);
        EXPECT_EQ(s, schur_classical(x, l)) << to_string(l);
        EXPECT_EQ(s, schur_bialternant(x, l)) << to_string(l);
    }
}

TEST(Symfunc, SchurExamples)
{
    auto spec = PowerSumSpec<Q>::finite({Q(1), Q(1)}, 4);
    EXPECT_EQ(schur(spec, Partition{2, 1}), 2);
    auto one = PowerSumSpec<Q>::finite({Q(4, 9)}, 4);
    EXPECT_EQ(schur(one, Partition{1, 1}), 0);
    EXPECT_EQ(schur(one, Partition{1}), one.power_sum(1));
}

TEST(Symfunc, DualityRandom)
{
    std::mt19937_64 g(13);
    for (Q t : {Q(0), Q(-1), Q(-1, 2), Q(2, 5)}) {
        auto x = random_vars(g, 3);
        auto spec = PowerSumSpec<Q>::finite(x, 7);
        for (const auto& l : enumerate(7, EnumerateMode::up_to_weight))
            EXPECT_EQ(t_schur(spec, t, l), t_schur_dual(spec, t, l)) << to_string(l);
    }
}

TEST(Symfunc, TableauOracleExamples)
{
    Q x(2, 5), t(-7, 3);
    EXPECT_EQ(t_schur_tableau_oracle({x}, t, Partition{2}), (1 - t) * x * x);
    EXPECT_EQ(t_schur_tableau_oracle({x}, t, Partition{1, 1}), -t * (1 - t) * x * x);
    EXPECT_EQ(t_schur_tableau_oracle({x}, t, Partition{}), 1);
    EXPECT_THROW(t_schur_tableau_oracle({x, x, x, x}, t, Partition{1}), std::length_error);
}

TEST(Symfunc, TableauOracleMatchesDeterminantSmall)
{
    std::mt19937_64 g(17);
    for (Q t : {Q(-1), Q(-1, 3)}) {
        auto x = random_vars(g, 2);
        auto spec = PowerSumSpec<Q>::finite(x, 5);
        for (const auto& l : enumerate(5, EnumerateMode::up_to_weight))
            EXPECT_EQ(t_schur_tableau_oracle(x, t, l), t_schur(spec, t, l)) << to_string(l);
    }
}

TEST(Tableau, ValidatorsAgreeWithEnumerator)
{
    // every filling from the enumerator passes the validators; count for (2) in one letter is 2
    int n = 0;
    for_each_marked_tableau(Partition{2}, 1, [&](const MarkedTableau& s) {
        EXPECT_TRUE(is_marked_tableau(s));
        ++n;
    });
    EXPECT_EQ(n, 2);
    MarkedTableau bad{{{{1, true}, {1, true}}}};
    EXPECT_FALSE(satisfies_t2(bad));
    MarkedTableau col{{{{1, false}}, {{1, false}}}};
    EXPECT_TRUE(satisfies_t1(col));
    EXPECT_FALSE(satisfies_t2(col));
}
