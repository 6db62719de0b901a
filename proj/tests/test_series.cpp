#include <gtest/gtest.h>

#include <random>

#include "tschur/series.hpp"

using namespace tschur;
using Q = Rational;
using TS = TruncatedSeries<Q>;

namespace {

TS random_series(std::mt19937_64& g, int D, bool zero_const = false)
{
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    TS s(D);
    for (int k = 0; k <= D; ++k) {
        s[k] = Q(num(g), den(g));
        s[k].canonicalize();
    }
    if (zero_const) s[0] = 0;
    return s;
}

// exp(L) = sum_k L^k / k! with explicit powers.
TS exp_by_powers(const TS& L)
{
    int D = L.cap();
    TS acc = TS::one(D), pw = TS::one(D);
    Q fact = 1;
    for (int k = 1; k <= D; ++k) {
        pw = pw * L;
        fact *= k;
        acc += pw * (Q(1) / fact);
    }
    return acc;
}

} // namespace

TEST(Series, MulExamples)
{
    TS a(std::vector<Q>{1, 1, 0, 0}), b(std::vector<Q>{1, -1, 0, 0});
    EXPECT_EQ(a * b, TS(std::vector<Q>{1, 0, -1, 0}));
    Q t(-2, 3);
    TS geo(std::vector<Q>(6, Q(1)));
    TS f(6 - 1);
    f[0] = 1;
    f[1] = -t;
    auto h = f * geo;
    EXPECT_EQ(h[0], 1);
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(h[k], 1 - t);
    EXPECT_THROW(mul(TS(3), TS(4)), std::invalid_argument);
}

TEST(Series, RingAxiomsRandom)
{
    std::mt19937_64 g(7);
    for (int rep = 0; rep < 20; ++rep) {
        auto a = random_series(g, 9), b = random_series(g, 9), c = random_series(g, 9);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (a[0] != 0) EXPECT_EQ(a * inverse(a), TS::one(9));
    }
}

TEST(Series, ExpExamples)
{
    TS L(8);
    Q c(3, 5);
    L[1] = c;
    auto e = exp_series(L);
    Q fact = 1, pw = 1;
    for (int n = 0; n <= 8; ++n) {
        if (n) {
            fact *= n;
            pw *= c;
        }
        EXPECT_EQ(e[n], pw / fact);
    }
    EXPECT_EQ(exp_series(TS(5)), TS::one(5));
    TS m(std::vector<Q>{0, 1, 1, 0});
    EXPECT_EQ(exp_series(m)[3], Q(7, 6));
    EXPECT_THROW(exp_series(TS::one(3)), std::domain_error);
}

TEST(Series, ExpMatchesPowerSumOracleAndLogRoundTrip)
{
    std::mt19937_64 g(11);
    for (int D = 1; D <= 12; ++D) {
        auto L = random_series(g, D, true);
        auto e = exp_series(L);
        EXPECT_EQ(e, exp_by_powers(L));
        EXPECT_EQ(log_series(e), L);
    }
}

TEST(Laurent, DeltaIsIdentity)
{
    LaurentWindow<Q> w(-2, {Q(1), Q(2), Q(3), Q(4)});
    auto r = laurent_mul(LaurentWindow<Q>::delta(), w);
    EXPECT_EQ(r.lo, -2);
    EXPECT_EQ(r.c, w.c);
    EXPECT_EQ(r.max_error(), 0);
}

TEST(Laurent, SquareOfZPlusInverse)
{
    LaurentWindow<Q> w(-1, {Q(1), Q(0), Q(1)});
    auto r = laurent_mul(w, w);
    EXPECT_EQ(r.lo, -2);
    EXPECT_EQ(r.c, (std::vector<Q>{1, 0, 2, 0, 1}));
    EXPECT_EQ(r.above.scale, 0);
    EXPECT_EQ(r.below.scale, 0);
}

TEST(Laurent, ExpTimesExpInverseIsDelta)
{
    ProductSpec<double> p;
    p.gamma = 1;
    auto a = product_series(p, 30);
    p.gamma = -1;
    auto b = product_series(p, 30);
    auto r = laurent_mul(a, b, std::make_pair(0, 30));
    for (int n = 0; n <= 30; ++n) {
        double want = n == 0 ? 1.0 : 0.0;
        EXPECT_LE(std::fabs(r.coeff(n) - want), r.error(n) + 1e-300) << n;
    }
    EXPECT_LT(r.max_error(), 1e-12);
}

TEST(Laurent, ProductSeriesTailDominatesDiscarded)
{
    // (1 − z/2)^{-2}: c_n = (n+1) 2^{-n}
    ProductSpec<double> p;
    p.factors = {{0.5, -2.0}};
    auto w = product_series(p, 10);
    for (int n = 0; n <= 10; ++n) EXPECT_NEAR(w.coeff(n), (n + 1) * std::pow(0.5, n), 1e-15);
    for (int n = 11; n <= 200; ++n) EXPECT_LE((n + 1) * std::pow(0.5, n), w.error(n)) << n;
    // real exponent: (1 − z/3)^{1/2}
    p.factors = {{1.0 / 3, 0.5}};
    auto u = product_series(p, 40);
    auto v = product_series(p, 80);
    for (int n = 41; n <= 80; ++n) EXPECT_LE(std::fabs(v.coeff(n)), u.error(n)) << n;
}

TEST(Laurent, ProductOfTailsIsSound)
{
    // f = 1/(1 − z/2), g = 1/(1 − 1/(3z)); exact coefficients of f·g are
    // known in closed form: for n >= 0, c_n = 2^{-n} / (1 − 1/6); for n < 0, 3^{n} / (1 − 1/6).
    ProductSpec<double> pf;
    pf.factors = {{0.5, -1.0}};
    ProductSpec<double> pg;
    pg.factors = {{1.0 / 3, -1.0}};
    auto f = product_series(pf, 12);
    auto g = reflect(product_series(pg, 9));
    auto r = laurent_mul(f, g);
    auto exact = [](int n) { return (n >= 0 ? std::pow(0.5, n) : std::pow(3.0, n)) / (1 - 1.0 / 6); };
    for (int n = -40; n <= 60; ++n) EXPECT_LE(std::fabs(r.coeff(n) - exact(n)), r.error(n) * (1 + 1e-12) + 1e-300) << n;
    auto [val, err] = r.evaluate({1.0, 0.0});
    EXPECT_LE(std::abs(val - 3.0), err);
}
