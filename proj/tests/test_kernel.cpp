#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "tschur/kernel.hpp"

using namespace tschur;
using Q = Rational;
using Spec = SymbolSpec<double>;

namespace {

// K(a, b) by trapezoid quadrature of √(zw)/(z−w)·𝒥(z)/𝒥(w) on |z| = r1 > |w| = r2.
double kernel_by_contour(const std::function<std::complex<double>(std::complex<double>)>& J, int a, int b, double r1, double r2, int n)
{
    const double pi = std::acos(-1.0);
    std::complex<double> s = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto z = std::polar(r1, 2 * pi * i / n), w = std::polar(r2, 2 * pi * j / n);
            // √z z^{−a−1/2} dz/(2πi z) → z^{−a}; √w w^{b+1/2} dw/(2πi w) → w^{b+1}
            s += J(z) / J(w) / (z - w) * std::pow(z, -a) * std::pow(w, b + 1);
        }
    return (s / double(n) / double(n)).real();
}

Spec finite_d(std::vector<double> x, std::vector<double> y, double t) { return Spec::finite(x, y, t); }

} // namespace

TEST(Kernel, ZeroSpecIsDiracSea)
{
    auto w = kernel_window(Spec{}, -4, 3);
    for (int a = -4; a <= 3; ++a)
        for (int b = -4; b <= 3; ++b) EXPECT_EQ(w.at(a, b), (a == b && a <= -1) ? 1.0 : 0.0);
    EXPECT_LT(w.max_error(), 1e-13);
}

TEST(Kernel, PlancherelCoefficientsMatchFactorialConvolution)
{
    double a = 0.7, b = 1.3, t = -0.5, g = (1 - t) * a;
    auto sym = symbol(Spec::plancherel(a, b, t), 12, 40);
    for (int n = -12; n <= 12; ++n) {
        double s = 0;
        for (int k = std::max(0, -n); k < 60; ++k) s += std::pow(g, n + k) * std::pow(b, k) * (k % 2 ? -1 : 1) / (std::tgamma(n + k + 1.0) * std::tgamma(k + 1.0));
        EXPECT_NEAR(sym.J.coeff(n), s, 1e-14) << n;
        EXPECT_LE(std::fabs(sym.J.coeff(n) - s), sym.J.error(n) + 1e-15);
    }
}

TEST(Kernel, FiniteSymbolMatchesDirectProduct)
{
    // (1/(1 − z/2))(1 − 1/(3z)): J_n = 2^{−n} − 2^{−n−1}/3 for n >= 0, J_{−1} = −1/3
    auto sym = symbol(finite_d({0.5}, {1.0 / 3}, 0), 20, 40);
    EXPECT_NEAR(sym.J.coeff(-1), -1.0 / 3, 1e-15);
    EXPECT_EQ(sym.J.coeff(-2), 0);
    for (int n = 0; n <= 20; ++n) EXPECT_NEAR(sym.J.coeff(n), std::pow(0.5, n) - std::pow(0.5, n + 1) / 3, 1e-15);
}

TEST(Kernel, WindowsAreInverse)
{
    auto sym = symbol(finite_d({0.5, 0.25}, {1.0 / 3}, -2), 30, 60);
    auto p = laurent_mul(sym.J, sym.Jhat);
    for (int n = -20; n <= 20; ++n) {
        double want = n == 0 ? 1 : 0;
        EXPECT_LE(std::fabs(p.coeff(n) - want), p.error(n) + 1e-15) << n;
        EXPECT_LT(p.error(n), 1e-9) << n;
    }
}

TEST(Kernel, SymbolPointwiseMatchesProduct)
{
    double t = -1;
    auto sym = symbol(finite_d({0.5}, {0.5}, t), 60, 60);
    for (int k = 0; k < 8; ++k) {
        std::complex<double> z = std::polar(1.0, 0.7 * k);
        auto [v, e] = sym.J.evaluate(z);
        std::complex<double> exact = (1.0 - t * 0.5 * z) / (1.0 - 0.5 * z) * (1.0 - 0.5 / z);
        EXPECT_LE(std::abs(v - exact), e + 1e-14);
    }
}

TEST(Kernel, AnchorOneVariable)
{
    auto w = kernel_window(finite_d({0.5}, {0.5}, 0), -1, -1);
    EXPECT_NEAR(w.at(-1, -1), 0.75, 1e-12);
    EXPECT_LT(w.max_error(), 1e-10);
}

TEST(Kernel, EntriesMatchContourIntegral)
{
    double t = -1;
    auto J = [&](std::complex<double> z) { return (1.0 - t * 0.5 * z) / (1.0 - 0.5 * z) * (1.0 - 1.0 / 3 / z) * (1.0 - 0.25 / z); };
    auto spec = finite_d({0.5}, {1.0 / 3, 0.25}, t);
    auto w = kernel_window(spec, -3, 2);
    for (int a = -3; a <= 2; ++a)
        for (int b = -3; b <= 2; ++b) EXPECT_NEAR(w.at(a, b), kernel_by_contour(J, a, b, 1.3, 0.8, 256), 1e-10) << a << "," << b;
}

TEST(Kernel, ConjugationPreservesMinors)
{
    auto spec = finite_d({0.5, 0.25}, {1.0 / 3}, -1);
    auto w1 = kernel_window(spec, -3, 2);
    auto w2 = kernel_window(spec, -3, 2, {}, 1.2);
    for (int a = -3; a <= 2; ++a)
        for (int b = -3; b <= 2; ++b) EXPECT_NEAR(w2.at(a, b), std::pow(1.2, a - b) * w1.at(a, b), 1e-10);
}

TEST(Kernel, CorrelationMatchesBruteForce)
{
    TSchurParams p{{Q(1, 2)}, {Q(1, 2)}, Q(-1)};
    auto spec = Spec::finite(p);
    auto bf = correlation_bruteforce(p, {0, -1}, 30);
    auto c = correlation(spec, {0, -1});
    EXPECT_LT(std::fabs(c.value - bf.value), 1e-8 + bf.tail + c.err);
    EXPECT_EQ(correlation(spec, {}).value, 1.0);
}

TEST(Kernel, SinglePointTwoWays)
{
    // one y variable gives one-row shapes, so 0 ∈ S(λ) iff λ₁ = 1
    TSchurParams p{{Q(1, 2), Q(1, 4)}, {Q(1, 3)}, Q(-2)};
    auto spec = Spec::finite(p);
    auto bf = correlation_bruteforce(p, {0}, 30);
    double direct = correlation(spec, {0}).value;
    double via_gap = gap_probability(spec, 1, 40).value - gap_probability(spec, 0, 40).value;
    EXPECT_NEAR(bf.value, direct, 1e-8 + bf.tail);
    EXPECT_NEAR(bf.value, via_gap, 1e-8 + bf.tail);
}

TEST(Kernel, GapAnchors)
{
    auto g = gap_probability_auto(finite_d({0.5}, {0.5}, 0), 0, 1e-12);
    EXPECT_NEAR(g.value, 0.75, 1e-9);
    EXPECT_NEAR(gap_probability(Spec{}, 2, 5).value, 1.0, 0);
    auto pl = gap_probability_auto(Spec::plancherel(1, 1, 0), 1, 1e-12);
    double s = 0, f = 1;
    for (int n = 0; n < 30; ++n) {
        if (n) f *= n;
        s += std::exp(-1.0) / (f * f);
    }
    EXPECT_NEAR(pl.value, s, 1e-8);
}

TEST(Kernel, GapDifferencesSumToOne)
{
    auto spec = finite_d({0.5, 0.25}, {0.5, 1.0 / 3}, -1);
    double prev = 0;
    for (int h = 0; h <= 40; ++h) {
        double g = gap_probability(spec, h, 40).value;
        EXPECT_GE(g, prev - 1e-12);
        prev = g;
    }
    EXPECT_NEAR(prev, 1.0, 1e-9);
}

TEST(Kernel, WindowDoublingStable)
{
    auto spec = finite_d({0.5}, {0.5, 0.25}, -2);
    KernelOptions a, b;
    b.margin = 2 * a.margin;
    auto c1 = correlation(spec, {1, -1, -2}, a);
    auto c2 = correlation(spec, {1, -1, -2}, b);
    EXPECT_LE(std::fabs(c1.value - c2.value), c1.err + c2.err);
}

TEST(Kernel, DerivativeInP1)
{
    auto r = dp1_derivative_check(finite_d({0.5}, {}, 0), 0, 1.5, 0.5, 16, 1e-4);
    EXPECT_LT(r.residual, 1e-6);
    EXPECT_GE(r.slope, 1.8);
    EXPECT_LE(r.slope, 2.2);
    auto z = dp1_derivative_check(finite_d({0.5}, {0.25}, 1), 1, 1.5, 0.5, 8, 1e-4);
    EXPECT_LT(z.residual, 1e-10);
}

TEST(Kernel, IntegrableDecomposition)
{
    auto r10 = iiks_decomposition_check({0.5}, {}, 0, -3, 2);
    EXPECT_EQ(r10.rank, 2);
    EXPECT_TRUE(r10.within_bounds);
    EXPECT_LT(r10.max_bound, 1e-8);
    auto r11 = iiks_decomposition_check({0.5}, {0.5}, -1, -3, 2);
    EXPECT_EQ(r11.rank, 3);
    EXPECT_TRUE(r11.within_bounds);
    auto r21 = iiks_decomposition_check({0.5, 0.25}, {1.0 / 3}, -2, -3, 3);
    EXPECT_EQ(r21.rank, 5);
    EXPECT_TRUE(r21.within_bounds);
    EXPECT_LT(r21.max_bound, 1e-8);
}
