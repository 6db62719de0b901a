#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <gsl/gsl_integration.h>

#include "highprec.hpp"
#include "kernel.hpp"
#include "linalg.hpp"

namespace tschur {

struct AiryValues {
    long double ai = 0, aip = 0;
};

namespace detail {

constexpr long double airy_ai0 = 0.355028053887817239260063186004183176L;   // Ai(0)
constexpr long double airy_aip0 = -0.258819403792806798405183560189203963L; // Ai'(0)
constexpr long double pi_ld = 3.141592653589793238462643383279502884L;

// Maclaurin series Ai = Ai(0) f + Ai'(0) g with f'' = x f, g'' = x g.
inline AiryValues airy_series(long double x)
{
    const long double x3 = x * x * x;
    long double f = 1, fp = 0, g = x, gp = 1;
    long double a = 1, b = 1, prev = 1, xp = 1;  // xp = x^{3k}
    for (int k = 1; k < 400; ++k) {
        a /= static_cast<long double>(3 * k - 1) * (3 * k);
        b /= static_cast<long double>(3 * k) * (3 * k + 1);
        prev = xp;
        xp *= x3;
        long double tf = a * xp, tg = b * xp * x;
        f += tf;
        fp += 3 * k * a * prev * x * x;
        g += tg;
        gp += (3 * k + 1) * b * xp;
        if (k > 4 && std::fabs(tf) + std::fabs(tg) < 1e-30L * (std::fabs(f) + std::fabs(g) + 1)) break;
    }
    return {airy_ai0 * f + airy_aip0 * g, airy_ai0 * fp + airy_aip0 * gp};
}

// Large-|x| expansions in ζ = (2/3)|x|^{3/2}, summed to the smallest term.
inline AiryValues airy_asymptotic(long double x)
{
    const long double ax = std::fabs(x), z = 2 * std::pow(ax, 1.5L) / 3;
    std::vector<long double> u{1}, v{1};
    for (int k = 1; k < 200; ++k) {
        long double uk = u.back() * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (static_cast<long double>(2 * k - 1) * 216 * k);
        if (uk / std::pow(z, static_cast<long double>(k)) > u.back() / std::pow(z, static_cast<long double>(k - 1))) break;
        u.push_back(uk);
        v.push_back(-uk * (6 * k + 1) / (6 * k - 1));
    }
    const long double q = std::pow(ax, 0.25L), sp = std::sqrt(pi_ld);
    if (x > 0) {
        long double su = 0, sv = 0, zk = 1;
        for (std::size_t k = 0; k < u.size(); ++k) {
            long double sgn = k % 2 ? -1 : 1;
            su += sgn * u[k] / zk;
            sv += sgn * v[k] / zk;
            zk *= z;
        }
        long double e = std::exp(-z);
        return {e / (2 * sp * q) * su, -q * e / (2 * sp) * sv};
    }
    long double pu = 0, qu = 0, pv = 0, qv = 0, zk = 1;
    for (std::size_t k = 0; k < u.size(); ++k) {
        long double sgn = (k / 2) % 2 ? -1 : 1;
        if (k % 2 == 0) {
            pu += sgn * u[k] / zk;
            pv += sgn * v[k] / zk;
        } else {
            qu += sgn * u[k] / zk;
            qv += sgn * v[k] / zk;
        }
        zk *= z;
    }
    long double c = std::cos(z - pi_ld / 4), s = std::sin(z - pi_ld / 4);
    return {(c * pu + s * qu) / (sp * q), q / sp * (s * pv - c * qv)};
}

} // namespace detail

/// Series on [−8, 6], asymptotic expansions outside; absolute error below
/// 1e-10 on [−12, 12] and usable on [−40, 100].
inline AiryValues airy_both(long double x)
{
    if (!(x >= -40 && x <= 100)) throw std::domain_error("airy: argument outside supported range [-40, 100]");
    if (x >= -8 && x <= 6) return detail::airy_series(x);
    return detail::airy_asymptotic(x);
}

inline double airy(double x) { return static_cast<double>(airy_both(x).ai); }
inline double airy_prime(double x) { return static_cast<double>(airy_both(x).aip); }

namespace detail {
inline long double airy_kernel_from(long double x, const AiryValues& ax, long double y, const AiryValues& ay)
{
    if (x == y) return ax.aip * ax.aip - x * ax.ai * ax.ai;
    return (ax.ai * ay.aip - ax.aip * ay.ai) / (x - y);
}
} // namespace detail

/// (Ai(x)Ai'(y) − Ai'(x)Ai(y))/(x − y), with Ai'(x)² − x Ai(x)² on the diagonal.
inline double airy_kernel(double x, double y)
{
    return static_cast<double>(detail::airy_kernel_from(x, airy_both(x), y, airy_both(y)));
}

struct GaussLegendre {
    std::vector<double> x, w;
};

/// q-point Gauss–Legendre rule mapped to [a, b] (GSL tables).
inline GaussLegendre gauss_legendre(int q, double a, double b)
{
    if (q < 1) throw std::invalid_argument("gauss_legendre: need q >= 1");
    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> tab(
        gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(q)), &gsl_integration_glfixed_table_free);
    if (!tab) throw std::runtime_error("gauss_legendre: table allocation failed");
    GaussLegendre r;
    for (int i = 0; i < q; ++i) {
        double xi, wi;
        gsl_integration_glfixed_point(a, b, static_cast<std::size_t>(i), &xi, &wi, tab.get());
        r.x.push_back(xi);
        r.w.push_back(wi);
    }
    return r;
}

/// F₂(s) = det(I − K_Airy) on [s, s+T] by Nyström with q Gauss–Legendre nodes.
/// Below −12 returns 0 and above 12 returns 1 (both within 1e-20).
inline double tw2_cdf(double s, int q = 60, double T = 16)
{
    if (s < -12) return 0;
    if (s > 12) return 1;
    auto gl = gauss_legendre(q, s, s + T);
    std::vector<AiryValues> av;
    for (double x : gl.x) av.push_back(airy_both(x));
    Matrix<long double> m(q, std::vector<long double>(q));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            long double k = detail::airy_kernel_from(gl.x[i], av[i], gl.x[j], av[j]);
            m[i][j] = (i == j ? 1.0L : 0.0L) - std::sqrt(static_cast<long double>(gl.w[i]) * gl.w[j]) * k;
        }
    return static_cast<double>(det_field(std::move(m)));
}

/// Inverse of tw2_cdf by bisection on [−8, 6].
inline double tw2_quantile(double p, int q = 60)
{
    if (!(p > 0 && p < 1)) throw std::domain_error("tw2_quantile: p must lie in (0,1)");
    double lo = -8, hi = 6;
    for (int it = 0; it < 60; ++it) {
        double mid = (lo + hi) / 2;
        (tw2_cdf(mid, q) < p ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

/// E[F₂] = 12 − ∫ F₂ over [−12, 12] (q-point Gauss–Legendre).
inline double tw2_mean(int q = 160)
{
    auto gl = gauss_legendre(q, -12, 12);
    double m = 12;
    for (std::size_t i = 0; i < gl.x.size(); ++i) m -= gl.w[i] * tw2_cdf(gl.x[i]);
    return m;
}

struct SaddleData {
    double alpha = 0, tau = 0, t = 0;
    double z0 = 0, c1 = 0, c1_alt = 0, c2 = 0;
    double phi3 = 0;
    double residual1 = 0, residual2 = 0;  // |Φ'(z₀)|, |Φ''(z₀)|
};

namespace detail {
// σ(z) = τ log((1−tαz)/(1−αz)) + log(1 − α/z) and its first three derivatives
inline std::array<long double, 3> sigma_derivs(long double a, long double tau, long double t, long double z)
{
    long double p = a / (1 - a * z), q = t * a / (1 - t * a * z);
    long double r = 1 / (z - a), s = 1 / z;
    return {tau * (p - q) + r - s, tau * (p * p - q * q) - r * r + s * s, 2 * tau * (p * p * p - q * q * q) + 2 * r * r * r - 2 * s * s * s};
}
} // namespace detail

/// Double saddle of Φ(z) = σ(z) − c₁ log z in (α, 1/α): root of zσ' + z²σ'' = 0,
/// then c₁ = z₀σ'(z₀) and c₂ = z₀ (Φ'''(z₀)/2)^{1/3}.
inline SaddleData saddle_constants(double alpha, double tau, double t)
{
    if (!(alpha > 0 && alpha < 1)) throw std::domain_error("saddle_constants: alpha must lie in (0,1)");
    if (!(tau > 0)) throw std::domain_error("saddle_constants: tau must be positive");
    if (!(t < 1)) throw std::domain_error("saddle_constants: t must be < 1");
    const long double a = alpha, ta = tau, tt = t;
    auto g = [&](long double z) {
        auto d = detail::sigma_derivs(a, ta, tt, z);
        return z * d[0] + z * z * d[1];
    };
    long double lo = a * (1 + 1e-12L), hi = (1 / a) * (1 - 1e-12L);
    if (!(g(lo) < 0 && g(hi) > 0)) throw std::runtime_error("saddle_constants: no root in bracket");
    for (int it = 0; it < 200 && hi - lo > 1e-18L * hi; ++it) {
        long double mid = (lo + hi) / 2;
        (g(mid) < 0 ? lo : hi) = mid;
    }
    long double z = (lo + hi) / 2;
    for (int it = 0; it < 3; ++it) {
        auto d = detail::sigma_derivs(a, ta, tt, z);
        long double gp = d[0] + 3 * z * d[1] + z * z * d[2];
        long double step = g(z) / gp;
        if (std::fabs(step) > 1e-12L * z) break;
        z -= step;
    }
    auto d = detail::sigma_derivs(a, ta, tt, z);
    SaddleData r;
    r.alpha = alpha;
    r.tau = tau;
    r.t = t;
    long double c1 = z * d[0];
    long double phi3 = d[2] - 2 * c1 / (z * z * z);
    r.z0 = static_cast<double>(z);
    r.c1 = static_cast<double>(c1);
    r.c1_alt = static_cast<double>(-z * z * d[1]);
    r.phi3 = static_cast<double>(phi3);
    r.residual1 = static_cast<double>(std::fabs(d[0] - c1 / z));
    r.residual2 = static_cast<double>(std::fabs(d[1] + c1 / (z * z)));
    if (!(phi3 > 0)) throw std::runtime_error("saddle_constants: third derivative not positive");
    r.c2 = static_cast<double>(z * std::cbrt(phi3 / 2));
    return r;
}

namespace detail {

template <unsigned D, class Build>
bool try_precision(Build& build, const std::vector<int>& pts, double conj, KernelMatrix<double>& out)
{
    using S = Mpfr<D>;
    try {
        SymbolSpec<S> spec = build(std::type_identity<S>{});
        KernelOptions o;
        o.margin = 64;
        o.max_doublings = 6;
        auto w = kernel_matrix(spec, pts, o, S(conj));
        out.points = w.points;
        out.margin = w.margin;
        out.conj = conj;
        out.K.assign(pts.size(), std::vector<double>(pts.size()));
        out.err.assign(pts.size(), std::vector<Bound>(pts.size()));
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < pts.size(); ++j) {
                out.K[i][j] = to_double(w.K[i][j]);
                out.err[i][j] = w.err[i][j] + std::fabs(out.K[i][j]) * std::numeric_limits<double>::epsilon();
            }
        return true;
    } catch (const PrecisionLimited&) {
        return false;
    }
}

} // namespace detail

/// Conjugated kernel on `pts` in the smallest MPFR tier (>= min_digits decimal
/// digits) that certifies every entry to 1e-10.  `build(std::type_identity<S>)`
/// returns the symbol in scalar type S.
template <class Build>
KernelMatrix<double> kernel_matrix_hp(Build&& build, const std::vector<int>& pts, double conj, int min_digits, int* digits_used = nullptr)
{
    KernelMatrix<double> out;
    auto done = [&](int d) {
        if (digits_used) *digits_used = d;
        return out;
    };
    if (min_digits <= 40 && detail::try_precision<40>(build, pts, conj, out)) return done(40);
    if (min_digits <= 80 && detail::try_precision<80>(build, pts, conj, out)) return done(80);
    if (min_digits <= 160 && detail::try_precision<160>(build, pts, conj, out)) return done(160);
    if (min_digits <= 320 && detail::try_precision<320>(build, pts, conj, out)) return done(320);
    if (min_digits <= 640 && detail::try_precision<640>(build, pts, conj, out)) return done(640);
    if (detail::try_precision<1280>(build, pts, conj, out)) return done(1280);
    throw std::runtime_error("kernel_matrix_hp: precision insufficient at 1280 digits");
}

/// Kernel of exp((1−t) a z − b/z) on `pts`, conjugated by R^{a−b}.
inline KernelMatrix<double> plancherel_kernel(double a, double b, double t, const std::vector<int>& pts, double conj = 1, int* digits_used = nullptr)
{
    if (!((1 - t) * a * b > 0)) throw std::domain_error("plancherel_kernel: kappa must be positive");
    double kappa = (1 - t) * a * b;
    auto build = [&]<class S>(std::type_identity<S>) { return SymbolSpec<S>::plancherel(S(a), S(b), S(t)); };
    return kernel_matrix_hp(build, pts, conj, static_cast<int>(0.87 * 2 * std::sqrt(kappa) / 2 + 30), digits_used);
}

struct EdgeGridPoint {
    double xi = 0, eta = 0;
    int d_xi = 0, d_eta = 0;
    double scaled = 0, airy = 0;
};

struct EdgeGridReport {
    std::string family;
    double param = 0;  // κ or n
    double alpha = 0, tau = 0, t = 0;
    double center = 0, scale = 0;
    std::vector<double> grid;
    std::vector<EdgeGridPoint> points;
    double max_deviation = 0;   // vs K_Airy at the nominal grid
    double grid_error = 0;      // |K_Airy(lattice) − K_Airy(nominal)|
    double mixed_pm = 0;        // max |scaled K̃(ξ, −η)|, ξ, η > 0
    double mixed_mp = 0;        // max |scaled K̃(−ξ, η)|
    double mixed_airy = 0;      // max |K_Airy(ξ, −η)| on the same pairs
    double minor_deviation = std::numeric_limits<double>::quiet_NaN();
    double certificate = 0;     // scale × entry error bound
    int digits = 0;
};

namespace detail {

inline int lattice_point(double u) { return static_cast<int>(std::lround(u - 0.5)); }

template <class Build>
EdgeGridReport edge_grid(Build&& build, double conj, double center, double scale, const std::vector<double>& grid,
                         const std::vector<double>& minor_grid, int min_digits)
{
    EdgeGridReport r;
    r.center = center;
    r.scale = scale;
    r.grid = grid;
    std::vector<double> xs = grid;
    for (double g : grid) xs.push_back(-g);
    xs.insert(xs.end(), minor_grid.begin(), minor_grid.end());
    std::vector<int> pts;
    for (double x : xs) pts.push_back(lattice_point(center + scale * x));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto km = kernel_matrix_hp(build, pts, conj, min_digits, &r.digits);
    auto idx = [&](int d) { return static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), d) - pts.begin()); };
    auto scaled = [&](double x, double y) {
        int a = lattice_point(center + scale * x), b = lattice_point(center + scale * y);
        r.certificate = std::max(r.certificate, static_cast<double>(scale * km.err[idx(a)][idx(b)]));
        return scale * km.K[idx(a)][idx(b)];
    };
    auto eff = [&](double x) { return (lattice_point(center + scale * x) + 0.5 - center) / scale; };
    for (double x : grid)
        for (double y : grid) {
            EdgeGridPoint p{x, y, lattice_point(center + scale * x), lattice_point(center + scale * y), scaled(x, y), airy_kernel(x, y)};
            r.max_deviation = std::max(r.max_deviation, std::fabs(p.scaled - p.airy));
            r.grid_error = std::max(r.grid_error, std::fabs(airy_kernel(eff(x), eff(y)) - p.airy));
            r.points.push_back(p);
        }
    for (double x : grid)
        for (double y : grid)
            if (x > 0 && y > 0) {
                r.mixed_pm = std::max(r.mixed_pm, std::fabs(scaled(x, -y)));
                r.mixed_mp = std::max(r.mixed_mp, std::fabs(scaled(-x, y)));
                r.mixed_airy = std::max(r.mixed_airy, std::fabs(airy_kernel(x, -y)));
            }
    if (!minor_grid.empty()) {
        r.minor_deviation = 0;
        for (std::size_t i = 0; i < minor_grid.size(); ++i)
            for (std::size_t j = i + 1; j < minor_grid.size(); ++j) {
                double x = minor_grid[i], y = minor_grid[j];
                double dk = scaled(x, x) * scaled(y, y) - scaled(x, y) * scaled(y, x);
                double da = airy_kernel(x, x) * airy_kernel(y, y) - airy_kernel(x, y) * airy_kernel(y, x);
                r.minor_deviation = std::max(r.minor_deviation, std::fabs(dk - da));
            }
    }
    return r;
}

} // namespace detail

inline std::vector<double> default_edge_grid() { return {-2, -1, 0, 1, 2}; }

/// κ^{1/6} K̃(2√κ + ξκ^{1/6}, 2√κ + ηκ^{1/6}) against K_Airy(ξ, η) for the
/// symbol exp((1−t)a z − b/z), a = b = √(κ/(1−t)), conjugated by z₀ = (1−t)^{−1/2}.
inline EdgeGridReport bessel_to_airy_check(double kappa, double t, const std::vector<double>& grid = default_edge_grid())
{
    if (!(kappa > 0)) throw std::domain_error("bessel_to_airy_check: kappa must be positive");
    if (!(t < 1)) throw std::domain_error("bessel_to_airy_check: t must be < 1");
    double a = std::sqrt(kappa / (1 - t));
    auto build = [&]<class S>(std::type_identity<S>) { return SymbolSpec<S>::plancherel(S(a), S(a), S(t)); };
    auto r = detail::edge_grid(build, 1 / std::sqrt(1 - t), 2 * std::sqrt(kappa), std::cbrt(std::sqrt(kappa)), grid, {},
                               static_cast<int>(0.87 * std::sqrt(kappa) + 30));
    r.family = "bessel";
    r.param = kappa;
    r.t = t;
    return r;
}

/// c₂n^{1/3} K̃(c₁n + c₂n^{1/3}ξ, c₁n + c₂n^{1/3}η) against K_Airy for m = round(τn)
/// copies of α in x and n in y, conjugated by z₀; 2×2 minors on `minor_grid`.
inline EdgeGridReport rect_edge_check(int n, double alpha, double tau, double t, const std::vector<double>& grid = default_edge_grid(),
                                      const std::vector<double>& minor_grid = {-1, 0, 1})
{
    if (n < 1) throw std::domain_error("rect_edge_check: n must be positive");
    auto sd = saddle_constants(alpha, tau, t);
    const int m = static_cast<int>(std::lround(tau * n));
    auto build = [&]<class S>(std::type_identity<S>) {
        SymbolSpec<S> s;
        s.plus.factors.push_back({S(alpha), S(-m)});
        s.plus.factors.push_back({S(t) * S(alpha), S(m)});
        s.minus.factors.push_back({S(alpha), S(n)});
        return s;
    };
    auto r = detail::edge_grid(build, sd.z0, sd.c1 * n, sd.c2 * std::cbrt(static_cast<double>(n)), grid, minor_grid, 40);
    r.family = "rect";
    r.param = n;
    r.alpha = alpha;
    r.tau = tau;
    r.t = t;
    return r;
}

struct TzLimitRow {
    double z = 0, zp = 0, xi = 0;
    double deviation = 0;   // max over the circle
    double norm_ratio = 0;  // Z / e^{(1−t)κ}
};

/// |𝒥_{z,z',ξ}(u) − exp((1−t)√κ u − √κ/u)| on |u| = r for ξ = κ/(zz').
inline std::vector<TzLimitRow> tz_limit_check(double kappa, double t, const std::vector<double>& zs, double r = 1, int npts = 64)
{
    std::vector<TzLimitRow> out;
    const long double sk = std::sqrt(static_cast<long double>(kappa));
    for (double z : zs) {
        TzLimitRow row;
        row.z = row.zp = z;
        row.xi = kappa / (z * z);
        const long double sx = std::sqrt(static_cast<long double>(row.xi));
        if (!(sx < r && r * sx < 1 && r * std::fabs(t) * sx < 1)) throw std::domain_error("tz_limit_check: circle outside annulus");
        for (int k = 0; k < npts; ++k) {
            std::complex<long double> u = std::polar(static_cast<long double>(r), 2 * detail::pi_ld * k / npts);
            std::complex<long double> J =
                std::exp(static_cast<long double>(z) * std::log((1.0L - static_cast<long double>(t) * sx * u) / (1.0L - sx * u)) +
                         static_cast<long double>(z) * std::log(1.0L - sx / u));
            std::complex<long double> lim = std::exp((1 - static_cast<long double>(t)) * sk * u - sk / u);
            row.deviation = std::max(row.deviation, static_cast<double>(std::abs(J - lim)));
        }
        long double logZ = static_cast<long double>(z) * z * (std::log1p(-static_cast<long double>(t) * row.xi) - std::log1p(-static_cast<long double>(row.xi)));
        row.norm_ratio = static_cast<double>(std::exp(logZ - (1 - t) * kappa));
        out.push_back(row);
    }
    return out;
}

} // namespace tschur
