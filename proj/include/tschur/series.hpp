#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace tschur {

/// Power series c_0 + c_1 z + ... + c_D z^D modulo z^{D+1}.
template <class S>
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1, S(0)) {}
    explicit TruncatedSeries(int cap) : c_(static_cast<std::size_t>(check_cap(cap)) + 1, S(0)) {}
    explicit TruncatedSeries(std::vector<S> coeffs) : c_(std::move(coeffs))
    {
        if (c_.empty()) c_.push_back(S(0));
    }

    static TruncatedSeries constant(int cap, const S& v)
    {
        TruncatedSeries r(cap);
        r.c_[0] = v;
        return r;
    }
    static TruncatedSeries one(int cap) { return constant(cap, S(1)); }
    static TruncatedSeries monomial(int cap, int k, const S& v)
    {
        TruncatedSeries r(cap);
        if (k >= 0 && k <= cap) r.c_[k] = v;
        return r;
    }

    int cap() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<S>& coeffs() const { return c_; }
    S& operator[](int k) { return c_.at(k); }
    const S& operator[](int k) const { return c_.at(k); }
    /// Coefficient with zero outside 0..cap.
    S coeff(int k) const { return (k >= 0 && k <= cap()) ? c_[k] : S(0); }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        same_cap(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o)
    {
        same_cap(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    TruncatedSeries& operator*=(const S& v)
    {
        for (auto& x : c_) x *= v;
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(TruncatedSeries a)
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const S& v) { return a *= v; }
    friend TruncatedSeries operator*(const S& v, TruncatedSeries a) { return a *= v; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = mul(*this, o); }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    friend TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        a.same_cap(b);
        int D = a.cap();
        TruncatedSeries r(D);
        for (int i = 0; i <= D; ++i) {
            if (scalar_is_zero(a.c_[i])) continue;
            for (int j = 0; i + j <= D; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }

    /// Same series with cap lowered or raised (new coefficients zero).
    TruncatedSeries with_cap(int cap) const
    {
        TruncatedSeries r(cap);
        for (int k = 0; k <= std::min(cap, this->cap()); ++k) r.c_[k] = c_[k];
        return r;
    }

private:
    static int check_cap(int cap)
    {
        if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
        return cap;
    }
    static bool scalar_is_zero(const S& v) { return v == S(0); }
    void same_cap(const TruncatedSeries& o) const
    {
        if (o.cap() != cap()) throw std::invalid_argument("series cap mismatch");
    }
    std::vector<S> c_;
};

template <class S>
TruncatedSeries<S> inverse(const TruncatedSeries<S>& a)
{
    if (a[0] == S(0)) throw std::domain_error("inverse: zero constant term");
    int D = a.cap();
    TruncatedSeries<S> r(D);
    S inv0 = S(1) / a[0];
    r[0] = inv0;
    for (int n = 1; n <= D; ++n) {
        S s(0);
        for (int k = 1; k <= n; ++k) s += a[k] * r[n - k];
        r[n] = -s * inv0;
    }
    return r;
}

/// exp(L) via n g_n = sum_k k L_k g_{n-k}.
template <class S>
TruncatedSeries<S> exp_series(const TruncatedSeries<S>& L)
{
    if (L[0] != S(0)) throw std::domain_error("exp_series: nonzero constant term");
    int D = L.cap();
    TruncatedSeries<S> g(D);
    g[0] = S(1);
    for (int n = 1; n <= D; ++n) {
        S s(0);
        for (int k = 1; k <= n; ++k)
            if (L[k] != S(0)) s += S(k) * L[k] * g[n - k];
        g[n] = s / S(n);
    }
    return g;
}

/// log(f) for f_0 = 1, from f' = f (log f)'.
template <class S>
TruncatedSeries<S> log_series(const TruncatedSeries<S>& f)
{
    if (f[0] != S(1)) throw std::domain_error("log_series: constant term must be 1");
    int D = f.cap();
    TruncatedSeries<S> L(D);
    // n f_n = sum_{k=1}^n k L_k f_{n-k}
    for (int n = 1; n <= D; ++n) {
        S s = S(n) * f[n];
        for (int k = 1; k < n; ++k) s -= S(k) * L[k] * f[n - k];
        L[n] = s / S(n);
    }
    return L;
}

/// f(c z).
template <class S>
TruncatedSeries<S> scale_argument(const TruncatedSeries<S>& f, const S& c)
{
    TruncatedSeries<S> r = f;
    S p(1);
    for (int k = 0; k <= f.cap(); ++k) {
        r[k] = f[k] * p;
        p *= c;
    }
    return r;
}

/// Geometric envelope past a window edge: |c| <= scale * ratio^dist, dist >= 1.
struct Tail {
    Bound scale = 0;
    Bound ratio = 0;

    Bound at(int dist) const
    {
        if (scale == 0) return 0;
        if (!std::isfinite(scale)) return std::numeric_limits<Bound>::infinity();
        return scale * std::pow(ratio, static_cast<Bound>(dist));
    }
    static Tail unknown() { return {std::numeric_limits<Bound>::infinity(), 1}; }
};

/// Coefficients c_lo..c_hi of a Laurent series with per-coefficient error bounds
/// and geometric envelopes for the discarded coefficients on each side.
template <class S>
class LaurentWindow {
public:
    int lo = 0, hi = 0;
    std::vector<S> c{S(0)};
    std::vector<Bound> err{0};
    Tail above, below;

    LaurentWindow() = default;
    LaurentWindow(int lo_, std::vector<S> coeffs, std::vector<Bound> errors = {}, Tail above_ = {}, Tail below_ = {})
        : lo(lo_), c(std::move(coeffs)), err(std::move(errors)), above(above_), below(below_)
    {
        if (c.empty()) throw std::invalid_argument("LaurentWindow: empty coefficient list");
        hi = lo + static_cast<int>(c.size()) - 1;
        if (err.empty()) err.assign(c.size(), 0);
        if (err.size() != c.size()) throw std::invalid_argument("LaurentWindow: error list size mismatch");
    }

    static LaurentWindow delta() { return LaurentWindow(0, {S(1)}); }

    bool in_window(int n) const { return n >= lo && n <= hi; }
    S coeff(int n) const { return in_window(n) ? c[n - lo] : S(0); }
    /// Bound on |true c_n − coeff(n)|.
    Bound error(int n) const
    {
        if (in_window(n)) return err[n - lo];
        return n > hi ? above.at(n - hi) : below.at(lo - n);
    }
    /// Bound on |true c_n|.
    Bound bound(int n) const
    {
        if (in_window(n)) return magnitude(c[n - lo]) + err[n - lo];
        return error(n);
    }
    Bound max_error() const
    {
        Bound m = 0;
        for (Bound e : err) m = std::max(m, e);
        return m;
    }

    /// Sum c_n z^n with an error bound covering stored errors and both tails.
    std::pair<std::complex<double>, Bound> evaluate(std::complex<double> z) const
    {
        std::complex<long double> zz(z.real(), z.imag()), v = 0;
        long double r = std::abs(zz);
        Bound e = 0;
        for (int n = lo; n <= hi; ++n) {
            std::complex<long double> p = std::pow(zz, n);
            v += static_cast<long double>(to_double(c[n - lo])) * p;
            e += err[n - lo] * std::pow(r, static_cast<long double>(n));
            e += magnitude(c[n - lo]) * std::pow(r, static_cast<long double>(n)) * 4 * std::numeric_limits<double>::epsilon();
        }
        auto geo = [](const Tail& t, long double q, long double base) -> Bound {
            if (t.scale == 0) return 0;
            long double x = t.ratio * q;
            if (x >= 1) return std::numeric_limits<Bound>::infinity();
            return t.scale * base * x / (1 - x);
        };
        e += geo(above, r, std::pow(r, static_cast<long double>(hi)));
        e += geo(below, 1 / r, std::pow(r, static_cast<long double>(lo)));
        return {std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag())), e};
    }
};

/// Window of f(1/z) from the window of f(z).
template <class S>
LaurentWindow<S> reflect(const LaurentWindow<S>& w)
{
    std::vector<S> c(w.c.rbegin(), w.c.rend());
    std::vector<Bound> e(w.err.rbegin(), w.err.rend());
    return LaurentWindow<S>(-w.hi, std::move(c), std::move(e), w.below, w.above);
}

namespace detail {

inline Bound geometric_pair(const Tail& a, int ea, const Tail& b, int eb)
{
    // sum_{k>=0} a.scale a.ratio^{ea+k} b.scale b.ratio^{eb+k}
    if (a.scale == 0 || b.scale == 0) return 0;
    Bound q = a.ratio * b.ratio;
    if (!(q < 1)) return std::numeric_limits<Bound>::infinity();
    return a.scale * b.scale * std::pow(a.ratio, static_cast<Bound>(ea)) * std::pow(b.ratio, static_cast<Bound>(eb)) / (1 - q);
}

inline void check_annulus(const Tail& a, const Tail& b)
{
    if (a.scale != 0 && b.scale != 0 && !(a.ratio * b.ratio < 1))
        throw std::domain_error("laurent_mul: envelopes do not overlap (empty annulus)");
}

// sup_{s>=1} (s-1) (1+delta)^{-s}
inline Bound linear_geometric_sup(Bound delta)
{
    Bound l = std::log1p(delta);
    return std::exp(Bound(-1)) / (l * (1 + delta));
}

} // namespace detail

/// Product of two Laurent windows.  The result covers [a.lo+b.lo, a.hi+b.hi]
/// (optionally clipped to `range`); each coefficient carries a bound on the
/// contributions lost to both operands' truncation, their stored errors, and
/// floating rounding.  Clipping a side leaves that side's tail unknown.
template <class S>
LaurentWindow<S> laurent_mul(const LaurentWindow<S>& a, const LaurentWindow<S>& b,
                             std::optional<std::pair<int, int>> range = std::nullopt)
{
    detail::check_annulus(a.above, b.below);
    detail::check_annulus(a.below, b.above);
    const int lc = a.lo + b.lo, hc = a.hi + b.hi;
    int olo = lc, ohi = hc;
    if (range) {
        olo = std::max(lc, range->first);
        ohi = std::min(hc, range->second);
    }
    if (olo > ohi) throw std::invalid_argument("laurent_mul: empty output range");
    const Bound eps = scalar_traits<S>::epsilon();

    std::vector<Bound> ma(a.c.size()), mb(b.c.size());
    for (std::size_t i = 0; i < ma.size(); ++i) ma[i] = magnitude(a.c[i]);
    for (std::size_t i = 0; i < mb.size(); ++i) mb[i] = magnitude(b.c[i]);

    std::vector<S> out(ohi - olo + 1, S(0));
    std::vector<Bound> oerr(out.size(), 0);
    for (int n = olo; n <= ohi; ++n) {
        S sum(0);
        Bound abs_sum = 0, e = 0;
        int i0 = std::max(a.lo, n - b.hi), i1 = std::min(a.hi, n - b.lo);
        for (int i = i0; i <= i1; ++i) {
            int ia = i - a.lo, jb = n - i - b.lo;
            sum += a.c[ia] * b.c[jb];
            abs_sum += ma[ia] * mb[jb];
            e += ma[ia] * b.err[jb] + a.err[ia] * mb[jb] + a.err[ia] * b.err[jb];
        }
        if (eps > 0) e += 2 * eps * (i1 - i0 + 2) * abs_sum;
        // a inside, b beyond its window
        if (b.above.scale != 0)
            for (int i = a.lo; i <= std::min(a.hi, n - b.hi - 1); ++i) e += (ma[i - a.lo] + a.err[i - a.lo]) * b.above.at(n - i - b.hi);
        if (b.below.scale != 0)
            for (int i = std::max(a.lo, n - b.lo + 1); i <= a.hi; ++i) e += (ma[i - a.lo] + a.err[i - a.lo]) * b.below.at(b.lo - (n - i));
        // a above its window: b index n-i <= b.hi
        if (a.above.scale != 0) {
            for (int i = a.hi + 1; i <= n - b.lo; ++i) e += a.above.at(i - a.hi) * b.bound(n - i);
            int is = std::max(a.hi + 1, n - b.lo + 1);
            e += detail::geometric_pair(a.above, is - a.hi, b.below, b.lo - (n - is));
        }
        // a below its window: b index n-i >= b.lo
        if (a.below.scale != 0) {
            for (int i = n - b.hi; i <= a.lo - 1; ++i) e += a.below.at(a.lo - i) * b.bound(n - i);
            int ie = std::min(a.lo - 1, n - b.hi - 1);
            e += detail::geometric_pair(a.below, a.lo - ie, b.above, n - ie - b.hi);
        }
        out[n - olo] = sum;
        oerr[n - olo] = e;
    }

    // Envelopes past the natural window, from sum_i |a_i||b_{n-i}|.
    auto side_sum_above_a = [&](Bound q) {
        // sum_{i <= a.hi} bound_a(i) q^{a.hi - i}
        Bound s = 0;
        for (int i = a.lo; i <= a.hi; ++i) s += (ma[i - a.lo] + a.err[i - a.lo]) * std::pow(q, static_cast<Bound>(a.hi - i));
        if (a.below.scale != 0) {
            Bound x = a.below.ratio * q;
            if (!(x < 1)) return std::numeric_limits<Bound>::infinity();
            s += a.below.scale * std::pow(q, static_cast<Bound>(a.hi - a.lo)) * x / (1 - x);
        }
        return s;
    };
    auto side_sum_above_b = [&](Bound q) {
        Bound s = 0;
        for (int j = b.lo; j <= b.hi; ++j) s += (mb[j - b.lo] + b.err[j - b.lo]) * std::pow(q, static_cast<Bound>(b.hi - j));
        if (b.below.scale != 0) {
            Bound x = b.below.ratio * q;
            if (!(x < 1)) return std::numeric_limits<Bound>::infinity();
            s += b.below.scale * std::pow(q, static_cast<Bound>(b.hi - b.lo)) * x / (1 - x);
        }
        return s;
    };
    auto side_sum_below_a = [&](Bound q) {
        Bound s = 0;
        for (int i = a.lo; i <= a.hi; ++i) s += (ma[i - a.lo] + a.err[i - a.lo]) * std::pow(q, static_cast<Bound>(i - a.lo));
        if (a.above.scale != 0) {
            Bound x = a.above.ratio * q;
            if (!(x < 1)) return std::numeric_limits<Bound>::infinity();
            s += a.above.scale * std::pow(q, static_cast<Bound>(a.hi - a.lo)) * x / (1 - x);
        }
        return s;
    };
    auto side_sum_below_b = [&](Bound q) {
        Bound s = 0;
        for (int j = b.lo; j <= b.hi; ++j) s += (mb[j - b.lo] + b.err[j - b.lo]) * std::pow(q, static_cast<Bound>(j - b.lo));
        if (b.above.scale != 0) {
            Bound x = b.above.ratio * q;
            if (!(x < 1)) return std::numeric_limits<Bound>::infinity();
            s += b.above.scale * std::pow(q, static_cast<Bound>(b.hi - b.lo)) * x / (1 - x);
        }
        return s;
    };
    const Bound delta = Bound(1) / 16;
    const Bound g = detail::linear_geometric_sup(delta);
    auto combine = [&](const Tail& ta, const Tail& tb, Bound s1, Bound s2) {
        // s1 multiplies tb (a inside or beyond on the far side), s2 multiplies ta
        Tail t;
        if (ta.scale == 0 && tb.scale == 0) return t;
        Bound qmax = std::max(ta.scale != 0 ? ta.ratio : Bound(0), tb.scale != 0 ? tb.ratio : Bound(0));
        t.ratio = qmax * (1 + delta);
        Bound sc = 0;
        if (tb.scale != 0) sc += tb.scale * s1;
        if (ta.scale != 0) sc += ta.scale * s2;
        if (ta.scale != 0 && tb.scale != 0) sc += ta.scale * tb.scale * g;
        t.scale = sc;
        if (t.ratio == 0) t.scale = 0;
        return t;
    };
    Tail above, below;
    if (ohi == hc) {
        Bound s1 = b.above.scale != 0 ? side_sum_above_a(b.above.ratio) : 0;
        Bound s2 = a.above.scale != 0 ? side_sum_above_b(a.above.ratio) : 0;
        above = combine(a.above, b.above, s1, s2);
    } else {
        above = Tail::unknown();
    }
    if (olo == lc) {
        Bound s1 = b.below.scale != 0 ? side_sum_below_a(b.below.ratio) : 0;
        Bound s2 = a.below.scale != 0 ? side_sum_below_b(a.below.ratio) : 0;
        below = combine(a.below, b.below, s1, s2);
    } else {
        below = Tail::unknown();
    }
    return LaurentWindow<S>(olo, std::move(out), std::move(oerr), above, below);
}

/// Factor (1 − beta z)^exponent.
template <class S>
struct Factor {
    S beta;
    S exponent;
};

/// scale · exp(gamma z) · prod (1 − beta_i z)^{e_i}, a one-sided series in z.
template <class S>
struct ProductSpec {
    S scale = S(1);
    S gamma = S(0);
    std::vector<Factor<S>> factors;

    /// Merges equal betas and drops trivial factors.
    ProductSpec normalized() const
    {
        ProductSpec r;
        r.scale = scale;
        r.gamma = gamma;
        for (const auto& f : factors) {
            if (f.exponent == S(0) || f.beta == S(0)) continue;
            bool merged = false;
            for (auto& g : r.factors)
                if (g.beta == f.beta) {
                    g.exponent += f.exponent;
                    merged = true;
                    break;
                }
            if (!merged) r.factors.push_back(f);
        }
        std::erase_if(r.factors, [](const Factor<S>& f) { return f.exponent == S(0); });
        return r;
    }

    ProductSpec reciprocal() const
    {
        ProductSpec r;
        r.scale = S(1) / scale;
        r.gamma = -gamma;
        for (const auto& f : factors) r.factors.push_back({f.beta, -f.exponent});
        return r;
    }

    bool is_polynomial() const
    {
        if (gamma != S(0)) return false;
        for (const auto& f : factors)
            if (!(scalar_traits<S>::is_integer(f.exponent) && f.exponent > S(0))) return false;
        return true;
    }
    int polynomial_degree() const
    {
        double d = 0;
        for (const auto& f : factors) d += to_double(f.exponent);
        return static_cast<int>(std::lround(d));
    }

    /// Radius of convergence (infinity for entire functions).
    double radius() const
    {
        double r = std::numeric_limits<double>::infinity();
        for (const auto& f : factors) {
            bool entire = scalar_traits<S>::is_integer(f.exponent) && f.exponent > S(0);
            if (!entire) r = std::min(r, 1.0 / std::fabs(to_double(f.beta)));
        }
        return r;
    }

    /// log of a bound on |f| over |z| = rho, from the product form.
    Bound log_max_modulus(Bound rho) const
    {
        Bound l = std::log(magnitude(scale)) + magnitude(gamma) * rho;
        for (const auto& f : factors) {
            Bound b = magnitude(f.beta) * rho;
            Bound e = static_cast<Bound>(to_double(f.exponent));
            if (e >= 0)
                l += e * std::log1p(b);
            else {
                if (b >= 1) return std::numeric_limits<Bound>::infinity();
                l += e * std::log1p(-b);
            }
        }
        return l;
    }
};

namespace detail {

// Radius minimizing log M(rho) − n log rho; the objective is convex in log rho.
template <class S>
Bound cauchy_radius(const ProductSpec<S>& p, int n)
{
    double rmax = p.radius();
    Bound hi_u = std::isfinite(rmax) ? std::log(static_cast<Bound>(rmax)) + std::log1p(Bound(-1e-12))
                                     : std::log(Bound(10) * (n + 1) / std::max<Bound>(magnitude(p.gamma), 1e-3) + 10);
    Bound lo_u = hi_u - 60;
    auto obj = [&](Bound u) { return p.log_max_modulus(std::exp(u)) - n * u; };
    for (int it = 0; it < 200; ++it) {
        Bound m1 = lo_u + (hi_u - lo_u) / 3, m2 = hi_u - (hi_u - lo_u) / 3;
        if (obj(m1) < obj(m2))
            hi_u = m2;
        else
            lo_u = m1;
    }
    return std::exp((lo_u + hi_u) / 2);
}

} // namespace detail

/// Window [0, L] of a product-form series with a Cauchy-estimate upper tail
/// built from the explicit factor radii.  In floating backends each coefficient
/// carries a rounding bound proportional to the absolute-value majorant.
/// The tail radius is kept at least `min_rho` (when below the convergence radius).
template <class S>
LaurentWindow<S> product_series(const ProductSpec<S>& spec_in, int L, Bound min_rho = 0)
{
    if (L < 0) throw std::invalid_argument("product_series: negative length");
    ProductSpec<S> spec = spec_in.normalized();
    std::vector<S> f(L + 1, S(0));
    std::vector<Bound> maj(L + 1, 0);
    f[0] = spec.scale;
    maj[0] = magnitude(spec.scale);
    long passes = 1;

    auto convolve = [&](const std::vector<S>& g, const std::vector<Bound>& gm) {
        std::vector<S> h(L + 1, S(0));
        std::vector<Bound> hm(L + 1, 0);
        for (int i = 0; i <= L; ++i) {
            if (maj[i] == 0 && f[i] == S(0)) continue;
            for (int j = 0; i + j <= L && j < static_cast<int>(g.size()); ++j) {
                h[i + j] += f[i] * g[j];
                hm[i + j] += maj[i] * gm[j];
            }
        }
        f.swap(h);
        maj.swap(hm);
        passes += 2;
    };

    if (spec.gamma != S(0)) {
        std::vector<S> g(L + 1);
        std::vector<Bound> gm(L + 1);
        g[0] = S(1);
        gm[0] = 1;
        for (int k = 1; k <= L; ++k) {
            g[k] = g[k - 1] * spec.gamma / S(k);
            gm[k] = magnitude(g[k]);
        }
        convolve(g, gm);
    }
    for (const auto& fac : spec.factors) {
        const S& beta = fac.beta;
        Bound mbeta = magnitude(beta);
        bool integral = scalar_traits<S>::is_integer(fac.exponent);
        if (integral && fac.exponent < S(0)) {
            int k = static_cast<int>(std::lround(-to_double(fac.exponent)));
            for (int rep = 0; rep < k; ++rep) {
                for (int n = 1; n <= L; ++n) {
                    f[n] += beta * f[n - 1];
                    maj[n] += mbeta * maj[n - 1];
                }
            }
            passes += k;
        } else if (integral) {
            int e = static_cast<int>(std::lround(to_double(fac.exponent)));
            std::vector<S> g(std::min(e, L) + 1);
            std::vector<Bound> gm(g.size());
            g[0] = S(1);
            gm[0] = 1;
            for (int k = 1; k < static_cast<int>(g.size()); ++k) {
                g[k] = g[k - 1] * S(e - k + 1) * (-beta) / S(k);
                gm[k] = magnitude(g[k]);
            }
            convolve(g, gm);
        } else {
            std::vector<S> g(L + 1);
            std::vector<Bound> gm(L + 1);
            g[0] = S(1);
            gm[0] = 1;
            for (int k = 0; k < L; ++k) {
                g[k + 1] = g[k] * (S(k) - fac.exponent) * beta / S(k + 1);
                gm[k + 1] = magnitude(g[k + 1]);
            }
            convolve(g, gm);
        }
    }

    std::vector<Bound> err(L + 1, 0);
    const Bound eps = scalar_traits<S>::epsilon();
    if (eps > 0)
        // each pass adds at most n + 2 roundings to coefficient n, relative to the majorant
        for (int n = 0; n <= L; ++n) err[n] = 2 * eps * passes * (n + 2) * maj[n];

    Tail above;
    bool finite = spec.is_polynomial() && spec.polynomial_degree() <= L;
    if (!finite) {
        Bound rho = detail::cauchy_radius(spec, L + 1);
        if (rho < min_rho && min_rho < spec.radius()) rho = min_rho;
        Bound logm = spec.log_max_modulus(rho);
        above.ratio = 1 / rho;
        above.scale = std::exp(logm - L * std::log(rho));
    }
    return LaurentWindow<S>(0, std::move(f), std::move(err), above, Tail{});
}

} // namespace tschur
