#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "measure.hpp"
#include "partition.hpp"
#include "series.hpp"

namespace tschur {

namespace detail {
template <class S>
S log_product_value(const ProductSpec<S>& p, const S& z)
{
    using std::log;
    S v = log(p.scale) + p.gamma * z;
    for (const auto& f : p.factors) v += f.exponent * log(S(1) - f.beta * z);
    return v;
}
} // namespace detail

/// 𝒥(z) = A(z) B(1/z) with both halves in product form.
template <class S>
struct SymbolSpec {
    ProductSpec<S> plus;   // A(z)
    ProductSpec<S> minus;  // B(w), w = 1/z

    /// ∏ (1 − t x_i z)/(1 − x_i z) · ∏ (1 − y_j/z).
    static SymbolSpec finite(const std::vector<S>& x, const std::vector<S>& y, const S& t)
    {
        SymbolSpec s;
        for (const auto& a : x) {
            s.plus.factors.push_back({a, S(-1)});
            s.plus.factors.push_back({t * a, S(1)});
        }
        for (const auto& b : y) s.minus.factors.push_back({b, S(1)});
        return s;
    }
    static SymbolSpec finite(const TSchurParams& p)
    {
        std::vector<S> x, y;
        for (const auto& v : p.x) x.push_back(from_rational<S>(v));
        for (const auto& v : p.y) y.push_back(from_rational<S>(v));
        return finite(x, y, from_rational<S>(p.t));
    }
    /// exp((1−t) a z − b/z).
    static SymbolSpec plancherel(const S& a, const S& b, const S& t)
    {
        SymbolSpec s;
        s.plus.gamma = (S(1) - t) * a;
        s.minus.gamma = -b;
        return s;
    }

    /// Inner and outer radius of the annulus where both 𝒥 and 1/𝒥 converge.
    double inner_radius() const
    {
        double r = std::min(minus.radius(), minus.reciprocal().radius());
        return 1 / r;
    }
    double outer_radius() const { return std::min(plus.radius(), plus.reciprocal().radius()); }

    /// Symbol of 𝒥(Rz)/𝒥(R): coefficients scale by R^n, the kernel by R^{a−b}.
    SymbolSpec dilated(const S& R) const
    {
        SymbolSpec s = *this;
        s.plus.gamma = plus.gamma * R;
        for (auto& f : s.plus.factors) f.beta = f.beta * R;
        s.minus.gamma = minus.gamma / R;
        for (auto& f : s.minus.factors) f.beta = f.beta / R;
        using std::exp;
        s.plus.scale = plus.scale * exp(-detail::log_product_value(plus, R));
        s.minus.scale = minus.scale * exp(-detail::log_product_value(minus, S(1) / R));
        return s;
    }
};

/// Laurent windows of 𝒥 and 1/𝒥.
template <class S>
struct Symbol {
    LaurentWindow<S> J, Jhat;
};

/// Windows with 𝒥 covering [jlo, jhi] and 1/𝒥 covering [hlo, hhi], each factor
/// expanded `margin` coefficients past the range it feeds.
template <class S>
Symbol<S> symbol(const SymbolSpec<S>& s, int jlo, int jhi, int hlo, int hhi, int margin)
{
    if (!(s.inner_radius() < s.outer_radius())) throw std::domain_error("symbol: empty annulus");
    // polynomial factors are expanded in full: a Cauchy tail for a short window
    // of a high-degree polynomial can be too weak to meet the other side
    auto length = [&](const ProductSpec<S>& p, int want) {
        auto n = p.normalized();
        if (n.is_polynomial() && n.polynomial_degree() > want && n.polynomial_degree() <= 8192) return n.polynomial_degree();
        return want;
    };
    // tails are taken on circles straddling the geometric mean of the annulus,
    // so the two sides always overlap
    const double rin = s.inner_radius(), rout = s.outer_radius();
    double rp = 0, rm = 0;
    if (rin > 0 && std::isfinite(rout)) {
        rp = std::pow(rout, 0.75) * std::pow(rin, 0.25);
        rm = 1 / (std::pow(rin, 0.75) * std::pow(rout, 0.25));
    }
    auto build = [&](const ProductSpec<S>& p, const ProductSpec<S>& m, int lo, int hi) {
        auto a = product_series(p, length(p, std::max(hi, 0) + margin), rp);
        auto b = reflect(product_series(m, length(m, std::max(-lo, 0) + margin), rm));
        return laurent_mul(a, b);
    };
    return {build(s.plus, s.minus, jlo, jhi), build(s.plus.reciprocal(), s.minus.reciprocal(), hlo, hhi)};
}

/// Coefficients of both windows for |n| <= M.
template <class S>
Symbol<S> symbol(const SymbolSpec<S>& s, int M, int margin = 32)
{
    return symbol(s, -M, M, -M, M, margin);
}

template <class S>
struct Certified {
    S value;
    Bound err = 0;
};

/// K(a, b) = Σ_{r>=0} 𝒥_{a+r+1} 𝒥̂_{−b−r−1}, with a bound covering window
/// errors, the geometric tail past both windows, and rounding.
template <class S>
Certified<S> kernel_entry(const Symbol<S>& sym, int a, int b)
{
    const auto& J = sym.J;
    const auto& H = sym.Jhat;
    const Bound eps = scalar_traits<S>::epsilon();
    S sum(0);
    Bound err = 0, absum = 0;
    int r = 0;
    for (; a + r + 1 <= J.hi || -b - r - 1 >= H.lo; ++r) {
        int n = a + r + 1, m = -b - r - 1;
        S u = J.coeff(n), v = H.coeff(m);
        Bound mu = magnitude(u), mv = magnitude(v), eu = J.error(n), ev = H.error(m);
        sum += u * v;
        absum += mu * mv;
        err += mu * ev + eu * mv + eu * ev;
    }
    int n = a + r + 1, m = -b - r - 1;
    err += detail::geometric_pair(J.above, std::max(n - J.hi, 1), H.below, std::max(H.lo - m, 1));
    if (eps > 0) err += 2 * eps * (r + 2) * absum;
    return {sum, err};
}

struct KernelOptions {
    Bound tol = 1e-10;
    int margin = 32;
    int max_doublings = 6;
};

/// Kernel values R^{a−b} K(a, b) on a list of points (integer form), R the
/// conjugation radius; principal minors do not depend on R.
template <class S>
struct KernelMatrix {
    std::vector<int> points;
    int margin = 0;
    S conj = S(1);
    Matrix<S> K;
    Matrix<Bound> err;

    Bound max_error() const
    {
        Bound m = 0;
        for (const auto& r : err)
            for (Bound e : r) m = std::max(m, e);
        return m;
    }
};

/// Contiguous window [lo, hi].
template <class S>
struct KernelWindow : KernelMatrix<S> {
    int lo = 0, hi = -1;

    const S& at(int a, int b) const { return this->K.at(a - lo).at(b - lo); }
    Bound error(int a, int b) const { return this->err.at(a - lo).at(b - lo); }
};

/// Raised when doubling the expansion margin no longer shrinks the error
/// bound, i.e. the scalar type lacks the precision for the requested tolerance.
class PrecisionLimited : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fills the matrix, doubling the expansion margin until every entry is
/// certified to `opt.tol`; throws if that never happens.
template <class S>
KernelMatrix<S> kernel_matrix(const SymbolSpec<S>& spec, const std::vector<int>& pts, KernelOptions opt = {}, const S& conj = S(1))
{
    if (pts.empty()) return {};
    auto [lo_it, hi_it] = std::minmax_element(pts.begin(), pts.end());
    const int lo = *lo_it, hi = *hi_it, n = static_cast<int>(pts.size());
    SymbolSpec<S> s = conj == S(1) ? spec : spec.dilated(conj);
    int margin = opt.margin;
    Bound prev = std::numeric_limits<Bound>::infinity();
    for (int attempt = 0;; ++attempt) {
        // 𝒥 on [lo+1, hi+1+margin], 𝒥̂ on [−hi−1−margin, −lo−1]
        auto sym = symbol(s, lo + 1, hi + 1 + margin, -hi - 1 - margin, -lo - 1, margin);
        KernelMatrix<S> w;
        w.points = pts;
        w.margin = margin;
        w.conj = conj;
        w.K.assign(n, std::vector<S>(n, S(0)));
        w.err.assign(n, std::vector<Bound>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto e = kernel_entry(sym, pts[i], pts[j]);
                w.K[i][j] = e.value;
                w.err[i][j] = e.err;
            }
        Bound m = w.max_error();
        if (m < opt.tol) return w;
        if (attempt > 0 && m > prev / 2) throw PrecisionLimited("kernel: precision insufficient for requested tolerance");
        if (attempt >= opt.max_doublings) throw std::runtime_error("kernel: window insufficient for requested tolerance");
        prev = m;
        margin *= 2;
    }
}

template <class S>
KernelWindow<S> kernel_window(const SymbolSpec<S>& spec, int lo, int hi, KernelOptions opt = {}, const S& conj = S(1))
{
    if (hi < lo) throw std::invalid_argument("kernel_window: empty index range");
    std::vector<int> pts;
    for (int a = lo; a <= hi; ++a) pts.push_back(a);
    KernelWindow<S> w;
    static_cast<KernelMatrix<S>&>(w) = kernel_matrix(spec, pts, opt, conj);
    w.lo = lo;
    w.hi = hi;
    return w;
}

namespace detail {
// |det(M + E) − det(M)| <= ∏(‖m_i‖ + ‖e_i‖) − ∏‖m_i‖ (Hadamard on each
// multilinear term), plus a rounding allowance for elimination.
template <class S>
Certified<S> det_certified(const Matrix<S>& m, const Matrix<Bound>& e)
{
    const int n = static_cast<int>(m.size());
    if (n == 0) return {S(1), 0};
    Bound pm = 1, pme = 1;
    for (int i = 0; i < n; ++i) {
        Bound rm = 0, re = 0;
        for (int j = 0; j < n; ++j) {
            Bound a = magnitude(m[i][j]);
            rm += a * a;
            re += e[i][j] * e[i][j];
        }
        rm = std::sqrt(rm);
        re = std::sqrt(re);
        pm *= rm;
        pme *= rm + re;
    }
    Bound eps = scalar_traits<S>::epsilon();
    return {det_field(m), pme - pm + 8 * eps * n * n * n * pm};
}
} // namespace detail

/// det[K(x_i, x_j)] over X; empty X gives 1.
template <class S>
Certified<S> correlation(const SymbolSpec<S>& spec, const std::vector<int>& X, KernelOptions opt = {})
{
    if (X.empty()) return {S(1), 0};
    auto w = kernel_matrix(spec, X, opt);
    return detail::det_certified(w.K, w.err);
}

struct BruteForceCorrelation {
    Rational exact;
    double value = 0;
    double tail = 0;  // 1 − Σ_{|λ|<=D} prob(λ)
};

/// Σ prob(λ) over |λ| <= D with X ⊂ S(λ).
inline BruteForceCorrelation correlation_bruteforce(const TSchurParams& p, const std::vector<int>& X, int D)
{
    BruteForceCorrelation r;
    Rational total = 0;
    for (const auto& sp : prob_table(p, D)) {
        total += sp.p;
        if (contains_points(sp.shape, X)) r.exact += sp.p;
    }
    r.value = r.exact.get_d();
    r.tail = Rational(1 - total).get_d();
    return r;
}

/// det(I − K) on {h, …, h+L}: P(no point at or above h) = P(λ₁ <= h) up to
/// the mass beyond h+L.
template <class S>
Certified<S> gap_probability(const SymbolSpec<S>& spec, int h, int L, KernelOptions opt = {})
{
    if (L < 0) throw std::invalid_argument("gap_probability: negative truncation");
    auto w = kernel_window(spec, h, h + L, opt);
    const int n = L + 1;
    Matrix<S> m(n, std::vector<S>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = (i == j ? S(1) : S(0)) - w.K[i][j];
    return detail::det_certified(m, w.err);
}

template <class S>
struct GapResult {
    S value;
    Bound err = 0;
    int L = 0;
    double change = 0;  // |gap(L) − gap(L/2)|
};

/// Doubles L from 8 until the change under doubling and the last diagonal
/// entry both fall below tol.
template <class S>
GapResult<S> gap_probability_auto(const SymbolSpec<S>& spec, int h, Bound tol, KernelOptions opt = {})
{
    auto prev = gap_probability(spec, h, 8, opt);
    for (int L = 16; L <= 4096; L *= 2) {
        auto cur = gap_probability(spec, h, L, opt);
        double change = std::fabs(to_double(S(cur.value - prev.value)));
        auto d = kernel_window(spec, h + L, h + L, opt);
        if (change < tol && magnitude(d.K[0][0]) < tol) return {cur.value, cur.err, L, change};
        prev = cur;
    }
    throw std::runtime_error("gap_probability: insufficient truncation");
}

struct DerivativeReport {
    double h = 0;
    double residual = 0;       // at step h
    double residual_half = 0;  // at step h/2
    double slope = 0;          // log2 of the ratio
};

namespace detail {
template <class S>
std::complex<double> eval_side(const LaurentWindow<S>& w, std::complex<double> z)
{
    return w.evaluate(z).first;
}
} // namespace detail

/// Central difference of √(zw)/(z−w)·𝒥(z)/𝒥(w) in the p₁(x) direction on the
/// circles |z| = r1 > |w| = r2 (n points each) against (1−t)√(zw)𝒥(z)/𝒥(w).
inline DerivativeReport dp1_derivative_check(const SymbolSpec<double>& spec, double t, double r1, double r2, int npts, double h,
                                             int L = 200)
{
    if (!(r2 < r1)) throw std::invalid_argument("dp1_derivative_check: need r2 < r1");
    if (!(spec.inner_radius() < r2 && r1 < spec.outer_radius())) throw std::domain_error("dp1_derivative_check: circles outside annulus");
    const double pi = std::acos(-1.0);
    auto eval = [&](double shift) {
        SymbolSpec<double> s = spec;
        s.plus.gamma += (1 - t) * shift;
        auto A = product_series(s.plus, L), B = product_series(s.minus, L);
        auto Ah = product_series(s.plus.reciprocal(), L), Bh = product_series(s.minus.reciprocal(), L);
        return [A, B, Ah, Bh](std::complex<double> z, std::complex<double> w) {
            return detail::eval_side(A, z) * detail::eval_side(B, 1.0 / z) * detail::eval_side(Ah, w) * detail::eval_side(Bh, 1.0 / w);
        };
    };
    auto base = eval(0);
    auto residual = [&](double step) {
        auto fp = eval(step), fm = eval(-step);
        double worst = 0;
        for (int i = 0; i < npts; ++i)
            for (int j = 0; j < npts; ++j) {
                double th = 2 * pi * (i + 0.5) / npts, ph = 2 * pi * (j + 0.25) / npts;
                std::complex<double> z = std::polar(r1, th), w = std::polar(r2, ph);
                std::complex<double> sq = std::polar(std::sqrt(r1 * r2), (th + ph) / 2);
                std::complex<double> pref = sq / (z - w);
                std::complex<double> fd = pref * (fp(z, w) - fm(z, w)) / (2 * step);
                std::complex<double> target = (1 - t) * sq * base(z, w);
                worst = std::max(worst, std::abs(fd - target));
            }
        return worst;
    };
    DerivativeReport r;
    r.h = h;
    r.residual = residual(h);
    r.residual_half = residual(h / 2);
    r.slope = std::log2(r.residual / r.residual_half);
    return r;
}

struct IiksReport {
    int rank = 0;
    double max_residual = 0;
    double max_bound = 0;
    bool within_bounds = false;
};

namespace detail {
// c·Σ_{k>=0} q^k z^{s(k + shift)} windowed over L terms: `sign` = +1 expands in
// positive powers from z^{shift}, −1 in negative powers from z^{−shift}.
template <class S>
LaurentWindow<S> geometric_window(const S& c, const S& q, int shift, int sign, int L)
{
    std::vector<S> v(L + 1);
    S pw = c;
    for (int k = 0; k <= L; ++k) {
        v[k] = pw;
        pw = pw * q;
    }
    Bound mq = magnitude(q);
    Tail tail{magnitude(c) * std::pow(mq, static_cast<Bound>(L)), mq};
    if (mq == 0) tail = {};
    if (sign > 0) return LaurentWindow<S>(shift, std::move(v), {}, tail, Tail{});
    std::reverse(v.begin(), v.end());
    return LaurentWindow<S>(-shift - L, std::move(v), {}, Tail{}, tail);
}
} // namespace detail

/// (a−b) K(a,b) against Σ_ν f_ν(a) g_ν(b), where f_ν(a) = [z^a] 𝒥(z)φ_ν(z) and
/// g_ν(b) = [w^{−b−1}] 𝒥(w)^{−1}ψ_ν(w) for the rank-(2M+N) pairs
///   φ = x/(1−xz),  ψ = 1/(1−xw);   φ = −tx/(1−txz),  ψ = 1/(1−txw);
///   φ = −1/(z−y),  ψ = y/(w−y).
inline IiksReport iiks_decomposition_check(const std::vector<double>& x, const std::vector<double>& y, double t, int lo, int hi,
                                           int L = 160)
{
    auto spec = SymbolSpec<double>::finite(x, y, t);
    auto sym = symbol(spec, lo - L, hi + 1 + L, -hi - 1 - L, -lo - 1 + L, L);
    auto kw = kernel_window(spec, lo, hi);
    std::vector<LaurentWindow<double>> F, G;
    for (double a : x) {
        F.push_back(laurent_mul(sym.J, detail::geometric_window(a, a, 0, +1, L)));
        G.push_back(laurent_mul(sym.Jhat, detail::geometric_window(1.0, a, 0, +1, L)));
    }
    for (double a : x) {
        F.push_back(laurent_mul(sym.J, detail::geometric_window(-t * a, t * a, 0, +1, L)));
        G.push_back(laurent_mul(sym.Jhat, detail::geometric_window(1.0, t * a, 0, +1, L)));
    }
    for (double b : y) {
        F.push_back(laurent_mul(sym.J, detail::geometric_window(-1.0, b, 1, -1, L)));
        G.push_back(laurent_mul(sym.Jhat, detail::geometric_window(b, b, 1, -1, L)));
    }
    IiksReport r;
    r.rank = static_cast<int>(F.size());
    r.within_bounds = true;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= hi; ++b) {
            double rhs = 0;
            Bound bound = std::abs(a - b) * kw.error(a, b), mag = std::abs(a - b) * std::fabs(kw.at(a, b));
            for (std::size_t v = 0; v < F.size(); ++v) {
                double f = F[v].coeff(a), g = G[v].coeff(-b - 1);
                Bound ef = F[v].error(a), eg = G[v].error(-b - 1);
                rhs += f * g;
                bound += std::fabs(f) * eg + ef * std::fabs(g) + ef * eg;
                mag += std::fabs(f * g);
            }
            bound += 4 * eps * (r.rank + 2) * mag;
            double res = std::fabs((a - b) * kw.at(a, b) - rhs);
            r.max_residual = std::max(r.max_residual, res);
            r.max_bound = std::max(r.max_bound, static_cast<double>(bound));
            if (res > bound) r.within_bounds = false;
        }
    return r;
}

} // namespace tschur
