#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "partition.hpp"
#include "random.hpp"
#include "rsk.hpp"
#include "stats.hpp"
#include "symfunc.hpp"

namespace tschur {

/// x, y finite variable lists in [0,1) and t <= 0.
struct TSchurParams {
    std::vector<Rational> x, y;
    Rational t = 0;

    void validate() const
    {
        if (t > 0) throw std::domain_error("t-Schur measure requires t <= 0");
        for (const auto& v : x)
            if (v < 0 || v >= 1) throw std::domain_error("x variables must lie in [0,1)");
        for (const auto& v : y)
            if (v < 0 || v >= 1) throw std::domain_error("y variables must lie in [0,1)");
    }
};

/// Z_t = prod (1 − t x_i y_j) / (1 − x_i y_j).
inline Rational partition_function(const TSchurParams& p)
{
    Rational z = 1;
    for (const auto& a : p.x)
        for (const auto& b : p.y) z *= (1 - p.t * a * b) / (1 - a * b);
    return z;
}

inline Rational prob(const TSchurParams& p, const Partition& l)
{
    p.validate();
    if (l.length() > static_cast<int>(p.y.size())) return 0;
    const int D = std::max(l.size(), 1);
    auto sx = PowerSumSpec<Rational>::finite(p.x, D);
    auto sy = PowerSumSpec<Rational>::finite(p.y, D);
    Rational w = t_schur(sx, p.t, l) * schur(sy, l);
    if (w < 0) throw std::domain_error("negative weight encountered");
    return w / partition_function(p);
}

struct ShapeProb {
    Partition shape;
    Rational p;
};

/// prob(λ) for every |λ| <= D in enumeration order, skipping shapes longer
/// than the y list (their Schur factor vanishes).
inline std::vector<ShapeProb> prob_table(const TSchurParams& p, int D)
{
    p.validate();
    const int Dc = std::max(D, 1);
    auto hx = h_t(PowerSumSpec<Rational>::finite(p.x, Dc), p.t, Dc);
    auto hy = h_t(PowerSumSpec<Rational>::finite(p.y, Dc), Rational(0), Dc);
    Rational Z = partition_function(p);
    std::vector<ShapeProb> out;
    for (const auto& l : enumerate(D, EnumerateMode::up_to_weight, static_cast<int>(p.y.size()))) {
        Rational w = detail::jacobi_trudi(l.parts(), hx) * detail::jacobi_trudi(l.parts(), hy);
        if (w < 0) throw std::domain_error("negative weight encountered");
        out.push_back({l, w / Z});
    }
    return out;
}

namespace detail {
// Upper bound on P(|λ| > D) by a Chernoff bound: E[r^{|λ|}] / r^{D+1}, where
// the moment generating function comes from scaling x by r.  `log_mgf(r)` must
// return log E[r^{|λ|}] or +inf outside the domain.
template <class F>
Bound chernoff_tail(F&& log_mgf, Bound rmax, int D)
{
    Bound best = 0;  // log of 1
    for (int k = 1; k < 400; ++k) {
        Bound r = 1 + (rmax - 1) * k / 400;
        Bound v = log_mgf(r) - (D + 1) * std::log(r);
        if (v < best) best = v;
    }
    return std::exp(best);
}
} // namespace detail

/// Bound on the mass of {|λ| > D}.
inline Bound mass_tail_bound(const TSchurParams& p, int D)
{
    Bound qmax = 0;
    for (const auto& a : p.x)
        for (const auto& b : p.y) qmax = std::max(qmax, static_cast<Bound>(Rational(a * b).get_d()));
    if (qmax == 0) return 0;
    auto log_mgf = [&](Bound r) -> Bound {
        Bound s = 0;
        Bound t = p.t.get_d();
        for (const auto& a : p.x)
            for (const auto& b : p.y) {
                Bound q = Rational(a * b).get_d();
                if (r * q >= 1) return std::numeric_limits<Bound>::infinity();
                s += std::log1p(-t * r * q) - std::log1p(-r * q) - std::log1p(-t * q) + std::log1p(-q);
            }
        return s;
    };
    return detail::chernoff_tail(log_mgf, 1 / qmax, D);
}

struct TPlancherelParams {
    double a = 1, b = 1, t = 0;
    double kappa() const { return (1 - t) * a * b; }
};

inline double plancherel_log_prob(const TPlancherelParams& p, const Partition& l)
{
    double k = p.kappa();
    if (!(k > 0)) throw std::domain_error("t-Plancherel requires kappa > 0");
    long e;
    double m = mpz_get_d_2exp(&e, syt_count(l).get_mpz_t());
    double logf = std::log(m) + e * std::log(2.0);
    int N = l.size();
    return -k + N * std::log(k) - 2 * std::lgamma(N + 1.0) + 2 * logf;
}

/// e^{−κ} κ^{|λ|} (f^λ)² / (|λ|!)².
inline double plancherel_prob(const TPlancherelParams& p, const Partition& l) { return std::exp(plancherel_log_prob(p, l)); }

struct TZParams {
    double z = 1, zp = 1, xi = 0.5, t = 0;
};

struct SignedValue {
    double value = 0;
    bool negative = false;
};

/// ξ^{|λ|} S_λ(1^z;t) s_λ(1^{z'}) ((1−ξ)/(1−tξ))^{zz'}; negativity is flagged, not rejected.
inline SignedValue tz_prob(const TZParams& p, const Partition& l)
{
    if (!(p.xi >= 0 && p.xi < 1)) throw std::domain_error("t-z measure requires xi in [0,1)");
    const int D = std::max(l.size(), 1);
    // doubles are exact binary rationals; the Schur factors are evaluated exactly
    Rational w = t_schur(PowerSumSpec<Rational>::principal(Rational(p.z), D), Rational(p.t), l) *
                 schur(PowerSumSpec<Rational>::principal(Rational(p.zp), D), l);
    double v = std::pow(p.xi, l.size()) * w.get_d() * std::pow((1 - p.xi) / (1 - p.t * p.xi), p.z * p.zp);
    return {v, w < 0};
}

/// Chernoff bound on P(|λ| > D) for the t-z measure with nonnegative weights.
inline Bound tz_mass_tail_bound(const TZParams& p, int D)
{
    if (p.xi == 0) return 0;
    auto log_mgf = [&](Bound r) -> Bound {
        Bound x = r * p.xi;
        if (x >= 1) return std::numeric_limits<Bound>::infinity();
        Bound zz = static_cast<Bound>(p.z) * p.zp;
        return zz * (std::log1p(-p.t * x) - std::log1p(-x) - std::log1p(-p.t * p.xi) + std::log1p(-p.xi));
    };
    return detail::chernoff_tail(log_mgf, 1 / static_cast<Bound>(p.xi), D);
}

/// Sitewise law: P(0) = (1−q)/(1−tq), nonzero magnitude geometric from 1 with
/// ratio q, marked with probability −t/(1−t); q = x_i y_j.
inline AMatrix sample_matrix_model(const std::vector<double>& x, const std::vector<double>& y, double t, Rng& g)
{
    if (t > 0) throw std::domain_error("matrix model requires t <= 0");
    AMatrix A(static_cast<int>(x.size()), static_cast<int>(y.size()));
    const double pmark = -t / (1 - t);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) {
            double q = x[i] * y[j];
            if (q < 0 || q >= 1) throw std::domain_error("matrix model requires 0 <= x_i y_j < 1");
            double p0 = (1 - q) / (1 - t * q);
            if (uniform01(g) <= p0) continue;
            auto& e = A.a[i][j];
            e.v = geometric_from_one(g, q);
            e.p = uniform01(g) <= pmark;
        }
    return A;
}

inline std::vector<double> to_doubles(const std::vector<Rational>& v)
{
    std::vector<double> r;
    for (const auto& a : v) r.push_back(a.get_d());
    return r;
}

struct ShapeCountRow {
    Partition shape;
    long count = 0;
    double expected_p = 0;
    double z = 0;
};

struct PushforwardReport {
    long trials = 0;
    long marked_entries = 0;
    std::vector<ShapeCountRow> rows;
    double max_abs_z = 0;
    ChiSquareResult chi2;
    bool pass = false;
};

/// Matrix model pushed through rsk versus prob(λ): per-shape 4σ for expected
/// counts >= 25 and a χ² test (p > 10⁻³) over |λ| <= D with the rest pooled.
inline PushforwardReport pushforward_check(const TSchurParams& p, long trials, std::uint64_t seed, int D, int threads = 1, RskConvention conv = {})
{
    auto table = prob_table(p, D);
    std::map<Partition, std::size_t> index;
    for (std::size_t k = 0; k < table.size(); ++k) index[table[k].shape] = k;
    auto x = to_doubles(p.x), y = to_doubles(p.y);
    double t = p.t.get_d();
    struct Block {
        std::vector<long> counts;
        long marks = 0;
    };
    auto blocks = run_blocks<Block>(trials, threads, [&](int b, long begin, long end) {
        Block r;
        r.counts.assign(table.size() + 1, 0);
        Rng g = make_rng(seed, b);
        for (long k = begin; k < end; ++k) {
            AMatrix A = sample_matrix_model(x, y, t, g);
            r.marks += A.mark();
            auto it = index.find(rsk(A, conv).shape());
            r.counts[it == index.end() ? table.size() : it->second]++;
        }
        return r;
    });
    std::vector<long> counts(table.size() + 1, 0);
    PushforwardReport rep;
    rep.trials = trials;
    for (const auto& b : blocks) {
        for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += b.counts[k];
        rep.marked_entries += b.marks;
    }
    std::vector<long> c(counts.begin(), counts.end() - 1);
    std::vector<double> probs;
    bool ok = true;
    for (std::size_t k = 0; k < table.size(); ++k) {
        double pe = table[k].p.get_d();
        probs.push_back(pe);
        ShapeCountRow row{table[k].shape, counts[k], pe, binomial_z(counts[k], trials, pe)};
        if (pe * trials >= 25) {
            rep.max_abs_z = std::max(rep.max_abs_z, std::fabs(row.z));
            ok = ok && std::fabs(row.z) <= 4;
        }
        rep.rows.push_back(row);
    }
    rep.chi2 = chi_square_gof(c, probs, trials);
    rep.pass = ok && rep.chi2.p_value > 1e-3;
    return rep;
}

} // namespace tschur
