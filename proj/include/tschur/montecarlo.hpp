#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "edge.hpp"
#include "kernel.hpp"
#include "partition.hpp"
#include "random.hpp"
#include "rsk.hpp"
#include "stats.hpp"
#include "tableau.hpp"

namespace tschur {

/// Permutation π of 1..N with marks ε; marks are Bernoulli(q), q = −t/(1−t).
struct MarkedPermutation {
    std::vector<int> pi;
    std::vector<bool> eps;
    double t = 0;

    double q() const { return -t / (1 - t); }
    int size() const { return static_cast<int>(pi.size()); }

    void validate() const
    {
        if (!(t <= 0)) throw std::domain_error("marked permutation requires t <= 0");
        if (eps.size() != pi.size()) throw std::invalid_argument("marked permutation: marks and permutation differ in length");
        std::vector<bool> seen(pi.size() + 1, false);
        for (int v : pi) {
            if (v < 1 || v > size() || seen[v]) throw std::invalid_argument("marked permutation: not a permutation of 1..N");
            seen[v] = true;
        }
    }

    /// α_i = π(i), primed when ε_i = 1.
    std::vector<MarkedLetter> word() const
    {
        std::vector<MarkedLetter> w;
        for (std::size_t i = 0; i < pi.size(); ++i) w.push_back({pi[i], static_cast<bool>(eps[i])});
        return w;
    }
    int marks() const { return static_cast<int>(std::count(eps.begin(), eps.end(), true)); }
};

inline std::vector<int> random_permutation(int N, Rng& g)
{
    std::vector<int> p(N);
    std::iota(p.begin(), p.end(), 1);
    std::shuffle(p.begin(), p.end(), g);
    return p;
}

inline MarkedPermutation random_marked_permutation(int N, double t, Rng& g)
{
    MarkedPermutation mp;
    mp.t = t;
    if (!(t <= 0)) throw std::domain_error("marked permutation requires t <= 0");
    mp.pi = random_permutation(N, g);
    const double q = mp.q();
    for (int i = 0; i < N; ++i) mp.eps.push_back(uniform01(g) <= q);
    return mp;
}

inline Partition sample_plancherel_shape(int N, Rng& g)
{
    if (N < 0) throw std::domain_error("sample_plancherel_shape: N must be >= 0");
    return schensted_shape(random_permutation(N, g));
}

/// Shape of Schensted insertion of a uniform permutation of size N.
inline Partition sample_plancherel_shape(int N, std::uint64_t seed)
{
    Rng g = make_rng(seed);
    return sample_plancherel_shape(N, g);
}

/// Marked RSK of the biword with top row 1..N.
inline RskResult marked_rsk(const MarkedPermutation& mp)
{
    Biword w;
    auto a = mp.word();
    for (int i = 0; i < mp.size(); ++i) w.push_back({i + 1, a[i]});
    return rsk_word(w);
}

inline int t_ascent_length_rsk(const MarkedPermutation& mp)
{
    mp.validate();
    auto sh = marked_rsk(mp).shape();
    return sh.length() ? sh(1) : 0;
}

inline int t_ascent_length_lis(const MarkedPermutation& mp)
{
    mp.validate();
    return lis_marked(mp.word());
}

/// Longest weakly increasing subsequence of α, by RSK λ₁ and by direct DP;
/// throws if the two disagree.
inline int t_ascent_length(const MarkedPermutation& mp)
{
    int a = t_ascent_length_rsk(mp), b = t_ascent_length_lis(mp);
    if (a != b) throw std::logic_error("t_ascent_length: RSK and DP paths disagree");
    return a;
}

struct ExperimentSummary {
    std::string statistic;
    long trials = 0;
    std::uint64_t seed = 0;
    int threads = 1;
    std::map<std::string, double> params;
    std::vector<std::string> labels;
    std::vector<long> counts;
    std::vector<double> reference;  // reference probability per label
    std::vector<double> z;          // per-label binomial z-score
    double p_value = std::numeric_limits<double>::quiet_NaN();
    double ks = std::numeric_limits<double>::quiet_NaN();
    std::map<std::string, double> values;  // named summary statistics
    bool pass = false;
};

/// Shape counts of marked RSK on random marked permutations against (f^λ)²/N!:
/// χ² p > 10⁻³, and the mark fraction within 3σ of q.
inline ExperimentSummary shape_law_test(int N, double t, long trials, std::uint64_t seed, int threads = 1)
{
    if (N < 1 || N > 8) throw std::domain_error("shape_law_test: need 1 <= N <= 8");
    auto shapes = enumerate(N);
    std::map<Partition, std::size_t> index;
    for (std::size_t k = 0; k < shapes.size(); ++k) index[shapes[k]] = k;
    struct Block {
        std::vector<long> counts;
        long marks = 0;
    };
    auto blocks = run_blocks<Block>(trials, threads, [&](int b, long begin, long end) {
        Block r;
        r.counts.assign(shapes.size(), 0);
        Rng g = make_rng(seed, b);
        for (long k = begin; k < end; ++k) {
            auto mp = random_marked_permutation(N, t, g);
            r.marks += mp.marks();
            r.counts[index.at(marked_rsk(mp).shape())]++;
        }
        return r;
    });
    ExperimentSummary s;
    s.statistic = "shape";
    s.trials = trials;
    s.seed = seed;
    s.threads = resolve_threads(threads);
    s.params = {{"N", N}, {"t", t}};
    s.counts.assign(shapes.size(), 0);
    long marks = 0;
    for (const auto& b : blocks) {
        for (std::size_t k = 0; k < shapes.size(); ++k) s.counts[k] += b.counts[k];
        marks += b.marks;
    }
    double nf = std::tgamma(N + 1.0);
    for (std::size_t k = 0; k < shapes.size(); ++k) {
        double f = syt_count(shapes[k]).get_d();
        s.labels.push_back(to_string(shapes[k]));
        s.reference.push_back(f * f / nf);
        s.z.push_back(binomial_z(s.counts[k], trials, s.reference.back()));
    }
    auto chi = chi_square_gof(s.counts, s.reference, trials);
    s.p_value = chi.p_value;
    double q = -t / (1 - t);
    double mz = binomial_z(marks, trials * N, q);
    s.values = {{"chi2", chi.statistic}, {"dof", chi.dof}, {"mark_fraction", static_cast<double>(marks) / (trials * N)}, {"mark_z", mz}};
    s.pass = chi.p_value > 1e-3 && std::fabs(mz) <= 3;
    return s;
}

/// Two-sample χ² between shape_law_test histograms at two values of t.
inline ChiSquareResult shape_law_compare(const ExperimentSummary& a, const ExperimentSummary& b)
{
    return chi_square_two_sample(a.counts, b.counts);
}

namespace detail {
// standard Young tableaux of shape λ, entry k placed in row rows[k−1]
inline void for_each_syt(const Partition& l, const std::function<void(const std::vector<int>&)>& f)
{
    const int N = l.size(), n = l.length();
    std::vector<int> fill(n, 0), rows;
    std::function<void()> rec = [&] {
        if (static_cast<int>(rows.size()) == N) {
            f(rows);
            return;
        }
        for (int r = 0; r < n; ++r)
            if (fill[r] < l(r + 1) && (r == 0 || fill[r - 1] > fill[r])) {
                ++fill[r];
                rows.push_back(r);
                rec();
                rows.pop_back();
                --fill[r];
            }
    };
    rec();
}
} // namespace detail

struct MarkedTReport {
    Partition shape;
    Rational t, sum, expected;
    long tableaux = 0;
    bool match = false;
};

/// Σ (−t)^{mark(S)} over marked standard tableaux of shape λ (every marking of
/// every SYT that passes the marked-tableau conditions), against (1−t)^N f^λ.
inline MarkedTReport marked_T_lambda(const Partition& l, const Rational& t)
{
    const int N = l.size();
    if (N > 12) throw std::domain_error("marked_T_lambda: |lambda| too large for enumeration");
    MarkedTReport r;
    r.shape = l;
    r.t = t;
    std::vector<Rational> pw(N + 1, Rational(1));
    for (int k = 1; k <= N; ++k) pw[k] = pw[k - 1] * Rational(-t);
    detail::for_each_syt(l, [&](const std::vector<int>& rows) {
        for (unsigned mask = 0; mask < (1u << N); ++mask) {
            MarkedTableau S;
            S.rows.resize(l.length());
            for (int k = 0; k < N; ++k) S.rows[rows[k]].push_back({k + 1, ((mask >> k) & 1u) != 0});
            if (!is_marked_tableau(S)) continue;
            ++r.tableaux;
            r.sum += pw[S.marks()];
        }
    });
    Rational one_t = 1 - t, p = 1;
    for (int k = 0; k < N; ++k) p *= one_t;
    r.expected = p * Rational(syt_count(l));
    r.match = r.sum == r.expected;
    return r;
}

/// Poissonized (N ∼ Poisson(κ)) or fixed-N marked-permutation ensemble.
struct EdgeModel {
    enum class Kind { poisson, fixed_n } kind = Kind::poisson;
    double kappa = 400;
    int N = 0;
    double t = 0;

    static EdgeModel poisson(double kappa, double t = 0) { return {Kind::poisson, kappa, 0, t}; }
    static EdgeModel fixed(int N, double t = 0) { return {Kind::fixed_n, 0, N, t}; }
    double scale_parameter() const { return kind == Kind::poisson ? kappa : N; }
};

/// Rescaled (L − 2√κ)/κ^{1/6} of the t-ascent length (κ = N for fixed size)
/// against tw2_cdf: KS distance, median, and mean.
inline ExperimentSummary edge_histogram(const EdgeModel& m, long trials, std::uint64_t seed, int threads = 0)
{
    const double k = m.scale_parameter();
    if (!(k > 0)) throw std::domain_error("edge_histogram: scale parameter must be positive");
    auto blocks = run_blocks<std::vector<int>>(trials, threads, [&](int b, long begin, long end) {
        Rng g = make_rng(seed, b);
        std::vector<int> out;
        for (long i = begin; i < end; ++i) {
            int N = m.N;
            if (m.kind == EdgeModel::Kind::poisson) N = std::poisson_distribution<int>(m.kappa)(g);
            out.push_back(first_row_length(random_marked_permutation(N, m.t, g).word()));
        }
        return out;
    });
    std::vector<int> L;
    for (const auto& b : blocks) L.insert(L.end(), b.begin(), b.end());
    const double c = 2 * std::sqrt(k), w = std::pow(k, 1.0 / 6);
    std::vector<double> s;
    double sum = 0;
    for (int v : L) {
        s.push_back((v - c) / w);
        sum += v;
    }
    ExperimentSummary r;
    r.statistic = "edge";
    r.trials = trials;
    r.seed = seed;
    r.threads = resolve_threads(threads);
    r.params = {{m.kind == EdgeModel::Kind::poisson ? "kappa" : "N", k}, {"t", m.t}};
    std::map<int, long> hist;
    for (int v : L) hist[v]++;
    for (auto [v, n] : hist) {
        r.labels.push_back(std::to_string(v));
        r.counts.push_back(n);
        double lo = (v - 0.5 - c) / w, hi = (v + 0.5 - c) / w;
        r.reference.push_back(tw2_cdf(hi) - tw2_cdf(lo));
    }
    r.ks = ks_distance(s, [](double x) { return tw2_cdf(x); });
    std::sort(s.begin(), s.end());
    const std::size_t n = s.size();
    double med = n % 2 ? s[n / 2] : (s[n / 2 - 1] + s[n / 2]) / 2;
    double mean = sum / n;
    r.values = {{"median", med},
                {"tw2_median", tw2_quantile(0.5)},
                {"mean", mean},
                {"mean_ratio", mean / c},
                // first-order edge correction 1 + E[F₂] κ^{−1/3}/2
                {"mean_ratio_reference", 1 + tw2_mean() * w / c},
                {"lattice_step", 1 / w}};
    r.pass = true;
    return r;
}

/// Fixed-N λ₁ histograms (trials_per_N each, N ≤ Nmax) mixed with Poisson(κ)
/// weights against P(λ₁ = h) from the Plancherel gap probabilities; every bin
/// within 3σ of the mixture's sampling error.
inline ExperimentSummary poissonization_check(double kappa, long trials_per_N, std::uint64_t seed, int threads = 1)
{
    if (!(kappa > 0 && kappa <= 50)) throw std::domain_error("poissonization_check: need 0 < kappa <= 50");
    const int Nmax = static_cast<int>(std::ceil(kappa + 12 * std::sqrt(kappa) + 20));
    auto per_N = run_blocks<std::vector<long>>(static_cast<long>(Nmax + 1), threads,
                                               [&](int b, long begin, long end) {
                                                   std::vector<long> h(static_cast<std::size_t>(Nmax + 2) * (end - begin), 0);
                                                   for (long N = begin; N < end; ++N) {
                                                       Rng g = make_rng(seed, static_cast<std::uint64_t>(N));
                                                       for (long i = 0; i < trials_per_N; ++i) {
                                                           auto sh = sample_plancherel_shape(static_cast<int>(N), g);
                                                           h[(N - begin) * (Nmax + 2) + (sh.length() ? sh(1) : 0)]++;
                                                       }
                                                   }
                                                   (void)b;
                                                   return h;
                                               },
                                               Nmax + 1);
    std::vector<double> w(Nmax + 1);
    for (int N = 0; N <= Nmax; ++N) w[N] = std::exp(-kappa + N * std::log(kappa) - std::lgamma(N + 1.0));
    std::vector<double> est(Nmax + 2, 0), var(Nmax + 2, 0);
    for (int N = 0; N <= Nmax; ++N) {
        const auto& h = per_N[N];
        for (int v = 0; v <= Nmax + 1; ++v) {
            double p = static_cast<double>(h[v]) / trials_per_N;
            est[v] += w[N] * p;
            var[v] += w[N] * w[N] * p * (1 - p) / trials_per_N;
        }
    }
    auto spec = SymbolSpec<double>::plancherel(std::sqrt(kappa), std::sqrt(kappa), 0);
    ExperimentSummary r;
    r.statistic = "poissonization";
    r.trials = trials_per_N * (Nmax + 1);
    r.seed = seed;
    r.threads = resolve_threads(threads);
    r.params = {{"kappa", kappa}, {"trials_per_N", static_cast<double>(trials_per_N)}, {"Nmax", Nmax}};
    double prev = 0, maxz = 0;
    bool ok = true;
    for (int h = 0; h <= Nmax + 1; ++h) {
        double F = gap_probability_auto(spec, h, 1e-12).value;
        double p = F - prev;
        prev = F;
        if (p < 1e-6 && est[h] == 0) continue;
        // binomial floor keeps σ positive when a bin is empty in every N
        double sd = std::sqrt(var[h] + p * (1 - p) / r.trials);
        double z = (est[h] - p) / sd;
        r.labels.push_back(std::to_string(h));
        r.counts.push_back(std::llround(est[h] * r.trials));
        r.reference.push_back(p);
        r.z.push_back(z);
        maxz = std::max(maxz, std::fabs(z));
        ok = ok && std::fabs(z) <= 3;
    }
    r.values = {{"max_abs_z", maxz}};
    r.pass = ok;
    return r;
}

} // namespace tschur
