#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "partition.hpp"
#include "scalar.hpp"
#include "series.hpp"
#include "tableau.hpp"

namespace tschur {

enum class SpecOrigin { finite_variables, principal, free };

/// Specialization of the symmetric-function algebra by its power sums p_1..p_D.
template <class S>
struct PowerSumSpec {
    std::vector<S> p;  // p[0] unused
    int D = 0;
    SpecOrigin origin = SpecOrigin::free;
    std::vector<S> vars;
    S z = S(0);

    S power_sum(int k) const
    {
        if (k < 1 || k > D) throw std::out_of_range("power sum index outside capacity");
        return p[k];
    }

    static PowerSumSpec finite(const std::vector<S>& x, int D)
    {
        PowerSumSpec s;
        s.D = D;
        s.origin = SpecOrigin::finite_variables;
        s.vars = x;
        s.p.assign(D + 1, S(0));
        std::vector<S> pw(x.size(), S(1));
        for (int k = 1; k <= D; ++k)
            for (std::size_t i = 0; i < x.size(); ++i) {
                pw[i] *= x[i];
                s.p[k] += pw[i];
            }
        return s;
    }
    /// p_k = z for every k (the specialization 1^z).
    static PowerSumSpec principal(const S& z, int D)
    {
        PowerSumSpec s;
        s.D = D;
        s.origin = SpecOrigin::principal;
        s.z = z;
        s.p.assign(D + 1, z);
        s.p[0] = S(0);
        return s;
    }
    /// p_1..p_D given directly.
    static PowerSumSpec free(const std::vector<S>& p1_to_D)
    {
        PowerSumSpec s;
        s.D = static_cast<int>(p1_to_D.size());
        s.p.assign(1, S(0));
        s.p.insert(s.p.end(), p1_to_D.begin(), p1_to_D.end());
        return s;
    }
    /// p_1 = a, higher power sums zero.
    static PowerSumSpec plancherel(const S& a, int D)
    {
        std::vector<S> v(D, S(0));
        if (D >= 1) v[0] = a;
        return free(v);
    }
};

template <class S>
struct TParam {
    S t = S(0);
    bool probabilistic_valid() const { return t <= S(0); }
};

namespace detail {
template <class S>
TruncatedSeries<S> t_log_series(const PowerSumSpec<S>& spec, const S& t, int n_max, bool elementary)
{
    if (n_max > spec.D) throw std::out_of_range("requested degree exceeds power-sum capacity");
    TruncatedSeries<S> L(n_max);
    S tk(1);
    for (int k = 1; k <= n_max; ++k) {
        tk *= t;
        S v = (S(1) - tk) * spec.p[k] / S(k);
        if (elementary && k % 2 == 0) v = -v;
        L[k] = v;
    }
    return L;
}
} // namespace detail

/// h^{(t)}_0..h^{(t)}_{n_max} from exp(sum (1−t^k) p_k z^k / k).
template <class S>
TruncatedSeries<S> h_t(const PowerSumSpec<S>& spec, const S& t, int n_max)
{
    return exp_series(detail::t_log_series(spec, t, n_max, false));
}

/// e^{(t)}_0..e^{(t)}_{n_max} from exp(sum (−1)^{k−1}(1−t^k) p_k z^k / k).
template <class S>
TruncatedSeries<S> e_t(const PowerSumSpec<S>& spec, const S& t, int n_max)
{
    return exp_series(detail::t_log_series(spec, t, n_max, true));
}

/// prod (1 − t x_i z)/(1 − x_i z) expanded factor by factor.
template <class S>
TruncatedSeries<S> h_t_product(const std::vector<S>& x, const S& t, int n_max)
{
    auto r = TruncatedSeries<S>::one(n_max);
    for (const auto& xi : x) {
        TruncatedSeries<S> f(n_max);
        f[0] = S(1);
        S pw(1);
        for (int k = 1; k <= n_max; ++k) {
            pw *= xi;
            f[k] = (S(1) - t) * pw;
        }
        r = r * f;
    }
    return r;
}

/// prod (1 + x_i z)/(1 + t x_i z) expanded factor by factor.
template <class S>
TruncatedSeries<S> e_t_product(const std::vector<S>& x, const S& t, int n_max)
{
    auto r = TruncatedSeries<S>::one(n_max);
    for (const auto& xi : x) {
        // (1 + x z) sum_k (−t x z)^k
        TruncatedSeries<S> f(n_max);
        S prev(1);
        f[0] = S(1);
        for (int k = 1; k <= n_max; ++k) {
            S cur = prev * (-t * xi);
            f[k] = cur + xi * prev;
            prev = cur;
        }
        r = r * f;
    }
    return r;
}

/// Ordinary h_0..h_n of finitely many variables by the recursion on the last variable.
template <class S>
std::vector<S> complete_homogeneous_direct(const std::vector<S>& x, int n)
{
    std::vector<S> h(n + 1, S(0));
    h[0] = S(1);
    for (const auto& xi : x)
        for (int k = 1; k <= n; ++k) h[k] += xi * h[k - 1];
    return h;
}

namespace detail {
template <class S>
S jacobi_trudi(const std::vector<int>& rowlens, const TruncatedSeries<S>& g)
{
    const int l = static_cast<int>(rowlens.size());
    if (l == 0) return S(1);
    Matrix<S> m(l, std::vector<S>(l, S(0)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int idx = rowlens[i] - i + j;
            m[i][j] = idx < 0 ? S(0) : g.coeff(idx);
            if (idx > g.cap()) throw std::out_of_range("Jacobi-Trudi index exceeds series capacity");
        }
    return det_field(std::move(m));
}
} // namespace detail

/// S_λ(x;t) = det(h^{(t)}_{λ_i − i + j}).
template <class S>
S t_schur(const PowerSumSpec<S>& spec, const S& t, const Partition& l)
{
    if (l.size() > spec.D) throw std::out_of_range("t_schur: |λ| exceeds capacity");
    int need = l.empty() ? 0 : l(1) + l.length() - 1;
    auto h = h_t(spec, t, std::min(need, spec.D));
    return detail::jacobi_trudi(l.parts(), h.with_cap(std::max(need, 0)));
}

/// det(e^{(t)}_{λ'_i − i + j}); equals t_schur.
template <class S>
S t_schur_dual(const PowerSumSpec<S>& spec, const S& t, const Partition& l)
{
    if (l.size() > spec.D) throw std::out_of_range("t_schur_dual: |λ| exceeds capacity");
    Partition c = l.conjugate();
    int need = c.empty() ? 0 : c(1) + c.length() - 1;
    auto e = e_t(spec, t, std::min(need, spec.D));
    return detail::jacobi_trudi(c.parts(), e.with_cap(std::max(need, 0)));
}

template <class S>
S schur(const PowerSumSpec<S>& spec, const Partition& l)
{
    return t_schur(spec, S(0), l);
}

/// Classical Jacobi–Trudi with ordinary h_n of the variables.
template <class S>
S schur_classical(const std::vector<S>& x, const Partition& l)
{
    int need = l.empty() ? 0 : l(1) + l.length() - 1;
    auto h = complete_homogeneous_direct(x, need);
    return detail::jacobi_trudi(l.parts(), TruncatedSeries<S>(h));
}

/// Sum over marked tableaux of shape λ of (−t)^{mark} x^{content}.
template <class S>
S t_schur_tableau_oracle(const std::vector<S>& x, const S& t, const Partition& l)
{
    if (l.size() > 8 || x.size() > 3) throw std::length_error("t_schur_tableau_oracle: enumeration size guard (|λ| <= 8, <= 3 variables)");
    const int m = static_cast<int>(x.size());
    if (m == 0) return l.empty() ? S(1) : S(0);
    // integer counts per (content, marks), evaluated once at the end
    std::map<std::vector<int>, long long> counts;
    for_each_marked_tableau(l, m, [&](const MarkedTableau& s) {
        std::vector<int> key(m + 1, 0);
        for (const auto& r : s.rows)
            for (const auto& a : r) {
                key[a.value - 1]++;
                if (a.primed) key[m]++;
            }
        counts[key]++;
    });
    S total(0);
    for (const auto& [key, cnt] : counts) {
        S term(static_cast<long>(cnt));
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < key[i]; ++k) term *= x[i];
        for (int k = 0; k < key[m]; ++k) term *= -t;
        total += term;
    }
    return total;
}

} // namespace tschur
