#pragma once

#include <map>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "measure.hpp"
#include "symfunc.hpp"

namespace tschur {

/// Outcome of a graded comparison.  Grades are powers of u; with x and y both
/// scaled by u, λ contributes at grade 2|λ|.
struct IdentityReport {
    std::string name;
    std::map<std::string, std::string> params;
    bool equal = true;
    int first_mismatch_grade = -1;
    std::string lhs, rhs;
    int grades_compared = 0;
};

namespace detail {

using USeries = TruncatedSeries<Rational>;

inline std::string join_rationals(const std::vector<Rational>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s;
}

inline IdentityReport compare_graded(std::string name, const USeries& lhs, const USeries& rhs, std::map<std::string, std::string> params)
{
    IdentityReport r;
    r.name = std::move(name);
    r.params = std::move(params);
    r.grades_compared = lhs.cap() + 1;
    for (int g = 0; g <= lhs.cap(); ++g)
        if (lhs[g] != rhs[g]) {
            r.equal = false;
            r.first_mismatch_grade = g;
            r.lhs = lhs[g].get_str();
            r.rhs = rhs[g].get_str();
            break;
        }
    return r;
}

inline std::map<std::string, std::string> base_params(const std::vector<Rational>& x, const std::vector<Rational>& y, const Rational& t, int D)
{
    return {{"x", join_rationals(x)}, {"y", join_rationals(y)}, {"t", t.get_str()}, {"deg", std::to_string(D)}};
}

// sum over |λ| <= D (optionally filtered) of weight(λ) u^{2|λ|}
template <class Keep, class Weight>
USeries graded_sum(int D, Keep&& keep, Weight&& weight)
{
    USeries s(2 * D);
    for (const auto& l : enumerate(D, EnumerateMode::up_to_weight))
        if (keep(l)) s[2 * l.size()] += weight(l);
    return s;
}

} // namespace detail

/// Σ S_λ(x;t) s_λ(y) u^{2|λ|} against ∏ (1 − t x_i y_j u²)/(1 − x_i y_j u²), grades <= 2D.
inline IdentityReport verify_t_cauchy(const std::vector<Rational>& x, const std::vector<Rational>& y, const Rational& t, int D)
{
    auto hx = h_t(PowerSumSpec<Rational>::finite(x, D), t, D);
    auto hy = h_t(PowerSumSpec<Rational>::finite(y, D), Rational(0), D);
    auto lhs = detail::graded_sum(
        D, [](const Partition&) { return true; },
        [&](const Partition& l) -> Rational { return detail::jacobi_trudi(l.parts(), hx) * detail::jacobi_trudi(l.parts(), hy); });
    auto rhs = detail::USeries::one(2 * D);
    for (const auto& a : x)
        for (const auto& b : y) {
            Rational c = a * b, pw = 1;
            detail::USeries f(2 * D);
            f[0] = 1;
            for (int k = 1; 2 * k <= 2 * D; ++k) {
                pw *= c;
                f[2 * k] = (1 - t) * pw;
            }
            rhs *= f;
        }
    return detail::compare_graded("t_cauchy", lhs, rhs, detail::base_params(x, y, t, D));
}

/// Σ (−1)^{|λ|} S_λ(x;t) s_{λ'}(y) u^{2|λ|} against ∏ (1 − x_i y_j u²)/(1 − t x_i y_j u²).
inline IdentityReport verify_dual_cauchy(const std::vector<Rational>& x, const std::vector<Rational>& y, const Rational& t, int D)
{
    auto hx = h_t(PowerSumSpec<Rational>::finite(x, D), t, D);
    auto hy = h_t(PowerSumSpec<Rational>::finite(y, D), Rational(0), D);
    auto lhs = detail::graded_sum(
        D, [](const Partition&) { return true; },
        [&](const Partition& l) {
            Rational v = detail::jacobi_trudi(l.parts(), hx) * detail::jacobi_trudi(l.conjugate().parts(), hy);
            return l.size() % 2 ? Rational(-v) : v;
        });
    auto rhs = detail::USeries::one(2 * D);
    for (const auto& a : x)
        for (const auto& b : y) {
            Rational c = a * b, tc = t * c, pw = 1;
            detail::USeries f(2 * D);
            f[0] = 1;
            // (1 − c u²) Σ (tc u²)^k
            for (int k = 1; 2 * k <= 2 * D; ++k) {
                Rational prev = pw;
                pw *= tc;
                f[2 * k] = pw - c * prev;
            }
            rhs *= f;
        }
    return detail::compare_graded("dual_cauchy", lhs, rhs, detail::base_params(x, y, t, D));
}

/// Determinant of the k×k Toeplitz matrix (φ_{j−i}); entries from `phi(m)`.
template <class T, class Phi>
T toeplitz_det(Phi&& phi, int k)
{
    Matrix<T> m(k, std::vector<T>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = phi(j - i);
    if constexpr (requires { scalar_traits<T>::exact; })
        return det_field(std::move(m));
    else
        return det_ring(m);
}

/// Σ_{ℓ(λ)<=k} S_λ(x;t) s_λ(y) u^{2|λ|} against det T_k(φ), φ(z) = H_{x,t}(z) H_y(1/z).
inline IdentityReport verify_gessel_length(const std::vector<Rational>& x, const std::vector<Rational>& y, const Rational& t, int k, int D)
{
    const int G = 2 * D;
    auto hx = h_t(PowerSumSpec<Rational>::finite(x, G), t, G);
    auto hy = h_t(PowerSumSpec<Rational>::finite(y, G), Rational(0), G);
    auto lhs = detail::graded_sum(
        D, [&](const Partition& l) { return l.length() <= k; },
        [&](const Partition& l) -> Rational { return detail::jacobi_trudi(l.parts(), hx) * detail::jacobi_trudi(l.parts(), hy); });
    auto phi = [&](int m) {
        // Σ_{a−b=m} h^{(t)}_a(x) h_b(y) u^{a+b}
        detail::USeries s(G);
        for (int b = std::max(0, -m); 2 * b + m <= G; ++b) s[2 * b + m] += hx[b + m] * hy[b];
        return s;
    };
    auto rhs = toeplitz_det<detail::USeries>(phi, k);
    auto p = detail::base_params(x, y, t, D);
    p["k"] = std::to_string(k);
    return detail::compare_graded("gessel_length", lhs, rhs, p);
}

/// Σ_{λ₁<=h} S_λ(x;t) s_λ(y) u^{2|λ|} against det T_h(ψ), ψ(z) = E_{x,t}(1/z) E_y(z).
inline IdentityReport verify_gessel_row(const std::vector<Rational>& x, const std::vector<Rational>& y, const Rational& t, int h, int D)
{
    const int G = 2 * D;
    auto hx = h_t(PowerSumSpec<Rational>::finite(x, D), t, D);
    auto hy = h_t(PowerSumSpec<Rational>::finite(y, D), Rational(0), D);
    auto ex = e_t(PowerSumSpec<Rational>::finite(x, G), t, G);
    auto ey = e_t(PowerSumSpec<Rational>::finite(y, G), Rational(0), G);
    auto lhs = detail::graded_sum(
        D, [&](const Partition& l) { return l(1) <= h; },
        [&](const Partition& l) -> Rational { return detail::jacobi_trudi(l.parts(), hx) * detail::jacobi_trudi(l.parts(), hy); });
    auto psi = [&](int m) {
        // Σ_{b−a=m} e^{(t)}_a(x) e_b(y) u^{a+b}
        detail::USeries s(G);
        for (int a = std::max(0, -m); 2 * a + m <= G; ++a) s[2 * a + m] += ex[a] * ey[a + m];
        return s;
    };
    auto rhs = toeplitz_det<detail::USeries>(psi, h);
    auto p = detail::base_params(x, y, t, D);
    p["h"] = std::to_string(h);
    return detail::compare_graded("gessel_row", lhs, rhs, p);
}

struct NormalizationReport {
    double partial_sum = 0;
    double tail_bound = 0;
    bool ok = false;
};

/// Σ_{|λ|<=D} prob(λ) lies in [1 − tail, 1].
inline NormalizationReport verify_measure_normalization(const TSchurParams& p, int D)
{
    NormalizationReport r;
    Rational s = 0;
    for (const auto& sp : prob_table(p, D)) s += sp.p;
    r.partial_sum = s.get_d();
    r.tail_bound = static_cast<double>(mass_tail_bound(p, D));
    r.ok = s <= 1 && r.partial_sum >= 1 - r.tail_bound - 1e-15;
    return r;
}

} // namespace tschur
