#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

namespace tschur {

struct ChiSquareResult {
    double statistic = 0;
    int dof = 0;
    double p_value = 1;
};

inline double chi2_sf(double x, int dof)
{
    if (dof <= 0) return 1;
    boost::math::chi_squared d(dof);
    return boost::math::cdf(boost::math::complement(d, std::max(x, 0.0)));
}

/// Goodness of fit.  Bins whose expected count falls below `min_expected`,
/// together with the mass not covered by `probs`, are pooled into one bin.
inline ChiSquareResult chi_square_gof(const std::vector<long>& counts, const std::vector<double>& probs, long total, double min_expected = 25)
{
    if (counts.size() != probs.size()) throw std::invalid_argument("chi_square_gof: size mismatch");
    ChiSquareResult r;
    double pooled_p = 1, pooled_obs = static_cast<double>(total);
    int bins = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        double e = probs[i] * total;
        if (e < min_expected) continue;
        r.statistic += (counts[i] - e) * (counts[i] - e) / e;
        pooled_p -= probs[i];
        pooled_obs -= counts[i];
        ++bins;
    }
    double pe = std::max(pooled_p, 0.0) * total;
    if (pe >= 1e-12) {
        r.statistic += (pooled_obs - pe) * (pooled_obs - pe) / pe;
        ++bins;
    } else if (pooled_obs > 0) {
        r.statistic = std::numeric_limits<double>::infinity();
    }
    r.dof = bins - 1;
    r.p_value = std::isfinite(r.statistic) ? chi2_sf(r.statistic, r.dof) : 0.0;
    return r;
}

/// Two-sample homogeneity test on paired bins; sparse bins are pooled.
inline ChiSquareResult chi_square_two_sample(const std::vector<long>& a, const std::vector<long>& b, double min_expected = 25)
{
    if (a.size() != b.size()) throw std::invalid_argument("chi_square_two_sample: size mismatch");
    double na = 0, nb = 0;
    for (long v : a) na += v;
    for (long v : b) nb += v;
    std::vector<std::pair<double, double>> bins;
    double ra = 0, rb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double tot = a[i] + b[i];
        if (std::min(tot * na, tot * nb) / (na + nb) < min_expected) {
            ra += a[i];
            rb += b[i];
        } else {
            bins.push_back({double(a[i]), double(b[i])});
        }
    }
    if (ra + rb > 0) bins.push_back({ra, rb});
    ChiSquareResult r;
    for (auto [x, y] : bins) {
        double tot = x + y;
        double ea = tot * na / (na + nb), eb = tot * nb / (na + nb);
        r.statistic += (x - ea) * (x - ea) / ea + (y - eb) * (y - eb) / eb;
    }
    r.dof = static_cast<int>(bins.size()) - 1;
    r.p_value = chi2_sf(r.statistic, r.dof);
    return r;
}

/// (count − n p) / sqrt(n p (1 − p)).
inline double binomial_z(long count, long n, double p)
{
    double sd = std::sqrt(n * p * (1 - p));
    if (sd == 0) return count == static_cast<long>(std::llround(n * p)) ? 0.0 : std::numeric_limits<double>::infinity();
    return (count - n * p) / sd;
}

/// Kolmogorov–Smirnov distance between the empirical law of `samples` and a
/// continuous CDF, checking both sides of every jump.
inline double ks_distance(std::vector<double> samples, const std::function<double(double)>& cdf)
{
    if (samples.empty()) return 0;
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0;
    for (std::size_t i = 0; i < samples.size();) {
        std::size_t j = i;
        while (j < samples.size() && samples[j] == samples[i]) ++j;
        double f = cdf(samples[i]);
        d = std::max(d, std::fabs(f - i / n));
        d = std::max(d, std::fabs(f - j / n));
        i = j;
    }
    return d;
}

} // namespace tschur
