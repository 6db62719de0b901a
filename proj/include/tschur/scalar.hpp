#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tschur {

using Integer = mpz_class;
using Rational = mpq_class;

// Error and tail magnitudes.  Extended exponent range so that bounds for
// large symbols (|coefficients| ~ e^{500}) stay representable.
using Bound = long double;

/// Parses "p/q", "p", or a finite decimal such as "-0.25" into an exact rational.
inline Rational parse_rational(std::string_view s)
{
    std::string str(s);
    auto bad = [&] { throw std::invalid_argument("not a rational: '" + str + "'"); };
    if (str.empty()) bad();
    auto dot = str.find('.');
    if (dot != std::string::npos) {
        if (str.find('/') != std::string::npos) bad();
        std::string digits = str.substr(0, dot) + str.substr(dot + 1);
        std::size_t frac = str.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+") bad();
        for (std::size_t i = (digits[0] == '-' || digits[0] == '+') ? 1 : 0; i < digits.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(digits[i]))) bad();
        if (digits[0] == '+') digits.erase(0, 1);
        Integer num(digits, 10);
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    for (std::size_t i = 0; i < str.size(); ++i) {
        char c = str[i];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && (i == 0 || str[i - 1] == '/'));
        if (!ok) bad();
    }
    Rational r;
    if (r.set_str(str, 10) != 0) bad();
    if (r.get_den() == 0) bad();
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Bound magnitude(const Rational& v) { return std::fabs(static_cast<Bound>(v.get_d())); }
    static Bound epsilon() { return 0; }
    static Rational from_rational(const Rational& r) { return r; }
    static double to_double(const Rational& v) { return v.get_d(); }
    static bool is_integer(const Rational& v) { return v.get_den() == 1; }
    static bool is_zero(const Rational& v) { return sgn(v) == 0; }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static Bound magnitude(double v) { return std::fabs(static_cast<Bound>(v)); }
    static Bound epsilon() { return std::numeric_limits<double>::epsilon(); }
    static double from_rational(const Rational& r) { return r.get_d(); }
    static double to_double(double v) { return v; }
    static bool is_integer(double v) { return std::isfinite(v) && v == std::round(v); }
    static bool is_zero(double v) { return v == 0.0; }
};

template <>
struct scalar_traits<long double> {
    static constexpr bool exact = false;
    static Bound magnitude(long double v) { return std::fabs(v); }
    static Bound epsilon() { return std::numeric_limits<long double>::epsilon(); }
    static long double from_rational(const Rational& r) { return r.get_d(); }
    static double to_double(long double v) { return static_cast<double>(v); }
    static bool is_integer(long double v) { return std::isfinite(v) && v == std::round(v); }
    static bool is_zero(long double v) { return v == 0.0L; }
};

template <class S>
S from_rational(const Rational& r) { return scalar_traits<S>::from_rational(r); }

template <class S>
Bound magnitude(const S& v) { return scalar_traits<S>::magnitude(v); }

template <class S>
double to_double(const S& v) { return scalar_traits<S>::to_double(v); }

} // namespace tschur
