#pragma once

#include <cmath>

#include <boost/multiprecision/mpfr.hpp>

#include "scalar.hpp"

namespace tschur {

/// MPFR float with a fixed number of decimal digits.
template <unsigned Digits>
using Mpfr = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<Digits>, boost::multiprecision::et_off>;

template <unsigned Digits>
struct scalar_traits<Mpfr<Digits>> {
    using S = Mpfr<Digits>;
    static constexpr bool exact = false;
    static Bound magnitude(const S& v) { return std::fabs(mpfr_get_ld(v.backend().data(), MPFR_RNDU)); }
    static Bound epsilon() { return std::pow(Bound(10), -static_cast<Bound>(Digits) + 1); }
    static S from_rational(const Rational& r)
    {
        S v;
        mpfr_set_q(v.backend().data(), r.get_mpq_t(), MPFR_RNDN);
        return v;
    }
    static double to_double(const S& v) { return v.template convert_to<double>(); }
    static bool is_integer(const S& v) { return mpfr_integer_p(v.backend().data()) != 0; }
    static bool is_zero(const S& v) { return mpfr_zero_p(v.backend().data()) != 0; }
};

} // namespace tschur
