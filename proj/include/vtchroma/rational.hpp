#pragma once

#include <gmpxx.h>

#include <string>

namespace vtchroma
{
    /// Arbitrary precision rational, always canonical.
    using Rational = mpq_class;

    inline auto make_rational(long long num, long long den = 1) -> Rational
    {
        Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        q.canonicalize();
        return q;
    }

    /// "p/q" with the denominator always present.
    inline auto to_string(const Rational & q) -> std::string
    {
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }

    /// Smallest integer >= p / q for q > 0.
    constexpr auto ceil_div(long long p, long long q) -> long long
    {
        return p >= 0 ? (p + q - 1) / q : -((-p) / q);
    }

    constexpr auto floor_div(long long p, long long q) -> long long
    {
        return p >= 0 ? p / q : -((-p + q - 1) / q);
    }
}
