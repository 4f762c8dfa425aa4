#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace necklace {

/// Exact rational scalar. Everything in the engine is exact; there is no
/// floating point anywhere in the core.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or "p" (decimal-free).
inline Rational parse_rational(const std::string& s)
{
    if (s.empty() || s.find('.') != std::string::npos)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

/// Serializes as "p" or "p/q", canonical form.
inline std::string format_rational(const Rational& r)
{
    return r.get_str();
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline Integer factorial(unsigned n)
{
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

} // namespace necklace
