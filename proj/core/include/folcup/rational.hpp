#ifndef FOLCUP_RATIONAL_HPP
#define FOLCUP_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace folcup {

/* Exact coefficients. mpq_class keeps fractions reduced with a positive
 * denominator, which is exactly the invariant we need; construction from a
 * num/den pair goes through rational() below so it is always canonicalized. */
using Rational = mpq_class;

using QVector = std::vector<Rational>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rational(long num, long den = 1)
{
    if (den == 0)
        throw Error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "a/b" or "a" (decimal strings, optional leading '-').
Rational rational_from_string(std::string_view s);

/// Canonical form "a/b", denominator always written (e.g. "3/1", "-2/5").
std::string rational_to_string(const Rational& r);

/// Pivot-size measure: bits of |num| plus bits of den.
std::size_t coefficient_bits(const Rational& r);

inline bool is_zero(const QVector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

inline QVector zero_vector(int n)
{
    return QVector(static_cast<std::size_t>(n), Rational(0));
}

inline void axpy(QVector& y, const Rational& a, const QVector& x)
{
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] += a * x[i];
}

inline QVector scaled(const QVector& x, const Rational& a)
{
    QVector y = x;
    for (auto& v : y)
        v *= a;
    return y;
}

inline QVector operator+(const QVector& a, const QVector& b)
{
    QVector c = a;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b[i];
    return c;
}

inline QVector operator-(const QVector& a, const QVector& b)
{
    QVector c = a;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= b[i];
    return c;
}

}  // namespace folcup

#endif
