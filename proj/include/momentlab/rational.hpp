#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace momentlab {

// Exact arbitrary-precision rational, the ground field for all moment data.
// GMP keeps values canonical: lowest terms, denominator > 0.
using Rational = mpq_class;
using Integer = mpz_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational ratOf(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sgn(const Rational& r) { return ::sgn(r); }

inline Rational ratAbs(const Rational& r) { return ::abs(r); }

Rational ratPow(const Rational& base, unsigned exp);

// Accepts "p", "p/q", decimal ("3.25", "-0.5") and scientific ("1e-12") forms.
std::optional<Rational> tryParseRational(std::string_view s);
Rational parseRational(std::string_view s);

// "p" when the denominator is 1, otherwise "p/q".
std::string toString(const Rational& r);

double toDouble(const Rational& r);

}  // namespace momentlab
