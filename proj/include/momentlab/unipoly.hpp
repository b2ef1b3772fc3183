#pragma once

#include <optional>
#include <vector>

#include "momentlab/interval.hpp"
#include "momentlab/rational.hpp"

namespace momentlab {

struct ZeroPolynomialError : Error {
    using Error::Error;
};

// Dense univariate polynomial over Rational, coefficients by ascending degree.
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    explicit UnivariatePoly(std::vector<Rational> coeffs);

    static UnivariatePoly constant(const Rational& c);

    bool isZero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leadingCoefficient() const;
    Rational coefficient(int k) const;

    Rational operator()(const Rational& x) const;  // Horner, exact
    RatInterval operator()(const RatInterval& x) const;

    UnivariatePoly derivative() const;
    UnivariatePoly operator+(const UnivariatePoly& o) const;
    UnivariatePoly operator-(const UnivariatePoly& o) const;
    UnivariatePoly operator*(const UnivariatePoly& o) const;
    UnivariatePoly operator*(const Rational& s) const;
    bool operator==(const UnivariatePoly& o) const = default;

    // Euclidean division; remainder degree < divisor degree.
    static void divmod(const UnivariatePoly& num, const UnivariatePoly& den, UnivariatePoly& quot,
                       UnivariatePoly& rem);

    // Positive leading coefficient and primitive integer content.
    UnivariatePoly normalized() const;
    UnivariatePoly monic() const;

    std::string str() const;  // debug form in variable t

private:
    void strip();
    std::vector<Rational> c_;
};

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b);

// p / gcd(p, p'): same distinct roots, all simple.
UnivariatePoly squarefreePart(const UnivariatePoly& p);

// One isolating interval per distinct real root, pairwise disjoint, sorted
// ascending; exact rational roots come back as degenerate point intervals.
// Sturm-based; the squarefree part is taken first so multiplicities collapse.
std::vector<RatInterval> isolateRealRoots(const UnivariatePoly& p);

// Shrinks an isolating interval below the radius target: interval Newton
// steps where the derivative enclosure permits, bisection otherwise. The
// polynomial must be squarefree on the interval (exactly one simple root).
RatInterval refineRoot(const UnivariatePoly& p, RatInterval iv, const Rational& targetRadius);

// Number of distinct real roots in (a, b] by Sturm counting.
int countRootsInInterval(const UnivariatePoly& p, const Rational& a, const Rational& b);

// The unique rational with smallest denominator (then smallest numerator) in
// [lo, hi], by Stern-Brocot descent.
Rational simplestRationalIn(const Rational& lo, const Rational& hi);

}  // namespace momentlab
