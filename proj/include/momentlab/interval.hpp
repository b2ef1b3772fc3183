#pragma once

#include <optional>
#include <vector>

#include "momentlab/matrix.hpp"
#include "momentlab/rational.hpp"

namespace momentlab {

// Closed interval with exact rational endpoints. All arithmetic is exact, so
// enclosures never round: a computed interval always contains the true value.
struct RatInterval {
    Rational lo, hi;

    RatInterval() : lo(0), hi(0) {}
    explicit RatInterval(const Rational& v) : lo(v), hi(v) {}
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

    bool isPoint() const { return lo == hi; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool containsZero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool strictlyPositive() const { return sgn(lo) > 0; }
    bool strictlyNegative() const { return sgn(hi) < 0; }
    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    Rational rad() const { return (hi - lo) / 2; }

    RatInterval operator-() const { return {-hi, -lo}; }
    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator*(const RatInterval& o) const;
    // Requires 0 not in o.
    RatInterval operator/(const RatInterval& o) const;

    RatInterval& operator+=(const RatInterval& o) {
        lo += o.lo;
        hi += o.hi;
        return *this;
    }

    static RatInterval hull(const RatInterval& a, const RatInterval& b);
    std::optional<RatInterval> intersect(const RatInterval& o) const;

    RatInterval power(unsigned e) const;
};

RatInterval operator*(const Rational& c, const RatInterval& iv);

bool disjoint(const RatInterval& a, const RatInterval& b);

using IntervalMatrix = std::vector<std::vector<RatInterval>>;
using IntervalVector = std::vector<RatInterval>;

// Interval Gaussian elimination. Succeeds only when every pivot interval
// excludes zero, in which case the solution boxes enclose the true solution
// of every point system inside the input intervals.
std::optional<IntervalVector> intervalSolve(IntervalMatrix a, IntervalVector b);

// Determinant enclosure by interval elimination; nullopt when a pivot
// straddles zero (undecidable at this width).
std::optional<RatInterval> intervalDet(IntervalMatrix a);

}  // namespace momentlab
