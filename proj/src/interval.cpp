#include "momentlab/interval.hpp"

#include <algorithm>

namespace momentlab {

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rational p1 = lo * o.lo, p2 = lo * o.hi, p3 = hi * o.lo, p4 = hi * o.hi;
    Rational l = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational h = std::max(std::max(p1, p2), std::max(p3, p4));
    return {std::move(l), std::move(h)};
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
    if (o.containsZero()) throw Error("interval division by an interval containing zero");
    RatInterval inv(Rational(1) / o.hi, Rational(1) / o.lo);
    return *this * inv;
}

RatInterval RatInterval::hull(const RatInterval& a, const RatInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

std::optional<RatInterval> RatInterval::intersect(const RatInterval& o) const {
    Rational l = std::max(lo, o.lo), h = std::min(hi, o.hi);
    if (l > h) return std::nullopt;
    return RatInterval(std::move(l), std::move(h));
}

RatInterval RatInterval::power(unsigned e) const {
    if (e == 0) return RatInterval(Rational(1));
    RatInterval acc(Rational(1));
    RatInterval b = *this;
    // Even powers of a zero-straddling interval must stay nonnegative, so
    // square directly instead of repeated multiplication.
    if (e % 2 == 0 && containsZero()) {
        Rational m = std::max(ratAbs(lo), ratAbs(hi));
        RatInterval sq(Rational(0), m * m);
        return sq.power(e / 2);
    }
    unsigned k = e;
    while (k) {
        if (k & 1u) acc = acc * b;
        k >>= 1u;
        if (k) b = b * b;
    }
    return acc;
}

RatInterval operator*(const Rational& c, const RatInterval& iv) {
    if (sgn(c) >= 0) return {c * iv.lo, c * iv.hi};
    return {c * iv.hi, c * iv.lo};
}

bool disjoint(const RatInterval& a, const RatInterval& b) { return a.hi < b.lo || b.hi < a.lo; }

namespace {

// Pivot choice: an interval excluding zero with the largest midpoint
// magnitude, for stability of the enclosure.
int choosePivot(const IntervalMatrix& a, int col, int from) {
    int best = -1;
    Rational bestMag(0);
    for (int r = from; r < static_cast<int>(a.size()); ++r) {
        if (a[r][col].containsZero()) continue;
        Rational mag = ratAbs(a[r][col].mid());
        if (best < 0 || mag > bestMag) {
            best = r;
            bestMag = mag;
        }
    }
    return best;
}

}  // namespace

std::optional<IntervalVector> intervalSolve(IntervalMatrix a, IntervalVector b) {
    const int n = static_cast<int>(a.size());
    for (int col = 0; col < n; ++col) {
        int piv = choosePivot(a, col, col);
        if (piv < 0) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col].isPoint() && a[r][col].lo == 0) continue;
            RatInterval f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
            b[r] = b[r] - f * b[col];
        }
    }
    IntervalVector x(n, RatInterval(Rational(0)));
    for (int r = n - 1; r >= 0; --r) {
        RatInterval s = b[r];
        for (int c = r + 1; c < n; ++c) s = s - a[r][c] * x[c];
        x[r] = s / a[r][r];
    }
    return x;
}

std::optional<RatInterval> intervalDet(IntervalMatrix a) {
    const int n = static_cast<int>(a.size());
    RatInterval d(Rational(1));
    for (int col = 0; col < n; ++col) {
        int piv = choosePivot(a, col, col);
        if (piv < 0) {
            // A fully zero column still gives a definite answer.
            bool allZero = true;
            for (int r = col; r < n; ++r)
                if (!(a[r][col].isPoint() && a[r][col].lo == 0)) allZero = false;
            if (allZero) return RatInterval(Rational(0));
            return std::nullopt;
        }
        if (piv != col) {
            std::swap(a[piv], a[col]);
            d = -d;
        }
        d = d * a[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (a[r][col].isPoint() && a[r][col].lo == 0) continue;
            RatInterval f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
        }
    }
    return d;
}

}  // namespace momentlab
