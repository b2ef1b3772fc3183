#pragma once

#include <string>
#include <vector>

#include "momentlab/moment.hpp"
#include "momentlab/poly.hpp"

namespace momentlab::testing {

// A known extremal sextic moment sequence with two cubic column relations,
// rank M(3) = card V = 8, weakly consistent but NOT consistent: it admits no
// representing measure. Used across the suites as the refutation fixture.
inline MomentSequence noMeasureExtremalSequence() {
    MomentSequence beta(3);
    auto set = [&](int i, int j, const char* v) { beta.set(i, j, parseRational(v)); };
    set(0, 0, "14");
    set(1, 0, "7/2");
    set(0, 1, "-67/8");
    set(2, 0, "79/4");
    set(1, 1, "1055/16");
    set(0, 2, "18195/64");
    set(3, 0, "-67/8");
    set(2, 1, "-1935/32");
    set(1, 2, "-43115/128");
    set(0, 3, "-926695/512");
    set(4, 0, "1055/16");
    set(3, 1, "18195/64");
    set(2, 2, "336151/256");
    set(1, 3, "6407195/1024");
    set(0, 4, "124731423/4096");
    set(5, 0, "-1935/32");
    set(4, 1, "-43115/128");
    set(3, 2, "-926695/512");
    set(2, 3, "-19736547/2048");
    set(1, 4, "-419176415/8192");
    set(0, 5, "-8894873563/32768");
    set(6, 0, "18195/64");
    set(5, 1, "336151/256");
    set(4, 2, "6407195/1024");
    set(3, 3, "124731423/4096");
    set(2, 4, "2469281827/16384");
    set(1, 5, "49568350247/65536");
    set(0, 6, "1006568996907/262144");
    return beta;
}

// First column relation: x^3 - y.
inline MultiPoly relationF() { return MultiPoly::parse("x^3 - y"); }

// Second column relation as published (tail not reduced against relationF).
inline MultiPoly relationGPublished() {
    return MultiPoly::parse(
        "y^3 - 3*x + 3/4*y + 13*x^2 - 65/4*x*y + 13/4*y^2 - 12*x^3 + 22*x^2*y - 35/4*x*y^2");
}

// Canonical (echelon) form of the second relation: published g + 12 f.
inline MultiPoly relationGCanonical() {
    return relationGPublished() + relationF() * Rational(12);
}

// The quartic battery polynomial for this instance with the published tail.
// With lead x^2*y^2 it vanishes on the variety (Riesz value -405/128); with
// lead x^4 (as published) it does not vanish, but its Riesz value is the
// published -320081/256.
inline MultiPoly auxiliaryTail() {
    return MultiPoly::parse("6*x - 11/2*y - 14*x^2 + 43/2*x*y - 17/2*y^2 - x^2*y + 1/2*x*y^2");
}

inline MultiPoly auxiliaryPublishedLeadX4() {
    return MultiPoly::parse("x^4") + auxiliaryTail();
}

inline MultiPoly auxiliaryCorrectedLeadX2Y2() {
    return MultiPoly::parse("x^2*y^2") + auxiliaryTail();
}

// The eight variety points: six rational, plus the conjugate pair with
// x = (-1 +- sqrt(13))/2, y = -5 +- 2 sqrt(13).
inline std::vector<std::pair<Rational, Rational>> rationalVarietyPoints() {
    return {
        {parseRational("0"), parseRational("0")},   {parseRational("-2"), parseRational("-8")},
        {parseRational("2"), parseRational("8")},   {parseRational("1"), parseRational("1")},
        {parseRational("-1"), parseRational("-1")}, {parseRational("1/2"), parseRational("1/8")},
    };
}

}  // namespace momentlab::testing
