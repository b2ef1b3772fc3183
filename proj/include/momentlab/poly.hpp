#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "momentlab/interval.hpp"
#include "momentlab/rational.hpp"

namespace momentlab {

// Monomial x^i y^j.
struct Monomial {
    int i = 0;  // x exponent
    int j = 0;  // y exponent

    int degree() const { return i + j; }
    bool divides(const Monomial& m) const { return i <= m.i && j <= m.j; }
    Monomial operator*(const Monomial& m) const { return {i + m.i, j + m.j}; }
    // Requires divides(m).
    Monomial quotient(const Monomial& m) const { return {m.i - i, m.j - j}; }
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool operator==(const Monomial& m) const = default;

    std::string str() const;
};

// GradedLex: by total degree, ties broken so the ascending sequence is
// 1, x, y, x^2, x*y, y^2, x^3, ... (matching the moment-matrix column order).
// Lex: pure lexicographic with x > y.
enum class MonomialOrder { GradedLex, Lex };

std::strong_ordering compareMonomials(const Monomial& a, const Monomial& b, MonomialOrder ord);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compareMonomials(a, b, MonomialOrder::GradedLex) == std::strong_ordering::less;
    }
};

// Monomials of total degree <= d in grlex-ascending order; T(d) = (d+1)(d+2)/2 of them.
std::vector<Monomial> monomialsUpToDegree(int d);

// Sparse bivariate polynomial over Rational. Terms are stored grlex-keyed and
// never hold zero coefficients; the zero polynomial has an empty term map.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c);

    static MultiPoly term(const Rational& c, const Monomial& m);
    static MultiPoly variableX() { return term(Rational(1), {1, 0}); }
    static MultiPoly variableY() { return term(Rational(1), {0, 1}); }

    bool isZero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Monomial& m) const;
    void setCoefficient(const Monomial& m, const Rational& c);

    Monomial leadingMonomial(MonomialOrder ord) const;  // requires nonzero
    Rational leadingCoefficient(MonomialOrder ord) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    bool operator==(const MultiPoly& o) const = default;

    MultiPoly timesMonomial(const Monomial& m, const Rational& c) const;
    MultiPoly monic(MonomialOrder ord) const;
    // x and y swapped.
    MultiPoly swapped() const;

    Rational evaluate(const Rational& x, const Rational& y) const;
    RatInterval evaluate(const RatInterval& x, const RatInterval& y) const;

    // Coefficient vector over the given monomial list (zeros where absent).
    // Throws if the polynomial has support outside the list.
    RatVector coefficientVector(const std::vector<Monomial>& basis) const;
    static MultiPoly fromCoefficientVector(const RatVector& v, const std::vector<Monomial>& basis);

    // Text form like "x^4 + 6*x - 11/2*y - x^2*y", grlex-descending.
    std::string str() const;
    static MultiPoly parse(std::string_view text);

private:
    TermMap terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

}  // namespace momentlab
