#pragma once

#include <optional>
#include <vector>

#include "momentlab/poly.hpp"

namespace momentlab {

struct ZeroDivisorError : Error {
    using Error::Error;
};

struct DivisionResult {
    std::vector<MultiPoly> quotients;  // one per divisor
    MultiPoly remainder;
};

// Multivariate division: f = sum quotients[i]*divisors[i] + remainder, where
// no remainder monomial is divisible by any divisor's leading monomial and
// multideg(quotients[i]*divisors[i]) <= multideg(f) for nonzero products.
// Reduction always uses the first divisor in list order whose leading
// monomial divides the current leading term.
DivisionResult divide(const MultiPoly& f, const std::vector<MultiPoly>& divisors, MonomialOrder ord);

MultiPoly sPolynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder ord);

// Reduced Groebner basis: monic elements, pairwise head- and tail-reduced,
// sorted by ascending leading monomial. Deterministic.
std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens, MonomialOrder ord);

// Unique remainder modulo a Groebner basis; zero iff f lies in the ideal.
MultiPoly normalForm(const MultiPoly& f, const std::vector<MultiPoly>& groebner, MonomialOrder ord);

// Monomials outside the leading-term ideal, in grlex-ascending order, when
// the ideal is zero-dimensional (pure powers of both variables appear among
// the leading terms); nullopt otherwise. The count is the dimension of the
// quotient ring, i.e. the number of complex zeros with multiplicity for a
// complete intersection and the number of distinct zeros for a radical ideal.
std::optional<std::vector<Monomial>> standardMonomials(const std::vector<MultiPoly>& groebner,
                                                       MonomialOrder ord);

}  // namespace momentlab
