#include "momentlab/groebner.hpp"

#include <algorithm>

namespace momentlab {

DivisionResult divide(const MultiPoly& f, const std::vector<MultiPoly>& divisors, MonomialOrder ord) {
    for (const auto& d : divisors)
        if (d.isZero()) throw ZeroDivisorError("divide: zero divisor");
    DivisionResult res;
    res.quotients.assign(divisors.size(), MultiPoly{});
    std::vector<Monomial> lms(divisors.size());
    std::vector<Rational> lcs(divisors.size());
    for (size_t k = 0; k < divisors.size(); ++k) {
        lms[k] = divisors[k].leadingMonomial(ord);
        lcs[k] = divisors[k].coefficient(lms[k]);
    }
    MultiPoly p = f;
    while (!p.isZero()) {
        const Monomial lm = p.leadingMonomial(ord);
        const Rational lc = p.coefficient(lm);
        bool reduced = false;
        for (size_t k = 0; k < divisors.size(); ++k) {
            if (!lms[k].divides(lm)) continue;
            const Monomial q = lms[k].quotient(lm);
            const Rational c = lc / lcs[k];
            res.quotients[k] = res.quotients[k] + MultiPoly::term(c, q);
            p = p - divisors[k].timesMonomial(q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            res.remainder.setCoefficient(lm, lc);
            p.setCoefficient(lm, Rational(0));
        }
    }
    return res;
}

MultiPoly sPolynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder ord) {
    if (f.isZero() || g.isZero()) throw ZeroDivisorError("sPolynomial: zero input");
    const Monomial lmf = f.leadingMonomial(ord);
    const Monomial lmg = g.leadingMonomial(ord);
    const Monomial l = Monomial::lcm(lmf, lmg);
    return f.timesMonomial(lmf.quotient(l), Rational(1) / f.coefficient(lmf)) -
           g.timesMonomial(lmg.quotient(l), Rational(1) / g.coefficient(lmg));
}

MultiPoly normalForm(const MultiPoly& f, const std::vector<MultiPoly>& groebner, MonomialOrder ord) {
    return divide(f, groebner, ord).remainder;
}

std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens, MonomialOrder ord) {
    std::vector<MultiPoly> basis;
    for (auto& g : gens)
        if (!g.isZero()) basis.push_back(g.monic(ord));
    if (basis.empty()) throw Error("buchberger: no nonzero generators");

    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t a = 0; a < basis.size(); ++a)
        for (size_t b = a + 1; b < basis.size(); ++b) pairs.emplace_back(a, b);

    while (!pairs.empty()) {
        auto [a, b] = pairs.back();
        pairs.pop_back();
        const Monomial la = basis[a].leadingMonomial(ord);
        const Monomial lb = basis[b].leadingMonomial(ord);
        // First criterion: coprime leading monomials give an S-polynomial
        // that reduces to zero.
        if (Monomial::lcm(la, lb) == la * lb) continue;
        MultiPoly rem = normalForm(sPolynomial(basis[a], basis[b], ord), basis, ord);
        if (rem.isZero()) continue;
        basis.push_back(rem.monic(ord));
        const size_t idx = basis.size() - 1;
        for (size_t k = 0; k < idx; ++k) pairs.emplace_back(k, idx);
    }

    // Head-reduce: drop elements whose leading monomial another element's
    // leading monomial divides.
    std::vector<MultiPoly> minimal;
    for (size_t a = 0; a < basis.size(); ++a) {
        const Monomial la = basis[a].leadingMonomial(ord);
        bool redundant = false;
        for (size_t b = 0; b < basis.size(); ++b) {
            if (a == b) continue;
            const Monomial lb = basis[b].leadingMonomial(ord);
            if (lb.divides(la) && !(lb == la && b > a)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) minimal.push_back(basis[a]);
    }

    // Tail-reduce each element against the others.
    std::vector<MultiPoly> reduced(minimal.size());
    for (size_t a = 0; a < minimal.size(); ++a) {
        std::vector<MultiPoly> others;
        for (size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.push_back(minimal[b]);
        reduced[a] = others.empty() ? minimal[a] : normalForm(minimal[a], others, ord).monic(ord);
    }

    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& p, const MultiPoly& q) {
        return compareMonomials(p.leadingMonomial(ord), q.leadingMonomial(ord), ord) ==
               std::strong_ordering::less;
    });
    return reduced;
}

std::optional<std::vector<Monomial>> standardMonomials(const std::vector<MultiPoly>& groebner,
                                                       MonomialOrder ord) {
    int xBound = -1, yBound = -1;
    std::vector<Monomial> lts;
    for (const auto& g : groebner) {
        if (g.isZero()) continue;
        const Monomial lt = g.leadingMonomial(ord);
        lts.push_back(lt);
        if (lt.j == 0) xBound = xBound < 0 ? lt.i : std::min(xBound, lt.i);
        if (lt.i == 0) yBound = yBound < 0 ? lt.j : std::min(yBound, lt.j);
    }
    if (xBound < 0 || yBound < 0) return std::nullopt;  // not zero-dimensional
    std::vector<Monomial> standard;
    for (int i = 0; i < xBound; ++i)
        for (int j = 0; j < yBound; ++j) {
            const Monomial m{i, j};
            bool inLtIdeal = false;
            for (const auto& lt : lts)
                if (lt.divides(m)) {
                    inLtIdeal = true;
                    break;
                }
            if (!inLtIdeal) standard.push_back(m);
        }
    std::sort(standard.begin(), standard.end(), GrlexLess{});
    return standard;
}

}  // namespace momentlab
