#include "momentlab/variety.hpp"

#include <algorithm>

#include "momentlab/matrix.hpp"

namespace momentlab {

int degreeIn(const MultiPoly& f, Variable v) {
    int d = -1;
    for (const auto& [m, c] : f.terms()) d = std::max(d, v == Variable::X ? m.i : m.j);
    return d;
}

UnivariatePoly toUnivariate(const MultiPoly& f, Variable v) {
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : f.terms()) {
        const int other = v == Variable::X ? m.j : m.i;
        const int deg = v == Variable::X ? m.i : m.j;
        if (other != 0) throw Error("toUnivariate: polynomial involves the other variable");
        if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(deg + 1, Rational(0));
        coeffs[deg] = c;
    }
    return UnivariatePoly(std::move(coeffs));
}

MultiPoly fromUnivariate(const UnivariatePoly& u, Variable v) {
    MultiPoly p;
    for (int k = 0; k <= u.degree(); ++k) {
        if (u.coefficient(k) == 0) continue;
        p.setCoefficient(v == Variable::X ? Monomial{k, 0} : Monomial{0, k}, u.coefficient(k));
    }
    return p;
}

namespace {

// Coefficients of f as a polynomial in `elim`; entry k is a univariate
// polynomial in the kept variable.
std::vector<UnivariatePoly> coefficientsIn(const MultiPoly& f, Variable elim) {
    const int d = std::max(degreeIn(f, elim), 0);
    std::vector<std::vector<Rational>> raw(d + 1);
    for (const auto& [m, c] : f.terms()) {
        const int de = elim == Variable::X ? m.i : m.j;
        const int dk = elim == Variable::X ? m.j : m.i;
        if (static_cast<int>(raw[de].size()) <= dk) raw[de].resize(dk + 1, Rational(0));
        raw[de][dk] = c;
    }
    std::vector<UnivariatePoly> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.emplace_back(std::move(r));
    return out;
}

Rational evalSylvesterDet(const std::vector<UnivariatePoly>& fc, const std::vector<UnivariatePoly>& gc,
                          int m, int n, const Rational& t) {
    const int size = m + n;
    RatMatrix s(size, size);
    // rows 0..n-1: descending coefficients of f, shifted
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) {
            const int idx = m - k;
            s.at(r, r + k) = idx < static_cast<int>(fc.size()) ? fc[idx](t) : Rational(0);
        }
    // rows n..n+m-1: descending coefficients of g, shifted
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) {
            const int idx = n - k;
            s.at(n + r, r + k) = idx < static_cast<int>(gc.size()) ? gc[idx](t) : Rational(0);
        }
    return det(s);
}

UnivariatePoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const int n = static_cast<int>(xs.size());
    RatMatrix v(n, n);
    for (int r = 0; r < n; ++r) {
        Rational p(1);
        for (int c = 0; c < n; ++c) {
            v.at(r, c) = p;
            p *= xs[r];
        }
    }
    auto sol = solveLinear(v, ys);
    if (sol.status != LinearSolve::Status::Unique) throw Error("interpolation nodes not distinct");
    return UnivariatePoly(std::move(sol.solution));
}

UnivariatePoly powUni(const UnivariatePoly& base, int e) {
    UnivariatePoly acc = UnivariatePoly::constant(Rational(1));
    for (int k = 0; k < e; ++k) acc = acc * base;
    return acc;
}

}  // namespace

UnivariatePoly sylvesterResultant(const MultiPoly& f, const MultiPoly& g, Variable elim) {
    if (f.isZero() || g.isZero()) throw Error("sylvesterResultant: zero polynomial");
    const Variable keep = elim == Variable::X ? Variable::Y : Variable::X;
    const int m = degreeIn(f, elim);
    const int n = degreeIn(g, elim);
    if (m <= 0 && n <= 0) throw BothConstantError("sylvesterResultant: neither input involves the eliminated variable");
    if (m <= 0) return powUni(toUnivariate(f, keep), n);
    if (n <= 0) return powUni(toUnivariate(g, keep), m);

    const auto fc = coefficientsIn(f, elim);
    const auto gc = coefficientsIn(g, elim);
    const int kf = degreeIn(f, keep), kg = degreeIn(g, keep);
    const int dBound = n * std::max(kf, 0) + m * std::max(kg, 0);

    std::vector<Rational> xs, ys;
    long node = 0;
    while (static_cast<int>(xs.size()) < dBound + 1) {
        Rational t(node);
        xs.push_back(t);
        ys.push_back(evalSylvesterDet(fc, gc, m, n, t));
        node = node <= 0 ? -node + 1 : -node;  // 0, 1, -1, 2, -2, ...
    }
    return interpolate(xs, ys);
}

std::optional<UnivariatePoly> projectionEliminant(const std::vector<MultiPoly>& relations,
                                                  Variable keep) {
    const Variable elim = keep == Variable::X ? Variable::Y : Variable::X;
    UnivariatePoly acc;
    bool have = false;
    auto fold = [&](const UnivariatePoly& p) {
        if (p.isZero() || p.degree() == 0) return;
        acc = have ? gcd(acc, p) : p.normalized();
        have = true;
    };
    for (const auto& q : relations)
        if (degreeIn(q, elim) <= 0 && degreeIn(q, keep) > 0) fold(toUnivariate(q, keep));
    for (size_t a = 0; a < relations.size(); ++a)
        for (size_t b = a + 1; b < relations.size(); ++b) {
            if (degreeIn(relations[a], elim) <= 0 && degreeIn(relations[b], elim) <= 0) continue;
            fold(sylvesterResultant(relations[a], relations[b], elim));
        }
    if (!have) return std::nullopt;
    if (acc.degree() == 0) return acc;  // no common projection at all
    return squarefreePart(acc);
}

namespace {

struct RootEnclosure {
    RatInterval iv;
    std::optional<Rational> exact;
};

std::vector<RootEnclosure> enclosuresOf(const UnivariatePoly& sf, const Rational& tol) {
    std::vector<RootEnclosure> out;
    if (sf.degree() <= 0) return out;
    for (const auto& iv : isolateRealRoots(sf)) {
        RootEnclosure e;
        if (iv.isPoint()) {
            e.exact = iv.lo;
            e.iv = iv;
        } else {
            e.iv = refineRoot(sf, iv, tol);
            if (e.iv.isPoint()) e.exact = e.iv.lo;
        }
        out.push_back(std::move(e));
    }
    return out;
}

RatInterval asInterval(const RootEnclosure& e) {
    return e.exact ? RatInterval(*e.exact) : e.iv;
}

}  // namespace

std::vector<MultiPoly> radicalizedGenerators(const std::vector<MultiPoly>& relations) {
    auto px = projectionEliminant(relations, Variable::X);
    auto py = projectionEliminant(relations, Variable::Y);
    if (!px || !py)
        throw PositiveDimensionalError("relation system is not zero-dimensional (a direction is unbounded)");
    std::vector<MultiPoly> gens = relations;
    gens.push_back(fromUnivariate(*px, Variable::X));
    gens.push_back(fromUnivariate(*py, Variable::Y));
    return gens;
}

std::vector<VarietyPoint> solveSystem(const std::vector<MultiPoly>& relations, const SolveOptions& opts) {
    std::vector<MultiPoly> rels;
    for (const auto& q : relations)
        if (!q.isZero()) rels.push_back(q);
    if (rels.empty()) throw NoRelationsError("solveSystem: no nonzero relations");
    if (rels.size() < 2)
        throw PositiveDimensionalError("solveSystem: a single relation cannot define a finite variety");

    auto px = projectionEliminant(rels, Variable::X);
    auto py = projectionEliminant(rels, Variable::Y);
    if (!px || !py)
        throw PositiveDimensionalError(
            "solveSystem: every pairwise resultant vanished in one direction (positive-dimensional)");

    auto xRoots = enclosuresOf(*px, opts.tol);
    auto yRoots = enclosuresOf(*py, opts.tol);

    struct Candidate {
        size_t xi, yi;
    };
    auto survivors = [&]() {
        std::vector<Candidate> keep;
        for (size_t a = 0; a < xRoots.size(); ++a)
            for (size_t b = 0; b < yRoots.size(); ++b) {
                bool ok = true;
                const bool exact = xRoots[a].exact && yRoots[b].exact;
                for (const auto& q : rels) {
                    if (exact) {
                        if (q.evaluate(*xRoots[a].exact, *yRoots[b].exact) != 0) {
                            ok = false;
                            break;
                        }
                    } else if (!q.evaluate(asInterval(xRoots[a]), asInterval(yRoots[b])).containsZero()) {
                        ok = false;
                        break;
                    }
                }
                if (ok) keep.push_back({a, b});
            }
        return keep;
    };

    std::vector<Candidate> keep = survivors();

    // If anything survived on interval evidence alone, cross-check the count
    // against the number of distinct complex zeros and tighten enclosures
    // until no spurious pairing is left (true points always survive).
    bool anyInexact = std::any_of(keep.begin(), keep.end(), [&](const Candidate& c) {
        return !(xRoots[c.xi].exact && yRoots[c.yi].exact);
    });
    if (anyInexact) {
        auto gb = buchberger(radicalizedGenerators(rels), MonomialOrder::GradedLex);
        auto standard = standardMonomials(gb, MonomialOrder::GradedLex);
        const int complexCount = standard ? static_cast<int>(standard->size()) : -1;
        Rational radius = opts.tol;
        const Rational floorRadius =
            Rational(1) / ratPow(Rational(2), static_cast<unsigned>(opts.precisionCapBits));
        while (complexCount >= 0 && static_cast<int>(keep.size()) > complexCount &&
               radius > floorRadius) {
            radius /= 4096;  // 12 bits per escalation round
            for (auto& e : xRoots)
                if (!e.exact) e.iv = refineRoot(*px, e.iv, radius);
            for (auto& e : yRoots)
                if (!e.exact) e.iv = refineRoot(*py, e.iv, radius);
            keep = survivors();
        }
        if (complexCount >= 0 && static_cast<int>(keep.size()) > complexCount)
            throw Error("solveSystem: could not separate spurious candidates at the precision cap");
    }

    std::vector<VarietyPoint> points;
    for (const auto& c : keep) {
        VarietyPoint p;
        p.exactX = xRoots[c.xi].exact;
        p.exactY = yRoots[c.yi].exact;
        p.x = asInterval(xRoots[c.xi]);
        p.y = asInterval(yRoots[c.yi]);
        for (const auto& q : rels) {
            if (p.isExact())
                p.residuals.emplace_back(Rational(0));
            else
                p.residuals.push_back(q.evaluate(p.x, p.y));
        }
        points.push_back(std::move(p));
    }
    // Deterministic order: by x enclosure, then y.
    std::sort(points.begin(), points.end(), [](const VarietyPoint& a, const VarietyPoint& b) {
        if (a.x.lo != b.x.lo) return a.x.lo < b.x.lo;
        return a.y.lo < b.y.lo;
    });
    return points;
}

CardinalityReport verifyCardinality(const std::vector<VarietyPoint>& points,
                                    const std::vector<MultiPoly>& relations) {
    CardinalityReport rep;
    rep.cardV = static_cast<int>(points.size());
    rep.pairwiseDisjoint = true;
    for (size_t a = 0; a < points.size() && rep.pairwiseDisjoint; ++a)
        for (size_t b = a + 1; b < points.size(); ++b) {
            if (!disjoint(points[a].x, points[b].x) && !disjoint(points[a].y, points[b].y)) {
                rep.pairwiseDisjoint = false;
                break;
            }
        }
    std::vector<MultiPoly> rels;
    for (const auto& q : relations)
        if (!q.isZero()) rels.push_back(q);
    if (rels.empty()) return rep;

    auto gb = buchberger(rels, MonomialOrder::GradedLex);
    if (auto standard = standardMonomials(gb, MonomialOrder::GradedLex))
        rep.quotientDim = static_cast<int>(standard->size());

    try {
        auto rgb = buchberger(radicalizedGenerators(rels), MonomialOrder::GradedLex);
        if (auto standard = standardMonomials(rgb, MonomialOrder::GradedLex))
            rep.radicalDim = static_cast<int>(standard->size());
    } catch (const PositiveDimensionalError&) {
        // leave radicalDim empty
    }
    if (rep.radicalDim) {
        rep.complexGap = *rep.radicalDim - rep.cardV;
        rep.complete = rep.pairwiseDisjoint && rep.complexGap == 0;
    }
    return rep;
}

}  // namespace momentlab
