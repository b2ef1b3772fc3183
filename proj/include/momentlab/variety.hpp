#pragma once

#include <optional>
#include <vector>

#include "momentlab/groebner.hpp"
#include "momentlab/poly.hpp"
#include "momentlab/unipoly.hpp"

namespace momentlab {

struct BothConstantError : Error {
    using Error::Error;
};
struct PositiveDimensionalError : Error {
    using Error::Error;
};
struct NoRelationsError : Error {
    using Error::Error;
};

enum class Variable { X, Y };

// A certified real point of the variety: exact coordinates when rational,
// otherwise an enclosure whose radius met the refinement target. Every
// residual enclosure contains 0 (exactly 0 for fully rational points).
struct VarietyPoint {
    RatInterval x, y;
    std::optional<Rational> exactX, exactY;
    std::vector<RatInterval> residuals;

    bool isExact() const { return exactX.has_value() && exactY.has_value(); }
};

int degreeIn(const MultiPoly& f, Variable v);
UnivariatePoly toUnivariate(const MultiPoly& f, Variable v);  // f must only involve v
MultiPoly fromUnivariate(const UnivariatePoly& u, Variable v);

// Exact resultant eliminating `elim`, computed by evaluation/interpolation of
// the Sylvester determinant. Roots of the result contain every projection of
// a common zero onto the kept variable. When one input does not involve the
// eliminated variable the conventional power formula applies.
UnivariatePoly sylvesterResultant(const MultiPoly& f, const MultiPoly& g, Variable elim);

// Squarefree generator of the candidate projections onto `keep`: the gcd of
// all nonzero pairwise resultants (plus any relation already univariate in
// `keep`). nullopt when no pair bounds that direction.
std::optional<UnivariatePoly> projectionEliminant(const std::vector<MultiPoly>& relations,
                                                  Variable keep);

struct SolveOptions {
    Rational tol = Rational(1, 1000000000000L);  // enclosure radius target, 1e-12
    int precisionCapBits = 1024;                 // refinement floor 2^-cap before giving up
};

// Real solutions of the relation system (zero-dimensional case): eliminate
// each variable by resultants, isolate the real eliminant roots, pair the
// candidates and keep exactly those whose residuals are certified. Rational
// coordinates are detected and verified exactly.
std::vector<VarietyPoint> solveSystem(const std::vector<MultiPoly>& relations,
                                      const SolveOptions& opts = {});

// relations + squarefree eliminants in x and y. The result generates the
// radical of the relation ideal (it contains a squarefree univariate in each
// variable), so its quotient dimension counts distinct complex zeros.
std::vector<MultiPoly> radicalizedGenerators(const std::vector<MultiPoly>& relations);

struct CardinalityReport {
    int cardV = 0;
    bool pairwiseDisjoint = false;
    std::optional<int> quotientDim;  // dim over the relation ideal itself
    std::optional<int> radicalDim;   // dim over its radical = # distinct complex zeros
    // True when cardV == radicalDim: every complex zero is real and none of
    // the returned points is spurious or missing.
    bool complete = false;
    int complexGap = 0;  // radicalDim - cardV when both known
};

CardinalityReport verifyCardinality(const std::vector<VarietyPoint>& points,
                                    const std::vector<MultiPoly>& relations);

}  // namespace momentlab
