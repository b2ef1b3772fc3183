#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "momentlab/matrix.hpp"
#include "momentlab/poly.hpp"
#include "momentlab/variety.hpp"

namespace momentlab {

struct IncompleteSequenceError : Error {
    using Error::Error;
};
struct DegreeTooHighError : Error {
    using Error::Error;
};
struct NotExtremalError : Error {
    using Error::Error;
};
struct DegreeOverflowError : Error {
    using Error::Error;
};
struct LengthMismatchError : Error {
    using Error::Error;
};
struct NonpositiveDensityError : Error {
    using Error::Error;
};

// Degree-2n truncated moment sequence beta_{ij}, 0 <= i+j <= 2n. Always
// complete: construction zero-fills, loading validates.
class MomentSequence {
public:
    explicit MomentSequence(int n);

    int order() const { return n_; }  // half-degree: matrix order n
    const Rational& at(int i, int j) const;
    void set(int i, int j, const Rational& v);

    // {"n": 3, "moments": {"0,0": "14", "1,0": "7/2", ...}}; a missing index
    // fails with every absent (i,j) listed.
    static MomentSequence fromJson(const std::string& text);
    std::string toJson() const;

    bool operator==(const MomentSequence& o) const = default;

private:
    int n_;
    std::map<std::pair<int, int>, Rational> m_;
};

// Riesz functional: sum of a_{ij} beta_{ij} over the terms of p.
Rational riesz(const MomentSequence& beta, const MultiPoly& p);

struct MomentMatrix {
    MomentSequence source;
    RatMatrix matrix;                     // T(n) x T(n), T(n) = (n+1)(n+2)/2
    std::vector<Monomial> columnLabels;   // 1, x, y, x^2, x*y, y^2, ... grlex
    int rank = 0;
    std::vector<Monomial> basisMonomials;  // greedy leftmost independent columns
    // Canonical column relations: one per dependent column, monic in that
    // column's monomial, tail supported on earlier independent columns.
    std::vector<MultiPoly> relations;
};

MomentMatrix buildMomentMatrix(const MomentSequence& beta);

struct RecursivenessReport {
    bool recursive = true;
    struct Violation {
        size_t relationIndex;
        Monomial multiplier;
    };
    std::vector<Violation> violations;
};

// Checks that every product (monomial multiplier) * (column relation) of
// degree <= n is again a kernel vector of the moment matrix.
RecursivenessReport checkRecursive(const MomentMatrix& mm);

struct VandermondeSlice {
    std::vector<VarietyPoint> points;
    std::vector<Monomial> monomials;
    IntervalMatrix numeric;              // always populated, enclosures
    std::optional<RatMatrix> exact;      // when every point is rational
};

VandermondeSlice vandermonde(const std::vector<VarietyPoint>& points,
                             const std::vector<Monomial>& monos);

enum class Certainty { True, False, Indeterminate };

struct WeakConsistencyResult {
    Certainty value = Certainty::Indeterminate;
    std::vector<Monomial> basis;
    // When False: an exact polynomial supported on the basis monomials that
    // vanishes on the variety yet is not a column relation.
    std::optional<MultiPoly> failureWitness;
};

// Extremal weak-consistency test: invertibility of the Vandermonde
// compression to the basis of the column space. Exact when the points are
// rational or when every complex zero of the relation ideal is real;
// otherwise certified by interval determinant with refinement escalation.
WeakConsistencyResult checkWeakConsistency(const MomentMatrix& mm,
                                           const std::vector<VarietyPoint>& variety,
                                           const SolveOptions& opts = {});

struct ConsistencyReport {
    bool consistent = true;
    struct Entry {
        Monomial multiplier;
        size_t generatorIndex;
        Rational value;
    };
    std::vector<Entry> checks;      // every evaluated pair
    std::vector<Entry> violations;  // nonzero values
};

// Evaluates the Riesz functional on every product x^i y^j * generator with
// i+j up to the generator's multiplier-degree budget.
ConsistencyReport checkConsistencyGenerators(const MomentSequence& beta,
                                             const std::vector<MultiPoly>& generators,
                                             const std::vector<int>& maxMultiplierDegree);

MomentSequence momentsFromAtoms(const std::vector<std::pair<Rational, Rational>>& atoms,
                                const std::vector<Rational>& densities, int n);

}  // namespace momentlab
