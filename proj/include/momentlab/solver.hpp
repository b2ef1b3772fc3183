#pragma once

#include <optional>
#include <string>
#include <vector>

#include "momentlab/moment.hpp"

namespace momentlab {

struct M2SingularError : Error {
    using Error::Error;
};
struct RankOutOfRangeError : Error {
    using Error::Error;
};
struct VandermondeSingularError : Error {
    using Error::Error;
};
struct ReconstructionFailedError : Error {
    using Error::Error;
};
struct SingularSystemError : Error {
    using Error::Error;
};

// Classification of a sextic problem by moment-matrix rank r and variety
// cardinality v (v absent = infinite variety).
struct TableRow {
    int r = 0;
    std::optional<int> v;
    bool extremal = false;
    std::optional<int> maxExtensionOrder;  // k for a maximal extension M(k)
    bool impossible = false;
    bool inSolverScope = false;  // the extremal rows this solver decides
    std::string note;
};

TableRow classify(int r, std::optional<int> v);

enum class BasisCaseTag {
    Rank7Case1,  // basis {1,x,y,x^2,xy,y^2,x^3}
    Rank7Case2,  // ... x^2*y
    Rank7Case3,  // ... x*y^2
    Rank7Case4,  // ... y^3 (swap of case 1)
    Rank8Case1,  // {..., x^3, x^2*y}
    Rank8Case2,  // {..., x^3, x*y^2}
    Rank8Case3,  // {..., x^3, y^3}
    Rank8Case4,  // {..., x^2*y, x*y^2}
    Rank8Case5,  // {..., x^2*y, y^3} (swap of case 2)
    Rank8Case6,  // {..., x*y^2, y^3} (swap of case 1)
};

std::string tagName(BasisCaseTag t);

struct BasisCase {
    int rank = 0;
    BasisCaseTag tag = BasisCaseTag::Rank7Case1;
    std::vector<Monomial> monomials;
    // Quartic leading monomials whose auxiliary polynomials enter the
    // consistency battery for this case.
    std::vector<Monomial> auxiliaryLeads;
    bool viaSwap = false;
    std::optional<BasisCaseTag> swappedTag;
};

// beta'_{ij} = beta_{ji}; an involution.
MomentSequence degreeOneSwap(const MomentSequence& beta);

// Requires M(2) positive definite and rank 7 or 8; reads off which degree-3
// columns are independent.
BasisCase chooseBasisCase(const MomentMatrix& mm);

enum class AuxiliaryRoute { Auto, ForceNumeric };

struct AuxiliaryPolynomial {
    MultiPoly poly;  // lead - combination of basis monomials, vanishing on V
    Monomial lead;
    bool exactPath = false;
};

// The unique polynomial with the given quartic lead and tail in the span of
// the basis monomials that vanishes on the variety. Exact via the rational
// Vandermonde system or the radicalized Groebner quotient whenever possible;
// otherwise solved on enclosures and rationalized, then re-verified.
AuxiliaryPolynomial auxiliaryPolynomial(const std::vector<VarietyPoint>& varietyPts,
                                        const BasisCase& basis, const Monomial& lead,
                                        const std::vector<MultiPoly>& relations,
                                        const SolveOptions& opts = {},
                                        AuxiliaryRoute route = AuxiliaryRoute::Auto);

enum class Verdict { MeasureExists, NoMeasure, OutOfScope, Indeterminate };

std::string verdictName(Verdict v);
int verdictExitCode(Verdict v);

struct Witness {
    enum class Kind { Consistency, Psd, VarietyCondition };
    Kind kind = Kind::Consistency;
    MultiPoly poly;
    Rational value;  // Riesz value (Consistency) or quadratic-form value (Psd)
    std::vector<RatInterval> residuals;  // per variety point; each contains 0
};

struct DensityValue {
    std::optional<Rational> exact;
    RatInterval enclosure;
};

struct Measure {
    std::vector<VarietyPoint> atoms;
    std::vector<DensityValue> densities;
    bool exact = false;
    // max over all moments of the certified reconstruction error bound.
    Rational maxMomentError = Rational(0);
};

struct ConsistencyEntry {
    Monomial multiplier;
    std::string generator;
    Rational value;
};

struct SolverReport {
    Verdict verdict = Verdict::Indeterminate;
    std::optional<PsdCertificate> psd;
    bool m2PositiveDefinite = false;
    int rank = 0;
    std::optional<int> varietyCard;  // absent while unknown
    bool varietyInfinite = false;
    std::optional<BasisCase> basisCase;
    std::vector<MultiPoly> relations;
    std::vector<VarietyPoint> variety;
    std::optional<Certainty> weakConsistency;
    std::vector<MultiPoly> auxiliaries;
    std::vector<ConsistencyEntry> consistencyResults;
    std::optional<Witness> witness;
    std::optional<Measure> measure;
    std::optional<TableRow> classification;
    std::string note;
};

struct SolverConfig {
    SolveOptions solve;
};

// The full decision pipeline for sextic (n = 3) extremal moment problems:
// PSD check, M(2) positivity, rank/relations, variety, r == v, weak
// consistency, case-specific auxiliary battery, verdict, and measure
// extraction on success.
SolverReport decideExtremal(const MomentSequence& beta, const SolverConfig& cfg = {});

// Densities solve the transposed Vandermonde system against the basis
// moments; the reconstruction of every moment is checked.
Measure extractMeasure(const MomentSequence& beta, const std::vector<VarietyPoint>& varietyPts,
                       const std::vector<Monomial>& basisMonomials, const SolveOptions& opts = {});

std::string reportToJson(const SolverReport& rep);
std::string reportToText(const SolverReport& rep);
std::string varietyToJson(const std::vector<MultiPoly>& relations,
                          const std::vector<VarietyPoint>& points, int rank);

}  // namespace momentlab
