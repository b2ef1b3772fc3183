#include "momentlab/solver.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace momentlab {

using ordered_json = nlohmann::ordered_json;

std::string tagName(BasisCaseTag t) {
    switch (t) {
        case BasisCaseTag::Rank7Case1: return "rank-7 case 1";
        case BasisCaseTag::Rank7Case2: return "rank-7 case 2";
        case BasisCaseTag::Rank7Case3: return "rank-7 case 3";
        case BasisCaseTag::Rank7Case4: return "rank-7 case 4";
        case BasisCaseTag::Rank8Case1: return "rank-8 case 1";
        case BasisCaseTag::Rank8Case2: return "rank-8 case 2";
        case BasisCaseTag::Rank8Case3: return "rank-8 case 3";
        case BasisCaseTag::Rank8Case4: return "rank-8 case 4";
        case BasisCaseTag::Rank8Case5: return "rank-8 case 5";
        case BasisCaseTag::Rank8Case6: return "rank-8 case 6";
    }
    return "?";
}

std::string verdictName(Verdict v) {
    switch (v) {
        case Verdict::MeasureExists: return "MeasureExists";
        case Verdict::NoMeasure: return "NoMeasure";
        case Verdict::OutOfScope: return "OutOfScope";
        case Verdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

int verdictExitCode(Verdict v) {
    switch (v) {
        case Verdict::MeasureExists: return 0;
        case Verdict::NoMeasure: return 1;
        case Verdict::OutOfScope: return 2;
        case Verdict::Indeterminate: return 3;
    }
    return 3;
}

TableRow classify(int r, std::optional<int> v) {
    TableRow row;
    row.r = r;
    row.v = v;
    row.extremal = v.has_value() && *v == r;
    if (r < 7 || r > 10) {
        row.note = "rank outside 7..10: not covered by the sextic classification (M(2) invertible assumed)";
        return row;
    }
    if (v && *v < r) {
        row.note = "violates the variety condition (card V < rank): no representing measure";
        return row;
    }
    if (!v) {
        row.note = "infinite variety";
        return row;
    }
    const int vc = *v;
    if (r == 7 && vc <= 9) {
        row.maxExtensionOrder = 4 + (vc - 7);
        row.note = vc == 7 ? "extremal; maximal extension M(4)"
                           : "maximal extension M(" + std::to_string(*row.maxExtensionOrder) + ")";
        row.inSolverScope = vc == 7;
        return row;
    }
    if (r == 8 && vc <= 9) {
        row.maxExtensionOrder = 4 + (vc - 8);
        row.note = vc == 8 ? "extremal; maximal extension M(4)"
                           : "maximal extension M(" + std::to_string(*row.maxExtensionOrder) + ")";
        row.inSolverScope = vc == 8;
        return row;
    }
    if (r == 9) {
        row.impossible = true;
        row.note = "impossible: a single column relation makes the variety an algebraic curve, hence infinite";
        return row;
    }
    if (r == 10) {
        row.impossible = true;
        row.note = "impossible: with no column relations the variety is the whole plane";
        return row;
    }
    row.note = "finite cardinality beyond the cubic-pencil bound: not a realizable configuration";
    row.impossible = true;
    return row;
}

MomentSequence degreeOneSwap(const MomentSequence& beta) {
    MomentSequence out(beta.order());
    for (int d = 0; d <= 2 * beta.order(); ++d)
        for (int j = 0; j <= d; ++j) out.set(d - j, j, beta.at(j, d - j));
    return out;
}

namespace {

const Monomial kX3{3, 0}, kX2Y{2, 1}, kXY2{1, 2}, kY3{0, 3};
const Monomial kX4{4, 0}, kX3Y{3, 1}, kY4{0, 4}, kX2Y2{2, 2};

bool basisContains(const std::vector<Monomial>& basis, const Monomial& m) {
    return std::find(basis.begin(), basis.end(), m) != basis.end();
}

}  // namespace

BasisCase chooseBasisCase(const MomentMatrix& mm) {
    const int n = mm.source.order();
    if (n != 3) throw RankOutOfRangeError("chooseBasisCase: sextic moment matrices only");
    // M(2) block: the first 6 rows/columns in graded order.
    RatMatrix m2(6, 6);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) m2.at(r, c) = mm.matrix.at(r, c);
    const auto cert = psdCheck(m2);
    if (!cert.isPsd || cert.rank != 6)
        throw M2SingularError("chooseBasisCase: M(2) is not positive definite");
    if (mm.rank != 7 && mm.rank != 8)
        throw RankOutOfRangeError("chooseBasisCase: rank must be 7 or 8, got " +
                                  std::to_string(mm.rank));

    BasisCase bc;
    bc.rank = mm.rank;
    bc.monomials = mm.basisMonomials;
    const bool hasX3 = basisContains(bc.monomials, kX3);
    const bool hasX2Y = basisContains(bc.monomials, kX2Y);
    const bool hasXY2 = basisContains(bc.monomials, kXY2);
    const bool hasY3 = basisContains(bc.monomials, kY3);

    if (mm.rank == 7) {
        if (hasX3) {
            bc.tag = BasisCaseTag::Rank7Case1;
            bc.auxiliaryLeads = {kX4};
        } else if (hasX2Y) {
            bc.tag = BasisCaseTag::Rank7Case2;
        } else if (hasXY2) {
            bc.tag = BasisCaseTag::Rank7Case3;
        } else if (hasY3) {
            bc.tag = BasisCaseTag::Rank7Case4;
            bc.viaSwap = true;
            bc.swappedTag = BasisCaseTag::Rank7Case1;
        } else {
            throw RankOutOfRangeError("chooseBasisCase: no independent degree-3 column at rank 7");
        }
        return bc;
    }
    if (hasX3 && hasX2Y) {
        bc.tag = BasisCaseTag::Rank8Case1;
        bc.auxiliaryLeads = {kX4, kX3Y};
    } else if (hasX3 && hasXY2) {
        bc.tag = BasisCaseTag::Rank8Case2;
        bc.auxiliaryLeads = {kX4};
    } else if (hasX3 && hasY3) {
        bc.tag = BasisCaseTag::Rank8Case3;
        bc.auxiliaryLeads = {kX4, kY4};
    } else if (hasX2Y && hasXY2) {
        bc.tag = BasisCaseTag::Rank8Case4;
        // The theorem's lead first; the quartic pure-power lead is tested as
        // well, so the battery covers both known formulations of this case.
        bc.auxiliaryLeads = {kX2Y2, kX4};
    } else if (hasX2Y && hasY3) {
        bc.tag = BasisCaseTag::Rank8Case5;
        bc.viaSwap = true;
        bc.swappedTag = BasisCaseTag::Rank8Case2;
    } else if (hasXY2 && hasY3) {
        bc.tag = BasisCaseTag::Rank8Case6;
        bc.viaSwap = true;
        bc.swappedTag = BasisCaseTag::Rank8Case1;
    } else {
        throw RankOutOfRangeError("chooseBasisCase: degree-3 independence pattern not recognized");
    }
    return bc;
}

namespace {

RatInterval pointCoord(const VarietyPoint& p, Variable v) {
    if (v == Variable::X) return p.exactX ? RatInterval(*p.exactX) : p.x;
    return p.exactY ? RatInterval(*p.exactY) : p.y;
}

RatInterval boxEvaluate(const MultiPoly& q, const VarietyPoint& p) {
    if (p.isExact()) return RatInterval(q.evaluate(*p.exactX, *p.exactY));
    return q.evaluate(pointCoord(p, Variable::X), pointCoord(p, Variable::Y));
}

std::vector<RatInterval> residualsAt(const MultiPoly& q, const std::vector<VarietyPoint>& pts) {
    std::vector<RatInterval> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(boxEvaluate(q, p));
    return out;
}

bool vanishesOn(const MultiPoly& q, const std::vector<VarietyPoint>& pts) {
    for (const auto& p : pts) {
        if (p.isExact()) {
            if (q.evaluate(*p.exactX, *p.exactY) != 0) return false;
        } else if (!boxEvaluate(q, p).containsZero()) {
            return false;
        }
    }
    return true;
}

MultiPoly auxiliaryFromTail(const Monomial& lead, const RatVector& tail,
                            const std::vector<Monomial>& basis) {
    MultiPoly s = MultiPoly::term(Rational(1), lead);
    for (size_t k = 0; k < basis.size(); ++k) s.setCoefficient(basis[k], -tail[k]);
    return s;
}

}  // namespace

AuxiliaryPolynomial auxiliaryPolynomial(const std::vector<VarietyPoint>& varietyPts,
                                        const BasisCase& basis, const Monomial& lead,
                                        const std::vector<MultiPoly>& relations,
                                        const SolveOptions& opts, AuxiliaryRoute route) {
    const auto& monos = basis.monomials;
    const size_t v = varietyPts.size();
    if (v == 0) throw VandermondeSingularError("auxiliaryPolynomial: no variety points");

    const auto slice = vandermonde(varietyPts, monos);

    if (route != AuxiliaryRoute::ForceNumeric && slice.exact) {
        RatVector rhs(v);
        for (size_t k = 0; k < v; ++k)
            rhs[k] = ratPow(*varietyPts[k].exactX, static_cast<unsigned>(lead.i)) *
                     ratPow(*varietyPts[k].exactY, static_cast<unsigned>(lead.j));
        const auto sol = solveLinear(*slice.exact, rhs);
        if (sol.status != LinearSolve::Status::Unique)
            throw VandermondeSingularError("auxiliaryPolynomial: Vandermonde compression is singular");
        MultiPoly s = auxiliaryFromTail(lead, sol.solution, monos);
        if (!vanishesOn(s, varietyPts))
            throw Error("internal: exact auxiliary fails to vanish on the variety");
        return {std::move(s), lead, true};
    }

    if (route != AuxiliaryRoute::ForceNumeric && !relations.empty()) {
        // Exact route through the radicalized quotient: valid whenever every
        // complex zero of the relation ideal is real.
        try {
            auto gb = buchberger(radicalizedGenerators(relations), MonomialOrder::GradedLex);
            auto standard = standardMonomials(gb, MonomialOrder::GradedLex);
            if (standard && standard->size() == v) {
                const int dim = static_cast<int>(v);
                RatMatrix nf(dim, static_cast<int>(monos.size()));
                for (size_t c = 0; c < monos.size(); ++c) {
                    const MultiPoly col = normalForm(MultiPoly::term(Rational(1), monos[c]), gb,
                                                     MonomialOrder::GradedLex);
                    const RatVector vec = col.coefficientVector(*standard);
                    for (int r = 0; r < dim; ++r) nf.at(r, static_cast<int>(c)) = vec[r];
                }
                const MultiPoly leadNf =
                    normalForm(MultiPoly::term(Rational(1), lead), gb, MonomialOrder::GradedLex);
                const auto sol = solveLinear(nf, leadNf.coefficientVector(*standard));
                if (sol.status != LinearSolve::Status::Unique)
                    throw VandermondeSingularError(
                        "auxiliaryPolynomial: basis monomials do not span the quotient (Vandermonde singular)");
                MultiPoly s = auxiliaryFromTail(lead, sol.solution, monos);
                if (!vanishesOn(s, varietyPts))
                    throw Error("internal: quotient-route auxiliary fails to vanish on the variety");
                return {std::move(s), lead, true};
            }
        } catch (const PositiveDimensionalError&) {
            // fall through to the numeric route
        }
    }

    // Numeric fallback: solve the enclosure system, rationalize each
    // coefficient by the simplest rational in its box, verify, and widen the
    // search (tighter boxes) on failure.
    auto px = projectionEliminant(relations, Variable::X);
    auto py = projectionEliminant(relations, Variable::Y);
    std::vector<VarietyPoint> pts = varietyPts;
    Rational radius = opts.tol;
    const Rational floorRadius =
        Rational(1) / ratPow(Rational(2), static_cast<unsigned>(opts.precisionCapBits));
    for (;;) {
        const auto sliceNow = vandermonde(pts, monos);
        IntervalVector rhs;
        rhs.reserve(v);
        for (const auto& p : pts)
            rhs.push_back(pointCoord(p, Variable::X).power(static_cast<unsigned>(lead.i)) *
                          pointCoord(p, Variable::Y).power(static_cast<unsigned>(lead.j)));
        if (auto sol = intervalSolve(sliceNow.numeric, rhs)) {
            RatVector tail(v);
            bool pinned = true;
            for (size_t k = 0; k < v; ++k) {
                tail[k] = simplestRationalIn((*sol)[k].lo, (*sol)[k].hi);
                if (!(*sol)[k].isPoint() && (*sol)[k].width() > Rational(1, 1000000)) pinned = false;
            }
            if (pinned) {
                MultiPoly s = auxiliaryFromTail(lead, tail, monos);
                if (vanishesOn(s, pts)) return {std::move(s), lead, false};
            }
        }
        if (radius <= floorRadius || !px || !py)
            throw ReconstructionFailedError(
                "auxiliaryPolynomial: could not certify rational coefficients at the precision cap");
        radius /= 4096;
        for (auto& p : pts) {
            if (!p.exactX) p.x = refineRoot(*px, p.x, radius);
            if (!p.exactY) p.y = refineRoot(*py, p.y, radius);
        }
    }
}

Measure extractMeasure(const MomentSequence& beta, const std::vector<VarietyPoint>& varietyPts,
                       const std::vector<Monomial>& basisMonomials, const SolveOptions& opts) {
    (void)opts;
    const size_t v = varietyPts.size();
    if (v == 0) throw SingularSystemError("extractMeasure: no atoms");
    if (basisMonomials.size() != v)
        throw SingularSystemError("extractMeasure: extremal extraction needs card V == |basis|");
    for (const auto& m : basisMonomials)
        if (m.degree() > beta.order())
            throw DegreeTooHighError("extractMeasure: basis monomial beyond matrix order");

    Measure out;
    out.atoms = varietyPts;
    const auto slice = vandermonde(varietyPts, basisMonomials);
    RatVector rhs(v);
    for (size_t k = 0; k < v; ++k)
        rhs[k] = beta.at(basisMonomials[k].i, basisMonomials[k].j);

    if (slice.exact) {
        const auto sol = solveLinear(slice.exact->transpose(), rhs);
        if (sol.status != LinearSolve::Status::Unique)
            throw SingularSystemError("extractMeasure: transposed Vandermonde system is singular");
        out.exact = true;
        for (const auto& d : sol.solution) out.densities.push_back({d, RatInterval(d)});
        Rational worst(0);
        for (int deg = 0; deg <= 2 * beta.order(); ++deg)
            for (int j = 0; j <= deg; ++j) {
                const int i = deg - j;
                Rational recon(0);
                for (size_t k = 0; k < v; ++k)
                    recon += sol.solution[k] * ratPow(*varietyPts[k].exactX, static_cast<unsigned>(i)) *
                             ratPow(*varietyPts[k].exactY, static_cast<unsigned>(j));
                worst = std::max(worst, ratAbs(recon - beta.at(i, j)));
            }
        out.maxMomentError = worst;
        return out;
    }

    IntervalMatrix wt(v, IntervalVector(v, RatInterval(Rational(0))));
    for (size_t r = 0; r < v; ++r)
        for (size_t c = 0; c < v; ++c) wt[r][c] = slice.numeric[c][r];
    IntervalVector rhsIv;
    rhsIv.reserve(v);
    for (const auto& r : rhs) rhsIv.emplace_back(r);
    const auto sol = intervalSolve(wt, rhsIv);
    if (!sol)
        throw SingularSystemError(
            "extractMeasure: transposed Vandermonde system not certifiably invertible");
    for (const auto& d : *sol) out.densities.push_back({std::nullopt, d});
    Rational worst(0);
    for (int deg = 0; deg <= 2 * beta.order(); ++deg)
        for (int j = 0; j <= deg; ++j) {
            const int i = deg - j;
            RatInterval recon{Rational(0)};
            for (size_t k = 0; k < v; ++k)
                recon += (*sol)[k] * pointCoord(varietyPts[k], Variable::X).power(static_cast<unsigned>(i)) *
                         pointCoord(varietyPts[k], Variable::Y).power(static_cast<unsigned>(j));
            const Rational b = beta.at(i, j);
            worst = std::max(worst, std::max(ratAbs(recon.lo - b), ratAbs(recon.hi - b)));
        }
    out.maxMomentError = worst;
    return out;
}

namespace {

VarietyPoint swapPoint(const VarietyPoint& p, const std::vector<MultiPoly>& newRelations) {
    VarietyPoint q;
    q.x = p.y;
    q.y = p.x;
    q.exactX = p.exactY;
    q.exactY = p.exactX;
    for (const auto& rel : newRelations) q.residuals.push_back(boxEvaluate(rel, q));
    return q;
}

std::optional<Witness> varietyConditionWitness(const MomentMatrix& mm,
                                               const std::vector<VarietyPoint>& points,
                                               const MomentSequence& beta) {
    const auto slice = vandermonde(points, mm.columnLabels);
    if (!slice.exact) return std::nullopt;
    for (const auto& w : kernelBasis(*slice.exact)) {
        const RatVector image = mm.matrix.apply(w);
        for (size_t row = 0; row < image.size(); ++row) {
            if (image[row] == 0) continue;
            const MultiPoly p = MultiPoly::fromCoefficientVector(w, mm.columnLabels);
            const MultiPoly poly = p.timesMonomial(mm.columnLabels[row], Rational(1));
            Witness wit;
            wit.kind = Witness::Kind::Consistency;
            wit.poly = poly;
            wit.value = riesz(beta, poly);
            wit.residuals = residualsAt(poly, points);
            if (wit.value != 0) return wit;
        }
    }
    return std::nullopt;
}

void appendBattery(SolverReport& rep, const ConsistencyReport& battery,
                   const std::vector<MultiPoly>& generators) {
    for (const auto& e : battery.checks)
        rep.consistencyResults.push_back({e.multiplier, generators[e.generatorIndex].str(), e.value});
}

SolverReport decideExtremalImpl(const MomentSequence& beta, const SolverConfig& cfg, bool allowSwap);

void runCaseBattery(SolverReport& rep, const MomentSequence& beta, const MomentMatrix& mm,
                    const BasisCase& bc, const SolverConfig& cfg) {
    const auto wc = checkWeakConsistency(mm, rep.variety, cfg.solve);
    rep.weakConsistency = wc.value;
    if (wc.value == Certainty::False) {
        const MultiPoly p = *wc.failureWitness;
        for (const auto& mult : monomialsUpToDegree(beta.order())) {
            const MultiPoly prod = p.timesMonomial(mult, Rational(1));
            const Rational val = riesz(beta, prod);
            if (val != 0) {
                rep.verdict = Verdict::NoMeasure;
                rep.witness = Witness{Witness::Kind::Consistency, prod, val, residualsAt(prod, rep.variety)};
                rep.note = "weakly inconsistent: a polynomial vanishing on the variety is not a column relation";
                return;
            }
        }
        rep.verdict = Verdict::Indeterminate;
        rep.note = "internal: weak-consistency failure produced no Riesz witness";
        return;
    }
    if (wc.value == Certainty::Indeterminate) {
        rep.verdict = Verdict::Indeterminate;
        rep.note = "weak consistency undecided at the precision cap";
        return;
    }

    // Column-relation battery: forced to vanish by the moment-matrix identity.
    // Degree-3 relations take monomial multipliers up to degree 3.
    std::vector<int> budgets;
    for (const auto& q : mm.relations) budgets.push_back(2 * beta.order() - q.degree());
    const auto relBattery = checkConsistencyGenerators(beta, mm.relations, budgets);
    appendBattery(rep, relBattery, mm.relations);
    if (!relBattery.consistent)
        throw Error("internal: the column-relation Riesz battery must vanish identically");

    std::optional<Witness> violation;
    for (const auto& lead : bc.auxiliaryLeads) {
        AuxiliaryPolynomial aux;
        try {
            aux = auxiliaryPolynomial(rep.variety, bc, lead, mm.relations, cfg.solve);
        } catch (const ReconstructionFailedError& e) {
            rep.verdict = Verdict::Indeterminate;
            rep.note = e.what();
            return;
        } catch (const VandermondeSingularError& e) {
            rep.verdict = Verdict::Indeterminate;
            rep.note = e.what();
            return;
        }
        rep.auxiliaries.push_back(aux.poly);
        const auto battery = checkConsistencyGenerators(beta, {aux.poly}, {2});
        appendBattery(rep, battery, {aux.poly});
        if (!battery.consistent && !violation) {
            const auto& e = battery.violations.front();
            const MultiPoly prod = aux.poly.timesMonomial(e.multiplier, Rational(1));
            violation = Witness{Witness::Kind::Consistency, prod, e.value, residualsAt(prod, rep.variety)};
        }
    }
    if (violation) {
        rep.verdict = Verdict::NoMeasure;
        rep.witness = std::move(violation);
        rep.note = "consistency fails on an auxiliary polynomial vanishing on the variety";
        return;
    }

    // Consistent: the measure exists; extract and validate it.
    try {
        Measure m = extractMeasure(beta, rep.variety, bc.monomials, cfg.solve);
        bool positive = true, undecided = false;
        for (const auto& d : m.densities) {
            if (d.exact) {
                if (*d.exact <= 0) positive = false;
            } else if (d.enclosure.strictlyPositive()) {
                // fine
            } else if (d.enclosure.containsZero()) {
                undecided = true;
            } else {
                positive = false;
            }
        }
        if (!positive || undecided) {
            rep.verdict = Verdict::Indeterminate;
            rep.measure = std::move(m);
            rep.note = positive ? "a density enclosure straddles zero at this precision"
                                : "extraction produced a nonpositive density";
            return;
        }
        rep.verdict = Verdict::MeasureExists;
        rep.measure = std::move(m);
    } catch (const SingularSystemError& e) {
        rep.verdict = Verdict::Indeterminate;
        rep.note = e.what();
    }
}

SolverReport decideExtremalImpl(const MomentSequence& beta, const SolverConfig& cfg, bool allowSwap) {
    SolverReport rep;
    if (beta.order() != 3) {
        rep.verdict = Verdict::OutOfScope;
        rep.note = "solver accepts sextic input (n = 3) only";
        return rep;
    }
    const MomentMatrix mm = buildMomentMatrix(beta);
    rep.rank = mm.rank;
    rep.relations = mm.relations;
    rep.psd = psdCheck(mm.matrix);
    if (!rep.psd->isPsd) {
        rep.verdict = Verdict::NoMeasure;
        const MultiPoly p = MultiPoly::fromCoefficientVector(*rep.psd->failureWitness, mm.columnLabels);
        rep.witness = Witness{Witness::Kind::Psd, p, quadraticForm(mm.matrix, *rep.psd->failureWitness), {}};
        rep.note = "moment matrix is not positive semidefinite";
        return rep;
    }

    RatMatrix m2(6, 6);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) m2.at(r, c) = mm.matrix.at(r, c);
    const auto m2cert = psdCheck(m2);
    rep.m2PositiveDefinite = m2cert.isPsd && m2cert.rank == 6;
    if (!rep.m2PositiveDefinite) {
        rep.verdict = Verdict::OutOfScope;
        rep.note = "M(2) is singular: quartic-case reduction is out of scope";
        return rep;
    }
    if (mm.rank < 7) {
        rep.verdict = Verdict::OutOfScope;
        rep.classification = classify(mm.rank, std::nullopt);
        rep.note = "rank below 7 with M(2) positive definite: out of solver scope";
        return rep;
    }

    try {
        rep.variety = solveSystem(mm.relations, cfg.solve);
    } catch (const PositiveDimensionalError&) {
        rep.varietyInfinite = true;
        rep.classification = classify(mm.rank, std::nullopt);
        rep.verdict = Verdict::OutOfScope;
        rep.note = "infinite (positive-dimensional) variety: extremal analysis does not apply";
        return rep;
    } catch (const NoRelationsError&) {
        rep.varietyInfinite = true;
        rep.classification = classify(mm.rank, std::nullopt);
        rep.verdict = Verdict::OutOfScope;
        rep.note = "no column relations: the variety is the whole plane";
        return rep;
    }
    const int v = static_cast<int>(rep.variety.size());
    rep.varietyCard = v;
    rep.classification = classify(mm.rank, v);

    if (v < mm.rank) {
        rep.verdict = Verdict::NoMeasure;
        if (auto wit = varietyConditionWitness(mm, rep.variety, beta)) {
            rep.witness = std::move(wit);
        } else {
            rep.witness = Witness{Witness::Kind::VarietyCondition, MultiPoly{}, Rational(0), {}};
        }
        rep.note = "variety condition fails: card V < rank";
        return rep;
    }
    if (v > mm.rank) {
        rep.verdict = Verdict::OutOfScope;
        rep.note = "not extremal (card V > rank): extension analysis is out of scope";
        return rep;
    }

    BasisCase bc;
    try {
        bc = chooseBasisCase(mm);
    } catch (const Error& e) {
        rep.verdict = Verdict::OutOfScope;
        rep.note = e.what();
        return rep;
    }
    rep.basisCase = bc;

    if (bc.viaSwap && allowSwap) {
        SolverReport sub = decideExtremalImpl(degreeOneSwap(beta), cfg, false);
        rep.verdict = sub.verdict;
        rep.weakConsistency = sub.weakConsistency;
        for (const auto& a : sub.auxiliaries) rep.auxiliaries.push_back(a.swapped());
        for (const auto& e : sub.consistencyResults)
            rep.consistencyResults.push_back(
                {Monomial{e.multiplier.j, e.multiplier.i},
                 MultiPoly::parse(e.generator).swapped().str(), e.value});
        if (sub.witness) {
            Witness w = *sub.witness;
            w.poly = w.poly.swapped();
            w.residuals = residualsAt(w.poly, rep.variety);
            rep.witness = std::move(w);
        }
        if (sub.measure) {
            Measure m;
            m.exact = sub.measure->exact;
            m.maxMomentError = sub.measure->maxMomentError;
            m.densities = sub.measure->densities;
            for (const auto& a : sub.measure->atoms) m.atoms.push_back(swapPoint(a, mm.relations));
            rep.measure = std::move(m);
        }
        rep.note = "solved through the degree-one transformation interchanging x and y";
        if (!sub.note.empty()) rep.note += "; " + sub.note;
        return rep;
    }

    runCaseBattery(rep, beta, mm, bc, cfg);
    return rep;
}

}  // namespace

SolverReport decideExtremal(const MomentSequence& beta, const SolverConfig& cfg) {
    return decideExtremalImpl(beta, cfg, true);
}

namespace {

ordered_json intervalJson(const RatInterval& iv) {
    ordered_json j;
    j["lo"] = toDouble(iv.lo);
    j["hi"] = toDouble(iv.hi);
    return j;
}

ordered_json coordJson(const RatInterval& iv, const std::optional<Rational>& exact) {
    ordered_json j;
    j["mid"] = exact ? toDouble(*exact) : toDouble(iv.mid());
    j["rad"] = exact ? 0.0 : toDouble(iv.rad());
    if (exact) j["exact"] = toString(*exact);
    return j;
}

ordered_json pointJson(const VarietyPoint& p) {
    ordered_json j;
    j["x"] = coordJson(p.x, p.exactX);
    j["y"] = coordJson(p.y, p.exactY);
    ordered_json res = ordered_json::array();
    for (const auto& r : p.residuals) res.push_back(intervalJson(r));
    j["residuals"] = std::move(res);
    return j;
}

}  // namespace

std::string varietyToJson(const std::vector<MultiPoly>& relations,
                          const std::vector<VarietyPoint>& points, int rank) {
    ordered_json j;
    ordered_json rels = ordered_json::array();
    for (const auto& r : relations) rels.push_back(r.str());
    j["relations"] = std::move(rels);
    j["rank"] = rank;
    j["card"] = points.size();
    j["extremal"] = static_cast<int>(points.size()) == rank;
    ordered_json pts = ordered_json::array();
    for (const auto& p : points) pts.push_back(pointJson(p));
    j["points"] = std::move(pts);
    return j.dump(2);
}

std::string reportToJson(const SolverReport& rep) {
    ordered_json j;
    j["verdict"] = verdictName(rep.verdict);
    j["exitCode"] = verdictExitCode(rep.verdict);
    if (rep.psd) {
        ordered_json p;
        p["isPsd"] = rep.psd->isPsd;
        p["rank"] = rep.psd->rank;
        ordered_json pivots = ordered_json::array();
        for (const auto& [idx, val] : rep.psd->pivots) {
            ordered_json pv;
            pv["index"] = idx;
            pv["value"] = toString(val);
            pivots.push_back(std::move(pv));
        }
        p["pivots"] = std::move(pivots);
        if (rep.psd->failureWitness) {
            ordered_json w = ordered_json::array();
            for (const auto& c : *rep.psd->failureWitness) w.push_back(toString(c));
            p["failureWitness"] = std::move(w);
        }
        j["psd"] = std::move(p);
    }
    j["m2PositiveDefinite"] = rep.m2PositiveDefinite;
    j["rank"] = rep.rank;
    if (rep.varietyCard) j["varietyCard"] = *rep.varietyCard;
    j["varietyInfinite"] = rep.varietyInfinite;
    if (rep.basisCase) {
        ordered_json b;
        b["rank"] = rep.basisCase->rank;
        b["name"] = tagName(rep.basisCase->tag);
        ordered_json monos = ordered_json::array();
        for (const auto& m : rep.basisCase->monomials) monos.push_back(m.str());
        b["monomials"] = std::move(monos);
        ordered_json leads = ordered_json::array();
        for (const auto& m : rep.basisCase->auxiliaryLeads) leads.push_back(m.str());
        b["auxiliaryLeads"] = std::move(leads);
        b["viaSwap"] = rep.basisCase->viaSwap;
        if (rep.basisCase->swappedTag) b["swappedCase"] = tagName(*rep.basisCase->swappedTag);
        j["basisCase"] = std::move(b);
    }
    ordered_json rels = ordered_json::array();
    for (const auto& r : rep.relations) rels.push_back(r.str());
    j["relations"] = std::move(rels);
    ordered_json pts = ordered_json::array();
    for (const auto& p : rep.variety) pts.push_back(pointJson(p));
    j["variety"] = std::move(pts);
    if (rep.weakConsistency) {
        j["weakConsistency"] = *rep.weakConsistency == Certainty::True      ? "true"
                               : *rep.weakConsistency == Certainty::False  ? "false"
                                                                            : "indeterminate";
    }
    ordered_json auxs = ordered_json::array();
    for (const auto& a : rep.auxiliaries) auxs.push_back(a.str());
    j["auxiliaries"] = std::move(auxs);
    ordered_json cons = ordered_json::array();
    for (const auto& e : rep.consistencyResults) {
        ordered_json c;
        c["multiplier"] = e.multiplier.str();
        c["generator"] = e.generator;
        c["value"] = toString(e.value);
        cons.push_back(std::move(c));
    }
    j["consistency"] = std::move(cons);
    if (rep.witness) {
        ordered_json w;
        w["kind"] = rep.witness->kind == Witness::Kind::Consistency      ? "consistency"
                    : rep.witness->kind == Witness::Kind::Psd            ? "psd"
                                                                         : "varietyCondition";
        w["poly"] = rep.witness->poly.str();
        w["value"] = toString(rep.witness->value);
        ordered_json res = ordered_json::array();
        for (const auto& r : rep.witness->residuals) res.push_back(intervalJson(r));
        w["residuals"] = std::move(res);
        j["witness"] = std::move(w);
    }
    if (rep.measure) {
        ordered_json m;
        m["exact"] = rep.measure->exact;
        ordered_json atoms = ordered_json::array();
        for (const auto& a : rep.measure->atoms) atoms.push_back(pointJson(a));
        m["atoms"] = std::move(atoms);
        ordered_json dens = ordered_json::array();
        for (const auto& d : rep.measure->densities) {
            if (d.exact)
                dens.push_back(toString(*d.exact));
            else
                dens.push_back(intervalJson(d.enclosure));
        }
        m["densities"] = std::move(dens);
        m["maxMomentError"] = toString(rep.measure->maxMomentError);
        j["measure"] = std::move(m);
    }
    if (rep.classification) {
        ordered_json c;
        c["r"] = rep.classification->r;
        if (rep.classification->v) c["v"] = *rep.classification->v;
        c["extremal"] = rep.classification->extremal;
        if (rep.classification->maxExtensionOrder)
            c["maxExtension"] = "M(" + std::to_string(*rep.classification->maxExtensionOrder) + ")";
        c["impossible"] = rep.classification->impossible;
        c["note"] = rep.classification->note;
        j["classification"] = std::move(c);
    }
    j["note"] = rep.note;
    return j.dump(2);
}

std::string reportToText(const SolverReport& rep) {
    std::string s;
    s += "verdict: " + verdictName(rep.verdict) + "\n";
    s += "rank M(3): " + std::to_string(rep.rank) + "\n";
    if (rep.psd) s += std::string("M(3) PSD: ") + (rep.psd->isPsd ? "yes" : "no") + "\n";
    s += std::string("M(2) positive definite: ") + (rep.m2PositiveDefinite ? "yes" : "no") + "\n";
    if (rep.varietyCard) s += "card V: " + std::to_string(*rep.varietyCard) + "\n";
    if (rep.varietyInfinite) s += "card V: infinite\n";
    if (rep.basisCase) s += "basis case: " + tagName(rep.basisCase->tag) + "\n";
    for (const auto& r : rep.relations) s += "relation: " + r.str() + " = 0\n";
    for (const auto& p : rep.variety) {
        s += "point: (";
        s += p.exactX ? toString(*p.exactX) : std::to_string(toDouble(p.x.mid()));
        s += ", ";
        s += p.exactY ? toString(*p.exactY) : std::to_string(toDouble(p.y.mid()));
        s += ")\n";
    }
    if (rep.weakConsistency)
        s += std::string("weakly consistent: ") +
             (*rep.weakConsistency == Certainty::True    ? "yes"
              : *rep.weakConsistency == Certainty::False ? "no"
                                                         : "undecided") +
             "\n";
    for (const auto& a : rep.auxiliaries) s += "auxiliary: " + a.str() + "\n";
    if (rep.witness)
        s += "witness: Riesz(" + rep.witness->poly.str() + ") = " + toString(rep.witness->value) + "\n";
    if (rep.measure) {
        s += "measure: " + std::to_string(rep.measure->atoms.size()) + " atoms\n";
        for (size_t k = 0; k < rep.measure->atoms.size(); ++k) {
            const auto& a = rep.measure->atoms[k];
            s += "  atom (";
            s += a.exactX ? toString(*a.exactX) : std::to_string(toDouble(a.x.mid()));
            s += ", ";
            s += a.exactY ? toString(*a.exactY) : std::to_string(toDouble(a.y.mid()));
            s += ") density ";
            const auto& d = rep.measure->densities[k];
            s += d.exact ? toString(*d.exact) : std::to_string(toDouble(d.enclosure.mid()));
            s += "\n";
        }
    }
    if (rep.classification) s += "classification: " + rep.classification->note + "\n";
    if (!rep.note.empty()) s += "note: " + rep.note + "\n";
    return s;
}

}  // namespace momentlab
