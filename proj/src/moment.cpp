#include "momentlab/moment.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace momentlab {

using ordered_json = nlohmann::ordered_json;

MomentSequence::MomentSequence(int n) : n_(n) {
    if (n < 1) throw Error("moment sequence order must be at least 1");
    for (int d = 0; d <= 2 * n; ++d)
        for (int j = 0; j <= d; ++j) m_[{d - j, j}] = Rational(0);
}

const Rational& MomentSequence::at(int i, int j) const {
    auto it = m_.find({i, j});
    if (it == m_.end()) throw IncompleteSequenceError("moment index out of range");
    return it->second;
}

void MomentSequence::set(int i, int j, const Rational& v) {
    auto it = m_.find({i, j});
    if (it == m_.end()) throw IncompleteSequenceError("moment index out of range");
    it->second = v;
}

MomentSequence MomentSequence::fromJson(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw IncompleteSequenceError(std::string("moment JSON parse failure: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw IncompleteSequenceError("moment JSON must be an object with an integer field \"n\"");
    const int n = doc["n"].get<int>();
    if (n < 1 || n > 16) throw IncompleteSequenceError("moment order n out of range");
    if (!doc.contains("moments") || !doc["moments"].is_object())
        throw IncompleteSequenceError("moment JSON must carry an object field \"moments\"");
    MomentSequence beta(n);
    std::map<std::pair<int, int>, bool> seen;
    for (const auto& [key, value] : doc["moments"].items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos)
            throw IncompleteSequenceError("moment key '" + key + "' is not of the form \"i,j\"");
        int i = 0, j = 0;
        try {
            i = std::stoi(key.substr(0, comma));
            j = std::stoi(key.substr(comma + 1));
        } catch (const std::exception&) {
            throw IncompleteSequenceError("moment key '" + key + "' is not of the form \"i,j\"");
        }
        if (i < 0 || j < 0 || i + j > 2 * n)
            throw IncompleteSequenceError("moment key '" + key + "' is outside degree " +
                                          std::to_string(2 * n));
        if (!value.is_string())
            throw IncompleteSequenceError("moment '" + key + "' must be a rational encoded as a string");
        const auto r = tryParseRational(value.get<std::string>());
        if (!r)
            throw IncompleteSequenceError("moment '" + key + "' is not a rational: '" +
                                          value.get<std::string>() + "'");
        beta.set(i, j, *r);
        seen[{i, j}] = true;
    }
    std::string missing;
    for (int d = 0; d <= 2 * n; ++d)
        for (int j = 0; j <= d; ++j)
            if (!seen.count({d - j, j}))
                missing += (missing.empty() ? "" : ", ") + std::to_string(d - j) + "," +
                           std::to_string(j);
    if (!missing.empty())
        throw IncompleteSequenceError("moment JSON is missing indices: " + missing);
    return beta;
}

std::string MomentSequence::toJson() const {
    ordered_json doc;
    doc["n"] = n_;
    ordered_json moments = ordered_json::object();
    for (int d = 0; d <= 2 * n_; ++d)
        for (int j = 0; j <= d; ++j)
            moments[std::to_string(d - j) + "," + std::to_string(j)] = toString(at(d - j, j));
    doc["moments"] = std::move(moments);
    return doc.dump(2);
}

Rational riesz(const MomentSequence& beta, const MultiPoly& p) {
    Rational s(0);
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() > 2 * beta.order())
            throw DegreeTooHighError("riesz: polynomial degree exceeds 2n");
        s += c * beta.at(m.i, m.j);
    }
    return s;
}

MomentMatrix buildMomentMatrix(const MomentSequence& beta) {
    const int n = beta.order();
    const auto labels = monomialsUpToDegree(n);
    const int t = static_cast<int>(labels.size());
    RatMatrix m(t, t);
    for (int r = 0; r < t; ++r)
        for (int c = 0; c < t; ++c) {
            const Monomial sum = labels[r] * labels[c];
            m.at(r, c) = beta.at(sum.i, sum.j);
        }
    MomentMatrix mm{beta, std::move(m), labels, 0, {}, {}};
    const auto pivots = pivotColumns(mm.matrix);
    mm.rank = static_cast<int>(pivots.size());
    for (int c : pivots) mm.basisMonomials.push_back(labels[c]);
    for (const auto& v : kernelBasis(mm.matrix))
        mm.relations.push_back(MultiPoly::fromCoefficientVector(v, labels));
    return mm;
}

RecursivenessReport checkRecursive(const MomentMatrix& mm) {
    RecursivenessReport rep;
    const int n = mm.source.order();
    for (size_t k = 0; k < mm.relations.size(); ++k) {
        const MultiPoly& q = mm.relations[k];
        const int budget = n - q.degree();
        for (const auto& mult : monomialsUpToDegree(std::max(budget, 0))) {
            const MultiPoly prod = q.timesMonomial(mult, Rational(1));
            const RatVector vec = prod.coefficientVector(mm.columnLabels);
            const RatVector image = mm.matrix.apply(vec);
            const bool zero = std::all_of(image.begin(), image.end(),
                                          [](const Rational& r) { return r == 0; });
            if (!zero) {
                rep.recursive = false;
                rep.violations.push_back({k, mult});
            }
        }
    }
    return rep;
}

VandermondeSlice vandermonde(const std::vector<VarietyPoint>& points,
                             const std::vector<Monomial>& monos) {
    if (monos.empty()) throw Error("vandermonde: empty monomial list");
    VandermondeSlice slice{points, monos, {}, std::nullopt};
    const bool allExact = std::all_of(points.begin(), points.end(),
                                      [](const VarietyPoint& p) { return p.isExact(); });
    slice.numeric.resize(points.size());
    for (size_t r = 0; r < points.size(); ++r) {
        slice.numeric[r].reserve(monos.size());
        for (const auto& m : monos) {
            const RatInterval vx = points[r].exactX ? RatInterval(*points[r].exactX) : points[r].x;
            const RatInterval vy = points[r].exactY ? RatInterval(*points[r].exactY) : points[r].y;
            slice.numeric[r].push_back(vx.power(static_cast<unsigned>(m.i)) *
                                       vy.power(static_cast<unsigned>(m.j)));
        }
    }
    if (allExact) {
        RatMatrix w(static_cast<int>(points.size()), static_cast<int>(monos.size()));
        for (size_t r = 0; r < points.size(); ++r)
            for (size_t c = 0; c < monos.size(); ++c)
                w.at(static_cast<int>(r), static_cast<int>(c)) =
                    ratPow(*points[r].exactX, static_cast<unsigned>(monos[c].i)) *
                    ratPow(*points[r].exactY, static_cast<unsigned>(monos[c].j));
        slice.exact = std::move(w);
    }
    return slice;
}

namespace {

MultiPoly polyFromBasisKernel(const RatVector& kernelVec, const std::vector<Monomial>& basis) {
    MultiPoly p;
    for (size_t k = 0; k < basis.size(); ++k) p.setCoefficient(basis[k], kernelVec[k]);
    return p;
}

}  // namespace

WeakConsistencyResult checkWeakConsistency(const MomentMatrix& mm,
                                           const std::vector<VarietyPoint>& variety,
                                           const SolveOptions& opts) {
    if (static_cast<int>(variety.size()) != mm.rank)
        throw NotExtremalError("checkWeakConsistency: card V != rank (not extremal)");
    WeakConsistencyResult res;
    res.basis = mm.basisMonomials;

    const auto slice = vandermonde(variety, res.basis);
    if (slice.exact) {
        const auto ker = kernelBasis(*slice.exact);
        if (ker.empty()) {
            res.value = Certainty::True;
        } else {
            res.value = Certainty::False;
            res.failureWitness = polyFromBasisKernel(ker.front(), res.basis);
        }
        return res;
    }

    // Exact route through the radical quotient: when every complex zero of
    // the relation ideal is real, invertibility of W_B is equivalent to the
    // basis monomials' normal forms spanning the quotient ring.
    try {
        auto gb = buchberger(radicalizedGenerators(mm.relations), MonomialOrder::GradedLex);
        auto standard = standardMonomials(gb, MonomialOrder::GradedLex);
        if (standard && static_cast<int>(standard->size()) == static_cast<int>(variety.size())) {
            const int dim = static_cast<int>(standard->size());
            RatMatrix nf(dim, dim);
            for (size_t c = 0; c < res.basis.size(); ++c) {
                const MultiPoly col =
                    normalForm(MultiPoly::term(Rational(1), res.basis[c]), gb, MonomialOrder::GradedLex);
                const RatVector v = col.coefficientVector(*standard);
                for (int r = 0; r < dim; ++r) nf.at(r, static_cast<int>(c)) = v[r];
            }
            const auto ker = kernelBasis(nf);
            if (ker.empty()) {
                res.value = Certainty::True;
            } else {
                res.value = Certainty::False;
                res.failureWitness = polyFromBasisKernel(ker.front(), res.basis);
            }
            return res;
        }
    } catch (const PositiveDimensionalError&) {
        // fall through to the interval certificate
    }

    // Interval determinant with refinement escalation.
    auto px = projectionEliminant(mm.relations, Variable::X);
    auto py = projectionEliminant(mm.relations, Variable::Y);
    std::vector<VarietyPoint> pts = variety;
    Rational radius = opts.tol;
    const Rational floorRadius =
        Rational(1) / ratPow(Rational(2), static_cast<unsigned>(opts.precisionCapBits));
    for (;;) {
        const auto sliceNow = vandermonde(pts, res.basis);
        const auto d = intervalDet(sliceNow.numeric);
        if (d && !d->containsZero()) {
            res.value = Certainty::True;
            return res;
        }
        if (radius <= floorRadius || !px || !py) {
            res.value = Certainty::Indeterminate;
            return res;
        }
        radius /= 4096;
        for (auto& p : pts) {
            if (!p.exactX) p.x = refineRoot(*px, p.x, radius);
            if (!p.exactY) p.y = refineRoot(*py, p.y, radius);
        }
    }
}

ConsistencyReport checkConsistencyGenerators(const MomentSequence& beta,
                                             const std::vector<MultiPoly>& generators,
                                             const std::vector<int>& maxMultiplierDegree) {
    if (generators.size() != maxMultiplierDegree.size())
        throw LengthMismatchError("checkConsistencyGenerators: one degree budget per generator");
    ConsistencyReport rep;
    for (size_t k = 0; k < generators.size(); ++k) {
        const MultiPoly& g = generators[k];
        if (g.isZero()) continue;
        if (g.degree() + maxMultiplierDegree[k] > 2 * beta.order())
            throw DegreeOverflowError("checkConsistencyGenerators: multiplier budget exceeds degree 2n");
        for (const auto& mult : monomialsUpToDegree(maxMultiplierDegree[k])) {
            const Rational value = riesz(beta, g.timesMonomial(mult, Rational(1)));
            rep.checks.push_back({mult, k, value});
            if (value != 0) {
                rep.consistent = false;
                rep.violations.push_back({mult, k, value});
            }
        }
    }
    return rep;
}

MomentSequence momentsFromAtoms(const std::vector<std::pair<Rational, Rational>>& atoms,
                                const std::vector<Rational>& densities, int n) {
    if (atoms.size() != densities.size())
        throw LengthMismatchError("momentsFromAtoms: atoms and densities differ in length");
    for (const auto& d : densities)
        if (d <= 0) throw NonpositiveDensityError("momentsFromAtoms: densities must be positive");
    MomentSequence beta(n);
    for (int deg = 0; deg <= 2 * n; ++deg)
        for (int j = 0; j <= deg; ++j) {
            const int i = deg - j;
            Rational s(0);
            for (size_t k = 0; k < atoms.size(); ++k)
                s += densities[k] * ratPow(atoms[k].first, static_cast<unsigned>(i)) *
                     ratPow(atoms[k].second, static_cast<unsigned>(j));
            beta.set(i, j, s);
        }
    return beta;
}

}  // namespace momentlab
