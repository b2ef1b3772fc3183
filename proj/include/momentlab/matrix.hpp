#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "momentlab/rational.hpp"

namespace momentlab {

struct NotSymmetricError : Error {
    using Error::Error;
};
struct DimensionMismatchError : Error {
    using Error::Error;
};

using RatVector = std::vector<Rational>;

// Dense row-major matrix over Rational. Immutable by convention after
// construction; all decompositions work on copies.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }

    RatMatrix transpose() const;
    bool isSymmetric() const;

    RatVector apply(const RatVector& v) const;  // m * v
    RatMatrix operator*(const RatMatrix& o) const;
    bool operator==(const RatMatrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Exact rank via fraction-free (Bareiss) elimination on the integerized rows.
int rank(const RatMatrix& m);

// Exact determinant (square matrices), Bareiss.
Rational det(const RatMatrix& m);

// Basis of the null space in reduced echelon form: one vector per free
// column, entry 1 at the free column and support otherwise only on earlier
// pivot columns. Empty iff the matrix is injective.
std::vector<RatVector> kernelBasis(const RatMatrix& m);

// Pivot columns of the reduced row echelon form, i.e. the greedy leftmost
// independent column set.
std::vector<int> pivotColumns(const RatMatrix& m);

struct LinearSolve {
    enum class Status { Unique, Inconsistent, Underdetermined };
    Status status = Status::Inconsistent;
    RatVector solution;  // populated only when Unique
};

LinearSolve solveLinear(const RatMatrix& a, const RatVector& b);

std::optional<RatMatrix> inverse(const RatMatrix& m);

struct PsdCertificate {
    bool isPsd = false;
    int rank = 0;
    // (original index, pivot value) in elimination order; all pivots > 0 when PSD.
    std::vector<std::pair<int, Rational>> pivots;
    // When not PSD: vector v with v^T M v < 0, exact.
    std::optional<RatVector> failureWitness;
};

// Exact PSD decision by LDL^T with symmetric pivoting on the largest
// remaining diagonal entry. A zero diagonal in a PSD matrix forces the whole
// row/column to vanish; any violation yields an explicit witness.
PsdCertificate psdCheck(const RatMatrix& m);

Rational quadraticForm(const RatMatrix& m, const RatVector& v);  // v^T m v

}  // namespace momentlab
