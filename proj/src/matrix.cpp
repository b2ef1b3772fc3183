#include "momentlab/matrix.hpp"

#include <algorithm>

namespace momentlab {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool RatMatrix::isSymmetric() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

RatVector RatMatrix::apply(const RatVector& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw DimensionMismatchError("apply: vector length != matrix cols");
    RatVector out(rows_);
    for (int r = 0; r < rows_; ++r) {
        Rational s(0);
        for (int c = 0; c < cols_; ++c) s += at(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatchError("matrix product shape mismatch");
    RatMatrix p(rows_, o.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            if (at(r, k) == 0) continue;
            for (int c = 0; c < o.cols_; ++c) p.at(r, c) += at(r, k) * o.at(k, c);
        }
    return p;
}

namespace {

// Integerize each row (multiply by the lcm of its denominators); rank and
// determinant sign structure are unaffected.
std::vector<std::vector<Integer>> integerRows(const RatMatrix& m) {
    std::vector<std::vector<Integer>> z(m.rows(), std::vector<Integer>(m.cols()));
    for (int r = 0; r < m.rows(); ++r) {
        Integer l(1);
        for (int c = 0; c < m.cols(); ++c) {
            Integer d = m.at(r, c).get_den();
            l = lcm(l, d);
        }
        for (int c = 0; c < m.cols(); ++c) {
            Rational v = m.at(r, c) * Rational(l);
            v.canonicalize();
            z[r][c] = v.get_num();
        }
    }
    return z;
}

int bareissRank(std::vector<std::vector<Integer>>& z, int rows, int cols) {
    Integer prev(1);
    int rk = 0;
    for (int col = 0; col < cols && rk < rows; ++col) {
        int piv = -1;
        for (int r = rk; r < rows; ++r)
            if (z[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(z[rk], z[piv]);
        const Integer p = z[rk][col];
        for (int i = rk + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                Integer t = p * z[i][j] - z[i][col] * z[rk][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                z[i][j] = t;
            }
            z[i][col] = 0;
        }
        prev = p;
        ++rk;
    }
    return rk;
}

struct Rref {
    RatMatrix m;
    std::vector<int> pivotCols;
};

Rref rref(const RatMatrix& in) {
    Rref out{in, {}};
    RatMatrix& m = out.m;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
        const Rational d = m.at(row, col);
        for (int c = col; c < m.cols(); ++c) m.at(row, c) /= d;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            const Rational f = m.at(r, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
        }
        out.pivotCols.push_back(col);
        ++row;
    }
    return out;
}

}  // namespace

int rank(const RatMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto z = integerRows(m);
    return bareissRank(z, m.rows(), m.cols());
}

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatchError("det: matrix not square");
    const int n = m.rows();
    if (n == 0) return Rational(1);
    // Track the row scalings so the rational determinant comes back exactly.
    Rational scale(1);
    std::vector<std::vector<Integer>> z(n, std::vector<Integer>(n));
    for (int r = 0; r < n; ++r) {
        Integer l(1);
        for (int c = 0; c < n; ++c) l = lcm(l, Integer(m.at(r, c).get_den()));
        scale *= Rational(l);
        for (int c = 0; c < n; ++c) {
            Rational v = m.at(r, c) * Rational(l);
            v.canonicalize();
            z[r][c] = v.get_num();
        }
    }
    Integer prev(1);
    int sign = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (z[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            std::swap(z[piv], z[col]);
            sign = -sign;
        }
        const Integer p = z[col][col];
        for (int i = col + 1; i < n; ++i) {
            for (int j = col + 1; j < n; ++j) {
                Integer t = p * z[i][j] - z[i][col] * z[col][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                z[i][j] = t;
            }
            z[i][col] = 0;
        }
        prev = p;
    }
    Rational d(z[n - 1][n - 1]);
    if (sign < 0) d = -d;
    d /= scale;
    d.canonicalize();
    return d;
}

std::vector<int> pivotColumns(const RatMatrix& m) { return rref(m).pivotCols; }

std::vector<RatVector> kernelBasis(const RatMatrix& m) {
    auto [r, pivots] = rref(m);
    std::vector<bool> isPivot(m.cols(), false);
    for (int c : pivots) isPivot[c] = true;
    std::vector<RatVector> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (isPivot[free]) continue;
        RatVector v(m.cols(), Rational(0));
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) {
            if (pivots[i] < free) v[pivots[i]] = -r.at(static_cast<int>(i), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolve solveLinear(const RatMatrix& a, const RatVector& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw DimensionMismatchError("solveLinear: rhs length != matrix rows");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
        aug.at(r, a.cols()) = b[r];
    }
    auto [m, pivots] = rref(aug);
    for (int c : pivots)
        if (c == a.cols()) return {LinearSolve::Status::Inconsistent, {}};
    if (static_cast<int>(pivots.size()) < a.cols()) return {LinearSolve::Status::Underdetermined, {}};
    RatVector x(a.cols());
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m.at(static_cast<int>(i), a.cols());
    return {LinearSolve::Status::Unique, std::move(x)};
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatchError("inverse: matrix not square");
    const int n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    auto [red, pivots] = rref(aug);
    if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
    return inv;
}

Rational quadraticForm(const RatMatrix& m, const RatVector& v) {
    RatVector mv = m.apply(v);
    Rational s(0);
    for (size_t i = 0; i < v.size(); ++i) s += v[i] * mv[i];
    return s;
}

PsdCertificate psdCheck(const RatMatrix& m) {
    if (!m.isSymmetric()) throw NotSymmetricError("psdCheck requires an exactly symmetric matrix");
    const int n = m.rows();
    PsdCertificate cert;
    RatMatrix w = m;
    // Congruence tracker: w == C m C^T throughout, so w(i,i) = c_i^T m c_i
    // with c_i the i-th row of C. Rows of C give exact witnesses.
    RatMatrix ctr = RatMatrix::identity(n);
    std::vector<int> orig(n);
    for (int i = 0; i < n; ++i) orig[i] = i;

    auto swapAll = [&](int a, int b) {
        if (a == b) return;
        for (int c = 0; c < n; ++c) std::swap(w.at(a, c), w.at(b, c));
        for (int r = 0; r < n; ++r) std::swap(w.at(r, a), w.at(r, b));
        for (int c = 0; c < n; ++c) std::swap(ctr.at(a, c), ctr.at(b, c));
        std::swap(orig[a], orig[b]);
    };

    int k = 0;
    while (k < n) {
        int best = k;
        for (int i = k + 1; i < n; ++i)
            if (w.at(i, i) > w.at(best, best)) best = i;
        if (w.at(best, best) > 0) {
            swapAll(k, best);
            const Rational d = w.at(k, k);
            cert.pivots.emplace_back(orig[k], d);
            for (int i = k + 1; i < n; ++i) {
                if (w.at(i, k) == 0) continue;
                const Rational f = w.at(i, k) / d;
                for (int c = 0; c < n; ++c) w.at(i, c) -= f * w.at(k, c);
                for (int r = 0; r < n; ++r) w.at(r, i) -= f * w.at(r, k);
                for (int c = 0; c < n; ++c) ctr.at(i, c) -= f * ctr.at(k, c);
            }
            ++k;
            continue;
        }
        // Largest remaining diagonal is <= 0.
        for (int i = k; i < n; ++i) {
            if (w.at(i, i) < 0) {
                RatVector v(n);
                for (int c = 0; c < n; ++c) v[c] = ctr.at(i, c);
                cert.failureWitness = std::move(v);
                cert.isPsd = false;
                cert.rank = static_cast<int>(cert.pivots.size());
                return cert;
            }
        }
        // All remaining diagonals are exactly 0: PSD forces the whole block
        // to vanish.
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j) {
                if (i == j || w.at(i, j) == 0) continue;
                const Rational t = w.at(i, j) > 0 ? Rational(-1) : Rational(1);
                RatVector v(n);
                for (int c = 0; c < n; ++c) v[c] = t * ctr.at(i, c) + ctr.at(j, c);
                cert.failureWitness = std::move(v);
                cert.isPsd = false;
                cert.rank = static_cast<int>(cert.pivots.size());
                return cert;
            }
        break;  // remaining block is zero
    }
    cert.isPsd = true;
    cert.rank = static_cast<int>(cert.pivots.size());
    return cert;
}

}  // namespace momentlab
