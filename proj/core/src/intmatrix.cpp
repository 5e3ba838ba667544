#include "pachner/intmatrix.hpp"

#include <stdexcept>

namespace pachner {

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

struct SnfWork {
    IntMatrix d, u, v;

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < d.cols(); ++j) std::swap(d.at(a, j), d.at(b, j));
        for (int j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < d.rows(); ++i) std::swap(d.at(i, a), d.at(i, b));
        for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    void add_row(int dst, int src, const BigInt& q) {  // row dst += q * row src
        if (q == 0) return;
        for (int j = 0; j < d.cols(); ++j) d.at(dst, j) += q * d.at(src, j);
        for (int j = 0; j < u.cols(); ++j) u.at(dst, j) += q * u.at(src, j);
    }
    void add_col(int dst, int src, const BigInt& q) {
        if (q == 0) return;
        for (int i = 0; i < d.rows(); ++i) d.at(i, dst) += q * d.at(i, src);
        for (int i = 0; i < v.rows(); ++i) v.at(i, dst) += q * v.at(i, src);
    }
    void negate_row(int r) {
        for (int j = 0; j < d.cols(); ++j) d.at(r, j) = -d.at(r, j);
        for (int j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SnfWork w{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    const int n = std::min(m.rows(), m.cols());

    for (int t = 0; t < n; ++t) {
        // Smallest nonzero entry of the trailing submatrix becomes the pivot.
        int pi = -1, pj = -1;
        for (int i = t; i < m.rows(); ++i)
            for (int j = t; j < m.cols(); ++j)
                if (w.d.at(i, j) != 0 &&
                    (pi < 0 || abs_big(w.d.at(i, j)) < abs_big(w.d.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            // Clear the pivot column, re-pivoting on remainders.
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (int i = t + 1; i < m.rows(); ++i) {
                    if (w.d.at(i, t) == 0) continue;
                    const BigInt q = w.d.at(i, t) / w.d.at(t, t);
                    w.add_row(i, t, -q);
                    if (w.d.at(i, t) != 0) {
                        w.swap_rows(t, i);  // remainder is strictly smaller
                        dirty = true;
                    }
                }
                for (int j = t + 1; j < m.cols(); ++j) {
                    if (w.d.at(t, j) == 0) continue;
                    const BigInt q = w.d.at(t, j) / w.d.at(t, t);
                    w.add_col(j, t, -q);
                    if (w.d.at(t, j) != 0) {
                        w.swap_cols(t, j);
                        dirty = true;
                    }
                }
            }
            // Pivot must divide the whole trailing submatrix.
            bool divides = true;
            for (int i = t + 1; i < m.rows() && divides; ++i)
                for (int j = t + 1; j < m.cols() && divides; ++j)
                    if (w.d.at(i, j) % w.d.at(t, t) != 0) {
                        w.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.d.at(t, t) < 0) w.negate_row(t);
    }

    SmithResult r;
    r.factors.resize(n);
    for (int t = 0; t < n; ++t) r.factors[t] = w.d.at(t, t);
    r.U = std::move(w.u);
    r.V = std::move(w.v);
    return r;
}

int rank_q(IntMatrix m) {
    // Fraction-free Gaussian elimination.
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int piv = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (m.at(i, col) != 0 && (piv < 0 || abs_big(m.at(i, col)) < abs_big(m.at(piv, col))))
                piv = i;
        if (piv < 0) continue;
        for (int j = 0; j < m.cols(); ++j) std::swap(m.at(rank, j), m.at(piv, j));
        for (int i = rank + 1; i < m.rows(); ++i) {
            if (m.at(i, col) == 0) continue;
            const BigInt a = m.at(rank, col), b = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) * a - m.at(rank, j) * b;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<BigInt>> kernel_basis(const IntMatrix& m) {
    const SmithResult s = smith_normal_form(m);
    const int rank = s.rank();
    std::vector<std::vector<BigInt>> basis;
    for (int k = rank; k < m.cols(); ++k) {
        std::vector<BigInt> v(m.cols());
        for (int i = 0; i < m.cols(); ++i) v[i] = s.V.at(i, k);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace pachner
