#pragma once

#include <vector>

#include "pachner/tower.hpp"  // BigInt

namespace pachner {

/// Dense matrix over arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const BigInt& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    IntMatrix operator*(const IntMatrix& o) const;
    bool operator==(const IntMatrix& o) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

/// U * m * V = D with U, V unimodular and D diagonal with successive
/// divisibility. Pivots are chosen by least absolute value.
struct SmithResult {
    std::vector<BigInt> factors;  // min(rows, cols) diagonal entries, >= 0
    IntMatrix U, V;

    int rank() const {
        int r = 0;
        for (const BigInt& f : factors)
            if (f != 0) ++r;
        return r;
    }
};

SmithResult smith_normal_form(const IntMatrix& m);

/// Rank over Q by fraction-free elimination.
int rank_q(IntMatrix m);

/// Basis of the integer kernel lattice of m (columns of the SNF's V beyond
/// the rank). Also a Q-basis of the rational kernel.
std::vector<std::vector<BigInt>> kernel_basis(const IntMatrix& m);

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);

}  // namespace pachner
