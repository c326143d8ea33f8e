#pragma once

#include <optional>
#include <vector>

#include "toricc/rational.hpp"

namespace toricc {

// Dense integer matrix with exact entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& rhs) const = default;

    // Exact determinant (fraction-free Bareiss elimination); square only.
    Int det() const;
    int rank() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const Int& f); // row[dst] += f * row[src]
    void add_col_multiple(int dst, int src, const Int& f);
    void negate_row(int i);

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

struct SmithResult {
    IntMatrix u; // unimodular, rows x rows
    IntMatrix d; // diagonal, d_1 | d_2 | ... >= 0
    IntMatrix v; // unimodular, cols x cols
};

// u * a * v = d with u, v unimodular and nonnegative diagonal entries in
// divisibility order. Throws precondition_error on an empty matrix.
SmithResult smith_normal_form(const IntMatrix& a);

// Basis of the saturated right kernel {x in Z^cols : a x = 0}; the basis
// vectors generate the full lattice kernel (columns of the SNF cofactor).
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a);

// Divide by the gcd of the entries; sign is preserved. Zero vector throws.
std::vector<Int> primitivize(std::vector<Int> v);

// --- small exact rational linear algebra helpers -------------------------

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row-major, possibly ragged-free

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(RatMat& m);

// One solution of A x = b, or nullopt if inconsistent.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

// Basis of {x : A x = 0} over Q.
std::vector<RatVec> rational_nullspace(const RatMat& a, int cols);

// Scale a nonzero rational direction vector to a primitive integer vector.
std::vector<Int> primitive_direction(const RatVec& v);

} // namespace toricc
