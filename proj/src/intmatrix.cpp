#include "toricc/intmatrix.hpp"

#include <algorithm>
#include <cassert>

#include "toricc/errors.hpp"

namespace toricc {

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(rows) * cols)
        throw precondition_error("matrix entry count does not match shape");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw precondition_error("matrix shape mismatch in product");
    IntMatrix r(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += aik * rhs.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw precondition_error("determinant of a non-square matrix");
    if (rows_ == 0) return 1;
    // Bareiss fraction-free elimination: every division below is exact.
    IntMatrix m = *this;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < rows_; ++k) {
        if (m.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < rows_; ++i)
                if (m.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < rows_; ++i)
            for (int j = k + 1; j < cols_; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(rows_ - 1, cols_ - 1) : -m.at(rows_ - 1, cols_ - 1);
}

int IntMatrix::rank() const {
    if (empty()) return 0;
    SmithResult s = smith_normal_form(*this);
    int n = std::min(rows_, cols_);
    int r = 0;
    for (int i = 0; i < n; ++i)
        if (s.d.at(i, i) != 0) ++r;
    return r;
}

// Location of the entry of minimal nonzero absolute value in the trailing
// submatrix starting at (t, t); false if that submatrix is zero.
static bool locate_min_nonzero(const IntMatrix& d, int t, int& pi, int& pj) {
    bool found = false;
    Int best = 0;
    for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int v = abs(d.at(i, j));
            if (!found || v < best) {
                best = v;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

static bool pivot_is_lone(const IntMatrix& d, int t) {
    for (int i = t + 1; i < d.rows(); ++i)
        if (d.at(i, t) != 0) return false;
    for (int j = t + 1; j < d.cols(); ++j)
        if (d.at(t, j) != 0) return false;
    return true;
}

SmithResult smith_normal_form(const IntMatrix& a) {
    if (a.empty()) throw precondition_error("smith_normal_form of an empty matrix");
    const int m = a.rows(), n = a.cols();
    const int nmin = std::min(m, n);

    SmithResult r{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = r.d;

    for (int t = 0; t < nmin; ++t) {
        int pi = 0, pj = 0;
        if (!locate_min_nonzero(d, t, pi, pj)) break; // trailing block is zero

        for (;;) {
            // Bring the smallest nonzero entry to the pivot position.
            locate_min_nonzero(d, t, pi, pj);
            d.swap_rows(t, pi);
            r.u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            r.v.swap_cols(t, pj);

            for (int i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                d.add_row_multiple(i, t, -q);
                r.u.add_row_multiple(i, t, -q);
            }
            for (int j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                d.add_col_multiple(j, t, -q);
                r.v.add_col_multiple(j, t, -q);
            }
            if (!pivot_is_lone(d, t)) continue; // remainders left, shrink again

            // Enforce d_t | d_ij for the trailing block: pull a bad row up
            // and restart the reduction at this pivot.
            int bi = -1, bj = -1;
            for (int i = t + 1; i < m && bi < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            d.add_row_multiple(t, bi, 1);
            r.u.add_row_multiple(t, bi, 1);
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            r.u.negate_row(t);
        }
    }

    assert(r.u * a * r.v == d);
    return r;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& a) {
    if (a.empty()) {
        // Kernel of a map from Z^cols defined by no rows is everything.
        std::vector<std::vector<Int>> basis;
        for (int j = 0; j < a.cols(); ++j) {
            std::vector<Int> e(a.cols());
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    SmithResult s = smith_normal_form(a);
    const int n = a.cols();
    const int nmin = std::min(a.rows(), n);
    std::vector<std::vector<Int>> basis;
    for (int j = 0; j < n; ++j) {
        if (j < nmin && s.d.at(j, j) != 0) continue;
        std::vector<Int> col(n);
        for (int i = 0; i < n; ++i) col[i] = s.v.at(i, j);
        basis.push_back(std::move(col));
    }
    return basis;
}

std::vector<Int> primitivize(std::vector<Int> v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    if (g == 0) throw precondition_error("primitivize of the zero vector");
    if (g != 1)
        for (Int& x : v) x /= g;
    return v;
}

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int i = row; i < rows; ++i)
            if (m[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[row], m[p]);
        Rat inv = m[row][col];
        for (int j = col; j < cols; ++j) m[row][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : static_cast<int>(b.size());
    RatMat aug(rows, RatVec(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> pivots = rref(aug);
    for (size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] == cols) return std::nullopt; // 0 = 1 row
    RatVec x(cols, Rat(0));
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

std::vector<RatVec> rational_nullspace(const RatMat& a, int cols) {
    RatMat m = a;
    for (auto& row : m) row.resize(cols, Rat(0));
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Int> primitive_direction(const RatVec& v) {
    Int lcm = 1;
    for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, rat_den(x));
    std::vector<Int> w(v.size());
    bool nonzero = false;
    for (size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(lcm);
        w[i] = rat_num(scaled);
        nonzero = nonzero || w[i] != 0;
    }
    if (!nonzero) throw precondition_error("primitive_direction of the zero vector");
    return primitivize(std::move(w));
}

} // namespace toricc
