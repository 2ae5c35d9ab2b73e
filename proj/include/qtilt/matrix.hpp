#pragma once

/*
 * Dense exact-rational matrices and the elimination core.
 *
 * Elimination is fraction-free: each row is scaled to integers, then a
 * Bareiss-style single-step elimination runs over arbitrary-precision
 * integers (every intermediate entry is a minor of the scaled matrix, so the
 * divisions are exact and coefficient growth stays polynomial).  The reduced
 * rational echelon form is recovered at the end.  Pivoting is first-nonzero,
 * which keeps every result deterministic; exact arithmetic needs no
 * magnitude heuristics.
 *
 * Everything at this layer speaks standard column-vector semantics
 * (m * x = b).  Row-space helpers for the representation layer live at the
 * bottom of the file and say "row" explicitly.
 */

#include <qtilt/rational.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace qtilt {

using Vec = std::vector<Rat>;

class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {
        if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool is_zero() const {
        for (const Rat& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
        Mat p(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                const Rat& x = at(r, k);
                if (x == 0) continue;
                for (int c = 0; c < o.cols_; ++c) p.at(r, c) += x * o.at(k, c);
            }
        return p;
    }

    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
        Mat s = *this;
        for (size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
        return s;
    }

    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
        Mat s = *this;
        for (size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
        return s;
    }

    Mat operator*(const Rat& s) const {
        Mat m = *this;
        for (Rat& x : m.a_) x *= s;
        return m;
    }

    Vec row(int r) const {
        Vec v(cols_);
        for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
        return v;
    }

    Vec col(int c) const {
        Vec v(rows_);
        for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }

    void set_row(int r, const Vec& v) {
        if (int(v.size()) != cols_) throw Error("row assignment length mismatch");
        for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
    }

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

inline Mat mat_from_rows(const std::vector<Vec>& rows, int cols) {
    Mat m(int(rows.size()), cols);
    for (size_t r = 0; r < rows.size(); ++r) m.set_row(int(r), rows[r]);
    return m;
}

inline Mat vstack(const Mat& top, const Mat& bottom) {
    if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
        throw Error("vstack width mismatch");
    int cols = top.rows() ? top.cols() : bottom.cols();
    Mat m(top.rows() + bottom.rows(), cols);
    for (int r = 0; r < top.rows(); ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = top.at(r, c);
    for (int r = 0; r < bottom.rows(); ++r)
        for (int c = 0; c < cols; ++c) m.at(top.rows() + r, c) = bottom.at(r, c);
    return m;
}

inline Mat hstack(const Mat& left, const Mat& right) {
    if (left.rows() != right.rows()) throw Error("hstack height mismatch");
    Mat m(left.rows(), left.cols() + right.cols());
    for (int r = 0; r < left.rows(); ++r) {
        for (int c = 0; c < left.cols(); ++c) m.at(r, c) = left.at(r, c);
        for (int c = 0; c < right.cols(); ++c) m.at(r, left.cols() + c) = right.at(r, c);
    }
    return m;
}

struct Echelon {
    Mat rref;                 // reduced echelon form, pivots normalized to 1
    std::vector<int> pivots;  // pivot column of each of the first `rank` rows
    int rank = 0;
};

inline Echelon echelon_form(const Mat& m) {
    const int rows = m.rows(), cols = m.cols();

    // Scale each row to integers (row scaling changes neither row space,
    // solution sets of homogeneous/augmented systems, nor rank).
    std::vector<std::vector<Int>> z(rows, std::vector<Int>(cols));
    for (int r = 0; r < rows; ++r) {
        Int l = 1;
        for (int c = 0; c < cols; ++c) {
            Int den = m.at(r, c).get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        for (int c = 0; c < cols; ++c) {
            Rat scaled = m.at(r, c) * Rat(l);
            z[r][c] = scaled.get_num();  // denominator is 1 by construction
        }
    }

    // Bareiss forward pass with row swaps and column skipping.
    std::vector<int> pivots;
    Int prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (z[i][c] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(z[p], z[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Int t = z[r][c] * z[i][j] - z[i][c] * z[r][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][c] = 0;
        }
        prev = z[r][c];
        pivots.push_back(c);
        ++r;
    }
    const int rank = r;

    // Back-substitute in rationals to reach reduced form.
    Mat rr(rows, cols);
    for (int i = 0; i < rank; ++i) {
        Rat inv = Rat(1) / Rat(z[i][pivots[i]]);
        for (int c = pivots[i]; c < cols; ++c) rr.at(i, c) = Rat(z[i][c]) * inv;
    }
    for (int i = rank - 1; i >= 0; --i)
        for (int k = 0; k < i; ++k) {
            Rat f = rr.at(k, pivots[i]);
            if (f == 0) continue;
            for (int c = pivots[i]; c < cols; ++c) rr.at(k, c) -= f * rr.at(i, c);
        }

    return Echelon{std::move(rr), std::move(pivots), rank};
}

inline int rank(const Mat& m) { return echelon_form(m).rank; }

// Basis of {x : m x = 0}, echelon-normalized: one vector per free column, a 1
// in the free coordinate and the negated reduced column above the pivots.
inline std::vector<Vec> kernel_basis(const Mat& m) {
    Echelon e = echelon_form(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (int i = 0; i < e.rank; ++i) v[e.pivots[i]] = -e.rref.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// One solution of m X = B (columnwise), or nullopt when inconsistent.
// Free variables are set to zero, so the result is deterministic.
inline std::optional<Mat> solve_matrix(const Mat& m, const Mat& B) {
    if (m.rows() != B.rows()) throw Error("solve: right-hand side height mismatch");
    Echelon e = echelon_form(hstack(m, B));
    for (int p : e.pivots)
        if (p >= m.cols()) return std::nullopt;  // pivot escaped into the rhs
    Mat x(m.cols(), B.cols());
    for (int i = 0; i < e.rank; ++i)
        for (int j = 0; j < B.cols(); ++j) x.at(e.pivots[i], j) = e.rref.at(i, m.cols() + j);
    return x;
}

inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
    Mat B(m.rows(), 1);
    if (int(b.size()) != m.rows()) throw Error("solve: right-hand side length mismatch");
    for (int r = 0; r < m.rows(); ++r) B.at(r, 0) = b[r];
    auto X = solve_matrix(m, B);
    if (!X) return std::nullopt;
    return X->col(0);
}

struct Cokernel {
    Mat projection;  // (rows - rank) x rows, full row rank, projection * m = 0
    int dim = 0;
};

// Cokernel of m as an explicit projection off the column space: its rows are
// the echelon-normalized basis of the left kernel, so ker(projection) = im(m).
inline Cokernel cokernel_data(const Mat& m) {
    std::vector<Vec> left = kernel_basis(m.transpose());
    Mat q = mat_from_rows(left, m.rows());
    return Cokernel{std::move(q), int(left.size())};
}

// ---- row-space helpers (representation layer works with row vectors) -------

// Canonical basis of the row space: the nonzero rows of the reduced form.
inline Mat row_basis(const Mat& m) {
    Echelon e = echelon_form(m);
    Mat b(e.rank, m.cols());
    for (int i = 0; i < e.rank; ++i)
        for (int c = 0; c < m.cols(); ++c) b.at(i, c) = e.rref.at(i, c);
    return b;
}

// X with X * basis = v (expressing each row of v over the given row basis).
inline std::optional<Mat> express_rows(const Mat& v, const Mat& basis) {
    if (v.rows() == 0) return Mat(0, basis.rows());
    auto xt = solve_matrix(basis.transpose(), v.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

inline bool rows_contained(const Mat& v, const Mat& space) {
    return express_rows(v, space).has_value();
}

// Rows of `candidates` that extend rowspan(base) to rowspan(base)+rowspan(candidates),
// greedily in order (deterministic).  Returns the selected rows as a matrix.
inline Mat row_complement(const Mat& base, const Mat& candidates) {
    Mat span = base;
    std::vector<Vec> chosen;
    for (int r = 0; r < candidates.rows(); ++r) {
        Mat one(1, candidates.cols());
        one.set_row(0, candidates.row(r));
        if (span.rows() != 0 && rows_contained(one, row_basis(span))) continue;
        if (span.rows() == 0 && one.is_zero()) continue;
        chosen.push_back(candidates.row(r));
        span = span.rows() == 0 ? one : vstack(span, one);
    }
    return mat_from_rows(chosen, candidates.cols());
}

// Quotient of the ambient row space by rowspan(rows), in coordinates given by
// the non-pivot columns of the reduced form.  `proj` is ambient x dim with row
// semantics (class of x = x * proj), and the unit rows at `free_cols` form a
// section: section * proj = identity.
struct RowQuotient {
    Mat proj;
    std::vector<int> free_cols;
    int dim = 0;

    Mat section() const {
        Mat s(dim, proj.rows());
        for (int i = 0; i < dim; ++i) s.at(i, free_cols[i]) = 1;
        return s;
    }
};

inline RowQuotient quotient_mod_rows(const Mat& rows, int ambient) {
    if (rows.rows() != 0 && rows.cols() != ambient)
        throw Error("quotient_mod_rows: ambient dimension mismatch");
    Echelon e = echelon_form(rows.rows() == 0 ? Mat(0, ambient) : rows);
    std::vector<bool> is_pivot(ambient, false);
    for (int p : e.pivots) is_pivot[p] = true;
    RowQuotient q;
    for (int c = 0; c < ambient; ++c)
        if (!is_pivot[c]) q.free_cols.push_back(c);
    q.dim = int(q.free_cols.size());
    q.proj = Mat(ambient, q.dim);
    for (int j = 0; j < ambient; ++j) {
        // Reduce the unit vector e_j against the reduced rows, keep free coords.
        Vec v(ambient);
        v[j] = 1;
        for (int r = 0; r < e.rank; ++r) {
            Rat c = v[e.pivots[r]];
            if (c == 0) continue;
            for (int k = e.pivots[r]; k < ambient; ++k) v[k] -= c * e.rref.at(r, k);
        }
        for (int c = 0; c < q.dim; ++c) q.proj.at(j, c) = v[q.free_cols[c]];
    }
    return q;
}

}  // namespace qtilt
