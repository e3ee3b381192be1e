#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qhpp/rational.hpp"

namespace qhpp {

// Dense integer matrix, row-major, immutable after construction.
class IntMatrix {
public:
    IntMatrix(int rows, int cols, std::vector<Integer> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (rows_ <= 0 || cols_ <= 0)
            throw std::invalid_argument("IntMatrix: dimensions must be positive");
        if (a_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
            throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
    }

    static IntMatrix identity(int n) {
        std::vector<Integer> e(static_cast<std::size_t>(n) * n, Integer(0));
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i) * n + i] = 1;
        return IntMatrix(n, n, std::move(e));
    }

    static IntMatrix zero(int rows, int cols) {
        return IntMatrix(rows, cols, std::vector<Integer>(static_cast<std::size_t>(rows) * cols, Integer(0)));
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Integer& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        std::vector<Integer> r(static_cast<std::size_t>(rows_) * o.cols_, Integer(0));
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Integer& aik = at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r[static_cast<std::size_t>(i) * o.cols_ + j] += aik * o.at(k, j);
            }
        return IntMatrix(rows_, o.cols_, std::move(r));
    }

    IntMatrix transpose() const {
        std::vector<Integer> r(a_.size());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r[static_cast<std::size_t>(j) * rows_ + i] = at(i, j);
        return IntMatrix(cols_, rows_, std::move(r));
    }

    // Exact determinant by rational Gaussian elimination.
    Integer determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        int n = rows_;
        std::vector<Rational> m(a_.begin(), a_.end());
        auto e = [&](int i, int j) -> Rational& { return m[static_cast<std::size_t>(i) * n + j]; };
        Rational det = 1;
        for (int c = 0; c < n; ++c) {
            int p = -1;
            for (int i = c; i < n; ++i)
                if (e(i, c) != 0) { p = i; break; }
            if (p < 0) return Integer(0);
            if (p != c) {
                for (int j = c; j < n; ++j) std::swap(e(p, j), e(c, j));
                det = -det;
            }
            det *= e(c, c);
            for (int i = c + 1; i < n; ++i) {
                if (e(i, c) == 0) continue;
                Rational f = e(i, c) / e(c, c);
                for (int j = c; j < n; ++j) e(i, j) -= f * e(c, j);
            }
        }
        return num(det); // denominator is 1 after full elimination of an integer matrix
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < rows_; ++i) {
            s += "[";
            for (int j = 0; j < cols_; ++j) {
                s += at(i, j).str();
                if (j + 1 < cols_) s += ",";
            }
            s += "]";
            if (i + 1 < rows_) s += ",";
        }
        return s + "]";
    }

private:
    int rows_, cols_;
    std::vector<Integer> a_;
};

// U*M*V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... | d_r,
// all nonnegative, zeros last.
struct SmithForm {
    IntMatrix d, u, v;

    std::vector<Integer> diagonal() const {
        std::vector<Integer> out;
        int n = std::min(d.rows(), d.cols());
        for (int i = 0; i < n; ++i) out.push_back(d.at(i, i));
        return out;
    }

    // Invariant factors of the cokernel: the nonzero diagonal entries.
    std::vector<Integer> elementary_divisors() const {
        std::vector<Integer> out;
        for (const Integer& e : diagonal())
            if (e != 0) out.push_back(e);
        return out;
    }
};

namespace detail {

class SnfWorker {
public:
    explicit SnfWorker(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
        d_.assign(rows_, std::vector<Integer>(cols_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) d_[i][j] = m.at(i, j);
        u_.assign(rows_, std::vector<Integer>(rows_, Integer(0)));
        v_.assign(cols_, std::vector<Integer>(cols_, Integer(0)));
        for (int i = 0; i < rows_; ++i) u_[i][i] = 1;
        for (int j = 0; j < cols_; ++j) v_[j][j] = 1;
    }

    SmithForm run() {
        int steps = std::min(rows_, cols_);
        for (int t = 0; t < steps; ++t)
            if (!reduce_pivot(t)) break;
        for (int t = 0; t < steps; ++t)
            if (d_[t][t] < 0) negate_row(t);
        return SmithForm{pack(d_, rows_, cols_), pack(u_, rows_, rows_), pack(v_, cols_, cols_)};
    }

private:
    // Pivot choice: smallest absolute value among nonzero entries of the
    // trailing submatrix, ties broken by row-major position. This pins the
    // output for golden tests.
    bool find_pivot(int t, int& pi, int& pj) const {
        pi = -1;
        pj = -1;
        for (int i = t; i < rows_; ++i)
            for (int j = t; j < cols_; ++j) {
                if (d_[i][j] == 0) continue;
                if (pi < 0 || abs(d_[i][j]) < abs(d_[pi][pj])) {
                    pi = i;
                    pj = j;
                }
            }
        return pi >= 0;
    }

    bool reduce_pivot(int t) {
        for (;;) {
            int pi, pj;
            if (!find_pivot(t, pi, pj)) return false;
            if (pi != t) swap_rows(t, pi);
            if (pj != t) swap_cols(t, pj);

            bool leftover = false;
            for (int i = t + 1; i < rows_; ++i) {
                if (d_[i][t] == 0) continue;
                Integer q = d_[i][t] / d_[t][t];
                if (q != 0) add_row(i, t, -q);
                if (d_[i][t] != 0) leftover = true;
            }
            for (int j = t + 1; j < cols_; ++j) {
                if (d_[t][j] == 0) continue;
                Integer q = d_[t][j] / d_[t][t];
                if (q != 0) add_col(j, t, -q);
                if (d_[t][j] != 0) leftover = true;
            }
            if (leftover) continue; // some remainder is smaller than the pivot

            // Divisibility sweep: the pivot must divide every entry of the
            // trailing submatrix before we recurse, so d_1 | d_2 | ... holds.
            bool fixed = true;
            for (int i = t + 1; i < rows_ && fixed; ++i)
                for (int j = t + 1; j < cols_ && fixed; ++j)
                    if (d_[i][j] % d_[t][t] != 0) {
                        add_row(t, i, Integer(1));
                        fixed = false;
                    }
            if (fixed) return true;
        }
    }

    void swap_rows(int a, int b) {
        d_[a].swap(d_[b]);
        u_[a].swap(u_[b]);
    }
    void swap_cols(int a, int b) {
        for (int i = 0; i < rows_; ++i) std::swap(d_[i][a], d_[i][b]);
        for (int i = 0; i < cols_; ++i) std::swap(v_[i][a], v_[i][b]);
    }
    void add_row(int dst, int src, const Integer& f) {
        for (int j = 0; j < cols_; ++j) d_[dst][j] += f * d_[src][j];
        for (int j = 0; j < rows_; ++j) u_[dst][j] += f * u_[src][j];
    }
    void add_col(int dst, int src, const Integer& f) {
        for (int i = 0; i < rows_; ++i) d_[i][dst] += f * d_[i][src];
        for (int i = 0; i < cols_; ++i) v_[i][dst] += f * v_[i][src];
    }
    void negate_row(int r) {
        for (int j = 0; j < cols_; ++j) d_[r][j] = -d_[r][j];
        for (int j = 0; j < rows_; ++j) u_[r][j] = -u_[r][j];
    }

    static IntMatrix pack(const std::vector<std::vector<Integer>>& m, int rows, int cols) {
        std::vector<Integer> flat;
        flat.reserve(static_cast<std::size_t>(rows) * cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) flat.push_back(m[i][j]);
        return IntMatrix(rows, cols, std::move(flat));
    }

    int rows_, cols_;
    std::vector<std::vector<Integer>> d_, u_, v_;
};

} // namespace detail

inline SmithForm smith_normal_form(const IntMatrix& m) {
    return detail::SnfWorker(m).run();
}

// Exact solution of M x = b for square M invertible over Q.
inline std::vector<Rational> solve_linear_rational(const IntMatrix& m, const std::vector<Rational>& b) {
    if (m.rows() != m.cols()) throw std::invalid_argument("solve_linear_rational: matrix must be square");
    int n = m.rows();
    if (b.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("solve_linear_rational: right-hand side size mismatch");

    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
        a[i][n] = b[i];
    }
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { p = i; break; }
        if (p < 0) throw SingularMatrix("solve_linear_rational: matrix is singular");
        if (p != c) a[p].swap(a[c]);
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (int j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

} // namespace qhpp
