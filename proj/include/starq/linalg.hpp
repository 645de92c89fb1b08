#pragma once

#include <optional>
#include <vector>

#include "starq/error.hpp"

namespace starq {

// Dense matrix over an exact field (Rational, or rational functions of the
// reduction parameters). Pivoting only needs exact zero tests.
template <class T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t r, std::size_t c, const T& fill = T(0)) : rows_(r), cols_(c), a_(r * c, fill) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    static Mat from_rows(const std::vector<std::vector<T>>& rows) {
        Mat m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw error("Mat: ragged rows");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }
    const T& at(std::size_t i, std::size_t j) const { return a_.at(i * cols_ + j); }

    Mat transpose() const {
        Mat m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw error("Mat add: shape mismatch");
        Mat m = x;
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] + y.a_[k];
        return m;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw error("Mat sub: shape mismatch");
        Mat m = x;
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = m.a_[k] - y.a_[k];
        return m;
    }
    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw error("Mat mul: shape mismatch");
        Mat m(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x.at(i, k) == T(0)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    m.at(i, j) = m.at(i, j) + x.at(i, k) * y.at(k, j);
            }
        return m;
    }

    Mat scaled(const T& s) const {
        Mat m = *this;
        for (auto& v : m.a_) v = v * s;
        return m;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != cols_) throw error("Mat apply: shape mismatch");
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] = r[i] + at(i, j) * v[j];
        return r;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_skew() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(at(i, j) == -at(j, i))) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!(at(i, j) == at(j, i))) return false;
        return true;
    }

    T det() const {
        if (rows_ != cols_) throw error("det: square matrix required");
        Mat m = *this;
        T d(1);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t piv = col;
            while (piv < rows_ && m.at(piv, col) == T(0)) ++piv;
            if (piv == rows_) return T(0);
            if (piv != col) {
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(col, j));
                d = T(0) - d;
            }
            d = d * m.at(col, col);
            T inv = T(1) / m.at(col, col);
            for (std::size_t i = col + 1; i < rows_; ++i) {
                if (m.at(i, col) == T(0)) continue;
                T f = m.at(i, col) * inv;
                for (std::size_t j = col; j < cols_; ++j)
                    m.at(i, j) = m.at(i, j) - f * m.at(col, j);
            }
        }
        return d;
    }

    Mat inverse() const {
        if (rows_ != cols_) throw error("inverse: square matrix required");
        Mat m = *this, inv = identity(rows_);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t piv = col;
            while (piv < rows_ && m.at(piv, col) == T(0)) ++piv;
            if (piv == rows_) throw error("inverse: singular matrix");
            if (piv != col)
                for (std::size_t j = 0; j < cols_; ++j) {
                    std::swap(m.at(piv, j), m.at(col, j));
                    std::swap(inv.at(piv, j), inv.at(col, j));
                }
            T f = T(1) / m.at(col, col);
            for (std::size_t j = 0; j < cols_; ++j) {
                m.at(col, j) = m.at(col, j) * f;
                inv.at(col, j) = inv.at(col, j) * f;
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == col || m.at(i, col) == T(0)) continue;
                T g = m.at(i, col);
                for (std::size_t j = 0; j < cols_; ++j) {
                    m.at(i, j) = m.at(i, j) - g * m.at(col, j);
                    inv.at(i, j) = inv.at(i, j) - g * inv.at(col, j);
                }
            }
        }
        return inv;
    }

    // Laplace-expansion determinant: one division-free scalar, no pivots.
    // Intended for the small symbolic matrices of the reduction pipeline.
    T det_laplace() const {
        if (rows_ != cols_) throw error("det: square matrix required");
        if (rows_ == 0) return T(1);
        if (rows_ == 1) return at(0, 0);
        T acc(0);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(0, j) == T(0)) continue;
            T term = at(0, j) * minor_matrix(0, j).det_laplace();
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    }

    Mat minor_matrix(std::size_t row, std::size_t col) const {
        Mat m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, ii = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, jj = 0; j < cols_; ++j) {
                if (j == col) continue;
                m.at(ii, jj++) = at(i, j);
            }
            ++ii;
        }
        return m;
    }

    // transpose of the cofactor matrix; A · adj(A) = det(A) · I
    Mat adjugate() const {
        if (rows_ != cols_) throw error("adjugate: square matrix required");
        Mat adj(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                T c = minor_matrix(i, j).det_laplace();
                if ((i + j) % 2 == 1) c = T(0) - c;
                adj.at(j, i) = c;
            }
        return adj;
    }

    // kernel vector of a full-rank m×(m+1) matrix by Cramer minors; the zero
    // vector signals rank deficiency
    std::vector<T> kernel_by_minors() const {
        if (cols_ != rows_ + 1) throw error("kernel_by_minors: need an m x (m+1) matrix");
        std::vector<T> v(cols_, T(0));
        for (std::size_t j = 0; j < cols_; ++j) {
            Mat m(rows_, rows_);
            for (std::size_t i = 0; i < rows_; ++i)
                for (std::size_t k = 0, kk = 0; k < cols_; ++k) {
                    if (k == j) continue;
                    m.at(i, kk++) = at(i, k);
                }
            T d = m.det_laplace();
            v[j] = (j % 2 == 0) ? d : T(0) - d;
        }
        return v;
    }

    std::size_t rank() const {
        Mat m = *this;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && m.at(piv, col) == T(0)) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
            T f = T(1) / m.at(r, col);
            for (std::size_t i = piv == r ? r + 1 : piv; i < rows_; ++i) {
                if (m.at(i, col) == T(0)) continue;
                T g = m.at(i, col) * f;
                for (std::size_t j = col; j < cols_; ++j)
                    m.at(i, j) = m.at(i, j) - g * m.at(r, j);
            }
            ++r;
        }
        return r;
    }

    // any solution of A x = b, or nullopt when inconsistent
    std::optional<std::vector<T>> solve(const std::vector<T>& b) const {
        if (b.size() != rows_) throw error("solve: shape mismatch");
        Mat m(rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
            m.at(i, cols_) = b[i];
        }
        std::vector<std::size_t> pivot_col;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && m.at(piv, col) == T(0)) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (std::size_t j = 0; j <= cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
            T f = T(1) / m.at(r, col);
            for (std::size_t j = col; j <= cols_; ++j) m.at(r, j) = m.at(r, j) * f;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m.at(i, col) == T(0)) continue;
                T g = m.at(i, col);
                for (std::size_t j = col; j <= cols_; ++j)
                    m.at(i, j) = m.at(i, j) - g * m.at(r, j);
            }
            pivot_col.push_back(col);
            ++r;
        }
        for (std::size_t i = r; i < rows_; ++i)
            if (!(m.at(i, cols_) == T(0))) return std::nullopt;
        std::vector<T> x(cols_, T(0));
        for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = m.at(i, cols_);
        return x;
    }

    // basis of the kernel of A
    std::vector<std::vector<T>> kernel() const {
        Mat m = *this;
        std::vector<std::size_t> pivot_col;
        std::size_t r = 0;
        for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
            std::size_t piv = r;
            while (piv < rows_ && m.at(piv, col) == T(0)) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(r, j));
            T f = T(1) / m.at(r, col);
            for (std::size_t j = col; j < cols_; ++j) m.at(r, j) = m.at(r, j) * f;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || m.at(i, col) == T(0)) continue;
                T g = m.at(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    m.at(i, j) = m.at(i, j) - g * m.at(r, j);
            }
            pivot_col.push_back(col);
            ++r;
        }
        std::vector<bool> is_pivot(cols_, false);
        for (auto c : pivot_col) is_pivot[c] = true;
        std::vector<std::vector<T>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<T> v(cols_, T(0));
            v[free] = T(1);
            for (std::size_t i = 0; i < pivot_col.size(); ++i)
                v[pivot_col[i]] = T(0) - m.at(i, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

} // namespace starq
