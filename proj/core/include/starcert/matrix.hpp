#ifndef STARCERT_MATRIX_HPP
#define STARCERT_MATRIX_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace starcert {

/// Dense matrix over an exact *-ring element type. Elements carry their own
/// ring context, so identity/zero constructors take a model "one" element.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(size_t n, const T& one, const T& zero) {
        Matrix m(n, n, zero);
        for (size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const {
        check_shape(o);
        Matrix out = *this;
        for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = out.data_[k] + o.data_[k];
        return out;
    }
    Matrix operator-(const Matrix& o) const {
        check_shape(o);
        Matrix out = *this;
        for (size_t k = 0; k < data_.size(); ++k) out.data_[k] = out.data_[k] - o.data_[k];
        return out;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
        Matrix out(rows_, o.cols_, zero_like());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    const T& b = o(k, j);
                    if (b.is_zero()) continue;
                    out(i, j) = out(i, j) + a * b;
                }
            }
        return out;
    }
    Matrix operator*(const T& s) const {
        Matrix out = *this;
        for (auto& x : out.data_) x = x * s;
        return out;
    }
    Matrix operator-() const {
        Matrix out = *this;
        for (auto& x : out.data_) x = -x;
        return out;
    }

    /// Plain adjoint: transpose with entrywise involution.
    Matrix adjoint() const {
        Matrix out(cols_, rows_, zero_like());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).star();
        return out;
    }

    bool operator==(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t k = 0; k < data_.size(); ++k)
            if (!(data_[k] == o.data_[k])) return false;
        return true;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_diagonal() const {
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (i != j && !(*this)(i, j).is_zero()) return false;
        return true;
    }
    bool is_hermitian() const { return is_square() && *this == adjoint(); }

    Matrix submatrix(size_t r0, size_t c0, size_t nr, size_t nc) const {
        Matrix out(nr, nc, zero_like());
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

    std::vector<T> row(size_t i) const {
        std::vector<T> out;
        out.reserve(cols_);
        for (size_t j = 0; j < cols_; ++j) out.push_back((*this)(i, j));
        return out;
    }
    std::vector<T> col(size_t j) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    T zero_like() const {
        if (data_.empty()) return T();
        T z = data_[0];
        z = z - z;
        return z;
    }

private:
    void check_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }
    size_t rows_, cols_;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> operator*(const T& s, const Matrix<T>& m) {
    Matrix<T> out = m;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
    return out;
}

/// Gram-style expansion sum_r row_r^* row_r of a list of row vectors.
template <typename T>
Matrix<T> rows_gram(const std::vector<std::vector<T>>& rows, size_t n, const T& zero) {
    Matrix<T> out(n, n, zero);
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("rows_gram: bad row width");
        for (size_t i = 0; i < n; ++i) {
            if (r[i].is_zero()) continue;
            T ci = r[i].star();
            for (size_t j = 0; j < n; ++j) {
                if (r[j].is_zero()) continue;
                out(i, j) = out(i, j) + ci * r[j];
            }
        }
    }
    return out;
}

}  // namespace starcert

#endif
