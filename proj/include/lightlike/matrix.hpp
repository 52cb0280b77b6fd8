// Dense row-major matrices over an exact or floating scalar.

#pragma once

#include <cstddef>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lightlike/rational.hpp"

namespace lightlike {

template <typename T>
using Vec = std::vector<T>;

// The two supported scalar modes. Rational comparisons are exact; the double
// instantiation uses a fixed pivot threshold (float mode only backs the
// sampling-based Osserman test, never the frame/oracle machinery).
template <typename T>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
    static bool is_zero(const Rational& x) { return x.is_zero(); }
    static bool abs_less(const Rational& a, const Rational& b) {
        return Rational::cmp_abs(a, b) < 0;
    }
    static std::string str(const Rational& x) { return x.to_string(); }
};

template <>
struct ScalarOps<double> {
    static constexpr double pivot_eps = 1e-12;
    static bool is_zero(double x) { return std::fabs(x) < pivot_eps; }
    static bool abs_less(double a, double b) { return std::fabs(a) < std::fabs(b); }
    static std::string str(double x) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }
};

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), v_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }
    bool is_zero() const {
        for (const T& x : v_)
            if (!(x == T(0))) return false;
        return true;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Vec<T> row(std::size_t i) const {
        Vec<T> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    Vec<T> col(std::size_t j) const {
        Vec<T> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
        return r;
    }
    void set_col(std::size_t j, const Vec<T>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.v_.size(); ++i) r.v_[i] = a.v_[i] + b.v_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.v_.size(); ++i) r.v_[i] = a.v_[i] - b.v_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.v_.size(); ++i) r.v_[i] = s * a.v_[i];
        return r;
    }
    friend Vec<T> operator*(const Matrix& a, const Vec<T>& x) {
        if (a.cols_ != x.size()) throw std::invalid_argument("Matrix: size mismatch in apply");
        Vec<T> r(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * x[j];
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    template <typename U, typename F>
    Matrix<U> map(F f) const {
        Matrix<U> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i == 0 ? "[" : " ");
            for (std::size_t j = 0; j < cols_; ++j)
                os << ScalarOps<T>::str((*this)(i, j)) << (j + 1 < cols_ ? " " : "");
            os << (i + 1 < rows_ ? ";\n" : "]");
        }
        return os.str();
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> v_;
};

template <typename T>
Vec<T> vec_add(const Vec<T>& a, const Vec<T>& b) {
    Vec<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <typename T>
Vec<T> vec_sub(const Vec<T>& a, const Vec<T>& b) {
    Vec<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <typename T>
Vec<T> vec_scale(const T& s, const Vec<T>& a) {
    Vec<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

template <typename T>
bool vec_is_zero(const Vec<T>& a) {
    for (const T& x : a)
        if (!(x == T(0))) return false;
    return true;
}

template <typename T>
T dot(const Vec<T>& a, const Vec<T>& b) {
    T r(0);
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

// x^T G y
template <typename T>
T bilinear(const Matrix<T>& g, const Vec<T>& x, const Vec<T>& y) {
    T r(0);
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (x[i] == T(0)) continue;
        T s(0);
        for (std::size_t j = 0; j < g.cols(); ++j) s += g(i, j) * y[j];
        r += x[i] * s;
    }
    return r;
}

template <typename T>
Vec<T> basis_vector(std::size_t n, std::size_t i) {
    Vec<T> r(n, T(0));
    r[i] = T(1);
    return r;
}

inline Matrix<double> to_double(const Matrix<Rational>& m) {
    return m.template map<double>([](const Rational& x) { return x.to_double(); });
}

inline Vec<double> to_double(const Vec<Rational>& v) {
    Vec<double> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].to_double();
    return r;
}

}  // namespace lightlike
