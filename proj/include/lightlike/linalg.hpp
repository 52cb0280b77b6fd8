// Exact dense linear algebra: kernels, characteristic polynomials,
// congruence signatures and inverses. Everything here is pure and works the
// same over Rational (exact) and double (pivot threshold from ScalarOps).

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lightlike/matrix.hpp"

namespace lightlike {

template <typename T>
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(Vec<T> witness)
        : std::runtime_error("singular matrix (kernel witness attached)"),
          kernel_witness(std::move(witness)) {}
    Vec<T> kernel_witness;
};

namespace detail {

// Row echelon elimination with partial pivoting (by |.|, first index wins
// ties). Returns pivot column list; `m` is reduced in place to RREF.
template <typename T>
std::vector<std::size_t> rref(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t best = row;
        for (std::size_t i = row + 1; i < m.rows(); ++i)
            if (ScalarOps<T>::abs_less(m(best, col), m(i, col))) best = i;
        if (ScalarOps<T>::is_zero(m(best, col))) continue;
        if (best != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(best, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == T(0)) continue;
            T factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) = m(i, j) - factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

template <typename T>
std::size_t rank(Matrix<T> m) {
    return detail::rref(m).size();
}

// Basis of { v : M v = 0 }; empty for a trivial kernel.
template <typename T>
std::vector<Vec<T>> null_space(Matrix<T> m) {
    const std::size_t n = m.cols();
    std::vector<std::size_t> pivots = detail::rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vec<T>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec<T> v(n, T(0));
        v[free_col] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <typename T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (ScalarOps<T>::abs_less(m(best, col), m(i, col))) best = i;
        if (ScalarOps<T>::is_zero(m(best, col))) return T(0);
        if (best != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(best, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        T inv = T(1) / m(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col) == T(0)) continue;
            T factor = inv * m(i, col);
            for (std::size_t j = col; j < n; ++j) m(i, j) = m(i, j) - factor * m(col, j);
        }
    }
    return det;
}

// Exact inverse; throws SingularMatrixError carrying a kernel vector.
template <typename T>
Matrix<T> invert(const Matrix<T>& a) {
    if (!a.is_square()) throw std::invalid_argument("invert: matrix not square");
    const std::size_t n = a.rows();
    Matrix<T> m = a;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t best = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (ScalarOps<T>::abs_less(m(best, col), m(i, col))) best = i;
        if (ScalarOps<T>::is_zero(m(best, col))) {
            std::vector<Vec<T>> ker = null_space(a);
            if (ker.empty()) ker.push_back(Vec<T>(n, T(0)));  // float-mode borderline pivot
            throw SingularMatrixError<T>(ker.front());
        }
        if (best != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(best, j), m(col, j));
                std::swap(inv(best, j), inv(col, j));
            }
        T piv_inv = T(1) / m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) *= piv_inv;
            inv(col, j) *= piv_inv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col) == T(0)) continue;
            T factor = m(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = m(i, j) - factor * m(col, j);
                inv(i, j) = inv(i, j) - factor * inv(col, j);
            }
        }
    }
    return inv;
}

// Coefficients of det(A - lambda I), ascending powers of lambda; the leading
// coefficient is (-1)^n.
template <typename T>
struct CharPoly {
    std::vector<T> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    friend bool operator==(const CharPoly& a, const CharPoly& b) { return a.coeffs == b.coeffs; }
    friend bool operator!=(const CharPoly& a, const CharPoly& b) { return !(a == b); }

    // lambda^n with the det(A - lambda I) sign convention.
    static CharPoly pure_power(std::size_t n) {
        CharPoly p;
        p.coeffs.assign(n + 1, T(0));
        p.coeffs[n] = (n % 2 == 0) ? T(1) : T(-1);
        return p;
    }

    T evaluate(const T& x) const {
        T acc(0);
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            if (coeffs[i] == T(0)) continue;
            if (!s.empty()) s += " + ";
            s += "(" + ScalarOps<T>::str(coeffs[i]) + ")";
            if (i == 1) s += "*t";
            if (i > 1) s += "*t^" + std::to_string(i);
        }
        return s.empty() ? "0" : s;
    }
};

// Faddeev-LeVerrier recurrence; the integer divisions stay exact over
// Rational.
template <typename T>
CharPoly<T> char_poly(const Matrix<T>& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly: matrix not square");
    const std::size_t n = a.rows();
    CharPoly<T> out;
    out.coeffs.assign(n + 1, T(0));

    // p(l) = det(l I - A) = l^n + c[n-1] l^(n-1) + ... + c[0]
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    Matrix<T> m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix<T> shifted = m;
            for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
            m = a * shifted;
        }
        T tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += m(i, i);
        c[n - k] = -(tr / T((long long)k));
    }

    const T flip = (n % 2 == 0) ? T(1) : T(-1);  // det(A - lI) = (-1)^n det(lI - A)
    for (std::size_t i = 0; i <= n; ++i) out.coeffs[i] = flip * c[i];
    return out;
}

struct Signature {
    std::size_t positive = 0, negative = 0, zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

// Symmetric congruence diagonalization: returns (C, d) with C^T S C = diag(d),
// C invertible. Pivot search takes the largest remaining |diagonal|; when the
// whole active diagonal vanishes, the usual off-diagonal 2x2 step creates one.
template <typename T>
std::pair<Matrix<T>, Vec<T>> symmetric_diagonalize(const Matrix<T>& s) {
    if (!s.is_symmetric())
        throw std::invalid_argument("symmetric_diagonalize: matrix not symmetric");
    const std::size_t n = s.rows();
    Matrix<T> m = s;
    Matrix<T> c = Matrix<T>::identity(n);

    auto add_col = [&](std::size_t dst, std::size_t src, const T& factor) {
        // basis change e_dst <- e_dst + factor e_src, applied as congruence
        for (std::size_t i = 0; i < n; ++i) m(i, dst) += factor * m(i, src);
        for (std::size_t j = 0; j < n; ++j) m(dst, j) += factor * m(src, j);
        for (std::size_t i = 0; i < n; ++i) c(i, dst) += factor * c(i, src);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
        for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(c(i, a), c(i, b));
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        for (std::size_t i = k; i < n; ++i)
            if (ScalarOps<T>::abs_less(m(best, best), m(i, i))) best = i;
        if (ScalarOps<T>::is_zero(m(best, best))) {
            // all active diagonal entries vanish; look for an off-diagonal seed
            std::size_t bi = n, bj = n;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!ScalarOps<T>::is_zero(m(i, j)) &&
                        (bi == n || ScalarOps<T>::abs_less(m(bi, bj), m(i, j)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == n) break;  // active block is identically zero
            add_col(bi, bj, T(1));
            best = bi;
        }
        swap_cols(best, k);
        T piv = m(k, k);
        for (std::size_t j = k + 1; j < n; ++j) {
            if (m(k, j) == T(0)) continue;
            add_col(j, k, -(m(k, j) / piv));
        }
    }

    Vec<T> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = m(i, i);
    return {c, diag};
}

// Inertia (n_plus, n_minus, n_zero) of a symmetric matrix via congruence.
template <typename T>
Signature congruence_signature(const Matrix<T>& s) {
    if (!s.is_symmetric())
        throw std::invalid_argument("congruence_signature: matrix not symmetric");
    auto [c, diag] = symmetric_diagonalize(s);
    Signature sig;
    for (const T& d : diag) {
        if (ScalarOps<T>::is_zero(d))
            ++sig.zero;
        else if (d < T(0))
            ++sig.negative;
        else
            ++sig.positive;
    }
    return sig;
}

}  // namespace lightlike
