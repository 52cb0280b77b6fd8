// Degenerate symmetric bilinear forms: radical extraction, submanifold-kind
// classification, adapted frames (radical + screen + transversal one-forms)
// and the associated nondegenerate metric
//
//     g~(X,Y) = g(X,Y) + sum_i eta_i(X) eta_i(Y),
//
// which collapses to sum_i eta_i(X) eta_i(Y) when the radical is everything
// (there g vanishes identically, so one formula serves all four cases).

#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lightlike/linalg.hpp"
#include "lightlike/matrix.hpp"
#include "lightlike/prng.hpp"

namespace lightlike {

enum class SubmanifoldKind { Nondegenerate, RLightlike, Coisotropic, Isotropic, TotallyLightlike };

inline const char* to_string(SubmanifoldKind k) {
    switch (k) {
        case SubmanifoldKind::Nondegenerate: return "nondegenerate";
        case SubmanifoldKind::RLightlike: return "r-lightlike";
        case SubmanifoldKind::Coisotropic: return "coisotropic";
        case SubmanifoldKind::Isotropic: return "isotropic";
        case SubmanifoldKind::TotallyLightlike: return "totally lightlike";
    }
    return "?";
}

// (m, n, r) = (dimension, codimension, radical rank).
inline SubmanifoldKind classify(std::size_t m, std::size_t n, std::size_t r) {
    if (m == 0 || n == 0) throw std::invalid_argument("classify: dimensions must be positive");
    if (r > m || r > n)
        throw std::invalid_argument("classify: radical rank exceeds min(dim, codim)");
    if (r == 0) return SubmanifoldKind::Nondegenerate;
    if (r == m && r == n) return SubmanifoldKind::TotallyLightlike;
    if (r == m) return SubmanifoldKind::Isotropic;
    if (r == n) return SubmanifoldKind::Coisotropic;
    return SubmanifoldKind::RLightlike;
}

template <typename T>
class DegenerateForm {
public:
    explicit DegenerateForm(Matrix<T> gram) : gram_(std::move(gram)) {
        if (!gram_.is_symmetric())
            throw std::invalid_argument("DegenerateForm: Gram matrix must be symmetric");
        radical_rank_ = null_space(gram_).size();
    }

    const Matrix<T>& gram() const { return gram_; }
    std::size_t dim() const { return gram_.rows(); }
    std::size_t radical_rank() const { return radical_rank_; }

    T operator()(const Vec<T>& x, const Vec<T>& y) const { return bilinear(gram_, x, y); }

private:
    Matrix<T> gram_;
    std::size_t radical_rank_;
};

template <typename T>
std::vector<Vec<T>> compute_radical(const DegenerateForm<T>& g) {
    return null_space(g.gram());
}

template <typename T>
struct FrameHint {
    std::vector<Vec<T>> radical;
    std::vector<Vec<T>> screen;
    std::optional<std::vector<Vec<T>>> etas;  // row covectors, one per radical vector
};

// Ordered basis (xi_1..xi_r, E_{r+1}..E_m) in the working coordinates, plus
// the transversal one-forms eta_i. The eta_i are exactly the first r dual
// covectors of the completed basis: eta_i(xi_j) = delta_ij and eta_i = 0 on
// the screen pin them down once the basis is fixed.
template <typename T>
class AdaptedFrame {
public:
    std::size_t dim() const { return basis_.rows(); }
    std::size_t radical_rank() const { return r_; }
    std::size_t codim() const { return codim_; }
    std::size_t screen_dim() const { return dim() - r_; }

    const Matrix<T>& basis() const { return basis_; }          // columns: xi then screen
    const Matrix<T>& basis_inverse() const { return binv_; }   // rows 0..r-1 are the eta_i
    const Matrix<T>& gram() const { return gram_; }            // g in working coordinates

    Vec<T> radical_vector(std::size_t i) const { return basis_.col(i); }
    Vec<T> screen_vector(std::size_t k) const { return basis_.col(r_ + k); }
    Vec<T> eta(std::size_t i) const { return binv_.row(i); }

    // g expressed in the frame basis: P^T G P.
    Matrix<T> frame_gram() const { return basis_.transposed() * gram_ * basis_; }

    Matrix<T> screen_gram() const {
        Matrix<T> fg = frame_gram();
        const std::size_t s = screen_dim();
        Matrix<T> out(s, s);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) out(i, j) = fg(r_ + i, r_ + j);
        return out;
    }

    Vec<T> to_frame(const Vec<T>& coords) const { return binv_ * coords; }
    Vec<T> to_coords(const Vec<T>& frame) const { return basis_ * frame; }

    const std::string& descriptor() const { return descriptor_; }

    static AdaptedFrame build(const DegenerateForm<T>& g, std::size_t codim,
                              const std::optional<FrameHint<T>>& hint = std::nullopt);

private:
    AdaptedFrame() = default;

    std::size_t r_ = 0, codim_ = 0;
    Matrix<T> basis_, binv_, gram_;
    std::string descriptor_;
};

namespace detail {

template <typename T>
bool extends_independent(const std::vector<Vec<T>>& chosen, const Vec<T>& cand) {
    Matrix<T> m(chosen.size() + 1, cand.size());
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = 0; j < cand.size(); ++j) m(i, j) = chosen[i][j];
    for (std::size_t j = 0; j < cand.size(); ++j) m(chosen.size(), j) = cand[j];
    return rank(m) == chosen.size() + 1;
}

template <typename T>
T gram_det(const Matrix<T>& g, const std::vector<Vec<T>>& vecs) {
    Matrix<T> s(vecs.size(), vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < vecs.size(); ++j) s(i, j) = bilinear(g, vecs[i], vecs[j]);
    return determinant(s);
}

}  // namespace detail

template <typename T>
AdaptedFrame<T> AdaptedFrame<T>::build(const DegenerateForm<T>& g, std::size_t codim,
                                       const std::optional<FrameHint<T>>& hint) {
    const std::size_t m = g.dim();
    const std::size_t r = g.radical_rank();
    AdaptedFrame<T> f;
    f.r_ = r;
    f.codim_ = codim;
    f.gram_ = g.gram();

    std::vector<Vec<T>> radical, screen;
    if (hint) {
        radical = hint->radical;
        screen = hint->screen;
        if (radical.size() != r)
            throw std::invalid_argument("frame hint: radical vector count != radical rank");
        for (const auto& xi : radical)
            if (!vec_is_zero(g.gram() * xi))
                throw std::invalid_argument("frame hint: radical vector not annihilated by g");
        if (radical.size() + screen.size() != m)
            throw std::invalid_argument("frame hint: basis is not complete");
        f.descriptor_ = "hint";
    } else {
        radical = null_space(g.gram());
        // Greedy pivot completion over standard basis vectors: keep the
        // candidate maximizing |det ratio| of the screen Gram; when every
        // single extension has pivot zero, add the best nonsingular pair
        // (the off-diagonal 2x2 step).
        std::vector<Vec<T>> all = radical;
        T cur_det(1);
        while (radical.size() + screen.size() < m) {
            std::size_t best = m;
            T best_piv(0);
            for (std::size_t k = 0; k < m; ++k) {
                Vec<T> e = basis_vector<T>(m, k);
                if (!detail::extends_independent(all, e)) continue;
                std::vector<Vec<T>> ext = screen;
                ext.push_back(e);
                T piv = detail::gram_det(g.gram(), ext) / cur_det;
                if (!ScalarOps<T>::is_zero(piv) &&
                    (best == m || ScalarOps<T>::abs_less(best_piv, piv))) {
                    best = k;
                    best_piv = piv;
                }
            }
            if (best != m) {
                screen.push_back(basis_vector<T>(m, best));
                all.push_back(basis_vector<T>(m, best));
                cur_det *= best_piv;
                continue;
            }
            // 2x2 fallback
            std::size_t bi = m, bj = m;
            T best_ratio(0);
            for (std::size_t i = 0; i < m; ++i) {
                Vec<T> ei = basis_vector<T>(m, i);
                if (!detail::extends_independent(all, ei)) continue;
                std::vector<Vec<T>> with_i = all;
                with_i.push_back(ei);
                for (std::size_t j = i + 1; j < m; ++j) {
                    Vec<T> ej = basis_vector<T>(m, j);
                    if (!detail::extends_independent(with_i, ej)) continue;
                    std::vector<Vec<T>> ext = screen;
                    ext.push_back(ei);
                    ext.push_back(ej);
                    T ratio = detail::gram_det(g.gram(), ext) / cur_det;
                    if (!ScalarOps<T>::is_zero(ratio) &&
                        (bi == m || ScalarOps<T>::abs_less(best_ratio, ratio))) {
                        bi = i;
                        bj = j;
                        best_ratio = ratio;
                    }
                }
            }
            if (bi == m)
                throw std::runtime_error(
                    "build_adapted_frame: cannot certify a nondegenerate screen");
            screen.push_back(basis_vector<T>(m, bi));
            screen.push_back(basis_vector<T>(m, bj));
            all.push_back(basis_vector<T>(m, bi));
            all.push_back(basis_vector<T>(m, bj));
            cur_det *= best_ratio;
        }
        std::ostringstream d;
        d << "auto(r=" << r << ";screen=";
        for (std::size_t k = 0; k < screen.size(); ++k) {
            for (std::size_t j = 0; j < m; ++j)
                if (!(screen[k][j] == T(0))) {
                    d << (k ? "," : "") << "e" << j;
                    break;
                }
        }
        d << ")";
        f.descriptor_ = d.str();
    }

    f.basis_ = Matrix<T>(m, m);
    for (std::size_t i = 0; i < r; ++i) f.basis_.set_col(i, radical[i]);
    for (std::size_t k = 0; k < screen.size(); ++k) f.basis_.set_col(r + k, screen[k]);
    try {
        f.binv_ = invert(f.basis_);
    } catch (const SingularMatrixError<T>&) {
        throw std::invalid_argument("frame: basis vectors are not independent");
    }

    if (ScalarOps<T>::is_zero(determinant(f.screen_gram())))
        throw std::invalid_argument("frame: screen restriction of g is singular");

    if (hint && hint->etas) {
        const auto& etas = *hint->etas;
        if (etas.size() != r) throw std::invalid_argument("frame hint: eta count != radical rank");
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                T v = dot(etas[i], radical[j]);
                if (!(v == (i == j ? T(1) : T(0))))
                    throw std::invalid_argument("frame hint: eta_i(xi_j) != delta_ij");
            }
            for (const auto& e : screen)
                if (!(dot(etas[i], e) == T(0)))
                    throw std::invalid_argument("frame hint: eta does not annihilate screen");
        }
    }
    return f;
}

template <typename T>
AdaptedFrame<T> build_adapted_frame(const DegenerateForm<T>& g, std::size_t codim,
                                    const std::optional<FrameHint<T>>& hint = std::nullopt) {
    return AdaptedFrame<T>::build(g, codim, hint);
}

// Deterministic degenerate Gram of prescribed dimension and radical rank:
// an integer-sheared congruence image of diag(d_1..d_{dim-rank}, 0..0).
template <typename T>
DegenerateForm<T> random_degenerate_form(SplitMix64& rng, std::size_t dim, std::size_t rank) {
    if (rank > dim) throw std::invalid_argument("random_degenerate_form: rank > dim");
    Matrix<T> d(dim, dim);
    for (std::size_t i = 0; i < dim - rank; ++i) {
        long long v = 0;
        while (v == 0) v = rng.uniform_int(-4, 4);
        d(i, i) = T(v);
    }
    Matrix<T> q = Matrix<T>::identity(dim);
    for (int k = 0; k < 14; ++k) {
        std::size_t i = rng.next() % dim, j = rng.next() % dim;
        if (i == j) continue;
        Matrix<T> s = Matrix<T>::identity(dim);
        s(i, j) = T((long long)rng.uniform_int(-2, 2));
        q = q * s;
    }
    return DegenerateForm<T>(q.transposed() * d * q);
}

// g~ and its inverse, in frame components (where g~ = I_r (+) screen Gram)
// and in working coordinates (used by the musical isomorphisms).
template <typename T>
struct AssociatedMetric {
    Matrix<T> gram_tilde;    // frame components
    Matrix<T> inverse;       // frame components
    Matrix<T> metric_frame;  // g itself in frame components (radical rows/cols zero)
    Matrix<T> gram_tilde_coords;
    Matrix<T> inverse_coords;
};

template <typename T>
Matrix<T> gram_tilde_coords(const AdaptedFrame<T>& frame) {
    Matrix<T> gt = frame.gram();
    for (std::size_t i = 0; i < frame.radical_rank(); ++i) {
        Vec<T> eta = frame.eta(i);
        for (std::size_t a = 0; a < frame.dim(); ++a)
            for (std::size_t b = 0; b < frame.dim(); ++b) gt(a, b) += eta[a] * eta[b];
    }
    return gt;
}

template <typename T>
AssociatedMetric<T> associated_metric(const DegenerateForm<T>& g, const AdaptedFrame<T>& frame) {
    (void)g;  // the frame carries a copy of the same Gram
    AssociatedMetric<T> am;
    am.gram_tilde_coords = gram_tilde_coords(frame);
    am.metric_frame = frame.frame_gram();
    am.gram_tilde = frame.basis().transposed() * am.gram_tilde_coords * frame.basis();
    am.inverse = invert(am.gram_tilde);
    am.inverse_coords = invert(am.gram_tilde_coords);
    return am;
}

// X -> g(X,.) + sum eta_i(X) eta_i(.)
template <typename T>
Vec<T> flat(const AdaptedFrame<T>& frame, const Vec<T>& x) {
    Vec<T> omega = frame.gram() * x;
    for (std::size_t i = 0; i < frame.radical_rank(); ++i) {
        Vec<T> eta = frame.eta(i);
        T c = dot(eta, x);
        for (std::size_t a = 0; a < frame.dim(); ++a) omega[a] += c * eta[a];
    }
    return omega;
}

template <typename T>
Vec<T> sharp(const AdaptedFrame<T>& frame, const Vec<T>& omega) {
    return invert(gram_tilde_coords(frame)) * omega;
}

template <typename T>
Vec<T> sharp(const AssociatedMetric<T>& am, const Vec<T>& omega) {
    return am.inverse_coords * omega;
}

}  // namespace lightlike
