// Pointwise lightlike-hypersurface data in a constant-curvature ambient and
// the symmetry checkers built on the induced curvature
//
//   R(X,Y)Z = c { g(Y,Z) X - g(X,Z) Y } + B(Y,Z) A_N X - B(X,Z) A_N Y.
//
// Everything is pointwise: g, B, A_N are free tensors subject to the type
// invariants (B(xi,.) = 0, A_N screen-valued), nothing is integrated. The
// exhaustive tuple checks are exact because all residuals are multilinear.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lightlike/curvature.hpp"
#include "lightlike/degenerate.hpp"
#include "lightlike/linalg.hpp"
#include "lightlike/matrix.hpp"
#include "lightlike/prng.hpp"

namespace lightlike {

struct HypersurfacePoint {
    std::size_t m = 1;         // screen dimension; tangent dimension is m+1
    Rational c;                // ambient sectional curvature
    Matrix<Rational> g;        // degenerate metric, radical rank 1
    Vec<Rational> xi;          // radical generator
    Vec<Rational> eta;         // eta(xi) = 1, eta = 0 on the screen ker(eta)
    Matrix<Rational> B;        // local second fundamental form
    Matrix<Rational> A;        // shape operator A_N, screen-valued

    std::size_t dim() const { return m + 1; }

    // P = id - xi (x) eta, the screen projection
    Matrix<Rational> projection() const {
        Matrix<Rational> p = Matrix<Rational>::identity(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) p(i, j) -= xi[i] * eta[j];
        return p;
    }

    Rational g_of(const Vec<Rational>& x, const Vec<Rational>& y) const {
        return bilinear(g, x, y);
    }
    Rational b_of(const Vec<Rational>& x, const Vec<Rational>& y) const {
        return bilinear(B, x, y);
    }
    Vec<Rational> a_of(const Vec<Rational>& x) const { return A * x; }
    Vec<Rational> a_xi() const { return A * xi; }
    bool a_xi_nonnull() const {
        Vec<Rational> ax = a_xi();
        return !g_of(ax, ax).is_zero();
    }

    void validate() const {
        const std::size_t n = dim();
        if (g.rows() != n || B.rows() != n || A.rows() != n || xi.size() != n || eta.size() != n)
            throw std::invalid_argument("hypersurface: inconsistent dimensions");
        if (!g.is_symmetric()) throw std::invalid_argument("hypersurface: g must be symmetric");
        if (!B.is_symmetric()) throw std::invalid_argument("hypersurface: B must be symmetric");
        if (vec_is_zero(xi)) throw std::invalid_argument("hypersurface: xi must be nonzero");
        if (!vec_is_zero(g * xi))
            throw std::invalid_argument("hypersurface: xi is not in the radical of g");
        if (null_space(g).size() != 1)
            throw std::invalid_argument("hypersurface: g must have radical rank exactly 1");
        if (!(dot(eta, xi) == Rational(1)))
            throw std::invalid_argument("hypersurface: eta(xi) must equal 1");
        if (!vec_is_zero(B * xi))
            throw std::invalid_argument("hypersurface: B(xi, .) must vanish");
        Vec<Rational> eta_a(n, Rational(0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) eta_a[j] += eta[i] * A(i, j);
        if (!vec_is_zero(eta_a))
            throw std::invalid_argument("hypersurface: A_N must be screen-valued");
    }
};

// B = rho g and A_N = lambda P over a chosen nonsingular screen Gram, in the
// adapted basis (xi = e_0, screen = e_1..e_m).
inline HypersurfacePoint build_umbilical(std::size_t m, const Rational& c, const Rational& rho,
                                         const Rational& lambda,
                                         const Matrix<Rational>& screen_gram) {
    if (screen_gram.rows() != m || !screen_gram.is_symmetric())
        throw std::invalid_argument("build_umbilical: screen Gram must be symmetric of size m");
    if (ScalarOps<Rational>::is_zero(determinant(screen_gram)))
        throw std::invalid_argument("build_umbilical: screen Gram must be nonsingular");
    HypersurfacePoint h;
    h.m = m;
    h.c = c;
    h.g = Matrix<Rational>(m + 1, m + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) h.g(1 + i, 1 + j) = screen_gram(i, j);
    h.xi = basis_vector<Rational>(m + 1, 0);
    h.eta = basis_vector<Rational>(m + 1, 0);
    h.B = rho * h.g;
    h.A = lambda * h.projection();
    h.validate();
    return h;
}

// (0,4) components and the operator matrices R(e_a, e_b) of the induced
// curvature; both forms are needed because contracting with the degenerate g
// forgets the radical output components.
struct InducedCurvature {
    CurvatureTensor<Rational> r04;
    std::vector<Matrix<Rational>> op;  // op[a * dim + b]
    std::size_t dim = 0;

    const Matrix<Rational>& operator()(std::size_t a, std::size_t b) const {
        return op[a * dim + b];
    }
};

inline InducedCurvature induced_curvature(const HypersurfacePoint& h) {
    const std::size_t n = h.dim();
    InducedCurvature ind{CurvatureTensor<Rational>(n), {}, n};
    ind.op.assign(n * n, Matrix<Rational>(n, n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix<Rational>& op = ind.op[a * n + b];
            for (std::size_t cidx = 0; cidx < n; ++cidx) {
                // R(e_a, e_b) e_c
                for (std::size_t w = 0; w < n; ++w)
                    op(w, cidx) = h.c * (h.g(b, cidx) * (w == a ? Rational(1) : Rational(0)) -
                                         h.g(a, cidx) * (w == b ? Rational(1) : Rational(0))) +
                                  h.B(b, cidx) * h.A(w, a) - h.B(a, cidx) * h.A(w, b);
            }
        }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Matrix<Rational>& op = ind.op[a * n + b];
            for (std::size_t cidx = 0; cidx < n; ++cidx) {
                // R(e_a,e_b,e_c,e_d) = g(R(e_a,e_b)e_c, e_d)
                for (std::size_t d = 0; d < n; ++d) {
                    Rational acc(0);
                    for (std::size_t w = 0; w < n; ++w) acc += op(w, cidx) * h.g(w, d);
                    ind.r04.at(a, b, cidx, d) = acc;
                }
            }
        }
    return ind;
}

// Ric(X,Y) = m c g(X,Y) + B(X,Y) tr A_N - B(A_N X, Y); not symmetric in
// general.
inline Matrix<Rational> ricci_h(const HypersurfacePoint& h) {
    const std::size_t n = h.dim();
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += h.A(i, i);
    Matrix<Rational> ric(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Rational bab(0);
            for (std::size_t w = 0; w < n; ++w) bab += h.A(w, a) * h.B(w, b);
            ric(a, b) = Rational((long long)h.m) * h.c * h.g(a, b) + h.B(a, b) * tr - bab;
        }
    return ric;
}

// X |-> B(A_N xi, X); identically zero exactly when the pointwise Osserman
// constraint holds.
inline Vec<Rational> osserman_constraint_residual(const HypersurfacePoint& h) {
    return h.B * h.a_xi();
}

// c { B(V,Y) eta(X) - B(V,X) eta(Y) }, the transversal component of
// (nabla_V R)(X,Y) xi.
inline Rational local_symmetry_obstruction(const HypersurfacePoint& h, const Vec<Rational>& v,
                                           const Vec<Rational>& x, const Vec<Rational>& y) {
    return h.c * (h.b_of(v, y) * dot(h.eta, x) - h.b_of(v, x) * dot(h.eta, y));
}

namespace hyp_detail {

inline Rational r04_full(const InducedCurvature& ind, const Vec<Rational>& x,
                         const Vec<Rational>& y, const Vec<Rational>& z, const Vec<Rational>& t) {
    const std::size_t n = ind.dim;
    Rational acc(0);
    for (std::size_t a = 0; a < n; ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
            if (y[b].is_zero()) continue;
            Rational xy = x[a] * y[b];
            for (std::size_t c = 0; c < n; ++c) {
                if (z[c].is_zero()) continue;
                Rational xyz = xy * z[c];
                for (std::size_t d = 0; d < n; ++d) {
                    if (t[d].is_zero()) continue;
                    acc += xyz * t[d] * ind.r04(a, b, c, d);
                }
            }
        }
    }
    return acc;
}

inline Matrix<Rational> r13_combo(const InducedCurvature& ind, const Vec<Rational>& v1,
                                  const Vec<Rational>& v2) {
    const std::size_t n = ind.dim;
    Matrix<Rational> r(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        if (v1[a].is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
            if (v2[b].is_zero()) continue;
            Rational s = v1[a] * v2[b];
            const Matrix<Rational>& op = ind(a, b);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) r(i, j) += s * op(i, j);
        }
    }
    return r;
}

}  // namespace hyp_detail

// Closed form of (R(V1,V2).R)(xi, X, Y, Z); the independent oracle the
// four-term derivation action is checked against on xi-slices.
inline Rational semi_symmetry_xi_slice(const HypersurfacePoint& h, const Vec<Rational>& v1,
                                       const Vec<Rational>& v2, const Vec<Rational>& x,
                                       const Vec<Rational>& y, const Vec<Rational>& z) {
    Vec<Rational> axi = h.a_xi();
    Vec<Rational> av1 = h.a_of(v1), av2 = h.a_of(v2);
    Rational ga_z = h.g_of(axi, z);
    Rational out = h.c * (h.b_of(v2, y) * h.g_of(v1, x) * ga_z -
                          h.b_of(v1, y) * h.g_of(v2, x) * ga_z -
                          h.b_of(x, v1) * h.g_of(v2, y) * ga_z +
                          h.b_of(x, v2) * h.g_of(v1, y) * ga_z -
                          h.b_of(x, y) * h.g_of(axi, v1) * h.g_of(v2, z) +
                          h.b_of(x, y) * h.g_of(axi, v2) * h.g_of(v1, z));
    out += -h.b_of(v2, x) * h.b_of(av1, y) * ga_z + h.b_of(v1, x) * h.b_of(av2, y) * ga_z -
           h.b_of(x, av1) * h.b_of(v2, y) * ga_z + h.b_of(x, av2) * h.b_of(v1, y) * ga_z -
           h.b_of(x, y) * h.b_of(v2, z) * h.g_of(axi, av1) +
           h.b_of(x, y) * h.b_of(v1, z) * h.g_of(axi, av2);
    return out;
}

// (R(V1,V2).R)(X,Y,Z,T), the four-term derivation action on the (0,4)
// tensor. When the X slot is exactly xi, the closed-form xi-slice oracle is
// evaluated as well and any disagreement is a hard failure.
inline Rational semi_symmetry_residual(const HypersurfacePoint& h, const InducedCurvature& ind,
                                       const Vec<Rational>& v1, const Vec<Rational>& v2,
                                       const Vec<Rational>& x, const Vec<Rational>& y,
                                       const Vec<Rational>& z, const Vec<Rational>& t) {
    Matrix<Rational> r12 = hyp_detail::r13_combo(ind, v1, v2);
    Rational out = -hyp_detail::r04_full(ind, r12 * x, y, z, t) -
                   hyp_detail::r04_full(ind, x, r12 * y, z, t) -
                   hyp_detail::r04_full(ind, x, y, r12 * z, t) -
                   hyp_detail::r04_full(ind, x, y, z, r12 * t);
    if (x == h.xi) {
        Rational oracle = semi_symmetry_xi_slice(h, v1, v2, y, z, t);
        if (!(oracle == out))
            throw RouteMismatchError(
                "semi-symmetry: four-term action disagrees with the xi-slice closed form");
    }
    return out;
}

inline Rational semi_symmetry_residual(const HypersurfacePoint& h, const Vec<Rational>& v1,
                                       const Vec<Rational>& v2, const Vec<Rational>& x,
                                       const Vec<Rational>& y, const Vec<Rational>& z,
                                       const Vec<Rational>& t) {
    return semi_symmetry_residual(h, induced_curvature(h), v1, v2, x, y, z, t);
}

// (R(V1,V2).Ric)(X,Y) = -Ric(R(V1,V2)X, Y) - Ric(X, R(V1,V2)Y)
inline Rational ricci_semi_symmetry_residual(const InducedCurvature& ind,
                                             const Matrix<Rational>& ric, const Vec<Rational>& v1,
                                             const Vec<Rational>& v2, const Vec<Rational>& x,
                                             const Vec<Rational>& y) {
    Matrix<Rational> r12 = hyp_detail::r13_combo(ind, v1, v2);
    return -bilinear(ric, r12 * x, y) - bilinear(ric, x, r12 * y);
}

inline Rational ricci_semi_symmetry_residual(const HypersurfacePoint& h, const Vec<Rational>& v1,
                                             const Vec<Rational>& v2, const Vec<Rational>& x,
                                             const Vec<Rational>& y) {
    return ricci_semi_symmetry_residual(induced_curvature(h), ricci_h(h), v1, v2, x, y);
}

enum class ConformalStatus { Proportional, NotProportional, Indeterminate };

struct ScreenConformalResult {
    ConformalStatus status = ConformalStatus::Indeterminate;
    std::optional<Rational> phi;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Does g(A_N X, PY) = phi B(X, PY) hold for one scalar phi on all pairs?
inline ScreenConformalResult screen_conformal_check(const HypersurfacePoint& h) {
    const std::size_t n = h.dim();
    Matrix<Rational> p = h.projection();
    Matrix<Rational> lhs = h.A.transposed() * h.g * p;  // g(A e_a, P e_b)
    Matrix<Rational> rhs = h.B * p;                     // B(e_a, P e_b)
    ScreenConformalResult out;
    if (rhs.is_zero()) {
        out.status = ConformalStatus::Indeterminate;
        return out;
    }
    Rational phi(0);
    bool found = false;
    for (std::size_t a = 0; a < n && !found; ++a)
        for (std::size_t b = 0; b < n && !found; ++b)
            if (!rhs(a, b).is_zero()) {
                phi = lhs(a, b) / rhs(a, b);
                found = true;
            }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!(lhs(a, b) == phi * rhs(a, b))) {
                out.status = ConformalStatus::NotProportional;
                out.witness = {a, b};
                return out;
            }
    out.status = ConformalStatus::Proportional;
    out.phi = phi;
    return out;
}

namespace hyp_detail {

inline std::optional<Rational> proportionality(const Matrix<Rational>& lhs,
                                               const Matrix<Rational>& rhs) {
    Rational factor(0);
    bool found = false;
    for (std::size_t a = 0; a < rhs.rows() && !found; ++a)
        for (std::size_t b = 0; b < rhs.cols() && !found; ++b)
            if (!rhs(a, b).is_zero()) {
                factor = lhs(a, b) / rhs(a, b);
                found = true;
            }
    for (std::size_t a = 0; a < rhs.rows(); ++a)
        for (std::size_t b = 0; b < rhs.cols(); ++b)
            if (!(lhs(a, b) == factor * rhs(a, b))) return std::nullopt;
    return factor;
}

}  // namespace hyp_detail

// First basis 6-tuple with a nonzero four-term derivation residual, if any.
// Exhaustive over basis tuples, which decides the multilinear statement.
inline std::optional<std::array<std::size_t, 6>> exhaustive_semi_symmetry_witness(
    const InducedCurvature& ind) {
    const std::size_t n = ind.dim;
    for (std::size_t v1 = 0; v1 < n; ++v1)
        for (std::size_t v2 = 0; v2 < n; ++v2) {
            const Matrix<Rational>& r12 = ind(v1, v2);
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    for (std::size_t z = 0; z < n; ++z)
                        for (std::size_t t = 0; t < n; ++t) {
                            Rational acc(0);
                            for (std::size_t w = 0; w < n; ++w) {
                                if (!r12(w, x).is_zero()) acc -= r12(w, x) * ind.r04(w, y, z, t);
                                if (!r12(w, y).is_zero()) acc -= r12(w, y) * ind.r04(x, w, z, t);
                                if (!r12(w, z).is_zero()) acc -= r12(w, z) * ind.r04(x, y, w, t);
                                if (!r12(w, t).is_zero()) acc -= r12(w, t) * ind.r04(x, y, z, w);
                            }
                            if (!acc.is_zero()) return std::array<std::size_t, 6>{v1, v2, x, y, z, t};
                        }
        }
    return std::nullopt;
}

inline std::optional<std::array<std::size_t, 4>> exhaustive_ricci_semi_symmetry_witness(
    const InducedCurvature& ind, const Matrix<Rational>& ric) {
    const std::size_t n = ind.dim;
    for (std::size_t v1 = 0; v1 < n; ++v1)
        for (std::size_t v2 = 0; v2 < n; ++v2) {
            const Matrix<Rational>& r12 = ind(v1, v2);
            for (std::size_t x = 0; x < n; ++x)
                for (std::size_t y = 0; y < n; ++y) {
                    Rational acc(0);
                    for (std::size_t w = 0; w < n; ++w) {
                        if (!r12(w, x).is_zero()) acc -= r12(w, x) * ric(w, y);
                        if (!r12(w, y).is_zero()) acc -= r12(w, y) * ric(x, w);
                    }
                    if (!acc.is_zero()) return std::array<std::size_t, 4>{v1, v2, x, y};
                }
        }
    return std::nullopt;
}

// First basis triple with a nonzero local-symmetry obstruction, if any.
inline std::optional<std::array<std::size_t, 3>> exhaustive_local_symmetry_witness(
    const HypersurfacePoint& h) {
    const std::size_t n = h.dim();
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                Rational val = h.c * (h.B(v, y) * h.eta[x] - h.B(v, x) * h.eta[y]);
                if (!val.is_zero()) return std::array<std::size_t, 3>{v, x, y};
            }
    return std::nullopt;
}

struct SymmetryReport {
    std::size_t m = 0;
    Rational c;
    bool totally_geodesic = false;
    std::optional<Rational> umbilical_rho;            // B = rho g
    std::optional<Rational> screen_umbilical_lambda;  // A_N = lambda P
    ScreenConformalResult screen_conformal;
    bool osserman_constraint = false;  // B(A_N xi, .) = 0
    std::optional<std::size_t> osserman_constraint_witness;
    bool a_n_xi_nonnull = false;
    EinsteinResult<Rational> einstein;
    SymmetryCheck curvature_symmetries;
    bool locally_symmetric = false;  // the obstruction scalar vanishes identically
    std::optional<std::array<std::size_t, 3>> local_symmetry_witness;
    bool semi_symmetric = false;
    std::optional<std::array<std::size_t, 6>> semi_symmetry_witness;
    bool ricci_semi_symmetric = false;
    std::optional<std::array<std::size_t, 4>> ricci_semi_symmetry_witness;
};

// Exhaustive evaluation of every checker over basis tuples (all residuals
// are multilinear, so basis tuples decide the general statement), plus the
// instance-level theorem implications, which are hard failures when violated.
inline SymmetryReport symmetry_report(const HypersurfacePoint& h) {
    h.validate();
    const std::size_t n = h.dim();
    if (h.m > 6)
        throw std::invalid_argument("symmetry_report: exhaustive tuple checks cap at m <= 6");

    SymmetryReport rep;
    rep.m = h.m;
    rep.c = h.c;
    rep.totally_geodesic = h.B.is_zero();
    rep.umbilical_rho = hyp_detail::proportionality(h.B, h.g);
    rep.screen_umbilical_lambda = hyp_detail::proportionality(h.A, h.projection());
    rep.screen_conformal = screen_conformal_check(h);

    Vec<Rational> oss = osserman_constraint_residual(h);
    rep.osserman_constraint = vec_is_zero(oss);
    if (!rep.osserman_constraint)
        for (std::size_t w = 0; w < n; ++w)
            if (!oss[w].is_zero()) {
                rep.osserman_constraint_witness = w;
                break;
            }
    rep.a_n_xi_nonnull = h.a_xi_nonnull();

    Matrix<Rational> ric = ricci_h(h);
    rep.einstein = einstein_check(ric, h.g);

    InducedCurvature ind = induced_curvature(h);
    rep.curvature_symmetries = check_curvature_symmetries(ind.r04);

    rep.local_symmetry_witness = exhaustive_local_symmetry_witness(h);
    rep.locally_symmetric = !rep.local_symmetry_witness.has_value();

    rep.semi_symmetry_witness = exhaustive_semi_symmetry_witness(ind);
    rep.semi_symmetric = !rep.semi_symmetry_witness.has_value();

    rep.ricci_semi_symmetry_witness = exhaustive_ricci_semi_symmetry_witness(ind, ric);
    rep.ricci_semi_symmetric = !rep.ricci_semi_symmetry_witness.has_value();

    // Instance-level theorem implications. A violation here is not an input
    // problem; it means two internal routes disagree.
    if (!h.c.is_zero() && rep.locally_symmetric != rep.totally_geodesic)
        throw RouteMismatchError("symmetry_report: local symmetry <-> totally geodesic failed");
    if (rep.umbilical_rho && rep.screen_umbilical_lambda && !rep.semi_symmetric)
        throw RouteMismatchError("symmetry_report: umbilical instance not semi-symmetric");
    if (rep.osserman_constraint && rep.a_n_xi_nonnull && !rep.totally_geodesic &&
        rep.semi_symmetric)
        throw RouteMismatchError(
            "symmetry_report: constrained non-geodesic instance came out semi-symmetric");
    if (rep.einstein.lambda && rep.curvature_symmetries.status == SymmetryStatus::Verified &&
        !rep.ricci_semi_symmetric)
        throw RouteMismatchError("symmetry_report: Einstein instance not Ricci semi-symmetric");
    if (!h.c.is_zero() && rep.osserman_constraint && rep.a_n_xi_nonnull &&
        rep.locally_symmetric != rep.semi_symmetric)
        throw RouteMismatchError("symmetry_report: local symmetry <-> semi-symmetry failed");

    return rep;
}

// ---- deterministic instance generators (integer entries in [-3,3]) ----

inline Matrix<Rational> random_symmetric(SplitMix64& rng, std::size_t n) {
    Matrix<Rational> s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = Rational(rng.uniform_int(-3, 3));
    return s;
}

inline Matrix<Rational> random_nonsingular_symmetric(SplitMix64& rng, std::size_t n) {
    for (;;) {
        Matrix<Rational> s = random_symmetric(rng, n);
        if (!determinant(s).is_zero()) return s;
    }
}

// Adapted-basis instance: xi = e_0, screen = e_1..e_m; B and A_N are
// projected onto the type invariants.
inline HypersurfacePoint random_instance(SplitMix64& rng, std::size_t m, const Rational& c,
                                         bool zero_b = false) {
    HypersurfacePoint h;
    h.m = m;
    h.c = c;
    Matrix<Rational> s = random_nonsingular_symmetric(rng, m);
    h.g = Matrix<Rational>(m + 1, m + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) h.g(1 + i, 1 + j) = s(i, j);
    h.xi = basis_vector<Rational>(m + 1, 0);
    h.eta = basis_vector<Rational>(m + 1, 0);
    h.B = Matrix<Rational>(m + 1, m + 1);
    if (!zero_b) {
        Matrix<Rational> bs = random_symmetric(rng, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) h.B(1 + i, 1 + j) = bs(i, j);
    }
    h.A = Matrix<Rational>(m + 1, m + 1);
    for (std::size_t i = 1; i <= m; ++i) {
        h.A(i, 0) = Rational(rng.uniform_int(-3, 3));  // A_N xi
        for (std::size_t j = 1; j <= m; ++j) h.A(i, j) = Rational(rng.uniform_int(-3, 3));
    }
    h.validate();
    return h;
}

inline HypersurfacePoint random_umbilical(SplitMix64& rng, std::size_t m) {
    Rational c(rng.uniform_int(-3, 3));
    Rational rho(0), lambda(rng.uniform_int(-3, 3));
    while (rho.is_zero()) rho = Rational(rng.uniform_int(-3, 3));
    return build_umbilical(m, c, rho, lambda, random_nonsingular_symmetric(rng, m));
}

// Instance with the Osserman constraint B(A_N xi, .) = 0 imposed, A_N xi
// non-null and B != 0: pick a non-null screen vector a, damp B along it by
// the g-orthogonal projector, set A_N xi = a.
inline HypersurfacePoint random_constrained(SplitMix64& rng, std::size_t m) {
    for (;;) {
        Rational c(rng.uniform_int(-3, 3));
        Matrix<Rational> s = random_nonsingular_symmetric(rng, m);
        Vec<Rational> a(m);
        for (auto& v : a) v = Rational(rng.uniform_int(-3, 3));
        Rational kappa = bilinear(s, a, a);
        if (kappa.is_zero()) continue;
        Vec<Rational> w = s * a;
        Matrix<Rational> proj = Matrix<Rational>::identity(m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) proj(i, j) -= a[i] * w[j] / kappa;
        Matrix<Rational> bs = proj.transposed() * random_symmetric(rng, m) * proj;
        if (bs.is_zero()) continue;

        HypersurfacePoint h;
        h.m = m;
        h.c = c;
        h.g = Matrix<Rational>(m + 1, m + 1);
        h.B = Matrix<Rational>(m + 1, m + 1);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                h.g(1 + i, 1 + j) = s(i, j);
                h.B(1 + i, 1 + j) = bs(i, j);
            }
        h.xi = basis_vector<Rational>(m + 1, 0);
        h.eta = basis_vector<Rational>(m + 1, 0);
        h.A = Matrix<Rational>(m + 1, m + 1);
        for (std::size_t i = 1; i <= m; ++i) {
            h.A(i, 0) = a[i - 1];
            for (std::size_t j = 1; j <= m; ++j) h.A(i, j) = Rational(rng.uniform_int(-3, 3));
        }
        h.validate();
        if (!h.a_xi_nonnull()) continue;
        return h;
    }
}

// Einstein instances rotate through the three admissible families: proper
// umbilical, A_N = 0 with arbitrary B, and B = 0 with arbitrary A_N. All
// three have Ric = lambda g and an algebraic induced curvature.
inline HypersurfacePoint random_einstein(SplitMix64& rng, std::size_t m, std::size_t variant) {
    switch (variant % 3) {
        case 0: return random_umbilical(rng, m);
        case 1: {
            HypersurfacePoint h = random_instance(rng, m, Rational(rng.uniform_int(-3, 3)));
            h.A = Matrix<Rational>(m + 1, m + 1);
            h.validate();
            return h;
        }
        default: {
            HypersurfacePoint h =
                random_instance(rng, m, Rational(rng.uniform_int(-3, 3)), /*zero_b=*/true);
            return h;
        }
    }
}

}  // namespace lightlike
