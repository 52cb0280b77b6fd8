// The 2-degenerate model metric g_(f,h) on R x O x R^(p+1), built exactly
// from rational polynomials f, h and a rational evaluation point.
//
// Coordinates on M are ordered (x_0, x_1..x_p, y_0, y_1..y_p); the adapted
// frame is ordered (xi_1, xi_2, U_1..U_p, V_1..V_p). The model embeds into a
// flat (2p+4)-dimensional semi-Euclidean ambient space with basis
// (u_0..u_p, v_0..v_p, w_1, w_2); that embedding is the ground truth every
// closed form here is checked against:
//
//   * metric: coordinate Gram == pullback of the ambient metric,
//   * second fundamental forms: h^l_i(X,Y) == -gbar(nablabar_X xi_i, Y),
//   * induced connection: tangent part of nablabar,
//   * curvature: Gauss equation (flat ambient, h^s = 0) against the closed
//     form (1/2){f_;ik f_;jl - f_;jk f_;il + h_;ik h_;jl - h_;jk h_;il}.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lightlike/curvature.hpp"
#include "lightlike/degenerate.hpp"
#include "lightlike/matrix.hpp"
#include "lightlike/polynomial.hpp"
#include "lightlike/prng.hpp"

namespace lightlike {

struct GfhModel {
    std::size_t p = 1;
    Polynomial f, h;          // polynomials in x_1..x_p
    Vec<Rational> point;      // (x_0..x_p, y_0..y_p), size 2p+2

    std::size_t dim() const { return 2 * p + 2; }
    std::size_t ambient_dim() const { return 2 * p + 4; }

    // x_1..x_p, the only coordinates f and h see
    Vec<Rational> poly_point() const {
        return Vec<Rational>(point.begin() + 1, point.begin() + 1 + (long)p);
    }
};

inline GfhModel make_gfh(std::size_t p, Polynomial f, Polynomial h, Vec<Rational> point) {
    if (p == 0) throw std::invalid_argument("gfh: p must be >= 1");
    if (f.nvars() != p || h.nvars() != p)
        throw std::invalid_argument("gfh: f and h must be polynomials in p variables");
    if (point.size() != 2 * p + 2)
        throw std::invalid_argument("gfh: point must have 2p+2 coordinates");
    return GfhModel{p, std::move(f), std::move(h), std::move(point)};
}

// Frame index helpers (xi_1, xi_2, U_1..U_p, V_1..V_p).
inline std::size_t gfh_xi_index(std::size_t i) { return i; }           // i in {0,1}
inline std::size_t gfh_u_index(std::size_t p, std::size_t i) { (void)p; return 2 + i; }
inline std::size_t gfh_v_index(std::size_t p, std::size_t i) { return 2 + p + i; }

// Ambient semi-Euclidean metric of signature (p+2, p+2) in the basis
// (u_0..u_p, v_0..v_p, w_1, w_2).
inline Matrix<Rational> gfh_ambient_gram(std::size_t p) {
    const std::size_t n = 2 * p + 4;
    const std::size_t u0 = 0, v0 = p + 1, w1 = 2 * p + 2, w2 = 2 * p + 3;
    Matrix<Rational> g(n, n);
    for (std::size_t i = 1; i <= p; ++i) {
        g(i, v0 + i) = Rational(1);  // gbar(u_i, v_i) = 1
        g(v0 + i, i) = Rational(1);
    }
    g(u0, w1) = g(w1, u0) = Rational(1);
    g(v0, w2) = g(w2, v0) = Rational(1);
    g(w1, w1) = Rational(1);
    g(w2, w2) = Rational(1);
    return g;
}

inline std::pair<Matrix<Rational>, Matrix<Rational>> hessians(const GfhModel& m) {
    Vec<Rational> xp = m.poly_point();
    Matrix<Rational> F(m.p, m.p), H(m.p, m.p);
    for (std::size_t i = 0; i < m.p; ++i) {
        Polynomial fi = m.f.derivative(i), hi = m.h.derivative(i);
        for (std::size_t j = 0; j < m.p; ++j) {
            F(i, j) = fi.derivative(j).evaluate(xp);
            H(i, j) = hi.derivative(j).evaluate(xp);
        }
    }
    return {F, H};
}

// Coordinate Gram of g_(f,h): g(d0x, dix) = di f, g(dix, djx) = di f dj f +
// di h dj h, g(dix, d0y) = di h, g(dix, djy) = delta_ij, everything else 0.
inline DegenerateForm<Rational> metric_matrix(const GfhModel& m) {
    const std::size_t p = m.p;
    Vec<Rational> xp = m.poly_point();
    Vec<Rational> fi(p), hi(p);
    for (std::size_t i = 0; i < p; ++i) {
        fi[i] = m.f.derivative(i).evaluate(xp);
        hi[i] = m.h.derivative(i).evaluate(xp);
    }
    Matrix<Rational> g(m.dim(), m.dim());
    const std::size_t y0 = p + 1;
    for (std::size_t i = 1; i <= p; ++i) {
        g(0, i) = g(i, 0) = fi[i - 1];
        g(i, y0) = g(y0, i) = hi[i - 1];
        g(i, y0 + i) = g(y0 + i, i) = Rational(1);
        for (std::size_t j = 1; j <= p; ++j)
            g(i, j) = fi[i - 1] * fi[j - 1] + hi[i - 1] * hi[j - 1];
    }
    return DegenerateForm<Rational>(std::move(g));
}

namespace gfh_detail {

using PolyVec = std::vector<Polynomial>;

inline PolyVec zero_vec(std::size_t nvars, std::size_t len) {
    return PolyVec(len, Polynomial(nvars));
}

// Coordinate tangent basis fields expressed in ambient coordinates, as
// polynomial functions of x_1..x_p.
inline std::vector<PolyVec> tangent_basis_ambient(const GfhModel& m) {
    const std::size_t p = m.p, n = m.ambient_dim();
    const std::size_t v0 = p + 1, w1 = 2 * p + 2, w2 = 2 * p + 3;
    std::vector<PolyVec> t(m.dim(), zero_vec(p, n));
    t[0][0] = Polynomial::constant(p, 1);  // d0x = u_0
    for (std::size_t i = 1; i <= p; ++i) {
        t[i][i] = Polynomial::constant(p, 1);      // dix = u_i + f_i w_1 + h_i w_2
        t[i][w1] = m.f.derivative(i - 1);
        t[i][w2] = m.h.derivative(i - 1);
        t[p + 1 + i][v0 + i] = Polynomial::constant(p, 1);  // diy = v_i
    }
    t[p + 1][v0] = Polynomial::constant(p, 1);  // d0y = v_0
    return t;
}

// Frame fields in tangent coordinates, as polynomial functions.
inline std::vector<PolyVec> frame_fields_tangent(const GfhModel& m) {
    const std::size_t p = m.p, n = m.dim();
    std::vector<PolyVec> fr(n, zero_vec(p, n));
    auto one = Polynomial::constant(p, 1);
    // xi_1 = d0x - sum f_i diy ; xi_2 = d0y - sum h_i diy
    fr[0][0] = one;
    fr[1][p + 1] = one;
    for (std::size_t i = 1; i <= p; ++i) {
        fr[0][p + 1 + i] = -m.f.derivative(i - 1);
        fr[1][p + 1 + i] = -m.h.derivative(i - 1);
        // U_i = dix - f_i d0x - h_i d0y
        fr[1 + i][i] = one;
        fr[1 + i][0] = -m.f.derivative(i - 1);
        fr[1 + i][p + 1] = -m.h.derivative(i - 1);
        // V_i = diy
        fr[1 + p + i][p + 1 + i] = one;
    }
    return fr;
}

inline PolyVec to_ambient(const GfhModel& m, const std::vector<PolyVec>& tangent_basis,
                          const PolyVec& x_tangent) {
    PolyVec out = zero_vec(m.p, m.ambient_dim());
    for (std::size_t a = 0; a < x_tangent.size(); ++a) {
        if (x_tangent[a].is_zero()) continue;
        for (std::size_t al = 0; al < out.size(); ++al)
            if (!tangent_basis[a][al].is_zero())
                out[al] = out[al] + x_tangent[a] * tangent_basis[a][al];
    }
    return out;
}

inline Vec<Rational> eval(const PolyVec& v, const Vec<Rational>& xp) {
    Vec<Rational> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].evaluate(xp);
    return out;
}

// Everything the ambient oracles need, evaluated once at the model point.
struct AmbientData {
    Matrix<Rational> gbar;
    std::vector<Vec<Rational>> frame_amb;                 // frame fields at the point
    std::vector<Vec<Rational>> frame_xcomp;               // x_1..x_p components at the point
    std::vector<std::vector<Vec<Rational>>> frame_partial;  // [field][i] = d(field)/dx_i
    Vec<Rational> n1, n2;                                  // transversal fields at the point

    // nablabar_{F_a} F_b for the flat ambient connection
    Vec<Rational> dir_deriv(std::size_t a, std::size_t b) const {
        Vec<Rational> out(frame_amb[b].size(), Rational(0));
        for (std::size_t i = 0; i < frame_xcomp[a].size(); ++i) {
            if (frame_xcomp[a][i].is_zero()) continue;
            out = vec_add(out, vec_scale(frame_xcomp[a][i], frame_partial[b][i]));
        }
        return out;
    }
    Rational ip(const Vec<Rational>& x, const Vec<Rational>& y) const {
        return bilinear(gbar, x, y);
    }
};

inline AmbientData ambient_data(const GfhModel& m) {
    const std::size_t p = m.p, n = m.dim();
    Vec<Rational> xp = m.poly_point();
    auto tb = tangent_basis_ambient(m);
    auto fr = frame_fields_tangent(m);

    AmbientData d;
    d.gbar = gfh_ambient_gram(p);
    d.frame_amb.resize(n);
    d.frame_xcomp.resize(n);
    d.frame_partial.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        PolyVec amb = to_ambient(m, tb, fr[a]);
        d.frame_amb[a] = eval(amb, xp);
        d.frame_xcomp[a].resize(p);
        for (std::size_t i = 0; i < p; ++i) d.frame_xcomp[a][i] = fr[a][1 + i].evaluate(xp);
        d.frame_partial[a].resize(p);
        for (std::size_t i = 0; i < p; ++i) {
            PolyVec dv = zero_vec(p, m.ambient_dim());
            for (std::size_t al = 0; al < dv.size(); ++al) dv[al] = amb[al].derivative(i);
            d.frame_partial[a][i] = eval(dv, xp);
        }
    }
    // N_1 = w_1 - xi_1/2, N_2 = w_2 - xi_2/2
    const std::size_t w1 = 2 * p + 2, w2 = 2 * p + 3;
    d.n1 = vec_scale(Rational(-1, 2), d.frame_amb[0]);
    d.n1[w1] += Rational(1);
    d.n2 = vec_scale(Rational(-1, 2), d.frame_amb[1]);
    d.n2[w2] += Rational(1);
    return d;
}

}  // namespace gfh_detail

// Gram of the embedding pullback; must equal metric_matrix entry by entry.
inline Matrix<Rational> metric_matrix_embedding(const GfhModel& m) {
    Vec<Rational> xp = m.poly_point();
    auto tb = gfh_detail::tangent_basis_ambient(m);
    Matrix<Rational> gbar = gfh_ambient_gram(m.p);
    std::vector<Vec<Rational>> tv(m.dim());
    for (std::size_t a = 0; a < m.dim(); ++a) tv[a] = gfh_detail::eval(tb[a], xp);
    Matrix<Rational> g(m.dim(), m.dim());
    for (std::size_t a = 0; a < m.dim(); ++a)
        for (std::size_t b = 0; b < m.dim(); ++b) g(a, b) = bilinear(gbar, tv[a], tv[b]);
    return g;
}

struct GfhFrames {
    std::vector<Vec<Rational>> xi;   // 2 radical vectors, tangent coordinates
    std::vector<Vec<Rational>> u;    // p screen vectors
    std::vector<Vec<Rational>> v;    // p screen vectors
    std::vector<Vec<Rational>> n;    // 2 transversal vectors, ambient coordinates
    std::vector<Vec<Rational>> eta;  // 2 covectors on tangent coordinates
};

inline GfhFrames frames(const GfhModel& m) {
    const std::size_t p = m.p;
    Vec<Rational> xp = m.poly_point();
    auto fr = gfh_detail::frame_fields_tangent(m);
    auto tb = gfh_detail::tangent_basis_ambient(m);
    Matrix<Rational> gbar = gfh_ambient_gram(p);

    GfhFrames out;
    auto eval_field = [&](std::size_t a) {
        Vec<Rational> v(m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i) v[i] = fr[a][i].evaluate(xp);
        return v;
    };
    out.xi = {eval_field(0), eval_field(1)};
    for (std::size_t i = 0; i < p; ++i) out.u.push_back(eval_field(2 + i));
    for (std::size_t i = 0; i < p; ++i) out.v.push_back(eval_field(2 + p + i));

    auto d = gfh_detail::ambient_data(m);
    out.n = {d.n1, d.n2};

    // eta_i(.) = gbar(N_i, .) restricted to the tangent coordinate basis
    std::vector<Vec<Rational>> tv(m.dim());
    for (std::size_t a = 0; a < m.dim(); ++a) tv[a] = gfh_detail::eval(tb[a], xp);
    for (const auto& nfield : out.n) {
        Vec<Rational> eta(m.dim());
        for (std::size_t a = 0; a < m.dim(); ++a) eta[a] = bilinear(gbar, nfield, tv[a]);
        out.eta.push_back(std::move(eta));
    }
    return out;
}

inline AdaptedFrame<Rational> adapted_frame(const GfhModel& m, const DegenerateForm<Rational>& g) {
    GfhFrames fr = frames(m);
    FrameHint<Rational> hint;
    hint.radical = fr.xi;
    for (const auto& u : fr.u) hint.screen.push_back(u);
    for (const auto& v : fr.v) hint.screen.push_back(v);
    hint.etas = fr.eta;
    return build_adapted_frame(g, 2, std::optional<FrameHint<Rational>>(std::move(hint)));
}

// Closed form: the only nonvanishing local second fundamental forms are
// h^l_1(U_i,U_j) = f_;ij and h^l_2(U_i,U_j) = h_;ij.
inline std::pair<Matrix<Rational>, Matrix<Rational>> second_fundamental(const GfhModel& m) {
    return hessians(m);
}

// Ambient route over all frame pairs: h^l_i(F_a, F_b) = -gbar(nablabar_{F_a}
// xi_i, F_b). Used to verify the closed form and the vanishing statements.
inline std::pair<Matrix<Rational>, Matrix<Rational>> second_fundamental_ambient(
    const GfhModel& m) {
    auto d = gfh_detail::ambient_data(m);
    const std::size_t n = m.dim();
    Matrix<Rational> h1(n, n), h2(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        Vec<Rational> d1 = d.dir_deriv(a, 0), d2 = d.dir_deriv(a, 1);
        for (std::size_t b = 0; b < n; ++b) {
            h1(a, b) = -d.ip(d1, d.frame_amb[b]);
            h2(a, b) = -d.ip(d2, d.frame_amb[b]);
        }
    }
    return {h1, h2};
}

// Induced connection coefficients in the adapted frame. Closed form:
//   nabla_{U_i}U_j   = -f_;ij/2 xi_1 - h_;ij/2 xi_2
//                      - sum_k (f_;ij f_k + h_;ij h_k) V_k
//   nabla_{U_i}xi_1  = -sum_j f_;ij V_j,  nabla_{U_i}xi_2 = -sum_j h_;ij V_j
// and everything else vanishes.
inline Vec<Rational> connection_closed_form(const GfhModel& m, std::size_t a, std::size_t b) {
    const std::size_t p = m.p;
    Vec<Rational> out(m.dim(), Rational(0));
    if (a < 2 || a >= 2 + p) return out;  // only nabla_{U_i} is nonzero
    const std::size_t i = a - 2;
    auto [F, H] = hessians(m);
    Vec<Rational> xp = m.poly_point();
    if (b == 0) {
        for (std::size_t j = 0; j < p; ++j) out[gfh_v_index(p, j)] = -F(i, j);
    } else if (b == 1) {
        for (std::size_t j = 0; j < p; ++j) out[gfh_v_index(p, j)] = -H(i, j);
    } else if (b >= 2 && b < 2 + p) {
        const std::size_t j = b - 2;
        out[0] = Rational(-1, 2) * F(i, j);
        out[1] = Rational(-1, 2) * H(i, j);
        for (std::size_t k = 0; k < p; ++k) {
            Rational fk = m.f.derivative(k).evaluate(xp);
            Rational hk = m.h.derivative(k).evaluate(xp);
            out[gfh_v_index(p, k)] = -(F(i, j) * fk + H(i, j) * hk);
        }
    }
    return out;
}

// Gauss split of the flat ambient derivative: tangent part in frame
// components together with the two h^l coefficients.
struct ConnectionSplit {
    Vec<Rational> tangent_frame;
    Rational hl1, hl2;
};

inline ConnectionSplit connection_ambient(const GfhModel& m, const gfh_detail::AmbientData& d,
                                          const Matrix<Rational>& basis_inv, std::size_t a,
                                          std::size_t b) {
    Vec<Rational> deriv = d.dir_deriv(a, b);
    Vec<Rational> comps = basis_inv * deriv;  // basis: frame fields then N_1, N_2
    ConnectionSplit out;
    out.tangent_frame.assign(comps.begin(), comps.begin() + (long)m.dim());
    out.hl1 = comps[m.dim()];
    out.hl2 = comps[m.dim() + 1];
    return out;
}

inline Matrix<Rational> gfh_ambient_basis_inverse(const GfhModel& m,
                                                  const gfh_detail::AmbientData& d) {
    const std::size_t n = m.ambient_dim();
    Matrix<Rational> basis(n, n);
    for (std::size_t a = 0; a < m.dim(); ++a) basis.set_col(a, d.frame_amb[a]);
    basis.set_col(m.dim(), d.n1);
    basis.set_col(m.dim() + 1, d.n2);
    return invert(basis);
}

// Route A: the closed-form curvature, frame components; every component away
// from the U^4 block vanishes.
inline CurvatureTensor<Rational> curvature_closed_form(const GfhModel& m) {
    const std::size_t p = m.p;
    auto [F, H] = hessians(m);
    CurvatureTensor<Rational> r(m.dim());
    const Rational half(1, 2);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            for (std::size_t k = 0; k < p; ++k)
                for (std::size_t l = 0; l < p; ++l)
                    r.at(gfh_u_index(p, i), gfh_u_index(p, j), gfh_u_index(p, k),
                         gfh_u_index(p, l)) =
                        half * (F(i, k) * F(j, l) - F(j, k) * F(i, l) + H(i, k) * H(j, l) -
                                H(j, k) * H(i, l));
    return r;
}

// Operator form of the same components, R(U_i,U_j)U_k as a frame vector:
// (1/2) sum_l { f_;ik f_;jl - f_;jk f_;il + h_;ik h_;jl - h_;jk h_;il } V_l.
// The scalar form above must be its g-contraction against the U_l.
inline Vec<Rational> curvature_operator_form(const GfhModel& m, std::size_t i, std::size_t j,
                                             std::size_t k) {
    const std::size_t p = m.p;
    auto [F, H] = hessians(m);
    Vec<Rational> out(m.dim(), Rational(0));
    const Rational half(1, 2);
    for (std::size_t l = 0; l < p; ++l)
        out[gfh_v_index(p, l)] = half * (F(i, k) * F(j, l) - F(j, k) * F(i, l) +
                                         H(i, k) * H(j, l) - H(j, k) * H(i, l));
    return out;
}

// Route B: Gauss equation from the embedding, with the flat ambient
// curvature dropped and h^s = 0 (the model is coisotropic):
//   R(X,Y,Z,PW) = sum_i { h*_i(X,PW) h^l_i(Y,Z) - h*_i(Y,PW) h^l_i(X,Z) }
// with h*_i(X,PW) = gbar(N_i, nablabar_X PW). Components whose last slot is
// radical vanish because the (0,4) tensor is the g-contraction.
inline CurvatureTensor<Rational> curvature_gauss(const GfhModel& m) {
    auto d = gfh_detail::ambient_data(m);
    const std::size_t n = m.dim();
    Matrix<Rational> hl1(n, n), hl2(n, n), hs1(n, n), hs2(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        Vec<Rational> d1 = d.dir_deriv(a, 0), d2 = d.dir_deriv(a, 1);
        for (std::size_t b = 0; b < n; ++b) {
            hl1(a, b) = -d.ip(d1, d.frame_amb[b]);
            hl2(a, b) = -d.ip(d2, d.frame_amb[b]);
        }
        for (std::size_t b = 2; b < n; ++b) {  // P kills the radical fields
            Vec<Rational> dv = d.dir_deriv(a, b);
            hs1(a, b) = d.ip(d.n1, dv);
            hs2(a, b) = d.ip(d.n2, dv);
        }
    }
    CurvatureTensor<Rational> r(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t w = 2; w < n; ++w)
                    r.at(a, b, c, w) = hs1(a, w) * hl1(b, c) - hs1(b, w) * hl1(a, c) +
                                       hs2(a, w) * hl2(b, c) - hs2(b, w) * hl2(a, c);
    return r;
}

// Both curvature routes, compared entry by entry; a mismatch means a
// convention drifted somewhere and is a hard failure.
inline CurvatureTensor<Rational> curvature(const GfhModel& m) {
    CurvatureTensor<Rational> closed = curvature_closed_form(m);
    CurvatureTensor<Rational> gauss = curvature_gauss(m);
    if (!(closed == gauss))
        throw RouteMismatchError("gfh curvature: closed form disagrees with the Gauss route");
    check_curvature_symmetries(closed);
    return closed;
}

// Block Jacobi matrix from the model data: rows V_l, columns U_i carry
// Phi_li = (1/2) sum_{j,k} X_j X_k ( f_;ik f_;jl - f_;jk f_;il
//                                  + h_;ik h_;jl - h_;jk h_;il ).
inline Matrix<Rational> jacobi_closed_form(const GfhModel& m, const Vec<Rational>& x_frame) {
    const std::size_t p = m.p;
    if (x_frame.size() != m.dim())
        throw std::invalid_argument("gfh jacobi: direction must be in frame components");
    auto [F, H] = hessians(m);
    Matrix<Rational> j(m.dim(), m.dim());
    const Rational half(1, 2);
    for (std::size_t l = 0; l < p; ++l)
        for (std::size_t i = 0; i < p; ++i) {
            Rational phi(0);
            for (std::size_t jj = 0; jj < p; ++jj) {
                const Rational& xj = x_frame[gfh_u_index(p, jj)];
                if (xj.is_zero()) continue;
                for (std::size_t k = 0; k < p; ++k) {
                    const Rational& xk = x_frame[gfh_u_index(p, k)];
                    if (xk.is_zero()) continue;
                    phi += xj * xk *
                           (F(i, k) * F(jj, l) - F(jj, k) * F(i, l) + H(i, k) * H(jj, l) -
                            H(jj, k) * H(i, l));
                }
            }
            j(gfh_v_index(p, l), gfh_u_index(p, i)) = half * phi;
        }
    return j;
}

// Deterministic random models for tests and the self-test suite: sparse
// rational polynomials of total degree <= 3 and small rational points.
inline Polynomial random_polynomial(SplitMix64& rng, std::size_t p, std::uint32_t max_degree = 3) {
    Polynomial poly(p);
    std::vector<Polynomial::Exponents> monos;
    Polynomial::Exponents cur(p, 0);
    // enumerate all exponent tuples with total degree <= max_degree
    auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
        if (var == p) {
            monos.push_back(cur);
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            cur[var] = e;
            self(self, var + 1, left - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, max_degree);
    for (auto& e : monos)
        if (rng.chance(7, 20)) poly.add_term(e, rng.rational(2, 2));
    return poly;
}

// Points are rejected until every first partial of f and h has |value| <= 8.
// That bound makes both causal signs reachable inside the sampler's integer
// box [-9,9]^m: with x_1 = 1 and the rest of the x-block zero,
// q = (x_0+f_1)^2 - x_0^2 + (y_0+h_1)^2 - y_0^2 + 2 y_1, so y_1 = +9 forces
// q > 0 and x_0 = -round(f_1), y_0 = -round(h_1), y_1 = -9 forces q < 0.
inline bool gfh_point_admissible(const GfhModel& m) {
    Vec<Rational> xp = m.poly_point();
    const Rational bound(8);
    for (std::size_t i = 0; i < m.p; ++i) {
        if (m.f.derivative(i).evaluate(xp).abs() > bound) return false;
        if (m.h.derivative(i).evaluate(xp).abs() > bound) return false;
    }
    return true;
}

inline Vec<Rational> random_gfh_point(SplitMix64& rng, const GfhModel& model) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        Vec<Rational> point(2 * model.p + 2);
        for (auto& c : point) c = rng.rational(2, 2);
        GfhModel probe = model;
        probe.point = point;
        if (gfh_point_admissible(probe)) return point;
    }
    throw std::runtime_error("random_gfh_point: no admissible point found");
}

inline GfhModel random_gfh_model(SplitMix64& rng, std::size_t p) {
    for (;;) {
        Polynomial f = random_polynomial(rng, p), h = random_polynomial(rng, p);
        GfhModel m = make_gfh(p, std::move(f), std::move(h), Vec<Rational>(2 * p + 2, Rational(0)));
        for (int attempt = 0; attempt < 40; ++attempt) {
            Vec<Rational> point(2 * p + 2);
            for (auto& c : point) c = rng.rational(2, 2);
            m.point = point;
            if (gfh_point_admissible(m)) return m;
        }
        // pathological polynomial; redraw f and h
    }
}

}  // namespace lightlike
