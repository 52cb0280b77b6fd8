#include <doctest.h>

#include <initializer_list>

#include "lightlike/hypersurface.hpp"
#include "lightlike/prng.hpp"

using namespace lightlike;

namespace {

Matrix<Rational> diag(std::initializer_list<long long> entries) {
    Matrix<Rational> m(entries.size(), entries.size());
    std::size_t i = 0;
    for (long long v : entries) {
        m(i, i) = Rational(v);
        ++i;
    }
    return m;
}

Vec<Rational> basis(std::size_t n, std::size_t i) { return basis_vector<Rational>(n, i); }

}  // namespace

TEST_CASE("build_umbilical produces valid data; the m=2 worked example") {
    HypersurfacePoint h = build_umbilical(2, Rational(1), Rational(1), Rational(1), diag({1, 1}));
    h.validate();
    CHECK(h.dim() == 3);
    // Ric = (mc + (m-1) rho lambda) g = 3 g
    Matrix<Rational> ric = ricci_h(h);
    CHECK(ric == Rational(3) * h.g);
    auto einstein = einstein_check(ric, h.g);
    CHECK(einstein.lambda == Rational(3));

    CHECK_THROWS_AS(build_umbilical(2, Rational(1), Rational(1), Rational(1), diag({1, 0})),
                    std::invalid_argument);
}

TEST_CASE("umbilical ricci closed form holds for random parameters") {
    SplitMix64 rng(149);
    for (int iter = 0; iter < 10; ++iter) {
        std::size_t m = 2 + rng.next() % 4;
        Rational c(rng.uniform_int(-3, 3)), rho(rng.uniform_int(-3, 3)),
            lambda(rng.uniform_int(-3, 3));
        HypersurfacePoint h = build_umbilical(m, c, rho, lambda,
                                              random_nonsingular_symmetric(rng, m));
        Rational expect = Rational((long long)m) * c +
                          Rational((long long)m - 1) * rho * lambda;
        CHECK(ricci_h(h) == expect * h.g);
        CHECK(einstein_check(ricci_h(h), h.g).lambda == expect);
    }
}

TEST_CASE("induced curvature: totally geodesic reduces to constant curvature") {
    SplitMix64 rng(151);
    for (int iter = 0; iter < 6; ++iter) {
        std::size_t m = 2 + rng.next() % 3;
        Rational c(rng.uniform_int(-3, 3));
        HypersurfacePoint h = random_instance(rng, m, c, /*zero_b=*/true);
        InducedCurvature ind = induced_curvature(h);
        CHECK(ind.r04 == CurvatureTensor<Rational>::constant_curvature(h.g, c));
        if (c.is_zero()) CHECK(ind.r04 == CurvatureTensor<Rational>(m + 1));
        // B = 0: Ric = m c g
        CHECK(ricci_h(h) == (Rational((long long)m) * c) * h.g);
    }

    // flat ambient and B = 0: the induced tensor vanishes outright
    HypersurfacePoint flat = random_instance(rng, 3, Rational(0), /*zero_b=*/true);
    CHECK(induced_curvature(flat).r04 == CurvatureTensor<Rational>(4));

    // rho = 0 umbilical data is totally geodesic
    HypersurfacePoint geo = build_umbilical(2, Rational(2), Rational(0), Rational(3), diag({1, -1}));
    CHECK(geo.B.is_zero());
    CHECK(symmetry_report(geo).totally_geodesic);
}

TEST_CASE("umbilical induced curvature collapses to (c + rho lambda) g /\\ g") {
    SplitMix64 rng(157);
    for (int iter = 0; iter < 6; ++iter) {
        std::size_t m = 2 + rng.next() % 3;
        HypersurfacePoint h = random_umbilical(rng, m);
        Rational rho = *hyp_detail::proportionality(h.B, h.g);
        Rational lambda = *hyp_detail::proportionality(h.A, h.projection());
        InducedCurvature ind = induced_curvature(h);
        // g(P ., .) = g(., .), so the (0,4) form is constant-curvature-like
        CHECK(ind.r04 ==
              CurvatureTensor<Rational>::constant_curvature(h.g, h.c + rho * lambda));
        CHECK(check_curvature_symmetries(ind.r04).status == SymmetryStatus::Verified);
    }
}

TEST_CASE("array-level ricci on umbilical data: (1-m)(c + rho lambda) g") {
    // The umbilical (0,4) array is (c + rho lambda) g /\ g with g of radical
    // rank 1, and the g-contraction forgets the radical output component of
    // R(X, xi)Y; the quasi-orthonormal trace on the array therefore gives
    // (1-m)(c + rho lambda) g, while the section-5 closed form (which keeps
    // the operator) gives (mc + (m-1) rho lambda) g. Both are Einstein, and
    // the trace identity is insensitive to the difference (its eta-sum and
    // Ricci terms use the same contraction, so the mismatch cancels).
    SplitMix64 rng(229);
    for (int iter = 0; iter < 4; ++iter) {
        std::size_t m = 2 + rng.next() % 3;
        HypersurfacePoint h = random_umbilical(rng, m);
        Rational rho = *hyp_detail::proportionality(h.B, h.g);
        Rational lam = *hyp_detail::proportionality(h.A, h.projection());
        DegenerateForm<Rational> g(h.g);
        FrameHint<Rational> hint;
        hint.radical = {h.xi};
        for (std::size_t k = 1; k <= m; ++k)
            hint.screen.push_back(basis_vector<Rational>(m + 1, k));
        AdaptedFrame<Rational> frame =
            build_adapted_frame(g, 1, std::optional<FrameHint<Rational>>(hint));
        AssociatedMetric<Rational> am = associated_metric(g, frame);
        InducedCurvature ind = induced_curvature(h);
        Matrix<Rational> generic = ricci(ind.r04, frame, am);
        Rational mm((long long)m);
        CHECK(generic == ((Rational(1) - mm) * (h.c + rho * lam)) * h.g);
        CHECK(ricci_h(h) == (mm * h.c + (mm - Rational(1)) * rho * lam) * h.g);
        CHECK(einstein_check(generic, h.g).lambda.has_value());
        // and the trace identity still vanishes on these instances
        Vec<Rational> x(m + 1);
        for (auto& v : x) v = Rational(rng.uniform_int(-4, 4));
        if (!bilinear(am.metric_frame, x, x).is_zero())
            CHECK(trace_identity_residual(ind.r04, frame, am, x) == Rational(0));
    }
}

TEST_CASE("generic instances fail pair symmetry with a reported witness") {
    SplitMix64 rng(233);
    HypersurfacePoint h = random_constrained(rng, 3);  // B != 0, A_N xi non-null
    SymmetryReport rep = symmetry_report(h);
    CHECK(rep.curvature_symmetries.status == SymmetryStatus::Violated);
    REQUIRE(rep.curvature_symmetries.witness.has_value());
    // the witness quadruple really violates the claimed relation
    InducedCurvature ind = induced_curvature(h);
    const auto& w = rep.curvature_symmetries.witness->index;
    std::string rel = rep.curvature_symmetries.witness->relation;
    if (rel == "antisymmetry")
        CHECK_FALSE(ind.r04(w[0], w[1], w[2], w[3]) == -ind.r04(w[1], w[0], w[2], w[3]));
    else if (rel == "pair symmetry")
        CHECK_FALSE(ind.r04(w[0], w[1], w[2], w[3]) == ind.r04(w[2], w[3], w[0], w[1]));
}

TEST_CASE("osserman constraint residual: zero cases and a forced witness") {
    SplitMix64 rng(163);
    HypersurfacePoint geo = random_instance(rng, 3, Rational(2), /*zero_b=*/true);
    CHECK(vec_is_zero(osserman_constraint_residual(geo)));  // B = 0

    HypersurfacePoint umb = random_umbilical(rng, 3);
    CHECK(vec_is_zero(osserman_constraint_residual(umb)));  // A_N xi = 0

    // force B(A_N xi, A_N xi) != 0
    for (;;) {
        HypersurfacePoint h = random_instance(rng, 3, Rational(1));
        Vec<Rational> axi = h.a_xi();
        if (h.b_of(axi, axi).is_zero()) continue;
        Vec<Rational> res = osserman_constraint_residual(h);
        CHECK_FALSE(vec_is_zero(res));
        CHECK(dot(res, axi) == h.b_of(axi, axi));  // witness X = A_N xi
        break;
    }
}

TEST_CASE("local symmetry obstruction: closed-form cases") {
    SplitMix64 rng(167);
    HypersurfacePoint h = random_instance(rng, 3, Rational(2));
    const std::size_t n = h.dim();

    // B = 0 makes it vanish identically
    HypersurfacePoint geo = random_instance(rng, 3, Rational(2), /*zero_b=*/true);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                CHECK(local_symmetry_obstruction(geo, basis(n, v), basis(n, x), basis(n, y)) ==
                      Rational(0));

    // X = xi, screen V, Y: obstruction = c B(V, Y)
    for (std::size_t v = 1; v < n; ++v)
        for (std::size_t y = 1; y < n; ++y)
            CHECK(local_symmetry_obstruction(h, basis(n, v), h.xi, basis(n, y)) ==
                  h.c * h.B(v, y));

    // c = 0 kills it regardless of B
    HypersurfacePoint flat = random_instance(rng, 3, Rational(0));
    for (std::size_t v = 0; v < n; ++v)
        CHECK(local_symmetry_obstruction(flat, basis(n, v), flat.xi, basis(n, 1)) == Rational(0));
}

TEST_CASE("semi-symmetry: umbilical and totally geodesic instances vanish on all tuples") {
    SplitMix64 rng(173);
    for (int iter = 0; iter < 3; ++iter) {
        std::size_t m = 2 + rng.next() % 2;
        HypersurfacePoint h = iter == 0 ? random_instance(rng, m, Rational(2), /*zero_b=*/true)
                                        : random_umbilical(rng, m);
        InducedCurvature ind = induced_curvature(h);
        const std::size_t n = h.dim();
        for (std::size_t v1 = 0; v1 < n; ++v1)
            for (std::size_t v2 = 0; v2 < n; ++v2)
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y)
                        for (std::size_t z = 0; z < n; ++z)
                            for (std::size_t t = 0; t < n; ++t)
                                CHECK(semi_symmetry_residual(h, ind, basis(n, v1), basis(n, v2),
                                                             basis(n, x), basis(n, y),
                                                             basis(n, z), basis(n, t)) ==
                                      Rational(0));
    }
}

TEST_CASE("semi-symmetry xi-slice: four-term action equals the closed form") {
    SplitMix64 rng(179);
    for (int iter = 0; iter < 15; ++iter) {
        std::size_t m = 2 + rng.next() % 3;
        HypersurfacePoint h = random_instance(rng, m, Rational(rng.uniform_int(-3, 3)));
        InducedCurvature ind = induced_curvature(h);
        const std::size_t n = h.dim();
        // the residual entry point cross-checks the oracle whenever X = xi
        // and throws RouteMismatchError on disagreement
        for (int probe = 0; probe < 20; ++probe) {
            Vec<Rational> v1(n), v2(n), y(n), z(n), t(n);
            for (auto* vp : {&v1, &v2, &y, &z, &t})
                for (auto& c : *vp) c = Rational(rng.uniform_int(-2, 2));
            CHECK_NOTHROW(semi_symmetry_residual(h, ind, v1, v2, h.xi, y, z, t));
        }
    }
}

TEST_CASE("constrained non-geodesic instances always have a semi-symmetry witness") {
    SplitMix64 rng(181);
    for (int iter = 0; iter < 5; ++iter) {
        std::size_t m = 2 + rng.next() % 3;
        HypersurfacePoint h = random_constrained(rng, m);
        REQUIRE(vec_is_zero(osserman_constraint_residual(h)));
        REQUIRE(h.a_xi_nonnull());
        REQUIRE_FALSE(h.B.is_zero());

        InducedCurvature ind = induced_curvature(h);
        const std::size_t n = h.dim();
        bool found = false;
        for (std::size_t v1 = 0; v1 < n && !found; ++v1)
            for (std::size_t v2 = 0; v2 < n && !found; ++v2)
                for (std::size_t y = 0; y < n && !found; ++y)
                    for (std::size_t z = 0; z < n && !found; ++z)
                        for (std::size_t t = 0; t < n && !found; ++t)
                            if (!(semi_symmetry_residual(h, ind, basis(n, v1), basis(n, v2),
                                                         h.xi, basis(n, y), basis(n, z),
                                                         basis(n, t)) == Rational(0)))
                                found = true;
        CHECK(found);
    }
}

TEST_CASE("(0,4) derivation action = g((R.R) . , .) + metric-derivation correction") {
    SplitMix64 rng(191);
    for (int iter = 0; iter < 8; ++iter) {
        std::size_t m = 2 + rng.next() % 2;
        HypersurfacePoint h = random_instance(rng, m, Rational(rng.uniform_int(-3, 3)));
        InducedCurvature ind = induced_curvature(h);
        const std::size_t n = h.dim();
        Vec<Rational> v1(n), v2(n), x(n), y(n), z(n), t(n);
        for (auto* vp : {&v1, &v2, &x, &y, &z, &t})
            for (auto& c : *vp) c = Rational(rng.uniform_int(-2, 2));

        Matrix<Rational> r12 = hyp_detail::r13_combo(ind, v1, v2);
        // (1,3) action: R12(R(x,y)z) - R(R12 x, y)z - R(x, R12 y)z - R(x,y)(R12 z)
        auto apply_r = [&](const Vec<Rational>& a, const Vec<Rational>& b, const Vec<Rational>& c) {
            return hyp_detail::r13_combo(ind, a, b) * c;
        };
        Vec<Rational> act13 = vec_sub(
            vec_sub(vec_sub(r12 * apply_r(x, y, z), apply_r(r12 * x, y, z)),
                    apply_r(x, r12 * y, z)),
            apply_r(x, y, r12 * z));
        // (R12 . g)(a, b) = -g(R12 a, b) - g(a, R12 b)
        Vec<Rational> rxyz = apply_r(x, y, z);
        Rational metric_corr = -h.g_of(r12 * rxyz, t) - h.g_of(rxyz, r12 * t);
        Rational lhs = semi_symmetry_residual(h, ind, v1, v2, x, y, z, t);
        CHECK(lhs == h.g_of(act13, t) + metric_corr);
    }
}

TEST_CASE("ricci semi-symmetry: Einstein instances vanish, generic ones witness") {
    SplitMix64 rng(193);
    for (int iter = 0; iter < 6; ++iter) {
        std::size_t m = 2 + rng.next() % 3;
        HypersurfacePoint h = random_einstein(rng, m, (std::size_t)iter);
        REQUIRE(einstein_check(ricci_h(h), h.g).lambda.has_value());
        InducedCurvature ind = induced_curvature(h);
        Matrix<Rational> ric = ricci_h(h);
        const std::size_t n = h.dim();
        for (std::size_t v1 = 0; v1 < n; ++v1)
            for (std::size_t v2 = 0; v2 < n; ++v2)
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y)
                        CHECK(ricci_semi_symmetry_residual(ind, ric, basis(n, v1),
                                                           basis(n, v2), basis(n, x),
                                                           basis(n, y)) == Rational(0));
    }

    // a generic non-Einstein instance shows a nonzero tuple
    for (;;) {
        HypersurfacePoint h = random_instance(rng, 3, Rational(2));
        if (einstein_check(ricci_h(h), h.g).lambda.has_value()) continue;
        InducedCurvature ind = induced_curvature(h);
        Matrix<Rational> ric = ricci_h(h);
        const std::size_t n = h.dim();
        bool found = false;
        for (std::size_t v1 = 0; v1 < n && !found; ++v1)
            for (std::size_t v2 = 0; v2 < n && !found; ++v2)
                for (std::size_t x = 0; x < n && !found; ++x)
                    for (std::size_t y = 0; y < n && !found; ++y)
                        if (!(ricci_semi_symmetry_residual(ind, ric, basis(n, v1),
                                                           basis(n, v2), basis(n, x),
                                                           basis(n, y)) == Rational(0)))
                            found = true;
        if (found) break;  // witness exhibited
    }
}

TEST_CASE("ricci_h asymmetry witness on generic data") {
    SplitMix64 rng(197);
    for (;;) {
        HypersurfacePoint h = random_instance(rng, 3, Rational(1));
        Matrix<Rational> ric = ricci_h(h);
        if (ric.is_symmetric()) continue;
        CHECK_FALSE(ric.is_symmetric());
        break;
    }
}

TEST_CASE("screen conformal check") {
    SplitMix64 rng(199);
    // umbilical data with rho != 0: phi = lambda / rho
    for (int iter = 0; iter < 5; ++iter) {
        std::size_t m = 2 + rng.next() % 3;
        Rational c(rng.uniform_int(-3, 3)), rho(0), lambda(rng.uniform_int(-3, 3));
        while (rho.is_zero()) rho = Rational(rng.uniform_int(-3, 3));
        HypersurfacePoint h = build_umbilical(m, c, rho, lambda, random_nonsingular_symmetric(rng, m));
        auto res = screen_conformal_check(h);
        REQUIRE(res.status == ConformalStatus::Proportional);
        CHECK(*res.phi == lambda / rho);
    }

    // B = 0 is indeterminate
    HypersurfacePoint geo = random_instance(rng, 3, Rational(1), /*zero_b=*/true);
    CHECK(screen_conformal_check(geo).status == ConformalStatus::Indeterminate);

    // generic data violates proportionality with a recorded witness
    for (;;) {
        HypersurfacePoint h = random_instance(rng, 3, Rational(1));
        auto res = screen_conformal_check(h);
        if (res.status != ConformalStatus::NotProportional) continue;
        CHECK(res.witness.has_value());
        break;
    }
}

TEST_CASE("symmetry_report aggregates the flags coherently") {
    SplitMix64 rng(211);

    // totally geodesic: every obstruction vanishes
    HypersurfacePoint geo = random_instance(rng, 3, Rational(2), /*zero_b=*/true);
    SymmetryReport rg = symmetry_report(geo);
    CHECK(rg.totally_geodesic);
    CHECK(rg.locally_symmetric);
    CHECK(rg.semi_symmetric);
    CHECK(rg.ricci_semi_symmetric);
    CHECK(rg.osserman_constraint);
    CHECK(rg.einstein.lambda.has_value());
    CHECK(rg.umbilical_rho == Rational(0));

    // proper umbilical with c != 0: semi-symmetric, Einstein, but locally
    // symmetric fails with a witness
    for (;;) {
        HypersurfacePoint umb = random_umbilical(rng, 3);
        if (umb.c.is_zero()) continue;
        SymmetryReport ru = symmetry_report(umb);
        CHECK_FALSE(ru.totally_geodesic);
        CHECK(ru.semi_symmetric);
        CHECK(ru.ricci_semi_symmetric);
        CHECK(ru.einstein.lambda.has_value());
        CHECK_FALSE(ru.locally_symmetric);
        CHECK(ru.local_symmetry_witness.has_value());
        CHECK(ru.umbilical_rho.has_value());
        CHECK(ru.screen_umbilical_lambda.has_value());
        break;
    }

    // constrained, A_N xi non-null, B != 0: not semi-symmetric
    HypersurfacePoint con = random_constrained(rng, 3);
    SymmetryReport rc = symmetry_report(con);
    CHECK(rc.osserman_constraint);
    CHECK(rc.a_n_xi_nonnull);
    CHECK_FALSE(rc.totally_geodesic);
    CHECK_FALSE(rc.semi_symmetric);
    CHECK(rc.semi_symmetry_witness.has_value());
}

TEST_CASE("hypersurface validation rejects broken invariants") {
    HypersurfacePoint h = build_umbilical(2, Rational(1), Rational(1), Rational(1), diag({1, 1}));
    HypersurfacePoint bad = h;
    bad.B(0, 1) = bad.B(1, 0) = Rational(1);  // B(xi, .) != 0
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = h;
    bad.A(0, 1) = Rational(1);  // eta(A_N .) != 0
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = h;
    bad.eta = Vec<Rational>(3, Rational(0));  // eta(xi) != 1
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad = h;
    bad.g(0, 0) = Rational(1);  // xi no longer radical
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
