#include <doctest.h>

#include <initializer_list>

#include "lightlike/degenerate.hpp"
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

// symmetric Gram of rank (n - r): Q^T diag(d_1..d_{n-r}, 0..0) Q
DegenerateForm<Rational> random_degenerate(SplitMix64& rng, std::size_t n, std::size_t r) {
    Matrix<Rational> d(n, n);
    for (std::size_t i = 0; i < n - r; ++i) {
        Rational v(0);
        while (v.is_zero()) v = Rational(rng.uniform_int(-4, 4));
        d(i, i) = v;
    }
    Matrix<Rational> q = Matrix<Rational>::identity(n);
    for (int k = 0; k < 14; ++k) {
        std::size_t i = rng.next() % n, j = rng.next() % n;
        if (i == j) continue;
        Matrix<Rational> s = Matrix<Rational>::identity(n);
        s(i, j) = Rational(rng.uniform_int(-2, 2));
        q = q * s;
    }
    return DegenerateForm<Rational>(q.transposed() * d * q);
}

void check_frame_invariants(const DegenerateForm<Rational>& g, const AdaptedFrame<Rational>& f) {
    const std::size_t r = f.radical_rank();
    // radical vectors annihilate g
    for (std::size_t i = 0; i < r; ++i) CHECK(vec_is_zero(g.gram() * f.radical_vector(i)));
    // eta_i(xi_j) = delta, eta_i(screen) = 0
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            CHECK(dot(f.eta(i), f.radical_vector(j)) == (i == j ? Rational(1) : Rational(0)));
        for (std::size_t k = 0; k < f.screen_dim(); ++k)
            CHECK(dot(f.eta(i), f.screen_vector(k)) == Rational(0));
    }
    CHECK_FALSE(determinant(f.screen_gram()).is_zero());
}

}  // namespace

TEST_CASE("classify covers the classification table and rejects inconsistent input") {
    CHECK(classify(6, 2, 2) == SubmanifoldKind::Coisotropic);   // the 2-degenerate model, p=2
    CHECK(classify(5, 1, 1) == SubmanifoldKind::Coisotropic);   // lightlike hypersurface
    CHECK(classify(3, 5, 3) == SubmanifoldKind::Isotropic);
    CHECK(classify(3, 3, 3) == SubmanifoldKind::TotallyLightlike);
    CHECK(classify(6, 3, 2) == SubmanifoldKind::RLightlike);
    CHECK(classify(4, 2, 0) == SubmanifoldKind::Nondegenerate);
    CHECK_THROWS_AS(classify(3, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(classify(0, 1, 0), std::invalid_argument);
}

TEST_CASE("compute_radical: nondegenerate, zero and mixed forms") {
    CHECK(compute_radical(DegenerateForm<Rational>(diag({1, -1, 2}))).empty());
    CHECK(compute_radical(DegenerateForm<Rational>(Matrix<Rational>(3, 3))).size() == 3);
    CHECK(compute_radical(DegenerateForm<Rational>(diag({0, 0, 1, -1}))).size() == 2);
    CHECK_THROWS_AS(DegenerateForm<Rational>(Matrix<Rational>(2, 3)), std::invalid_argument);
}

TEST_CASE("adapted frame on diag(0,0,1,-1)") {
    DegenerateForm<Rational> g(diag({0, 0, 1, -1}));
    AdaptedFrame<Rational> f = build_adapted_frame(g, 2);
    CHECK(f.radical_rank() == 2);
    CHECK(f.screen_dim() == 2);
    check_frame_invariants(g, f);
    // screen must pick e2, e3 (the only nondegenerate directions)
    Matrix<Rational> sg = f.screen_gram();
    CHECK_FALSE(determinant(sg).is_zero());
    CHECK(congruence_signature(sg) == Signature{1, 1, 0});
}

TEST_CASE("adapted frame for a nondegenerate form has no radical part") {
    DegenerateForm<Rational> g(diag({2, -3, 5}));
    AdaptedFrame<Rational> f = build_adapted_frame(g, 1);
    CHECK(f.radical_rank() == 0);
    AssociatedMetric<Rational> am = associated_metric(g, f);
    // g~ coincides with g when g is nondegenerate
    CHECK(am.gram_tilde_coords == g.gram());
}

TEST_CASE("adapted frame needs the hyperbolic 2x2 fallback on split forms") {
    // g(e0,e1) = 1 is the only pairing: every diagonal pivot vanishes
    Matrix<Rational> m(3, 3);
    m(0, 1) = m(1, 0) = Rational(1);
    DegenerateForm<Rational> g(m);
    CHECK(g.radical_rank() == 1);
    AdaptedFrame<Rational> f = build_adapted_frame(g, 1);
    check_frame_invariants(g, f);
    AssociatedMetric<Rational> am = associated_metric(g, f);
    CHECK_FALSE(determinant(am.gram_tilde).is_zero());
}

TEST_CASE("totally degenerate form: g~ is the identity in the xi-frame") {
    DegenerateForm<Rational> g(Matrix<Rational>(3, 3));
    AdaptedFrame<Rational> f = build_adapted_frame(g, 3);
    CHECK(f.radical_rank() == 3);
    AssociatedMetric<Rational> am = associated_metric(g, f);
    CHECK(am.gram_tilde == Matrix<Rational>::identity(3));
}

TEST_CASE("associated metric invariants on random degenerate forms") {
    SplitMix64 rng(59);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t n = 2 + rng.next() % 7;           // dim <= 8
        std::size_t r = rng.next() % std::min<std::size_t>(4, n);  // radical rank <= 3
        DegenerateForm<Rational> g = random_degenerate(rng, n, r);
        if (g.radical_rank() != r) continue;  // shear can only preserve rank; be safe
        AdaptedFrame<Rational> f = build_adapted_frame(g, std::max<std::size_t>(1, r));
        check_frame_invariants(g, f);

        AssociatedMetric<Rational> am = associated_metric(g, f);
        // g~ nonsingular, g~(xi_i, xi_j) = delta_ij in frame components
        CHECK_FALSE(determinant(am.gram_tilde).is_zero());
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                CHECK(am.gram_tilde(i, j) == (i == j ? Rational(1) : Rational(0)));
        // radical-screen blocks of g~ vanish; screen block agrees with g
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < f.screen_dim(); ++k)
                CHECK(am.gram_tilde(i, r + k) == Rational(0));
        for (std::size_t a = 0; a < f.screen_dim(); ++a)
            for (std::size_t b = 0; b < f.screen_dim(); ++b)
                CHECK(am.gram_tilde(r + a, r + b) == am.metric_frame(r + a, r + b));
        CHECK(am.gram_tilde * am.inverse == Matrix<Rational>::identity(n));

        // screen pairs: g~ = g whenever both arguments kill every eta
        for (std::size_t a = 0; a < f.screen_dim(); ++a)
            for (std::size_t b = 0; b < f.screen_dim(); ++b) {
                Vec<Rational> x = f.screen_vector(a), y = f.screen_vector(b);
                CHECK(bilinear(am.gram_tilde_coords, x, y) == bilinear(g.gram(), x, y));
            }
    }
}

TEST_CASE("flat and sharp are mutually inverse isomorphisms") {
    SplitMix64 rng(61);
    for (int iter = 0; iter < 20; ++iter) {
        std::size_t n = 2 + rng.next() % 5;
        std::size_t r = rng.next() % std::min<std::size_t>(3, n);
        DegenerateForm<Rational> g = random_degenerate(rng, n, r);
        if (g.radical_rank() != r) continue;
        AdaptedFrame<Rational> f = build_adapted_frame(g, std::max<std::size_t>(1, r));
        AssociatedMetric<Rational> am = associated_metric(g, f);

        Vec<Rational> x(n);
        for (auto& c : x) c = rng.rational(5, 3);
        CHECK(sharp(am, flat(f, x)) == x);
        CHECK(flat(f, sharp(f, x)) == x);

        // flat(xi_1) = eta_1 whenever there is a radical
        if (r > 0) CHECK(flat(f, f.radical_vector(0)) == f.eta(0));

        // nondegenerate g: flat is plain index lowering
        if (r == 0) CHECK(flat(f, x) == g.gram() * x);
    }
}

TEST_CASE("frame hints are validated, not trusted") {
    DegenerateForm<Rational> g(diag({0, 0, 1, -1}));
    FrameHint<Rational> good;
    good.radical = {basis_vector<Rational>(4, 0), basis_vector<Rational>(4, 1)};
    good.screen = {basis_vector<Rational>(4, 2), basis_vector<Rational>(4, 3)};
    AdaptedFrame<Rational> f = build_adapted_frame(g, 2, std::optional<FrameHint<Rational>>(good));
    CHECK(f.descriptor() == "hint");
    check_frame_invariants(g, f);

    FrameHint<Rational> bad = good;
    bad.radical[0] = basis_vector<Rational>(4, 2);  // not in the kernel
    CHECK_THROWS_AS(build_adapted_frame(g, 2, std::optional<FrameHint<Rational>>(bad)),
                    std::invalid_argument);

    FrameHint<Rational> dep = good;
    dep.screen[1] = basis_vector<Rational>(4, 2);  // dependent basis
    CHECK_THROWS_AS(build_adapted_frame(g, 2, std::optional<FrameHint<Rational>>(dep)),
                    std::invalid_argument);

    FrameHint<Rational> bad_eta = good;
    bad_eta.etas = {basis_vector<Rational>(4, 0), basis_vector<Rational>(4, 0)};  // eta_2(xi_2)=0
    CHECK_THROWS_AS(build_adapted_frame(g, 2, std::optional<FrameHint<Rational>>(bad_eta)),
                    std::invalid_argument);
}
