#include <array>
#include <numeric>

#include "support.hpp"

using namespace hyperclifford;
using testing_support::Gen;
using Q = HScalar<Rational>;
using D = HScalar<double>;
using P = Paravector<Rational>;
using MV = Multivector<Rational>;

namespace {

P m4(int a, int b, int c, int d) { return P::real(space<Rational>(SpaceKind::M4), {a, b, c, d}); }

P basis(SpaceKind kind, std::size_t a) {
    const auto& sp = space<Rational>(kind);
    std::vector<Rational> c(sp->dimension());
    c[a] = 1;
    return P::real(sp, c);
}

P random_m4(Gen& g) {
    return P::real(space<Rational>(SpaceKind::M4), {g.rational(), g.rational(), g.rational(), g.rational()});
}

// Brute force Σ_π sign(π) x_π0 x̄_π1 x_π2 x̄_π3 / 4! over matrices; bar is the adjoint on M4.
HMatrix<Rational> wedge4_brute(const std::array<P, 4>& v) {
    std::array<int, 4> perm{0, 1, 2, 3};
    HMatrix<Rational> sum(2);
    do {
        int inv = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) inv += perm[a] > perm[b];
        const auto term = matrix(v[perm[0]]) * adjoint(matrix(v[perm[1]])) * matrix(v[perm[2]]) *
                          adjoint(matrix(v[perm[3]]));
        sum = inv % 2 ? sum - term : sum + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum / Rational(24);
}

} // namespace

TEST(Paravector, Dimensions) {
    EXPECT_EQ(space<Rational>(SpaceKind::M4)->dimension(), 4u);
    EXPECT_EQ(space<Rational>(SpaceKind::HM4)->dimension(), 4u);
    EXPECT_EQ(space<Rational>(SpaceKind::E6)->dimension(), 6u);
    EXPECT_EQ(space<Rational>(SpaceKind::R66)->dimension(), 12u);
    EXPECT_EQ(space<Rational>(SpaceKind::H1)->dimension(), 4u);
}

TEST(Paravector, QuadraticFormExamples) {
    EXPECT_EQ(qform(m4(1, 0, 0, 0)), Q(1));
    EXPECT_EQ(qform(m4(2, 1, 0, 0)), Q(3));
    EXPECT_EQ(qform(m4(0, 0, 0, 1)), Q(-1));
}

TEST(Paravector, H1MatchesScalarForm) {
    Gen g(31);
    const auto& h1 = space<Rational>(SpaceKind::H1);
    for (int k = 0; k < testing_support::property_runs; ++k) {
        const Q z = g.exact_scalar();
        const P x = P::real(h1, {z.x, z.y, z.v, z.w});
        EXPECT_EQ(qform(x), qform_scalar(z));
    }
    EXPECT_EQ(qform(P::real(h1, {1, 2, 3, 5})), Q(Rational(-29), Rational(0), Rational(0), Rational(-2)));
}

TEST(Paravector, SignaturesOfRealSpaces) {
    Gen g(32);
    for (int k = 0; k < 50; ++k) {
        std::vector<Rational> c(6);
        Rational expected = 0;
        for (auto& x : c) {
            x = g.rational();
            expected += x * x;
        }
        EXPECT_EQ(qform(P::real(space<Rational>(SpaceKind::E6), c)), Q(expected));
    }
    for (int k = 0; k < 50; ++k) {
        std::vector<Rational> c(12);
        for (auto& x : c) x = g.rational();
        Rational re = 0, cross = 0;
        for (std::size_t a = 0; a < 6; ++a) {
            re += c[a] * c[a] - c[a + 6] * c[a + 6];
            cross += 2 * c[a] * c[a + 6];
        }
        EXPECT_EQ(qform(P::real(space<Rational>(SpaceKind::R66), c)), Q(re, Rational(0), Rational(0), cross));
    }
}

TEST(Paravector, DotProducts) {
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            const int g = a != b ? 0 : a == 0 ? 1 : -1;
            EXPECT_EQ(dot(basis(SpaceKind::M4, a), basis(SpaceKind::M4, b)), Q(g));
        }
    Gen g(33);
    for (int k = 0; k < 100; ++k) {
        const P x = random_m4(g), y = random_m4(g);
        EXPECT_EQ(dot(x, y), dot(y, x));
        EXPECT_EQ(dot(x, x), qform(x));
    }
}

TEST(Paravector, WedgeSplit) {
    const auto& m4s = space<Rational>(SpaceKind::M4);
    const P e0 = basis(SpaceKind::M4, 0), e1 = basis(SpaceKind::M4, 1);
    EXPECT_EQ(wedge2(e0, e1), -element(e1));
    Gen g(34);
    for (int k = 0; k < 100; ++k) {
        const P x = random_m4(g), y = random_m4(g);
        EXPECT_EQ(wedge2(x, x), MV(m4s->rep()));
        EXPECT_EQ(wedge2(x, y), -wedge2(y, x));
        EXPECT_EQ(gp(element(x), involution(element(y), Involution::bar)),
                  MV::scalar(m4s->rep(), dot(x, y)) + wedge2(x, y));
    }
}

TEST(Paravector, HigherWedges) {
    std::array<P, 4> e{basis(SpaceKind::M4, 0), basis(SpaceKind::M4, 1), basis(SpaceKind::M4, 2),
                       basis(SpaceKind::M4, 3)};
    const auto w = matrix(wedge4(e[0], e[1], e[2], e[3]));
    EXPECT_EQ(w, wedge4_brute(e));
    EXPECT_EQ(w, HMatrix<Rational>::scalar(2, Q::unit_ij()));
    Gen g(35);
    for (int k = 0; k < 5; ++k) {
        std::array<P, 4> v{random_m4(g), random_m4(g), random_m4(g), random_m4(g)};
        const auto w4 = wedge4(v[0], v[1], v[2], v[3]);
        EXPECT_EQ(matrix(w4), wedge4_brute(v));
        EXPECT_EQ(wedge4(v[1], v[0], v[2], v[3]), -w4);
        EXPECT_EQ(wedge4(v[0], v[1], v[3], v[2]), -w4);
        EXPECT_EQ(wedge3(v[0], v[1], v[2]), -wedge3(v[2], v[1], v[0]));
        EXPECT_EQ(wedge3(v[0], v[1], v[0]), MV(v[0].space().rep()));
    }
}

TEST(Paravector, Projection) {
    const auto& sp = space<Rational>(SpaceKind::M4);
    const P x = m4(1, 2, -3, 4);
    const auto pr = project(matrix(x), sp);
    EXPECT_EQ(pr.value.coords(), x.coords());
    EXPECT_EQ(pr.residual, 0);
    const auto off = project(matrix(wedge2(m4(0, 1, 0, 0), m4(0, 0, 1, 0))), sp);
    EXPECT_GT(off.residual, 0);
}

TEST(Paravector, QuasiSphere) {
    const auto& h1 = space<double>(SpaceKind::H1);
    const D z = exp_scalar(D(0.0, -0.35, 0.6, 0.0));
    EXPECT_TRUE(quasi_sphere_contains(Paravector<double>::real(h1, {z.x, z.y, z.v, z.w}), 1.0, 1e-12));
    EXPECT_FALSE(quasi_sphere_contains(Paravector<double>::real(h1, {1, 0, 1, 0}), 1.0, 1e-12));
    EXPECT_FALSE(quasi_sphere_contains(Paravector<double>::real(h1, {1, 0, 1, 0}), 0.5, 1e-12));
    EXPECT_THROW(quasi_sphere_contains(Paravector<double>::real(h1, {1, 0, 0, 0}), -1.0, 1e-12), DomainError);
}

TEST(Paravector, Momenta) {
    MomentumHM4<Rational> p;
    p.q[0] = 3;
    EXPECT_EQ(qform(embed_momentum(p)), Q(9));
    MomentumHM4<Rational> s;
    s.s[0] = 3;
    EXPECT_EQ(qform(embed_momentum(s)), Q(-9));
    MomentumHM4<Rational> qu;
    qu.q[0] = 3;
    qu.u[0] = 2;
    EXPECT_EQ(qform(embed_momentum(qu)), Q(Rational(5), Rational(0), Rational(0), Rational(12)));
}

TEST(Paravector, Errors) {
    EXPECT_THROW(P::real(space<Rational>(SpaceKind::M4), {1, 2, 3}), DimensionMismatch);
    EXPECT_THROW(P(space<Rational>(SpaceKind::M4), {Q::unit_i(), Q(0), Q(0), Q(0)}), DomainError);
    EXPECT_THROW(dot(m4(1, 0, 0, 0), basis(SpaceKind::H1, 0)), SpaceMismatch);
    EXPECT_FALSE(parse_space("M5").has_value());
    EXPECT_EQ(parse_space("R66"), SpaceKind::R66);
}
