#include <numbers>

#include "support.hpp"

using namespace hyperclifford;
using testing_support::Gen;
using Q = HScalar<Rational>;

TEST(Physics, Interference) {
    EXPECT_DOUBLE_EQ(interfere({0.3, 0.4, 0.0}), 0.7);
    EXPECT_DOUBLE_EQ(interfere({0.25, 0.25, 1.0}), 1.0);
    EXPECT_NEAR(interfere({0.2, 0.8, -0.5}), 1.0 - 0.4, 1e-15);
    EXPECT_THROW(interfere({1.5, 0.2, 0.0}), DomainError);
    EXPECT_THROW(interfere({-0.1, 0.2, 0.0}), DomainError);
}

TEST(Physics, Linearize) {
    const auto c = linearize({0.25, 0.25, 1.0});
    EXPECT_EQ(c.regime, Regime::complex);
    EXPECT_NEAR(c.theta, 0.0, 1e-15);
    EXPECT_NEAR(c.reconstructed, 1.0, 1e-15);
    const auto h = linearize({0.3, 0.5, -2.5});
    EXPECT_EQ(h.regime, Regime::hyperbolic);
    EXPECT_EQ(h.sign, -1);
    EXPECT_NEAR(h.theta, std::acosh(2.5), 1e-15);
    EXPECT_THROW(linearize({0.0, 0.5, 0.3}), DegenerateAmplitude);
    EXPECT_THROW(linearize({0.3, 0.5, 2.0}, Regime::complex), DomainError);
    EXPECT_THROW(linearize({0.3, 0.5, 0.2}, Regime::hyperbolic), DomainError);
    Gen g(51);
    for (int k = 0; k < 1000; ++k) {
        const InterferenceInput in{g.real(1e-6, 1), g.real(1e-6, 1), g.real(-3, 3)};
        const auto lin = linearize(in);
        EXPECT_EQ(lin.regime == Regime::complex, std::abs(in.lambda) <= 1.0);
        EXPECT_NEAR(lin.reconstructed, interfere(in), 1e-12);
    }
    for (double lambda : {-1.0, 1.0}) {
        const auto a = linearize({0.4, 0.1, lambda}, Regime::complex);
        const auto b = linearize({0.4, 0.1, lambda}, Regime::hyperbolic);
        EXPECT_NEAR(a.reconstructed, b.reconstructed, 1e-15);
    }
}

TEST(Physics, MassOperator) {
    MomentumHM4<Rational> rest;
    rest.q[0] = 2;
    EXPECT_EQ(mass_qform(rest), Q(4));
    MomentumHM4<Rational> s;
    s.s[0] = 3;
    EXPECT_EQ(mass_qform(s), Q(-9));
    MomentumHM4<Rational> qu;
    qu.q[0] = 3;
    qu.u[0] = 2;
    EXPECT_EQ(mass_qform(qu), Q(Rational(5), Rational(0), Rational(0), Rational(12)));
    EXPECT_FALSE(hermiticity_check(qu, 1e-12));
    EXPECT_TRUE(hermiticity_check(rest, 0.0));
    Gen g(52);
    for (int k = 0; k < 100; ++k) {
        MomentumHM4<Rational> p;
        for (auto& c : p.q) c = g.rational();
        EXPECT_EQ(mass_qform(p), Q(p.q[0] * p.q[0] - p.q[1] * p.q[1] - p.q[2] * p.q[2] - p.q[3] * p.q[3]));
        EXPECT_TRUE(hermiticity_check(p, 0.0));
    }
}

TEST(Physics, HermiticityUnderLorentz) {
    MomentumHM4<double> m;
    m.q[0] = 1.5;
    const auto boosted = act(Rotor::from_params(RotorParams::m4({0.2, 0, 0}, {0, 0.9, 0})), m);
    EXPECT_TRUE(hermiticity_check(boosted, 1e-12));
    EXPECT_NEAR(mass_qform(boosted).x, 2.25, 1e-12);
}

TEST(Physics, Fiber) {
    MomentumHM4<double> p;
    p.q[0] = 1;
    const auto zero = fiber_vector(p);
    for (double c : zero) EXPECT_EQ(c, 0.0);
    MomentumHM4<double> s1;
    s1.s[1] = 1;
    const auto f = fiber_vector(s1);
    EXPECT_EQ(f[6], 1.0);
    const auto x = fiber_to_r66(f);
    EXPECT_EQ(qform(x), HScalar<double>(-1.0));
    // q-block (1,0,0) with s-block (1,0,0): real part cancels, the slot pairing leaves 2ij
    MomentumHM4<Rational> qs;
    qs.q[1] = 1;
    qs.s[1] = 1;
    const auto qx = qform(fiber_to_r66(fiber_vector(qs)));
    EXPECT_EQ(qx.x, 0);
    EXPECT_EQ(qx, Q(Rational(0), Rational(0), Rational(0), Rational(2)));
    Gen g(53);
    MomentumHM4<double> r;
    for (std::size_t i = 0; i < 4; ++i) {
        r.q[i] = g.real();
        r.o[i] = g.real();
        r.s[i] = g.real();
        r.u[i] = g.real();
    }
    const auto back = with_fiber(r, r66_to_fiber(fiber_to_r66(fiber_vector(r))));
    EXPECT_EQ(back.q, r.q);
    EXPECT_EQ(back.u, r.u);
}

TEST(Physics, Stabilizer) {
    MomentumHM4<double> p;
    p.q[0] = 1;
    p.q[2] = 0.5;
    p.s[1] = -0.25;
    EXPECT_TRUE(stabilizer_check(Rotor::identity(SpaceKind::E6), p, 1e-12));
    Antisym6 phi;
    phi.set(0, 4, 1.1);
    phi.set(2, 3, -0.6);
    EXPECT_TRUE(stabilizer_check(Rotor::from_params(RotorParams::e6(phi)), p, 1e-12));
    Antisym6 xi;
    xi.set(1, 5, 0.3);
    EXPECT_TRUE(stabilizer_check(Rotor::from_params(RotorParams::r66(phi, xi)), p, 1e-12));
    EXPECT_THROW(stabilizer_check(Rotor::identity(SpaceKind::M4), p, 1e-12), SpaceMismatch);
}
