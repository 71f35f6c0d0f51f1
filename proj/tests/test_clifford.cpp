#include "support.hpp"

using namespace hyperclifford;
using testing_support::Gen;
using Q = HScalar<Rational>;
using M = HMatrix<Rational>;
using MV = Multivector<Rational>;

namespace {

MV random_element(const RepPtr<Rational>& rp, Gen& g) {
    MV out(rp);
    for (const auto& el : rp->basis()) {
        if (g.integer(0, 2) == 0) continue;
        out.set(el.blade, out[el.blade] + el.unit * g.rational());
    }
    return out;
}

MV e(const RepPtr<Rational>& rp, int k) { return MV::blade(rp, Blade{1} << (k - 1)); }

} // namespace

TEST(Clifford, GeneratorsAnticommute) {
    for (RepName name : all_reps) {
        const auto& rp = rep<Rational>(name);
        for (int a = 1; a <= rp->n(); ++a) {
            for (int b = 1; b <= rp->n(); ++b) {
                const MV s = gp(e(rp, a), e(rp, b)) + gp(e(rp, b), e(rp, a));
                const int expected = a == b ? 2 * rp->generator_square(a - 1) : 0;
                EXPECT_EQ(s, MV::scalar(rp, Q(expected))) << to_string(name) << " " << a << b;
            }
        }
    }
    EXPECT_EQ(gp(e(rep<Rational>(RepName::r30), 1), e(rep<Rational>(RepName::r30), 1)),
              MV::scalar(rep<Rational>(RepName::r30), Q(1)));
    EXPECT_EQ(gp(e(rep<Rational>(RepName::r05), 1), e(rep<Rational>(RepName::r05), 1)),
              MV::scalar(rep<Rational>(RepName::r05), Q(-1)));
}

TEST(Clifford, BladeProductAgreesWithMatrixProduct) {
    Gen g(21);
    for (RepName name : {RepName::r30, RepName::c30bar, RepName::r05, RepName::h05bar}) {
        const auto& rp = rep<Rational>(name);
        for (int k = 0; k < 20; ++k) {
            const MV u = random_element(rp, g), v = random_element(rp, g);
            EXPECT_EQ(gp(u, v), gp_blades(u, v));
        }
    }
}

TEST(Clifford, Reversion) {
    const auto& rp = rep<Rational>(RepName::r30);
    const MV e12 = gp(e(rp, 1), e(rp, 2));
    EXPECT_EQ(involution(e12, Involution::dagger), -e12);
    EXPECT_EQ(involution(e(rp, 1), Involution::dagger), e(rp, 1));
    EXPECT_EQ(involution(e(rp, 1), Involution::hat), -e(rp, 1));
}

TEST(Clifford, InvolutionLaws) {
    Gen g(22);
    for (RepName name : all_reps) {
        const auto& rp = rep<Rational>(name);
        for (int k = 0; k < 15; ++k) {
            const MV u = random_element(rp, g), v = random_element(rp, g);
            for (Involution kind : all_involutions) EXPECT_EQ(involution(involution(u, kind), kind), u);
            EXPECT_EQ(involution(gp(u, v), Involution::bar),
                      gp(involution(v, Involution::bar), involution(u, Involution::bar)));
            EXPECT_EQ(involution(gp(u, v), Involution::dagger),
                      gp(involution(v, Involution::dagger), involution(u, Involution::dagger)));
            EXPECT_EQ(involution(gp(u, v), Involution::hat),
                      gp(involution(u, Involution::hat), involution(v, Involution::hat)));
        }
    }
}

namespace {

struct Expected {
    std::string unit;
    int bar, dagger, hat;
};

void expect_rows(RepName name, const std::vector<Expected>& expected) {
    const auto rows = involution_table<Rational>(name);
    for (const auto& x : expected) {
        const auto it = std::find_if(rows.begin(), rows.end(), [&](const InvolutionRow& r) { return r.unit == x.unit; });
        ASSERT_NE(it, rows.end()) << x.unit;
        EXPECT_EQ(it->bar, x.bar) << to_string(name) << " " << x.unit;
        EXPECT_EQ(it->dagger, x.dagger) << to_string(name) << " " << x.unit;
        EXPECT_EQ(it->hat, x.hat) << to_string(name) << " " << x.unit;
        EXPECT_FALSE(it->derived);
    }
}

} // namespace

TEST(Clifford, SignTables) {
    expect_rows(RepName::r01, {{"e", -1, 1, -1}, {"i", -1, 1, -1}});
    expect_rows(RepName::r10, {{"e", -1, 1, -1}, {"j", -1, 1, -1}});
    expect_rows(RepName::r30, {{"e_i", -1, 1, -1}, {"sigma_i", 1, 1, 1}, {"i", -1, -1, 1}, {"j", -1, 1, -1}});
    const std::vector<Expected> t3{
        {"e_i", -1, 1, -1}, {"sigma_0i", 1, 1, 1}, {"sigma_ij", 1, -1, -1}, {"i", -1, 1, -1}, {"j", -1, 1, -1}};
    expect_rows(RepName::r05, t3);
    expect_rows(RepName::h05bar, t3);
}

TEST(Clifford, DerivedIjRow) {
    for (RepName name : {RepName::r30, RepName::r05}) {
        const auto rows = involution_table<Rational>(name);
        const auto it = std::find_if(rows.begin(), rows.end(), [](const InvolutionRow& r) { return r.unit == "ij"; });
        ASSERT_NE(it, rows.end());
        EXPECT_TRUE(it->derived);
        EXPECT_EQ(it->bar, it->dagger * it->hat);
    }
}

TEST(Clifford, Pseudoscalars) {
    EXPECT_EQ(matrix(pseudoscalar(rep<Rational>(RepName::r30))), M::scalar(2, Q::unit_ij()));
    EXPECT_EQ(matrix(pseudoscalar(rep<Rational>(RepName::r05))), M::scalar(4, -Q::unit_i()));
    EXPECT_EQ(matrix(pseudoscalar(rep<Rational>(RepName::r01))), M::scalar(1, Q::unit_i()));
}

TEST(Clifford, Dimensions) {
    const std::vector<std::pair<RepName, std::size_t>> dims{
        {RepName::r01, 2}, {RepName::r10, 2}, {RepName::r30, 8}, {RepName::r05, 32},
        {RepName::h05bar, 64}, {RepName::c30bar, 16}, {RepName::hbar, 4}};
    for (const auto& [name, d] : dims) EXPECT_EQ(enumerate_algebra(rep<Rational>(name)).real_dimension, d);
    const auto even = even_subalgebra(rep<Rational>(RepName::r05));
    EXPECT_EQ(even.count, 16u);
    EXPECT_TRUE(even.closed);
}

TEST(Clifford, Decompose) {
    const auto& r30 = rep<Rational>(RepName::r30);
    EXPECT_EQ(decompose(M::identity(2), r30), MV::scalar(r30, Q(1)));
    EXPECT_EQ(decompose(Q::unit_i() * pauli2<Rational>(3), r30), MV::blade(r30, 0b011));
    EXPECT_THROW(decompose(pauli2<Rational>(3), r30), OutsideSpan);
    EXPECT_THROW(decompose(M::identity(4), r30), DimensionMismatch);
    Gen g(23);
    for (RepName name : all_reps) {
        const auto& rp = rep<Rational>(name);
        for (int k = 0; k < 100 / static_cast<int>(all_reps.size()) + 1; ++k) {
            const MV u = random_element(rp, g);
            EXPECT_EQ(decompose(matrix(u), rp), u);
        }
    }
}

TEST(Clifford, CoefficientRing) {
    const auto& r30 = rep<Rational>(RepName::r30);
    MV u(r30);
    EXPECT_THROW(u.set(1, Q::unit_j()), RepresentationMismatch);
    const MV a = MV::scalar(r30, Q(1));
    const MV b = MV::scalar(rep<Rational>(RepName::r05), Q(1));
    EXPECT_THROW(a + b, RepresentationMismatch);
}

TEST(Clifford, AdjugateConjugation) {
    EXPECT_EQ(porteous_conjugate_2x2(M::identity(2)), M::identity(2));
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(porteous_conjugate_2x2(pauli2<Rational>(k)), -pauli2<Rational>(k));
    Gen g(24);
    for (int k = 0; k < 50; ++k) {
        const M a = g.exact_matrix(2), b = g.exact_matrix(2);
        EXPECT_EQ(porteous_conjugate_2x2(a * b), porteous_conjugate_2x2(b) * porteous_conjugate_2x2(a));
        EXPECT_EQ(porteous_conjugate_2x2(porteous_conjugate_2x2(a)), a);
    }
}

TEST(Clifford, FourByFourFormulas) {
    const auto& r05 = rep<Rational>(RepName::r05);
    EXPECT_EQ(porteous_dagger_4x4(M::identity(4)), M::identity(4));
    EXPECT_EQ(porteous_hat_4x4(M::identity(4)), M::identity(4));
    const M e1 = matrix(e(r05, 1));
    EXPECT_EQ(porteous_dagger_4x4(e1), e1);
    EXPECT_EQ(porteous_hat_4x4(e1), -e1);
    Gen g(25);
    for (int k = 0; k < 30; ++k) {
        const MV u = random_element(r05, g);
        EXPECT_EQ(porteous_dagger_4x4(matrix(u)), matrix(involution(u, Involution::dagger)));
        EXPECT_EQ(porteous_hat_4x4(matrix(u)), matrix(involution(u, Involution::hat)));
    }
}

TEST(Clifford, ConjugationIsAdjoint) {
    Gen g(26);
    for (RepName name : {RepName::r05, RepName::h05bar, RepName::c30bar}) {
        const auto& rp = rep<Rational>(name);
        for (int k = 0; k < 20; ++k) {
            const MV u = random_element(rp, g);
            EXPECT_EQ(matrix(involution(u, Involution::bar)), adjoint(matrix(u)));
        }
    }
}

TEST(Clifford, ParseRepNames) {
    for (RepName name : all_reps) EXPECT_EQ(parse_rep(to_string(name)), name);
    EXPECT_FALSE(parse_rep("r99").has_value());
}
