#pragma once

// Interference of probabilities with complex and hyperbolic phases, and the mass
// operator p p̄ on the hyperbolic-complex momentum space.

#include <array>
#include <cmath>

#include "hyperclifford/rotor.hpp"

namespace hyperclifford {

struct InterferenceInput {
    double p1 = 0;
    double p2 = 0;
    double lambda = 0;
};

/// P = P1 + P2 + 2√(P1P2)λ.
inline double interfere(const InterferenceInput& in) {
    for (double p : {in.p1, in.p2}) {
        if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probabilities must lie in [0, 1]");
    }
    return in.p1 + in.p2 + 2.0 * std::sqrt(in.p1 * in.p2) * in.lambda;
}

enum class Regime { complex, hyperbolic };

inline std::string_view to_string(Regime r) { return r == Regime::complex ? "complex" : "hyperbolic"; }

struct Linearization {
    Regime regime = Regime::complex;
    double theta = 0;
    int sign = 1;
    double reconstructed = 0; ///< z z̄ of the amplitude
    HScalar<double> amplitude;
};

namespace detail {

inline Linearization linearize_as(const InterferenceInput& in, Regime regime) {
    interfere(in);
    if (in.p1 * in.p2 == 0.0) throw DegenerateAmplitude("the phase is undefined when P1·P2 = 0");
    const double a = std::sqrt(in.p1);
    const double b = std::sqrt(in.p2);
    Linearization out;
    out.regime = regime;
    if (regime == Regime::complex) {
        if (std::abs(in.lambda) > 1.0) throw DomainError("complex regime needs |λ| ≤ 1");
        out.theta = std::acos(in.lambda);
        // √P1 + e^{iθ}√P2
        out.amplitude = HScalar<double>(a + b * std::cos(out.theta), b * std::sin(out.theta), 0.0, 0.0);
    } else {
        if (std::abs(in.lambda) < 1.0) throw DomainError("hyperbolic regime needs |λ| ≥ 1");
        out.theta = std::acosh(std::abs(in.lambda));
        out.sign = in.lambda < 0 ? -1 : 1;
        // √P1 ± e^{jθ}√P2
        out.amplitude = HScalar<double>(a + out.sign * b * std::cosh(out.theta), 0.0,
                                        out.sign * b * std::sinh(out.theta), 0.0);
    }
    const HScalar<double> q = qform_scalar(out.amplitude);
    if (std::abs(q.y) > 1e-15 || std::abs(q.v) > 1e-15 || std::abs(q.w) > 1e-15) {
        throw DomainError("amplitude modulus is not real");
    }
    out.reconstructed = q.x;
    return out;
}

} // namespace detail

/// Writes P as a squared amplitude: complex phase for |λ| ≤ 1, hyperbolic phase otherwise.
inline Linearization linearize(const InterferenceInput& in) {
    return detail::linearize_as(in, std::abs(in.lambda) <= 1.0 ? Regime::complex : Regime::hyperbolic);
}

/// Forces a regime; both are valid at |λ| = 1.
inline Linearization linearize(const InterferenceInput& in, Regime regime) { return detail::linearize_as(in, regime); }

// ---- Mass operator ---------------------------------------------------------------------

/// M² = p p̄ as a matrix.
template <Coefficient T>
HMatrix<T> mass_operator(const MomentumHM4<T>& p) {
    return matrix(qform_element(embed_momentum(p)));
}

/// Scalar part of p p̄.
template <Coefficient T>
HScalar<T> mass_qform(const MomentumHM4<T>& p) {
    return qform(embed_momentum(p));
}

/// True iff p p̄ is a real multiple of the identity.
template <Coefficient T>
bool hermiticity_check(const MomentumHM4<T>& p, double tol) {
    const HMatrix<double> m = to_float(mass_operator(p));
    const auto z = as_scalar_multiple(m, tol);
    if (!z) return false;
    return std::abs(z->y) <= tol && std::abs(z->v) <= tol && std::abs(z->w) <= tol;
}

/// Real momenta rotated by a rotor acting on M4 (used for the Lorentz-orbit checks).
inline MomentumHM4<double> act(const Rotor& g, const MomentumHM4<double>& p) {
    const auto y = act(g, embed_momentum(p));
    MomentumHM4<double> out;
    for (std::size_t a = 0; a < 4; ++a) {
        out.q[a] = y[a].x;
        out.o[a] = y[a].y;
        out.s[a] = y[a].v;
        out.u[a] = y[a].w;
    }
    return out;
}

/// (q_1..q_3, o_1..o_3, s_1..s_3, u_1..u_3): the spatial parts of the four 4-vectors.
template <Coefficient T>
std::array<T, 12> fiber_vector(const MomentumHM4<T>& p) {
    std::array<T, 12> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        out[i] = p.q[i + 1];
        out[i + 3] = p.o[i + 1];
        out[i + 6] = p.s[i + 1];
        out[i + 9] = p.u[i + 1];
    }
    return out;
}

/// Fiber slot a of fiber_vector goes to R66 coordinate a: q, o on the positive
/// slots 0..5, the j-multiplied s, u on the negative slots 6..11.
template <Coefficient T>
Paravector<T> fiber_to_r66(const std::array<T, 12>& f) {
    return Paravector<T>::real(space<T>(SpaceKind::R66), std::vector<T>(f.begin(), f.end()));
}

template <Coefficient T>
std::array<T, 12> r66_to_fiber(const Paravector<T>& x) {
    if (x.space().kind() != SpaceKind::R66) throw SpaceMismatch("fiber vectors live in R66");
    const auto c = x.real_coords();
    std::array<T, 12> out{};
    std::copy(c.begin(), c.end(), out.begin());
    return out;
}

/// Replaces the spatial parts of p by a fiber vector, keeping the time components.
template <Coefficient T>
MomentumHM4<T> with_fiber(MomentumHM4<T> p, const std::array<T, 12>& f) {
    for (std::size_t i = 0; i < 3; ++i) {
        p.q[i + 1] = f[i];
        p.o[i + 1] = f[i + 3];
        p.s[i + 1] = f[i + 6];
        p.u[i + 1] = f[i + 9];
    }
    return p;
}

/// Acts with an E6 or R66 rotor on the fiber of p. True iff the time components of p
/// (its standard-vector part) are untouched and the fiber's R66 quadratic form is preserved.
inline bool stabilizer_check(const Rotor& g, const MomentumHM4<double>& p, double tol) {
    const RepName r = g.rep()->name();
    if (r != RepName::r05 && r != RepName::h05bar) throw SpaceMismatch("stabilizer rotors act on the R66 fiber");
    const auto f = fiber_to_r66(fiber_vector(p));
    const auto moved = act(g, f);
    const MomentumHM4<double> image = with_fiber(p, r66_to_fiber(moved));
    if (image.q[0] != p.q[0] || image.o[0] != p.o[0] || image.s[0] != p.s[0] || image.u[0] != p.u[0]) return false;
    return max_abs_diff(qform(moved), qform(f)) <= tol;
}

} // namespace hyperclifford
