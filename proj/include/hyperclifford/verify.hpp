#pragma once

// Verification suites: each check recomputes a claimed relation and reports the largest
// deviation found.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hyperclifford/physics.hpp"
#include "hyperclifford/report.hpp"

namespace hyperclifford {

struct VerifyOptions {
    double tol = 1e-10;        ///< floating checks with a 1e-10 budget
    double strict_tol = 1e-12; ///< spin conditions, boosts, interference, null factors
    std::uint64_t seed = 20070601;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"tables",  "dims",   "commutators", "involutions", "sphere",
                                                "wedge",   "rotations", "quantum"};
    return names;
}

namespace detail {

/// Deterministic sampler shared by the suites.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    Rational rational(int range = 4, int max_den = 3) { return Rational(integer(-range, range), integer(1, max_den)); }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

template <Coefficient T>
T sample_coefficient(Sampler& s) {
    if constexpr (std::same_as<T, double>) {
        return s.uniform(-1.0, 1.0);
    } else {
        return s.rational();
    }
}

template <Coefficient T>
Multivector<T> random_multivector(const RepPtr<T>& rp, Sampler& s) {
    std::vector<HScalar<T>> coeffs(rp->blade_count());
    for (const auto& el : rp->basis()) {
        if (s.integer(0, 2) == 0) continue; // keep roughly two thirds of the terms
        coeffs[el.blade] += el.unit * sample_coefficient<T>(s);
    }
    Multivector<T> out(rp);
    for (Blade b = 0; b < coeffs.size(); ++b) out.set(b, coeffs[b]);
    return out;
}

template <Coefficient T>
Paravector<T> random_paravector(const SpacePtr<T>& sp, Sampler& s) {
    std::vector<HScalar<T>> coords;
    for (std::size_t a = 0; a < sp->dimension(); ++a) {
        if (sp->hypercomplex_coords()) {
            coords.emplace_back(sample_coefficient<T>(s), sample_coefficient<T>(s), sample_coefficient<T>(s),
                                sample_coefficient<T>(s));
        } else {
            coords.emplace_back(sample_coefficient<T>(s));
        }
    }
    return Paravector<T>(sp, std::move(coords));
}

inline RotorParams random_rotor_params(SpaceKind kind, Sampler& s, double xi_range) {
    const double pi = std::numbers::pi;
    switch (kind) {
    case SpaceKind::H1: return RotorParams::h1(s.uniform(-pi, pi), s.uniform(-xi_range, xi_range));
    case SpaceKind::M4:
    case SpaceKind::HM4:
        return RotorParams::m4({s.uniform(-pi, pi), s.uniform(-pi, pi), s.uniform(-pi, pi)},
                               {s.uniform(-xi_range, xi_range), s.uniform(-xi_range, xi_range),
                                s.uniform(-xi_range, xi_range)});
    case SpaceKind::E6:
    case SpaceKind::R66: {
        Antisym6 phi;
        Antisym6 xi;
        for (int a = 0; a < 6; ++a) {
            for (int b = a + 1; b < 6; ++b) {
                phi.set(a, b, s.uniform(-pi / 2, pi / 2));
                if (kind == SpaceKind::R66) xi.set(a, b, s.uniform(-xi_range, xi_range));
            }
        }
        return kind == SpaceKind::E6 ? RotorParams::e6(phi) : RotorParams::r66(phi, xi);
    }
    }
    throw SpaceMismatch("unknown space");
}

/// Tracks the worst error of a floating relation against a tolerance.
class Tally {
public:
    Tally(std::string id, std::string description, std::string formula, double tol)
        : report_{std::move(id), std::move(description), std::move(formula), Status::pass, 0.0, 0.0}, tol_(tol) {}

    void record(double err) {
        if (!(err <= report_.max_error)) report_.max_error = std::isnan(err) ? INFINITY : err;
    }
    void require(bool ok) {
        if (!ok) failed_ = true;
    }

    CheckReport finish() {
        report_.status = (!failed_ && report_.max_error <= tol_) ? Status::pass : Status::fail;
        report_.elapsed_ms = clock_.elapsed_ms();
        return report_;
    }

    /// Runs `body`, turning any library error into a failed report.
    CheckReport run(const std::function<void(Tally&)>& body) {
        try {
            body(*this);
        } catch (const std::exception& e) {
            failed_ = true;
            report_.description += std::string(" (error: ") + e.what() + ")";
        }
        return finish();
    }

private:
    CheckReport report_;
    double tol_;
    bool failed_ = false;
    Stopwatch clock_;
};

inline CheckReport check(std::string id, std::string description, std::string formula, double tol,
                         const std::function<void(Tally&)>& body) {
    Tally t(std::move(id), std::move(description), std::move(formula), tol);
    return t.run(body);
}

struct ReferenceRow {
    const char* unit;
    int bar;
    int dagger;
    int hat;
};

/// Published sign tables for the units of each algebra.
inline const std::vector<ReferenceRow>& reference_table(RepName name) {
    static const std::vector<ReferenceRow> r01{{"e", -1, 1, -1}, {"i", -1, 1, -1}};
    static const std::vector<ReferenceRow> r10{{"e", -1, 1, -1}, {"j", -1, 1, -1}};
    static const std::vector<ReferenceRow> r30{
        {"e_i", -1, 1, -1}, {"sigma_i", 1, 1, 1}, {"i", -1, -1, 1}, {"j", -1, 1, -1}};
    static const std::vector<ReferenceRow> r05{{"e_i", -1, 1, -1},
                                               {"sigma_0i", 1, 1, 1},
                                               {"sigma_ij", 1, -1, -1},
                                               {"i", -1, 1, -1},
                                               {"j", -1, 1, -1}};
    static const std::vector<ReferenceRow> none;
    switch (name) {
    case RepName::r01: return r01;
    case RepName::r10: return r10;
    case RepName::r30: return r30;
    case RepName::r05: return r05;
    default: return none;
    }
}

/// Number of sign mismatches between the computed and the reference table.
inline int table_mismatches(RepName name) {
    const auto rows = involution_table<Rational>(name);
    int bad = 0;
    for (const auto& ref : reference_table(name)) {
        const auto it =
            std::find_if(rows.begin(), rows.end(), [&](const InvolutionRow& r) { return r.unit == ref.unit; });
        if (it == rows.end()) {
            bad += 3;
            continue;
        }
        bad += (it->bar != ref.bar) + (it->dagger != ref.dagger) + (it->hat != ref.hat);
    }
    return bad;
}

/// Brute-force Σ sign(π) a ā' b b̄' / 4! over the raw M4 matrices, with bar as the adjoint.
inline HMatrix<Rational> wedge4_oracle(const std::array<HMatrix<Rational>, 4>& m) {
    std::array<int, 4> perm{0, 1, 2, 3};
    HMatrix<Rational> sum(2);
    do {
        int inversions = 0;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b)
                if (perm[a] > perm[b]) ++inversions;
        const HMatrix<Rational> term = m[perm[0]] * adjoint(m[perm[1]]) * m[perm[2]] * adjoint(m[perm[3]]);
        if (inversions % 2) {
            sum -= term;
        } else {
            sum += term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum / Rational(24);
}

} // namespace detail

// ---- Suites ----------------------------------------------------------------------------

inline std::vector<CheckReport> verify_tables(const VerifyOptions& = {}) {
    using detail::check;
    std::vector<CheckReport> out;
    out.push_back(check("tables.r01_r10", "sign table for the units of R(0,1) and R(1,0)",
                        "e, i, j: bar -, dagger +, hat -", 0.0, [](detail::Tally& t) {
                            t.record(detail::table_mismatches(RepName::r01) + detail::table_mismatches(RepName::r10));
                        }));
    out.push_back(check("tables.r30", "sign table for the units of R(3,0)",
                        "e_i (-,+,-), sigma_i (+,+,+), i (-,-,+), j (-,+,-)", 0.0,
                        [](detail::Tally& t) { t.record(detail::table_mismatches(RepName::r30)); }));
    out.push_back(check("tables.r05", "sign table for the units of R(0,5)",
                        "e_i (-,+,-), sigma_0i (+,+,+), sigma_ij (+,-,-), i (-,+,-), j (-,+,-)", 0.0,
                        [](detail::Tally& t) { t.record(detail::table_mismatches(RepName::r05)); }));
    return out;
}

inline std::vector<CheckReport> verify_dims(const VerifyOptions& = {}) {
    std::vector<CheckReport> out;
    const std::vector<std::pair<RepName, std::size_t>> expected{{RepName::r01, 2},    {RepName::r10, 2},
                                                                {RepName::r30, 8},    {RepName::r05, 32},
                                                                {RepName::h05bar, 64}, {RepName::c30bar, 16},
                                                                {RepName::hbar, 4}};
    for (const auto& [name, dim] : expected) {
        out.push_back(detail::check("dims." + std::string(to_string(name)),
                                    "real dimension of the algebra generated by the representation",
                                    "dim " + std::string(to_string(name)) + " = " + std::to_string(dim), 0.0,
                                    [name = name, dim = dim](detail::Tally& t) {
                                        const auto r = enumerate_algebra(rep<Rational>(name));
                                        t.record(std::abs(static_cast<double>(r.real_dimension) -
                                                          static_cast<double>(dim)));
                                    }));
    }
    out.push_back(detail::check("dims.even_r05", "even subalgebra of R(0,5) is closed with 2^4 elements",
                                "dim even R(0,5) = 16", 0.0, [](detail::Tally& t) {
                                    const auto even = even_subalgebra(rep<Rational>(RepName::r05));
                                    t.record(std::abs(static_cast<double>(even.count) - 16.0));
                                    t.require(even.closed);
                                }));
    return out;
}

inline std::vector<CheckReport> verify_commutators(const VerifyOptions& = {}) {
    std::vector<CheckReport> out;
    for (auto family : {GeneratorFamily::u1h, GeneratorFamily::lorentz, GeneratorFamily::su4, GeneratorFamily::su4h}) {
        const auto set = generator_set(family);
        for (auto& r : verify_generators(set)) out.push_back(std::move(r));
        if (family != GeneratorFamily::su4)
            for (auto& r : verify_ab_split(set)) out.push_back(std::move(r));
    }
    using detail::check;
    out.push_back(check("commutators.pauli.kron", "tensor-product construction equals the transcribed matrices",
                        "sigma_k = kron(...) for k = 1..15", 0.0, [](detail::Tally& t) {
                            for (int k = 1; k <= 15; ++k)
                                t.record(detail::to_double(max_abs_diff(pauli4<Rational>(k), pauli4_literal<Rational>(k))));
                        }));
    out.push_back(check("commutators.pauli.orthogonal", "trace orthogonality of the fifteen matrices",
                        "tr(sigma_k sigma_l) = 4 delta_kl", 0.0, [](detail::Tally& t) {
                            const auto& table = PauliTable<Rational>::instance();
                            for (int k = 1; k <= 15; ++k)
                                for (int l = 1; l <= 15; ++l)
                                    t.record(detail::to_double(max_abs_diff(
                                        trace(table[k] * table[l]), HScalar<Rational>(k == l ? 4 : 0))));
                        }));
    out.push_back(check("commutators.pauli.sigma_ab", "sigma_ab lookup is antisymmetric and hits every matrix once",
                        "sigma_ab = -sigma_ba", 0.0, [](detail::Tally& t) {
                            std::array<int, 16> hits{};
                            for (int a = 0; a < 6; ++a) {
                                for (int b = 0; b < 6; ++b) {
                                    t.require(sigma_ab_index(a, b) == -sigma_ab_index(b, a));
                                    if (a < b) ++hits[static_cast<std::size_t>(std::abs(sigma_ab_index(a, b)))];
                                }
                            }
                            for (int k = 1; k <= 15; ++k) t.require(hits[static_cast<std::size_t>(k)] == 1);
                        }));
    return out;
}

inline std::vector<CheckReport> verify_involutions(const VerifyOptions& opt = {}) {
    using detail::check;
    using R = Rational;
    std::vector<CheckReport> out;
    out.push_back(check("involutions.pseudoscalar.r30", "pseudoscalar of R(3,0)", "e1 e2 e3 = ij", 0.0,
                        [](detail::Tally& t) {
                            const auto& rp = rep<R>(RepName::r30);
                            t.record(detail::to_double(max_abs_diff(
                                matrix(pseudoscalar(rp)), HMatrix<R>::scalar(2, HScalar<R>::unit_ij()))));
                        }));
    out.push_back(check("involutions.pseudoscalar.r05", "pseudoscalar of R(0,5)", "e1 e2 e3 e4 e5 = -i", 0.0,
                        [](detail::Tally& t) {
                            const auto& rp = rep<R>(RepName::r05);
                            t.record(detail::to_double(max_abs_diff(
                                matrix(pseudoscalar(rp)), HMatrix<R>::scalar(4, -HScalar<R>::unit_i()))));
                        }));
    out.push_back(check("involutions.composition", "conjugation is graduation after reversion, in either order",
                        "bar = hat o dagger = dagger o hat", 0.0, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed);
                            for (RepName name : all_reps) {
                                const auto& rp = rep<R>(name);
                                for (int k = 0; k < 40; ++k) {
                                    const auto u = detail::random_multivector(rp, s);
                                    const auto bar = involution(u, Involution::bar);
                                    t.require(bar == involution(involution(u, Involution::dagger), Involution::hat));
                                    t.require(bar == involution(involution(u, Involution::hat), Involution::dagger));
                                }
                            }
                        }));
    out.push_back(check("involutions.morphisms", "reversion and conjugation reverse products, graduation keeps order",
                        "(uv)^dagger = v^dagger u^dagger, hat(uv) = hat(u) hat(v)", 0.0, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 1);
                            for (RepName name : all_reps) {
                                const auto& rp = rep<R>(name);
                                for (int k = 0; k < 25; ++k) {
                                    const auto u = detail::random_multivector(rp, s);
                                    const auto v = detail::random_multivector(rp, s);
                                    const auto uv = gp(u, v);
                                    t.require(involution(uv, Involution::dagger) ==
                                              gp(involution(v, Involution::dagger), involution(u, Involution::dagger)));
                                    t.require(involution(uv, Involution::bar) ==
                                              gp(involution(v, Involution::bar), involution(u, Involution::bar)));
                                    t.require(involution(uv, Involution::hat) ==
                                              gp(involution(u, Involution::hat), involution(v, Involution::hat)));
                                }
                            }
                        }));
    out.push_back(check("involutions.porteous_4x4", "explicit 4x4 reversion and graduation formulas on R(0,5)",
                        "dagger and hat as entry permutations", 0.0, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 2);
                            for (RepName name : {RepName::r05, RepName::h05bar}) {
                                const auto& rp = rep<R>(name);
                                for (int k = 0; k < 50; ++k) {
                                    const auto u = detail::random_multivector(rp, s);
                                    const auto m = matrix(u);
                                    t.require(porteous_dagger_4x4(m) == matrix(involution(u, Involution::dagger)));
                                    t.require(porteous_hat_4x4(m) == matrix(involution(u, Involution::hat)));
                                    t.require(porteous_hat_4x4(porteous_dagger_4x4(m)) == adjoint(m));
                                }
                            }
                        }));
    out.push_back(check("involutions.adjoint", "conjugation is the conjugate transpose of the matrix image",
                        "bar(a) = a^* (i -> -i, j -> -j, transposed)", 0.0, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 3);
                            for (RepName name : {RepName::r30, RepName::c30bar, RepName::r05, RepName::h05bar}) {
                                const auto& rp = rep<R>(name);
                                for (int k = 0; k < 50; ++k) {
                                    const auto u = detail::random_multivector(rp, s);
                                    t.require(matrix(involution(u, Involution::bar)) == adjoint(matrix(u)));
                                }
                            }
                        }));
    out.push_back(check("involutions.porteous_2x2", "adjugate conjugation on the plain Pauli representation",
                        "bar(a) = (a22, -a12; -a21, a11) negates sigma_i", 0.0, [](detail::Tally& t) {
                            // e_i = σ_i: blades of grade g must pick up (−1)^{g(g+1)/2}
                            const HMatrix<R> id = HMatrix<R>::identity(2);
                            t.require(porteous_conjugate_2x2(id) == id);
                            for (Blade b = 1; b < 8; ++b) {
                                HMatrix<R> m = id;
                                for (int k = 0; k < 3; ++k)
                                    if (b & (Blade{1} << k)) m = m * pauli2<R>(k + 1);
                                const HMatrix<R> expected = grade_sign(Involution::bar, grade(b)) > 0 ? m : -m;
                                t.require(porteous_conjugate_2x2(m) == expected);
                            }
                        }));
    out.push_back(check("involutions.quaternions", "i sigma_k generate the quaternions",
                        "q_k^2 = -1, q1 q2 q3 = 1", 0.0, [](detail::Tally& t) {
                            const HScalar<R> i = HScalar<R>::unit_i();
                            const HMatrix<R> id = HMatrix<R>::identity(2);
                            std::array<HMatrix<R>, 3> q{i * pauli2<R>(1), i * pauli2<R>(2), i * pauli2<R>(3)};
                            for (const auto& qk : q) t.require(qk * qk == -id);
                            t.require(q[0] * q[1] * q[2] == id);
                        }));
    return out;
}

inline std::vector<CheckReport> verify_sphere(const VerifyOptions& opt = {}) {
    using detail::check;
    std::vector<CheckReport> out;
    const double pi = std::numbers::pi;
    out.push_back(check("sphere.s5", "closed-form S5 point against the five-rotor path, 100 angle sets x 3 radii",
                        "x = g5 g4 g3 g2 g1 (0,0,0,0,0,r) ghat^-1; |x| = r", opt.tol, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 10);
                            for (int k = 0; k < 100; ++k) {
                                const SphereAngles a{s.uniform(0, 2 * pi), s.uniform(0, 2 * pi), s.uniform(0, 2 * pi),
                                                     s.uniform(0, 2 * pi), s.uniform(0, 2 * pi)};
                                for (double r : {0.5, 1.0, 3.0}) {
                                    const auto p = sphere_point(r, a);
                                    const auto q = sphere_point_via_rotors(r, a);
                                    double norm = 0;
                                    for (std::size_t c = 0; c < 6; ++c) {
                                        t.record(std::abs(p[c] - q[c]));
                                        norm += p[c] * p[c];
                                    }
                                    t.record(std::abs(std::sqrt(norm) - r));
                                }
                            }
                        }));
    out.push_back(check("sphere.anchors", "fixed sphere points", "angles 0 -> (0,0,0,0,0,r); phi25 = pi/2 -> (0,0,r,0,0,0)",
                        opt.tol, [&](detail::Tally& t) {
                            const auto p0 = sphere_point_via_rotors(2.0, {});
                            const auto p1 = sphere_point_via_rotors(2.0, {pi / 2, 0, 0, 0, 0});
                            const std::array<double, 6> e0{0, 0, 0, 0, 0, 2};
                            const std::array<double, 6> e1{0, 0, 2, 0, 0, 0};
                            for (std::size_t c = 0; c < 6; ++c) {
                                t.record(std::abs(p0[c] - e0[c]));
                                t.record(std::abs(p1[c] - e1[c]));
                            }
                        }));
    out.push_back(check("sphere.r66_membership", "complexified-angle points lie on the real quasi-sphere of R(6,6)",
                        "x xbar = r^2, ij part 0", opt.tol, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 11);
                            const auto& sp = space<double>(SpaceKind::R66);
                            for (int k = 0; k < 100; ++k) {
                                const SphereAngles a{s.uniform(0, 2 * pi), s.uniform(0, 2 * pi), s.uniform(0, 2 * pi),
                                                     s.uniform(0, 2 * pi), s.uniform(0, 2 * pi)};
                                const HyperbolicAngles h{s.uniform(-2, 2), s.uniform(-2, 2), s.uniform(-2, 2),
                                                         s.uniform(-2, 2), s.uniform(-2, 2)};
                                const double r = s.uniform(0.1, 3.0);
                                const auto c = quasi_sphere_point_r66(r, a, h);
                                const auto x = Paravector<double>::real(sp, {c.begin(), c.end()});
                                const HScalar<double> q = qform(x);
                                // relative to the largest coordinate product
                                double scale = 1.0;
                                for (double v : c) scale = std::max(scale, v * v);
                                t.record(max_abs_diff(q, HScalar<double>(r * r)) / scale);
                                t.record(qform_non_scalar_residual(x) / scale);
                            }
                        }));
    out.push_back(check("sphere.r66_rotor_path", "complexified-angle closed form against the R(6,6) rotor path",
                        "phi_ab -> phi_ab + ij xi_ab in g5 g4 g3 g2 g1", opt.tol, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 12);
                            for (int k = 0; k < 50; ++k) {
                                const SphereAngles a{s.uniform(0, 2 * pi), s.uniform(0, 2 * pi), s.uniform(0, 2 * pi),
                                                     s.uniform(0, 2 * pi), s.uniform(0, 2 * pi)};
                                const HyperbolicAngles h{s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1),
                                                         s.uniform(-1, 1), s.uniform(-1, 1)};
                                const auto p = quasi_sphere_point_r66(1.0, a, h);
                                const auto q = quasi_sphere_point_r66_via_rotors(1.0, a, h);
                                double scale = 1.0;
                                for (double v : p) scale = std::max(scale, std::abs(v));
                                for (std::size_t c = 0; c < 12; ++c) t.record(std::abs(p[c] - q[c]) / scale);
                            }
                        }));
    return out;
}

inline std::vector<CheckReport> verify_wedge(const VerifyOptions& opt = {}) {
    using detail::check;
    using R = Rational;
    std::vector<CheckReport> out;
    const auto& m4 = space<R>(SpaceKind::M4);
    auto basis_vector = [&](std::size_t a) {
        std::vector<R> c(4);
        c[a] = 1;
        return Paravector<R>::real(m4, c);
    };
    out.push_back(check("wedge.metric", "dot products of the Minkowski paravector basis", "e_a . e_b = g_ab", 0.0,
                        [&](detail::Tally& t) {
                            for (std::size_t a = 0; a < 4; ++a)
                                for (std::size_t b = 0; b < 4; ++b) {
                                    const int g = a != b ? 0 : a == 0 ? 1 : -1;
                                    t.record(detail::to_double(
                                        max_abs_diff(dot(basis_vector(a), basis_vector(b)), HScalar<R>(g))));
                                }
                        }));
    out.push_back(check("wedge.split", "x ybar splits into dot and wedge, 500 exact pairs", "x ybar = x.y + x^y", 0.0,
                        [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 20);
                            for (int k = 0; k < 500; ++k) {
                                const auto x = detail::random_paravector(m4, s);
                                const auto y = detail::random_paravector(m4, s);
                                const auto lhs = gp(element(x), involution(element(y), Involution::bar));
                                const auto rhs = Multivector<R>::scalar(m4->rep(), dot(x, y)) + wedge2(x, y);
                                t.require(lhs == rhs);
                            }
                        }));
    out.push_back(check("wedge.antisymmetry", "wedge3 and wedge4 change sign under every transposition",
                        "x^y^v = -y^x^v etc.", 0.0, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 21);
                            for (int k = 0; k < 10; ++k) {
                                std::array<Paravector<R>, 4> v{
                                    detail::random_paravector(m4, s), detail::random_paravector(m4, s),
                                    detail::random_paravector(m4, s), detail::random_paravector(m4, s)};
                                const auto w3 = wedge3(v[0], v[1], v[2]);
                                t.require(wedge3(v[1], v[0], v[2]) == -w3);
                                t.require(wedge3(v[0], v[2], v[1]) == -w3);
                                t.require(wedge3(v[2], v[1], v[0]) == -w3);
                                const auto w4 = wedge4(v[0], v[1], v[2], v[3]);
                                for (std::size_t a = 0; a < 4; ++a) {
                                    for (std::size_t b = a + 1; b < 4; ++b) {
                                        auto u = v;
                                        std::swap(u[a], u[b]);
                                        t.require(wedge4(u[0], u[1], u[2], u[3]) == -w4);
                                    }
                                }
                            }
                        }));
    out.push_back(check("wedge.dependent", "wedge4 of linearly dependent paravectors vanishes", "x^y^v^(ax+by) = 0", 0.0,
                        [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 22);
                            for (int k = 0; k < 10; ++k) {
                                const auto x = detail::random_paravector(m4, s);
                                const auto y = detail::random_paravector(m4, s);
                                const auto v = detail::random_paravector(m4, s);
                                std::vector<HScalar<R>> c;
                                const R a = s.rational();
                                const R b = s.rational();
                                for (std::size_t i = 0; i < 4; ++i) c.push_back(x[i] * a + y[i] * b);
                                const Paravector<R> w(m4, c);
                                t.require(wedge4(x, y, v, w) == Multivector<R>(m4->rep()));
                            }
                        }));
    out.push_back(check("wedge.pseudoscalar", "wedge of the basis against the 24-term brute-force sum",
                        "e0^e1^e2^e3 = ij", 0.0, [&](detail::Tally& t) {
                            const auto w = matrix(wedge4(basis_vector(0), basis_vector(1), basis_vector(2), basis_vector(3)));
                            const auto oracle = detail::wedge4_oracle(
                                {matrix(basis_vector(0)), matrix(basis_vector(1)), matrix(basis_vector(2)),
                                 matrix(basis_vector(3))});
                            t.record(detail::to_double(max_abs_diff(w, oracle)));
                            t.record(detail::to_double(max_abs_diff(w, HMatrix<R>::scalar(2, HScalar<R>::unit_ij()))));
                        }));
    return out;
}

inline std::vector<CheckReport> verify_rotations(const VerifyOptions& opt = {}) {
    using detail::check;
    std::vector<CheckReport> out;
    for (SpaceKind kind : {SpaceKind::H1, SpaceKind::M4, SpaceKind::E6, SpaceKind::R66}) {
        const std::string name(to_string(kind));
        out.push_back(check("rotations.invariance." + name, "qform preserved by 200 random rotors on random points",
                            "qform(g x ghat^-1) = qform(x)", opt.tol, [&, kind](detail::Tally& t) {
                                detail::Sampler s(opt.seed + 30 + static_cast<int>(kind));
                                const auto& sp = space<double>(kind);
                                for (int k = 0; k < 200; ++k) {
                                    const auto g =
                                        Rotor::from_params(detail::random_rotor_params(kind, s, 1.0));
                                    const auto x = detail::random_paravector(sp, s);
                                    t.record(max_abs_diff(qform(act(g, x)), qform(x)));
                                }
                            }));
        out.push_back(check("rotations.spin." + name, "spin condition and ghat^-1 = g^dagger on 200 random rotors",
                            "g gbar = 1, ghat^-1 = g^dagger", opt.strict_tol, [&, kind](detail::Tally& t) {
                                detail::Sampler s(opt.seed + 40 + static_cast<int>(kind));
                                for (int k = 0; k < 200; ++k) {
                                    const auto g = Rotor::from_params(detail::random_rotor_params(kind, s, 1.0));
                                    t.record(g.spin_residual());
                                    t.record(g.hat_dagger_residual());
                                }
                            }));
    }
    out.push_back(check("rotations.boost", "boost of a rest momentum along axis 3",
                        "(m,0,0,0) -> (m cosh xi, 0, 0, m sinh xi)", opt.strict_tol, [&](detail::Tally& t) {
                            for (double xi : {-2.0, -0.5, 0.5, 2.0}) {
                                for (double m : {1.0, 2.0}) {
                                    const auto g = Rotor::from_params(RotorParams::m4({0, 0, 0}, {0, 0, xi}));
                                    const auto y = act(g, Paravector<double>::real(space<double>(SpaceKind::M4),
                                                                                   {m, 0, 0, 0}))
                                                       .real_coords();
                                    const std::array<double, 4> e{m * std::cosh(xi), 0, 0, m * std::sinh(xi)};
                                    for (std::size_t a = 0; a < 4; ++a) t.record(std::abs(y[a] - e[a]));
                                }
                            }
                        }));
    out.push_back(check("rotations.hat", "pure rotations are hat-invariant, pure boosts have ghat = g^-1",
                        "ghat = g (xi = 0); ghat = g^-1 (phi = 0)", opt.strict_tol, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 50);
                            for (int k = 0; k < 50; ++k) {
                                const double pi = std::numbers::pi;
                                const auto r = Rotor::from_params(RotorParams::m4(
                                    {s.uniform(-pi, pi), s.uniform(-pi, pi), s.uniform(-pi, pi)}, {0, 0, 0}));
                                t.record(max_abs_diff(matrix(involution(r.element(), Involution::hat)), r.matrix()));
                                const auto b = Rotor::from_params(RotorParams::m4(
                                    {0, 0, 0}, {s.uniform(-1, 1), s.uniform(-1, 1), s.uniform(-1, 1)}));
                                t.record(max_abs_diff(matrix(involution(b.element(), Involution::hat)) * b.matrix(),
                                                      HMatrix<double>::identity(2)));
                            }
                        }));
    out.push_back(check("rotations.null_basis", "null-basis product law and conjugation on 1000 hyperbolic numbers",
                        "(a,b)(c,d) = (ac,bd); conj (a,b) = (b,a)", 0.0, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 51);
                            for (int k = 0; k < 1000; ++k) {
                                const HScalar<Rational> z(s.rational(), Rational(0), s.rational(), Rational(0));
                                const HScalar<Rational> w(s.rational(), Rational(0), s.rational(), Rational(0));
                                const auto pz = to_null(z);
                                const auto pw = to_null(w);
                                t.require(to_null(z * w) == multiply(pz, pw));
                                const auto c = to_null(conjugate(z));
                                t.require(c.a == pz.b && c.b == pz.a);
                                t.require(from_null(pz) == z);
                            }
                        }));
    out.push_back(check("rotations.null_factors", "null-basis factors of random rotors and their reconstruction",
                        "g = (exp(-i phi/2 + xi/2), exp(-i phi/2 - xi/2))", opt.strict_tol, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 52);
                            for (SpaceKind kind : {SpaceKind::H1, SpaceKind::M4, SpaceKind::R66}) {
                                for (int k = 0; k < 30; ++k) {
                                    const auto p = detail::random_rotor_params(kind, s, 1.0);
                                    const auto g = Rotor::from_params(p);
                                    const auto pair = null_factorize(g);
                                    const auto expected = expected_null_factors(p);
                                    const double scale = std::max(1.0, max_abs(g.matrix()));
                                    t.record(max_abs_diff(pair.e_part, expected.e_part) / scale);
                                    t.record(max_abs_diff(pair.ebar_part, expected.ebar_part) / scale);
                                    t.record(max_abs_diff(reconstruct(pair), g.matrix()) / scale);
                                }
                            }
                        }));
    return out;
}

inline std::vector<CheckReport> verify_quantum(const VerifyOptions& opt = {}) {
    using detail::check;
    std::vector<CheckReport> out;
    out.push_back(check("quantum.interference", "linearized amplitudes reproduce P for 1000 random inputs",
                        "P = P1 + P2 + 2 sqrt(P1 P2) lambda", opt.strict_tol, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 60);
                            for (int k = 0; k < 1000; ++k) {
                                const InterferenceInput in{s.uniform(1e-6, 1.0), s.uniform(1e-6, 1.0),
                                                           s.uniform(-3.0, 3.0)};
                                const auto lin = linearize(in);
                                t.require((lin.regime == Regime::complex) == (std::abs(in.lambda) <= 1.0));
                                t.record(std::abs(lin.reconstructed - interfere(in)));
                            }
                        }));
    out.push_back(check("quantum.boundary", "both regimes agree at lambda = +-1", "cos 0 = cosh 0 = 1",
                        opt.strict_tol, [&](detail::Tally& t) {
                            for (double lambda : {-1.0, 1.0}) {
                                const InterferenceInput in{0.3, 0.6, lambda};
                                const auto c = linearize(in, Regime::complex);
                                const auto h = linearize(in, Regime::hyperbolic);
                                t.record(std::abs(c.reconstructed - h.reconstructed));
                                t.record(std::abs(c.reconstructed - interfere(in)));
                                t.record(std::abs(h.theta));
                                t.record(lambda > 0 ? std::abs(c.theta) : std::abs(c.theta - std::numbers::pi));
                            }
                        }));
    out.push_back(check("quantum.mass_reduction", "mass operator of real momenta is the Minkowski form",
                        "p pbar = p0^2 - |p|^2 for o = s = u = 0", 0.0, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 61);
                            for (int k = 0; k < 100; ++k) {
                                MomentumHM4<Rational> p;
                                for (auto& c : p.q) c = s.rational();
                                const Rational expected = p.q[0] * p.q[0] - p.q[1] * p.q[1] - p.q[2] * p.q[2] -
                                                          p.q[3] * p.q[3];
                                t.record(detail::to_double(max_abs_diff(mass_qform(p), HScalar<Rational>(expected))));
                                t.require(hermiticity_check(p, 0.0));
                            }
                        }));
    out.push_back(check("quantum.hermiticity", "real and Lorentz-rotated momenta pass, q0 u0 != 0 fails",
                        "p pbar real", opt.tol, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 62);
                            for (int k = 0; k < 100; ++k) {
                                MomentumHM4<double> p;
                                for (auto& c : p.q) c = s.uniform(-2, 2);
                                const auto g = Rotor::from_params(detail::random_rotor_params(SpaceKind::M4, s, 1.0));
                                const auto rotated = act(g, p);
                                t.require(hermiticity_check(p, opt.tol));
                                t.require(hermiticity_check(rotated, opt.tol * std::max(1.0, max_abs(g.matrix()))));
                                t.record(std::abs(mass_qform(rotated).x - mass_qform(p).x) /
                                         std::max(1.0, max_abs(g.matrix()) * max_abs(g.matrix())));
                                MomentumHM4<double> bad;
                                bad.q[0] = s.uniform(0.5, 2);
                                bad.u[0] = s.uniform(0.5, 2);
                                t.require(!hermiticity_check(bad, opt.tol));
                            }
                        }));
    out.push_back(check("quantum.stabilizer", "rotors on the R(6,6) fiber keep m and the fiber quadratic form",
                        "p = (m,0) fixed; fiber qform invariant", opt.tol, [&](detail::Tally& t) {
                            detail::Sampler s(opt.seed + 63);
                            for (SpaceKind kind : {SpaceKind::E6, SpaceKind::R66}) {
                                for (int k = 0; k < 50; ++k) {
                                    MomentumHM4<double> p;
                                    p.q[0] = 1.0;
                                    for (std::size_t i = 1; i < 4; ++i) {
                                        p.q[i] = s.uniform(-1, 1);
                                        p.o[i] = s.uniform(-1, 1);
                                        p.s[i] = s.uniform(-1, 1);
                                        p.u[i] = s.uniform(-1, 1);
                                    }
                                    const auto g = Rotor::from_params(detail::random_rotor_params(kind, s, 1.0));
                                    t.require(stabilizer_check(g, p, opt.tol * std::max(1.0, max_abs(g.matrix()))));
                                }
                            }
                        }));
    return out;
}

inline std::optional<std::vector<CheckReport>> run_suite(const std::string& name, const VerifyOptions& opt = {}) {
    static const std::map<std::string, std::function<std::vector<CheckReport>(const VerifyOptions&)>> suites{
        {"tables", verify_tables},       {"dims", verify_dims},     {"commutators", verify_commutators},
        {"involutions", verify_involutions}, {"sphere", verify_sphere}, {"wedge", verify_wedge},
        {"rotations", verify_rotations}, {"quantum", verify_quantum}};
    std::vector<CheckReport> out;
    if (name == "all") {
        for (const auto& [key, fn] : suites) {
            auto part = fn(opt);
            out.insert(out.end(), part.begin(), part.end());
        }
    } else {
        const auto it = suites.find(name);
        if (it == suites.end()) return std::nullopt;
        out = it->second(opt);
    }
    sort_reports(out);
    return out;
}

} // namespace hyperclifford
