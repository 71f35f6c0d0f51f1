#pragma once

// Rotors g = exp(−iΦ/2 + jΞ/2) acting by x ↦ g x ĝ⁻¹, generator sets and their
// commutation relations, the null-basis factorization, and the S⁵ / R^{6,6}
// sphere parametrizations.

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "hyperclifford/paravector.hpp"
#include "hyperclifford/report.hpp"

namespace hyperclifford {

/// Antisymmetric 6×6 parameter array; writes go to both (a,b) and (b,a).
class Antisym6 {
public:
    Antisym6() = default;

    static Antisym6 from_matrix(const std::array<std::array<double, 6>, 6>& m) {
        Antisym6 out;
        for (int a = 0; a < 6; ++a) {
            for (int b = 0; b < 6; ++b) {
                if (m[a][b] != -m[b][a]) throw DomainError("parameter matrix is not antisymmetric");
            }
        }
        out.m_ = m;
        return out;
    }

    void set(int a, int b, double value) {
        check(a, b);
        if (a == b) throw IndexOutOfRange("antisymmetric parameters have no diagonal");
        m_[a][b] = value;
        m_[b][a] = -value;
    }

    double operator()(int a, int b) const {
        check(a, b);
        return m_[a][b];
    }

    bool is_zero() const {
        for (const auto& row : m_)
            for (double v : row)
                if (v != 0.0) return false;
        return true;
    }

    const std::array<std::array<double, 6>, 6>& matrix() const { return m_; }

private:
    static void check(int a, int b) {
        if (a < 0 || a > 5 || b < 0 || b > 5) throw IndexOutOfRange("plane indices must be in 0..5");
    }
    std::array<std::array<double, 6>, 6> m_{};
};

/// Angles φ (rotations) and rapidities ξ (hyperbolic part) for one of the rotor spaces.
struct RotorParams {
    SpaceKind space = SpaceKind::H1;
    std::vector<double> phi; ///< H1: 1 entry, M4: 3 entries
    std::vector<double> xi;
    Antisym6 phi_ab; ///< E6, R66
    Antisym6 xi_ab;  ///< R66 only

    static RotorParams h1(double phi, double xi) { return {SpaceKind::H1, {phi}, {xi}, {}, {}}; }
    static RotorParams m4(const std::array<double, 3>& phi, const std::array<double, 3>& xi) {
        return {SpaceKind::M4, {phi.begin(), phi.end()}, {xi.begin(), xi.end()}, {}, {}};
    }
    static RotorParams e6(const Antisym6& phi) { return {SpaceKind::E6, {}, {}, phi, {}}; }
    static RotorParams r66(const Antisym6& phi, const Antisym6& xi) { return {SpaceKind::R66, {}, {}, phi, xi}; }

    static RotorParams identity(SpaceKind kind) {
        switch (kind) {
        case SpaceKind::H1: return h1(0, 0);
        case SpaceKind::M4:
        case SpaceKind::HM4: return m4({}, {});
        case SpaceKind::E6: return e6({});
        case SpaceKind::R66: return r66({}, {});
        }
        throw SpaceMismatch("unknown space");
    }

    void validate() const {
        switch (space) {
        case SpaceKind::H1:
            if (phi.size() != 1 || xi.size() != 1) throw DimensionMismatch("H1 rotors take one φ and one ξ");
            break;
        case SpaceKind::M4:
            if (phi.size() != 3 || xi.size() != 3) throw DimensionMismatch("M4 rotors take three φ and three ξ");
            break;
        case SpaceKind::E6:
            if (!xi_ab.is_zero()) throw DomainError("E6 rotors have no hyperbolic parameters");
            break;
        case SpaceKind::R66: break;
        case SpaceKind::HM4: throw SpaceMismatch("HM4 is acted on by M4 rotors");
        }
    }
};

/// Representation the rotor of a space lives in.
inline RepName rotor_rep(SpaceKind kind) {
    switch (kind) {
    case SpaceKind::H1: return RepName::hbar;
    case SpaceKind::M4:
    case SpaceKind::HM4: return RepName::r30;
    case SpaceKind::E6: return RepName::r05;
    case SpaceKind::R66: return RepName::h05bar;
    }
    throw SpaceMismatch("unknown space");
}

namespace detail {

/// Σ φ_k σ_k (or Σ_{a<b} φ_ab σ_ab, which equals ½ Σ_{a,b} φ_ab σ_ab).
inline HMatrix<double> hermitian_part(const RotorParams& p, bool hyperbolic) {
    const auto& v = hyperbolic ? p.xi : p.phi;
    const auto& ab = hyperbolic ? p.xi_ab : p.phi_ab;
    switch (p.space) {
    case SpaceKind::H1: return HMatrix<double>{{HScalar<double>(v.at(0))}};
    case SpaceKind::M4:
    case SpaceKind::HM4: {
        HMatrix<double> out(2);
        for (int k = 1; k <= 3; ++k) out += v.at(static_cast<std::size_t>(k - 1)) * pauli2<double>(k);
        return out;
    }
    case SpaceKind::E6:
    case SpaceKind::R66: {
        const auto& table = PauliTable<double>::instance();
        HMatrix<double> out(4);
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                if (ab(a, b) != 0.0) out += ab(a, b) * table.ab(a, b);
        return out;
    }
    }
    throw SpaceMismatch("unknown space");
}

} // namespace detail

/// X = −iΦ/2 + jΞ/2 for the given parameters.
inline HMatrix<double> generator_matrix(const RotorParams& p) {
    p.validate();
    const HMatrix<double> phi = detail::hermitian_part(p, false);
    const HMatrix<double> xi = detail::hermitian_part(p, true);
    return HScalar<double>(0.0, -0.5, 0.0, 0.0) * phi + HScalar<double>(0.0, 0.0, 0.5, 0.0) * xi;
}

struct ExpOptions {
    double series_tol = 1e-14;
    double halving_threshold = 0.5;
    double max_norm = 1e4;
    int max_terms = 80;
};

/// exp(X). Closed forms when X² is a real multiple of the identity, scaling and squaring otherwise.
inline HMatrix<double> matrix_exp(const HMatrix<double>& x, const ExpOptions& opt = {}) {
    const std::size_t n = x.size();
    if (n == 1) return HMatrix<double>{{exp_scalar(x(0, 0))}};
    const HMatrix<double> id = HMatrix<double>::identity(n);
    const HMatrix<double> x2 = x * x;
    const double scale = std::max(1.0, max_abs(x2));
    if (const auto s = as_scalar_multiple(x2, 1e-15 * scale);
        s && std::abs(s->y) <= 1e-15 * scale && std::abs(s->v) <= 1e-15 * scale && std::abs(s->w) <= 1e-15 * scale) {
        const double t = s->x;
        if (t < 0) {
            const double theta = std::sqrt(-t);
            return std::cos(theta) * id + (std::sin(theta) / theta) * x;
        }
        if (t > 0) {
            const double theta = std::sqrt(t);
            if (!std::isfinite(std::cosh(theta))) throw DomainError("matrix exponential overflow");
            return std::cosh(theta) * id + (std::sinh(theta) / theta) * x;
        }
        return id + x;
    }
    const double norm = static_cast<double>(n) * max_abs(x);
    if (!(norm <= opt.max_norm)) throw SeriesNonConvergence("exponent norm exceeds the configured bound");
    int halvings = 0;
    double reduced = norm;
    while (reduced > opt.halving_threshold) {
        reduced /= 2;
        ++halvings;
    }
    const HMatrix<double> y = x / std::ldexp(1.0, halvings);
    HMatrix<double> sum = id;
    HMatrix<double> term = id;
    bool converged = false;
    for (int k = 1; k <= opt.max_terms; ++k) {
        term = term * y / static_cast<double>(k);
        sum += term;
        if (max_abs(term) <= opt.series_tol * std::max(1.0, max_abs(sum))) {
            converged = true;
            break;
        }
    }
    if (!converged) throw SeriesNonConvergence("exponential series did not converge");
    for (int k = 0; k < halvings; ++k) sum = sum * sum;
    return sum;
}

/// Spin group element with cached ĝ⁻¹ and g†. Construction certifies g ḡ = 1 and ĝ⁻¹ = g†.
class Rotor {
public:
    static constexpr double default_tol = 1e-12;

    static Rotor from_params(const RotorParams& p, double tol = default_tol) {
        return from_matrix(matrix_exp(generator_matrix(p)), hyperclifford::rep<double>(rotor_rep(p.space)), tol);
    }

    /// Tolerances scale with max(1, |g|²) so large hyperbolic rotors are judged by relative error.
    static Rotor from_matrix(HMatrix<double> g, RepPtr<double> rp, double tol = default_tol) {
        Rotor out;
        out.rep_ = std::move(rp);
        out.element_ = decompose(g, out.rep_);
        out.matrix_ = std::move(g);
        const Multivector<double> hat = involution(out.element_, Involution::hat);
        out.hat_inverse_ = inverse(hyperclifford::matrix(hat));
        out.dagger_ = hyperclifford::matrix(involution(out.element_, Involution::dagger));
        const HMatrix<double> gbar = hyperclifford::matrix(involution(out.element_, Involution::bar));
        out.spin_residual_ =
            max_abs_diff(out.matrix_ * gbar, HMatrix<double>::identity(out.matrix_.size()));
        out.hat_dagger_residual_ = max_abs_diff(out.hat_inverse_, out.dagger_);
        const double scale = std::max(1.0, max_abs(out.matrix_) * max_abs(out.matrix_));
        if (out.spin_residual_ > tol * scale) throw NotASpinElement("g ḡ differs from 1");
        if (out.hat_dagger_residual_ > tol * scale) throw NotASpinElement("ĝ⁻¹ differs from g†");
        return out;
    }

    static Rotor identity(SpaceKind kind) { return from_params(RotorParams::identity(kind)); }

    const RepPtr<double>& rep() const { return rep_; }
    const Multivector<double>& element() const { return element_; }
    const HMatrix<double>& matrix() const { return matrix_; }
    const HMatrix<double>& hat_inverse() const { return hat_inverse_; }
    const HMatrix<double>& dagger() const { return dagger_; }
    double spin_residual() const { return spin_residual_; }
    double hat_dagger_residual() const { return hat_dagger_residual_; }

    /// (g h) acts as g after h.
    friend Rotor operator*(const Rotor& g, const Rotor& h) {
        g.element_.check_same(h.element_);
        return from_matrix(g.matrix_ * h.matrix_, g.rep_, std::numeric_limits<double>::infinity());
    }

private:
    Rotor() : element_(hyperclifford::rep<double>(RepName::r01)) {}

    RepPtr<double> rep_;
    Multivector<double> element_;
    HMatrix<double> matrix_;
    HMatrix<double> hat_inverse_;
    HMatrix<double> dagger_;
    double spin_residual_ = 0.0;
    double hat_dagger_residual_ = 0.0;
};

/// g x ĝ⁻¹ projected back onto the paravector space of x.
inline Paravector<double> act(const Rotor& g, const Paravector<double>& x) {
    const auto& sp = x.space_ptr();
    if (!sp->rep()->contains(*g.rep())) {
        throw RepresentationMismatch(std::string("rotor over ") + std::string(to_string(g.rep()->name())) +
                                     " cannot act on " + std::string(sp->name()));
    }
    const HMatrix<double> y = g.matrix() * matrix(x) * g.hat_inverse();
    auto [value, residual] = project(y, sp);
    if (residual > 1e-9 * std::max(1.0, max_abs(y))) {
        throw ResultOutsideParavectorSpan("rotor action left the paravector space");
    }
    return std::move(value);
}

// ---- Generator sets -------------------------------------------------------------------

struct NamedMatrix {
    std::string label;
    HMatrix<Rational> m;
};

enum class GeneratorFamily { u1h, lorentz, su4, su4h };

inline std::string_view to_string(GeneratorFamily f) {
    switch (f) {
    case GeneratorFamily::u1h: return "u1h";
    case GeneratorFamily::lorentz: return "lorentz";
    case GeneratorFamily::su4: return "su4";
    case GeneratorFamily::su4h: return "su4h";
    }
    return "?";
}

/// J generators and their hyperbolic partners K = ij·J (empty for su4).
struct GeneratorSet {
    GeneratorFamily family;
    std::vector<NamedMatrix> J;
    std::vector<NamedMatrix> K;
};

namespace detail {

inline const HScalar<Rational>& half() {
    static const HScalar<Rational> h(Rational(1, 2));
    return h;
}

inline HMatrix<Rational> su4_j(int a, int b) {
    if (a == b) return HMatrix<Rational>(4);
    return half() * PauliTable<Rational>::instance().ab(a, b);
}

inline std::vector<std::pair<int, int>> planes() {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) out.emplace_back(a, b);
    return out;
}

inline std::string plane_label(const char* name, int a, int b) {
    return std::string(name) + "_" + std::to_string(a) + std::to_string(b);
}

} // namespace detail

inline GeneratorSet generator_set(GeneratorFamily family) {
    using S = HScalar<Rational>;
    using M = HMatrix<Rational>;
    const S ij = S::unit_ij();
    GeneratorSet set{family, {}, {}};
    switch (family) {
    case GeneratorFamily::u1h:
        set.J.push_back({"J", M{{detail::half()}}});
        set.K.push_back({"K", M{{detail::half() * ij}}});
        break;
    case GeneratorFamily::lorentz:
        for (int k = 1; k <= 3; ++k) {
            set.J.push_back({"J_" + std::to_string(k), detail::half() * pauli2<Rational>(k)});
            set.K.push_back({"K_" + std::to_string(k), (detail::half() * ij) * pauli2<Rational>(k)});
        }
        break;
    case GeneratorFamily::su4:
    case GeneratorFamily::su4h:
        for (auto [a, b] : detail::planes()) {
            set.J.push_back({detail::plane_label("J", a, b), detail::su4_j(a, b)});
            if (family == GeneratorFamily::su4h)
                set.K.push_back({detail::plane_label("K", a, b), ij * detail::su4_j(a, b)});
        }
        break;
    }
    return set;
}

namespace detail {

inline int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1 && (k - j + 3) % 3 == 1) ? 1 : -1;
}

inline int delta(int a, int b) { return a == b ? 1 : 0; }

/// i(δ_ac X_bd − δ_ad X_bc − δ_bc X_ad + δ_bd X_ac) for the plane generator family X.
inline HMatrix<Rational> plane_relation_rhs(int a, int b, int c, int d, const std::function<HMatrix<Rational>(int, int)>& x) {
    HMatrix<Rational> out(4);
    if (delta(a, c)) out += x(b, d);
    if (delta(a, d)) out -= x(b, c);
    if (delta(b, c)) out -= x(a, d);
    if (delta(b, d)) out += x(a, c);
    return HScalar<Rational>::unit_i() * out;
}

/// Aggregates an exact relation over many index tuples into one report.
class RelationCheck {
public:
    RelationCheck(std::string id, std::string description, std::string formula)
        : report_{std::move(id), std::move(description), std::move(formula), Status::pass, 0.0, 0.0} {}

    void record(const HMatrix<Rational>& lhs, const HMatrix<Rational>& rhs) {
        ++count_;
        const double err = to_double(max_abs_diff(lhs, rhs));
        if (err > report_.max_error) report_.max_error = err;
    }

    /// A relation that should hold: any mismatch is a failure.
    CheckReport required() {
        report_.status = report_.max_error == 0.0 ? Status::pass : Status::fail;
        return finish();
    }

    /// A printed relation known to disagree with the representation: a mismatch is reported, not failed.
    CheckReport printed_form() {
        report_.status = report_.max_error == 0.0 ? Status::pass : Status::deviation_documented;
        report_.description += " (printed form; not satisfied by this representation)";
        return finish();
    }

private:
    CheckReport finish() {
        report_.elapsed_ms = clock_.elapsed_ms();
        report_.description += " [" + std::to_string(count_) + " cases]";
        return report_;
    }

    CheckReport report_;
    std::size_t count_ = 0;
    Stopwatch clock_;
};

} // namespace detail

/// Commutation relations of a generator family, checked exactly.
inline std::vector<CheckReport> verify_generators(const GeneratorSet& set) {
    using M = HMatrix<Rational>;
    using detail::RelationCheck;
    const HScalar<Rational> i = HScalar<Rational>::unit_i();
    std::vector<CheckReport> out;
    switch (set.family) {
    case GeneratorFamily::u1h: {
        RelationCheck c("commutators.u1h", "U(1,H) generators commute", "[J,K] = 0");
        c.record(commutator(set.J[0].m, set.K[0].m), M(1));
        out.push_back(c.required());
        break;
    }
    case GeneratorFamily::lorentz: {
        RelationCheck jj("commutators.lorentz.JJ", "rotation generators", "[J_i,J_j] = i eps_ijk J_k");
        RelationCheck jk("commutators.lorentz.JK", "mixed generators", "[J_i,K_j] = i eps_ijk K_k");
        RelationCheck kk("commutators.lorentz.KK", "boost generators, computed form", "[K_i,K_j] = -i eps_ijk J_k");
        RelationCheck kk_printed("commutators.lorentz.KK_printed", "boost generators", "[K_i,K_j] = -i eps_ijk K_k");
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                M sum_j(2);
                M sum_k(2);
                for (int c = 0; c < 3; ++c) {
                    const int e = detail::levi_civita(a, b, c);
                    if (e == 0) continue;
                    sum_j += Rational(e) * set.J[c].m;
                    sum_k += Rational(e) * set.K[c].m;
                }
                jj.record(commutator(set.J[a].m, set.J[b].m), i * sum_j);
                jk.record(commutator(set.J[a].m, set.K[b].m), i * sum_k);
                kk.record(commutator(set.K[a].m, set.K[b].m), -(i * sum_j));
                kk_printed.record(commutator(set.K[a].m, set.K[b].m), -(i * sum_k));
            }
        }
        out.push_back(jj.required());
        out.push_back(jk.required());
        out.push_back(kk.required());
        out.push_back(kk_printed.printed_form());
        break;
    }
    case GeneratorFamily::su4:
    case GeneratorFamily::su4h: {
        const auto j_of = [](int a, int b) { return detail::su4_j(a, b); };
        const auto k_of = [](int a, int b) { return HScalar<Rational>::unit_ij() * detail::su4_j(a, b); };
        const bool hyperbolic = set.family == GeneratorFamily::su4h;
        RelationCheck jj(hyperbolic ? "commutators.su4h.JJ" : "commutators.su4.JJ", "SU(4) generators, all index pairs",
                         "[J_ab,J_cd] = i(d_ac J_bd - d_ad J_bc - d_bc J_ad + d_bd J_ac)");
        RelationCheck jk("commutators.su4h.JK", "hyperbolic extension, mixed",
                         "[J_ab,K_cd] = i(d_ac K_bd - d_ad K_bc - d_bc K_ad + d_bd K_ac)");
        RelationCheck kk("commutators.su4h.KK", "hyperbolic extension, computed form",
                         "[K_ab,K_cd] = -i(d_ac J_bd - d_ad J_bc - d_bc J_ad + d_bd J_ac)");
        RelationCheck kk_printed("commutators.su4h.KK_printed", "hyperbolic extension",
                                 "[K_ab,K_cd] = -i(d_ac K_bd - d_ad K_bc - d_bc K_ad + d_bd K_ac)");
        for (int a = 0; a < 6; ++a) {
            for (int b = 0; b < 6; ++b) {
                if (a == b) continue;
                const M jab = j_of(a, b);
                const M kab = k_of(a, b);
                for (int c = 0; c < 6; ++c) {
                    for (int d = 0; d < 6; ++d) {
                        if (c == d) continue;
                        const M rhs_j = detail::plane_relation_rhs(a, b, c, d, j_of);
                        jj.record(commutator(jab, j_of(c, d)), rhs_j);
                        if (!hyperbolic) continue;
                        const M kcd = k_of(c, d);
                        const M rhs_k = detail::plane_relation_rhs(a, b, c, d, k_of);
                        jk.record(commutator(jab, kcd), rhs_k);
                        kk.record(commutator(kab, kcd), -rhs_j);
                        kk_printed.record(commutator(kab, kcd), -rhs_k);
                    }
                }
            }
        }
        out.push_back(jj.required());
        if (hyperbolic) {
            out.push_back(jk.required());
            out.push_back(kk.required());
            out.push_back(kk_printed.printed_form());
        }
        break;
    }
    }
    return out;
}

/// A = ε₊J and B = ε₋J with the null idempotents ε± = (1 ± j)/2.
struct ABSplit {
    std::vector<NamedMatrix> A;
    std::vector<NamedMatrix> B;
};

inline ABSplit ab_split(const GeneratorSet& set) {
    if (set.K.size() != set.J.size()) throw DimensionMismatch("A/B split needs K = ij J for every J");
    const HScalar<Rational> eps_plus(Rational(1, 2), Rational(0), Rational(1, 2), Rational(0));
    const HScalar<Rational> eps_minus(Rational(1, 2), Rational(0), Rational(-1, 2), Rational(0));
    ABSplit out;
    for (const auto& j : set.J) {
        std::string suffix = j.label.substr(1);
        out.A.push_back({"A" + suffix, eps_plus * j.m});
        out.B.push_back({"B" + suffix, eps_minus * j.m});
    }
    return out;
}

namespace detail {

/// Coefficients c_z with [J_x, J_y] = Σ c_z J_z, read off through the Hermitian trace pairing.
inline std::vector<HScalar<Rational>> structure_constants(const std::vector<NamedMatrix>& j, std::size_t x,
                                                          std::size_t y) {
    const HMatrix<Rational> c = commutator(j[x].m, j[y].m);
    std::vector<HScalar<Rational>> out;
    for (const auto& z : j) {
        const Rational norm = trace(adjoint(z.m) * z.m).x;
        out.push_back(trace(adjoint(z.m) * c) / norm);
    }
    return out;
}

} // namespace detail

/// Checks the split: cross commutators vanish, A + B = J, i(A − B) = K, and both halves
/// carry the structure constants of J. Also reports the literal ½(J ± ijK) form.
inline std::vector<CheckReport> verify_ab_split(const GeneratorSet& set) {
    using M = HMatrix<Rational>;
    using detail::RelationCheck;
    const auto split = ab_split(set);
    const std::string fam(to_string(set.family));
    const std::size_t n = set.J.size();
    const std::size_t dim = set.J.front().m.size();
    const HScalar<Rational> i = HScalar<Rational>::unit_i();
    const HScalar<Rational> ij = HScalar<Rational>::unit_ij();

    RelationCheck cross("ab_split." + fam + ".cross", "A and B commute", "[A_x,B_y] = 0");
    RelationCheck sum("ab_split." + fam + ".sum", "A + B recovers J", "A + B = J");
    RelationCheck diff("ab_split." + fam + ".diff", "i(A - B) recovers K", "i(A - B) = K");
    RelationCheck closure("ab_split." + fam + ".closure", "J structure constants close on J",
                          "[J_x,J_y] = c_xyz J_z");
    RelationCheck a_alg("ab_split." + fam + ".A", "A carries the J structure constants", "[A_x,A_y] = c_xyz A_z");
    RelationCheck b_alg("ab_split." + fam + ".B", "B carries the J structure constants", "[B_x,B_y] = c_xyz B_z");
    RelationCheck literal("ab_split." + fam + ".literal", "literal substitution K = ij J",
                          "A = (J + ij K)/2 nonzero");

    for (std::size_t x = 0; x < n; ++x) {
        sum.record(split.A[x].m + split.B[x].m, set.J[x].m);
        diff.record(i * (split.A[x].m - split.B[x].m), set.K[x].m);
        const M literal_a = detail::half() * (set.J[x].m + ij * set.K[x].m);
        // a degenerate (zero) literal A fails the "nonzero" claim; record J as the missing part
        literal.record(literal_a, literal_a == M(dim) ? set.J[x].m : literal_a);
        for (std::size_t y = 0; y < n; ++y) {
            cross.record(commutator(split.A[x].m, split.B[y].m), M(dim));
            const auto c = detail::structure_constants(set.J, x, y);
            M rj(dim), ra(dim), rb(dim);
            for (std::size_t z = 0; z < n; ++z) {
                if (c[z].is_zero()) continue;
                rj += c[z] * set.J[z].m;
                ra += c[z] * split.A[z].m;
                rb += c[z] * split.B[z].m;
            }
            closure.record(commutator(set.J[x].m, set.J[y].m), rj);
            a_alg.record(commutator(split.A[x].m, split.A[y].m), ra);
            b_alg.record(commutator(split.B[x].m, split.B[y].m), rb);
        }
    }
    return {cross.required(), sum.required(), diff.required(), closure.required(),
            a_alg.required(), b_alg.required(), literal.printed_form()};
}

// ---- Null basis -------------------------------------------------------------------------

/// g in the double-field form (e-part, ē-part).
inline NullMatrixPair<double> null_factorize(const Rotor& g) { return to_null(g.matrix()); }

inline HMatrix<double> reconstruct(const NullMatrixPair<double>& pair) { return from_null(pair); }

/// (exp(−iΦ/2 + Ξ/2), exp(−iΦ/2 − Ξ/2)): the factors j ↦ ±1 produces from g.
inline NullMatrixPair<double> expected_null_factors(const RotorParams& p) {
    const HMatrix<double> phi = detail::hermitian_part(p, false);
    const HMatrix<double> xi = detail::hermitian_part(p, true);
    const HMatrix<double> rot = HScalar<double>(0.0, -0.5, 0.0, 0.0) * phi;
    return {matrix_exp(rot + 0.5 * xi), matrix_exp(rot - 0.5 * xi)};
}

/// (exp(−iΦ/2)exp(Ξ/2), exp(−iΦ/2)exp(−Ξ/2)); equals the expected factors when [Φ, Ξ] = 0.
inline NullMatrixPair<double> null_factors_product_form(const RotorParams& p) {
    const HMatrix<double> phi = detail::hermitian_part(p, false);
    const HMatrix<double> xi = detail::hermitian_part(p, true);
    const HMatrix<double> rot = matrix_exp(HScalar<double>(0.0, -0.5, 0.0, 0.0) * phi);
    return {rot * matrix_exp(0.5 * xi), rot * matrix_exp(-0.5 * xi)};
}

// ---- Sphere parametrizations ------------------------------------------------------------

/// The five plane angles of the S⁵ parametrization.
struct SphereAngles {
    double phi25 = 0;
    double phi02 = 0;
    double phi01 = 0;
    double phi35 = 0;
    double phi34 = 0;
};

/// Rapidities paired with the five planes for the R^{6,6} extension.
struct HyperbolicAngles {
    double xi25 = 0;
    double xi02 = 0;
    double xi01 = 0;
    double xi35 = 0;
    double xi34 = 0;
};

inline std::array<double, 6> sphere_point(double r, const SphereAngles& t) {
    if (r < 0) throw DomainError("sphere radius must be non-negative");
    using std::cos;
    using std::sin;
    return {r * sin(t.phi25) * sin(t.phi02) * cos(t.phi01), r * sin(t.phi25) * sin(t.phi02) * sin(t.phi01),
            r * sin(t.phi25) * cos(t.phi02),                r * cos(t.phi25) * sin(t.phi35) * cos(t.phi34),
            r * cos(t.phi25) * sin(t.phi35) * sin(t.phi34), r * cos(t.phi25) * cos(t.phi35)};
}

namespace detail {

struct PlaneStep {
    int a;
    int b;
    int sign; ///< g = exp(sign · i φ σ_ab / 2)
    double SphereAngles::*phi;
    double HyperbolicAngles::*xi;
};

// g1 … g5 in application order
inline constexpr std::array<PlaneStep, 5> sphere_steps{{
    {2, 5, +1, &SphereAngles::phi25, &HyperbolicAngles::xi25},
    {0, 2, -1, &SphereAngles::phi02, &HyperbolicAngles::xi02},
    {0, 1, +1, &SphereAngles::phi01, &HyperbolicAngles::xi01},
    {3, 5, +1, &SphereAngles::phi35, &HyperbolicAngles::xi35},
    {3, 4, -1, &SphereAngles::phi34, &HyperbolicAngles::xi34},
}};

inline Rotor plane_rotor(SpaceKind kind, const PlaneStep& step, double phi, double xi) {
    // exp(s·iφσ/2) = exp(−i(−sφ)σ/2); the rapidity follows the angle through φ̃ = φ + ij ξ
    Antisym6 p;
    Antisym6 x;
    p.set(step.a, step.b, -step.sign * phi);
    if (kind == SpaceKind::R66) {
        x.set(step.a, step.b, -step.sign * xi);
        return Rotor::from_params(RotorParams::r66(p, x));
    }
    return Rotor::from_params(RotorParams::e6(p));
}

} // namespace detail

/// g = g₅g₄g₃g₂g₁ for the five plane rotations.
inline Rotor sphere_rotor(const SphereAngles& t) {
    Rotor g = Rotor::identity(SpaceKind::E6);
    for (const auto& step : detail::sphere_steps) g = detail::plane_rotor(SpaceKind::E6, step, t.*step.phi, 0.0) * g;
    return g;
}

inline std::array<double, 6> sphere_point_via_rotors(double r, const SphereAngles& t) {
    if (r < 0) throw DomainError("sphere radius must be non-negative");
    const auto x = Paravector<double>::real(space<double>(SpaceKind::E6), {0, 0, 0, 0, 0, r});
    const auto y = act(sphere_rotor(t), x).real_coords();
    std::array<double, 6> out{};
    std::copy(y.begin(), y.end(), out.begin());
    return out;
}

/// The S⁵ template evaluated over φ̃ = φ + ij ξ; real parts fill slots 0..5, ij parts slots 6..11.
inline std::array<double, 12> quasi_sphere_point_r66(double r, const SphereAngles& t, const HyperbolicAngles& h) {
    if (r < 0) throw DomainError("sphere radius must be non-negative");
    const auto c25 = trig_tilde(t.phi25, h.xi25);
    const auto c02 = trig_tilde(t.phi02, h.xi02);
    const auto c01 = trig_tilde(t.phi01, h.xi01);
    const auto c35 = trig_tilde(t.phi35, h.xi35);
    const auto c34 = trig_tilde(t.phi34, h.xi34);
    const std::array<HScalar<double>, 6> x{
        c25.sin * c02.sin * c01.cos, c25.sin * c02.sin * c01.sin, c25.sin * c02.cos,
        c25.cos * c35.sin * c34.cos, c25.cos * c35.sin * c34.sin, c25.cos * c35.cos,
    };
    std::array<double, 12> out{};
    for (std::size_t a = 0; a < 6; ++a) {
        out[a] = r * x[a].x;
        out[a + 6] = r * x[a].w;
    }
    return out;
}

inline Rotor quasi_sphere_rotor(const SphereAngles& t, const HyperbolicAngles& h) {
    Rotor g = Rotor::identity(SpaceKind::R66);
    for (const auto& step : detail::sphere_steps)
        g = detail::plane_rotor(SpaceKind::R66, step, t.*step.phi, h.*step.xi) * g;
    return g;
}

inline std::array<double, 12> quasi_sphere_point_r66_via_rotors(double r, const SphereAngles& t,
                                                                const HyperbolicAngles& h) {
    if (r < 0) throw DomainError("sphere radius must be non-negative");
    std::vector<double> start(12, 0.0);
    start[5] = r;
    const auto x = Paravector<double>::real(space<double>(SpaceKind::R66), start);
    const auto y = act(quasi_sphere_rotor(t, h), x).real_coords();
    std::array<double, 12> out{};
    std::copy(y.begin(), y.end(), out.begin());
    return out;
}

} // namespace hyperclifford
