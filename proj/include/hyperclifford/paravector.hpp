#pragma once

// Paravector spaces (scalar ⊕ vector) over the named representations, with the
// quadratic form x x̄, the dot and wedge products and quasi-sphere membership.

#include <algorithm>
#include <array>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperclifford/clifford.hpp"

namespace hyperclifford {

enum class SpaceKind { M4, E6, R66, H1, HM4 };

inline std::string_view to_string(SpaceKind kind) {
    switch (kind) {
    case SpaceKind::M4: return "M4";
    case SpaceKind::E6: return "E6";
    case SpaceKind::R66: return "R66";
    case SpaceKind::H1: return "H1";
    case SpaceKind::HM4: return "HM4";
    }
    return "?";
}

inline std::optional<SpaceKind> parse_space(std::string_view text) {
    for (SpaceKind k : {SpaceKind::M4, SpaceKind::E6, SpaceKind::R66, SpaceKind::H1, SpaceKind::HM4}) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

template <Coefficient T>
class ParavectorSpace {
public:
    ParavectorSpace(SpaceKind kind, RepPtr<T> rep, std::vector<HMatrix<T>> basis_matrices, std::vector<int> metric,
                    bool hypercomplex_coords)
        : kind_(kind), rep_(std::move(rep)), basis_matrices_(std::move(basis_matrices)), metric_(std::move(metric)),
          hypercomplex_(hypercomplex_coords) {
        for (const auto& m : basis_matrices_) basis_.push_back(hyperclifford::decompose(m, rep_));
        const std::vector<HScalar<T>> units =
            hypercomplex_ ? std::vector<HScalar<T>>{HScalar<T>::one(), HScalar<T>::unit_i(), HScalar<T>::unit_j(),
                                                    HScalar<T>::unit_ij()}
                          : std::vector<HScalar<T>>{HScalar<T>::one()};
        for (std::size_t a = 0; a < basis_matrices_.size(); ++a) {
            for (const auto& u : units) {
                HMatrix<T> m = u * basis_matrices_[a];
                const T norm = real_pairing(m, m);
                coordinate_basis_.push_back({a, u, std::move(m), norm});
            }
        }
        for (std::size_t a = 0; a < coordinate_basis_.size(); ++a)
            for (std::size_t b = a + 1; b < coordinate_basis_.size(); ++b)
                if (real_pairing(coordinate_basis_[a].matrix, coordinate_basis_[b].matrix) != 0)
                    throw NonOrthogonalBasis("paravector basis is not trace-orthogonal");
        validate_metric();
    }

    SpaceKind kind() const { return kind_; }
    std::string_view name() const { return to_string(kind_); }
    const RepPtr<T>& rep() const { return rep_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<Multivector<T>>& basis() const { return basis_; }
    const std::vector<HMatrix<T>>& basis_matrices() const { return basis_matrices_; }
    const std::vector<int>& metric() const { return metric_; }
    /// HM4 carries hyperbolic-complex coordinates; every other space is real.
    bool hypercomplex_coords() const { return hypercomplex_; }

    struct CoordinateElement {
        std::size_t index;
        HScalar<T> unit;
        HMatrix<T> matrix;
        T norm_sq;
    };
    const std::vector<CoordinateElement>& coordinate_basis() const { return coordinate_basis_; }

private:
    void validate_metric() {
        const std::size_t n = basis_.size();
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                const auto& x = basis_matrices_[a];
                const auto& y = basis_matrices_[b];
                const HMatrix<T> sym = x * matrix(involution(basis_[b], Involution::bar)) +
                                       y * matrix(involution(basis_[a], Involution::bar));
                // H1 and R66 pair e_a with a partner through an ij part; g_ab is the real part
                const auto z = as_scalar_multiple(sym);
                if (!z || !z->in_ij_subring() || z->x != T(2 * (a == b ? metric_[a] : 0))) {
                    throw NonOrthogonalBasis("paravector basis does not reproduce the declared metric");
                }
            }
        }
    }

    SpaceKind kind_;
    RepPtr<T> rep_;
    std::vector<HMatrix<T>> basis_matrices_;
    std::vector<Multivector<T>> basis_;
    std::vector<int> metric_;
    bool hypercomplex_;
    std::vector<CoordinateElement> coordinate_basis_;
};

template <Coefficient T>
using SpacePtr = std::shared_ptr<const ParavectorSpace<T>>;

namespace detail {

template <Coefficient T>
SpacePtr<T> build_space(SpaceKind kind) {
    using S = HScalar<T>;
    using M = HMatrix<T>;
    const S i = S::unit_i();
    const S j = S::unit_j();
    std::vector<M> basis;
    switch (kind) {
    case SpaceKind::M4:
    case SpaceKind::HM4: {
        // (1, jσ_1, jσ_2, jσ_3)
        basis.push_back(M::identity(2));
        for (int k = 1; k <= 3; ++k) basis.push_back(j * pauli2<T>(k));
        const RepName host = kind == SpaceKind::M4 ? RepName::r30 : RepName::c30bar;
        return std::make_shared<const ParavectorSpace<T>>(kind, rep<T>(host), std::move(basis),
                                                          std::vector<int>{1, -1, -1, -1}, kind == SpaceKind::HM4);
    }
    case SpaceKind::E6:
        // (1, iσ_01, …, iσ_05)
        basis.push_back(M::identity(4));
        for (int k = 1; k <= 5; ++k) basis.push_back(i * sigma_ab<T>(0, k));
        return std::make_shared<const ParavectorSpace<T>>(kind, rep<T>(RepName::r05), std::move(basis),
                                                          std::vector<int>(6, 1), false);
    case SpaceKind::R66: {
        // (1, iσ_0i, ij, −jσ_0i)
        basis.push_back(M::identity(4));
        for (int k = 1; k <= 5; ++k) basis.push_back(i * sigma_ab<T>(0, k));
        basis.push_back(M::scalar(4, S::unit_ij()));
        for (int k = 1; k <= 5; ++k) basis.push_back(-(j * sigma_ab<T>(0, k)));
        std::vector<int> metric(12, 1);
        std::fill(metric.begin() + 6, metric.end(), -1);
        return std::make_shared<const ParavectorSpace<T>>(kind, rep<T>(RepName::h05bar), std::move(basis),
                                                          std::move(metric), false);
    }
    case SpaceKind::H1:
        // (1, i, j, ij) as 1×1 matrices
        for (const S& u : {S::one(), i, j, S::unit_ij()}) basis.push_back(M{{u}});
        return std::make_shared<const ParavectorSpace<T>>(kind, rep<T>(RepName::hbar), std::move(basis),
                                                          std::vector<int>{1, 1, -1, -1}, false);
    }
    throw SpaceMismatch("unknown paravector space");
}

template <Coefficient T, SpaceKind Kind>
const SpacePtr<T>& cached_space() {
    static const SpacePtr<T> instance = build_space<T>(Kind);
    return instance;
}

} // namespace detail

template <Coefficient T>
const SpacePtr<T>& space(SpaceKind kind) {
    switch (kind) {
    case SpaceKind::M4: return detail::cached_space<T, SpaceKind::M4>();
    case SpaceKind::E6: return detail::cached_space<T, SpaceKind::E6>();
    case SpaceKind::R66: return detail::cached_space<T, SpaceKind::R66>();
    case SpaceKind::H1: return detail::cached_space<T, SpaceKind::H1>();
    case SpaceKind::HM4: return detail::cached_space<T, SpaceKind::HM4>();
    }
    throw SpaceMismatch("unknown paravector space");
}

template <Coefficient T>
class Paravector {
public:
    Paravector(SpacePtr<T> space, std::vector<HScalar<T>> coords) : space_(std::move(space)), coords_(std::move(coords)) {
        if (coords_.size() != space_->dimension()) {
            throw DimensionMismatch(std::string(space_->name()) + " paravectors have " +
                                    std::to_string(space_->dimension()) + " coordinates");
        }
        if (!space_->hypercomplex_coords()) {
            for (const auto& c : coords_)
                if (!c.is_real()) throw DomainError(std::string(space_->name()) + " coordinates must be real");
        }
    }

    static Paravector real(SpacePtr<T> space, const std::vector<T>& coords) {
        std::vector<HScalar<T>> h(coords.begin(), coords.end());
        return Paravector(std::move(space), std::move(h));
    }

    const ParavectorSpace<T>& space() const { return *space_; }
    const SpacePtr<T>& space_ptr() const { return space_; }
    const std::vector<HScalar<T>>& coords() const { return coords_; }
    const HScalar<T>& operator[](std::size_t a) const { return coords_.at(a); }

    std::vector<T> real_coords() const {
        std::vector<T> out;
        for (const auto& c : coords_) {
            if (!c.is_real()) throw DomainError("paravector has non-real coordinates");
            out.push_back(c.x);
        }
        return out;
    }

    void check_same(const Paravector& o) const {
        if (space_->kind() != o.space_->kind()) throw SpaceMismatch("paravectors belong to different spaces");
    }

private:
    SpacePtr<T> space_;
    std::vector<HScalar<T>> coords_;
};

template <Coefficient T>
HMatrix<T> matrix(const Paravector<T>& x) {
    const auto& sp = x.space();
    HMatrix<T> out(sp.rep()->matrix_size());
    for (std::size_t a = 0; a < sp.dimension(); ++a) out += x[a] * sp.basis_matrices()[a];
    return out;
}

/// x = Σ x_a e_a as an algebra element.
template <Coefficient T>
Multivector<T> element(const Paravector<T>& x) {
    return decompose(matrix(x), x.space().rep());
}

template <Coefficient T>
struct ParavectorProjection {
    Paravector<T> value;
    T residual;
};

/// Reads paravector coordinates off a matrix; the residual measures the part outside the span.
template <Coefficient T>
ParavectorProjection<T> project(const HMatrix<T>& m, const SpacePtr<T>& space) {
    std::vector<HScalar<T>> coords(space->dimension());
    for (const auto& el : space->coordinate_basis()) {
        coords[el.index] += el.unit * T(real_pairing(m, el.matrix) / el.norm_sq);
    }
    Paravector<T> value(space, std::move(coords));
    const T residual = max_abs_diff(matrix(value), m);
    return {std::move(value), residual};
}

namespace detail {

template <Coefficient T>
HScalar<T> scalar_part(const HMatrix<T>& m) {
    return trace(m) / T(static_cast<int>(m.size()));
}

} // namespace detail

/// x x̄ as a full algebra element; a pure scalar for every space except general HM4 momenta.
template <Coefficient T>
Multivector<T> qform_element(const Paravector<T>& x) {
    const auto e = element(x);
    return gp(e, involution(e, Involution::bar));
}

/// The scalar (identity) part of x x̄.
template <Coefficient T>
HScalar<T> qform(const Paravector<T>& x) {
    return detail::scalar_part(matrix(qform_element(x)));
}

/// Largest entry of x x̄ minus its scalar part.
template <Coefficient T>
T qform_non_scalar_residual(const Paravector<T>& x) {
    const HMatrix<T> m = matrix(qform_element(x));
    return max_abs_diff(m, HMatrix<T>::scalar(m.size(), detail::scalar_part(m)));
}

/// ½(x ȳ + y x̄), scalar part.
template <Coefficient T>
HScalar<T> dot(const Paravector<T>& x, const Paravector<T>& y) {
    x.check_same(y);
    const auto ex = element(x);
    const auto ey = element(y);
    const auto sym = gp(ex, involution(ey, Involution::bar)) + gp(ey, involution(ex, Involution::bar));
    return detail::scalar_part(matrix(sym)) / T(2);
}

/// Alternating sum over all argument orders of a₁ ā₂ a₃ ā₄ …, divided by k!.
template <Coefficient T>
Multivector<T> wedge(std::span<const Paravector<T>> args) {
    if (args.empty()) throw DimensionMismatch("wedge needs at least one paravector");
    for (const auto& a : args) args.front().check_same(a);
    std::vector<Multivector<T>> plain;
    std::vector<Multivector<T>> barred;
    for (const auto& a : args) {
        plain.push_back(element(a));
        barred.push_back(involution(plain.back(), Involution::bar));
    }
    std::vector<std::size_t> order(args.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    const auto& rp = args.front().space().rep();
    Multivector<T> sum(rp);
    int count = 0;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < order.size(); ++a)
            for (std::size_t b = a + 1; b < order.size(); ++b)
                if (order[a] > order[b]) ++inversions;
        HMatrix<T> term = HMatrix<T>::identity(rp->matrix_size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            term = term * matrix(k % 2 == 0 ? plain[order[k]] : barred[order[k]]);
        }
        if (inversions % 2 == 0) {
            sum += decompose(term, rp);
        } else {
            sum -= decompose(term, rp);
        }
        ++count;
    } while (std::next_permutation(order.begin(), order.end()));
    return sum / T(count);
}

template <Coefficient T>
Multivector<T> wedge2(const Paravector<T>& x, const Paravector<T>& y) {
    const std::array<Paravector<T>, 2> args{x, y};
    return wedge<T>(args);
}

template <Coefficient T>
Multivector<T> wedge3(const Paravector<T>& x, const Paravector<T>& y, const Paravector<T>& v) {
    const std::array<Paravector<T>, 3> args{x, y, v};
    return wedge<T>(args);
}

template <Coefficient T>
Multivector<T> wedge4(const Paravector<T>& x, const Paravector<T>& y, const Paravector<T>& v,
                      const Paravector<T>& w) {
    const std::array<Paravector<T>, 4> args{x, y, v, w};
    return wedge<T>(args);
}

/// True iff x x̄ equals the real number r² within tol in every component.
template <Coefficient T>
bool quasi_sphere_contains(const Paravector<T>& x, double r, double tol) {
    if (r < 0) throw DomainError("quasi-sphere radius must be non-negative");
    if (detail::to_double(qform_non_scalar_residual(x)) > tol) return false;
    const HScalar<double> q = to_float(qform(x));
    return max_abs_diff(q, HScalar<double>(r * r)) <= tol;
}

/// Real 4-vectors q, o, s, u combined into p = q + io + js + iju.
template <Coefficient T>
struct MomentumHM4 {
    std::array<T, 4> q{};
    std::array<T, 4> o{};
    std::array<T, 4> s{};
    std::array<T, 4> u{};
};

template <Coefficient T>
Paravector<T> embed_momentum(const MomentumHM4<T>& p) {
    std::vector<HScalar<T>> coords;
    for (std::size_t a = 0; a < 4; ++a) coords.emplace_back(p.q[a], p.o[a], p.s[a], p.u[a]);
    return Paravector<T>(space<T>(SpaceKind::HM4), std::move(coords));
}

} // namespace hyperclifford
