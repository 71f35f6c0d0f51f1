#pragma once

// Clifford algebras realized as matrices over the hyperbolic-complex ring.
//
// An element is stored as a blade expansion Σ c_B e_B, where B runs over sorted
// generator subsets (bitmasks) and c_B lies in the ring generated by the units that
// were adjoined to the representation (the reals, or {1, j} for the complexified
// algebras). Units that the generators produce themselves, such as ij = e1e2e3 in
// R(3,0) or i = −e1e2e3e4e5 in R(0,5), are blades and inherit their involution signs
// from the grade rules. That single mechanism reproduces all three involution tables.

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperclifford/errors.hpp"
#include "hyperclifford/matrix.hpp"
#include "hyperclifford/pauli.hpp"

namespace hyperclifford {

enum class RepName { r01, r10, r30, r05, c30bar, h05bar, hbar };

inline constexpr std::array<RepName, 7> all_reps{RepName::r01,    RepName::r10,    RepName::r30, RepName::r05,
                                                 RepName::c30bar, RepName::h05bar, RepName::hbar};

inline std::string_view to_string(RepName name) {
    switch (name) {
    case RepName::r01: return "r01";
    case RepName::r10: return "r10";
    case RepName::r30: return "r30";
    case RepName::r05: return "r05";
    case RepName::c30bar: return "c30bar";
    case RepName::h05bar: return "h05bar";
    case RepName::hbar: return "hbar";
    }
    return "?";
}

inline std::optional<RepName> parse_rep(std::string_view text) {
    for (RepName name : all_reps) {
        if (to_string(name) == text) return name;
    }
    return std::nullopt;
}

using Blade = std::uint32_t;

inline int grade(Blade b) { return std::popcount(b); }

/// Sign picked up when the product e_A e_B is reordered into increasing generator order.
inline int reorder_sign(Blade a, Blade b) {
    int swaps = 0;
    for (a >>= 1; a != 0; a >>= 1) swaps += std::popcount(a & b);
    return (swaps & 1) ? -1 : 1;
}

enum class Involution { bar, dagger, hat };

inline constexpr std::array<Involution, 3> all_involutions{Involution::bar, Involution::dagger, Involution::hat};

inline std::string_view to_string(Involution kind) {
    switch (kind) {
    case Involution::bar: return "bar";
    case Involution::dagger: return "dagger";
    case Involution::hat: return "hat";
    }
    return "?";
}

/// Sign of a grade-g blade: hat (−1)^g, dagger (−1)^{g(g−1)/2}, bar (−1)^{g(g+1)/2}.
inline int grade_sign(Involution kind, int g) {
    switch (kind) {
    case Involution::hat: return (g % 2) ? -1 : 1;
    case Involution::dagger: return ((g * (g - 1) / 2) % 2) ? -1 : 1;
    case Involution::bar: return ((g * (g + 1) / 2) % 2) ? -1 : 1;
    }
    return 1;
}

/// Quadratic space signature: the first p generators square to +1 and enter the scalar
/// product with −x², the remaining q square to −1 and enter with +x² (e ē = −e²).
struct Signature {
    int p = 0;
    int q = 0;
    int n() const { return p + q; }
};

template <Coefficient T>
class AlgebraRep {
public:
    struct BasisElement {
        Blade blade;
        HScalar<T> unit;
        HMatrix<T> matrix;
        T norm_sq;
    };

    AlgebraRep(RepName name, Signature signature, std::vector<HMatrix<T>> generators,
               std::vector<HScalar<T>> adjoined_units, std::optional<RepName> real_form = std::nullopt)
        : name_(name), signature_(signature), generators_(std::move(generators)),
          adjoined_(std::move(adjoined_units)), real_form_(real_form) {
        if (static_cast<int>(generators_.size()) != signature_.n() || generators_.empty()) {
            throw DimensionMismatch("generator count does not match the signature");
        }
        dim_ = generators_.front().size();
        validate_generators();
        build_unit_basis();
        build_blades();
        build_basis();
    }

    RepName name() const { return name_; }
    Signature signature() const { return signature_; }
    int n() const { return signature_.n(); }
    std::size_t matrix_size() const { return dim_; }
    Blade blade_count() const { return Blade{1} << n(); }
    Blade pseudoscalar_blade() const { return blade_count() - 1; }

    const std::vector<HMatrix<T>>& generators() const { return generators_; }
    const std::vector<HScalar<T>>& adjoined_units() const { return adjoined_; }
    /// Real basis of the coefficient ring: 1, the adjoined units and their products.
    const std::vector<HScalar<T>>& unit_basis() const { return unit_basis_; }
    const HMatrix<T>& blade_matrix(Blade b) const { return blade_matrices_.at(b); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    std::size_t real_dimension() const { return basis_.size(); }
    /// e_k² for generator k (0-based).
    int generator_square(int k) const { return k < signature_.p ? 1 : -1; }
    /// The uncomplexified algebra this one extends, if any (c30bar → r30, h05bar → r05).
    std::optional<RepName> real_form() const { return real_form_; }

    /// True when elements of `other` embed into this representation (same or real form).
    bool contains(const AlgebraRep& other) const {
        return other.name_ == name_ || (real_form_ && *real_form_ == other.name_);
    }

    bool in_coefficient_ring(const HScalar<T>& z) const {
        HScalar<T> rest = z;
        for (const auto& u : unit_basis_) {
            const T c = component_along(z, u);
            rest -= u * c;
        }
        return rest.is_zero();
    }

private:
    static T component_along(const HScalar<T>& z, const HScalar<T>& unit) {
        // units are ±1, ±i, ±j, ±ij: a single non-zero component of magnitude 1
        return z.x * unit.x + z.y * unit.y + z.v * unit.v + z.w * unit.w;
    }

    void validate_generators() {
        const HMatrix<T> id = HMatrix<T>::identity(dim_);
        for (int k = 0; k < n(); ++k) {
            const auto& e = generators_[static_cast<std::size_t>(k)];
            if (e.size() != dim_) throw DimensionMismatch("generators have different sizes");
            const HMatrix<T> expected = generator_square(k) > 0 ? id : HMatrix<T>(-id);
            if (!(e * e == expected)) {
                throw NonOrthogonalBasis("generator square does not match the signature");
            }
            for (int l = k + 1; l < n(); ++l) {
                const auto& f = generators_[static_cast<std::size_t>(l)];
                if (!(e * f + f * e == HMatrix<T>(dim_))) {
                    throw NonOrthogonalBasis("generators do not anticommute");
                }
            }
        }
    }

    void build_unit_basis() {
        unit_basis_ = {HScalar<T>::one()};
        for (const auto& u : adjoined_) {
            const std::size_t existing = unit_basis_.size();
            for (std::size_t k = 0; k < existing; ++k) unit_basis_.push_back(unit_basis_[k] * u);
        }
    }

    void build_blades() {
        blade_matrices_.resize(blade_count());
        for (Blade b = 0; b < blade_count(); ++b) {
            HMatrix<T> m = HMatrix<T>::identity(dim_);
            for (int k = 0; k < n(); ++k) {
                if (b & (Blade{1} << k)) m = m * generators_[static_cast<std::size_t>(k)];
            }
            blade_matrices_[b] = std::move(m);
        }
    }

    void build_basis() {
        for (Blade b = 0; b < blade_count(); ++b) {
            for (const auto& u : unit_basis_) {
                HMatrix<T> m = u * blade_matrices_[b];
                const T norm = real_pairing(m, m);
                basis_.push_back({b, u, std::move(m), norm});
            }
        }
        for (std::size_t a = 0; a < basis_.size(); ++a) {
            for (std::size_t b = a + 1; b < basis_.size(); ++b) {
                if (real_pairing(basis_[a].matrix, basis_[b].matrix) != 0) {
                    throw NonOrthogonalBasis("basis matrices of " + std::string(to_string(name_)) +
                                             " are not trace-orthogonal");
                }
            }
        }
    }

    RepName name_;
    Signature signature_;
    std::vector<HMatrix<T>> generators_;
    std::vector<HScalar<T>> adjoined_;
    std::optional<RepName> real_form_;
    std::size_t dim_ = 0;
    std::vector<HScalar<T>> unit_basis_;
    std::vector<HMatrix<T>> blade_matrices_;
    std::vector<BasisElement> basis_;
};

template <Coefficient T>
using RepPtr = std::shared_ptr<const AlgebraRep<T>>;

namespace detail {

template <Coefficient T>
RepPtr<T> build_rep(RepName name) {
    using S = HScalar<T>;
    using M = HMatrix<T>;
    const S i = S::unit_i();
    const S j = S::unit_j();
    auto hyperbolic_pauli = [&] {
        std::vector<M> g;
        for (int k = 1; k <= 3; ++k) g.push_back(j * pauli2<T>(k));
        return g;
    };
    auto euclidean5 = [&] {
        std::vector<M> g;
        for (int k = 1; k <= 5; ++k) g.push_back(i * sigma_ab<T>(0, k));
        return g;
    };
    switch (name) {
    case RepName::r01:
        return std::make_shared<const AlgebraRep<T>>(name, Signature{0, 1}, std::vector<M>{M{{i}}},
                                                     std::vector<S>{});
    case RepName::r10:
        return std::make_shared<const AlgebraRep<T>>(name, Signature{1, 0}, std::vector<M>{M{{j}}},
                                                     std::vector<S>{});
    case RepName::hbar:
        return std::make_shared<const AlgebraRep<T>>(name, Signature{0, 1}, std::vector<M>{M{{i}}},
                                                     std::vector<S>{j}, RepName::r01);
    case RepName::r30:
        return std::make_shared<const AlgebraRep<T>>(name, Signature{3, 0}, hyperbolic_pauli(),
                                                     std::vector<S>{});
    case RepName::c30bar:
        return std::make_shared<const AlgebraRep<T>>(name, Signature{3, 0}, hyperbolic_pauli(),
                                                     std::vector<S>{j}, RepName::r30);
    case RepName::r05:
        return std::make_shared<const AlgebraRep<T>>(name, Signature{0, 5}, euclidean5(), std::vector<S>{});
    case RepName::h05bar:
        return std::make_shared<const AlgebraRep<T>>(name, Signature{0, 5}, euclidean5(), std::vector<S>{j},
                                                     RepName::r05);
    }
    throw RepresentationMismatch("unknown representation");
}

template <Coefficient T, RepName Name>
const RepPtr<T>& cached_rep() {
    static const RepPtr<T> instance = build_rep<T>(Name);
    return instance;
}

} // namespace detail

/// Shared, validated representation; built on first use.
template <Coefficient T>
const RepPtr<T>& rep(RepName name) {
    switch (name) {
    case RepName::r01: return detail::cached_rep<T, RepName::r01>();
    case RepName::r10: return detail::cached_rep<T, RepName::r10>();
    case RepName::r30: return detail::cached_rep<T, RepName::r30>();
    case RepName::r05: return detail::cached_rep<T, RepName::r05>();
    case RepName::c30bar: return detail::cached_rep<T, RepName::c30bar>();
    case RepName::h05bar: return detail::cached_rep<T, RepName::h05bar>();
    case RepName::hbar: return detail::cached_rep<T, RepName::hbar>();
    }
    throw RepresentationMismatch("unknown representation");
}

template <Coefficient T>
class Multivector {
public:
    explicit Multivector(RepPtr<T> rep) : rep_(std::move(rep)), coeffs_(rep_->blade_count()) {}

    static Multivector scalar(RepPtr<T> rep, const HScalar<T>& z) { return blade(std::move(rep), 0, z); }

    static Multivector blade(RepPtr<T> rep, Blade b, const HScalar<T>& coeff = HScalar<T>::one()) {
        Multivector out(std::move(rep));
        out.set(b, coeff);
        return out;
    }

    const AlgebraRep<T>& rep() const { return *rep_; }
    const RepPtr<T>& rep_ptr() const { return rep_; }
    const std::vector<HScalar<T>>& coefficients() const { return coeffs_; }

    const HScalar<T>& operator[](Blade b) const { return coeffs_.at(b); }

    void set(Blade b, const HScalar<T>& coeff) {
        if (!rep_->in_coefficient_ring(coeff)) {
            throw RepresentationMismatch("coefficient outside the ring of adjoined units");
        }
        coeffs_.at(b) = coeff;
    }

    Multivector grade_part(int g) const {
        Multivector out(rep_);
        for (Blade b = 0; b < coeffs_.size(); ++b)
            if (grade(b) == g) out.coeffs_[b] = coeffs_[b];
        return out;
    }

    Multivector& operator+=(const Multivector& o) {
        check_same(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    Multivector& operator-=(const Multivector& o) {
        check_same(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    Multivector& operator*=(const T& s) {
        for (auto& c : coeffs_) c *= s;
        return *this;
    }

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator-(Multivector a) { return a *= T(-1); }
    friend Multivector operator*(const T& s, Multivector a) { return a *= s; }
    friend Multivector operator*(Multivector a, const T& s) { return a *= s; }
    friend Multivector operator/(Multivector a, const T& s) {
        for (auto& c : a.coeffs_) c = c / s;
        return a;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        return a.rep_->name() == b.rep_->name() && a.coeffs_ == b.coeffs_;
    }

    void check_same(const Multivector& o) const {
        if (rep_->name() != o.rep_->name()) {
            throw RepresentationMismatch(std::string("multivectors belong to ") + std::string(to_string(rep_->name())) +
                                         " and " + std::string(to_string(o.rep_->name())));
        }
    }

private:
    RepPtr<T> rep_;
    std::vector<HScalar<T>> coeffs_;
};

template <Coefficient T>
HMatrix<T> matrix(const Multivector<T>& u) {
    const auto& rep = u.rep();
    HMatrix<T> out(rep.matrix_size());
    for (Blade b = 0; b < rep.blade_count(); ++b) {
        if (!u[b].is_zero()) out += u[b] * rep.blade_matrix(b);
    }
    return out;
}

template <Coefficient T>
struct Decomposition {
    Multivector<T> value;
    T residual;
};

/// Projects M onto the representation's orthogonal basis; the residual is the largest
/// entrywise deviation between M and the image of the projection.
template <Coefficient T>
Decomposition<T> decompose_with_residual(const HMatrix<T>& m, const RepPtr<T>& rep) {
    if (m.size() != rep->matrix_size()) throw DimensionMismatch("matrix size does not match the representation");
    std::vector<HScalar<T>> coeffs(rep->blade_count());
    for (const auto& element : rep->basis()) {
        const T c = real_pairing(m, element.matrix) / element.norm_sq;
        if (c != 0) coeffs[element.blade] += element.unit * c;
    }
    Multivector<T> out(rep);
    for (Blade b = 0; b < coeffs.size(); ++b) {
        if (!coeffs[b].is_zero()) out.set(b, coeffs[b]);
    }
    const T residual = max_abs_diff(matrix(out), m);
    return {std::move(out), residual};
}

template <Coefficient T>
double span_tolerance(const HMatrix<T>& m) {
    if constexpr (std::same_as<T, double>) {
        return 1e-9 * std::max(1.0, max_abs(m));
    } else {
        return 0.0;
    }
}

/// Throws OutsideSpan when M is not an element of the algebra.
template <Coefficient T>
Multivector<T> decompose(const HMatrix<T>& m, const RepPtr<T>& rep) {
    auto [value, residual] = decompose_with_residual(m, rep);
    if (detail::to_double(residual) > span_tolerance(m)) {
        throw OutsideSpan("matrix is not in the span of " + std::string(to_string(rep->name())));
    }
    return std::move(value);
}

/// Geometric product through the matrix images.
template <Coefficient T>
Multivector<T> gp(const Multivector<T>& u, const Multivector<T>& v) {
    u.check_same(v);
    return decompose(matrix(u) * matrix(v), u.rep_ptr());
}

/// Geometric product on the blade expansion using anticommutation and e_k² = ±1.
template <Coefficient T>
Multivector<T> gp_blades(const Multivector<T>& u, const Multivector<T>& v) {
    u.check_same(v);
    const auto& rep = u.rep();
    std::vector<HScalar<T>> out(rep.blade_count());
    for (Blade a = 0; a < rep.blade_count(); ++a) {
        if (u[a].is_zero()) continue;
        for (Blade b = 0; b < rep.blade_count(); ++b) {
            if (v[b].is_zero()) continue;
            int sign = reorder_sign(a, b);
            const Blade common = a & b;
            for (int k = 0; k < rep.n(); ++k)
                if (common & (Blade{1} << k)) sign *= rep.generator_square(k);
            const HScalar<T> term = u[a] * v[b];
            if (sign > 0) {
                out[a ^ b] += term;
            } else {
                out[a ^ b] -= term;
            }
        }
    }
    Multivector<T> result(u.rep_ptr());
    for (Blade b = 0; b < out.size(); ++b)
        if (!out[b].is_zero()) result.set(b, out[b]);
    return result;
}

/// Adjoined units carry the one-dimensional signs (bar −, dagger +, hat −), which on the
/// coefficient ring is scalar conjugation for bar and hat and the identity for dagger.
template <Coefficient T>
Multivector<T> involution(const Multivector<T>& u, Involution kind) {
    Multivector<T> out(u.rep_ptr());
    for (Blade b = 0; b < u.rep().blade_count(); ++b) {
        if (u[b].is_zero()) continue;
        HScalar<T> c = kind == Involution::dagger ? u[b] : conjugate(u[b]);
        if (grade_sign(kind, grade(b)) < 0) c = -c;
        out.set(b, c);
    }
    return out;
}

template <Coefficient T>
Multivector<T> pseudoscalar(const RepPtr<T>& rep) {
    return Multivector<T>::blade(rep, rep->pseudoscalar_blade());
}

template <Coefficient T>
std::string to_string(const Multivector<T>& u) {
    std::string out;
    for (Blade b = 0; b < u.rep().blade_count(); ++b) {
        if (u[b].is_zero()) continue;
        std::string name;
        for (int k = 0; k < u.rep().n(); ++k)
            if (b & (Blade{1} << k)) name += std::to_string(k + 1);
        std::string coeff = to_string(u[b]);
        if (b != 0) {
            if (coeff == "1") {
                coeff.clear();
            } else if (coeff == "-1") {
                coeff = "-";
            } else {
                coeff = "(" + coeff + ")";
            }
            coeff += "e" + name;
        }
        if (!out.empty()) out += " + ";
        out += coeff;
    }
    return out.empty() ? "0" : out;
}

// ---- Explicit matrix formulas for the involutions ------------------------------------

/// Conjugation on C(2) as the adjugate pattern (a22, −a12; −a21, a11).
template <Coefficient T>
HMatrix<T> porteous_conjugate_2x2(const HMatrix<T>& a) {
    if (a.size() != 2) throw DimensionMismatch("porteous_conjugate_2x2 needs a 2x2 matrix");
    return {{a(1, 1), -a(0, 1)}, {-a(1, 0), a(0, 0)}};
}

/// Reversion on C(4) for R(0,5); entries are permuted and signed but not conjugated.
template <Coefficient T>
HMatrix<T> porteous_dagger_4x4(const HMatrix<T>& a) {
    if (a.size() != 4) throw DimensionMismatch("porteous_dagger_4x4 needs a 4x4 matrix");
    // zero-based (row, col, sign) sources for each output entry
    auto at = [&](int r, int c) { return a(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)); };
    return {{at(2, 2), -at(1, 2), at(4, 2), -at(3, 2)},
            {-at(2, 1), at(1, 1), -at(4, 1), at(3, 1)},
            {at(2, 4), -at(1, 4), at(4, 4), -at(3, 4)},
            {-at(2, 3), at(1, 3), -at(4, 3), at(3, 3)}};
}

/// Graduation on C(4) chosen so that hat∘dagger is conjugate-transposition.
template <Coefficient T>
HMatrix<T> porteous_hat_4x4(const HMatrix<T>& a) {
    if (a.size() != 4) throw DimensionMismatch("porteous_hat_4x4 needs a 4x4 matrix");
    auto at = [&](int r, int c) {
        return conjugate(a(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)));
    };
    return {{at(2, 2), -at(2, 1), at(2, 4), -at(2, 3)},
            {-at(1, 2), at(1, 1), -at(1, 4), at(1, 3)},
            {at(4, 2), -at(4, 1), at(4, 4), -at(4, 3)},
            {-at(3, 2), at(3, 1), -at(3, 4), at(3, 3)}};
}

// ---- Structure queries ------------------------------------------------------------------

struct EnumerationResult {
    std::size_t group_order;   ///< distinct signed monomials reached by closure
    std::size_t real_dimension; ///< rank of their real Gram matrix
};

namespace detail {

inline std::size_t rank(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

/// Closes the generators and adjoined units under multiplication and counts the real
/// dimension of their span through the rank of the real-pairing Gram matrix.
inline EnumerationResult enumerate_algebra(const RepPtr<Rational>& rep) {
    using M = HMatrix<Rational>;
    std::vector<M> seeds = rep->generators();
    for (const auto& u : rep->adjoined_units()) seeds.push_back(M::scalar(rep->matrix_size(), u));

    std::vector<M> elements{M::identity(rep->matrix_size())};
    auto known = [&](const M& m) {
        for (const auto& e : elements)
            if (e == m) return true;
        return false;
    };
    for (std::size_t next = 0; next < elements.size(); ++next) {
        for (const auto& s : seeds) {
            M product = elements[next] * s;
            if (!known(product)) elements.push_back(std::move(product));
        }
    }

    std::vector<M> unsigned_elements;
    for (const auto& e : elements) {
        bool seen = false;
        for (const auto& u : unsigned_elements)
            if (u == e || u == -e) seen = true;
        if (!seen) unsigned_elements.push_back(e);
    }
    std::vector<std::vector<Rational>> gram(unsigned_elements.size(),
                                            std::vector<Rational>(unsigned_elements.size()));
    for (std::size_t a = 0; a < unsigned_elements.size(); ++a)
        for (std::size_t b = 0; b < unsigned_elements.size(); ++b)
            gram[a][b] = real_pairing(unsigned_elements[a], unsigned_elements[b]);
    return {elements.size(), detail::rank(std::move(gram))};
}

template <Coefficient T>
struct EvenSubalgebra {
    std::vector<Multivector<T>> elements;
    std::size_t count = 0;
    bool closed = false;
};

/// Basis elements fixed by graduation, with a closure check over all pairwise products.
template <Coefficient T>
EvenSubalgebra<T> even_subalgebra(const RepPtr<T>& rep) {
    EvenSubalgebra<T> out;
    for (const auto& element : rep->basis()) {
        auto u = Multivector<T>::blade(rep, element.blade, element.unit);
        if (involution(u, Involution::hat) == u) out.elements.push_back(std::move(u));
    }
    out.count = out.elements.size();
    out.closed = true;
    for (const auto& a : out.elements) {
        for (const auto& b : out.elements) {
            const auto product = gp_blades(a, b);
            if (!(involution(product, Involution::hat) == product)) out.closed = false;
        }
    }
    return out;
}

// ---- Involution tables ------------------------------------------------------------------

/// +1 or −1 when the involution maps the unit to ±itself; 0 when it does neither.
template <Coefficient T>
int involution_sign(const HMatrix<T>& unit, const RepPtr<T>& rep, Involution kind) {
    const auto u = decompose(unit, rep);
    const auto image = involution(u, kind);
    if (image == u) return 1;
    if (image == -u) return -1;
    return 0;
}

struct InvolutionRow {
    std::string unit;
    int bar = 0;
    int dagger = 0;
    int hat = 0;
    bool derived = false; ///< no tabulated reference exists for this unit

    int sign(Involution kind) const {
        switch (kind) {
        case Involution::bar: return bar;
        case Involution::dagger: return dagger;
        case Involution::hat: return hat;
        }
        return 0;
    }
};

/// The representation the involution table of `name` is evaluated in: tables for the
/// real algebras include units (σ_i, j) that only exist in their complexification.
inline RepName table_host(RepName name) {
    switch (name) {
    case RepName::r30: return RepName::c30bar;
    case RepName::r05: return RepName::h05bar;
    case RepName::r01: return RepName::r01;
    case RepName::r10: return RepName::r10;
    default: return name;
    }
}

template <Coefficient T>
std::vector<InvolutionRow> involution_table(RepName name) {
    const RepName host = table_host(name);
    const auto& rp = rep<T>(host);
    const std::size_t dim = rp->matrix_size();
    using S = HScalar<T>;
    const auto unit = [&](const S& z) { return HMatrix<T>::scalar(dim, z); };

    std::vector<InvolutionRow> rows;
    auto add_row = [&](std::string label, const std::vector<HMatrix<T>>& members, bool derived) {
        InvolutionRow row{std::move(label), 0, 0, 0, derived};
        for (Involution kind : all_involutions) {
            int agreed = 2;
            for (const auto& m : members) {
                const int s = involution_sign(m, rp, kind);
                agreed = (agreed == 2 || agreed == s) ? s : 0;
            }
            (kind == Involution::bar ? row.bar : kind == Involution::dagger ? row.dagger : row.hat) = agreed;
        }
        rows.push_back(std::move(row));
    };

    switch (host) {
    case RepName::r01:
        add_row("e", rp->generators(), false);
        add_row("i", {unit(S::unit_i())}, false);
        break;
    case RepName::r10:
        add_row("e", rp->generators(), false);
        add_row("j", {unit(S::unit_j())}, false);
        break;
    case RepName::hbar:
        add_row("i", {unit(S::unit_i())}, false);
        add_row("j", {unit(S::unit_j())}, false);
        add_row("ij", {unit(S::unit_ij())}, true);
        break;
    case RepName::c30bar: {
        std::vector<HMatrix<T>> sigmas;
        for (int k = 1; k <= 3; ++k) sigmas.push_back(pauli2<T>(k));
        add_row("e_i", rp->generators(), false);
        add_row("sigma_i", sigmas, false);
        add_row("i", {unit(S::unit_i())}, false);
        add_row("j", {unit(S::unit_j())}, false);
        add_row("ij", {unit(S::unit_ij())}, true);
        break;
    }
    case RepName::h05bar: {
        std::vector<HMatrix<T>> time_like;
        std::vector<HMatrix<T>> space_like;
        for (int k = 1; k <= 5; ++k) time_like.push_back(sigma_ab<T>(0, k));
        for (int k = 1; k <= 5; ++k)
            for (int l = k + 1; l <= 5; ++l) space_like.push_back(sigma_ab<T>(k, l));
        add_row("e_i", rp->generators(), false);
        add_row("sigma_0i", time_like, false);
        add_row("sigma_ij", space_like, false);
        add_row("i", {unit(S::unit_i())}, false);
        add_row("j", {unit(S::unit_j())}, false);
        add_row("ij", {unit(S::unit_ij())}, true);
        break;
    }
    default:
        break;
    }
    return rows;
}

} // namespace hyperclifford
