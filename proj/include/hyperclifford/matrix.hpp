#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "hyperclifford/errors.hpp"
#include "hyperclifford/scalar.hpp"

namespace hyperclifford {

/// Dense square matrix over the hyperbolic-complex ring, row-major.
template <Coefficient T>
class HMatrix {
public:
    using Scalar = HScalar<T>;

    HMatrix() = default;
    explicit HMatrix(std::size_t n) : n_(n), entries_(n * n) {}
    HMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) : n_(rows.size()) {
        entries_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) throw DimensionMismatch("matrix literal is not square");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static HMatrix identity(std::size_t n) { return scalar(n, Scalar::one()); }
    static HMatrix scalar(std::size_t n, const Scalar& z) {
        HMatrix m(n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = z;
        return m;
    }

    std::size_t size() const { return n_; }
    const std::vector<Scalar>& entries() const { return entries_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

    HMatrix& operator+=(const HMatrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    HMatrix& operator-=(const HMatrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }
    HMatrix& operator*=(const Scalar& z) {
        for (auto& e : entries_) e = e * z;
        return *this;
    }

    friend HMatrix operator+(HMatrix a, const HMatrix& b) { return a += b; }
    friend HMatrix operator-(HMatrix a, const HMatrix& b) { return a -= b; }
    friend HMatrix operator-(HMatrix a) {
        for (auto& e : a.entries_) e = -e;
        return a;
    }
    friend HMatrix operator*(const Scalar& z, HMatrix a) { return a *= z; }
    friend HMatrix operator*(HMatrix a, const Scalar& z) { return a *= z; }
    friend HMatrix operator*(const T& s, HMatrix a) { return a *= Scalar(s); }
    friend HMatrix operator/(HMatrix a, const T& s) {
        for (auto& e : a.entries_) e = e / s;
        return a;
    }

    friend HMatrix operator*(const HMatrix& a, const HMatrix& b) {
        a.check_same(b);
        const std::size_t n = a.n_;
        HMatrix out(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar& left = a(r, k);
                if (left.is_zero()) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    if (!b(k, c).is_zero()) out(r, c) += left * b(k, c);
                }
            }
        }
        return out;
    }

    friend bool operator==(const HMatrix& a, const HMatrix& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    void check_same(const HMatrix& o) const {
        if (n_ != o.n_) throw DimensionMismatch("matrix dimensions differ");
    }

private:
    std::size_t n_ = 0;
    std::vector<Scalar> entries_;
};

template <Coefficient T>
HMatrix<T> transpose(const HMatrix<T>& a) {
    HMatrix<T> out(a.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) out(c, r) = a(r, c);
    return out;
}

/// Transpose with i ↦ −i, j ↦ −j on every entry.
template <Coefficient T>
HMatrix<T> adjoint(const HMatrix<T>& a) {
    HMatrix<T> out(a.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) out(c, r) = conjugate(a(r, c));
    return out;
}

template <Coefficient T>
HScalar<T> trace(const HMatrix<T>& a) {
    HScalar<T> t;
    for (std::size_t k = 0; k < a.size(); ++k) t += a(k, k);
    return t;
}

template <Coefficient T>
HMatrix<T> commutator(const HMatrix<T>& a, const HMatrix<T>& b) {
    return a * b - b * a;
}

/// (A ⊗ B)[(i,k),(j,l)] = a_ij b_kl; a_11 b_11 sits in the top-left corner.
template <Coefficient T>
HMatrix<T> kron(const HMatrix<T>& a, const HMatrix<T>& b) {
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    HMatrix<T> out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return out;
}

/// Real Frobenius pairing: the Euclidean dot product of all 4n² real coefficients.
/// Equals the real part of tr(A* B) with * conjugating i only, so it is positive definite.
template <Coefficient T>
T real_pairing(const HMatrix<T>& a, const HMatrix<T>& b) {
    a.check_same(b);
    T sum(0);
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        const auto& p = a.entries()[k];
        const auto& q = b.entries()[k];
        sum += p.x * q.x + p.y * q.y + p.v * q.v + p.w * q.w;
    }
    return sum;
}

template <Coefficient T>
T max_abs_diff(const HMatrix<T>& a, const HMatrix<T>& b) {
    a.check_same(b);
    T m(0);
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        const T d = max_abs_diff(a.entries()[k], b.entries()[k]);
        if (d > m) m = d;
    }
    return m;
}

template <Coefficient T>
T max_abs(const HMatrix<T>& a) {
    return max_abs_diff(a, HMatrix<T>(a.size()));
}

inline HMatrix<double> to_float(const HMatrix<Rational>& a) {
    HMatrix<double> out(a.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) out(r, c) = to_float(a(r, c));
    return out;
}

inline const HMatrix<double>& to_float(const HMatrix<double>& a) { return a; }

/// Returns z when a = z·I (exactly on the exact backend, within tol on floats).
template <Coefficient T>
std::optional<HScalar<T>> as_scalar_multiple(const HMatrix<T>& a, double tol = 0.0) {
    if (a.size() == 0) return std::nullopt;
    const HScalar<T> z = a(0, 0);
    const HMatrix<T> diff = a - HMatrix<T>::scalar(a.size(), z);
    if constexpr (std::same_as<T, double>) {
        if (max_abs(diff) > tol) return std::nullopt;
    } else {
        if (!(diff == HMatrix<T>(a.size()))) return std::nullopt;
    }
    return z;
}

/// The two complex matrices of the double-field split, entrywise a = (A + B), b = (A − B).
template <Coefficient T>
struct NullMatrixPair {
    HMatrix<T> e_part;
    HMatrix<T> ebar_part;
};

template <Coefficient T>
NullMatrixPair<T> to_null(const HMatrix<T>& m) {
    NullMatrixPair<T> out{HMatrix<T>(m.size()), HMatrix<T>(m.size())};
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m.size(); ++c) {
            const NullPair<T> p = to_null(m(r, c));
            out.e_part(r, c) = p.a;
            out.ebar_part(r, c) = p.b;
        }
    }
    return out;
}

template <Coefficient T>
HMatrix<T> from_null(const NullMatrixPair<T>& pair) {
    const std::size_t n = pair.e_part.size();
    pair.e_part.check_same(pair.ebar_part);
    HMatrix<T> out(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(r, c) = from_null(NullPair<T>{pair.e_part(r, c), pair.ebar_part(r, c), false});
    return out;
}

namespace detail {

// Gauss-Jordan over the complex field ({1, i} subring entries). Exact pivots must be
// non-zero; float pivots are the largest modulus in the column and must exceed tol.
template <Coefficient T>
HMatrix<T> invert_complex(HMatrix<T> a, double tol) {
    const std::size_t n = a.size();
    HMatrix<T> inv = HMatrix<T>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        T best(0);
        for (std::size_t r = col; r < n; ++r) {
            const T mag = a(r, col).x * a(r, col).x + a(r, col).y * a(r, col).y;
            if constexpr (std::same_as<T, double>) {
                if (mag > best) {
                    best = mag;
                    pivot = r;
                }
            } else if (mag != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) throw SingularMatrix("matrix is singular");
        if constexpr (std::same_as<T, double>) {
            if (std::sqrt(best) <= tol) throw SingularMatrix("matrix is numerically singular");
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        const HScalar<T> p = a(col, col);
        const T mag = p.x * p.x + p.y * p.y;
        const HScalar<T> p_inv(T(p.x / mag), T(-p.y / mag), T(0), T(0));
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) = a(col, c) * p_inv;
            inv(col, c) = inv(col, c) * p_inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const HScalar<T> factor = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= factor * a(col, c);
                inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    return inv;
}

} // namespace detail

/// Matrix inverse over the hyperbolic-complex ring. The ring is ℂ ⊕ ℂ in the null basis,
/// so a matrix is invertible iff both complex factors are; each is inverted separately.
template <Coefficient T>
HMatrix<T> inverse(const HMatrix<T>& m, double tol = 1e-13) {
    NullMatrixPair<T> pair = to_null(m);
    double scale = 1.0;
    if constexpr (std::same_as<T, double>) scale = std::max(1.0, max_abs(m));
    pair.e_part = detail::invert_complex(std::move(pair.e_part), tol * scale);
    pair.ebar_part = detail::invert_complex(std::move(pair.ebar_part), tol * scale);
    return from_null(pair);
}

template <Coefficient T>
std::ostream& operator<<(std::ostream& os, const HMatrix<T>& m) {
    for (std::size_t r = 0; r < m.size(); ++r) {
        os << "[";
        for (std::size_t c = 0; c < m.size(); ++c) os << (c ? ", " : "") << to_string(m(r, c));
        os << "]\n";
    }
    return os;
}

} // namespace hyperclifford
