#pragma once

// Hyperbolic-complex scalars z = x + iy + jv + ijw with i² = −1, j² = +1 and
// commuting units, over an exact rational or a binary floating-point backend.

#include <array>
#include <cmath>
#include <concepts>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include <boost/multiprecision/gmp.hpp>

#include "hyperclifford/errors.hpp"

namespace hyperclifford {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class T>
concept Coefficient = std::same_as<T, double> || std::same_as<T, Rational>;

template <class T>
concept FloatCoefficient = std::same_as<T, double>;

enum class Backend { exact_rational, binary_float };

template <Coefficient T>
inline constexpr Backend backend_of =
    std::same_as<T, double> ? Backend::binary_float : Backend::exact_rational;

namespace detail {

template <Coefficient T>
double to_double(const T& value) {
    if constexpr (std::same_as<T, double>) {
        return value;
    } else {
        return value.template convert_to<double>();
    }
}

template <Coefficient T>
T abs(const T& value) {
    return value < T(0) ? T(-value) : value;
}

template <Coefficient T>
std::string format_number(const T& value) {
    std::ostringstream out;
    if constexpr (std::same_as<T, double>) {
        out.precision(12);
        out << value;
    } else {
        out << value;
    }
    return out.str();
}

} // namespace detail

/// Zero-divisor detection for the floating backend: N(z) ≤ relative · (1 + |z|²)².
/// The exact backend ignores this and tests N(z) = 0.
struct NullConeTolerance {
    double relative = 1e-12;
};

template <Coefficient T>
struct HScalar {
    T x{};
    T y{};
    T v{};
    T w{};

    HScalar() = default;
    HScalar(T x_) : x(std::move(x_)) {}
    HScalar(T x_, T y_, T v_, T w_)
        : x(std::move(x_)), y(std::move(y_)), v(std::move(v_)), w(std::move(w_)) {}
    HScalar(int value) requires(!std::same_as<T, int>) : x(value) {}

    static HScalar one() { return HScalar(T(1)); }
    static HScalar unit_i() { return HScalar(T(0), T(1), T(0), T(0)); }
    static HScalar unit_j() { return HScalar(T(0), T(0), T(1), T(0)); }
    static HScalar unit_ij() { return HScalar(T(0), T(0), T(0), T(1)); }

    std::array<T, 4> components() const { return {x, y, v, w}; }

    bool is_zero() const { return x == 0 && y == 0 && v == 0 && w == 0; }
    bool is_real() const { return y == 0 && v == 0 && w == 0; }
    bool is_complex() const { return v == 0 && w == 0; }
    bool is_hyperbolic() const { return y == 0 && w == 0; }
    /// Member of the subring spanned by {1, ij}, where every quadratic form value lives.
    bool in_ij_subring() const { return y == 0 && v == 0; }

    HScalar& operator+=(const HScalar& o) {
        x += o.x;
        y += o.y;
        v += o.v;
        w += o.w;
        return *this;
    }
    HScalar& operator-=(const HScalar& o) {
        x -= o.x;
        y -= o.y;
        v -= o.v;
        w -= o.w;
        return *this;
    }
    HScalar& operator*=(const HScalar& o) {
        *this = *this * o;
        return *this;
    }
    HScalar& operator*=(const T& s) {
        x *= s;
        y *= s;
        v *= s;
        w *= s;
        return *this;
    }

    friend HScalar operator+(HScalar a, const HScalar& b) { return a += b; }
    friend HScalar operator-(HScalar a, const HScalar& b) { return a -= b; }
    friend HScalar operator-(const HScalar& a) { return HScalar(-a.x, -a.y, -a.v, -a.w); }

    // i·j = ij, i·ij = −j, j·ij = i
    friend HScalar operator*(const HScalar& a, const HScalar& b) {
        return HScalar(a.x * b.x - a.y * b.y + a.v * b.v - a.w * b.w,
                       a.x * b.y + a.y * b.x + a.v * b.w + a.w * b.v,
                       a.x * b.v + a.v * b.x - a.y * b.w - a.w * b.y,
                       a.x * b.w + a.w * b.x + a.y * b.v + a.v * b.y);
    }
    friend HScalar operator*(HScalar a, const T& s) { return a *= s; }
    friend HScalar operator*(const T& s, HScalar a) { return a *= s; }
    friend HScalar operator/(HScalar a, const T& s) {
        a.x /= s;
        a.y /= s;
        a.v /= s;
        a.w /= s;
        return a;
    }

    friend bool operator==(const HScalar& a, const HScalar& b) {
        return a.x == b.x && a.y == b.y && a.v == b.v && a.w == b.w;
    }
};

/// i ↦ −i, j ↦ −j, hence ij ↦ ij.
template <Coefficient T>
HScalar<T> conjugate(const HScalar<T>& z) {
    return HScalar<T>(z.x, -z.y, -z.v, z.w);
}

/// z z̄ = x² + y² − v² − w² + 2ij(xw − yv).
template <Coefficient T>
HScalar<T> qform_scalar(const HScalar<T>& z) {
    return z * conjugate(z);
}

/// N(z) = a² + b² for z z̄ = a + ij b; vanishes exactly on the null cone.
template <Coefficient T>
T modulus(const HScalar<T>& z) {
    const HScalar<T> q = qform_scalar(z);
    return q.x * q.x + q.w * q.w;
}

/// Sum of squared coefficients (Euclidean, not the quadratic form).
template <Coefficient T>
T euclidean_norm_sq(const HScalar<T>& z) {
    return z.x * z.x + z.y * z.y + z.v * z.v + z.w * z.w;
}

template <Coefficient T>
bool near_null_cone(const HScalar<T>& z, NullConeTolerance tol = {}) {
    const T n = modulus(z);
    if constexpr (std::same_as<T, double>) {
        const double scale = 1.0 + euclidean_norm_sq(z);
        return n <= tol.relative * scale * scale;
    } else {
        return n == 0;
    }
}

template <Coefficient T>
HScalar<T> invert(const HScalar<T>& z, NullConeTolerance tol = {}) {
    if (near_null_cone(z, tol)) {
        throw ZeroDivisor("hyperbolic-complex scalar lies on the null cone");
    }
    const HScalar<T> q = qform_scalar(z);
    const T n = q.x * q.x + q.w * q.w;
    // (a + ij b)⁻¹ = (a − ij b)/(a² + b²) since (ij)² = −1
    const HScalar<T> q_inv(q.x / n, T(0), T(0), -q.w / n);
    return conjugate(z) * q_inv;
}

template <Coefficient T>
T max_abs_diff(const HScalar<T>& a, const HScalar<T>& b) {
    using detail::abs;
    T m = abs(T(a.x - b.x));
    for (const T& d : {T(a.y - b.y), T(a.v - b.v), T(a.w - b.w)}) {
        if (abs(d) > m) m = abs(d);
    }
    return m;
}

inline double max_abs(const HScalar<double>& z) {
    return std::max({std::abs(z.x), std::abs(z.y), std::abs(z.v), std::abs(z.w)});
}

inline HScalar<double> to_float(const HScalar<Rational>& z) {
    return HScalar<double>(detail::to_double(z.x), detail::to_double(z.y), detail::to_double(z.v),
                           detail::to_double(z.w));
}

inline const HScalar<double>& to_float(const HScalar<double>& z) { return z; }

/// exp(x)(cos y + i sin y)(cosh v + j sinh v)(cos w + ij sin w).
inline HScalar<double> exp_scalar(const HScalar<double>& z) {
    const double scale = std::exp(z.x);
    const HScalar<double> complex_part(std::cos(z.y), std::sin(z.y), 0.0, 0.0);
    const HScalar<double> hyperbolic_part(std::cosh(z.v), 0.0, std::sinh(z.v), 0.0);
    const HScalar<double> ij_part(std::cos(z.w), 0.0, 0.0, std::sin(z.w));
    const HScalar<double> result = complex_part * hyperbolic_part * ij_part * scale;
    if (!std::isfinite(result.x) || !std::isfinite(result.y) || !std::isfinite(result.v) ||
        !std::isfinite(result.w)) {
        throw DomainError("exp_scalar overflow");
    }
    return result;
}

/// cos and sin of the angle φ + ij ξ.
struct TildeTrig {
    HScalar<double> cos;
    HScalar<double> sin;
};

inline TildeTrig trig_tilde(double phi, double xi) {
    return {HScalar<double>(std::cos(phi) * std::cosh(xi), 0.0, 0.0, -std::sin(phi) * std::sinh(xi)),
            HScalar<double>(std::sin(phi) * std::cosh(xi), 0.0, 0.0, std::cos(phi) * std::sinh(xi))};
}

/// Double-field form z = a e + b ē with idempotents e = (1+j)/2, ē = (1−j)/2.
/// Components are complex (members of the {1, i} subring); `real` marks the ²R case.
template <Coefficient T>
struct NullPair {
    HScalar<T> a;
    HScalar<T> b;
    bool real = false;

    friend bool operator==(const NullPair& p, const NullPair& q) {
        return p.a == q.a && p.b == q.b;
    }
};

template <Coefficient T>
NullPair<T> to_null(const HScalar<T>& z) {
    // z = A + jB with A = x + iy, B = v + iw; then z = (A + B) e + (A − B) ē
    NullPair<T> p{HScalar<T>(T(z.x + z.v), T(z.y + z.w), T(0), T(0)),
                  HScalar<T>(T(z.x - z.v), T(z.y - z.w), T(0), T(0)), false};
    p.real = p.a.is_real() && p.b.is_real();
    return p;
}

template <Coefficient T>
HScalar<T> from_null(const NullPair<T>& p) {
    const T two(2);
    return HScalar<T>(T((p.a.x + p.b.x) / two), T((p.a.y + p.b.y) / two), T((p.a.x - p.b.x) / two),
                      T((p.a.y - p.b.y) / two));
}

template <Coefficient T>
NullPair<T> multiply(const NullPair<T>& p, const NullPair<T>& q) {
    return {p.a * q.a, p.b * q.b, p.real && q.real};
}

/// Conjugation in the null basis: swap the components and complex-conjugate them.
/// On the real double field this is the plain swap.
template <Coefficient T>
NullPair<T> conjugate(const NullPair<T>& p) {
    return {conjugate(p.b), conjugate(p.a), p.real};
}

template <Coefficient T>
std::string to_string(const HScalar<T>& z) {
    std::string out;
    const std::array<std::pair<const T*, const char*>, 4> terms{
        {{&z.x, ""}, {&z.y, "i"}, {&z.v, "j"}, {&z.w, "ij"}}};
    for (const auto& [coeff, unit] : terms) {
        if (*coeff == 0) continue;
        const bool negative = *coeff < T(0);
        const T magnitude = negative ? T(-*coeff) : *coeff;
        std::string text;
        if (*unit == '\0') {
            text = detail::format_number(magnitude);
        } else if (magnitude == 1) {
            text = unit;
        } else {
            std::string number = detail::format_number(magnitude);
            if (number.find('/') != std::string::npos) number = "(" + number + ")";
            text = number + unit;
        }
        if (out.empty()) {
            out = negative ? "-" + text : text;
        } else {
            out += (negative ? "-" : "+") + text;
        }
    }
    return out.empty() ? "0" : out;
}

template <Coefficient T>
std::ostream& operator<<(std::ostream& os, const HScalar<T>& z) {
    return os << to_string(z);
}

} // namespace hyperclifford
