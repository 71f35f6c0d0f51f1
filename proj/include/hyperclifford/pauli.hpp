#pragma once

// 2×2 and 4×4 Pauli matrices and the SU(4) generator assignment σ_ab.

#include <array>
#include <string>

#include "hyperclifford/matrix.hpp"

namespace hyperclifford {

template <Coefficient T>
HMatrix<T> pauli2(int k) {
    using S = HScalar<T>;
    const S one = S::one();
    const S i = S::unit_i();
    switch (k) {
    case 0:
        return HMatrix<T>::identity(2);
    case 1:
        return {{S(), one}, {one, S()}};
    case 2:
        return {{S(), -i}, {i, S()}};
    case 3:
        return {{one, S()}, {S(), -one}};
    default:
        throw IndexOutOfRange("2x2 Pauli index must be in 0..3, got " + std::to_string(k));
    }
}

/// The fifteen 4×4 matrices built by tensor products in five groups of three:
/// σ_i⊗1, 1⊗σ_i, σ_1⊗σ_i, σ_2⊗σ_i, σ_3⊗σ_i.
template <Coefficient T>
HMatrix<T> pauli4(int k) {
    if (k < 1 || k > 15) throw IndexOutOfRange("4x4 Pauli index must be in 1..15, got " + std::to_string(k));
    const int group = (k - 1) / 3;
    const int i = (k - 1) % 3 + 1;
    switch (group) {
    case 0:
        return kron(pauli2<T>(i), pauli2<T>(0));
    case 1:
        return kron(pauli2<T>(0), pauli2<T>(i));
    default:
        return kron(pauli2<T>(group - 1), pauli2<T>(i));
    }
}

/// Hand-transcribed entries of the fifteen 4×4 matrices. Kept separate from pauli4 so
/// a transcription slip and a construction slip cannot hide each other.
template <Coefficient T>
HMatrix<T> pauli4_literal(int k) {
    using S = HScalar<T>;
    const S o;
    const S l = S::one();
    const S m = -S::one();
    const S i = S::unit_i();
    const S n = -S::unit_i();
    switch (k) {
    case 1: return {{o, o, l, o}, {o, o, o, l}, {l, o, o, o}, {o, l, o, o}};
    case 2: return {{o, o, n, o}, {o, o, o, n}, {i, o, o, o}, {o, i, o, o}};
    case 3: return {{l, o, o, o}, {o, l, o, o}, {o, o, m, o}, {o, o, o, m}};
    case 4: return {{o, l, o, o}, {l, o, o, o}, {o, o, o, l}, {o, o, l, o}};
    case 5: return {{o, n, o, o}, {i, o, o, o}, {o, o, o, n}, {o, o, i, o}};
    case 6: return {{l, o, o, o}, {o, m, o, o}, {o, o, l, o}, {o, o, o, m}};
    case 7: return {{o, o, o, l}, {o, o, l, o}, {o, l, o, o}, {l, o, o, o}};
    case 8: return {{o, o, o, n}, {o, o, i, o}, {o, n, o, o}, {i, o, o, o}};
    case 9: return {{o, o, l, o}, {o, o, o, m}, {l, o, o, o}, {o, m, o, o}};
    case 10: return {{o, o, o, n}, {o, o, n, o}, {o, i, o, o}, {i, o, o, o}};
    case 11: return {{o, o, o, m}, {o, o, l, o}, {o, l, o, o}, {m, o, o, o}};
    case 12: return {{o, o, n, o}, {o, o, o, i}, {i, o, o, o}, {o, n, o, o}};
    case 13: return {{o, l, o, o}, {l, o, o, o}, {o, o, o, m}, {o, o, m, o}};
    case 14: return {{o, n, o, o}, {i, o, o, o}, {o, o, o, i}, {o, o, n, o}};
    case 15: return {{l, o, o, o}, {o, m, o, o}, {o, o, m, o}, {o, o, o, l}};
    default:
        throw IndexOutOfRange("4x4 Pauli index must be in 1..15, got " + std::to_string(k));
    }
}

/// Signed index into the fifteen matrices: σ_ab = sign · σ_|k|. Zero on the diagonal.
inline int sigma_ab_index(int a, int b) {
    static constexpr std::array<std::array<int, 6>, 6> table{{
        {0, 1, -3, 10, 11, 12},
        {-1, 0, 2, 13, 14, 15},
        {3, -2, 0, 7, 8, 9},
        {-10, -13, -7, 0, 6, -5},
        {-11, -14, -8, -6, 0, 4},
        {-12, -15, -9, 5, -4, 0},
    }};
    if (a < 0 || a > 5 || b < 0 || b > 5) {
        throw IndexOutOfRange("sigma_ab indices must be in 0..5");
    }
    return table[a][b];
}

template <Coefficient T>
HMatrix<T> sigma_ab(int a, int b) {
    const int k = sigma_ab_index(a, b);
    if (k == 0) throw IndexOutOfRange("sigma_ab is undefined for a == b");
    return k > 0 ? pauli4<T>(k) : -pauli4<T>(-k);
}

/// The fifteen matrices built once and shared read-only.
template <Coefficient T>
struct PauliTable {
    std::array<HMatrix<T>, 15> sigma;

    const HMatrix<T>& operator[](int k) const {
        if (k < 1 || k > 15) throw IndexOutOfRange("4x4 Pauli index must be in 1..15");
        return sigma[static_cast<std::size_t>(k - 1)];
    }

    HMatrix<T> ab(int a, int b) const {
        const int k = sigma_ab_index(a, b);
        if (k == 0) throw IndexOutOfRange("sigma_ab is undefined for a == b");
        return k > 0 ? (*this)[k] : -(*this)[-k];
    }

    static const PauliTable& instance() {
        static const PauliTable table = [] {
            PauliTable t;
            for (int k = 1; k <= 15; ++k) t.sigma[static_cast<std::size_t>(k - 1)] = pauli4<T>(k);
            return t;
        }();
        return table;
    }
};

} // namespace hyperclifford
