#pragma once

#include <random>

#include <gtest/gtest.h>

#include "hyperclifford/hyperclifford.hpp"

namespace testing_support {

using hyperclifford::HMatrix;
using hyperclifford::HScalar;
using hyperclifford::Rational;

/// Seeded generator of small exact and floating values.
class Gen {
public:
    explicit Gen(std::uint64_t seed = 7) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double real(double lo = -1.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    Rational rational() { return Rational(integer(-6, 6), integer(1, 4)); }

    HScalar<Rational> exact_scalar() { return {rational(), rational(), rational(), rational()}; }
    HScalar<double> float_scalar() { return {real(), real(), real(), real()}; }

    HMatrix<Rational> exact_matrix(std::size_t n) {
        HMatrix<Rational> m(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = exact_scalar();
        return m;
    }

private:
    std::mt19937_64 rng_;
};

inline constexpr int property_runs = 200;

} // namespace testing_support
