#pragma once

// Random Borel group elements with small rational entries, for the
// conjugation round-trip tests.

#include <slporbit/matrix.hpp>
#include <slporbit/rational.hpp>
#include <slporbit/roots.hpp>

#include <random>

namespace slporbit::testing {

inline Rational small_nonzero(std::mt19937& rng) {
    static const int nums[] = {1, -1, 2, -2, 3, 1, -1, 2};
    static const int dens[] = {1, 1, 1, 2, 2, 3, 1, 1};
    std::uniform_int_distribution<int> pick(0, 7);
    int idx = pick(rng);
    return make_rational(nums[idx], dens[idx]);
}

inline Rational small_maybe_zero(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 3);
    if (pick(rng) == 0) return Rational(0);
    return small_nonzero(rng);
}

inline Matrix<Rational> random_borel(int n, std::mt19937& rng) {
    Matrix<Rational> b = Matrix<Rational>::identity(2 * n);
    for (int i = 1; i <= n; ++i) b = b * torus_gen<Rational>(i, small_nonzero(rng), n);
    for (const RootId& r : positive_roots(n)) {
        Rational c = small_maybe_zero(rng);
        if (c == 0) continue;
        b = b * unipotent_gen<Rational>(r, c, n);
    }
    return b;
}

}  // namespace slporbit::testing
