#pragma once

#include "mvop/matrix.hpp"

#include <random>

namespace testgen {

// Small random rationals from a fixed seed, for property tests.
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(unsigned long long seed = 0x5eed) : rng(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    mvop::Q rational(long span = 9, long den = 6) {
        return mvop::frac(integer(-span, span), integer(1, den));
    }
    mvop::Q positive(long span = 9, long den = 6) { return mvop::frac(integer(1, span), integer(1, den)); }
    mvop::MatQ matrix(int n) {
        mvop::MatQ m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = rational();
        return m;
    }
    mvop::MatQ unit_lower(int n) {
        mvop::MatQ m = mvop::MatQ::identity(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j) m(i, j) = rational();
        return m;
    }
};

}  // namespace testgen
