#pragma once

#include "gen.hpp"

#include "mvop/weight.hpp"

namespace testgen {

inline mvop::WeightSpec random_spec(Gen& g, int N) {
    mvop::WeightSpec w;
    w.N = N;
    w.nu = g.positive(7, 4);
    for (int k = 0; k + 1 < N; ++k) {
        mvop::Q v;
        do v = g.rational(5, 3);
        while (v == 0);
        w.a.push_back(v);
    }
    for (int k = 0; k < N; ++k) w.delta.push_back(g.positive(5, 3));
    return w;
}

inline mvop::WeightSpec mu_one_spec(int N, const mvop::Q& nu) {
    mvop::WeightSpec w;
    w.N = N;
    w.nu = nu;
    w.a.assign(N - 1, mvop::Q(-1));
    w.delta.assign(N, mvop::Q(1));
    return w;
}

}  // namespace testgen
