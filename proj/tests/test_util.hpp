#pragma once

#include <random>
#include <vector>

#include "curveinv/laurent.hpp"
#include "curveinv/polygon.hpp"

namespace curveinv::testing {

using Rng = std::mt19937_64;

inline long long rand_int(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline LaurentPoly2 random_laurent(Rng& rng, int max_terms = 6, long long max_exp = 6,
                                   long long max_coeff = 9) {
    LaurentPoly2 p;
    int terms = static_cast<int>(rand_int(rng, 0, max_terms));
    for (int i = 0; i < terms; ++i) {
        long long c = rand_int(rng, -max_coeff, max_coeff);
        p = p + LaurentPoly2::monomial(rand_int(rng, -max_exp, max_exp),
                                       rand_int(rng, -max_exp, max_exp), c);
    }
    return p;
}

/// Random product of shears, the swap and negations: always determinant +-1.
inline MonomialMap random_unimodular(Rng& rng, int steps = 8) {
    MonomialMap m = MonomialMap::identity();
    for (int i = 0; i < steps; ++i) {
        MonomialMap gen = MonomialMap::identity();
        switch (rand_int(rng, 0, 3)) {
            case 0: gen = MonomialMap(1, 1, 0, 1); break;
            case 1: gen = MonomialMap(1, 0, 1, 1); break;
            case 2: gen = MonomialMap(0, 1, 1, 0); break;
            case 3: gen = MonomialMap(-1, 0, 0, 1); break;
        }
        // compose: exponents map first by m, then by gen
        m = MonomialMap(gen.m11() * m.m11() + gen.m12() * m.m21(),
                        gen.m11() * m.m12() + gen.m12() * m.m22(),
                        gen.m21() * m.m11() + gen.m22() * m.m21(),
                        gen.m21() * m.m12() + gen.m22() * m.m22());
    }
    return m;
}

inline std::vector<LatticePoint> random_points(Rng& rng, int count, long long lo, long long hi) {
    std::vector<LatticePoint> pts;
    for (int i = 0; i < count; ++i) pts.push_back({rand_int(rng, lo, hi), rand_int(rng, lo, hi)});
    return pts;
}

}  // namespace curveinv::testing
