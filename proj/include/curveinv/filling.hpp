#pragma once

#include <utility>

#include "curveinv/laurent.hpp"
#include "curveinv/numeric.hpp"
#include "curveinv/slope.hpp"

namespace curveinv {

/// The two generators x^|p| * y^q - 1 and x^|p| - y^q of the filling locus for
/// the slope p/q.  Both are always emitted; when p = 0 they cut the same
/// hypersurface y = 1 up to sign.
inline std::pair<LaurentPoly2, LaurentPoly2> cr_polynomials(const Slope& r) {
    long long ap = llabs_checked(r.p);
    LaurentPoly2 lead = LaurentPoly2::monomial(ap, r.q, 1);
    LaurentPoly2 first = lead - LaurentPoly2::constant(1);
    LaurentPoly2 second =
        LaurentPoly2::monomial(ap, 0, 1) - LaurentPoly2::monomial(0, r.q, 1);
    return {first, second};
}

/// Unimodular change of variables (x, y) -> (x^b * y^-a, x^p * y^q) built from
/// an extended-gcd pair a*p + b*q = 1 with the minimal non-negative a.
/// Substituting its inverse into x^p * y^q - 1 collapses the curve to y - 1,
/// the constructive gonality-one witness.
inline MonomialMap normalization_map(const Slope& r) {
    long long a = 0, b = 0;
    if (r.q == 0) {
        a = r.p;  // slope is normalized to (1, 0), so a = p = 1
        b = 0;
    } else if (r.q == 1) {
        a = 0;
        b = 1;
    } else {
        // extended Euclid, then shift a into [0, q).
        long long old_r = r.p, cur_r = r.q;
        long long old_s = 1, cur_s = 0;
        while (cur_r != 0) {
            long long quot = old_r / cur_r;
            long long tmp = old_r - quot * cur_r;
            old_r = cur_r;
            cur_r = tmp;
            tmp = old_s - quot * cur_s;
            old_s = cur_s;
            cur_s = tmp;
        }
        // old_r = +-1 since gcd(|p|, q) = 1
        a = floor_mod(old_s * old_r, r.q);
        b = (1 - a * r.p) / r.q;
    }
    return MonomialMap::from_columns({b, -a}, {r.p, r.q});
}

/// Degree and genus bounds for the slice of a degree-D surface by the filling
/// locus of slope r: degree at most D * h(r) by Bezout, genus at most
/// (d-1)(d-2)/2 of that degree by the genus-degree formula.
struct BezoutBounds {
    long long degree_bound = 0;
    long long genus_bound = 0;
};

inline BezoutBounds bezout_bounds(long long surface_degree, const Slope& r) {
    if (surface_degree < 1) throw std::domain_error("surface degree must be at least 1");
    long long d = surface_degree * height(r);
    long long g2 = (d - 1) * (d - 2);
    return {d, g2 <= 0 ? 0 : g2 / 2};
}

}  // namespace curveinv
