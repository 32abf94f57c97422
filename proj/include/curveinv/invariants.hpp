#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "curveinv/numeric.hpp"

namespace curveinv {

/// Brill-Noether bound: gonality <= floor((g+3)/2).
inline long long brill_noether(long long g) {
    if (g < 0) throw std::domain_error("genus must be non-negative");
    return (g + 3) / 2;
}

/// Genus of a degree-d plane curve, (d-1)(d-2)/2, reduced by s(s-1)/2 for each
/// singularity of order s and clamped at zero.  Orders below 2 are rejected:
/// an order-1 point is smooth and must not be passed as a singularity.
inline long long genus_degree_bound(long long d, const std::vector<long long>& singularity_orders) {
    if (d < 1) throw std::domain_error("degree must be at least 1");
    long long g2 = (d - 1) * (d - 2);
    for (long long s : singularity_orders) {
        if (s < 2) throw std::domain_error("singularity order must be at least 2");
        g2 -= s * (s - 1);
    }
    return g2 <= 0 ? 0 : g2 / 2;
}

/// Gonality min(M,N) of a smooth irreducible curve of bidegree (M,N) on the
/// quadric surface; bidegree (0,N) or (M,0) curves are lines of gonality 1.
inline long long bidegree_gonality(long long M, long long N) {
    if (M < 0 || N < 0) throw std::domain_error("bidegree components must be non-negative");
    if (M == 0 || N == 0) return 1;
    return std::min(M, N);
}

/// Gonality d - nu of a degree-d plane curve whose maximal singularity has
/// order nu, valid for curves with at most two singular points (including
/// infinitely near ones); that hypothesis is asserted by the caller.
inline long long plane_gonality_from_singularity(long long d, long long nu) {
    if (nu < 1) throw std::domain_error("singularity order must be at least 1");
    if (nu >= d) throw std::domain_error("singularity order must be smaller than the degree");
    return d - nu;
}

/// Castelnuovo-Severi threshold floor((gX - k*gY)/(k-1)): any map from X to
/// the line of degree at most this value factors through the given degree-k
/// cover X -> Y.
inline long long castelnuovo_severi_threshold(long long gX, long long gY, long long k) {
    if (k < 2) throw std::domain_error("cover degree must be at least 2");
    return floor_div(gX - k * gY, k - 1);
}

/// Genus floor((dp-1)/2) of w^2 = F(r) with F squarefree of degree dp.
inline long long hyperelliptic_genus(long long dp) {
    if (dp < 3) throw std::domain_error("right-hand side degree must be at least 3");
    return (dp - 1) / 2;
}

/// Degrees of the restriction/quotient maps between the canonical components,
/// bounded through the order of H^1(M; Z/2Z).
struct MapDegreeBounds {
    long long y0_to_b0 = 1;  // exactly 1
    long long x0_to_a0 = 1;  // at most h1_order / 2
    long long e0_to_a0 = 4;  // exactly 4
    long long x0_to_y0 = 1;  // at most h1_order

    friend bool operator==(const MapDegreeBounds&, const MapDegreeBounds&) = default;
};

inline MapDegreeBounds map_degree_bounds(long long h1_order) {
    if (h1_order < 2 || (h1_order & (h1_order - 1)) != 0)
        throw std::domain_error("|H^1(M; Z/2Z)| must be a power of two and at least 2");
    return {1, h1_order / 2, 4, h1_order};
}

/// Exact-or-interval gonality value.
struct GonalityValue {
    long long lo = 1;
    long long hi = 1;
    bool exact() const { return lo == hi; }
};

/// Assembled scalar invariants of one curve.
struct CurveInvariants {
    long long degree = 0;
    long long genus = 0;
    bool genus_is_upper_bound = false;
    GonalityValue gonality;
    std::optional<std::pair<long long, long long>> bidegree;
    std::vector<long long> singularity_orders;  // each >= 2

    bool consistent() const {
        if (gonality.lo > gonality.hi || gonality.lo < 1) return false;
        for (long long s : singularity_orders)
            if (s < 2) return false;
        if (!genus_is_upper_bound && gonality.exact())
            return gonality.lo <= brill_noether(genus);
        return true;
    }
};

}  // namespace curveinv
