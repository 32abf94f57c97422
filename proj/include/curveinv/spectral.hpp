#pragma once

#include <cmath>
#include <optional>

#include "curveinv/numeric.hpp"

namespace curveinv {

/// Upper bound gamma/(g-1) for the first Laplace eigenvalue of a compact
/// Riemann surface of genus g >= 2 and gonality gamma, kept exact.
inline BigRat li_yau_bound(long long gamma, long long g) {
    if (gamma < 1) throw std::domain_error("gonality must be positive");
    if (g < 2)
        throw std::domain_error(
            "eigenvalue bound needs genus at least 2 (genus 0 is rational, genus 1 elliptic)");
    return BigRat(gamma, g - 1);
}

/// Upper bound 2*arccosh(gamma) for the injectivity radius; 0 at gamma = 1.
inline double hwang_to_bound(long long gamma) {
    if (gamma < 1) throw std::domain_error("gonality must be positive");
    return 2.0 * std::acosh(static_cast<double>(gamma));
}

/// Both spectral bounds for one curve; only defined for genus >= 2.
struct SpectralBounds {
    BigRat lambda1_upper;
    double injectivity_radius_upper = 0.0;
    long long genus = 0;
    long long gonality = 0;
};

inline SpectralBounds spectral_bounds(long long gamma, long long g) {
    return {li_yau_bound(gamma, g), hwang_to_bound(gamma), g, gamma};
}

/// Family-level eigenvalue inequalities for the double twist knots, quoted
/// with the denominators the source states for the two canonical components.
inline BigRat dtk_lambda1_upper_y0(long long m, long long n) {
    long long den = (m - 1) * (n - 1);
    if (den < 1) throw std::domain_error("eigenvalue bound needs m, n at least 2");
    return BigRat(std::min(m, n), den);
}

inline BigRat dtk_lambda1_upper_x0(long long m, long long n, long long b) {
    long long den = 3 * m * n - m - n - b;
    if (den < 1) throw std::domain_error("denominator 3mn-m-n-b must be positive");
    return BigRat(2 * std::min(m, n), den);
}

/// The two published eigenvalue inequalities for the torus-bundle family,
/// stated for |n| > 4.  They disagree at small |n| (and the floor form has a
/// vanishing denominator at n = 5); both are evaluated so callers can report
/// the discrepancy instead of silently choosing one.
struct OptbLambda1Bounds {
    std::optional<BigRat> floor_form;  // 2 / floor((|n-2| - 2)/2), when defined
    BigRat linear_form;                // 4 / (|n-1| - 3)
    bool agree = false;
};

inline OptbLambda1Bounds optb_lambda1_bounds(long long n) {
    if (llabs_checked(n) <= 4)
        throw std::domain_error("torus-bundle eigenvalue bounds are stated for |n| > 4");
    long long floor_den = (llabs_checked(n - 2) - 2) / 2;
    long long linear_den = llabs_checked(n - 1) - 3;
    OptbLambda1Bounds out;
    if (floor_den > 0) out.floor_form = BigRat(2, floor_den);
    out.linear_form = BigRat(4, linear_den);
    out.agree = out.floor_form.has_value() && *out.floor_form == out.linear_form;
    return out;
}

}  // namespace curveinv
