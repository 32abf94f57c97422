#pragma once

#include <algorithm>
#include <string>

#include "curveinv/invariants.hpp"
#include "curveinv/laurent.hpp"
#include "curveinv/numeric.hpp"
#include "curveinv/polygon.hpp"
#include "curveinv/report.hpp"
#include "curveinv/slope.hpp"
#include "curveinv/spectral.hpp"
#include "curveinv/tracepoly.hpp"

namespace curveinv {

/// Validated parameters of the double twist knot J(k,l).  Construction swaps
/// k and l when needed so the stored l is even (J(k,l) and J(l,k) are ambient
/// isotopic); both-odd pairs are two-component links and are rejected.
struct DtkParams {
    long long k = 0;
    long long l = 0;
    long long input_k = 0;
    long long input_l = 0;
    bool swapped = false;
    long long m = 0;  // floor(|k|/2)
    long long n = 0;  // floor(|l|/2)
    long long b = 0;  // sign term of the genus formula, in {-1, 0, 1}
    bool hyperbolic = false;
    std::string nonhyperbolic_reason;
};

inline DtkParams make_dtk_params(long long k, long long l) {
    if (floor_mod(k, 2) != 0 && floor_mod(l, 2) != 0)
        throw std::domain_error("J(" + std::to_string(k) + "," + std::to_string(l) +
                                ") with k*l odd is a two-component link, not a knot");
    DtkParams p;
    p.input_k = k;
    p.input_l = l;
    if (floor_mod(l, 2) != 0) {
        std::swap(k, l);
        p.swapped = true;
    }
    p.k = k;
    p.l = l;
    p.m = llabs_checked(k) / 2;
    p.n = llabs_checked(l) / 2;
    long long parity_sign = floor_mod(k + l, 2) == 0 ? 1 : -1;
    p.b = parity_sign * k * l > 0 ? parity_sign : 0;
    if (llabs_checked(k) < 2)
        p.nonhyperbolic_reason = "|k| < 2";
    else if (llabs_checked(l) < 2)
        p.nonhyperbolic_reason = "|l| < 2";
    else if (k == l && llabs_checked(k) == 2)
        p.nonhyperbolic_reason = "J(2,2) and J(-2,-2) are the trefoil and its mirror";
    p.hyperbolic = p.nonhyperbolic_reason.empty();
    return p;
}

inline void require_hyperbolic(const DtkParams& p) {
    if (!p.hyperbolic)
        throw std::domain_error("J(" + std::to_string(p.input_k) + "," +
                                std::to_string(p.input_l) +
                                ") is not hyperbolic: " + p.nonhyperbolic_reason);
}

/// Defining equation of the quotient-variety canonical component in the
/// coordinates (r, t): the left-minus-right of the applicable recursion
/// product identity, or r - t on the diagonal family k = l.
inline LaurentPoly2 dtk_defining_polynomial(const DtkParams& p) {
    require_hyperbolic(p);
    if (p.k == p.l)
        return (LaurentPoly2::var_x() - LaurentPoly2::var_y()).with_names("r", "t");
    long long mprime = floor_div(p.k, 2);  // k = 2m' or 2m'+1
    long long nprime = p.l / 2;            // l = 2n'
    TraceKind row = floor_mod(p.k, 2) == 0 ? TraceKind::G : TraceKind::F;
    LaurentPoly2 lhs = poly1::embed(trace_poly(row, mprime + 1).coeffs, true) *
                       poly1::embed(trace_poly(TraceKind::G, nprime).coeffs, false);
    LaurentPoly2 rhs = poly1::embed(trace_poly(row, mprime).coeffs, true) *
                       poly1::embed(trace_poly(TraceKind::G, nprime + 1).coeffs, false);
    return (lhs - rhs).with_names("r", "t");
}

/// Exact genus and gonality of the two canonical components.
struct DtkValues {
    long long genus_y0 = 0;
    long long genus_x0 = 0;
    long long gonality_y0 = 1;
    long long gonality_x0 = 2;
};

inline DtkValues dtk_exact_values(const DtkParams& p) {
    require_hyperbolic(p);
    if (p.k == p.l) return {0, p.n - 1, 1, 2};
    return {(p.m - 1) * (p.n - 1), 3 * p.m * p.n - p.m - p.n - p.b,
            std::min(p.m, p.n), 2 * std::min(p.m, p.n)};
}

/// Hyperelliptic plane model w^2 = (r+2)*f_{n'}(r)^2 - 1 of the diagonal
/// family X_0(2n', 2n'), with its genus.
struct DiagonalModel {
    poly1::Coeffs rhs;  // degree 2|n'| - 1
    long long genus = 0;
};

inline DiagonalModel dtk_diagonal_model(long long nprime) {
    if (llabs_checked(nprime) <= 2)
        throw std::domain_error("diagonal model requires |n'| > 2");
    poly1::Coeffs f = trace_poly(TraceKind::F, nprime).coeffs;
    poly1::Coeffs rhs = poly1::mul(poly1::add(poly1::shift_up({1}), {2}), poly1::mul(f, f));
    rhs = poly1::sub(rhs, {1});
    return {rhs, hyperelliptic_genus(poly1::degree(rhs))};
}

inline InvariantReport dtk_invariants(const DtkParams& p) {
    require_hyperbolic(p);
    DtkValues v = dtk_exact_values(p);
    LaurentPoly2 eq = dtk_defining_polynomial(p);
    LatticePolygon delta = newton_polygon(eq);
    LatticeWidth width = delta.lattice_width();

    InvariantReport rep("dtk(" + std::to_string(p.input_k) + ", " + std::to_string(p.input_l) +
                        ")");
    rep.add("k", p.k, Provenance::ExactTheorem);
    rep.add("l", p.l, Provenance::ExactTheorem);
    rep.add("m", p.m, Provenance::ExactTheorem, "Thm 9.1");
    rep.add("n", p.n, Provenance::ExactTheorem, "Thm 9.1");
    rep.add("b", p.b, Provenance::ExactTheorem, "Thm 9.1");
    rep.add("hyperbolic", true, Provenance::ExactTheorem, "Sec 9.2");
    rep.add("defining_polynomial", eq.to_string(), Provenance::ExactTheorem, "Sec 9.2 (*)");
    if (p.k != p.l)
        rep.add("bidegree", IntPair{p.m, p.n}, Provenance::ExactTheorem, "Sec 9.2");
    rep.add("genus_y0", v.genus_y0, Provenance::ExactTheorem, "Thm 9.1");
    rep.add("genus_x0", v.genus_x0, Provenance::ExactTheorem, "Thm 9.1");
    rep.add("gonality_y0", v.gonality_y0, Provenance::ExactTheorem, "Thm 9.4");
    rep.add("gonality_x0", v.gonality_x0, Provenance::ExactTheorem, "Thm 9.6");
    rep.add("brill_noether_y0", brill_noether(v.genus_y0), Provenance::UpperBound,
            "Brill-Noether");
    rep.add("newton_interior_points", delta.interior_lattice_points(),
            Provenance::ConsistencyCheck, "Baker");
    rep.add("newton_lattice_width", width.width, Provenance::ConsistencyCheck,
            delta.classification() == PolygonClass::TwoDimensional ? "Castryck-Cools" : "");
    if (p.k != p.l && p.m >= 2 && p.n >= 2)
        rep.add("castelnuovo_severi_threshold",
                castelnuovo_severi_threshold(v.genus_x0, v.genus_y0, 2),
                Provenance::ExactTheorem, "Castelnuovo-Severi");
    if (p.k == p.l && llabs_checked(p.l / 2) > 2) {
        DiagonalModel model = dtk_diagonal_model(p.l / 2);
        rep.add("diagonal_model_rhs", "w^2 = " + poly1::to_string(model.rhs, "r"),
                Provenance::ExactTheorem, "Thm 9.6 proof");
        rep.add("diagonal_model_genus", model.genus, Provenance::ExactTheorem, "Thm 9.6 proof");
    }
    if (v.genus_y0 >= 2) {
        rep.add("lambda1_y0", dtk_lambda1_upper_y0(p.m, p.n), Provenance::UpperBound, "Sec 10");
        rep.add("injectivity_y0", hwang_to_bound(v.gonality_y0), Provenance::UpperBound,
                "Hwang-To");
    }
    if (v.genus_x0 >= 2) {
        if (p.k != p.l)
            rep.add("lambda1_x0", dtk_lambda1_upper_x0(p.m, p.n, p.b), Provenance::UpperBound,
                    "Sec 10");
        rep.add("injectivity_x0", hwang_to_bound(v.gonality_x0), Provenance::UpperBound,
                "Hwang-To");
    }

    if (p.swapped)
        rep.note("parameters swapped to make the second index even; J(k,l) and J(l,k) are "
                 "ambient isotopic");
    if (p.k == p.l) {
        rep.note("diagonal family: the quotient-variety canonical component is the line r = t");
        rep.note("lattice width 0 is reported for the degenerate segment polygon; the gonality "
                 "upper bound is cited only for two-dimensional Newton polygons");
    }
    return rep;
}

/// Validated parameter of the once-punctured torus bundle of tunnel number
/// one; hyperbolic exactly when |n| > 2.
struct OptbParams {
    long long n = 0;
    bool hyperbolic = false;
};

inline OptbParams make_optb_params(long long n) {
    return {n, llabs_checked(n) > 2};
}

/// Genus of the canonical component, split on the residue of n mod 4; the
/// parity case has an extra line of irreducible characters that lowers it.
inline long long optb_genus(long long n) {
    if (llabs_checked(n) <= 2)
        throw std::domain_error("M_" + std::to_string(n) + " is not hyperbolic (|n| <= 2)");
    long long a = llabs_checked(n - 1);
    return floor_mod(n, 4) == 2 ? (a - 3) / 2 : (a - 1) / 2;
}

inline InvariantReport optb_invariants(const OptbParams& p) {
    if (!p.hyperbolic)
        throw std::domain_error("M_" + std::to_string(p.n) + " is not hyperbolic (|n| <= 2)");
    long long g = optb_genus(p.n);
    long long gamma = g == 0 ? 1 : 2;

    InvariantReport rep("optb(" + std::to_string(p.n) + ")");
    rep.add("n", p.n, Provenance::ExactTheorem);
    rep.add("hyperbolic", true, Provenance::ExactTheorem, "Sec 9.1");
    rep.add("filling_slope", make_slope(-(p.n + 2), 1).slope.to_string(),
            Provenance::ExactTheorem, "Sec 9.1");
    rep.add("genus", g, Provenance::ExactTheorem, "Sec 9.1");
    rep.add("gonality", gamma, Provenance::ExactTheorem, "Sec 9.1");
    rep.add("psl2_genus", 0LL, Provenance::ExactTheorem, "Sec 9.1");
    rep.add("psl2_gonality", 1LL, Provenance::ExactTheorem, "Sec 9.1");
    if (llabs_checked(p.n) > 4) {
        OptbLambda1Bounds bounds = optb_lambda1_bounds(p.n);
        rep.add("lambda1_asserted_for", std::string("|n| > 4"), Provenance::ExactTheorem);
        if (bounds.floor_form)
            rep.add("lambda1_floor_form", *bounds.floor_form, Provenance::UpperBound, "Sec 10");
        else
            rep.note("the floor-form eigenvalue display has a vanishing denominator at this n");
        rep.add("lambda1_linear_form", bounds.linear_form, Provenance::UpperBound, "Sec 10");
        if (bounds.floor_form && !bounds.agree)
            rep.note("the two published eigenvalue displays disagree at this n; both are "
                     "reported");
    } else {
        rep.note("eigenvalue displays are stated only for |n| > 4 and are omitted");
    }
    if (g >= 2)
        rep.add("lambda1_from_genus", li_yau_bound(gamma, g), Provenance::UpperBound, "Li-Yau");
    if (llabs_checked(p.n) > 6) {
        rep.add("injectivity_asserted_for", std::string("|n| > 6"), Provenance::ExactTheorem);
        rep.add("injectivity_radius", hwang_to_bound(2), Provenance::UpperBound, "Hwang-To");
    }
    return rep;
}

}  // namespace curveinv
