#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curveinv/filling.hpp"
#include "curveinv/laurent.hpp"
#include "curveinv/polygon.hpp"
#include "curveinv/report.hpp"
#include "curveinv/slope.hpp"
#include "curveinv/spectral.hpp"
#include "curveinv/tracepoly.hpp"

namespace curveinv {

/// Newton-polygon report: polygon, genus and gonality bounds, dimension test.
inline InvariantReport poly_report(const LaurentPoly2& p) {
    LatticePolygon delta = newton_polygon(p);
    LatticeWidth width = delta.lattice_width();
    PolygonClass cls = delta.classification();

    std::vector<IntPair> verts;
    for (const auto& v : delta.vertices()) verts.emplace_back(v.x, v.y);

    InvariantReport rep("poly(" + p.to_string() + ")");
    rep.add("polynomial", p.to_string(), Provenance::ExactTheorem);
    rep.add("newton_polygon", verts, Provenance::ExactTheorem);
    rep.add("classification", polygon_class_name(cls), Provenance::ExactTheorem, "Thm 8.3");
    rep.add("interior_lattice_points", delta.interior_lattice_points(),
            Provenance::ExactTheorem);
    rep.add("genus_upper_bound", delta.interior_lattice_points(), Provenance::UpperBound,
            "Baker");
    rep.add("lattice_width", width.width, Provenance::ExactTheorem);
    rep.add("width_direction", IntPair{width.direction.x, width.direction.y},
            Provenance::ExactTheorem);
    if (cls == PolygonClass::TwoDimensional) {
        rep.add("gonality_upper_bound", width.width, Provenance::UpperBound, "Castryck-Cools");
    } else {
        rep.add("genus", 0LL, Provenance::ExactTheorem, "Thm 8.3");
        rep.note("degenerate Newton polygon: the curve is not a norm curve and is birational "
                 "to the line");
        rep.note("the lattice-width gonality bound is cited only for two-dimensional polygons; "
                 "gonality is at least 1 regardless");
    }
    return rep;
}

/// Filling report: slope data, the two generators, the normalization map with
/// its constructive pullback witness, and the intersection bounds.
inline InvariantReport fill_report(const SlopeParse& parsed, long long surface_degree) {
    const Slope& r = parsed.slope;
    auto [gen1, gen2] = cr_polynomials(r);
    MonomialMap map = normalization_map(r);
    LaurentPoly2 curve =
        LaurentPoly2::monomial(r.p, r.q, 1) - LaurentPoly2::constant(1);
    LaurentPoly2 pullback = curve.substitute_monomial(map.inverse());
    BezoutBounds bounds = bezout_bounds(surface_degree, r);

    InvariantReport rep("fill(" + r.to_string() + ")");
    rep.add("slope", r.to_string(), Provenance::ExactTheorem);
    rep.add("height", height(r), Provenance::ExactTheorem, "Sec 1");
    rep.add("surface_degree", surface_degree, Provenance::ExactTheorem);
    rep.add("generators", std::vector<std::string>{gen1.to_string(), gen2.to_string()},
            Provenance::ExactTheorem, "Def 3.5");
    rep.add("map",
            std::vector<IntPair>{{map.m11(), map.m12()}, {map.m21(), map.m22()}},
            Provenance::ExactTheorem, "Lemma 3.6");
    rep.add("map_determinant", map.determinant(), Provenance::ExactTheorem);
    rep.add("pullback", pullback.to_string(), Provenance::ExactTheorem, "Lemma 3.6");
    rep.add("degree_bound", bounds.degree_bound, Provenance::UpperBound, "Thm 1.3");
    rep.add("genus_bound", bounds.genus_bound, Provenance::UpperBound, "Thm 1.2");
    if (parsed.was_reduced) rep.note("input slope was reduced to lowest terms");
    rep.note("if one cusp is geometrically isolated from the other, the degree is bounded by a "
             "constant independent of the slope; that constant depends on manifold data beyond "
             "(surface degree, slope)");
    return rep;
}

/// Trace-polynomial report with the exact closed-form verification.
inline InvariantReport fib_report(TraceKind kind, long long k) {
    TracePoly poly = trace_poly(kind, k);
    InvariantReport rep(std::string("fib(") + trace_kind_letter(kind) + ", " +
                        std::to_string(k) + ")");
    rep.add("kind", std::string(1, trace_kind_letter(kind)), Provenance::ExactTheorem,
            "Def 7.1");
    rep.add("index", k, Provenance::ExactTheorem);
    rep.add("degree", poly.degree(), Provenance::ExactTheorem);
    rep.add("coefficients", poly.coeffs, Provenance::ExactTheorem, "Def 7.1");
    rep.add("polynomial", poly.to_string(), Provenance::ExactTheorem);
    rep.add("closed_form_check", closed_form_check(kind, k), Provenance::ConsistencyCheck,
            "Def 7.1");
    return rep;
}

/// Eigenvalue and injectivity-radius bounds for one (gonality, genus) pair.
inline InvariantReport spectral_report(long long gamma, long long g) {
    SpectralBounds bounds = spectral_bounds(gamma, g);
    InvariantReport rep("spectral(gamma=" + std::to_string(gamma) + ", g=" + std::to_string(g) +
                        ")");
    rep.add("gonality", gamma, Provenance::ExactTheorem);
    rep.add("genus", g, Provenance::ExactTheorem);
    rep.add("lambda1_upper", bounds.lambda1_upper, Provenance::UpperBound, "Li-Yau");
    rep.add("injectivity_radius_upper", bounds.injectivity_radius_upper, Provenance::UpperBound,
            "Hwang-To");
    return rep;
}

}  // namespace curveinv
