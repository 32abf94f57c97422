#include "curveinv/tracepoly.hpp"

#include <gtest/gtest.h>

#include "curveinv/slope.hpp"

namespace curveinv {
namespace {

poly1::Coeffs C(std::initializer_list<long long> cs) {
    poly1::Coeffs out;
    for (long long c : cs) out.emplace_back(c);
    poly1::trim(out);
    return out;
}

// Independent oracle: table of f_k for a window of indices, built directly
// from the two base cases by naive forward/backward stepping.
std::vector<poly1::Coeffs> fib_table(long long lo, long long hi) {
    std::vector<poly1::Coeffs> table(hi - lo + 1);
    auto at = [&](long long k) -> poly1::Coeffs& { return table[k - lo]; };
    at(0) = {};
    at(1) = {BigInt(1)};
    for (long long k = 2; k <= hi; ++k) at(k) = poly1::sub(poly1::shift_up(at(k - 1)), at(k - 2));
    for (long long k = -1; k >= lo; --k) at(k) = poly1::sub(poly1::shift_up(at(k + 1)), at(k + 2));
    return table;
}

TEST(TracePoly, BaseCasesAndSmallValues) {
    EXPECT_TRUE(fib(0).coeffs.empty());
    EXPECT_EQ(fib(1).coeffs, C({1}));
    EXPECT_EQ(fib(2).coeffs, C({0, 1}));          // x
    EXPECT_EQ(fib(3).coeffs, C({-1, 0, 1}));      // x^2 - 1
    EXPECT_EQ(fib(4).coeffs, C({0, -2, 0, 1}));   // x^3 - 2x
    EXPECT_EQ(fib(-1).coeffs, C({-1}));           // backward recurrence
    EXPECT_EQ(fib(4).to_string(), "x^3 - 2x");

    EXPECT_EQ(fib_g(1).coeffs, C({1}));
    EXPECT_EQ(fib_g(2).coeffs, C({-1, 1}));       // x - 1
    EXPECT_EQ(fib_h(0).coeffs, C({2}));
    EXPECT_EQ(fib_h(1).coeffs, C({0, 1}));
    EXPECT_EQ(fib_h(2).coeffs, C({-2, 0, 1}));    // x^2 - 2
}

TEST(TracePoly, MatchesNaiveTable) {
    auto table = fib_table(-66, 66);
    auto at = [&](long long k) { return table[k + 66]; };
    for (long long k = -64; k <= 64; ++k) {
        EXPECT_EQ(fib(k).coeffs, at(k)) << "f_" << k;
        EXPECT_EQ(fib_g(k).coeffs, poly1::sub(at(k), at(k - 1))) << "g_" << k;
        EXPECT_EQ(fib_h(k).coeffs, poly1::sub(at(k + 1), at(k - 1))) << "h_" << k;
    }
}

TEST(TracePoly, RecurrenceHoldsForAllKinds) {
    for (TraceKind kind : {TraceKind::F, TraceKind::G, TraceKind::H}) {
        for (long long k = -64; k <= 64; ++k) {
            poly1::Coeffs lhs = poly1::add(trace_poly(kind, k + 1).coeffs,
                                           trace_poly(kind, k - 1).coeffs);
            poly1::Coeffs rhs = poly1::shift_up(trace_poly(kind, k).coeffs);
            EXPECT_EQ(lhs, rhs) << trace_kind_letter(kind) << "_" << k;
        }
    }
}

TEST(TracePoly, DegreeAndLeadingCoefficient) {
    for (long long k = -64; k <= 64; ++k) {
        if (k == 0) continue;
        const poly1::Coeffs& c = fib(k).coeffs;
        EXPECT_EQ(poly1::degree(c), llabs_checked(k) - 1);
        EXPECT_TRUE(c.back() == 1 || c.back() == -1);
    }
}

TEST(TracePoly, ClosedFormExamples) {
    EXPECT_TRUE(closed_form_check(TraceKind::H, 2));  // h_2 = x^2 - 2
    EXPECT_TRUE(closed_form_check(TraceKind::F, 1));  // base case
    EXPECT_TRUE(closed_form_check(TraceKind::G, 2));  // g_2 = x - 1
}

TEST(TracePoly, ClosedFormAllKindsUpTo64) {
    for (TraceKind kind : {TraceKind::F, TraceKind::G, TraceKind::H})
        for (long long k = -64; k <= 64; ++k)
            EXPECT_TRUE(closed_form_check(kind, k)) << trace_kind_letter(kind) << "_" << k;
}

TEST(TracePoly, FillingTraceRelationExamples) {
    EXPECT_EQ(filling_trace_relation(make_slope(1, 0).slope),
              LaurentPoly2::parse("x - 2"));
    EXPECT_EQ(filling_trace_relation(make_slope(1, 1).slope),
              LaurentPoly2::parse("x - y"));
    EXPECT_EQ(filling_trace_relation(make_slope(2, 1).slope),
              LaurentPoly2::parse("x^2 - y - 2"));
}

// Substituting x = s + 1/s, y = t + 1/t and then s = T^q, t = T^-p has to kill
// the relation: the solutions of h_p(x) = h_q(y) contain the filling locus.
TEST(TracePoly, EigenvalueConsistency) {
    const std::pair<long long, long long> slopes[] = {{1, 1}, {2, 1}, {3, 2}, {5, 3},
                                                      {-4, 7}, {9, 2}, {-11, 13}};
    for (auto [p, q] : slopes) {
        LaurentPoly2 relation = filling_trace_relation(make_slope(p, q).slope);
        LaurentPoly2 in_T;
        for (const auto& [e, c] : relation.terms()) {
            // x^i y^j -> (T^q + T^-q)^i * (T^-p + T^p)^j
            LaurentPoly2 term = LaurentPoly2::constant(c);
            LaurentPoly2 xT = LaurentPoly2::monomial(q, 0, 1) + LaurentPoly2::monomial(-q, 0, 1);
            LaurentPoly2 yT = LaurentPoly2::monomial(-p, 0, 1) + LaurentPoly2::monomial(p, 0, 1);
            for (long long i = 0; i < e.a; ++i) term = term * xT;
            for (long long i = 0; i < e.b; ++i) term = term * yT;
            in_T = in_T + term;
        }
        EXPECT_TRUE(in_T.is_zero()) << p << "/" << q;
    }
}

}  // namespace
}  // namespace curveinv
