#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curveinv/laurent.hpp"
#include "curveinv/numeric.hpp"
#include "curveinv/slope.hpp"

namespace curveinv {

namespace poly1 {

/// Dense one-variable polynomials: coefficient vectors in ascending degree,
/// no trailing zeros, the zero polynomial is the empty vector.
using Coeffs = std::vector<BigInt>;

inline void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

inline Coeffs add(const Coeffs& lhs, const Coeffs& rhs) {
    Coeffs out(std::max(lhs.size(), rhs.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < lhs.size()) out[i] += lhs[i];
        if (i < rhs.size()) out[i] += rhs[i];
    }
    trim(out);
    return out;
}

inline Coeffs sub(const Coeffs& lhs, const Coeffs& rhs) {
    Coeffs out(std::max(lhs.size(), rhs.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < lhs.size()) out[i] += lhs[i];
        if (i < rhs.size()) out[i] -= rhs[i];
    }
    trim(out);
    return out;
}

inline Coeffs mul(const Coeffs& lhs, const Coeffs& rhs) {
    if (lhs.empty() || rhs.empty()) return {};
    Coeffs out(lhs.size() + rhs.size() - 1);
    for (std::size_t i = 0; i < lhs.size(); ++i)
        for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs[i] * rhs[j];
    trim(out);
    return out;
}

inline Coeffs shift_up(const Coeffs& c) {  // multiply by the variable
    if (c.empty()) return {};
    Coeffs out(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) out[i + 1] = c[i];
    return out;
}

inline long long degree(const Coeffs& c) {
    return static_cast<long long>(c.size()) - 1;  // -1 for the zero polynomial
}

/// Display like "x^3 - 2x"; coefficients juxtaposed, descending degree.
inline std::string to_string(const Coeffs& c, const std::string& var = "x") {
    if (c.empty()) return "0";
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        bool neg = c[i] < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        BigInt mag = neg ? BigInt(-c[i]) : c[i];
        if (mag != 1 || i == 0) out += mag.str();
        if (i >= 1) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

/// Embed into the two-variable Laurent ring along the chosen axis.
inline LaurentPoly2 embed(const Coeffs& c, bool along_x) {
    LaurentPoly2 out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        long long e = static_cast<long long>(i);
        out = out + LaurentPoly2::monomial(along_x ? e : 0, along_x ? 0 : e, c[i]);
    }
    return out;
}

}  // namespace poly1

enum class TraceKind { F, G, H };

inline char trace_kind_letter(TraceKind k) {
    switch (k) {
        case TraceKind::F: return 'f';
        case TraceKind::G: return 'g';
        case TraceKind::H: return 'h';
    }
    return '?';
}

/// One member of the trace-polynomial families f_k, g_k, h_k defined by
/// f_0 = 0, f_1 = 1, f_{k+1} + f_{k-1} = x*f_k, g_k = f_k - f_{k-1} and
/// h_k = f_{k+1} - f_{k-1}.  Negative indices run the recurrence backward.
struct TracePoly {
    TraceKind kind;
    long long index;
    poly1::Coeffs coeffs;

    long long degree() const { return poly1::degree(coeffs); }
    std::string to_string(const std::string& var = "x") const {
        return poly1::to_string(coeffs, var);
    }
};

namespace detail {

/// Returns (f_k, f_{k+1}).
inline std::pair<poly1::Coeffs, poly1::Coeffs> fib_pair(long long k) {
    poly1::Coeffs lo = {};   // f_0
    poly1::Coeffs hi = {1};  // f_1
    if (k >= 0) {
        for (long long j = 0; j < k; ++j) {
            poly1::Coeffs next = poly1::sub(poly1::shift_up(hi), lo);
            lo = std::move(hi);
            hi = std::move(next);
        }
    } else {
        for (long long j = 0; j > k; --j) {
            poly1::Coeffs prev = poly1::sub(poly1::shift_up(lo), hi);
            hi = std::move(lo);
            lo = std::move(prev);
        }
    }
    return {lo, hi};
}

}  // namespace detail

inline TracePoly trace_poly(TraceKind kind, long long k) {
    switch (kind) {
        case TraceKind::F:
            return {kind, k, detail::fib_pair(k).first};
        case TraceKind::G: {
            auto [fkm1, fk] = detail::fib_pair(k - 1);
            return {kind, k, poly1::sub(fk, fkm1)};
        }
        case TraceKind::H: {
            auto [fkm1, fk] = detail::fib_pair(k - 1);
            poly1::Coeffs fkp1 = poly1::sub(poly1::shift_up(fk), fkm1);
            return {kind, k, poly1::sub(fkp1, fkm1)};
        }
    }
    throw std::logic_error("unreachable trace kind");
}

inline TracePoly fib(long long k) { return trace_poly(TraceKind::F, k); }
inline TracePoly fib_g(long long k) { return trace_poly(TraceKind::G, k); }
inline TracePoly fib_h(long long k) { return trace_poly(TraceKind::H, k); }

/// Substitute x = s + 1/s into a one-variable polynomial, yielding a Laurent
/// polynomial in s (stored on the first axis of a LaurentPoly2).
inline LaurentPoly2 substitute_s_plus_sinv(const poly1::Coeffs& c) {
    LaurentPoly2 x_of_s = LaurentPoly2::monomial(1, 0, 1) + LaurentPoly2::monomial(-1, 0, 1);
    LaurentPoly2 out;
    for (std::size_t i = c.size(); i-- > 0;)
        out = out * x_of_s + LaurentPoly2::constant(c[i]);
    return out;
}

/// Verifies the closed form for the given kind and index as an exact Laurent
/// identity in s, after clearing the stated denominator:
///   f_k * (s - 1/s) = s^k - s^-k
///   g_k * (s + 1)   = s^k + s^(1-k)
///   h_k             = s^k + s^-k
inline bool closed_form_check(TraceKind kind, long long k) {
    LaurentPoly2 value = substitute_s_plus_sinv(trace_poly(kind, k).coeffs);
    auto spow = [](long long e) { return LaurentPoly2::monomial(e, 0, 1); };
    switch (kind) {
        case TraceKind::F:
            return value * (spow(1) - spow(-1)) == spow(k) - spow(-k);
        case TraceKind::G:
            return value * (spow(1) + LaurentPoly2::constant(1)) == spow(k) + spow(1 - k);
        case TraceKind::H:
            return value == spow(k) + spow(-k);
    }
    return false;
}

/// The relation h_p(x) - h_q(y) cutting the filled canonical component inside
/// the unfilled one; x and y are the boundary trace coordinates of the filled
/// cusp.  Requires a reduced slope.
inline LaurentPoly2 filling_trace_relation(const Slope& r) {
    LaurentPoly2 hp = poly1::embed(trace_poly(TraceKind::H, r.p).coeffs, true);
    LaurentPoly2 hq = poly1::embed(trace_poly(TraceKind::H, r.q).coeffs, false);
    return hp - hq;
}

}  // namespace curveinv
