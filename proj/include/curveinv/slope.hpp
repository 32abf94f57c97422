#pragma once

#include <numeric>
#include <string>

#include "curveinv/numeric.hpp"

namespace curveinv {

/// A Dehn-filling slope p/q in lowest terms with q >= 0.  Zero is (0,1) and
/// infinity is (1,0); those are the only representatives of 0 and infinity.
struct Slope {
    long long p = 0;
    long long q = 1;

    std::string to_string() const {
        if (q == 0) return "inf";
        if (q == 1) return std::to_string(p);
        return std::to_string(p) + "/" + std::to_string(q);
    }

    friend bool operator==(const Slope& lhs, const Slope& rhs) {
        return lhs.p == rhs.p && lhs.q == rhs.q;
    }
};

struct SlopeParse {
    Slope slope;
    bool was_reduced = false;  // input was not in lowest terms (or had q < 0)
};

/// Builds the reduced slope for a numerator/denominator pair.  0/0 is
/// rejected; anything/0 is the infinity slope (1,0).
inline SlopeParse make_slope(long long p, long long q) {
    if (p == 0 && q == 0) throw ParseError("slope 0/0 is undefined");
    SlopeParse out;
    if (q < 0) {
        p = -p;
        q = -q;
        out.was_reduced = true;
    }
    long long g = std::gcd(llabs_checked(p), q);
    if (g > 1) {
        p /= g;
        q /= g;
        out.was_reduced = true;
    }
    if (q == 0 && p != 1) {
        p = 1;  // g removed |p| already unless p was negative
        out.was_reduced = true;
    }
    out.slope = {p, q};
    return out;
}

/// Reads `p/q`, a bare integer `p`, or `inf`.
inline SlopeParse parse_slope(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "1/0") return make_slope(1, 0);
    auto read_int = [](const std::string& s) -> long long {
        if (s.empty()) throw ParseError("empty integer in slope");
        std::size_t idx = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &idx);
        } catch (const std::exception&) {
            throw ParseError("bad slope component '" + s + "'");
        }
        if (idx != s.size()) throw ParseError("bad slope component '" + s + "'");
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return make_slope(read_int(text), 1);
    return make_slope(read_int(text.substr(0, slash)), read_int(text.substr(slash + 1)));
}

/// Naive height max(|p|, |q|); equals 1 for the slopes 0 and infinity.
inline long long height(const Slope& r) {
    return std::max(llabs_checked(r.p), r.q);
}

}  // namespace curveinv
