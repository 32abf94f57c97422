#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "curveinv/laurent.hpp"
#include "curveinv/numeric.hpp"

namespace curveinv {

struct LatticePoint {
    long long x = 0;
    long long y = 0;

    friend bool operator==(const LatticePoint& lhs, const LatticePoint& rhs) {
        return lhs.x == rhs.x && lhs.y == rhs.y;
    }
    friend bool operator<(const LatticePoint& lhs, const LatticePoint& rhs) {
        return lhs.x != rhs.x ? lhs.x < rhs.x : lhs.y < rhs.y;
    }
};

enum class PolygonClass { Point, Segment, TwoDimensional };

inline std::string polygon_class_name(PolygonClass c) {
    switch (c) {
        case PolygonClass::Point: return "point";
        case PolygonClass::Segment: return "segment";
        case PolygonClass::TwoDimensional: return "two-dimensional";
    }
    return "?";
}

struct LatticeWidth {
    long long width = 0;
    LatticePoint direction;  // primitive witness, first nonzero coordinate positive
};

namespace detail {

inline __int128 cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return static_cast<__int128>(a.x - o.x) * (b.y - o.y) -
           static_cast<__int128>(a.y - o.y) * (b.x - o.x);
}

}  // namespace detail

/// Convex lattice polygon stored as its extreme points in counterclockwise
/// order, starting from the lexicographically smallest vertex.  Degenerate
/// hulls are kept as a two-point segment or a single point.
class LatticePolygon {
public:
    static LatticePolygon hull_of(std::vector<LatticePoint> pts) {
        if (pts.empty()) throw std::domain_error("hull of an empty point set");
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        LatticePolygon out;
        if (pts.size() == 1) {
            out.verts_ = pts;
            return out;
        }
        std::vector<LatticePoint> hull;
        auto build = [&hull](const LatticePoint& p) {
            while (hull.size() >= 2 &&
                   detail::cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
                hull.pop_back();
            hull.push_back(p);
        };
        for (const auto& p : pts) build(p);
        std::size_t lower = hull.size() + 1;
        for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
            while (hull.size() >= lower &&
                   detail::cross(hull[hull.size() - 2], hull[hull.size() - 1], *it) <= 0)
                hull.pop_back();
            hull.push_back(*it);
        }
        hull.pop_back();  // closes back at the first vertex
        out.verts_ = std::move(hull);
        return out;
    }

    const std::vector<LatticePoint>& vertices() const { return verts_; }

    PolygonClass classification() const {
        if (verts_.size() == 1) return PolygonClass::Point;
        if (verts_.size() == 2) return PolygonClass::Segment;
        return PolygonClass::TwoDimensional;
    }

    /// Closed or strict membership, exact integer arithmetic.
    bool contains(const LatticePoint& p, bool strict = false) const {
        switch (classification()) {
            case PolygonClass::Point:
                return !strict && p == verts_[0];
            case PolygonClass::Segment: {
                if (strict) return false;
                if (detail::cross(verts_[0], verts_[1], p) != 0) return false;
                return std::min(verts_[0].x, verts_[1].x) <= p.x &&
                       p.x <= std::max(verts_[0].x, verts_[1].x) &&
                       std::min(verts_[0].y, verts_[1].y) <= p.y &&
                       p.y <= std::max(verts_[0].y, verts_[1].y);
            }
            case PolygonClass::TwoDimensional:
                for (std::size_t i = 0; i < verts_.size(); ++i) {
                    __int128 c = detail::cross(verts_[i], verts_[(i + 1) % verts_.size()], p);
                    if (strict ? c <= 0 : c < 0) return false;
                }
                return true;
        }
        return false;
    }

    /// Number of lattice points strictly inside; zero for segments and points.
    long long interior_lattice_points() const {
        if (classification() != PolygonClass::TwoDimensional) return 0;
        auto [lo, hi] = bounding_box();
        long long count = 0;
        for (long long x = lo.x + 1; x < hi.x; ++x)
            for (long long y = lo.y + 1; y < hi.y; ++y)
                if (contains({x, y}, /*strict=*/true)) ++count;
        return count;
    }

    /// Minimal width max<v,p> - min<v,p> over primitive integer directions v,
    /// with the witness direction attaining it.  Ties are broken by taking the
    /// graded-lex smallest canonical direction.  Zero for segments and points.
    LatticeWidth lattice_width() const;

    std::pair<LatticePoint, LatticePoint> bounding_box() const {
        LatticePoint lo = verts_[0], hi = verts_[0];
        for (const auto& v : verts_) {
            lo.x = std::min(lo.x, v.x);
            lo.y = std::min(lo.y, v.y);
            hi.x = std::max(hi.x, v.x);
            hi.y = std::max(hi.y, v.y);
        }
        return {lo, hi};
    }

    /// Width along a fixed (not necessarily primitive) direction.
    long long width_along(const LatticePoint& v) const {
        long long lo = 0, hi = 0;
        bool first = true;
        for (const auto& p : verts_) {
            long long d = v.x * p.x + v.y * p.y;
            if (first) {
                lo = hi = d;
                first = false;
            } else {
                lo = std::min(lo, d);
                hi = std::max(hi, d);
            }
        }
        return hi - lo;
    }

    friend bool operator==(const LatticePolygon& lhs, const LatticePolygon& rhs) {
        return lhs.verts_ == rhs.verts_;
    }

private:
    // Width with early exit once the running spread reaches `limit`.
    long long width_along_capped(const LatticePoint& v, long long limit) const {
        long long lo = v.x * verts_[0].x + v.y * verts_[0].y;
        long long hi = lo;
        for (std::size_t i = 1; i < verts_.size(); ++i) {
            long long d = v.x * verts_[i].x + v.y * verts_[i].y;
            lo = std::min(lo, d);
            hi = std::max(hi, d);
            if (hi - lo >= limit) return hi - lo;
        }
        return hi - lo;
    }

    std::vector<LatticePoint> verts_;
};

inline LatticeWidth LatticePolygon::lattice_width() const {
    switch (classification()) {
        case PolygonClass::Point:
            return {0, {0, 1}};
        case PolygonClass::Segment: {
            long long dx = verts_[1].x - verts_[0].x;
            long long dy = verts_[1].y - verts_[0].y;
            long long g = std::gcd(llabs_checked(dx), llabs_checked(dy));
            LatticePoint dir{-dy / g, dx / g};
            if (dir.x < 0 || (dir.x == 0 && dir.y < 0)) dir = {-dir.x, -dir.y};
            return {0, dir};
        }
        case PolygonClass::TwoDimensional:
            break;
    }

    long long w0 = std::min(width_along({1, 0}), width_along({0, 1}));

    // Any direction v achieving width <= w0 pairs against two independent
    // vertex-difference vectors u1, u2 with |<v,ui>| <= w0, which confines v
    // to the parallelogram G^-1 [-w0,w0]^2 where G has rows u1, u2.  Picking
    // the pair of largest determinant keeps the search box small.
    std::vector<LatticePoint> diffs;
    for (std::size_t i = 1; i < verts_.size(); ++i)
        diffs.push_back({verts_[i].x - verts_[0].x, verts_[i].y - verts_[0].y});
    LatticePoint u1{}, u2{};
    __int128 best_det = 0;
    for (std::size_t i = 0; i < diffs.size(); ++i)
        for (std::size_t j = i + 1; j < diffs.size(); ++j) {
            __int128 det = static_cast<__int128>(diffs[i].x) * diffs[j].y -
                           static_cast<__int128>(diffs[i].y) * diffs[j].x;
            if (det < 0) det = -det;
            if (det > best_det) {
                best_det = det;
                u1 = diffs[i];
                u2 = diffs[j];
            }
        }
    long long det = static_cast<long long>(best_det);
    long long b1 =
        std::max<long long>(1, w0 * (llabs_checked(u1.y) + llabs_checked(u2.y)) / det);
    long long b2 =
        std::max<long long>(1, w0 * (llabs_checked(u1.x) + llabs_checked(u2.x)) / det);

    LatticeWidth best{-1, {0, 1}};
    auto consider = [&](long long vx, long long vy) {
        if (std::gcd(llabs_checked(vx), llabs_checked(vy)) != 1) return;
        long long w = width_along_capped({vx, vy},
                                         best.width < 0 ? (1LL << 62) : best.width);
        if (best.width < 0 || w < best.width) best = {w, {vx, vy}};
    };
    for (long long grade = 1; grade <= b1 + b2; ++grade) {
        for (long long vx = 0; vx <= std::min(grade, b1); ++vx) {
            long long vy = grade - vx;
            if (vy > b2) continue;
            if (vx == 0) {
                consider(0, vy);
            } else if (vy == 0) {
                consider(vx, 0);
            } else {
                consider(vx, -vy);
                consider(vx, vy);
            }
        }
    }
    return best;
}

/// Convex hull of the support of a nonzero Laurent polynomial.
inline LatticePolygon newton_polygon(const LaurentPoly2& p) {
    if (p.is_zero()) throw std::domain_error("the zero polynomial has no Newton polygon");
    std::vector<LatticePoint> pts;
    for (const auto& e : p.support()) pts.push_back({e.a, e.b});
    return LatticePolygon::hull_of(std::move(pts));
}

/// Dimension classification of the polygon.  A segment or point certifies a
/// non-norm curve with geometric genus zero, hence birational to the line.
inline PolygonClass norm_curve_test(const LatticePolygon& poly) {
    return poly.classification();
}

}  // namespace curveinv
