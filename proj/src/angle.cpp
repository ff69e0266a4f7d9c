#include "hyperrigid/angle.hpp"

#include <algorithm>
#include <cmath>

namespace hyperrigid {

namespace {

bool in_triangle(Vec2 q, Vec2 a, Vec2 b, Vec2 c, double tol) {
    const double orient = cross(b - a, c - a);
    if (std::fabs(orient) <= tol * tol) {
        // Degenerate triangle (s = t at a corner): accept points on the segment hull.
        const double lo_x = std::min({a.x, b.x, c.x}) - tol, hi_x = std::max({a.x, b.x, c.x}) + tol;
        const double lo_y = std::min({a.y, b.y, c.y}) - tol, hi_y = std::max({a.y, b.y, c.y}) + tol;
        return q.x >= lo_x && q.x <= hi_x && q.y >= lo_y && q.y <= hi_y;
    }
    const double sgn = orient > 0.0 ? 1.0 : -1.0;
    return sgn * cross(b - a, q - a) >= -tol && sgn * cross(c - b, q - b) >= -tol &&
           sgn * cross(a - c, q - c) >= -tol;
}

/// Vertices of the polygon with parameters in [s, t] (2pi-shift aware).
std::vector<Vec2> arc_test_points(const ConvexBody& body, double s, double t) {
    std::vector<Vec2> pts;
    if (body.kind() == BodyKind::polygon) {
        const auto& params = body.vertex_params();
        const auto& verts = body.vertices();
        for (std::size_t i = 0; i < params.size(); ++i)
            for (int k = -1; k <= 1; ++k) {
                const double c = params[i] + k * kTwoPi;
                if (c >= s && c <= t) pts.push_back(verts[i]);
            }
    } else {
        constexpr int kArcSamples = 64;
        for (int i = 1; i < kArcSamples - 1; ++i)
            pts.push_back(polar_point(body, s + (t - s) * i / (kArcSamples - 1)).point);
    }
    return pts;
}

}  // namespace

AngleResult angle(const ConvexBody& body, double s, double t, double tol) {
    if (!body.centered()) throw BodyError("angle: body not centered");
    s = reduce_angle(s);
    t = reduce_angle(t);
    if (s > t) std::swap(s, t);

    const Vec2 ps = polar_point(body, s).point;
    const Vec2 pt = polar_point(body, t).point;
    const Vec2 dplus = one_sided_derivative(body, s, Side::plus);
    const Vec2 dminus = one_sided_derivative(body, t, Side::minus);

    const double cr = cross(dplus, dminus);
    if (std::fabs(cr) <= tol * norm(dplus) * norm(dminus)) {
        // Parallel; equal lines iff the base points are mutually incident.
        const double off = std::fabs(cross(pt - ps, dplus)) / norm(dplus);
        if (off <= tol) return {kPi, AngleCase::equal_lines, std::nullopt};
        return {0.0, AngleCase::parallel_disjoint, std::nullopt};
    }

    const Vec2 z = ps + (cross(pt - ps, dminus) / cr) * dplus;
    for (const Vec2& q : arc_test_points(body, s, t))
        if (!in_triangle(q, ps, z, pt, tol)) return {0.0, AngleCase::outside, std::nullopt};

    const double ip = dot(dminus, -1.0 * dplus) / (norm(dminus) * norm(dplus));
    return {std::acos(std::clamp(ip, -1.0, 1.0)), AngleCase::proper_intersection, z};
}

Partition angle_partition(const ConvexBody& body, CircleInterval interval, double epsilon,
                          double tol) {
    if (!(epsilon > 0.0 && epsilon < kPi / 2.0))
        throw std::invalid_argument("angle_partition: epsilon must be in (0, pi/2)");
    if (!(interval.length() > 0.0))
        throw std::invalid_argument("angle_partition: interval must have positive length");
    if (!interval.normalized())
        throw std::invalid_argument("angle_partition: interval must be non-wrapping in [0, 2pi)");

    const double threshold = kPi - epsilon;
    std::vector<double> knots{interval.lo, interval.hi};
    if (body.kind() == BodyKind::polygon) {
        for (double v : body.vertex_params())
            if (v > interval.lo && v < interval.hi && angle(body, v, v, tol).value <= threshold)
                knots.push_back(v);
        std::sort(knots.begin(), knots.end());
    }

    Partition out;
    out.epsilon = epsilon;
    constexpr int kMaxDepth = 48;
    // Depth-first left to right keeps the knot list ordered as it grows.
    struct Span {
        double lo, hi;
        int depth;
    };
    std::vector<Span> stack;
    for (std::size_t i = knots.size(); i-- > 1;) stack.push_back({knots[i - 1], knots[i], 0});
    out.knots.push_back(interval.lo);
    while (!stack.empty()) {
        const Span sp = stack.back();
        stack.pop_back();
        if (angle(body, sp.lo, sp.hi, tol).value >= threshold) {
            out.knots.push_back(sp.hi);
            continue;
        }
        if (sp.depth >= kMaxDepth) throw PartitionDepthError(sp.lo, sp.hi);
        const double mid = 0.5 * (sp.lo + sp.hi);
        stack.push_back({mid, sp.hi, sp.depth + 1});
        stack.push_back({sp.lo, mid, sp.depth + 1});
    }
    return out;
}

}  // namespace hyperrigid
