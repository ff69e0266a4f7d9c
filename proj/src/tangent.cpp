#include "hyperrigid/tangent.hpp"

#include <cmath>

namespace hyperrigid {

namespace {

Vec2 edge_derivative(const ConvexBody::Edge& e, double t) {
    // p(t) = d*u/<n,u> on the edge, u = (cos t, sin t).
    const Vec2 u = unit_dir(t);
    const Vec2 du = perp(u);
    const double nu = dot(e.normal, u);
    const double ndu = dot(e.normal, du);
    return e.offset * (nu * du - ndu * u) / (nu * nu);
}

Vec2 smooth_gradient(const ConvexBody& body, Vec2 x) {
    // Gradient of the gauge at x != 0 from the implicit boundary equation
    // ((x1 - f c1)/a)^2 + ((x2 - f c2)/b)^2 = f^2.
    const Vec2 r = body.radii();
    const Vec2 c = body.center();
    const double f = minkowski_functional(body, x);
    const double y1 = (x.x - f * c.x) / (r.x * r.x);
    const double y2 = (x.y - f * c.y) / (r.y * r.y);
    const double dGdf = -2.0 * (c.x * y1 + c.y * y2) - 2.0 * f;
    return Vec2{2.0 * y1, 2.0 * y2} / -dGdf;
}

}  // namespace

Vec2 one_sided_derivative(const ConvexBody& body, double t, Side side) {
    if (!body.centered()) throw BodyError("one_sided_derivative: body not centered");
    const double r = reduce_angle(t);
    if (body.kind() == BodyKind::polygon) {
        const int v = body.vertex_index_at(r);
        int edge;
        if (v >= 0) {
            const int n = static_cast<int>(body.edges().size());
            edge = side == Side::plus ? v : (v + n - 1) % n;  // outgoing vs incoming
        } else {
            edge = body.edge_index_at(r);
        }
        return edge_derivative(body.edges()[edge], r);
    }
    const Vec2 u = unit_dir(r);
    const Vec2 du = perp(u);
    const double f = minkowski_functional(body, u);
    const double df = dot(smooth_gradient(body, u), du);
    return (f * du - df * u) / (f * f);
}

SupportLine support_line(const ConvexBody& body, double t, Side side) {
    return SupportLine{polar_point(body, t).point, one_sided_derivative(body, t, side),
                       side == Side::plus ? SupportLine::Tag::plus : SupportLine::Tag::minus};
}

double signed_side(const SupportLine& line, Vec2 z) {
    return dot(z - line.base, perp(line.direction));
}

CircleInterval face_interval(const ConvexBody& body, double t, double /*tol*/) {
    if (!body.centered()) throw BodyError("face_interval: body not centered");
    const double r = reduce_angle(t);
    if (body.smooth()) return {r, r};
    if (body.vertex_index_at(r) >= 0) return {r, r};

    const auto& params = body.vertex_params();
    const int n = static_cast<int>(params.size());
    const int e = body.edge_index_at(r);
    double lo = params[e];
    double hi = e + 1 < n ? params[e + 1] : params[0] + kTwoPi;
    if (r < lo) {  // wrap edge, query below its start: shift representative down
        lo -= kTwoPi;
        hi -= kTwoPi;
    }
    return {lo, hi};
}

}  // namespace hyperrigid
