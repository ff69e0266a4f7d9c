#include "hyperrigid/motion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "hyperrigid/tangent.hpp"

namespace hyperrigid {

namespace {

constexpr double kGolden = 0.6180339887498949;

/// Golden-section maximization of f on [lo, hi] (f unimodal on the bracket).
double golden_max(const std::function<double(double)>& f, double lo, double hi) {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < 120 && b - a > 1e-13 * (1.0 + std::fabs(a)); ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        }
    }
    return std::max(f1, f2);
}

/// Extremes of an affine functional along the boundary arc p(interval).
/// Polygons are exact: the functional is affine over each edge, so extremes
/// sit at arc endpoints and interior vertices, and a sign change between two
/// consecutive breakpoints on one edge pins an exact zero in between.
struct ArcExtremes {
    double max_abs = 0.0;
    double min_abs = 0.0;
};

ArcExtremes arc_affine_extremes(const ConvexBody& body, CircleInterval interval,
                                const AffineFunction& fn) {
    ArcExtremes out;
    auto value_at = [&](double t) { return fn(polar_point(body, t).point); };

    if (interval.singleton(0.0)) {
        const double v = std::fabs(value_at(interval.lo));
        return {v, v};
    }

    if (body.kind() == BodyKind::polygon) {
        std::vector<double> breaks{interval.lo};
        for (double p : body.vertex_params())
            for (int k = -1; k <= 1; ++k) {
                const double c = p + k * kTwoPi;
                if (c > interval.lo && c < interval.hi) breaks.push_back(c);
            }
        breaks.push_back(interval.hi);
        std::sort(breaks.begin(), breaks.end());

        double prev = value_at(breaks.front());
        out.max_abs = out.min_abs = std::fabs(prev);
        for (std::size_t i = 1; i < breaks.size(); ++i) {
            const double cur = value_at(breaks[i]);
            out.max_abs = std::max(out.max_abs, std::fabs(cur));
            if (prev * cur < 0.0)
                out.min_abs = 0.0;  // affine between breakpoints crosses zero
            else
                out.min_abs = std::min(out.min_abs, std::fabs(cur));
            prev = cur;
        }
        return out;
    }

    // Smooth arc: a linear functional along a convex boundary has at most two
    // monotone pieces per winding, so a bracketing pre-pass (256 samples on a
    // full revolution, proportionally fewer on short arcs) pins every local
    // extreme of |value|; golden-section sharpens the brackets.
    const int kSamples =
        std::clamp(static_cast<int>(interval.length() * 256.0 / kTwoPi) + 8, 48, 256);
    std::vector<double> vals(kSamples + 1);
    for (int i = 0; i <= kSamples; ++i)
        vals[i] = value_at(interval.lo + interval.length() * i / kSamples);

    out.max_abs = 0.0;
    out.min_abs = std::fabs(vals[0]);
    for (int i = 0; i <= kSamples; ++i) {
        out.max_abs = std::max(out.max_abs, std::fabs(vals[i]));
        out.min_abs = std::min(out.min_abs, std::fabs(vals[i]));
        if (i > 0 && vals[i - 1] * vals[i] < 0.0) out.min_abs = 0.0;
    }
    auto param = [&](int i) { return interval.lo + interval.length() * i / kSamples; };
    for (int i = 1; i < kSamples; ++i) {
        const double a = std::fabs(vals[i - 1]), m = std::fabs(vals[i]), b = std::fabs(vals[i + 1]);
        if (m >= a && m >= b)
            out.max_abs = std::max(
                out.max_abs,
                golden_max([&](double t) { return std::fabs(value_at(t)); }, param(i - 1), param(i + 1)));
        if (out.min_abs > 0.0 && m <= a && m <= b)
            out.min_abs = std::min(
                out.min_abs,
                -golden_max([&](double t) { return -std::fabs(value_at(t)); }, param(i - 1), param(i + 1)));
    }
    return out;
}

AffineFunction line_distance_functional(Vec2 base, Vec2 direction) {
    const Vec2 n = perp(direction) / norm(direction);
    return {n.x, n.y, -dot(n, base)};
}

void require_normalized(const CircleInterval& iv, const char* who) {
    if (!iv.normalized())
        throw std::invalid_argument(std::string(who) + ": interval must be non-wrapping in [0, 2pi)");
}

}  // namespace

RigidMotion chord_motion_from_points(Vec2 a_point, Vec2 b_point, double tol) {
    const Vec2 d = b_point - a_point;
    const double len = norm(d);
    if (len <= tol) throw std::invalid_argument("chord_motion: degenerate chord (p(a) ~ p(b))");
    // e^{i theta} = |d| / d, c = -e^{i theta} b.
    RigidMotion g;
    g.rot_c = d.x / len;
    g.rot_s = -d.y / len;
    g.translation = {-(g.rot_c * b_point.x - g.rot_s * b_point.y),
                     -(g.rot_s * b_point.x + g.rot_c * b_point.y)};
    return g;
}

RigidMotion chord_motion(const ConvexBody& body, CircleInterval interval, double tol) {
    require_normalized(interval, "chord_motion");
    if (!(interval.lo < interval.hi))
        throw std::invalid_argument("chord_motion: interval must satisfy a < b");
    return chord_motion_from_points(polar_point(body, interval.lo).point,
                                    polar_point(body, interval.hi).point, tol);
}

double im_sup_on_arc(const ConvexBody& body, const RigidMotion& g, CircleInterval I) {
    require_normalized(I, "im_sup_on_arc");
    return arc_affine_extremes(body, I, im_part(g)).max_abs;
}

double im_inf_on_set(const ConvexBody& body, const RigidMotion& g, CircleInterval J) {
    require_normalized(J, "im_inf_on_set");
    return arc_affine_extremes(body, J, im_part(g)).min_abs;
}

double im_inf_on_set(const ConvexBody& body, const RigidMotion& g,
                     std::span<const CircleInterval> J) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& piece : J) best = std::min(best, im_inf_on_set(body, g, piece));
    return best;
}

double dist_to_support_union(const ConvexBody& body, CircleInterval I, CircleInterval J) {
    return dist_to_support_union(body, I, std::span<const CircleInterval>(&J, 1));
}

double dist_to_support_union(const ConvexBody& body, CircleInterval I,
                             std::span<const CircleInterval> J) {
    require_normalized(I, "dist_to_support_union");
    if (!(I.lo < I.hi))
        throw std::invalid_argument("dist_to_support_union: I must satisfy alpha < beta");
    const SupportLine plus = support_line(body, I.lo, Side::plus);
    const SupportLine minus = support_line(body, I.hi, Side::minus);
    const Vec2 pa = polar_point(body, I.lo).point;
    const Vec2 pb = polar_point(body, I.hi).point;

    const AffineFunction fns[3] = {
        line_distance_functional(plus.base, plus.direction),
        line_distance_functional(minus.base, minus.direction),
        line_distance_functional(pa, pb - pa),
    };
    double best = std::numeric_limits<double>::infinity();
    for (const auto& piece : J) {
        require_normalized(piece, "dist_to_support_union");
        for (const auto& fn : fns)
            best = std::min(best, arc_affine_extremes(body, piece, fn).min_abs);
    }
    return best;
}

NormalizedAffine normalized_affine(const ConvexBody& body, CircleInterval I, CircleInterval J,
                                   double tol) {
    return normalized_affine(body, I, std::span<const CircleInterval>(&J, 1), tol);
}

NormalizedAffine normalized_affine(const ConvexBody& body, CircleInterval I,
                                   std::span<const CircleInterval> J, double tol) {
    const RigidMotion g = chord_motion(body, I, tol);
    NormalizedAffine out;
    out.sup = im_sup_on_arc(body, g, I);
    out.inf = im_inf_on_set(body, g, J);
    if (out.inf <= tol) throw SupportContactError(out.inf);
    const AffineFunction im = im_part(g);
    out.fn = {im.ax / out.inf, im.ay / out.inf, (im.c + out.sup) / out.inf};
    return out;
}

UpperBoundTable upper_bound_partition(const ConvexBody& body, CircleInterval I, double epsilon,
                                      double tol) {
    if (!(epsilon > 0.0 && epsilon < kPi / 2.0))
        throw std::invalid_argument("upper_bound_partition: epsilon must be in (0, pi/2)");
    UpperBoundTable out;
    out.epsilon = epsilon;
    out.epsilon_angle = std::atan(epsilon);
    out.partition = angle_partition(body, I, out.epsilon_angle, tol);
    const auto& k = out.partition.knots;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        const CircleInterval seg{k[i], k[i + 1]};
        const RigidMotion g = chord_motion(body, seg, tol);
        UpperBoundSegment row;
        row.t0 = seg.lo;
        row.t1 = seg.hi;
        row.chord = dist(polar_point(body, seg.lo).point, polar_point(body, seg.hi).point);
        row.sup = im_sup_on_arc(body, g, seg);
        out.segments.push_back(row);
    }
    return out;
}

BoundReport rigidity_bound(const ConvexBody& body, CircleInterval I, CircleInterval J,
                           double epsilon, double tol) {
    return rigidity_bound(body, I, std::span<const CircleInterval>(&J, 1), epsilon, tol);
}

BoundReport rigidity_bound(const ConvexBody& body, CircleInterval I,
                           std::span<const CircleInterval> J, double epsilon, double tol) {
    BoundReport rep;
    rep.epsilon = epsilon;
    rep.c = dist_to_support_union(body, I, J);
    if (rep.c <= tol) throw SupportContactError(rep.c);
    rep.L = perimeter(body);
    rep.table = upper_bound_partition(body, I, epsilon, tol);
    for (const auto& seg : rep.table.segments) {
        rep.bound_sum += epsilon * seg.chord / rep.c;
        rep.measured += seg.sup / rep.c;
    }
    rep.bound = epsilon * rep.L / rep.c;
    return rep;
}

}  // namespace hyperrigid
