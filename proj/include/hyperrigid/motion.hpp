#pragma once

#include <span>
#include <vector>

#include "hyperrigid/angle.hpp"
#include "hyperrigid/body.hpp"

namespace hyperrigid {

/// Orientation-preserving rotation-plus-translation z -> e^{i theta} z + c
/// under the plane/complex identification.
struct RigidMotion {
    double rot_c = 1.0;  // cos theta
    double rot_s = 0.0;  // sin theta
    Vec2 translation{};

    Vec2 apply(Vec2 z) const {
        return {rot_c * z.x - rot_s * z.y + translation.x,
                rot_s * z.x + rot_c * z.y + translation.y};
    }
    double theta() const { return std::atan2(rot_s, rot_c); }
};

struct AffineFunction {
    double ax = 0.0, ay = 0.0, c = 0.0;
    double operator()(Vec2 v) const { return ax * v.x + ay * v.y + c; }
};

/// Im(g(.)) as an affine function of the plane.
inline AffineFunction im_part(const RigidMotion& g) {
    return {g.rot_s, g.rot_c, g.translation.y};
}

/// The unique motion with g(b_point) = 0 and g(a_point) = (-|a-b|, 0).
RigidMotion chord_motion_from_points(Vec2 a_point, Vec2 b_point, double tol = kDefaultTol);

/// Chord motion of the interval [a, b]: flattens the chord [p(a):p(b)] onto
/// the real axis with p(b) at the origin and p(a) on the negative half-axis.
RigidMotion chord_motion(const ConvexBody& body, CircleInterval interval,
                         double tol = kDefaultTol);

/// max over t in I of |Im(g(p(t)))|. Exact vertex maximum for polygons,
/// bracketed golden-section maximization for smooth arcs.
double im_sup_on_arc(const ConvexBody& body, const RigidMotion& g, CircleInterval I);

/// min over t in J of |Im(g(p(t)))|.
double im_inf_on_set(const ConvexBody& body, const RigidMotion& g, CircleInterval J);
double im_inf_on_set(const ConvexBody& body, const RigidMotion& g,
                     std::span<const CircleInterval> J);

/// Distance from the arc p(J) to the union of the three full lines
/// from I = [alpha, beta]: the plus-side supporting line at p(alpha), the
/// minus-side supporting line at p(beta), and the chord line through both.
double dist_to_support_union(const ConvexBody& body, CircleInterval I, CircleInterval J);
double dist_to_support_union(const ConvexBody& body, CircleInterval I,
                             std::span<const CircleInterval> J);

/// Raised when the distance constant degenerates (c <= tol) and the caller
/// must shrink the interval toward its extreme support before retrying.
class SupportContactError : public std::runtime_error {
public:
    explicit SupportContactError(double c)
        : std::runtime_error("configuration touches its supporting lines (c ~ 0); "
                             "shrink the interval toward its extreme points"),
          c(c) {}
    double c;
};

struct NormalizedAffine {
    AffineFunction fn;  // (Im g + sup)/inf
    double sup = 0.0;   // ||Im g||_{p(I),inf}
    double inf = 0.0;   // inf_{p(J)} |Im g|
};

/// The normalized affine function built from the chord motion of I: it is
/// >= 1 on p(J), >= 0 on the cap below the chord, and <= sup/inf on p(I).
NormalizedAffine normalized_affine(const ConvexBody& body, CircleInterval I, CircleInterval J,
                                   double tol = kDefaultTol);
NormalizedAffine normalized_affine(const ConvexBody& body, CircleInterval I,
                                   std::span<const CircleInterval> J, double tol = kDefaultTol);

struct UpperBoundSegment {
    double t0 = 0.0, t1 = 0.0;
    double chord = 0.0;  // |p(t0) - p(t1)|
    double sup = 0.0;    // ||Im g_{[t0,t1]}||_{p([t0,t1]),inf}
};

struct UpperBoundTable {
    Partition partition;
    std::vector<UpperBoundSegment> segments;
    double epsilon = 0.0;        // linear ratio target: sup <= epsilon * chord
    double epsilon_angle = 0.0;  // arctan(epsilon), fed to the partition
};

/// Partition I so that every segment satisfies sup <= epsilon * chord; the
/// angle threshold is arctan(epsilon), which converts the tangent bound of
/// the segment geometry into the linear ratio.
UpperBoundTable upper_bound_partition(const ConvexBody& body, CircleInterval I, double epsilon,
                                      double tol = kDefaultTol);

struct BoundReport {
    double L = 0.0;        // perimeter
    double c = 0.0;        // distance constant
    double epsilon = 0.0;  // linear ratio
    double bound = 0.0;    // epsilon * L / c
    double bound_sum = 0.0;  // sum over segments of (epsilon/c) * chord
    double measured = 0.0;   // sum over segments of sup / c
    UpperBoundTable table;
};

/// The quantitative compression bound: sums (epsilon/c)|chord_n| over the
/// partition, capped by epsilon * L / c. Throws SupportContactError when
/// c <= tol.
BoundReport rigidity_bound(const ConvexBody& body, CircleInterval I, CircleInterval J,
                           double epsilon, double tol = kDefaultTol);
BoundReport rigidity_bound(const ConvexBody& body, CircleInterval I,
                           std::span<const CircleInterval> J, double epsilon,
                           double tol = kDefaultTol);

}  // namespace hyperrigid
