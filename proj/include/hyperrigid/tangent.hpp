#pragma once

#include "hyperrigid/body.hpp"
#include "hyperrigid/geometry.hpp"

namespace hyperrigid {

enum class Side { minus, plus };

/// Oriented line acting as a supporting hyperplane (built from a one-sided
/// derivative of the polar parameterization) or as a chord. Directions are
/// kept unnormalized: the magnitude carries the parameterization speed, which
/// is bounded below by 1/f_K(cos t, sin t).
struct SupportLine {
    enum class Tag { minus, plus, chord };
    Vec2 base{};
    Vec2 direction{};
    Tag tag = Tag::chord;
};

/// One-sided derivative p'_-(t) or p'_+(t) of the polar parameterization.
/// Exact case analysis for polygons (edge formula; at a vertex the plus side
/// uses the outgoing edge, the minus side the incoming one), closed form for
/// disc/ellipse.
Vec2 one_sided_derivative(const ConvexBody& body, double t, Side side);

/// Line through p(t) with direction p'_{side}(t); the body lies in one closed
/// half plane bounded by it.
SupportLine support_line(const ConvexBody& body, double t, Side side);

/// <z - base, i*direction>; >= 0 means z lies on the body's side (left of the
/// oriented line).
double signed_side(const SupportLine& line, Vec2 z);

/// Parameter range of the smallest face containing p(t): the full edge range
/// if p(t) lies in an open edge, [t, t] at a vertex or on a smooth boundary.
/// When the edge spans the parameter wrap the returned representative is
/// shifted so that it still contains the reduced t (its lo may be negative).
CircleInterval face_interval(const ConvexBody& body, double t, double tol = kDefaultTol);

}  // namespace hyperrigid
