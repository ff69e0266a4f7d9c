#pragma once

#include <optional>
#include <vector>

#include "hyperrigid/body.hpp"
#include "hyperrigid/tangent.hpp"

namespace hyperrigid {

enum class AngleCase { parallel_disjoint, equal_lines, proper_intersection, outside };

struct AngleResult {
    double value = 0.0;  // radians in [0, pi]
    AngleCase kind = AngleCase::parallel_disjoint;
    std::optional<Vec2> apex;  // proper_intersection only
};

/// Angle between the supporting lines at p(s) (plus side) and p(t) (minus
/// side), classified into four cases: parallel disjoint lines give 0, equal
/// lines give pi, a proper crossing z with the arc p([s,t]) inside the
/// triangle (p(s), z, p(t)) gives the arccos value at the apex, anything else
/// gives 0. Arguments are reduced mod 2pi and symmetrized (s > t swaps).
AngleResult angle(const ConvexBody& body, double s, double t, double tol = kDefaultTol);

struct Partition {
    std::vector<double> knots;  // strictly increasing, endpoints = interval
    double epsilon = 0.0;
};

class PartitionDepthError : public std::runtime_error {
public:
    PartitionDepthError(double lo, double hi)
        : std::runtime_error("angle_partition: bisection depth exhausted"), lo(lo), hi(hi) {}
    double lo, hi;
};

/// Partition of [a, b] with angle(t_n, t_{n+1}) >= pi - epsilon for every
/// consecutive pair. Corner parameters whose self-angle already fails the
/// threshold are seeded as knots; remaining gaps are closed by bisection.
Partition angle_partition(const ConvexBody& body, CircleInterval interval, double epsilon,
                          double tol = kDefaultTol);

}  // namespace hyperrigid
