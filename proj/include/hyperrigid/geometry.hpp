#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hyperrigid {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Default tolerance for geometric predicates on exact representations.
inline constexpr double kDefaultTol = 1e-9;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline Vec2 operator*(Vec2 v, double s) { return s * v; }
inline Vec2 operator/(Vec2 v, double s) { return {v.x / s, v.y / s}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Multiplication by i under the plane/complex identification: (x,y) -> (-y,x).
inline Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

inline double norm2(Vec2 v) { return dot(v, v); }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

inline Vec2 unit_dir(double t) { return {std::cos(t), std::sin(t)}; }

/// Reduce an angle into [0, 2pi). fmod is exact, so values already in range
/// pass through bit-identically and t + 2pi reduces back to t whenever the
/// sum t + 2pi was computed without rounding.
inline double reduce_angle(double t) {
    double r = std::fmod(t, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

/// Closed parameter interval [lo, hi] for boundary arcs, lo <= hi,
/// hi - lo <= 2pi. Canonical intervals have lo in [0, 2pi) and hi < 2pi;
/// face queries may return a representative shifted by 2pi when the face
/// spans the parameter wrap.
struct CircleInterval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool singleton(double tol = 0.0) const { return hi - lo <= tol; }

    /// Membership of a (non-reduced) parameter, up to 2pi shifts.
    bool contains(double t, double tol = 0.0) const {
        const double r = reduce_angle(t);
        for (int k = -1; k <= 1; ++k) {
            const double c = r + k * kTwoPi;
            if (c >= lo - tol && c <= hi + tol) return true;
        }
        return false;
    }

    bool normalized() const { return lo >= 0.0 && lo <= hi && hi < kTwoPi; }
};

inline CircleInterval make_interval(double lo, double hi) {
    if (!(lo <= hi)) throw std::invalid_argument("interval: lo must not exceed hi");
    if (!(hi - lo <= kTwoPi)) throw std::invalid_argument("interval: length exceeds 2pi");
    return {lo, hi};
}

/// Split a user-facing interval given as (a, b) on the circle into one or two
/// canonical non-wrapping intervals. a > b means the interval wraps through 0.
inline std::vector<CircleInterval> split_wrapping(double a, double b) {
    const double ra = reduce_angle(a);
    const double rb = reduce_angle(b);
    if (ra <= rb) return {CircleInterval{ra, rb}};
    std::vector<CircleInterval> parts;
    parts.push_back(CircleInterval{ra, std::nextafter(kTwoPi, 0.0)});
    parts.push_back(CircleInterval{0.0, rb});
    return parts;
}

}  // namespace hyperrigid
