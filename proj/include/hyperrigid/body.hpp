#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperrigid/geometry.hpp"

namespace hyperrigid {

class BodyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Zero-area input (segment or point). The operator system of a segment is
/// the whole algebra, so callers report this case as trivially rigid instead
/// of building geometry for it.
class DegenerateBodyError : public BodyError {
public:
    explicit DegenerateBodyError(const std::string& what, bool segment)
        : BodyError(what), is_segment_(segment) {}
    bool is_segment() const { return is_segment_; }

private:
    bool is_segment_;
};

enum class BodyKind { polygon, disc, ellipse };

/// A planar compact convex body: polygon (counterclockwise, strictly convex
/// vertices), disc, or ellipse (axis-aligned). Immutable after construction;
/// all operations on it are pure functions.
class ConvexBody {
public:
    struct Edge {
        Vec2 a, b;       // endpoints, counterclockwise
        Vec2 normal;     // outward, unnormalized (exact integer data stays exact)
        double offset;   // dot(normal, a)
    };

    static ConvexBody polygon(std::vector<Vec2> vertices);
    static ConvexBody disc(Vec2 center, double radius);
    static ConvexBody ellipse(Vec2 center, Vec2 radii);
    static ConvexBody from_cloud(const std::vector<Vec2>& points);

    BodyKind kind() const { return kind_; }
    bool centered() const { return centered_; }
    bool smooth() const { return kind_ != BodyKind::polygon; }

    const std::vector<Vec2>& vertices() const;
    const std::vector<Edge>& edges() const;
    Vec2 center() const;
    Vec2 radii() const;  // disc reports {r, r}

    Vec2 centroid() const;
    ConvexBody translated(Vec2 offset) const;

    /// Polygon vertex parameters sorted ascending in [0, 2pi); requires a
    /// centered polygon. Edge k runs over parameters
    /// [param[k], param[k+1]] (the last edge wraps to param[0] + 2pi).
    const std::vector<double>& vertex_params() const;

    /// Index of the edge whose parameter range contains t (reduced mod 2pi).
    int edge_index_at(double t) const;

    /// Index of the vertex whose parameter matches t within snap, or -1.
    int vertex_index_at(double t, double snap = 1e-12) const;

private:
    ConvexBody() = default;
    void finalize();

    BodyKind kind_ = BodyKind::polygon;
    bool centered_ = false;
    std::vector<Vec2> vertices_;
    std::vector<Edge> edges_;
    std::vector<double> vertex_params_;  // ascending; set iff centered polygon
    Vec2 center_{};
    Vec2 radii_{};
};

struct BoundaryPoint {
    double t = 0.0;
    Vec2 point{};
};

/// Parse a body description (JSON text, see README for the schema) into a
/// validated body. Point clouds are reduced to their convex hull.
ConvexBody ingest_body(const std::string& spec_text);

/// Translate so the area centroid lands at the origin. Returns the centered
/// body and the applied translation.
std::pair<ConvexBody, Vec2> center_body(const ConvexBody& body);

/// Gauge f_K(x) = inf{r > 0 : x in rK}. Requires a centered body.
double minkowski_functional(const ConvexBody& body, Vec2 x);

/// Boundary point in direction t: p(t) = (cos t, sin t)/f_K(cos t, sin t).
BoundaryPoint polar_point(const ConvexBody& body, double t);

/// Extreme points of the body, as parameters of the polar parameterization:
/// a finite list for polygons, all of [0, 2pi) for disc/ellipse.
class ExtremeSet {
public:
    static ExtremeSet finite(std::vector<double> params);
    static ExtremeSet full_circle();

    bool all() const { return all_; }
    const std::vector<double>& params() const { return params_; }

    bool contains(double t, double tol = kDefaultTol) const;

    struct Clip {
        enum class Kind { empty, singleton, interval } kind;
        double t = 0.0;       // singleton
        CircleInterval iv{};  // interval
    };
    /// Convex hull of the extreme parameters inside [lo, hi]; this is the
    /// interval shrink used when the distance constant degenerates.
    Clip clip(const CircleInterval& interval, double tol = kDefaultTol) const;

private:
    bool all_ = false;
    std::vector<double> params_;
};

ExtremeSet extreme_parameters(const ConvexBody& body);

/// Arc length of the boundary. Exact for polygons and discs; the ellipse uses
/// inscribed chord sums, refined until two refinements agree to 1e-10.
double perimeter(const ConvexBody& body);

}  // namespace hyperrigid
