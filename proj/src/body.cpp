#include "hyperrigid/body.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

namespace hyperrigid {

namespace {

constexpr double kDedupTol = 1e-9;
constexpr double kCollinearTol = 1e-12;

double scale_of(const std::vector<Vec2>& pts) {
    double s = 1.0;
    for (const auto& p : pts) s = std::max({s, std::fabs(p.x), std::fabs(p.y)});
    return s;
}

/// Andrew monotone chain; strictly convex output (collinear points dropped).
std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Vec2 a, Vec2 b) { return dist(a, b) <= kDedupTol; }),
              pts.end());
    const int n = static_cast<int>(pts.size());
    if (n <= 2) return pts;

    const double area_tol = kCollinearTol * scale_of(pts) * scale_of(pts);
    std::vector<Vec2> hull(2 * n);
    int k = 0;
    for (int i = 0; i < n; ++i) {  // lower
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= area_tol) --k;
        hull[k++] = pts[i];
    }
    for (int i = n - 2, lower = k + 1; i >= 0; --i) {  // upper
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= area_tol) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<Vec2> normalize_polygon(std::vector<Vec2> vertices) {
    std::vector<Vec2> distinct;
    for (const auto& v : vertices) {
        bool dup = false;
        for (const auto& w : distinct)
            if (dist(v, w) <= kDedupTol) { dup = true; break; }
        if (!dup) distinct.push_back(v);
    }
    if (distinct.size() < 2)
        throw DegenerateBodyError("body degenerates to a point", /*segment=*/false);

    auto hull = convex_hull(distinct);
    if (hull.size() < 3)
        throw DegenerateBodyError("body degenerates to a segment (trivially rigid case)",
                                  /*segment=*/true);
    // Deterministic starting vertex: lexicographic minimum.
    auto lo = std::min_element(hull.begin(), hull.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::rotate(hull.begin(), lo, hull.end());
    return hull;
}

}  // namespace

ConvexBody ConvexBody::polygon(std::vector<Vec2> vertices) {
    if (vertices.size() < 3) throw BodyError("polygon needs at least 3 vertices");
    ConvexBody b;
    b.kind_ = BodyKind::polygon;
    b.vertices_ = normalize_polygon(std::move(vertices));
    b.finalize();
    return b;
}

ConvexBody ConvexBody::from_cloud(const std::vector<Vec2>& points) {
    if (points.empty()) throw BodyError("empty point cloud");
    ConvexBody b;
    b.kind_ = BodyKind::polygon;
    b.vertices_ = normalize_polygon(points);
    b.finalize();
    return b;
}

ConvexBody ConvexBody::disc(Vec2 center, double radius) {
    if (!(radius > 0.0)) throw BodyError("disc radius must be positive");
    ConvexBody b;
    b.kind_ = BodyKind::disc;
    b.center_ = center;
    b.radii_ = {radius, radius};
    b.finalize();
    return b;
}

ConvexBody ConvexBody::ellipse(Vec2 center, Vec2 radii) {
    if (!(radii.x > 0.0) || !(radii.y > 0.0)) throw BodyError("ellipse radii must be positive");
    ConvexBody b;
    b.kind_ = BodyKind::ellipse;
    b.center_ = center;
    b.radii_ = radii;
    b.finalize();
    return b;
}

void ConvexBody::finalize() {
    if (kind_ == BodyKind::polygon) {
        edges_.clear();
        const int n = static_cast<int>(vertices_.size());
        for (int i = 0; i < n; ++i) {
            const Vec2 a = vertices_[i];
            const Vec2 b = vertices_[(i + 1) % n];
            const Vec2 e = b - a;
            const Vec2 normal{e.y, -e.x};  // outward for counterclockwise order
            edges_.push_back(Edge{a, b, normal, dot(normal, a)});
        }
        centered_ = true;
        for (const auto& e : edges_)
            if (!(e.offset > 0.0)) { centered_ = false; break; }
        vertex_params_.clear();
        if (centered_) {
            std::vector<std::pair<double, Vec2>> tagged;
            for (const auto& v : vertices_) tagged.push_back({reduce_angle(std::atan2(v.y, v.x)), v});
            // Counterclockwise order means parameters are cyclically ascending;
            // rotate vertex/edge storage so they ascend outright.
            int start = 0;
            for (int i = 1; i < n; ++i)
                if (tagged[i].first < tagged[start].first) start = i;
            std::rotate(vertices_.begin(), vertices_.begin() + start, vertices_.end());
            std::rotate(edges_.begin(), edges_.begin() + start, edges_.end());
            for (int i = 0; i < n; ++i)
                vertex_params_.push_back(reduce_angle(std::atan2(vertices_[i].y, vertices_[i].x)));
            for (int i = 0; i + 1 < n; ++i)
                if (!(vertex_params_[i] < vertex_params_[i + 1]))
                    throw BodyError("polygon vertex directions not strictly increasing");
        }
    } else {
        // 0 strictly inside <=> center within the (open) scaled unit ball.
        const double qx = center_.x / radii_.x;
        const double qy = center_.y / radii_.y;
        centered_ = qx * qx + qy * qy < 1.0;
    }
}

const std::vector<Vec2>& ConvexBody::vertices() const {
    if (kind_ != BodyKind::polygon) throw BodyError("vertices(): not a polygon");
    return vertices_;
}

const std::vector<ConvexBody::Edge>& ConvexBody::edges() const {
    if (kind_ != BodyKind::polygon) throw BodyError("edges(): not a polygon");
    return edges_;
}

Vec2 ConvexBody::center() const {
    if (kind_ == BodyKind::polygon) throw BodyError("center(): not a disc/ellipse");
    return center_;
}

Vec2 ConvexBody::radii() const {
    if (kind_ == BodyKind::polygon) throw BodyError("radii(): not a disc/ellipse");
    return radii_;
}

Vec2 ConvexBody::centroid() const {
    if (kind_ != BodyKind::polygon) return center_;
    double area2 = 0.0;
    Vec2 acc{0.0, 0.0};
    const int n = static_cast<int>(vertices_.size());
    for (int i = 0; i < n; ++i) {
        const Vec2 a = vertices_[i];
        const Vec2 b = vertices_[(i + 1) % n];
        const double c = cross(a, b);
        area2 += c;
        acc = acc + c * (a + b);
    }
    return acc / (3.0 * area2);
}

ConvexBody ConvexBody::translated(Vec2 offset) const {
    ConvexBody b;
    b.kind_ = kind_;
    if (kind_ == BodyKind::polygon) {
        b.vertices_ = vertices_;
        for (auto& v : b.vertices_) v = v + offset;
    } else {
        b.center_ = center_ + offset;
        b.radii_ = radii_;
    }
    b.finalize();
    return b;
}

const std::vector<double>& ConvexBody::vertex_params() const {
    if (kind_ != BodyKind::polygon) throw BodyError("vertex_params(): not a polygon");
    if (!centered_) throw BodyError("vertex_params(): body not centered");
    return vertex_params_;
}

int ConvexBody::edge_index_at(double t) const {
    const auto& params = vertex_params();
    double r = reduce_angle(t);
    if (r < params[0]) r += kTwoPi;
    // Last range [params[n-1], params[0] + 2pi] belongs to edge n-1.
    auto it = std::upper_bound(params.begin(), params.end(), r);
    return static_cast<int>(it - params.begin()) - 1;
}

int ConvexBody::vertex_index_at(double t, double snap) const {
    const auto& params = vertex_params();
    const double r = reduce_angle(t);
    for (int i = 0; i < static_cast<int>(params.size()); ++i) {
        double d = std::fabs(r - params[i]);
        d = std::min(d, kTwoPi - d);
        if (d <= snap) return i;
    }
    return -1;
}

ConvexBody ingest_body(const std::string& spec_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(spec_text);
    } catch (const nlohmann::json::exception& e) {
        throw BodyError(std::string("body spec is not valid JSON: ") + e.what());
    }
    try {
        const std::string type = j.at("type").get<std::string>();
        auto read_vec = [](const nlohmann::json& v) -> Vec2 {
            return {v.at(0).get<double>(), v.at(1).get<double>()};
        };
        if (type == "polygon" || type == "cloud") {
            std::vector<Vec2> pts;
            for (const auto& v : j.at(type == "polygon" ? "vertices" : "points"))
                pts.push_back(read_vec(v));
            return type == "polygon" ? ConvexBody::polygon(std::move(pts))
                                     : ConvexBody::from_cloud(pts);
        }
        if (type == "disc")
            return ConvexBody::disc(read_vec(j.at("center")), j.at("radius").get<double>());
        if (type == "ellipse")
            return ConvexBody::ellipse(read_vec(j.at("center")), read_vec(j.at("radii")));
        throw BodyError("unknown body type: " + type);
    } catch (const nlohmann::json::exception& e) {
        throw BodyError(std::string("malformed body spec: ") + e.what());
    }
}

std::pair<ConvexBody, Vec2> center_body(const ConvexBody& body) {
    const Vec2 offset = -body.centroid();
    ConvexBody moved = body.translated(offset);
    if (!moved.centered()) throw BodyError("centering failed: empty interior");
    return {std::move(moved), offset};
}

double minkowski_functional(const ConvexBody& body, Vec2 x) {
    if (!body.centered()) throw BodyError("minkowski_functional: body not centered");
    if (x.x == 0.0 && x.y == 0.0) return 0.0;
    if (body.kind() == BodyKind::polygon) {
        double f = 0.0;
        for (const auto& e : body.edges()) f = std::max(f, dot(e.normal, x) / e.offset);
        return f;
    }
    // x/f on the boundary gives a quadratic in f; take the positive root in
    // the cancellation-free pairing.
    const Vec2 r = body.radii();
    const Vec2 c = body.center();
    const double qx = c.x / r.x, qy = c.y / r.y;
    const double wx = x.x / r.x, wy = x.y / r.y;
    const double A = qx * qx + qy * qy - 1.0;  // < 0 since 0 is interior
    const double B = -2.0 * (wx * qx + wy * qy);
    const double C = wx * wx + wy * wy;
    const double s = std::sqrt(B * B - 4.0 * A * C);
    return B > 0.0 ? (B + s) / (-2.0 * A) : 2.0 * C / (s - B);
}

BoundaryPoint polar_point(const ConvexBody& body, double t) {
    if (!body.centered()) throw BodyError("polar_point: body not centered");
    const double r = reduce_angle(t);
    const Vec2 u = unit_dir(r);
    if (body.kind() == BodyKind::polygon) {
        const auto& e = body.edges()[body.edge_index_at(r)];
        return {r, e.offset * u / dot(e.normal, u)};
    }
    return {r, u / minkowski_functional(body, u)};
}

ExtremeSet ExtremeSet::finite(std::vector<double> params) {
    ExtremeSet s;
    s.all_ = false;
    s.params_ = std::move(params);
    std::sort(s.params_.begin(), s.params_.end());
    return s;
}

ExtremeSet ExtremeSet::full_circle() {
    ExtremeSet s;
    s.all_ = true;
    return s;
}

bool ExtremeSet::contains(double t, double tol) const {
    if (all_) return true;
    const double r = reduce_angle(t);
    for (double p : params_) {
        double d = std::fabs(r - p);
        d = std::min(d, kTwoPi - d);
        if (d <= tol) return true;
    }
    return false;
}

ExtremeSet::Clip ExtremeSet::clip(const CircleInterval& interval, double tol) const {
    Clip out;
    if (all_) {
        if (interval.singleton()) {
            out.kind = Clip::Kind::singleton;
            out.t = interval.lo;
        } else {
            out.kind = Clip::Kind::interval;
            out.iv = interval;
        }
        return out;
    }
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (double p : params_) {
        for (int k = -1; k <= 1; ++k) {
            const double c = p + k * kTwoPi;
            if (c >= interval.lo - tol && c <= interval.hi + tol) {
                const double cc = std::clamp(c, interval.lo, interval.hi);
                if (!any) {
                    lo = hi = cc;
                    any = true;
                } else {
                    lo = std::min(lo, cc);
                    hi = std::max(hi, cc);
                }
            }
        }
    }
    if (!any) {
        out.kind = Clip::Kind::empty;
    } else if (hi - lo <= tol) {
        out.kind = Clip::Kind::singleton;
        out.t = lo;
    } else {
        out.kind = Clip::Kind::interval;
        out.iv = CircleInterval{lo, hi};
    }
    return out;
}

ExtremeSet extreme_parameters(const ConvexBody& body) {
    if (!body.centered()) throw BodyError("extreme_parameters: body not centered");
    if (body.kind() == BodyKind::polygon) return ExtremeSet::finite(body.vertex_params());
    return ExtremeSet::full_circle();
}

double perimeter(const ConvexBody& body) {
    if (!body.centered()) throw BodyError("perimeter: body not centered");
    switch (body.kind()) {
        case BodyKind::polygon: {
            double L = 0.0;
            for (const auto& e : body.edges()) L += dist(e.a, e.b);
            return L;
        }
        case BodyKind::disc:
            return kTwoPi * body.radii().x;
        case BodyKind::ellipse: {
            // Inscribed chord sums increase monotonically under subdivision.
            const Vec2 r = body.radii();
            const Vec2 c = body.center();
            auto chord_sum = [&](int n) {
                double L = 0.0;
                Vec2 prev{c.x + r.x, c.y};
                for (int i = 1; i <= n; ++i) {
                    const double a = kTwoPi * i / n;
                    const Vec2 p{c.x + r.x * std::cos(a), c.y + r.y * std::sin(a)};
                    L += dist(prev, p);
                    prev = p;
                }
                return L;
            };
            int n = 64;
            double prev = chord_sum(n);
            for (; n <= (1 << 22); n *= 2) {
                const double next = chord_sum(2 * n);
                if (next - prev < 1e-10) return next;
                prev = next;
            }
            return prev;
        }
    }
    throw BodyError("unreachable body kind");
}

}  // namespace hyperrigid
