#include "doctest.h"

#include <cmath>
#include <functional>

#include "hyperrigid/body.hpp"
#include "hyperrigid/rng.hpp"
#include "hyperrigid/verify.hpp"

using namespace hyperrigid;

namespace {

ConvexBody diamond() {
    return ConvexBody::polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

/// Oracle: gauge of a polygon by binary search on r with a point-in-polygon test.
double gauge_by_bisection(const ConvexBody& body, Vec2 x) {
    auto inside = [&](Vec2 q) {
        for (const auto& e : body.edges())
            if (dot(e.normal, q) > e.offset + 1e-13) return false;
        return true;
    };
    double lo = 0.0, hi = 1.0;
    while (!inside(x / hi)) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mid > 0.0 && inside(x / mid)) ? hi = mid : lo = mid;
    }
    return hi;
}

/// Oracle: ellipse arc length by adaptive Simpson quadrature of the speed.
double ellipse_arclength_simpson(double a, double b) {
    auto speed = [&](double t) {
        const double dx = -a * std::sin(t), dy = b * std::cos(t);
        return std::hypot(dx, dy);
    };
    auto simpson = [&](double lo, double hi) {
        return (hi - lo) / 6.0 * (speed(lo) + 4.0 * speed(0.5 * (lo + hi)) + speed(hi));
    };
    std::function<double(double, double, double, int)> adapt = [&](double lo, double hi,
                                                                   double whole, int depth) {
        const double mid = 0.5 * (lo + hi);
        const double left = simpson(lo, mid), right = simpson(mid, hi);
        if (depth > 40 || std::fabs(left + right - whole) < 1e-13) return left + right;
        return adapt(lo, mid, left, depth + 1) + adapt(mid, hi, right, depth + 1);
    };
    return adapt(0.0, kTwoPi, simpson(0.0, kTwoPi), 0);
}

}  // namespace

TEST_CASE("ingest: paper bodies and hull reduction") {
    const ConvexBody dia = ingest_body(
        R"({"type":"polygon","vertices":[[1,0],[0,1],[-1,0],[0,-1]]})");
    CHECK(dia.kind() == BodyKind::polygon);
    CHECK(dia.vertices().size() == 4);
    CHECK(dia.centered());

    const ConvexBody disc = ingest_body(R"({"type":"disc","center":[0,0],"radius":1})");
    CHECK(disc.kind() == BodyKind::disc);
    CHECK(disc.centered());

    // Interior point of the cloud drops out of the hull.
    const ConvexBody tri =
        ingest_body(R"({"type":"cloud","points":[[0,0],[1,0],[0,1],[0.2,0.2]]})");
    CHECK(tri.vertices().size() == 3);

    CHECK_THROWS_AS(ingest_body(R"({"type":"cloud","points":[[0,0],[1,1]]})"),
                    DegenerateBodyError);
    CHECK_THROWS_AS(ingest_body(R"({"type":"cloud","points":[[0,0],[1,1],[2,2],[3,3]]})"),
                    DegenerateBodyError);
    CHECK_THROWS_AS(ingest_body(R"({"type":"disc","center":[0,0],"radius":-1})"), BodyError);
    CHECK_THROWS(ingest_body("not json"));
    // Segment inputs carry the flag that lets the CLI report the trivial case.
    try {
        ingest_body(R"({"type":"cloud","points":[[-1,0],[1,0]]})");
        CHECK(false);
    } catch (const DegenerateBodyError& e) {
        CHECK(e.is_segment());
    }
}

TEST_CASE("center_body: centroid translation") {
    auto [dia, off0] = center_body(diamond());
    CHECK(off0.x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(off0.y == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(dia.centered());

    auto [disc, off1] = center_body(ConvexBody::disc({5, 5}, 1.0));
    CHECK(off1.x == doctest::Approx(-5.0));
    CHECK(off1.y == doctest::Approx(-5.0));
    CHECK(disc.center().x == doctest::Approx(0.0));

    auto [tri, off2] = center_body(ConvexBody::polygon({{0, 0}, {3, 0}, {0, 3}}));
    CHECK(off2.x == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(off2.y == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(tri.centered());
}

TEST_CASE("minkowski functional: closed forms and oracle") {
    const ConvexBody disc = ConvexBody::disc({0, 0}, 1.0);
    CHECK(minkowski_functional(disc, {3, 4}) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(minkowski_functional(disc, {0, 0}) == 0.0);

    const ConvexBody dia = diamond();
    CHECK(minkowski_functional(dia, {1, 1}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(minkowski_functional(dia, {0, 0}) == 0.0);

    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        const Vec2 x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        if (norm(x) < 1e-6) continue;
        CHECK(minkowski_functional(dia, x) ==
              doctest::Approx(gauge_by_bisection(dia, x)).epsilon(1e-10));
    }

    // Off-center smooth bodies still evaluate in closed form.
    const ConvexBody shifted = ConvexBody::disc({0.3, -0.1}, 1.0);
    REQUIRE(shifted.centered());
    for (int i = 0; i < 50; ++i) {
        const Vec2 x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const double f = minkowski_functional(shifted, x);
        if (f < 1e-9) continue;
        const Vec2 onb = x / f;
        CHECK(dist(onb, shifted.center()) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("polar point: disc and diamond") {
    const ConvexBody disc = ConvexBody::disc({0, 0}, 1.0);
    for (int i = 0; i < 360; ++i) {
        const double t = kTwoPi * i / 360;
        const Vec2 p = polar_point(disc, t).point;
        CHECK(std::fabs(p.x - std::cos(t)) <= 1e-12);
        CHECK(std::fabs(p.y - std::sin(t)) <= 1e-12);
    }

    const ConvexBody dia = diamond();
    const Vec2 mid = polar_point(dia, kPi / 4).point;
    CHECK(mid.x == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(mid.y == doctest::Approx(0.5).epsilon(1e-14));
    // Closed form on (0, pi/2): p(t) = (0,1) + (1,-1)/(1 + tan t).
    const double t = 0.3;
    const Vec2 p = polar_point(dia, t).point;
    CHECK(p.x == doctest::Approx(1.0 / (1.0 + std::tan(t))).epsilon(1e-13));
    CHECK(p.y == doctest::Approx(1.0 - 1.0 / (1.0 + std::tan(t))).epsilon(1e-13));

    const Vec2 v0 = polar_point(dia, 0.0).point;
    CHECK(v0.x == 1.0);
    CHECK(v0.y == 0.0);
}

TEST_CASE("extreme parameters") {
    const ConvexBody dia = diamond();
    const ExtremeSet ex = extreme_parameters(dia);
    REQUIRE(!ex.all());
    REQUIRE(ex.params().size() == 4);
    CHECK(ex.params()[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ex.params()[1] == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(ex.params()[2] == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(ex.params()[3] == doctest::Approx(3 * kPi / 2).epsilon(1e-12));

    CHECK(extreme_parameters(ConvexBody::disc({0, 0}, 1.0)).all());

    const ConvexBody square = ConvexBody::polygon({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    const ExtremeSet square_ex = extreme_parameters(square);
    const auto& qp = square_ex.params();
    REQUIRE(qp.size() == 4);
    for (int i = 0; i < 4; ++i)
        CHECK(qp[i] == doctest::Approx((2 * i + 1) * kPi / 4).epsilon(1e-12));

    // Shrink to the extreme support inside an interval.
    const auto clip = ex.clip(CircleInterval{0.1, kPi});
    REQUIRE(clip.kind == ExtremeSet::Clip::Kind::interval);
    CHECK(clip.iv.lo == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(clip.iv.hi == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(ex.clip(CircleInterval{0.1, 0.2}).kind == ExtremeSet::Clip::Kind::empty);
    CHECK(ex.clip(CircleInterval{1.0, 2.0}).kind == ExtremeSet::Clip::Kind::singleton);
}

TEST_CASE("perimeter: exact and chord-sum values") {
    CHECK(perimeter(ConvexBody::disc({0, 0}, 1.0)) == doctest::Approx(kTwoPi).epsilon(1e-15));
    CHECK(perimeter(diamond()) == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-15));

    const double oracle = ellipse_arclength_simpson(2.0, 1.0);
    CHECK(oracle == doctest::Approx(9.688448220547675).epsilon(1e-10));  // known value
    CHECK(perimeter(ConvexBody::ellipse({0, 0}, {2.0, 1.0})) ==
          doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("body invariant suite") {
    verify::SuiteConfig cfg;
    cfg.gauge_trials = 60;
    cfg.boundary_trials = 250;
    cfg.hull_trials = 40;
    const auto suite = verify::run_body_suite(20240811, cfg);
    for (const auto& check : suite.checks) {
        INFO(check.name << " failed=" << check.failed << " worst=" << check.worst);
        CHECK(check.failed == 0);
        CHECK(check.passed > 0);
    }
}
