#include "hyperrigid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperrigid/angle.hpp"
#include "hyperrigid/tangent.hpp"
#include "hyperrigid/wotsot.hpp"

namespace hyperrigid::verify {

namespace {

/// One named check accumulating pass/fail and the worst slack (negative
/// slack = violation margin for >=-style checks).
struct Check {
    CheckResult result;
    explicit Check(std::string name) { result.name = std::move(name); }
    void expect(bool ok, double slack = 0.0) {
        (ok ? result.passed : result.failed) += 1;
        result.worst = std::min(result.worst, slack);
    }
    void expect_ge(double value, double tol) { expect(value >= -tol, value); }
    void expect_small(double value, double tol) {
        expect(std::fabs(value) <= tol, tol - std::fabs(value));
    }
};

ConvexBody diamond() {
    return ConvexBody::polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

std::vector<Vec2> boundary_probe_points(const ConvexBody& body, int smooth_samples = 360) {
    std::vector<Vec2> pts;
    if (body.kind() == BodyKind::polygon) {
        pts = body.vertices();
    } else {
        for (int i = 0; i < smooth_samples; ++i)
            pts.push_back(polar_point(body, kTwoPi * i / smooth_samples).point);
    }
    return pts;
}

std::vector<Vec2> extreme_probe_points(const ConvexBody& body) {
    return body.kind() == BodyKind::polygon ? body.vertices() : boundary_probe_points(body, 48);
}

/// Disc configuration for the compression-chain checks: dim-8 PVM with four
/// sites on each of the two spec intervals.
struct ChainFixture {
    ConvexBody body = ConvexBody::disc({0, 0}, 1.0);
    CircleInterval I{0.0, kPi / 2.0};
    CircleInterval J{kPi, 3.0 * kPi / 2.0};
    OperatorMeasure pvm;
    ChainFixture() {
        pvm = pvm_from_params(body, {0.0, kPi / 6.0, kPi / 3.0, kPi / 2.0, kPi, 7.0 * kPi / 6.0,
                                     4.0 * kPi / 3.0, 3.0 * kPi / 2.0});
    }
};

}  // namespace

ConvexBody random_convex_polygon(Rng& rng, int max_vertices) {
    for (;;) {
        const int n = rng.uniform_int(4, std::max(4, max_vertices));
        std::vector<Vec2> pts;
        for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
        try {
            return center_body(ConvexBody::from_cloud(pts)).first;
        } catch (const BodyError&) {
            continue;  // degenerate draw
        }
    }
}

ConvexBody random_body(Rng& rng) {
    switch (rng.uniform_int(0, 2)) {
        case 0:
            return random_convex_polygon(rng);
        case 1: {
            const double r = rng.uniform(0.5, 2.0);
            const bool off = rng.uniform() < 0.33;
            return ConvexBody::disc({off ? rng.uniform(-0.3, 0.3) * r : 0.0,
                                     off ? rng.uniform(-0.3, 0.3) * r : 0.0},
                                    r);
        }
        default: {
            const Vec2 radii{rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0)};
            const bool off = rng.uniform() < 0.33;
            return ConvexBody::ellipse({off ? rng.uniform(-0.25, 0.25) * radii.x : 0.0,
                                        off ? rng.uniform(-0.25, 0.25) * radii.y : 0.0},
                                       radii);
        }
    }
}

std::pair<CircleInterval, CircleInterval> random_disjoint_intervals(Rng& rng, double min_gap) {
    for (;;) {
        double u[4];
        for (auto& v : u) v = rng.uniform(0.0, kTwoPi * 0.999);
        std::sort(u, u + 4);
        if (u[1] - u[0] < min_gap || u[2] - u[1] < min_gap || u[3] - u[2] < min_gap ||
            kTwoPi - u[3] + u[0] < min_gap)
            continue;
        return {CircleInterval{u[0], u[1]}, CircleInterval{u[2], u[3]}};
    }
}

std::vector<Vec2> brute_force_hull(const std::vector<Vec2>& pts) {
    std::vector<Vec2> distinct;
    for (const auto& p : pts) {
        bool dup = false;
        for (const auto& q : distinct)
            if (dist(p, q) <= 1e-9) { dup = true; break; }
        if (!dup) distinct.push_back(p);
    }
    const int n = static_cast<int>(distinct.size());
    std::vector<Vec2> hull;
    for (int i = 0; i < n; ++i) {
        bool interior = false;
        for (int a = 0; a < n && !interior; ++a)
            for (int b = a + 1; b < n && !interior; ++b) {
                if (a == i || b == i) continue;
                const Vec2 d = distinct[b] - distinct[a];
                // Strictly between two others on a line.
                if (std::fabs(cross(distinct[i] - distinct[a], d)) <= 1e-12 &&
                    dot(distinct[i] - distinct[a], distinct[i] - distinct[b]) < 0.0)
                    interior = true;
                for (int c = b + 1; c < n && !interior; ++c) {
                    if (c == i) continue;
                    const Vec2 pa = distinct[a], pb = distinct[b], pc = distinct[c];
                    const double o = cross(pb - pa, pc - pa);
                    if (std::fabs(o) <= 1e-12) continue;
                    const double s = o > 0 ? 1.0 : -1.0;
                    if (s * cross(pb - pa, distinct[i] - pa) >= 1e-12 &&
                        s * cross(pc - pb, distinct[i] - pb) >= 1e-12 &&
                        s * cross(pa - pc, distinct[i] - pc) >= 1e-12)
                        interior = true;
                }
            }
        if (!interior) hull.push_back(distinct[i]);
    }
    return hull;
}

SuiteResult run_body_suite(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    SuiteResult suite{"body", {}};

    Check homogeneity("gauge homogeneity f(s*x) = s*f(x)");
    Check subadd("gauge subadditivity f(x+y) <= f(x)+f(y)");
    Check boundary("boundary consistency f(p(t)) = 1");
    Check periodic("polar periodicity p(t) = p(t + 2pi) bitwise");
    Check hull("ingest hull matches brute-force oracle");

    for (long trial = 0; trial < cfg.gauge_trials; ++trial) {
        const ConvexBody body = random_body(rng);
        const double exact_tol = body.kind() == BodyKind::polygon ? 1e-9 : 1e-12;
        for (int i = 0; i < 8; ++i) {
            const Vec2 x{rng.uniform(-3, 3), rng.uniform(-3, 3)};
            const Vec2 y{rng.uniform(-3, 3), rng.uniform(-3, 3)};
            const double s = rng.uniform(0.001, 10.0);
            const double f = minkowski_functional(body, x);
            homogeneity.expect_small(minkowski_functional(body, s * x) - s * f,
                                     exact_tol * (1.0 + s * f));
            subadd.expect_ge(
                f + minkowski_functional(body, y) - minkowski_functional(body, x + y), 1e-9);
        }
    }

    {
        Rng body_rng = rng.fork(11);
        const ConvexBody bodies[] = {diamond(), random_convex_polygon(body_rng),
                                     ConvexBody::disc({0, 0}, 1.0),
                                     ConvexBody::ellipse({0, 0}, {2.0, 1.0})};
        for (const auto& body : bodies)
            for (long i = 0; i < cfg.boundary_trials; ++i) {
                const double t = rng.uniform(0.0, kTwoPi);
                boundary.expect_small(
                    minkowski_functional(body, polar_point(body, t).point) - 1.0, 1e-9);
                // t + 2pi adds exactly when t sits on a 2^-20 grid below 8 - 2pi.
                const double tg = std::floor(rng.uniform(0.0, 1.7) * 1048576.0) / 1048576.0;
                const auto a = polar_point(body, tg);
                const auto b = polar_point(body, tg + kTwoPi);
                periodic.expect(a.point.x == b.point.x && a.point.y == b.point.y);
            }
    }

    for (long trial = 0; trial < cfg.hull_trials; ++trial) {
        const int n = rng.uniform_int(3, 12);
        std::vector<Vec2> pts;
        for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
        const std::vector<Vec2> expected = brute_force_hull(pts);
        if (expected.size() < 3) continue;
        const ConvexBody body = ConvexBody::from_cloud(pts);
        const auto& got = body.vertices();
        bool match = got.size() == expected.size();
        if (match)
            for (const auto& v : got) {
                bool found = false;
                for (const auto& w : expected)
                    if (dist(v, w) <= 1e-9) { found = true; break; }
                if (!found) { match = false; break; }
            }
        hull.expect(match);
    }

    suite.checks = {homogeneity.result, subadd.result, boundary.result, periodic.result,
                    hull.result};
    return suite;
}

SuiteResult run_tangent_suite(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    SuiteResult suite{"tangent", {}};

    Check support("supporting-line side test");
    Check speed("derivative magnitude >= 1/f_K(e^{it})");
    Check limits("one-sided derivative limits at vertices");
    Check secant("scalar gauge secant inequality, monotone slopes");
    Check remleft("origin left of every tangent");
    Check chart("chart formula for the gauge derivative");

    for (long trial = 0; trial < cfg.support_trials; ++trial) {
        const ConvexBody body = random_body(rng);
        const double t = rng.uniform(0.0, kTwoPi);
        const Side side = rng.uniform() < 0.5 ? Side::plus : Side::minus;
        const SupportLine line = support_line(body, t, side);
        double worst = 0.0;
        for (const Vec2& q : boundary_probe_points(body))
            worst = std::min(worst, signed_side(line, q) / std::max(1.0, norm(line.direction)));
        support.expect_ge(worst, 1e-9);
        speed.expect_ge(norm(line.direction) - 1.0 / minkowski_functional(body, unit_dir(t)),
                        1e-9);
        remleft.expect_ge(signed_side(line, {0.0, 0.0}), 1e-9);
    }

    for (int trial = 0; trial < 50; ++trial) {
        // The fixed step h must stay well inside the adjacent edges and the
        // parameterization speed |p|^2/d must stay tame, so this check draws
        // polygons with inradius >= 0.3 and vertex gaps >= 0.01.
        ConvexBody body = random_convex_polygon(rng);
        for (;;) {
            double inradius = std::numeric_limits<double>::infinity();
            for (const auto& e : body.edges())
                inradius = std::min(inradius, e.offset / norm(e.normal));
            double gap = kTwoPi;
            const auto& vp = body.vertex_params();
            for (std::size_t i = 0; i < vp.size(); ++i) {
                const double next = i + 1 < vp.size() ? vp[i + 1] : vp[0] + kTwoPi;
                gap = std::min(gap, next - vp[i]);
            }
            if (inradius >= 0.3 && gap >= 0.01) break;
            body = random_convex_polygon(rng);
        }
        const double h = 1e-6;
        for (double tv : body.vertex_params()) {
            limits.expect_small(dist(one_sided_derivative(body, tv - h, Side::plus),
                                     one_sided_derivative(body, tv, Side::minus)),
                                1e-4);
            limits.expect_small(dist(one_sided_derivative(body, tv + h, Side::minus),
                                     one_sided_derivative(body, tv, Side::plus)),
                                1e-4);
        }
    }

    for (long trial = 0; trial < cfg.secant_trials; ++trial) {
        const ConvexBody body = random_body(rng);
        auto f = [&](double s) { return minkowski_functional(body, {1.0, s}); };
        double v[3] = {rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        std::sort(v, v + 3);
        const double a = v[0], x = v[1], b = v[2];
        if (x - a < 1e-6 || b - x < 1e-6) continue;
        const double s_ax = (f(x) - f(a)) / (x - a);
        const double s_ab = (f(b) - f(a)) / (b - a);
        const double s_xb = (f(b) - f(x)) / (b - x);
        secant.expect_ge(s_ab - s_ax, 1e-9);
        secant.expect_ge(s_xb - s_ab, 1e-9);
        const double h = 1e-7;
        secant.expect_ge((f(x + h) - f(x)) / h - (f(a + h) - f(a)) / h, 1e-5);
    }

    for (int trial = 0; trial < 200; ++trial) {
        const ConvexBody body = random_body(rng);
        const double a = rng.uniform(-0.7, 0.7);
        if (body.kind() == BodyKind::polygon) {
            bool near_vertex = false;
            for (double tv : body.vertex_params()) {
                double d = std::fabs(reduce_angle(a) - tv);
                d = std::min(d, kTwoPi - d);
                if (d < 1e-3) near_vertex = true;
            }
            if (near_vertex) continue;
        }
        // Chart h = 1/cos on (-pi/2, pi/2): the derivative of f_K(e^{ia})
        // recovered from the derivative of p~(a) = f_K(h(a) e^{ia}).
        const double h = 1e-6;
        auto fk = [&](double t) { return minkowski_functional(body, unit_dir(t)); };
        auto ptilde = [&](double t) {
            return minkowski_functional(body, unit_dir(t) / std::cos(t));
        };
        const double direct = (fk(a + h) - fk(a - h)) / (2.0 * h);
        const double hv = 1.0 / std::cos(a);
        const double hprime = std::sin(a) / (std::cos(a) * std::cos(a));
        const double via_chart =
            (1.0 / hv) * ((ptilde(a + h) - ptilde(a - h)) / (2.0 * h) - fk(a) * hprime);
        chart.expect_small(direct - via_chart, 1e-4 * (1.0 + std::fabs(direct)));
    }

    suite.checks = {support.result, speed.result,   limits.result,
                    secant.result,  remleft.result, chart.result};
    return suite;
}

SuiteResult run_angle_suite(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    SuiteResult suite{"angle", {}};

    Check range("angle range [0, pi] and exact symmetry");
    Check face("same-face pairs give equal lines");
    Check continuity("angle continuity at smooth parameters");
    Check collapse("angle -> pi on shrinking one-sided intervals");
    Check valid("partition validity under re-checking");
    Check anglesum("polygon exterior angles sum to 2pi");

    for (long trial = 0; trial < cfg.angle_trials; ++trial) {
        const ConvexBody body = random_body(rng);
        const double s = rng.uniform(0.0, kTwoPi);
        const double t = rng.uniform(0.0, kTwoPi);
        const AngleResult st = angle(body, s, t);
        const AngleResult ts = angle(body, t, s);
        range.expect(st.value >= 0.0 && st.value <= kPi && st.value == ts.value);
    }

    for (int trial = 0; trial < 200; ++trial) {
        const ConvexBody body = random_convex_polygon(rng);
        const auto& params = body.vertex_params();
        const int n = static_cast<int>(params.size());
        const int e = rng.uniform_int(0, n - 1);
        const double lo = params[e];
        const double hi = e + 1 < n ? params[e + 1] : params[0] + kTwoPi;
        const double s = lo + (hi - lo) * rng.uniform(0.05, 0.45);
        const double t = lo + (hi - lo) * rng.uniform(0.55, 0.95);
        const AngleResult res = angle(body, reduce_angle(s), reduce_angle(t));
        face.expect(res.kind == AngleCase::equal_lines && res.value == kPi);
    }

    for (int trial = 0; trial < 50; ++trial) {
        Rng body_rng = rng.fork(trial + 101);
        ConvexBody body = body_rng.uniform() < 0.5
                              ? ConvexBody::disc({0, 0}, body_rng.uniform(0.5, 2.0))
                              : ConvexBody::ellipse({0, 0}, {body_rng.uniform(0.5, 2.0),
                                                             body_rng.uniform(0.5, 2.0)});
        const double t = rng.uniform(0.3, kTwoPi - 0.3);
        const double at_t = angle(body, t, t).value;  // pi on a C1 boundary
        continuity.expect_small(at_t - kPi, 1e-9);
        double prev = kPi;
        for (int n = 4; n <= 20; ++n) {
            const double d = std::ldexp(1.0, -n);
            const double gap = std::fabs(angle(body, t - d, t + d).value - at_t);
            continuity.expect(gap <= prev + 1e-12, prev + 1e-12 - gap);
            prev = gap;
        }
        continuity.expect_small(prev, 1e-3);
    }

    {
        const ConvexBody disc = ConvexBody::disc({0, 0}, 1.0);
        for (int trial = 0; trial < 200; ++trial) {
            const double t = rng.uniform(0.1, kTwoPi - 0.2);
            const double a = t + rng.uniform(0.0, 0.05);
            const double b = a + rng.uniform(1e-4, 0.05);
            collapse.expect_ge(angle(disc, a, b).value - (kPi - (b - a)), 1e-9);
        }
    }

    for (long trial = 0; trial < cfg.partition_trials; ++trial) {
        const ConvexBody body = random_body(rng);
        auto [I, J] = random_disjoint_intervals(rng);
        (void)J;
        const double eps = trial % 2 == 0 ? 0.3 : 0.1;
        const Partition part = angle_partition(body, I, eps);
        bool ok = part.knots.front() == I.lo && part.knots.back() == I.hi;
        for (std::size_t i = 0; i + 1 < part.knots.size() && ok; ++i) {
            ok = part.knots[i] < part.knots[i + 1] &&
                 angle(body, part.knots[i], part.knots[i + 1]).value >= kPi - eps - 1e-12;
        }
        valid.expect(ok);
    }

    for (int trial = 0; trial < 100; ++trial) {
        const ConvexBody body = random_convex_polygon(rng);
        double total = 0.0;
        for (double tv : body.vertex_params()) total += kPi - angle(body, tv, tv).value;
        anglesum.expect_small(total - kTwoPi, 1e-9);
    }

    suite.checks = {range.result,    face.result,  continuity.result,
                    collapse.result, valid.result, anglesum.result};
    return suite;
}

SuiteResult run_motion_suite(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    SuiteResult suite{"motion", {}};

    Check isometry("chord motion preserves distances");
    Check anchors("chord anchor conditions");
    Check sign("Im(g) <= 0 on partitioned segment arcs");
    Check dis1("im_inf over p(J) >= support-union distance");
    Check dis2("support-union distance monotone under interval nesting");
    Check gtilde("normalized affine bounds on p(J), ex(K), p(I)");
    Check ratio("per-segment sup <= tan-adjusted epsilon * chord");

    for (int trial = 0; trial < 500; ++trial) {
        const ConvexBody body = random_body(rng);
        auto [I, J] = random_disjoint_intervals(rng);
        (void)J;
        const RigidMotion g = chord_motion(body, I);
        const Vec2 x{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        const Vec2 y{rng.uniform(-3, 3), rng.uniform(-3, 3)};
        isometry.expect_small(dist(g.apply(x), g.apply(y)) - dist(x, y), 1e-12 * (1 + dist(x, y)));
        const Vec2 ga = g.apply(polar_point(body, I.lo).point);
        const Vec2 gb = g.apply(polar_point(body, I.hi).point);
        anchors.expect_small(ga.y, 1e-12);
        anchors.expect_small(gb.y, 1e-12);
        anchors.expect_small(gb.x, 1e-12);
        anchors.expect(ga.x < gb.x, gb.x - ga.x);
    }

    for (long trial = 0; trial < cfg.distance_trials; ++trial) {
        const ConvexBody body = random_body(rng);
        auto [I, J] = random_disjoint_intervals(rng);
        const double c = dist_to_support_union(body, I, J);
        const RigidMotion g = chord_motion(body, I);
        dis1.expect_ge(im_inf_on_set(body, g, J) - c, 1e-9);

        // Nested intervals: [a, b] inside [alpha, beta], J elsewhere.
        double u[6];
        for (auto& v : u) v = rng.uniform(0.0, kTwoPi * 0.999);
        std::sort(u, u + 6);
        if (u[1] - u[0] > 1e-3 && u[2] - u[1] > 1e-3 && u[3] - u[2] > 1e-3 &&
            u[4] - u[3] > 0.05 && u[5] - u[4] > 1e-3 && kTwoPi - u[5] + u[0] > 0.05) {
            const CircleInterval outer{u[0], u[3]}, inner{u[1], u[2]}, Jn{u[4], u[5]};
            dis2.expect_ge(dist_to_support_union(body, inner, Jn) -
                               dist_to_support_union(body, outer, Jn),
                           1e-9);
        }
    }

    long gtilde_done = 0;
    for (long trial = 0; trial < 4 * cfg.gtilde_trials && gtilde_done < cfg.gtilde_trials;
         ++trial) {
        const ConvexBody body = random_body(rng);
        auto [I, J] = random_disjoint_intervals(rng);
        const UpperBoundTable table = upper_bound_partition(body, I, 0.3);
        for (const auto& segrow : table.segments) {
            const CircleInterval seg{segrow.t0, segrow.t1};
            const RigidMotion g = chord_motion(body, seg);
            for (int i = 0; i <= 16; ++i)
                sign.expect(g.apply(polar_point(body, seg.lo + seg.length() * i / 16).point).y <=
                            1e-9);
            NormalizedAffine na;
            try {
                na = normalized_affine(body, seg, J);
            } catch (const SupportContactError&) {
                continue;  // J touches the supporting configuration of this segment
            }
            ++gtilde_done;
            for (int i = 0; i <= 16; ++i)
                gtilde.expect_ge(na.fn(polar_point(body, J.lo + J.length() * i / 16).point) - 1.0,
                                 1e-9);
            for (const Vec2& q : extreme_probe_points(body)) gtilde.expect_ge(na.fn(q), 1e-9);
            for (int i = 0; i <= 16; ++i)
                gtilde.expect_ge(na.sup / na.inf + 1e-9 -
                                     na.fn(polar_point(body, seg.lo + seg.length() * i / 16).point),
                                 1e-9);
        }
    }

    for (long trial = 0; trial < cfg.partition_trials; ++trial) {
        const ConvexBody body = random_body(rng);
        auto [I, J] = random_disjoint_intervals(rng);
        (void)J;
        const double epsilons[3] = {0.3, 0.1, 0.01};
        const double eps = epsilons[trial % 3];
        const UpperBoundTable table = upper_bound_partition(body, I, eps);
        for (const auto& seg : table.segments) {
            ratio.expect_ge(eps * seg.chord + 1e-9 - seg.sup, 1e-12);
            const double ang = angle(body, seg.t0, seg.t1).value;
            ratio.expect_ge(std::tan(kPi - ang) * seg.chord + 1e-9 - seg.sup, 1e-12);
        }
    }

    suite.checks = {isometry.result, anchors.result, sign.result, dis1.result,
                    dis2.result,     gtilde.result,  ratio.result};
    return suite;
}

SuiteResult run_operator_suite(std::uint64_t seed, const SuiteConfig& cfg) {
    Rng rng(seed);
    SuiteResult suite{"operator", {}};

    Check brown("block compression norm inequality");
    Check chain("compression chain on the disc fixture");
    Check schwarz("Schwarz step for compressed measures");
    Check closure("measure outputs Hermitian / PSD");
    Check bary("barycenter rigidity at diamond vertices");
    Check coreq("near-zero deviations force atomwise equality");
    Check wotsot("WOT/SOT families: bounds and identity");

    for (long trial = 0; trial < cfg.brown_trials; ++trial) {
        const int n = cfg.brown_dim;
        const Matrix A = random_psd(n, rng);
        const Matrix U = random_unitary(n, rng);
        // Random 4-block orthogonal decomposition.
        std::vector<int> cut{0, rng.uniform_int(1, n - 3), 0, 0, n};
        cut[2] = rng.uniform_int(cut[1] + 1, n - 2);
        cut[3] = rng.uniform_int(cut[2] + 1, n - 1);
        std::vector<Matrix> projections;
        for (int b = 0; b < 4; ++b) {
            Matrix P(n, n);
            for (int k = cut[b]; k < cut[b + 1]; ++k)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) P(i, j) += U(i, k) * std::conj(U(j, k));
            projections.push_back(std::move(P));
        }
        const BrownCheck bc = brown_inequality(A, projections);
        brown.expect_ge(bc.rhs - bc.lhs, 1e-9);
    }

    {
        const ChainFixture fx;
        const double epsilons[3] = {1e-1, 1e-2, 1e-3};
        for (long trial = 0; trial < cfg.chain_trials; ++trial) {
            const OperatorMeasure povm = perturb_moment_matched(fx.pvm, rng, 1e-8);
            double prev_bound = std::numeric_limits<double>::infinity();
            double bound_per_eps = 0.0;
            for (double eps : epsilons) {
                const ChainReport rep =
                    compression_chain(fx.body, fx.pvm, povm, fx.I, fx.J, eps);
                chain.expect(rep.ok(1e-9));
                chain.expect(rep.bound < prev_bound, prev_bound - rep.bound);
                prev_bound = rep.bound;
                // The bound scales linearly in epsilon (it is eps * L / c).
                if (bound_per_eps == 0.0) bound_per_eps = rep.bound / eps;
                chain.expect_small(rep.bound / eps - bound_per_eps, 1e-9 * bound_per_eps);
            }

            // Schwarz: ||phi(chi_J) pi(chi_Ic)||^2 <= ||pi(chi_Ic) phi(chi_J) pi(chi_Ic)||.
            const Matrix phiJ = apply_measure(povm, arc_predicate(fx.J));
            Matrix piIc = Matrix::identity(fx.pvm.dimension) -
                          apply_measure(fx.pvm, arc_predicate(fx.I));
            const double lhs = spectral_norm(phiJ * piIc);
            const double rhs = max_abs_eigenvalue(piIc * phiJ * piIc);
            schwarz.expect_ge(rhs - lhs * lhs, 1e-9);

            // Self-adjointness / positivity closure under measure operations.
            const Matrix pos = apply_measure(
                povm, SiteFunction([](Vec2 v) { return 1.5 + v.x; }));  // f >= 0 on the disc
            closure.expect(pos.is_hermitian(1e-11));
            closure.expect_ge(min_eigenvalue(pos), 1e-9);
        }
    }

    {
        const ConvexBody d = diamond();
        std::vector<Vec2> sites = d.vertices();
        for (int i = 0; i < 4; ++i) {
            const BarycenterResult r = barycenter_rigidity(sites, sites[i]);
            bary.expect(r.feasible && r.unique);
            if (r.unique) bary.expect_small(r.witnesses[0][i] - 1.0, 1e-9);
        }
        const BarycenterResult center = barycenter_rigidity(sites, {0.0, 0.0});
        bary.expect(center.feasible && !center.unique && center.witnesses.size() >= 2);
        const BarycenterResult off = barycenter_rigidity(sites, {5.0, 5.0});
        bary.expect(!off.feasible);
    }

    {
        // Deviation probe over the four vertex singletons and complements;
        // all optima ~0 forces the witness to coincide with the PVM atomwise.
        const ConvexBody d = diamond();
        const OperatorMeasure pvm = pvm_from_params(d, d.vertex_params());
        std::vector<Vec2> grid;
        for (const auto& atom : pvm.atoms) grid.push_back(atom.site);
        DeviationOptions opts;
        opts.restarts = cfg.deviation_restarts;
        opts.seed = seed ^ 0xD1CE;
        double max_dev = 0.0;
        OperatorMeasure last_witness;
        for (int v = 0; v < 4; ++v) {
            const Vec2 site = grid[v];
            const SitePredicate single = [site](Vec2 q) { return dist(q, site) <= 1e-9; };
            const SitePredicate complement = [site](Vec2 q) { return dist(q, site) > 1e-9; };
            for (const auto& F : {single, complement}) {
                const DeviationResult res = deviation_search(pvm, grid, F, opts);
                max_dev = std::max(max_dev, res.max_deviation);
                last_witness = res.witness;
            }
        }
        coreq.expect_small(max_dev, 1e-6);
        if (max_dev <= 1e-6)
            for (std::size_t a = 0; a < pvm.atoms.size(); ++a)
                coreq.expect_small(
                    (last_witness.atoms[a].weight - pvm.atoms[a].weight).frobenius_norm(), 1e-6);
    }

    {
        const int dim = 64, count = 32;
        const auto control = shift_cosine_family(dim, count);
        const auto rows = wot_sot_metrics(control, Matrix::zero(dim, dim), std::nullopt);
        for (const auto& row : rows) {
            wotsot.expect_ge(std::ldexp(1.0, 1 - row.index) - row.d_w, 1e-15);
            wotsot.expect_ge(row.d_s - 0.25, 1e-12);
        }
        const auto symmetry = sign_flip_family(dim, count);
        const Matrix limit = Matrix::identity(dim);
        const std::vector<Vec2> allowed{{1.0, 0.0}, {-1.0, 0.0}};
        const auto srows = wot_sot_metrics(symmetry, limit, allowed);
        for (std::size_t i = 0; i < symmetry.size(); ++i) {
            wotsot.expect_small(sot_identity_residual(symmetry[i], limit), 1e-9);
            wotsot.expect(sot_bound_slack(symmetry[i], limit) <= 1e-9);
        }
        for (std::size_t i = 1; i < srows.size(); ++i)
            wotsot.expect(srows[i].d_w < srows[i - 1].d_w && srows[i].d_s < srows[i - 1].d_s);
    }

    suite.checks = {brown.result,   chain.result, schwarz.result, closure.result,
                    bary.result,    coreq.result, wotsot.result};
    return suite;
}

std::vector<SuiteResult> run_suites(const std::string& which, std::uint64_t seed,
                                    const SuiteConfig& cfg) {
    std::vector<SuiteResult> out;
    const bool all = which == "all";
    if (all || which == "body") out.push_back(run_body_suite(seed, cfg));
    if (all || which == "tangent") out.push_back(run_tangent_suite(seed, cfg));
    if (all || which == "angle") out.push_back(run_angle_suite(seed, cfg));
    if (all || which == "motion") out.push_back(run_motion_suite(seed, cfg));
    if (all || which == "operator") out.push_back(run_operator_suite(seed, cfg));
    if (out.empty()) throw std::invalid_argument("unknown suite: " + which);
    return out;
}

}  // namespace hyperrigid::verify
