#include "doctest.h"

#include <cmath>

#include "hyperrigid/measure.hpp"
#include "hyperrigid/verify.hpp"

using namespace hyperrigid;

namespace {

ConvexBody diamond() {
    return ConvexBody::polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

OperatorMeasure two_point_pvm() {
    OperatorMeasure m;
    m.dimension = 2;
    m.kind = MeasureKind::pvm;
    Matrix p0(2, 2), p1(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    m.atoms.push_back({{1, 0}, p0});
    m.atoms.push_back({{-1, 0}, p1});
    return m;
}

}  // namespace

TEST_CASE("validate_measure") {
    const MeasureDiagnostics d0 = validate_measure(two_point_pvm());
    CHECK(d0.unit_residual <= 1e-12);
    CHECK(d0.psd_residual <= 1e-12);
    CHECK(d0.projection_residual <= 1e-12);
    CHECK(d0.orthogonality_residual <= 1e-12);
    CHECK(d0.valid_pvm(1e-10));

    // I/2 twice: a POVM, not a PVM.
    OperatorMeasure half;
    half.dimension = 2;
    half.kind = MeasureKind::povm;
    Matrix h = Matrix::identity(2);
    h *= 0.5;
    half.atoms.push_back({{1, 0}, h});
    half.atoms.push_back({{-1, 0}, h});
    const MeasureDiagnostics d1 = validate_measure(half);
    CHECK(d1.valid_povm(1e-10));
    CHECK(!d1.valid_pvm(1e-10));
    CHECK(d1.projection_residual == doctest::Approx(0.25).epsilon(1e-12));

    // Weights summing to 0.9 I: unit residual 0.1.
    OperatorMeasure low = half;
    for (auto& atom : low.atoms) atom.weight *= 0.9;
    CHECK(validate_measure(low).unit_residual == doctest::Approx(0.1).epsilon(1e-10));

    // Site membership against a body.
    const ConvexBody dia = diamond();
    const OperatorMeasure good = pvm_from_params(dia, dia.vertex_params());
    CHECK(validate_measure(good, &dia).site_residual <= 1e-12);
    OperatorMeasure bad = good;
    bad.atoms[0].site = {0.5, 0.5};  // edge midpoint, not extreme
    CHECK(validate_measure(bad, &dia).site_residual > 0.1);
}

TEST_CASE("apply_measure") {
    const OperatorMeasure pvm = two_point_pvm();
    const Matrix at_one = apply_measure(pvm, SitePredicate([](Vec2 s) { return s.x > 0; }));
    CHECK(at_one(0, 0).real() == 1.0);
    CHECK(at_one(1, 1).real() == 0.0);

    const Matrix unit = apply_measure(pvm, SiteFunction([](Vec2) { return 1.0; }));
    CHECK((unit - Matrix::identity(2)).frobenius_norm() <= 1e-14);

    OperatorMeasure half;
    half.dimension = 2;
    half.kind = MeasureKind::povm;
    Matrix h = Matrix::identity(2);
    h *= 0.5;
    half.atoms.push_back({{1, 0}, h});
    half.atoms.push_back({{-1, 0}, h});
    const Matrix re = apply_measure(half, SiteFunction([](Vec2 s) { return s.x; }));
    CHECK(re.frobenius_norm() <= 1e-14);
}

TEST_CASE("moment residual") {
    const OperatorMeasure pvm = two_point_pvm();
    const MomentResidual same = moment_residual(pvm, pvm);
    CHECK(same.unit <= 1e-14);
    CHECK(same.affine <= 1e-14);

    // dim 1: delta at (1,0) against the symmetric two-point measure.
    OperatorMeasure delta;
    delta.dimension = 1;
    delta.kind = MeasureKind::pvm;
    Matrix one(1, 1);
    one(0, 0) = 1.0;
    delta.atoms.push_back({{1, 0}, one});
    OperatorMeasure sym;
    sym.dimension = 1;
    sym.kind = MeasureKind::povm;
    Matrix hw(1, 1);
    hw(0, 0) = 0.5;
    sym.atoms.push_back({{1, 0}, hw});
    sym.atoms.push_back({{-1, 0}, hw});
    const MomentResidual r = moment_residual(sym, delta);
    CHECK(r.unit <= 1e-14);
    CHECK(r.affine == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("brown inequality: frozen cases") {
    const int n = 5;
    std::vector<Matrix> coord;
    for (int i = 0; i < n; ++i) {
        Matrix p(n, n);
        p(i, i) = 1.0;
        coord.push_back(std::move(p));
    }
    const BrownCheck id = brown_inequality(Matrix::identity(n), coord);
    CHECK(id.lhs == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(id.rhs == doctest::Approx(5.0).epsilon(1e-12));

    // Rank-one A = v v*: equality case.
    Rng rng(77);
    Matrix v(n, 1);
    for (int i = 0; i < n; ++i) v(i, 0) = cplx(rng.gauss(), rng.gauss());
    const Matrix vv = v * v.adjoint();
    const BrownCheck rank1 = brown_inequality(vv, coord);
    CHECK(rank1.lhs == doctest::Approx(rank1.rhs).epsilon(1e-10));

    Matrix notpsd(2, 2);
    notpsd(0, 0) = -1.0;
    std::vector<Matrix> two;
    for (int i = 0; i < 2; ++i) {
        Matrix p(2, 2);
        p(i, i) = 1.0;
        two.push_back(std::move(p));
    }
    CHECK_THROWS_AS(brown_inequality(notpsd, two), std::invalid_argument);
    // Non-orthogonal blocks rejected.
    std::vector<Matrix> overlapping{Matrix::identity(2), Matrix::identity(2)};
    CHECK_THROWS_AS(brown_inequality(Matrix::identity(2), overlapping), std::invalid_argument);
}

TEST_CASE("compression chain: pvm against itself vanishes") {
    const ConvexBody disc = ConvexBody::disc({0, 0}, 1.0);
    const OperatorMeasure pvm = pvm_from_params(
        disc, {0.0, kPi / 6, kPi / 3, kPi / 2, kPi, 7 * kPi / 6, 4 * kPi / 3, 3 * kPi / 2});
    const ChainReport rep =
        compression_chain(disc, pvm, pvm, {0.0, kPi / 2}, CircleInterval{kPi, 3 * kPi / 2}, 0.01);
    CHECK(rep.norm_M == 0.0);
    CHECK(rep.ok(1e-9));
    CHECK(rep.c == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rep.bound == doctest::Approx(0.01 * kTwoPi).epsilon(1e-9));
}

TEST_CASE("compression chain: perturbed POVM stays within the bound") {
    const ConvexBody disc = ConvexBody::disc({0, 0}, 1.0);
    const OperatorMeasure pvm = pvm_from_params(
        disc, {0.0, kPi / 6, kPi / 3, kPi / 2, kPi, 7 * kPi / 6, 4 * kPi / 3, 3 * kPi / 2});
    Rng rng(2024);
    for (int trial = 0; trial < 5; ++trial) {
        const OperatorMeasure povm = perturb_moment_matched(pvm, rng, 1e-8);
        const MomentResidual r = moment_residual(povm, pvm);
        CHECK(r.unit <= 1e-8);
        CHECK(r.affine <= 1e-8);
        for (double eps : {1e-1, 1e-2, 1e-3}) {
            const ChainReport rep = compression_chain(disc, pvm, povm, {0.0, kPi / 2},
                                                      CircleInterval{kPi, 3 * kPi / 2}, eps);
            CHECK(rep.ok(1e-9));
            CHECK(rep.norm_M <= rep.bound + 1e-9);
            CHECK(rep.norm_M <= rep.brown_sum + 1e-9);
        }
    }
}

TEST_CASE("compression chain: scalar barycenter forces zero") {
    // dim 1, pvm = delta at p(0): any moment-matched povm on extreme sites
    // must put no mass away from p(0).
    const ConvexBody dia = diamond();
    OperatorMeasure pvm;
    pvm.dimension = 1;
    pvm.kind = MeasureKind::pvm;
    Matrix one(1, 1);
    one(0, 0) = 1.0;
    pvm.atoms.push_back({{1.0, 0.0}, one});

    OperatorMeasure povm;  // must equal pvm: (1,0) is extreme
    povm.dimension = 1;
    povm.kind = MeasureKind::povm;
    povm.atoms.push_back({{1.0, 0.0}, one});
    const ChainReport rep = compression_chain(dia, pvm, povm, {3 * kPi / 2, kTwoPi * 0.9999},
                                              CircleInterval{kPi / 4, kPi / 2}, 0.05);
    CHECK(rep.norm_M <= 1e-12);
    const BarycenterResult bary =
        barycenter_rigidity({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {1.0, 0.0});
    CHECK(bary.unique);  // the oracle behind the zero
}

TEST_CASE("compression chain: singleton shrink path") {
    // J sits on the same face line as the start of I, so the distance
    // constant degenerates; the extreme support of I is the single vertex at
    // pi/2, which peels off into a singleton block with allowance ~ 0.
    const ConvexBody dia = diamond();
    const OperatorMeasure pvm = pvm_from_params(dia, dia.vertex_params());
    const OperatorMeasure povm = pvm;  // exactly matched
    const CircleInterval I{kPi / 4, kPi / 2};
    const CircleInterval J{0.0, kPi / 8};  // on the extension of the chord line of I
    CHECK(dist_to_support_union(dia, I, J) <= 1e-12);
    const ChainReport rep = compression_chain(dia, pvm, povm, I, J, 0.05);
    CHECK(rep.shrunk);
    CHECK(rep.norm_M <= 1e-12);
    REQUIRE(rep.singletons.size() == 1);
    CHECK(rep.singletons[0].param == doctest::Approx(kPi / 2).epsilon(1e-12));
    CHECK(rep.singletons[0].block_norm <= rep.singletons[0].allowance + 1e-12);
    CHECK(rep.ok(1e-9));
}

TEST_CASE("barycenter rigidity: diamond vertices and center") {
    const std::vector<Vec2> sites{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const BarycenterResult vertex = barycenter_rigidity(sites, {1, 0});
    REQUIRE(vertex.feasible);
    CHECK(vertex.unique);
    CHECK(vertex.witnesses[0][0] == doctest::Approx(1.0).epsilon(1e-12));

    const BarycenterResult center = barycenter_rigidity(sites, {0, 0});
    REQUIRE(center.feasible);
    CHECK(!center.unique);
    REQUIRE(center.witnesses.size() >= 2);
    // The two named witnesses appear among the polytope vertices.
    bool found_x = false, found_y = false;
    for (const auto& w : center.witnesses) {
        if (std::fabs(w[0] - 0.5) < 1e-9 && std::fabs(w[2] - 0.5) < 1e-9) found_x = true;
        if (std::fabs(w[1] - 0.5) < 1e-9 && std::fabs(w[3] - 0.5) < 1e-9) found_y = true;
    }
    CHECK(found_x);
    CHECK(found_y);
    // Coordinate LP extremes over the feasible polytope.
    CHECK(center.weight_max[0] == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(center.weight_min[0] == doctest::Approx(0.0).epsilon(1e-9));

    const BarycenterResult single = barycenter_rigidity({{1, 0}}, {1, 0});
    CHECK(single.feasible);
    CHECK(single.unique);

    CHECK(!barycenter_rigidity(sites, {2, 2}).feasible);
}

TEST_CASE("deviation search: rigid diamond vs segment control") {
    const ConvexBody dia = diamond();
    const OperatorMeasure pvm = pvm_from_params(dia, dia.vertex_params());
    std::vector<Vec2> grid;
    for (const auto& atom : pvm.atoms) grid.push_back(atom.site);

    DeviationOptions opts;
    opts.restarts = 6;
    opts.seed = 7;
    const Vec2 v0 = grid[0];
    const DeviationResult rigid = deviation_search(
        pvm, grid, SitePredicate([v0](Vec2 q) { return dist(q, v0) <= 1e-9; }), opts);
    CHECK(rigid.max_deviation <= 1e-6);
    CHECK(rigid.witness_residual <= 1e-9);

    // Segment control: pvm site at the non-extreme midpoint of [-1,1].
    OperatorMeasure control;
    control.dimension = 1;
    control.kind = MeasureKind::pvm;
    Matrix one(1, 1);
    one(0, 0) = 1.0;
    control.atoms.push_back({{0.0, 0.0}, one});
    const std::vector<Vec2> segment_grid{{-1, 0}, {0, 0}, {1, 0}};
    const DeviationResult loose = deviation_search(
        control, segment_grid, SitePredicate([](Vec2 q) { return norm(q) <= 1e-9; }), opts);
    CHECK(loose.max_deviation >= 0.5);

    // Search space collapsed to the pvm itself: deviation zero.
    const DeviationResult frozen = deviation_search(
        pvm, grid, SitePredicate([](Vec2) { return false; }), opts);
    CHECK(frozen.max_deviation <= 1e-9);
}

TEST_CASE("operator invariant suite") {
    verify::SuiteConfig cfg;
    cfg.brown_trials = 100;
    cfg.brown_dim = 12;
    cfg.chain_trials = 4;
    cfg.deviation_restarts = 3;
    const auto suite = verify::run_operator_suite(424242, cfg);
    for (const auto& check : suite.checks) {
        INFO(check.name << " failed=" << check.failed << " worst=" << check.worst);
        CHECK(check.failed == 0);
        CHECK(check.passed > 0);
    }
}
