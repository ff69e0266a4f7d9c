// Acceptance suite: one line per criterion, nonzero exit if any fail.
// Usage: acceptance [path-to-cli] [workdir]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperrigid/angle.hpp"
#include "hyperrigid/measure.hpp"
#include "hyperrigid/report.hpp"
#include "hyperrigid/tangent.hpp"
#include "hyperrigid/verify.hpp"
#include "hyperrigid/wotsot.hpp"

using namespace hyperrigid;
namespace fs = std::filesystem;

namespace {

int failures = 0;

struct Criterion {
    std::string label;
    double budget_seconds;  // 0 = unlimited
    bool ok = true;
    std::string detail;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Criterion(std::string label, double budget) : label(std::move(label)), budget_seconds(budget) {}

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    void finish() {
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string budget;
        if (budget_seconds > 0.0)
            budget = " / " + std::to_string(static_cast<int>(budget_seconds)) + " s";
        if (budget_seconds > 0.0 && secs > budget_seconds) {
            ok = false;
            if (detail.empty()) detail = "runtime budget exceeded";
        }
        std::printf("[%s] %s (%.2f s%s)%s%s\n", ok ? "PASS" : "FAIL", label.c_str(), secs,
                    budget.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
};

ConvexBody diamond() {
    return ConvexBody::polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

void criterion_1_disc_example() {
    Criterion c("1 disc example: polar point and derivative closed forms", 1.0);
    const ConvexBody disc = ConvexBody::disc({0, 0}, 1.0);
    for (int i = 0; i < 360 && c.ok; ++i) {
        const double t = kTwoPi * i / 360.0;
        const Vec2 p = polar_point(disc, t).point;
        c.require(std::fabs(p.x - std::cos(t)) <= 1e-12 && std::fabs(p.y - std::sin(t)) <= 1e-12,
                  "polar point off the circle parameterization");
        for (Side side : {Side::plus, Side::minus}) {
            const Vec2 d = one_sided_derivative(disc, t, side);
            c.require(
                std::fabs(d.x + std::sin(t)) <= 1e-12 && std::fabs(d.y - std::cos(t)) <= 1e-12,
                "derivative off (-sin t, cos t)");
        }
    }
    c.finish();
}

void criterion_2_diamond_example() {
    Criterion c("2 diamond example: vertex derivatives and supporting lines", 0.0);
    const ConvexBody dia = diamond();
    const Vec2 plus = one_sided_derivative(dia, 0.0, Side::plus);
    const Vec2 minus = one_sided_derivative(dia, 0.0, Side::minus);
    c.require(plus.x == -1.0 && plus.y == 1.0, "p'_+(0) != (-1, 1) exactly");
    c.require(minus.x == 1.0 && minus.y == 1.0, "p'_-(0) != (1, 1) exactly");
    auto line_dist = [](const SupportLine& line, Vec2 q) {
        return std::fabs(cross(q - line.base, line.direction)) / norm(line.direction);
    };
    const SupportLine lp = support_line(dia, 0.0, Side::plus);
    const SupportLine lm = support_line(dia, 0.0, Side::minus);
    c.require(line_dist(lp, {0, 1}) <= 1e-12 && line_dist(lp, {1, 0}) <= 1e-12,
              "plus line misses (0,1)/(1,0)");
    c.require(line_dist(lm, {1, 0}) <= 1e-12 && line_dist(lm, {0, -1}) <= 1e-12,
              "minus line misses (1,0)/(0,-1)");
    c.finish();
}

void criterion_3_support_suite() {
    Criterion c("3 supporting-line suite: side test and speed bound, 1000 draws", 10.0);
    Rng rng(3);
    for (int trial = 0; trial < 1000 && c.ok; ++trial) {
        const ConvexBody body = verify::random_body(rng);
        const double t = rng.uniform(0.0, kTwoPi);
        const Side side = rng.uniform() < 0.5 ? Side::plus : Side::minus;
        const SupportLine line = support_line(body, t, side);
        const double scale = std::max(1.0, norm(line.direction));
        if (body.kind() == BodyKind::polygon) {
            for (const Vec2& v : body.vertices())
                c.require(signed_side(line, v) / scale >= -1e-9, "vertex on the wrong side");
        } else {
            for (int i = 0; i < 360; ++i)
                c.require(signed_side(line, polar_point(body, kTwoPi * i / 360.0).point) / scale >=
                              -1e-9,
                          "boundary sample on the wrong side");
        }
        c.require(norm(line.direction) >= 1.0 / minkowski_functional(body, unit_dir(t)) - 1e-9,
                  "speed below 1/f_K");
    }
    c.finish();
}

void criterion_4_partition_suite() {
    Criterion c("4 partition suite: angle validity and sup <= eps * chord", 30.0);
    Rng rng(4);
    for (int trial = 0; trial < 50 && c.ok; ++trial) {
        const ConvexBody body = verify::random_body(rng);
        auto [I, J] = verify::random_disjoint_intervals(rng);
        (void)J;
        for (double eps : {0.3, 0.1, 0.01}) {
            const UpperBoundTable table = upper_bound_partition(body, I, eps);
            const auto& knots = table.partition.knots;
            c.require(knots.front() == I.lo && knots.back() == I.hi, "endpoints off");
            for (std::size_t i = 0; i + 1 < knots.size(); ++i)
                c.require(angle(body, knots[i], knots[i + 1]).value >=
                              kPi - table.epsilon_angle - 1e-12,
                          "partition angle below threshold");
            for (const auto& seg : table.segments)
                c.require(seg.sup <= eps * seg.chord + 1e-9, "segment sup above eps * chord");
        }
    }
    c.finish();
}

void criterion_5_distance_suite() {
    Criterion c("5 distance suite: lower bound and nesting, 500 draws", 20.0);
    Rng rng(5);
    for (int trial = 0; trial < 500 && c.ok; ++trial) {
        const ConvexBody body = verify::random_body(rng);
        auto [I, J] = verify::random_disjoint_intervals(rng);
        const double dist_const = dist_to_support_union(body, I, J);
        c.require(im_inf_on_set(body, chord_motion(body, I), J) >= dist_const - 1e-9,
                  "im_inf below the support-union distance");

        double u[6];
        for (auto& v : u) v = rng.uniform(0.0, kTwoPi * 0.999);
        std::sort(u, u + 6);
        if (u[1] - u[0] > 1e-3 && u[2] - u[1] > 1e-3 && u[3] - u[2] > 1e-3 &&
            u[4] - u[3] > 0.05 && u[5] - u[4] > 1e-3 && kTwoPi - u[5] + u[0] > 0.05) {
            const CircleInterval outer{u[0], u[3]}, inner{u[1], u[2]}, Jn{u[4], u[5]};
            c.require(dist_to_support_union(body, outer, Jn) <=
                          dist_to_support_union(body, inner, Jn) + 1e-9,
                      "nested-interval monotonicity violated");
        }
    }
    c.finish();
}

void criterion_6_brown() {
    Criterion c("6 block norm inequality: 1000 random PSD 20x20", 0.0);
    Rng rng(6);
    for (int trial = 0; trial < 1000 && c.ok; ++trial) {
        const int n = 20;
        const Matrix A = random_psd(n, rng);
        const Matrix U = random_unitary(n, rng);
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
        c.require(bc.lhs <= bc.rhs + 1e-9, "norm exceeds the block sum");
    }
    c.finish();
}

void criterion_7_chain() {
    Criterion c("7 compression chain: disc fixture, 100 moment-matched POVMs", 60.0);
    const ConvexBody disc = ConvexBody::disc({0, 0}, 1.0);
    const CircleInterval I{0.0, kPi / 2}, J{kPi, 3 * kPi / 2};
    const OperatorMeasure pvm = pvm_from_params(
        disc, {0.0, kPi / 6, kPi / 3, kPi / 2, kPi, 7 * kPi / 6, 4 * kPi / 3, 3 * kPi / 2});
    Rng rng(7);
    for (int trial = 0; trial < 100 && c.ok; ++trial) {
        const OperatorMeasure povm = perturb_moment_matched(pvm, rng, 1e-8);
        for (double eps : {1e-1, 1e-2, 1e-3}) {
            const ChainReport rep = compression_chain(disc, pvm, povm, I, J, eps);
            c.require(rep.norm_M <= kTwoPi * eps / rep.c + 1e-9, "||M|| above 2 pi eps / c");
            for (const auto& seg : rep.segments)
                c.require(seg.eqphi_min >= -1e-9, "EqPhi ordering fails on a segment");
            c.require(rep.ok(1e-9), "chain verification failed");
        }
    }
    c.finish();
}

void criterion_8_barycenter() {
    Criterion c("8 barycenter rigidity at the diamond", 0.0);
    const std::vector<Vec2> sites{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (int i = 0; i < 4; ++i) {
        const BarycenterResult r = barycenter_rigidity(sites, sites[i]);
        c.require(r.feasible && r.unique, "vertex target not uniquely represented");
        if (r.unique)
            c.require(std::fabs(r.witnesses[0][i] - 1.0) <= 1e-9, "vertex witness not a Dirac");
    }
    const BarycenterResult center = barycenter_rigidity(sites, {0, 0});
    c.require(center.feasible && !center.unique && center.witnesses.size() >= 2,
              "center target must admit at least two witnesses");
    c.finish();
}

void criterion_9_deviation() {
    Criterion c("9 deviation probes: rigid diamond and segment control", 120.0);
    const ConvexBody dia = diamond();
    const OperatorMeasure pvm = pvm_from_params(dia, dia.vertex_params());
    std::vector<Vec2> grid;
    for (const auto& atom : pvm.atoms) grid.push_back(atom.site);
    DeviationOptions opts;
    opts.restarts = 50;
    opts.seed = 7;
    const Vec2 v0 = grid[0];
    const DeviationResult rigid = deviation_search(
        pvm, grid, [v0](Vec2 q) { return dist(q, v0) <= 1e-9; }, opts);
    c.require(rigid.max_deviation <= 1e-6,
              "diamond deviation above 1e-6: " + format_sig(rigid.max_deviation, 3));

    OperatorMeasure control;
    control.dimension = 1;
    control.kind = MeasureKind::pvm;
    Matrix one(1, 1);
    one(0, 0) = 1.0;
    control.atoms.push_back({{0.0, 0.0}, one});
    const DeviationResult loose = deviation_search(
        control, {{-1, 0}, {0, 0}, {1, 0}}, [](Vec2 q) { return norm(q) <= 1e-9; }, opts);
    c.require(loose.max_deviation >= 0.1, "segment control found no deviation");
    c.finish();
}

void criterion_10_wotsot() {
    Criterion c("10 WOT/SOT families in dimension 64", 0.0);
    const int dim = 64, count = 32;
    const auto control = shift_cosine_family(dim, count);
    const auto rows = wot_sot_metrics(control, Matrix::zero(dim, dim), std::nullopt);
    for (const auto& row : rows) {
        c.require(row.d_w <= std::ldexp(1.0, 1 - row.index), "control d_W above 2^{1-n}");
        c.require(row.d_s >= 0.25, "control d_S below 1/4");
    }
    const auto symmetry = sign_flip_family(dim, count);
    const Matrix limit = Matrix::identity(dim);
    for (const auto& member : symmetry) {
        c.require(sot_identity_residual(member, limit) <= 1e-9, "SOT identity residual > 1e-9");
        c.require(sot_bound_slack(member, limit) <= 1e-9, "SOT bound slack positive");
    }
    c.finish();
}

void criterion_11_cli_determinism(const std::string& cli, const fs::path& work) {
    Criterion c("11 CLI determinism: byte-identical reports", 0.0);
    if (cli.empty()) {
        c.require(false, "no CLI path supplied");
        c.finish();
        return;
    }
    fs::create_directories(work);
    const fs::path disc = work / "disc.json";
    std::ofstream(disc) << R"({"type":"disc","center":[0,0],"radius":1})";

    auto read = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    auto run_twice = [&](const std::string& args, const std::string& tag) {
        const fs::path a = work / (tag + "_a.out");
        const fs::path b = work / (tag + "_b.out");
        const std::string base = cli + " " + args;
        int rc = std::system((base + " --out " + a.string()).c_str());
        rc |= std::system((base + " --out " + b.string()).c_str());
        c.require(rc == 0, tag + ": CLI run failed");
        const std::string ca = read(a), cb = read(b);
        c.require(!ca.empty() && ca == cb, tag + ": reports differ between runs");
    };
    run_twice("bound --body " + disc.string() + " --I 0,1.5708 --J 3.1416,4.7124 --eps 0.01",
              "bound");
    run_twice("partition --body " + disc.string() + " --I 0,1.5708 --eps 0.1 --format csv",
              "partition");
    run_twice("rigidity --control --restarts 5 --seed 7", "rigidity");
    run_twice("wotsot --dim 32 --count 16", "wotsot");

    // Wrap-splitting: an interval through 0 matches its pre-split pieces.
    const fs::path wrapped = work / "wrapped.out";
    std::system((cli + " bound --body " + disc.string() +
                 " --I 1.0,2.0 --J 6.0,0.5 --eps 0.01 --out " + wrapped.string())
                    .c_str());
    const ConvexBody body = ConvexBody::disc({0, 0}, 1.0);
    const auto pieces = split_wrapping(6.0, 0.5);
    const BoundReport manual = rigidity_bound(body, CircleInterval{1.0, 2.0}, pieces, 0.01);
    const std::string got = read(wrapped);
    c.require(got.find(format_sig(round_sig(manual.c))) != std::string::npos,
              "wrap-split c mismatch");
    c.finish();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const fs::path work = argc > 2 ? fs::path(argv[2]) : fs::temp_directory_path() / "hr_accept";

    criterion_1_disc_example();
    criterion_2_diamond_example();
    criterion_3_support_suite();
    criterion_4_partition_suite();
    criterion_5_distance_suite();
    criterion_6_brown();
    criterion_7_chain();
    criterion_8_barycenter();
    criterion_9_deviation();
    criterion_10_wotsot();
    criterion_11_cli_determinism(cli, work);

    if (failures == 0) {
        std::printf("acceptance: all 11 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
