#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperrigid/report.hpp"

namespace {

using namespace hyperrigid;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;

struct Options {
    std::string body_path;
    std::string interval_i, interval_j;
    double epsilon = 0.01;
    double target_bound = 0.0;  // solve-for-epsilon mode when > 0
    std::uint64_t seed = 7;
    std::string out_path;
    std::string format = "json";
    double tol = kDefaultTol;
    std::string suite = "all";
    int restarts = 50;
    int pvm_sites = 8;
    int samples = 360;
    int dim = 64;
    int count = 32;
    bool control = false;
    std::string f_interval;
    std::string pvm_path;
    std::string witness_out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BodyError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw BodyError("cannot write file: " + opt.out_path);
    out << text;
}

std::pair<double, double> parse_pair(const std::string& s, const char* flag) {
    const auto comma = s.find(',');
    if (comma == std::string::npos)
        throw BodyError(std::string(flag) + " expects two comma-separated radians");
    try {
        return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw BodyError(std::string(flag) + ": malformed number");
    }
}

/// User intervals may wrap through 0; split into canonical pieces.
std::vector<CircleInterval> parse_interval(const std::string& s, const char* flag) {
    const auto [a, b] = parse_pair(s, flag);
    return split_wrapping(a, b);
}

struct LoadedBody {
    ConvexBody body;
    Vec2 offset;
};

LoadedBody load_centered_body(const std::string& path) {
    const ConvexBody raw = ingest_body(slurp(path));
    auto [centered, offset] = center_body(raw);
    return {std::move(centered), offset};
}

int cmd_body(const Options& opt) {
    try {
        const LoadedBody lb = load_centered_body(opt.body_path);
        if (opt.format == "csv")
            emit(opt, boundary_csv(lb.body, opt.samples));
        else
            emit(opt, body_report_json(lb.body, lb.offset));
        return kExitOk;
    } catch (const DegenerateBodyError& e) {
        // Flat bodies carry no geometry: every state on them is rigid, so the
        // whole pipeline is vacuous. Report and succeed.
        nlohmann::json j;
        j["kind"] = e.is_segment() ? "segment" : "point";
        j["trivially_rigid"] = true;
        j["note"] = "zero-area body: affine functions already span the algebra";
        emit(opt, j.dump(2) + "\n");
        return kExitOk;
    }
}

int cmd_partition(const Options& opt) {
    const LoadedBody lb = load_centered_body(opt.body_path);
    const auto pieces = parse_interval(opt.interval_i, "--I");
    std::vector<Partition> parts;
    for (const auto& piece : pieces)
        parts.push_back(angle_partition(lb.body, piece, opt.epsilon, opt.tol));
    if (opt.format == "csv") {
        std::string csv;
        for (const auto& p : parts) csv += partition_report_csv(p);
        emit(opt, csv);
    } else if (parts.size() == 1) {
        emit(opt, partition_report_json(parts[0]));
    } else {
        nlohmann::json j;
        j["pieces"] = nlohmann::json::array();
        for (const auto& p : parts)
            j["pieces"].push_back(nlohmann::json::parse(partition_report_json(p)));
        emit(opt, j.dump(2) + "\n");
    }
    return kExitOk;
}

void require_disjoint(const std::vector<CircleInterval>& I,
                      const std::vector<CircleInterval>& J) {
    for (const auto& a : I)
        for (const auto& b : J)
            if (a.lo <= b.hi && b.lo <= a.hi)
                throw BodyError("--I and --J must be disjoint after wrap-splitting");
}

int cmd_bound(const Options& opt) {
    const LoadedBody lb = load_centered_body(opt.body_path);
    const auto I = parse_interval(opt.interval_i, "--I");
    const auto J = parse_interval(opt.interval_j, "--J");
    require_disjoint(I, J);
    if (!(opt.epsilon > 0.0 && opt.epsilon < kPi / 2.0))
        throw BodyError("--eps must lie in (0, pi/2)");
    double epsilon = opt.epsilon;
    if (opt.target_bound > 0.0) {
        // Solve-for-epsilon: epsilon = target * c / L.
        const double c = dist_to_support_union(lb.body, I.front(), J);
        epsilon = opt.target_bound * c / perimeter(lb.body);
    }
    try {
        std::vector<BoundReport> reps;
        for (const auto& piece : I)
            reps.push_back(rigidity_bound(lb.body, piece, J, epsilon, opt.tol));
        if (opt.format == "csv") {
            std::string csv;
            for (const auto& r : reps) csv += bound_report_csv(r);
            emit(opt, csv);
        } else if (reps.size() == 1) {
            emit(opt, bound_report_json(reps[0]));
        } else {
            nlohmann::json j;
            double total = 0.0;
            j["pieces"] = nlohmann::json::array();
            for (const auto& r : reps) {
                total += r.bound;
                j["pieces"].push_back(nlohmann::json::parse(bound_report_json(r)));
            }
            j["bound"] = round_sig(total);  // block summation over the pieces
            emit(opt, j.dump(2) + "\n");
        }
        return kExitOk;
    } catch (const SupportContactError& e) {
        std::cerr << "bound infeasible: c = " << e.c
                  << " (configuration touches its supporting lines); shrink the interval "
                     "toward its extreme points and retry\n";
        return kExitVerification;
    }
}

int cmd_verify(const Options& opt) {
    const auto suites = verify::run_suites(opt.suite, opt.seed);
    bool ok = true;
    for (const auto& s : suites) {
        for (const auto& c : s.checks) {
            std::cout << (c.ok() ? "[pass] " : "[FAIL] ") << s.suite << ": " << c.name << " ("
                      << c.passed << " passed";
            if (c.failed > 0) std::cout << ", " << c.failed << " failed";
            std::cout << ")\n";
            ok = ok && c.ok();
        }
    }
    if (!opt.out_path.empty()) emit(opt, verify_report_json(suites, opt.seed));
    return ok ? kExitOk : kExitVerification;
}

int cmd_rigidity(const Options& opt) {
    DeviationOptions dev;
    dev.restarts = opt.restarts;
    dev.seed = opt.seed;

    OperatorMeasure pvm;
    std::vector<Vec2> grid;
    SitePredicate F = [](Vec2) { return false; };

    if (opt.control) {
        // Segment control: flat body, pvm site at the non-extreme midpoint.
        pvm.dimension = 1;
        pvm.kind = MeasureKind::pvm;
        Matrix one(1, 1);
        one(0, 0) = 1.0;
        pvm.atoms.push_back({{0.0, 0.0}, one});
        grid = {{-1, 0}, {0, 0}, {1, 0}};
        F = [](Vec2 q) { return norm(q) <= 1e-9; };
    } else {
        const LoadedBody lb = load_centered_body(opt.body_path);
        if (!opt.pvm_path.empty()) {
            pvm = measure_from_json(slurp(opt.pvm_path));
            const MeasureDiagnostics diag = validate_measure(pvm, &lb.body);
            if (!diag.valid_pvm(1e-8))
                throw BodyError("--pvm: file does not describe a PVM on ex(K)");
        } else {
            std::vector<double> params;
            if (lb.body.kind() == BodyKind::polygon) {
                params = lb.body.vertex_params();
            } else {
                for (int i = 0; i < opt.pvm_sites; ++i)
                    params.push_back(kTwoPi * i / opt.pvm_sites);
            }
            pvm = pvm_from_params(lb.body, params);
        }
        for (const auto& atom : pvm.atoms) grid.push_back(atom.site);
        if (!opt.f_interval.empty()) {
            F = arc_predicate(parse_interval(opt.f_interval, "--F"), opt.tol);
        } else {
            const Vec2 site = grid.front();
            F = [site](Vec2 q) { return dist(q, site) <= 1e-9; };
        }
    }
    const DeviationResult res = deviation_search(pvm, grid, F, dev);
    if (!opt.witness_out.empty()) {
        std::ofstream out(opt.witness_out, std::ios::binary);
        out << measure_to_json(res.witness);
    }
    emit(opt, deviation_report_json(res, opt.seed));
    return kExitOk;
}

int cmd_wotsot(const Options& opt) {
    const auto control = shift_cosine_family(opt.dim, opt.count);
    const auto symmetry = sign_flip_family(opt.dim, opt.count);
    const Matrix zero = Matrix::zero(opt.dim, opt.dim);
    const Matrix identity = Matrix::identity(opt.dim);
    const std::vector<Vec2> allowed{{1.0, 0.0}, {-1.0, 0.0}};
    const auto control_rows = wot_sot_metrics(control, zero, std::nullopt);
    const auto symmetry_rows = wot_sot_metrics(symmetry, identity, allowed);
    emit(opt, opt.format == "csv" ? wotsot_report_csv(control_rows, symmetry_rows)
                                  : wotsot_report_json(control_rows, symmetry_rows));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    if (const char* env_tol = std::getenv("HYPERRIGID_TOL")) opt.tol = std::atof(env_tol);

    CLI::App app{"hyperrigid: planar convex geometry and operator-measure rigidity experiments"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool needs_body) {
        auto* b = cmd->add_option("--body", opt.body_path, "body spec file (JSON)");
        if (needs_body) b->required();
        cmd->add_option("--out", opt.out_path, "output path (default stdout)");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--tol", opt.tol, "geometric tolerance override");
        cmd->add_option("--seed", opt.seed, "random seed");
    };

    CLI::App* body = app.add_subcommand("body", "geometry summary or boundary samples");
    add_common(body, true);
    body->add_option("--samples", opt.samples, "boundary samples for csv output");

    CLI::App* partition = app.add_subcommand("partition", "angle partition of an interval");
    add_common(partition, true);
    partition->add_option("--I", opt.interval_i, "interval a,b in radians")->required();
    partition->add_option("--eps", opt.epsilon, "angle threshold (pi - eps)")->required();

    CLI::App* bound = app.add_subcommand("bound", "compression bound report");
    add_common(bound, true);
    bound->add_option("--I", opt.interval_i, "interval a,b in radians")->required();
    bound->add_option("--J", opt.interval_j, "interval a,b in radians")->required();
    bound->add_option("--eps", opt.epsilon, "linear ratio epsilon");
    bound->add_option("--target-bound", opt.target_bound,
                      "solve for epsilon from a target bound (epsilon = target*c/L)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run invariant suites");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--suite", opt.suite, "body|tangent|angle|motion|operator|all");

    CLI::App* rigidity = app.add_subcommand("rigidity", "deviation search probe");
    add_common(rigidity, false);
    rigidity->add_option("--restarts", opt.restarts, "search restarts");
    rigidity->add_option("--pvm-sites", opt.pvm_sites, "pvm sites for smooth bodies");
    rigidity->add_option("--pvm", opt.pvm_path, "PVM measure file (JSON) instead of a built one");
    rigidity->add_option("--F", opt.f_interval, "parameter interval a,b selecting sites");
    rigidity->add_option("--witness-out", opt.witness_out, "write the witness POVM (JSON)");
    rigidity->add_flag("--control", opt.control, "run the segment control experiment");

    CLI::App* wotsot = app.add_subcommand("wotsot", "weak/strong operator topology metrics");
    add_common(wotsot, false);
    wotsot->add_option("--dim", opt.dim, "matrix dimension");
    wotsot->add_option("--count", opt.count, "family size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (body->parsed()) return cmd_body(opt);
        if (partition->parsed()) return cmd_partition(opt);
        if (bound->parsed()) return cmd_bound(opt);
        if (verify_cmd->parsed()) return cmd_verify(opt);
        if (rigidity->parsed()) return cmd_rigidity(opt);
        if (wotsot->parsed()) return cmd_wotsot(opt);
    } catch (const BodyError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitInput;
}
