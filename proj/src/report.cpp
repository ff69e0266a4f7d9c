#include "hyperrigid/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace hyperrigid {

using nlohmann::json;

double round_sig(double v, int digits) {
    if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::strtod(buf, nullptr);
}

std::string format_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

namespace {

json num(double v) { return json(round_sig(v)); }

json interval_json(const CircleInterval& iv) { return json{num(iv.lo), num(iv.hi)}; }

}  // namespace

std::string body_report_json(const ConvexBody& body, Vec2 offset) {
    json j;
    switch (body.kind()) {
        case BodyKind::polygon: {
            j["kind"] = "polygon";
            json verts = json::array();
            for (const auto& v : body.vertices()) verts.push_back({num(v.x), num(v.y)});
            j["vertices"] = verts;
            json params = json::array();
            for (double t : body.vertex_params()) params.push_back(num(t));
            j["extreme_params"] = params;
            break;
        }
        case BodyKind::disc:
            j["kind"] = "disc";
            j["center"] = {num(body.center().x), num(body.center().y)};
            j["radius"] = num(body.radii().x);
            j["extreme_params"] = "all";
            break;
        case BodyKind::ellipse:
            j["kind"] = "ellipse";
            j["center"] = {num(body.center().x), num(body.center().y)};
            j["radii"] = {num(body.radii().x), num(body.radii().y)};
            j["extreme_params"] = "all";
            break;
    }
    j["centered"] = body.centered();
    j["offset"] = {num(offset.x), num(offset.y)};
    j["perimeter"] = num(perimeter(body));
    return j.dump(2) + "\n";
}

std::string partition_report_json(const Partition& partition) {
    json j;
    j["epsilon"] = num(partition.epsilon);
    json knots = json::array();
    for (double t : partition.knots) knots.push_back(num(t));
    j["knots"] = knots;
    j["segments"] = partition.knots.size() - 1;
    return j.dump(2) + "\n";
}

std::string partition_report_csv(const Partition& partition) {
    std::string out = "index,t\n";
    for (std::size_t i = 0; i < partition.knots.size(); ++i)
        out += std::to_string(i) + "," + format_sig(partition.knots[i]) + "\n";
    return out;
}

std::string bound_report_json(const BoundReport& rep) {
    json j;
    j["L"] = num(rep.L);
    j["c"] = num(rep.c);
    j["epsilon"] = num(rep.epsilon);
    j["bound"] = num(rep.bound);
    j["bound_sum"] = num(rep.bound_sum);
    j["measured"] = num(rep.measured);
    j["segments"] = rep.table.segments.size();
    return j.dump(2) + "\n";
}

std::string bound_report_csv(const BoundReport& rep) {
    std::string out = "t0,t1,chord,sup,ratio\n";
    for (const auto& s : rep.table.segments) {
        const double ratio = s.chord > 0.0 ? s.sup / s.chord : 0.0;
        out += format_sig(s.t0);
        out += ",";
        out += format_sig(s.t1);
        out += ",";
        out += format_sig(s.chord);
        out += ",";
        out += format_sig(s.sup);
        out += ",";
        out += format_sig(ratio);
        out += "\n";
    }
    return out;
}

std::string chain_report_json(const ChainReport& rep, double tol) {
    json j;
    j["L"] = num(rep.L);
    j["c"] = num(rep.c);
    j["epsilon"] = num(rep.epsilon);
    j["bound"] = num(rep.bound);
    j["bound_sum"] = num(rep.bound_sum);
    j["norm_M"] = num(rep.norm_M);
    j["brown_sum"] = num(rep.brown_sum);
    j["residual_unit"] = num(rep.residual.unit);
    j["residual_affine"] = num(rep.residual.affine);
    j["shrunk"] = rep.shrunk;
    if (rep.shrunk) j["effective_I"] = interval_json(rep.effective_I);
    j["ordering_ok"] = rep.ordering_ok(tol);
    j["equality_ok"] = rep.equality_ok();
    j["brown_ok"] = rep.brown_ok(tol);
    j["bound_ok"] = rep.bound_ok(tol);
    j["ok"] = rep.ok(tol);
    json segs = json::array();
    for (const auto& s : rep.segments) {
        json row;
        row["t0"] = num(s.t0);
        row["t1"] = num(s.t1);
        row["chord"] = num(s.chord);
        row["sup"] = num(s.sup);
        row["inf"] = num(s.inf);
        row["block_norm"] = num(s.block_norm);
        row["sites"] = s.sites;
        segs.push_back(row);
    }
    j["segment_rows"] = segs;
    json singles = json::array();
    for (const auto& s : rep.singletons) {
        json row;
        row["param"] = num(s.param);
        row["block_norm"] = num(s.block_norm);
        row["allowance"] = num(s.allowance);
        singles.push_back(row);
    }
    j["singleton_rows"] = singles;
    return j.dump(2) + "\n";
}

std::string verify_report_json(const std::vector<verify::SuiteResult>& suites,
                               std::uint64_t seed) {
    json j;
    j["seed"] = seed;
    bool all_ok = true;
    json arr = json::array();
    for (const auto& s : suites) {
        json suite;
        suite["suite"] = s.suite;
        suite["ok"] = s.ok();
        all_ok = all_ok && s.ok();
        json checks = json::array();
        for (const auto& c : s.checks) {
            json row;
            row["name"] = c.name;
            row["passed"] = c.passed;
            row["failed"] = c.failed;
            row["worst_slack"] = num(c.worst);
            checks.push_back(row);
        }
        suite["checks"] = checks;
        arr.push_back(suite);
    }
    j["suites"] = arr;
    j["ok"] = all_ok;
    return j.dump(2) + "\n";
}

std::string deviation_report_json(const DeviationResult& res, std::uint64_t seed) {
    json j;
    j["seed"] = seed;
    j["restarts"] = res.restarts;
    j["max_deviation"] = num(res.max_deviation);
    j["witness_residual"] = num(res.witness_residual);
    return j.dump(2) + "\n";
}

namespace {

json wotsot_rows(const std::vector<WotSotRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json row;
        row["n"] = r.index;
        row["d_w"] = num(r.d_w);
        row["d_s"] = num(r.d_s);
        arr.push_back(row);
    }
    return arr;
}

}  // namespace

std::string wotsot_report_json(const std::vector<WotSotRow>& control,
                               const std::vector<WotSotRow>& symmetry) {
    json j;
    j["control"] = wotsot_rows(control);
    j["symmetry"] = wotsot_rows(symmetry);
    return j.dump(2) + "\n";
}

std::string wotsot_report_csv(const std::vector<WotSotRow>& control,
                              const std::vector<WotSotRow>& symmetry) {
    std::string out = "family,n,d_w,d_s\n";
    for (const auto& r : control)
        out += "control," + std::to_string(r.index) + "," + format_sig(r.d_w) + "," +
               format_sig(r.d_s) + "\n";
    for (const auto& r : symmetry)
        out += "symmetry," + std::to_string(r.index) + "," + format_sig(r.d_w) + "," +
               format_sig(r.d_s) + "\n";
    return out;
}

std::string boundary_csv(const ConvexBody& body, int samples) {
    std::string out = "t,x,y\n";
    for (int i = 0; i < samples; ++i) {
        const double t = kTwoPi * i / samples;
        const Vec2 p = polar_point(body, t).point;
        out += format_sig(t);
        out += ",";
        out += format_sig(p.x);
        out += ",";
        out += format_sig(p.y);
        out += "\n";
    }
    return out;
}

OperatorMeasure measure_from_json(const std::string& text) {
    const json j = json::parse(text);
    OperatorMeasure m;
    m.dimension = j.at("dimension").get<int>();
    m.kind = j.at("kind").get<std::string>() == "pvm" ? MeasureKind::pvm : MeasureKind::povm;
    for (const auto& atom : j.at("atoms")) {
        Vec2 site{atom.at("site").at(0).get<double>(), atom.at("site").at(1).get<double>()};
        Matrix w(m.dimension, m.dimension);
        const auto& rows = atom.at("weight");
        for (int i = 0; i < m.dimension; ++i)
            for (int k = 0; k < m.dimension; ++k)
                w(i, k) = cplx(rows.at(i).at(k).at(0).get<double>(),
                               rows.at(i).at(k).at(1).get<double>());
        m.atoms.push_back({site, std::move(w)});
    }
    return m;
}

std::string measure_to_json(const OperatorMeasure& m) {
    json j;
    j["dimension"] = m.dimension;
    j["kind"] = m.kind == MeasureKind::pvm ? "pvm" : "povm";
    json atoms = json::array();
    for (const auto& atom : m.atoms) {
        json a;
        a["site"] = {num(atom.site.x), num(atom.site.y)};
        json rows = json::array();
        // Weights are contractions; entries below 1e-14 are arithmetic dust.
        auto clip = [](double v) { return std::fabs(v) < 1e-14 ? 0.0 : v; };
        for (int i = 0; i < m.dimension; ++i) {
            json row = json::array();
            for (int k = 0; k < m.dimension; ++k)
                row.push_back(
                    {num(clip(atom.weight(i, k).real())), num(clip(atom.weight(i, k).imag()))});
            rows.push_back(row);
        }
        a["weight"] = rows;
        atoms.push_back(a);
    }
    j["atoms"] = atoms;
    return j.dump(2) + "\n";
}

}  // namespace hyperrigid
