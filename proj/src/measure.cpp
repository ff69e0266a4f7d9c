#include "hyperrigid/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperrigid/tangent.hpp"

namespace hyperrigid {

namespace {

double site_param(Vec2 site) { return reduce_angle(std::atan2(site.y, site.x)); }

/// 3x3 symmetric pseudo-inverse via the Hermitian eigensolver.
struct Gram3 {
    double inv[3][3] = {};
    explicit Gram3(const std::vector<Vec2>& sites) {
        Matrix g(3, 3);
        for (const auto& s : sites) {
            const double m[3] = {1.0, s.x, s.y};
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) g(a, b) += m[a] * m[b];
        }
        const auto e = hermitian_eigen(g);
        const double cutoff = 1e-12 * std::max(1.0, e.values.back());
        for (int k = 0; k < 3; ++k) {
            if (e.values[k] <= cutoff) continue;
            const double w = 1.0 / e.values[k];
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    inv[a][b] += w * (e.vectors(a, k) * std::conj(e.vectors(b, k))).real();
        }
    }
};

Matrix weight_sum(const std::vector<Matrix>& w, const std::vector<Vec2>& sites, int coord) {
    Matrix acc = Matrix::zero(w[0].rows(), w[0].cols());
    for (std::size_t s = 0; s < w.size(); ++s) {
        const double m = coord == 0 ? 1.0 : (coord == 1 ? sites[s].x : sites[s].y);
        if (m == 0.0) continue;
        Matrix t = w[s];
        t *= m;
        acc += t;
    }
    return acc;
}

/// Outward direction strictly exposing the boundary point p(t) among all of
/// K: normal-cone bisector at a vertex, the unique outer normal elsewhere.
Vec2 exposing_direction(const ConvexBody& body, double t) {
    if (body.kind() == BodyKind::polygon) {
        const int v = body.vertex_index_at(reduce_angle(t));
        if (v >= 0) {
            const auto& edges = body.edges();
            const int n = static_cast<int>(edges.size());
            const Vec2 n_out = edges[v].normal / norm(edges[v].normal);
            const Vec2 n_in = edges[(v + n - 1) % n].normal / norm(edges[(v + n - 1) % n].normal);
            const Vec2 u = n_out + n_in;
            return u / norm(u);
        }
    }
    const Vec2 d = one_sided_derivative(body, t, Side::plus);
    return -1.0 * perp(d) / norm(d);
}

}  // namespace

OperatorMeasure pvm_from_params(const ConvexBody& body, const std::vector<double>& params) {
    OperatorMeasure m;
    m.dimension = static_cast<int>(params.size());
    m.kind = MeasureKind::pvm;
    for (int i = 0; i < m.dimension; ++i) {
        Matrix w(m.dimension, m.dimension);
        w(i, i) = 1.0;
        m.atoms.push_back({polar_point(body, params[i]).point, std::move(w)});
    }
    return m;
}

SitePredicate arc_predicate(const CircleInterval& interval, double tol) {
    return [interval, tol](Vec2 site) { return interval.contains(site_param(site), tol); };
}

SitePredicate arc_predicate(std::vector<CircleInterval> pieces, double tol) {
    return [pieces = std::move(pieces), tol](Vec2 site) {
        const double t = site_param(site);
        for (const auto& iv : pieces)
            if (iv.contains(t, tol)) return true;
        return false;
    };
}

Matrix apply_measure(const OperatorMeasure& m, const SitePredicate& indicator) {
    Matrix acc = Matrix::zero(m.dimension, m.dimension);
    for (const auto& atom : m.atoms)
        if (indicator(atom.site)) acc += atom.weight;
    return acc;
}

Matrix apply_measure(const OperatorMeasure& m, const SiteFunction& f) {
    Matrix acc = Matrix::zero(m.dimension, m.dimension);
    for (const auto& atom : m.atoms) {
        Matrix t = atom.weight;
        t *= f(atom.site);
        acc += t;
    }
    return acc;
}

Matrix apply_measure(const OperatorMeasure& m, const AffineFunction& f) {
    return apply_measure(m, SiteFunction([&f](Vec2 v) { return f(v); }));
}

MeasureDiagnostics validate_measure(const OperatorMeasure& m, const ConvexBody* body) {
    MeasureDiagnostics d;
    Matrix sum = Matrix::zero(m.dimension, m.dimension);
    for (const auto& atom : m.atoms) {
        sum += atom.weight;
        d.psd_residual = std::max(d.psd_residual, -min_eigenvalue(atom.weight));
        const Matrix idem = atom.weight * atom.weight - atom.weight;
        d.projection_residual = std::max(d.projection_residual, max_abs_eigenvalue(idem));
    }
    d.unit_residual = max_abs_eigenvalue(sum - Matrix::identity(m.dimension));
    for (std::size_t i = 0; i < m.atoms.size(); ++i)
        for (std::size_t j = i + 1; j < m.atoms.size(); ++j)
            d.orthogonality_residual = std::max(
                d.orthogonality_residual, spectral_norm(m.atoms[i].weight * m.atoms[j].weight));
    if (body) {
        const ExtremeSet ex = extreme_parameters(*body);
        for (const auto& atom : m.atoms) {
            const double t = site_param(atom.site);
            double res = dist(polar_point(*body, t).point, atom.site);
            if (!ex.contains(t, 1e-8)) res = std::max(res, 1.0);  // not an extreme direction
            d.site_residual = std::max(d.site_residual, res);
        }
    }
    return d;
}

MomentResidual moment_residual(const OperatorMeasure& povm, const OperatorMeasure& pvm) {
    if (povm.dimension != pvm.dimension)
        throw std::invalid_argument("moment_residual: dimension mismatch");
    auto total = [](const OperatorMeasure& m, int coord) {
        Matrix acc = Matrix::zero(m.dimension, m.dimension);
        for (const auto& atom : m.atoms) {
            const double f = coord == 0 ? 1.0 : (coord == 1 ? atom.site.x : atom.site.y);
            Matrix t = atom.weight;
            t *= f;
            acc += t;
        }
        return acc;
    };
    MomentResidual r;
    r.unit = max_abs_eigenvalue(total(povm, 0) - Matrix::identity(povm.dimension));
    r.affine = std::max(max_abs_eigenvalue(total(povm, 1) - total(pvm, 1)),
                        max_abs_eigenvalue(total(povm, 2) - total(pvm, 2)));
    return r;
}

BrownCheck brown_inequality(const Matrix& A, const std::vector<Matrix>& projections,
                            double tol) {
    const int n = A.rows();
    if (!A.is_hermitian(tol * std::max(1.0, A.frobenius_norm())))
        throw std::invalid_argument("brown_inequality: A must be Hermitian");
    if (min_eigenvalue(A) < -tol)
        throw std::invalid_argument("brown_inequality: A must be positive semidefinite");
    Matrix sum = Matrix::zero(n, n);
    for (std::size_t i = 0; i < projections.size(); ++i) {
        const Matrix& P = projections[i];
        if (max_abs_eigenvalue(P * P - P) > tol)
            throw std::invalid_argument("brown_inequality: block is not a projection");
        for (std::size_t j = i + 1; j < projections.size(); ++j)
            if (spectral_norm(P * projections[j]) > tol)
                throw std::invalid_argument("brown_inequality: blocks are not orthogonal");
        sum += P;
    }
    if (max_abs_eigenvalue(sum - Matrix::identity(n)) > tol)
        throw std::invalid_argument("brown_inequality: blocks do not resolve the identity");

    BrownCheck out;
    out.lhs = max_abs_eigenvalue(A);
    for (const auto& P : projections) {
        out.block_norms.push_back(max_abs_eigenvalue(P * A * P));
        out.rhs += out.block_norms.back();
    }
    return out;
}

bool ChainReport::ordering_ok(double tol) const {
    for (const auto& s : segments)
        if (s.ordering1_min < -tol || s.ordering2_min < -tol) return false;
    return true;
}

bool ChainReport::equality_ok() const {
    for (const auto& s : segments)
        if (s.equality_gap > s.equality_tol) return false;
    return true;
}

bool ChainReport::brown_ok(double tol) const { return norm_M <= brown_sum + tol; }

bool ChainReport::bound_ok(double tol) const {
    for (const auto& s : singletons)
        if (!(s.block_norm <= s.allowance + tol)) return false;
    return norm_M <= bound + tol;
}

ChainReport compression_chain(const ConvexBody& body, const OperatorMeasure& pvm,
                              const OperatorMeasure& povm, CircleInterval I, CircleInterval J,
                              double epsilon, double tol) {
    return compression_chain(body, pvm, povm, I, std::span<const CircleInterval>(&J, 1), epsilon,
                             tol);
}

ChainReport compression_chain(const ConvexBody& body, const OperatorMeasure& pvm,
                              const OperatorMeasure& povm, CircleInterval I,
                              std::span<const CircleInterval> J, double epsilon, double tol) {
    ChainReport rep;
    rep.epsilon = epsilon;
    rep.residual = moment_residual(povm, pvm);
    if (rep.residual.unit > 1e-6 || rep.residual.affine > 1e-6)
        throw std::invalid_argument("compression_chain: moment residual too large");
    rep.L = perimeter(body);

    // Effective interval: shrink toward the extreme support when the
    // configuration touches its supporting lines.
    std::optional<CircleInterval> effective;
    double c = 0.0;
    if (!I.singleton()) c = dist_to_support_union(body, I, J);
    if (!I.singleton() && c > tol) {
        effective = I;
        rep.effective_I = I;
    } else {
        rep.shrunk = true;
        const auto clip = extreme_parameters(body).clip(I);
        if (clip.kind == ExtremeSet::Clip::Kind::interval) {
            bool found = false;
            for (long n = 8; n <= (1L << 20); n *= 2) {
                const double lo = clip.iv.lo + 1.0 / n;
                const double hi = clip.iv.hi - 1.0 / n;
                if (!(lo < hi)) continue;
                const CircleInterval shrunkI{lo, hi};
                c = dist_to_support_union(body, shrunkI, J);
                if (c > tol) {
                    effective = shrunkI;
                    rep.effective_I = shrunkI;
                    found = true;
                    break;
                }
            }
            if (!found) throw SupportContactError(c);
        }
        // Empty or singleton extreme support: everything peels into
        // singleton blocks below.
    }
    rep.c = c;

    const Matrix P_I = apply_measure(pvm, arc_predicate(I, tol));
    const Matrix phi_J = apply_measure(povm, arc_predicate({J.begin(), J.end()}, tol));
    rep.norm_M = max_abs_eigenvalue(P_I * phi_J * P_I);

    // Assign pvm atoms inside I to partition segments (first closed, the rest
    // half-open (t_n, t_{n+1}]) or to singleton blocks outside the effective
    // interval.
    std::vector<const OperatorMeasure::Atom*> single_atoms;
    std::vector<std::vector<const OperatorMeasure::Atom*>> seg_atoms;
    UpperBoundTable table;
    if (effective) {
        table = upper_bound_partition(body, *effective, epsilon, tol);
        seg_atoms.resize(table.segments.size());
    }
    for (const auto& atom : pvm.atoms) {
        const double q = site_param(atom.site);
        if (!I.contains(q, tol)) continue;
        bool assigned = false;
        if (effective && effective->contains(q, tol)) {
            const auto& k = table.partition.knots;
            for (std::size_t s = 0; s + 1 < k.size(); ++s) {
                const bool lo_ok = s == 0 ? q >= k[s] - tol : q > k[s] + tol;
                if (lo_ok && q <= k[s + 1] + tol) {
                    seg_atoms[s].push_back(&atom);
                    assigned = true;
                    break;
                }
            }
        }
        if (!assigned) single_atoms.push_back(&atom);
    }

    if (effective) {
        for (std::size_t s = 0; s < table.segments.size(); ++s) {
            const auto& geo = table.segments[s];
            ChainReport::Segment seg;
            seg.t0 = geo.t0;
            seg.t1 = geo.t1;
            seg.chord = geo.chord;
            seg.sup = geo.sup;
            const RigidMotion g = chord_motion(body, {geo.t0, geo.t1}, tol);
            seg.inf = im_inf_on_set(body, g, J);
            seg.sites = static_cast<int>(seg_atoms[s].size());
            rep.bound_sum += epsilon * geo.chord / c;
            if (seg.sites > 0) {
                Matrix P_n = Matrix::zero(pvm.dimension, pvm.dimension);
                Matrix pi_gchi = Matrix::zero(pvm.dimension, pvm.dimension);
                const AffineFunction im = im_part(g);
                const AffineFunction gtilde{im.ax / seg.inf, im.ay / seg.inf,
                                            (im.c + seg.sup) / seg.inf};
                for (const auto* atom : seg_atoms[s]) {
                    P_n += atom->weight;
                    Matrix t = atom->weight;
                    t *= gtilde(atom->site);
                    pi_gchi += t;
                }
                const Matrix A_n = P_n * phi_J * P_n;
                seg.block_norm = max_abs_eigenvalue(A_n);
                const Matrix mid = P_n * apply_measure(povm, gtilde) * P_n;
                seg.ordering1_min = min_eigenvalue(mid - A_n);
                seg.equality_gap = max_abs_eigenvalue(mid - pi_gchi);
                seg.equality_tol = (std::fabs(gtilde.ax) + std::fabs(gtilde.ay)) *
                                       rep.residual.affine +
                                   std::fabs(gtilde.c) * rep.residual.unit + 1e-11;
                Matrix capped = P_n;
                capped *= seg.sup / seg.inf;
                seg.ordering2_min = min_eigenvalue(capped - pi_gchi);
                seg.eqphi_min = min_eigenvalue(capped - A_n);
                rep.brown_sum += seg.block_norm;
            }
            rep.segments.push_back(seg);
        }
        rep.bound = epsilon * rep.L / c;
    }

    const SitePredicate in_J = arc_predicate({J.begin(), J.end()}, tol);
    for (const auto* atom : single_atoms) {
        ChainReport::SingletonBlock blk;
        blk.param = site_param(atom->site);
        const Matrix& W = atom->weight;
        blk.block_norm = max_abs_eigenvalue(W * phi_J * W);
        // Exposure bound: with u strictly exposing the site over K, the
        // compressed measure of J is controlled by the compressed moment slack
        // E = W (l(x) mu(1) - phi(l)) W divided by the exposure gap over J-sites.
        const Vec2 u = exposing_direction(body, blk.param);
        const AffineFunction ell{u.x, u.y, 0.0};
        const double lx = ell(atom->site);
        double gap = std::numeric_limits<double>::infinity();
        bool any_j_site = false;
        for (const auto& patom : povm.atoms)
            if (in_J(patom.site)) {
                any_j_site = true;
                gap = std::min(gap, lx - ell(patom.site));
            }
        if (!any_j_site) {
            blk.allowance = 0.0;  // phi(chi_J) = 0
        } else if (gap <= tol) {
            blk.allowance = std::numeric_limits<double>::infinity();
        } else {
            Matrix E = apply_measure(povm, SiteFunction([&](Vec2) { return 1.0; }));
            E *= lx;
            E -= apply_measure(povm, ell);
            const auto eig = hermitian_eigen(W * E * W);
            blk.allowance = std::max(eig.values.back(), 0.0) / gap + 1e-12;
        }
        rep.brown_sum += blk.block_norm;
        rep.bound += blk.allowance;
        rep.bound_sum += blk.allowance;
        rep.singletons.push_back(blk);
    }
    return rep;
}

BarycenterResult barycenter_rigidity(const std::vector<Vec2>& sites, Vec2 target, double tol) {
    const int k = static_cast<int>(sites.size());
    BarycenterResult out;
    std::vector<std::vector<double>> raw;

    auto push = [&](std::vector<double> w) {
        for (auto& v : w) v = std::max(v, 0.0);
        raw.push_back(std::move(w));
    };

    for (int i = 0; i < k; ++i)
        if (dist(sites[i], target) <= tol) {
            std::vector<double> w(k, 0.0);
            w[i] = 1.0;
            push(std::move(w));
        }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const Vec2 d = sites[i] - sites[j];
            const double len = norm(d);
            if (len <= tol) continue;
            if (std::fabs(cross(target - sites[j], d)) > tol * len) continue;
            const double a = dot(target - sites[j], d) / (len * len);
            if (a < -tol || a > 1.0 + tol) continue;
            std::vector<double> w(k, 0.0);
            w[i] = std::clamp(a, 0.0, 1.0);
            w[j] = 1.0 - w[i];
            push(std::move(w));
        }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l) {
                const double denom = cross(sites[j] - sites[i], sites[l] - sites[i]);
                if (std::fabs(denom) <= tol) continue;
                const double wj = cross(target - sites[i], sites[l] - sites[i]) / denom;
                const double wl = cross(sites[j] - sites[i], target - sites[i]) / denom;
                const double wi = 1.0 - wj - wl;
                if (wi < -tol || wj < -tol || wl < -tol) continue;
                std::vector<double> w(k, 0.0);
                w[i] = wi;
                w[j] = wj;
                w[l] = wl;
                push(std::move(w));
            }

    // Deduplicate vertices.
    for (auto& w : raw) {
        bool dup = false;
        for (const auto& seen : out.witnesses) {
            double d = 0.0;
            for (int i = 0; i < k; ++i) d = std::max(d, std::fabs(w[i] - seen[i]));
            if (d <= 1e-7) { dup = true; break; }
        }
        if (!dup) out.witnesses.push_back(w);
    }
    out.feasible = !out.witnesses.empty();
    out.unique = out.witnesses.size() == 1;
    if (out.feasible) {
        out.weight_min.assign(k, std::numeric_limits<double>::infinity());
        out.weight_max.assign(k, -std::numeric_limits<double>::infinity());
        for (const auto& w : out.witnesses)
            for (int i = 0; i < k; ++i) {
                out.weight_min[i] = std::min(out.weight_min[i], w[i]);
                out.weight_max[i] = std::max(out.weight_max[i], w[i]);
            }
    }
    return out;
}

MomentData measure_moments(const OperatorMeasure& m) {
    std::vector<Matrix> w;
    std::vector<Vec2> sites;
    for (const auto& atom : m.atoms) {
        w.push_back(atom.weight);
        sites.push_back(atom.site);
    }
    return {weight_sum(w, sites, 0), weight_sum(w, sites, 1), weight_sum(w, sites, 2)};
}

double project_onto_moments(std::vector<Matrix>& weights, const std::vector<Vec2>& sites,
                            const MomentData& target) {
    const Gram3 gram(sites);
    Matrix R[3] = {weight_sum(weights, sites, 0) - target.unit,
                   weight_sum(weights, sites, 1) - target.mx,
                   weight_sum(weights, sites, 2) - target.my};
    double residual = 0.0;
    for (const auto& r : R) residual = std::max(residual, r.frobenius_norm());

    Matrix lam[3];
    for (int a = 0; a < 3; ++a) {
        lam[a] = Matrix::zero(R[0].rows(), R[0].cols());
        for (int b = 0; b < 3; ++b) {
            if (gram.inv[a][b] == 0.0) continue;
            Matrix t = R[b];
            t *= gram.inv[a][b];
            lam[a] += t;
        }
    }
    for (std::size_t s = 0; s < weights.size(); ++s) {
        const double m[3] = {1.0, sites[s].x, sites[s].y};
        for (int a = 0; a < 3; ++a) {
            Matrix t = lam[a];
            t *= m[a];
            weights[s] -= t;
        }
    }
    return residual;
}

void dykstra_project(std::vector<Matrix>& weights, const std::vector<Vec2>& sites,
                     const MomentData& target, int iters, double tol) {
    const int n = weights[0].rows();
    const std::size_t k = weights.size();
    std::vector<Matrix> p(k, Matrix::zero(n, n)), q(k, Matrix::zero(n, n));
    for (int it = 0; it < iters; ++it) {
        std::vector<Matrix> y(k);
        for (std::size_t s = 0; s < k; ++s) y[s] = weights[s] + p[s];
        double affine_res = project_onto_moments(y, sites, target);
        for (std::size_t s = 0; s < k; ++s) p[s] = weights[s] + p[s] - y[s];
        double psd_res = 0.0;
        for (std::size_t s = 0; s < k; ++s) {
            const Matrix pre = y[s] + q[s];
            weights[s] = psd_projection(pre);
            psd_res = std::max(psd_res, (weights[s] - pre).frobenius_norm());
            q[s] = pre - weights[s];
        }
        if (it % 8 == 7 && affine_res <= tol && psd_res <= tol) break;
    }
    // Land exactly on the moment constraints; atoms stay PSD up to the
    // Dykstra residual.
    project_onto_moments(weights, sites, target);
}

OperatorMeasure random_povm(const std::vector<Vec2>& sites, int dimension, Rng& rng) {
    const int k = static_cast<int>(sites.size());
    std::vector<Matrix> r;
    Matrix sum = Matrix::zero(dimension, dimension);
    for (int s = 0; s < k; ++s) {
        r.push_back(random_psd(dimension, rng));
        sum += r.back();
    }
    const Matrix t = inverse_sqrt(sum);
    OperatorMeasure m;
    m.dimension = dimension;
    m.kind = MeasureKind::povm;
    for (int s = 0; s < k; ++s) m.atoms.push_back({sites[s], t * r[s] * t});
    return m;
}

OperatorMeasure perturb_moment_matched(const OperatorMeasure& pvm, Rng& rng,
                                       double residual_cap) {
    std::vector<Vec2> sites;
    for (const auto& atom : pvm.atoms) sites.push_back(atom.site);
    const OperatorMeasure v = random_povm(sites, pvm.dimension, rng);
    const MomentResidual r0 = moment_residual(v, pvm);
    const double base = std::max({r0.unit, r0.affine, 1e-300});
    const double lambda = std::min(0.9, 0.5 * residual_cap / base) * rng.uniform(0.5, 1.0);
    OperatorMeasure out;
    out.dimension = pvm.dimension;
    out.kind = MeasureKind::povm;
    for (std::size_t s = 0; s < pvm.atoms.size(); ++s) {
        Matrix w = pvm.atoms[s].weight;
        w *= 1.0 - lambda;
        Matrix w2 = v.atoms[s].weight;
        w2 *= lambda;
        w += w2;
        out.atoms.push_back({sites[s], std::move(w)});
    }
    return out;
}

DeviationResult deviation_search(const OperatorMeasure& pvm, const std::vector<Vec2>& grid,
                                 const SitePredicate& F, const DeviationOptions& opts) {
    const int n = pvm.dimension;
    const int k = static_cast<int>(grid.size());
    const MomentData target = measure_moments(pvm);
    const Matrix piF = apply_measure(pvm, F);

    std::vector<int> f_index;
    for (int s = 0; s < k; ++s)
        if (F(grid[s])) f_index.push_back(s);

    auto objective = [&](const std::vector<Matrix>& w) {
        Matrix d = Matrix::zero(n, n);
        for (int s : f_index) d += w[s];
        d -= piF;
        return d;
    };

    DeviationResult best;
    best.restarts = opts.restarts;
    Rng master(opts.seed);
    for (int restart = 0; restart < opts.restarts; ++restart) {
        Rng rng = master.fork(restart + 1);
        std::vector<Matrix> w;
        {
            const OperatorMeasure init = random_povm(grid, n, rng);
            for (const auto& atom : init.atoms) w.push_back(atom.weight);
        }
        dykstra_project(w, grid, target, 4 * opts.project_iters);

        for (int it = 0; it < opts.ascent_iters; ++it) {
            const Matrix d = objective(w);
            const auto top = extreme_eigenpair(d);
            if (f_index.empty()) break;
            // Subgradient of the top |eigenvalue| in the F-coordinates.
            const double sgn = top.value >= 0.0 ? 1.0 : -1.0;
            Matrix g(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    g(i, j) = sgn * top.vector[i] * std::conj(top.vector[j]);
            std::vector<Matrix> step(k, Matrix::zero(n, n));
            for (int s : f_index) step[s] = g;
            project_onto_moments(step, grid, MomentData{Matrix::zero(n, n), Matrix::zero(n, n),
                                                        Matrix::zero(n, n)});
            double snorm = 0.0;
            for (const auto& m : step) snorm += m.frobenius_norm() * m.frobenius_norm();
            snorm = std::sqrt(snorm);
            if (snorm <= 1e-14) break;
            const double eta = opts.step / (1.0 + it / 12.0) / snorm;
            for (int s = 0; s < k; ++s) {
                Matrix t = step[s];
                t *= eta;
                w[s] += t;
            }
            dykstra_project(w, grid, target, opts.project_iters);
        }
        dykstra_project(w, grid, target, opts.final_project_iters, 1e-13);

        const double dev = max_abs_eigenvalue(objective(w));
        if (dev > best.max_deviation || restart == 0) {
            best.max_deviation = dev;
            best.witness.dimension = n;
            best.witness.kind = MeasureKind::povm;
            best.witness.atoms.clear();
            for (int s = 0; s < k; ++s) best.witness.atoms.push_back({grid[s], w[s]});
        }
    }
    best.witness_residual = std::max(moment_residual(best.witness, pvm).unit,
                                     moment_residual(best.witness, pvm).affine);
    return best;
}

}  // namespace hyperrigid
