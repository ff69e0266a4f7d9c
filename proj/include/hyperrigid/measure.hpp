#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperrigid/body.hpp"
#include "hyperrigid/linalg.hpp"
#include "hyperrigid/motion.hpp"

namespace hyperrigid {

enum class MeasureKind { pvm, povm };

/// Finite atomic matrix-valued measure on extreme points of a body: atoms are
/// (site, PSD weight) pairs whose weights sum to the identity. A PVM
/// additionally has mutually orthogonal projection weights.
struct OperatorMeasure {
    struct Atom {
        Vec2 site{};
        Matrix weight;
    };
    int dimension = 0;
    MeasureKind kind = MeasureKind::povm;
    std::vector<Atom> atoms;
};

/// Rank-one diagonal PVM with one atom per parameter, sites on the boundary.
OperatorMeasure pvm_from_params(const ConvexBody& body, const std::vector<double>& params);

using SitePredicate = std::function<bool(Vec2)>;
using SiteFunction = std::function<double(Vec2)>;

/// Predicate selecting sites on the boundary arc p(I) by parameter membership.
SitePredicate arc_predicate(const CircleInterval& interval, double tol = kDefaultTol);
SitePredicate arc_predicate(std::vector<CircleInterval> pieces, double tol = kDefaultTol);

Matrix apply_measure(const OperatorMeasure& m, const SitePredicate& indicator);
Matrix apply_measure(const OperatorMeasure& m, const SiteFunction& f);
Matrix apply_measure(const OperatorMeasure& m, const AffineFunction& f);

struct MeasureDiagnostics {
    double unit_residual = 0.0;        // ||sum of weights - I||
    double psd_residual = 0.0;         // max(0, -min eigenvalue) over atoms
    double projection_residual = 0.0;  // max ||W^2 - W|| over atoms (pvm check)
    double orthogonality_residual = 0.0;  // max ||W_i W_j|| over pairs (pvm check)
    double site_residual = 0.0;        // distance of sites from ex(K), if body given
    bool valid_povm(double tol) const {
        return unit_residual <= tol && psd_residual <= tol && site_residual <= tol;
    }
    bool valid_pvm(double tol) const {
        return valid_povm(tol) && projection_residual <= tol && orthogonality_residual <= tol;
    }
};

MeasureDiagnostics validate_measure(const OperatorMeasure& m,
                                    const ConvexBody* body = nullptr);

struct MomentResidual {
    double unit = 0.0;    // ||mu(1) - I||
    double affine = 0.0;  // max over coordinates of ||first moment mismatch||
};

/// Agreement on affine functions == matching unit and first moments.
MomentResidual moment_residual(const OperatorMeasure& povm, const OperatorMeasure& pvm);

struct BrownCheck {
    double lhs = 0.0;  // ||A||
    double rhs = 0.0;  // sum of ||P_i A P_i||
    std::vector<double> block_norms;
};

/// ||A|| <= sum_i ||P_i A P_i|| for positive A and an orthogonal decomposition.
/// Rejects non-PSD A and invalid decompositions.
BrownCheck brown_inequality(const Matrix& A, const std::vector<Matrix>& projections,
                            double tol = 1e-8);

/// Result of verifying the compression bound chain for one configuration.
struct ChainReport {
    struct Segment {
        double t0 = 0.0, t1 = 0.0;
        double chord = 0.0, sup = 0.0, inf = 0.0;
        double block_norm = 0.0;      // ||P_n phi(chi_J) P_n||
        double ordering1_min = 0.0;   // min eig of P phi(g~) P - P phi(chi_J) P
        double equality_gap = 0.0;    // ||P phi(g~) P - pi(g~ chi)|| (within eq_tol)
        double equality_tol = 0.0;
        double ordering2_min = 0.0;   // min eig of (sup/inf) P - pi(g~ chi)
        double eqphi_min = 0.0;       // min eig of (sup/inf) P - P phi(chi_J) P
        int sites = 0;
    };
    struct SingletonBlock {
        double param = 0.0;
        double block_norm = 0.0;
        double allowance = 0.0;  // exposure-functional bound scaled by moment slack
    };
    double c = 0.0, L = 0.0, epsilon = 0.0;
    double bound = 0.0;      // epsilon * L / c (+ singleton allowances)
    double bound_sum = 0.0;  // sum (epsilon/c) * chord (+ singleton allowances)
    double norm_M = 0.0;     // ||pi(chi_I) phi(chi_J) pi(chi_I)||
    double brown_sum = 0.0;  // sum of block norms
    MomentResidual residual;
    std::vector<Segment> segments;
    std::vector<SingletonBlock> singletons;
    CircleInterval effective_I{};
    bool shrunk = false;

    bool ordering_ok(double tol) const;
    bool equality_ok() const;
    bool brown_ok(double tol) const;
    bool bound_ok(double tol) const;
    bool ok(double tol) const {
        return ordering_ok(tol) && equality_ok() && brown_ok(tol) && bound_ok(tol);
    }
};

/// Verify the full compression chain for pi = pvm, phi = povm on disjoint
/// closed intervals I, J: per segment the positivity ordering through the
/// normalized affine function, the moment-matching equality, Brown summation,
/// and the final geometric bound on ||pi(chi_I) phi(chi_J) pi(chi_I)||.
/// When the distance constant degenerates the interval is shrunk toward its
/// extreme support (endpoints peel off into singleton blocks).
ChainReport compression_chain(const ConvexBody& body, const OperatorMeasure& pvm,
                              const OperatorMeasure& povm, CircleInterval I, CircleInterval J,
                              double epsilon, double tol = kDefaultTol);
ChainReport compression_chain(const ConvexBody& body, const OperatorMeasure& pvm,
                              const OperatorMeasure& povm, CircleInterval I,
                              std::span<const CircleInterval> J, double epsilon,
                              double tol = kDefaultTol);

struct BarycenterResult {
    bool feasible = false;
    bool unique = false;
    /// Distinct vertices of the feasible polytope (weight vectors over sites).
    std::vector<std::vector<double>> witnesses;
    /// Per-site extremes of the weight over the feasible set.
    std::vector<double> weight_min, weight_max;
};

/// Probability weights on the given sites with prescribed barycenter. The
/// feasible set is a polytope; its vertices are enumerated from basic
/// solutions (supports of size <= 3), which also yields the per-coordinate
/// linear-program extremes. Uniqueness means the polytope is a single point.
BarycenterResult barycenter_rigidity(const std::vector<Vec2>& sites, Vec2 target,
                                     double tol = 1e-9);

struct DeviationOptions {
    int restarts = 50;
    std::uint64_t seed = 7;
    int ascent_iters = 120;
    int project_iters = 60;
    int final_project_iters = 4000;
    double step = 0.5;
};

struct DeviationResult {
    double max_deviation = 0.0;
    OperatorMeasure witness;
    double witness_residual = 0.0;  // moment residual of the witness
    int restarts = 0;
};

/// Projected-(sub)gradient ascent of ||phi(chi_F) - pi(chi_F)|| over POVMs on
/// the candidate site grid with the pvm's moments. A best-effort falsification
/// probe: rigidity predicts an optimum of zero for extreme-supported PVMs.
DeviationResult deviation_search(const OperatorMeasure& pvm, const std::vector<Vec2>& grid,
                                 const SitePredicate& F, const DeviationOptions& opts = {});

/// Moment constraints of a measure (unit + both coordinate moments).
struct MomentData {
    Matrix unit, mx, my;
};
MomentData measure_moments(const OperatorMeasure& m);

/// Project atom weights onto the affine set with the target moments
/// (least-squares via the 3x3 site Gram matrix; rank-deficient grids use the
/// pseudo-inverse). Returns the residual before projection.
double project_onto_moments(std::vector<Matrix>& weights, const std::vector<Vec2>& sites,
                            const MomentData& target);

/// Alternating (Dykstra) projection onto {moment constraints} x {PSD atoms}.
void dykstra_project(std::vector<Matrix>& weights, const std::vector<Vec2>& sites,
                     const MomentData& target, int iters, double tol = 1e-12);

/// Random POVM on given sites (weights of full rank, exact resolution of I).
OperatorMeasure random_povm(const std::vector<Vec2>& sites, int dimension, Rng& rng);

/// Mix the pvm toward a random POVM so the moment residual stays below
/// `residual_cap`; exercises the chain at its tolerance scale.
OperatorMeasure perturb_moment_matched(const OperatorMeasure& pvm, Rng& rng,
                                       double residual_cap = 1e-8);

}  // namespace hyperrigid
