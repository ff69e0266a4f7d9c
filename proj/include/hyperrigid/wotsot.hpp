#pragma once

#include <optional>
#include <vector>

#include "hyperrigid/geometry.hpp"
#include "hyperrigid/linalg.hpp"

namespace hyperrigid {

/// Weighted metrizations of the weak and strong operator topologies on
/// bounded sets: d_W sums 2^{-i-j} |<(S-T) e_j, e_i>| over 1-based indices,
/// d_S sums 2^{-j} ||(S-T) e_j||.
double wot_distance(const Matrix& S, const Matrix& T);
double sot_distance(const Matrix& S, const Matrix& T);

struct WotSotRow {
    int index = 0;
    double d_w = 0.0;
    double d_s = 0.0;
};

/// Distances of each family member to the limit. When `allowed_spectrum` is
/// given, every member must be normal with eigenvalues within `spectrum_tol`
/// of one of the allowed points (the rigid-family hypothesis); violations
/// throw.
std::vector<WotSotRow> wot_sot_metrics(const std::vector<Matrix>& family, const Matrix& limit,
                                       const std::optional<std::vector<Vec2>>& allowed_spectrum,
                                       double spectrum_tol = 1e-8);

/// Truncated shift cosines (S^n + S*^n)/2: WOT-null but SOT-bounded away from
/// zero. The control family for the metric experiments.
std::vector<Matrix> shift_cosine_family(int dim, int count);

/// Sign-flip involutions diag(1, ..., -1 at m, ..., 1): a normal family with
/// two-point spectrum converging to the identity in both topologies.
std::vector<Matrix> sign_flip_family(int dim, int count);

/// |  ||(A_n - A) e_j||^2 - (||e_j||^2 + ||A e_j||^2 - 2 Re<A_n e_j, A e_j>) |,
/// maximized over basis vectors. Exactly zero when ||A_n e_j|| = ||e_j||, so
/// it certifies the norm-preserving identity behind WOT-to-SOT transfer.
double sot_identity_residual(const Matrix& member, const Matrix& limit);

/// d_S(member, limit)^2 - sum_j 2^{-j} ( ||e_j||^2 + ||A e_j||^2
///   - 2 Re<A_n e_j, A e_j> ): nonpositive (Cauchy-Schwarz) for
/// norm-preserving members; the quantitative WOT-controls-SOT step.
double sot_bound_slack(const Matrix& member, const Matrix& limit);

}  // namespace hyperrigid
