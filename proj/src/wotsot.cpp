#include "hyperrigid/wotsot.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hyperrigid {

double wot_distance(const Matrix& S, const Matrix& T) {
    const int n = S.rows();
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double wi = std::ldexp(1.0, -(i + 1));
        for (int j = 0; j < n; ++j)
            acc += wi * std::ldexp(1.0, -(j + 1)) * std::abs(S(i, j) - T(i, j));
    }
    return acc;
}

double sot_distance(const Matrix& S, const Matrix& T) {
    const int n = S.rows();
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        double col = 0.0;
        for (int i = 0; i < n; ++i) col += std::norm(S(i, j) - T(i, j));
        acc += std::ldexp(1.0, -(j + 1)) * std::sqrt(col);
    }
    return acc;
}

std::vector<WotSotRow> wot_sot_metrics(const std::vector<Matrix>& family, const Matrix& limit,
                                       const std::optional<std::vector<Vec2>>& allowed_spectrum,
                                       double spectrum_tol) {
    std::vector<WotSotRow> rows;
    int idx = 0;
    for (const auto& member : family) {
        ++idx;
        if (allowed_spectrum) {
            for (const cplx& lam : normal_spectrum(member, spectrum_tol)) {
                double best = std::numeric_limits<double>::infinity();
                for (const Vec2& p : *allowed_spectrum)
                    best = std::min(best, std::hypot(lam.real() - p.x, lam.imag() - p.y));
                if (best > spectrum_tol)
                    throw std::invalid_argument(
                        "wot_sot_metrics: family member has spectrum outside the allowed set");
            }
        }
        rows.push_back({idx, wot_distance(member, limit), sot_distance(member, limit)});
    }
    return rows;
}

std::vector<Matrix> shift_cosine_family(int dim, int count) {
    std::vector<Matrix> family;
    for (int n = 1; n <= count; ++n) {
        Matrix a(dim, dim);
        for (int j = 0; j + n < dim; ++j) {
            a(j + n, j) = 0.5;  // S^n
            a(j, j + n) = 0.5;  // S*^n
        }
        family.push_back(std::move(a));
    }
    return family;
}

std::vector<Matrix> sign_flip_family(int dim, int count) {
    std::vector<Matrix> family;
    for (int m = 1; m <= count && m <= dim; ++m) {
        Matrix a = Matrix::identity(dim);
        a(m - 1, m - 1) = -1.0;
        family.push_back(std::move(a));
    }
    return family;
}

double sot_identity_residual(const Matrix& member, const Matrix& limit) {
    const int n = member.rows();
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
        double lhs = 0.0, norm_aj = 0.0;
        cplx ip = 0.0;
        for (int i = 0; i < n; ++i) {
            lhs += std::norm(member(i, j) - limit(i, j));
            norm_aj += std::norm(limit(i, j));
            ip += std::conj(member(i, j)) * limit(i, j);
        }
        const double rhs = 1.0 + norm_aj - 2.0 * ip.real();
        worst = std::max(worst, std::fabs(lhs - rhs));
    }
    return worst;
}

double sot_bound_slack(const Matrix& member, const Matrix& limit) {
    const int n = member.rows();
    double rhs = 0.0;
    for (int j = 0; j < n; ++j) {
        double norm_aj = 0.0;
        cplx ip = 0.0;
        for (int i = 0; i < n; ++i) {
            norm_aj += std::norm(limit(i, j));
            ip += std::conj(member(i, j)) * limit(i, j);
        }
        rhs += std::ldexp(1.0, -(j + 1)) * (1.0 + norm_aj - 2.0 * ip.real());
    }
    const double ds = sot_distance(member, limit);
    return ds * ds - rhs;
}

}  // namespace hyperrigid
