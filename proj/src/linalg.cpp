#include "hyperrigid/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hyperrigid {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

cplx Matrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

bool Matrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(cplx s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

HermitianEigen hermitian_eigen(const Matrix& H) {
    const int n = H.rows();
    if (n != H.cols()) throw std::invalid_argument("hermitian_eigen: square matrix required");
    Matrix a = H;
    Matrix v = Matrix::identity(n);

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += std::norm(a(i, j));
        return std::sqrt(2.0 * s);
    };

    const double scale = std::max(a.frobenius_norm(), 1e-300);
    for (int sweep = 0; sweep < 80 && off_norm() > 1e-15 * scale; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double beta = std::abs(apq);
                if (beta <= 1e-300) continue;
                // Phase-align the pivot, then a real Jacobi rotation.
                const cplx phase = apq / beta;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * beta);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sp = s * phase;  // rotation: col_p' = c*col_p - conj(sp)*col_q, etc.
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - std::conj(sp) * akq;
                    a(k, q) = sp * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - sp * aqk;
                    a(q, k) = std::conj(sp) * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(sp) * vkq;
                    v(k, q) = sp * vkp + c * vkq;
                }
            }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });
    HermitianEigen out;
    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

double min_eigenvalue(const Matrix& H) { return hermitian_eigen(H).values.front(); }

double max_abs_eigenvalue(const Matrix& H) {
    const auto e = hermitian_eigen(H);
    return std::max(std::fabs(e.values.front()), std::fabs(e.values.back()));
}

double spectral_norm(const Matrix& A, double tol) {
    const Matrix B = A.adjoint() * A;  // Hermitian PSD, largest eigenvalue = ||A||^2
    const int n = B.rows();
    if (n == 0) return 0.0;

    Rng rng(0x5DEECE66DULL);
    double best = 0.0;
    for (int restart = 0; restart < 3; ++restart) {
        std::vector<cplx> x(n);
        for (auto& v : x) v = cplx(rng.gauss(), rng.gauss());
        double lambda = 0.0;
        for (int it = 0; it < 20000; ++it) {
            std::vector<cplx> y(n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) y[i] += B(i, j) * x[j];
            double ynorm = 0.0;
            cplx rayleigh = 0.0;
            for (int i = 0; i < n; ++i) {
                ynorm += std::norm(y[i]);
                rayleigh += std::conj(x[i]) * y[i];
            }
            ynorm = std::sqrt(ynorm);
            if (ynorm <= 1e-300) { lambda = 0.0; break; }
            const double next = rayleigh.real();
            for (int i = 0; i < n; ++i) x[i] = y[i] / ynorm;
            if (it > 2 && std::fabs(next - lambda) <= tol * std::max(std::fabs(next), 1e-30)) {
                lambda = next;
                break;
            }
            lambda = next;
        }
        best = std::max(best, lambda);
    }
    return std::sqrt(std::max(best, 0.0));
}

ExtremeEigen extreme_eigenpair(const Matrix& H) {
    const auto e = hermitian_eigen(H);
    const int n = H.rows();
    ExtremeEigen out;
    const int idx =
        std::fabs(e.values.front()) >= std::fabs(e.values.back()) ? 0 : n - 1;
    out.value = e.values[idx];
    out.vector.resize(n);
    for (int i = 0; i < n; ++i) out.vector[i] = e.vectors(i, idx);
    return out;
}

Matrix psd_projection(const Matrix& H) {
    const auto e = hermitian_eigen(H);
    const int n = H.rows();
    Matrix out(n, n);
    for (int k = 0; k < n; ++k) {
        if (e.values[k] <= 0.0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += e.values[k] * e.vectors(i, k) * std::conj(e.vectors(j, k));
    }
    return out;
}

Matrix inverse_sqrt(const Matrix& H, double floor) {
    const auto e = hermitian_eigen(H);
    const int n = H.rows();
    Matrix out(n, n);
    for (int k = 0; k < n; ++k) {
        const double lam = std::max(e.values[k], floor);
        const double w = 1.0 / std::sqrt(lam);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += w * e.vectors(i, k) * std::conj(e.vectors(j, k));
    }
    return out;
}

Matrix random_gaussian(int rows, int cols, Rng& rng) {
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = cplx(rng.gauss(), rng.gauss());
    return m;
}

Matrix random_unitary(int n, Rng& rng) {
    // Gram-Schmidt of a Gaussian matrix.
    Matrix g = random_gaussian(n, n, rng);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            cplx ip = 0.0;
            for (int i = 0; i < n; ++i) ip += std::conj(g(i, k)) * g(i, j);
            for (int i = 0; i < n; ++i) g(i, j) -= ip * g(i, k);
        }
        double nrm = 0.0;
        for (int i = 0; i < n; ++i) nrm += std::norm(g(i, j));
        nrm = std::sqrt(nrm);
        for (int i = 0; i < n; ++i) g(i, j) /= nrm;
    }
    return g;
}

Matrix random_psd(int n, Rng& rng) {
    const Matrix g = random_gaussian(n, n, rng);
    Matrix p = g.adjoint() * g;
    p *= 1.0 / n;
    return p;
}

std::vector<cplx> normal_spectrum(const Matrix& T, double tol) {
    const int n = T.rows();
    if (n != T.cols()) throw std::invalid_argument("normal_spectrum: square matrix required");
    const Matrix comm = T * T.adjoint() - T.adjoint() * T;
    const double scale = std::max(1.0, T.frobenius_norm());
    if (comm.frobenius_norm() > tol * scale * scale)
        throw std::invalid_argument("normal_spectrum: matrix is not normal");

    Matrix X = T + T.adjoint();
    X *= 0.5;
    Matrix Y = T - T.adjoint();
    Y *= cplx(0.0, -0.5);

    const auto ex = hermitian_eigen(X);
    // Diagonalize Y within clusters of equal X-eigenvalues.
    std::vector<cplx> spectrum;
    const double cluster_tol = 1e-10 * scale + 1e-14;
    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && ex.values[end] - ex.values[end - 1] <= cluster_tol) ++end;
        const int m = end - start;
        Matrix basis(n, m);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) basis(i, j) = ex.vectors(i, start + j);
        const Matrix yc = basis.adjoint() * (Y * basis);
        const auto ey = hermitian_eigen(yc);
        for (int j = 0; j < m; ++j)
            spectrum.push_back(cplx(ex.values[start], ey.values[j]));
        start = end;
    }
    return spectrum;
}

}  // namespace hyperrigid
