#pragma once

#include <complex>
#include <vector>

#include "hyperrigid/rng.hpp"

namespace hyperrigid {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Sized for operator-model experiments
/// (dimensions up to a few dozen), not for large-scale numerics.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return a_[i * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[i * cols_ + j]; }

    Matrix adjoint() const;
    double frobenius_norm() const;
    cplx trace() const;
    bool is_hermitian(double tol) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(cplx s);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(cplx s, Matrix a);

struct HermitianEigen {
    std::vector<double> values;  // ascending
    Matrix vectors;              // columns are eigenvectors
};

/// Cyclic Jacobi for Hermitian matrices; full spectrum to machine precision.
HermitianEigen hermitian_eigen(const Matrix& H);

double min_eigenvalue(const Matrix& H);
double max_abs_eigenvalue(const Matrix& H);

/// Spectral norm via Hermitian eigenvalue iteration on A*A (power iteration
/// with a deterministic start and random restarts); relative tolerance on the
/// Rayleigh quotient.
double spectral_norm(const Matrix& A, double tol = 1e-11);

/// Extreme eigenpair of a Hermitian matrix by largest |eigenvalue|.
struct ExtremeEigen {
    double value = 0.0;
    std::vector<cplx> vector;
};
ExtremeEigen extreme_eigenpair(const Matrix& H);

/// Clip negative eigenvalues to zero.
Matrix psd_projection(const Matrix& H);

/// Hermitian inverse square root (eigenvalues clipped below at `floor`).
Matrix inverse_sqrt(const Matrix& H, double floor = 1e-13);

Matrix random_gaussian(int rows, int cols, Rng& rng);
Matrix random_unitary(int n, Rng& rng);
Matrix random_psd(int n, Rng& rng);

/// Eigenvalues of a normal matrix via joint diagonalization of its Hermitian
/// and anti-Hermitian parts. Throws if the normality residual exceeds tol.
std::vector<cplx> normal_spectrum(const Matrix& T, double tol = 1e-8);

}  // namespace hyperrigid
