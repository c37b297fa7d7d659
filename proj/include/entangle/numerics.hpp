#pragma once

#include <complex>

#include <Eigen/Dense>

#include "entangle/errors.hpp"

namespace entangle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDefaultUnitaryTol = 1e-8;

/// Eigenvalues (unit modulus) and orthonormal eigenvector columns of a
/// unitary matrix, as produced by eigUnitary.
struct EigenPairs {
    Vector values;
    Matrix vectors;  // column i is the eigenvector for values[i]
};

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix adjoint(const Matrix& a);
double frobNorm(const Matrix& a);
double frobDistance(const Matrix& a, const Matrix& b);

/// Largest singular value via power iteration on A†A, all-ones start
/// vector, 200 iteration cap, relative tolerance 1e-10.
double opNormEstimate(const Matrix& a);

bool isUnitary(const Matrix& u, double tol = kDefaultUnitaryTol);

/// Complete eigendecomposition of a unitary matrix through its Schur form
/// (diagonal for normal matrices), so eigenvectors stay orthonormal even in
/// degenerate eigenspaces. Throws ContractError when isUnitary(u, tol) fails.
EigenPairs eigUnitary(const Matrix& u, double tol = kDefaultUnitaryTol);

/// exp(2*pi*i*phase). Exact at quarter turns so rational test spectra hit
/// +-1 and +-i without rounding.
Complex unitPhase(double phase);

/// z^n by binary exponentiation, n >= 0.
Complex powN(Complex z, long n);

/// Wraps a real number into [0,1).
double wrapPhase(double phase);

/// Circular distance between two phases, in cycles (result in [0, 0.5]).
double phaseDistance(double a, double b);

}  // namespace entangle
