#pragma once

#include <complex>

#include <Eigen/Dense>

#include "povmbound/errors.hpp"
#include "povmbound/tolerances.hpp"

namespace povmbound {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigensystem of a Hermitian operator.
///
/// Eigenvalues are sorted descending; column k of `eigenvectors` is the unit
/// eigenvector paired with `eigenvalues[k]`, phase-fixed so that the first
/// component of modulus > 1e-8 is real and positive. Within a degenerate
/// eigenspace only orthonormality is guaranteed, not a particular basis.
struct EigenDecomposition {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;

    Eigen::Index dim() const { return eigenvalues.size(); }

    /// V diag(lambda) V^dagger.
    ComplexMatrix reconstruct() const;
};

/// Max entrywise |A - A^dagger|.
double hermiticity_defect(const ComplexMatrix& a);

/// Diagonalizes a Hermitian matrix.
///
/// Deterministic for identical input: descending eigenvalue order and the
/// phase convention above.
///
/// Throws NonHermitianError if the defect exceeds tolerance, ValidationError
/// on non-finite entries, DimensionMismatchError on non-square input,
/// NoConvergenceError if the solver's iteration cap is hit.
EigenDecomposition hermitian_eig(const ComplexMatrix& a);

/// Hermitian PSD square root S with S*S = A.
///
/// Eigenvalues in [-1e-10, 0) are clamped to zero; below that floor the input
/// is rejected with NotPositiveError.
ComplexMatrix psd_sqrt(const ComplexMatrix& a);

/// Spectral norm: max over unit vectors u of ||Q u||, i.e. the largest
/// singular value, computed as sqrt of the top eigenvalue of Q^dagger Q.
double operator_norm(const ComplexMatrix& q);

/// tr(A*B) without forming the product.
std::complex<double> trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace povmbound
