#include "povmbound/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace povmbound {

namespace {

constexpr double kPhasePivotThreshold = 1e-8;

void require_square_finite(const ComplexMatrix& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        std::ostringstream msg;
        msg << who << ": expected a nonempty square matrix, got " << a.rows() << "x" << a.cols();
        throw DimensionMismatchError(msg.str());
    }
    if (!a.allFinite()) {
        throw ValidationError(std::string(who) + ": matrix entries must be finite");
    }
}

// Makes the first component of modulus > threshold real positive.
void fix_column_phase(Eigen::Ref<ComplexVector> column) {
    for (Eigen::Index i = 0; i < column.size(); ++i) {
        const double mod = std::abs(column[i]);
        if (mod > kPhasePivotThreshold) {
            column *= std::conj(column[i]) / mod;
            return;
        }
    }
}

} // namespace

ComplexMatrix EigenDecomposition::reconstruct() const {
    return eigenvectors * eigenvalues.asDiagonal() * eigenvectors.adjoint();
}

double hermiticity_defect(const ComplexMatrix& a) {
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

EigenDecomposition hermitian_eig(const ComplexMatrix& a) {
    require_square_finite(a, "hermitian_eig");
    const double defect = hermiticity_defect(a);
    if (!(defect <= tol::hermitian)) {
        std::ostringstream msg;
        msg << "hermitian_eig: input is not Hermitian (defect " << defect << ")";
        throw NonHermitianError(msg.str(), defect);
    }

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw NoConvergenceError("hermitian_eig: eigensolver iteration cap reached");
    }

    // Eigen returns ascending order; flip to descending.
    const Eigen::Index n = a.rows();
    EigenDecomposition out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
        fix_column_phase(out.eigenvectors.col(k));
    }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& a) {
    EigenDecomposition eig = hermitian_eig(a);
    RealVector roots(eig.dim());
    for (Eigen::Index k = 0; k < eig.dim(); ++k) {
        const double lambda = eig.eigenvalues[k];
        if (lambda < tol::eigenvalue_floor) {
            std::ostringstream msg;
            msg << "psd_sqrt: input has negative eigenvalue " << lambda;
            throw NotPositiveError(msg.str(), lambda);
        }
        roots[k] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    }
    return eig.eigenvectors * roots.asDiagonal() * eig.eigenvectors.adjoint();
}

double operator_norm(const ComplexMatrix& q) {
    require_square_finite(q, "operator_norm");
    // Q^dagger Q is Hermitian by construction up to round-off scaled by ||Q||^2,
    // so skip the absolute hermiticity gate; the solver reads the lower triangle.
    const ComplexMatrix gram = q.adjoint() * q;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NoConvergenceError("operator_norm: eigensolver iteration cap reached");
    }
    const double top = solver.eigenvalues().maxCoeff();
    return std::sqrt(std::max(top, 0.0));
}

std::complex<double> trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square_finite(a, "trace_product");
    require_square_finite(b, "trace_product");
    if (a.rows() != b.rows()) {
        std::ostringstream msg;
        msg << "trace_product: dimensions differ (" << a.rows() << " vs " << b.rows() << ")";
        throw DimensionMismatchError(msg.str());
    }
    // tr(AB) = sum_ij A_ij B_ji
    return (a.array() * b.transpose().array()).sum();
}

} // namespace povmbound
