#include "povmbound/quantum.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace povmbound {

Ket::Ket(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw ValidationError("Ket: dimension must be positive");
    }
    if (!amplitudes_.allFinite()) {
        throw ValidationError("Ket: amplitudes must be finite");
    }
    const double norm_defect = std::abs(amplitudes_.squaredNorm() - 1.0);
    if (norm_defect > tol::unit_norm) {
        std::ostringstream msg;
        msg << "Ket: state vector is not unit norm (|<psi|psi> - 1| = " << norm_defect << ")";
        throw ValidationError(msg.str());
    }
}

Ket Ket::basis_state(Eigen::Index dim, Eigen::Index k) {
    ComplexVector v = ComplexVector::Zero(dim);
    v[k] = 1.0;
    return Ket(std::move(v));
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
        throw DimensionMismatchError("DensityMatrix: expected a nonempty square matrix");
    }
    if (!matrix_.allFinite()) {
        throw ValidationError("DensityMatrix: entries must be finite");
    }
    const double trace_defect = std::abs(matrix_.trace() - std::complex<double>(1.0, 0.0));
    if (trace_defect > tol::unit_trace) {
        std::ostringstream msg;
        msg << "DensityMatrix: trace deviates from one by " << trace_defect;
        throw ValidationError(msg.str());
    }
    EigenDecomposition eig = hermitian_eig(matrix_); // throws NonHermitianError
    const double min_eig = eig.eigenvalues[eig.dim() - 1];
    if (min_eig < tol::eigenvalue_floor) {
        std::ostringstream msg;
        msg << "DensityMatrix: negative eigenvalue " << min_eig;
        throw NotPositiveError(msg.str(), min_eig);
    }
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

Povm Povm::validate(std::vector<ComplexMatrix> elements, double tolerance,
                    std::vector<std::string> labels) {
    if (elements.empty()) {
        throw ValidationError("Povm: element list must be nonempty");
    }
    if (!labels.empty() && labels.size() != elements.size()) {
        throw ValidationError("Povm: label count does not match element count");
    }
    const Eigen::Index dim = elements.front().rows();
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const ComplexMatrix& m = elements[i];
        if (m.rows() != dim || m.cols() != dim || dim == 0) {
            std::ostringstream msg;
            msg << "Povm: element " << i << " is " << m.rows() << "x" << m.cols()
                << ", expected " << dim << "x" << dim;
            throw DimensionMismatchError(msg.str());
        }
        if (!m.allFinite()) {
            std::ostringstream msg;
            msg << "Povm: element " << i << " has non-finite entries";
            throw ValidationError(msg.str());
        }
        const double defect = hermiticity_defect(m);
        if (defect > tol::hermitian) {
            std::ostringstream msg;
            msg << "Povm: element " << i << " is not Hermitian (defect " << defect << ")";
            throw NonHermitianError(msg.str(), defect, static_cast<std::ptrdiff_t>(i));
        }
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw NoConvergenceError("Povm: eigensolver failed on element");
        }
        const double min_eig = solver.eigenvalues().minCoeff();
        if (min_eig < tol::eigenvalue_floor) {
            std::ostringstream msg;
            msg << "Povm: element " << i << " is not positive (min eigenvalue " << min_eig << ")";
            throw NotPositiveError(msg.str(), min_eig, static_cast<std::ptrdiff_t>(i));
        }
    }
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (const ComplexMatrix& m : elements) {
        sum += m;
    }
    const double deviation = (sum - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (deviation > tolerance) {
        std::ostringstream msg;
        msg << "Povm: incomplete, elements do not sum to the identity (max deviation " << deviation
            << ")";
        throw IncompleteError(msg.str(), deviation);
    }
    return Povm(std::move(elements), std::move(labels));
}

std::string Povm::label(std::size_t i) const {
    if (i < labels_.size()) {
        return labels_[i];
    }
    return std::to_string(i);
}

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> probabilities)
    : probabilities_(std::move(probabilities)) {
    if (probabilities_.empty()) {
        throw ValidationError("ProbabilityDistribution: must be nonempty");
    }
    double sum = 0.0;
    for (double p : probabilities_) {
        if (!std::isfinite(p)) {
            throw ValidationError("ProbabilityDistribution: entries must be finite");
        }
        if (p < tol::probability_floor) {
            std::ostringstream msg;
            msg << "ProbabilityDistribution: entry " << p << " below round-off floor";
            throw ValidationError(msg.str());
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol::distribution_sum) {
        std::ostringstream msg;
        msg << "ProbabilityDistribution: entries sum to " << sum;
        throw ValidationError(msg.str());
    }
}

ProbabilityDistribution outcome_distribution(const Povm& m, const DensityMatrix& rho) {
    if (m.dim() != rho.dim()) {
        std::ostringstream msg;
        msg << "outcome_distribution: measurement dim " << m.dim() << " vs state dim " << rho.dim();
        throw DimensionMismatchError(msg.str());
    }
    std::vector<double> probs(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        const std::complex<double> t = trace_product(m[i], rho.matrix());
        if (std::abs(t.imag()) > tol::hermitian) {
            std::ostringstream msg;
            msg << "outcome_distribution: tr(M_" << i << " rho) has imaginary residue " << t.imag();
            throw ValidationError(msg.str());
        }
        probs[i] = t.real();
    }
    return ProbabilityDistribution(std::move(probs));
}

std::vector<std::pair<double, Ket>> spectral_decompose(const DensityMatrix& rho, double cutoff) {
    EigenDecomposition eig = hermitian_eig(rho.matrix());
    std::vector<std::pair<double, Ket>> terms;
    for (Eigen::Index k = 0; k < eig.dim(); ++k) {
        const double weight = eig.eigenvalues[k];
        if (weight > cutoff) {
            ComplexVector v = eig.eigenvectors.col(k);
            v /= v.norm(); // re-normalize away solver round-off before the Ket gate
            terms.emplace_back(weight, Ket(std::move(v)));
        }
    }
    return terms;
}

DensityMatrix pure_density(const Ket& psi) {
    return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

} // namespace povmbound
