#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "povmbound/linalg.hpp"

namespace povmbound {

/// Unit-norm state vector.
class Ket {
public:
    /// Throws ValidationError unless |<psi|psi> - 1| <= 1e-10.
    explicit Ket(ComplexVector amplitudes);

    /// Computational basis state |k>.
    static Ket basis_state(Eigen::Index dim, Eigen::Index k);

    const ComplexVector& amplitudes() const { return amplitudes_; }
    Eigen::Index dim() const { return amplitudes_.size(); }

private:
    ComplexVector amplitudes_;
};

/// Unit-trace positive-semidefinite operator.
class DensityMatrix {
public:
    /// Validates Hermiticity (1e-10), positivity (eigenvalues >= -1e-10) and
    /// unit trace (1e-10). Throws NonHermitianError / NotPositiveError /
    /// ValidationError respectively.
    explicit DensityMatrix(ComplexMatrix matrix);

    static DensityMatrix maximally_mixed(Eigen::Index dim);

    const ComplexMatrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    ComplexMatrix matrix_;
};

/// Generalized measurement: positive operators summing to the identity.
class Povm {
public:
    /// Validates each element (Hermitian, eigenvalues >= -1e-10) and
    /// completeness of the sum at `tolerance` per entry. Labels, when given,
    /// must match the element count.
    ///
    /// Throws NonHermitianError(i) / NotPositiveError(i, min eigenvalue) /
    /// IncompleteError(max deviation).
    static Povm validate(std::vector<ComplexMatrix> elements,
                         double tolerance = tol::completeness,
                         std::vector<std::string> labels = {});

    Eigen::Index dim() const { return elements_.front().rows(); }
    std::size_t size() const { return elements_.size(); }
    const ComplexMatrix& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<ComplexMatrix>& elements() const { return elements_; }

    /// Outcome names; empty when none were given.
    const std::vector<std::string>& labels() const { return labels_; }
    /// Label of outcome i, or its index as text.
    std::string label(std::size_t i) const;

private:
    Povm(std::vector<ComplexMatrix> elements, std::vector<std::string> labels)
        : elements_(std::move(elements)), labels_(std::move(labels)) {}

    std::vector<ComplexMatrix> elements_;
    std::vector<std::string> labels_;
};

/// Nonnegative reals summing to one. Entries may undershoot zero by round-off
/// down to -1e-12 and read back clamped to zero.
class ProbabilityDistribution {
public:
    explicit ProbabilityDistribution(std::vector<double> probabilities);

    std::size_t size() const { return probabilities_.size(); }
    double operator[](std::size_t i) const {
        const double p = probabilities_[i];
        return p > 0.0 ? p : 0.0;
    }

private:
    std::vector<double> probabilities_;
};

/// p_i = Re tr(M_i rho). Asserts the imaginary residue stays below 1e-10.
ProbabilityDistribution outcome_distribution(const Povm& m, const DensityMatrix& rho);

/// Eigenpairs of rho with weight > cutoff, weights descending and summing to
/// one (within 1e-9), vectors orthonormal.
std::vector<std::pair<double, Ket>> spectral_decompose(const DensityMatrix& rho,
                                                       double cutoff = tol::spectral_cutoff);

/// |psi><psi|.
DensityMatrix pure_density(const Ket& psi);

} // namespace povmbound
