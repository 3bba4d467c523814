#include "povmbound/sampling.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace povmbound {

namespace {

constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;
constexpr int kPovmAttempts = 8;

// Relative eigenvalue threshold below which the normalization sum counts as
// singular and gets regularized.
constexpr double kSingularCutoff = 1e-12;

std::uint64_t avalanche(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

ComplexMatrix gaussian_matrix(SplitMix64& rng, Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix g(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            g(i, j) = rng.complex_gaussian();
        }
    }
    return g;
}

void require_positive_dim(const SampleConfig& config) {
    if (config.dim < 1) {
        throw ValidationError("SampleConfig: dim must be positive");
    }
}

} // namespace

std::complex<double> SplitMix64::complex_gaussian() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
    return avalanche(base + (tag + 1) * kGamma);
}

Ket random_pure_state(const SampleConfig& config) {
    require_positive_dim(config);
    SplitMix64 rng(derive_seed(config.seed, 0));
    ComplexVector v(config.dim);
    for (Eigen::Index i = 0; i < config.dim; ++i) {
        v[i] = rng.complex_gaussian();
    }
    v /= v.norm();
    // Global phase is unphysical; fixing it keeps samples reproducible as
    // values, not just as rays.
    for (Eigen::Index i = 0; i < config.dim; ++i) {
        const double mod = std::abs(v[i]);
        if (mod > 1e-8) {
            v *= std::conj(v[i]) / mod;
            break;
        }
    }
    return Ket(std::move(v));
}

DensityMatrix random_density_matrix(const SampleConfig& config) {
    require_positive_dim(config);
    if (config.state_rank < 1 || config.state_rank > config.dim) {
        std::ostringstream msg;
        msg << "SampleConfig: state_rank " << config.state_rank << " outside [1, " << config.dim
            << "]";
        throw ValidationError(msg.str());
    }
    SplitMix64 rng(derive_seed(config.seed, 1));
    const ComplexMatrix g = gaussian_matrix(rng, config.dim, config.state_rank);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Exact Hermitian symmetrization; the product picks up round-off.
    rho = ((rho + rho.adjoint()) / 2.0).eval();
    return DensityMatrix(std::move(rho));
}

Povm povm_from_positive_parts(const std::vector<ComplexMatrix>& parts) {
    if (parts.empty()) {
        throw ValidationError("povm_from_positive_parts: empty part list");
    }
    const Eigen::Index dim = parts.front().rows();
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (const ComplexMatrix& a : parts) {
        sum += a;
    }
    sum = ((sum + sum.adjoint()) / 2.0).eval();

    EigenDecomposition eig = hermitian_eig(sum);
    const double top = eig.eigenvalues[0];
    const double bottom = eig.eigenvalues[eig.dim() - 1];
    if (!(top > 0.0)) {
        throw DegenerateSampleError("povm_from_positive_parts: sum of parts is zero");
    }
    RealVector inv_roots(eig.dim());
    const double shift = bottom <= kSingularCutoff * top ? 1e-8 * top : 0.0;
    for (Eigen::Index k = 0; k < eig.dim(); ++k) {
        inv_roots[k] = 1.0 / std::sqrt(eig.eigenvalues[k] + shift);
    }
    const ComplexMatrix whitener =
        eig.eigenvectors * inv_roots.asDiagonal() * eig.eigenvectors.adjoint();

    std::vector<ComplexMatrix> elements;
    elements.reserve(parts.size());
    for (const ComplexMatrix& a : parts) {
        ComplexMatrix m = whitener * a * whitener;
        elements.push_back(((m + m.adjoint()) / 2.0).eval());
    }
    try {
        return Povm::validate(std::move(elements));
    } catch (const Error& e) {
        throw DegenerateSampleError(
            std::string("povm_from_positive_parts: normalized parts failed validation: ") +
            e.what());
    }
}

Povm random_povm(const SampleConfig& config) {
    require_positive_dim(config);
    if (config.n_outcomes < 1) {
        throw ValidationError("SampleConfig: n_outcomes must be positive");
    }
    if (config.rank_one_only && config.n_outcomes < config.dim) {
        std::ostringstream msg;
        msg << "SampleConfig: a rank-one measurement needs n_outcomes >= dim ("
            << config.n_outcomes << " < " << config.dim << ")";
        throw ValidationError(msg.str());
    }

    for (int attempt = 0; attempt < kPovmAttempts; ++attempt) {
        SplitMix64 rng(derive_seed(config.seed, 2 + static_cast<std::uint64_t>(attempt)));
        std::vector<ComplexMatrix> parts;
        parts.reserve(static_cast<std::size_t>(config.n_outcomes));
        for (Eigen::Index i = 0; i < config.n_outcomes; ++i) {
            if (config.rank_one_only) {
                const ComplexMatrix g = gaussian_matrix(rng, config.dim, 1);
                parts.push_back(g * g.adjoint());
            } else {
                const ComplexMatrix g = gaussian_matrix(rng, config.dim, config.dim);
                parts.push_back(g * g.adjoint());
            }
        }
        try {
            return povm_from_positive_parts(parts);
        } catch (const DegenerateSampleError&) {
            // resample with a fresh substream
        }
    }
    throw DegenerateSampleError("random_povm: singular normalization in 8 consecutive attempts");
}

} // namespace povmbound
