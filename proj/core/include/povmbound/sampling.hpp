#pragma once

#include <complex>
#include <cstdint>

#include "povmbound/quantum.hpp"

namespace povmbound {

/// SplitMix64: the counter-based generator pinned for every random draw in
/// this project (state advances by the 64-bit golden gamma; outputs pass
/// through the Steele-Lea-Flood avalanche). Identical seeds give identical
/// streams on any platform with 64-bit integers; derived doubles additionally
/// assume IEEE-754 and the platform libm for log/cos/sin.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform on (0, 1], 53-bit resolution.
    double uniform01() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    /// Integer uniform on [lo, hi].
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
        return lo + next() % (hi - lo + 1);
    }

    /// Standard complex Gaussian (real and imaginary parts independent
    /// N(0,1)) via Box-Muller.
    std::complex<double> complex_gaussian();

private:
    std::uint64_t state_;
};

/// Stateless seed derivation for independent substreams: the SplitMix64
/// avalanche applied to base + (tag + 1) * gamma.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag);

/// One deterministic sampling request. Identical configs produce identical
/// samples.
struct SampleConfig {
    std::uint64_t seed = 0;
    Eigen::Index dim = 2;
    Eigen::Index n_outcomes = 2;
    bool rank_one_only = false;
    Eigen::Index state_rank = 1;
};

/// Haar-distributed pure state: independent complex Gaussian components,
/// normalized, with the leading-component phase fixed real positive.
Ket random_pure_state(const SampleConfig& config);

/// rho = G G^dagger / tr(G G^dagger) with G of shape dim x state_rank.
DensityMatrix random_density_matrix(const SampleConfig& config);

/// Random measurement with exact completeness by construction: positive
/// parts A_i (rank one when rank_one_only) conjugated by the inverse square
/// root of their sum. rank_one_only requires n_outcomes >= dim.
///
/// Throws DegenerateSampleError if the sum stays numerically singular after
/// regularization across 8 attempts.
Povm random_povm(const SampleConfig& config);

/// The completeness-normalizing conjugation behind random_povm, exposed for
/// building measurements from explicit positive parts. Near-singular sums are
/// regularized by adding 1e-8 * ||S|| to the diagonal before inversion; the
/// result is validated and a failure surfaces as DegenerateSampleError.
Povm povm_from_positive_parts(const std::vector<ComplexMatrix>& parts);

} // namespace povmbound
