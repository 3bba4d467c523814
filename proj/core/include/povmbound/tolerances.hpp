#pragma once

// Numerical tolerances shared across the library. Validation thresholds come in
// two tiers: 1e-10 for single-operator invariants and 1e-9 for quantities that
// accumulate error over a whole measurement (completeness, distributions).

namespace povmbound::tol {

/// Max entrywise |A - A^dagger| accepted as Hermitian.
inline constexpr double hermitian = 1e-10;

/// Eigenvalues above this floor count as nonnegative; [floor, 0) is clamped to 0.
inline constexpr double eigenvalue_floor = -1e-10;

/// Max entrywise |sum_i M_i - 1| accepted as a complete measurement.
inline constexpr double completeness = 1e-9;

/// |trace(rho) - 1| accepted for states.
inline constexpr double unit_trace = 1e-10;

/// |<psi|psi> - 1| accepted for state vectors.
inline constexpr double unit_norm = 1e-10;

/// Probabilities may undershoot zero by round-off down to this value.
inline constexpr double probability_floor = -1e-12;

/// |sum_i p_i - 1| accepted for outcome distributions.
inline constexpr double distribution_sum = 1e-9;

/// Spectral weights at or below this cutoff are dropped from decompositions.
inline constexpr double spectral_cutoff = 1e-10;

/// Overlap-ratio denominators at or below this cutoff are excluded from the max.
inline constexpr double denominator_cutoff = 1e-12;

/// |1/alpha + 1/beta - 2| accepted for conjugate order pairs.
inline constexpr double conjugacy = 1e-12;

/// Probability terms at or below this threshold are skipped in entropy sums.
inline constexpr double entropy_term_cutoff = 1e-15;

/// A bound slack below this value counts as a genuine violation rather than round-off.
inline constexpr double violation = -1e-9;

} // namespace povmbound::tol
