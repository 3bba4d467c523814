#pragma once

#include <optional>
#include <string>
#include <vector>

#include "povmbound/entropy.hpp"
#include "povmbound/quantum.hpp"

namespace povmbound {

/// Largest normalized cross-measurement overlap for a pure state:
/// max over outcome pairs (i, j) of
///   |<psi| M_i N_j |psi>| / (||M_i^{1/2} psi|| ||N_j^{1/2} psi||),
/// the max restricted to pairs whose denominator exceeds 1e-12. Always in
/// (0, 1]: completeness guarantees a contributing pair, Cauchy-Schwarz caps
/// the ratio at one.
double cross_overlap(const Povm& m, const Povm& n, const Ket& psi);

/// Mixed-state extension: max of the pure overlap over eigenvectors of rho
/// with eigenvalue > 1e-10. Reduces to the pure form for rank-one rho. For
/// degenerate spectra the value depends on the deterministic eigenbasis
/// convention of hermitian_eig.
double cross_overlap(const Povm& m, const Povm& n, const DensityMatrix& rho);

/// Largest outcome probability max_i tr(M_i rho); in (0, 1].
double max_outcome_probability(const Povm& m, const DensityMatrix& rho);

/// Lower bound on H_alpha(M) + H_beta(N) for conjugate orders
/// (1/alpha + 1/beta = 2): -2 log2 of the cross overlap. Nonnegative.
double overlap_entropy_bound(const Povm& m, const Povm& n, const DensityMatrix& rho);

/// Lower bound on H_alpha(M) for every alpha > 0: -log2 of the largest
/// outcome probability. Nonnegative.
double max_probability_bound(const Povm& m, const DensityMatrix& rho);

/// Lower bound on H_alpha(M) + H_beta(N) for arbitrary alpha, beta > 0: the
/// sum of the two single-measurement bounds.
double uncoupled_entropy_bound(const Povm& m, const Povm& n, const DensityMatrix& rho);

/// max over (i, j) of ||M_i^{1/2} N_j^{1/2}||; upper-bounds the cross overlap
/// for every state, with equality when all elements are rank one.
double max_cross_norm(const Povm& m, const Povm& n);

/// State-independent lower bound on H_alpha(M) + H_beta(N) for conjugate
/// orders: -2 log2 max_cross_norm. Never exceeds overlap_entropy_bound.
double cross_norm_bound(const Povm& m, const Povm& n);

/// State-independent lower bound on H_alpha(M): -log2 max_i ||M_i||.
/// Zero for any projective measurement.
double element_norm_bound(const Povm& m);

struct OrderEntropy {
    RenyiOrder order;
    double entropy = 0.0;
};

/// Per-measurement slice of a report: outcome statistics, entropies at each
/// checked order, and the two single-measurement bounds with their slacks
/// (slack = min over checked orders of entropy - bound).
struct MeasurementReport {
    std::string label;
    std::vector<double> outcome_probabilities;
    std::vector<OrderEntropy> entropies;
    double max_probability_bound = 0.0;
    double max_probability_slack = 0.0;
    double element_norm_bound = 0.0;
    double element_norm_slack = 0.0;
};

/// Two-measurement slice: overlap and norm functionals plus the pair bounds.
/// Fields tied to the conjugate condition are absent when no pair was given.
struct PairReport {
    double overlap = 0.0;          // state-dependent cross overlap
    double max_cross_norm = 0.0;   // its state-independent majorant
    double uncoupled_bound = 0.0;
    double uncoupled_slack = 0.0;  // min over all checked order combinations
    std::optional<double> entropy_sum;       // H_alpha(M) + H_beta(N)
    std::optional<double> overlap_bound;     // -2 log2 overlap
    std::optional<double> overlap_slack;
    std::optional<double> cross_norm_bound;  // -2 log2 max_cross_norm
    std::optional<double> cross_norm_slack;
};

/// Everything computed for one (state, measurement(s)) instance. Entropies are
/// recomputed from the outcome distributions so the report is internally
/// consistent; any slack below -1e-9 lands in `violations`.
struct BoundReport {
    MeasurementReport first;
    std::optional<MeasurementReport> second;
    std::optional<PairReport> pair;
    std::optional<double> alpha; // conjugate pair echo, when supplied
    std::optional<double> beta;
    double min_slack = 0.0;
    std::vector<std::string> violations;

    bool has_violation() const { return !violations.empty(); }
};

/// Evaluates all applicable bounds and slacks for the instance.
///
/// Orders checked for the first measurement: {pair alpha} + extra_orders;
/// for the second: {pair beta} + extra_orders; Shannon when both are empty.
/// The conjugate-pair bounds are reported only when `pair` is supplied; the
/// uncoupled bound is checked across the full product of order sets.
BoundReport check_instance(const Povm& m, const std::optional<Povm>& n,
                           const DensityMatrix& rho,
                           const std::optional<ConjugatePair>& pair = {},
                           const std::vector<RenyiOrder>& extra_orders = {});

} // namespace povmbound
