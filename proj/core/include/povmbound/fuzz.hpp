#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "povmbound/bounds.hpp"
#include "povmbound/sampling.hpp"

namespace povmbound {

/// Randomized verification sweep over (state, measurement pair) instances.
///
/// Trial i is a pure function of seed + i, so serial and parallel runs agree
/// and any trial replays via a run with that seed and trials = 1.
struct FuzzConfig {
    std::uint64_t seed = 1;
    long trials = 1000;
    Eigen::Index dim_lo = 2;
    Eigen::Index dim_hi = 6;
    Eigen::Index outcomes_lo = 2;
    Eigen::Index outcomes_hi = 5;
    /// All trials rank-one (saturation asserted); otherwise a per-trial coin
    /// decides, so the instance set mixes rank-one and general measurements.
    bool rank_one_only = false;
    int jobs = 1;
    /// Conjugate-pair orders checked against the overlap and cross-norm bounds.
    std::vector<double> pair_alphas = {0.6, 1.0, 2.0, 4.0};
    /// Orders checked against the single-measurement and uncoupled bounds.
    std::vector<double> single_alphas = {0.3, 1.0, 2.0, 10.0};
};

struct FuzzViolations {
    long overlap_bound = 0;      // conjugate-pair entropy sum vs -2 log2 overlap
    long max_probability = 0;    // single entropy vs -log2 max probability
    long uncoupled = 0;          // entropy sum vs uncoupled bound, all order combos
    long cross_norm = 0;         // conjugate-pair entropy sum vs state-independent pair bound
    long element_norm = 0;       // single entropy vs -log2 max element norm
    long overlap_ordering = 0;   // overlap exceeding its norm majorant
    long saturation = 0;         // rank-one overlap not matching the norm (asserted mode only)
    long dominance = 0;          // state-dependent bound below its state-independent counterpart

    long total() const {
        return overlap_bound + max_probability + uncoupled + cross_norm + element_norm +
               overlap_ordering + saturation + dominance;
    }
};

struct FuzzSummary {
    long trials = 0;
    FuzzViolations violations;
    /// Seed of the first violating trial (replay with trials = 1) and its index.
    std::optional<std::uint64_t> first_violation_seed;
    std::optional<long> first_violation_trial;

    // Minima start at +inf so merging is associative; they stay infinite only
    // when the corresponding check never ran.
    double min_overlap_slack = std::numeric_limits<double>::infinity();
    double min_max_probability_slack = std::numeric_limits<double>::infinity();
    double min_uncoupled_slack = std::numeric_limits<double>::infinity();
    double min_cross_norm_slack = std::numeric_limits<double>::infinity();
    double min_element_norm_slack = std::numeric_limits<double>::infinity();
    /// min over instances of (norm majorant - overlap); negative means ordering broke.
    double min_overlap_norm_gap = std::numeric_limits<double>::infinity();
    /// max over rank-one instances of |overlap - norm majorant|.
    double max_saturation_gap = 0.0;
    long rank_one_trials = 0;
    /// min over instances of (state-dependent - state-independent) bound gaps.
    double min_pair_dominance_gap = std::numeric_limits<double>::infinity();
    double min_single_dominance_gap = std::numeric_limits<double>::infinity();

    /// How often each pair bound was strictly stronger (neither dominates).
    long overlap_bound_stronger = 0;
    long uncoupled_bound_stronger = 0;

    void merge(const FuzzSummary& other);
};

/// Runs the sweep. Throws ValidationError on nonsensical configuration
/// (trials < 1, empty ranges, jobs < 1).
FuzzSummary run_fuzz(const FuzzConfig& config);

} // namespace povmbound
