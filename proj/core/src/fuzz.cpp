#include "povmbound/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

namespace povmbound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct TrialInstance {
    DensityMatrix rho;
    Povm m;
    Povm n;
    bool rank_one;
};

TrialInstance build_instance(const FuzzConfig& cfg, std::uint64_t trial_seed) {
    SplitMix64 shape(derive_seed(trial_seed, 100));

    // A rank-one measurement needs at least dim outcomes to be complete, so
    // rank-one-only mode clamps the dimension range and mixed mode flips the
    // rank-one coin only where completion is feasible.
    Eigen::Index dim_hi = cfg.dim_hi;
    if (cfg.rank_one_only) {
        dim_hi = std::min(dim_hi, cfg.outcomes_hi);
    }
    const auto dim = static_cast<Eigen::Index>(shape.uniform_int(
        static_cast<std::uint64_t>(cfg.dim_lo), static_cast<std::uint64_t>(dim_hi)));
    const bool rank_one =
        cfg.rank_one_only || (cfg.outcomes_hi >= dim && (shape.next() & 1u) != 0);
    const Eigen::Index outcomes_lo = rank_one ? std::max(cfg.outcomes_lo, dim) : cfg.outcomes_lo;
    const auto outcomes_m = static_cast<Eigen::Index>(shape.uniform_int(
        static_cast<std::uint64_t>(outcomes_lo), static_cast<std::uint64_t>(cfg.outcomes_hi)));
    const auto outcomes_n = static_cast<Eigen::Index>(shape.uniform_int(
        static_cast<std::uint64_t>(outcomes_lo), static_cast<std::uint64_t>(cfg.outcomes_hi)));
    const auto state_rank =
        static_cast<Eigen::Index>(shape.uniform_int(1, static_cast<std::uint64_t>(dim)));

    SampleConfig state_cfg{derive_seed(trial_seed, 101), dim, 0, false, state_rank};
    SampleConfig m_cfg{derive_seed(trial_seed, 102), dim, outcomes_m, rank_one, 1};
    SampleConfig n_cfg{derive_seed(trial_seed, 103), dim, outcomes_n, rank_one, 1};
    return TrialInstance{random_density_matrix(state_cfg), random_povm(m_cfg),
                         random_povm(n_cfg), rank_one};
}

class SlackTracker {
public:
    SlackTracker(double& min_slot, long& violation_counter)
        : min_slot_(min_slot), violations_(violation_counter) {}

    bool observe(double slack) {
        min_slot_ = std::min(min_slot_, slack);
        if (slack < tol::violation) {
            ++violations_;
            return false;
        }
        return true;
    }

private:
    double& min_slot_;
    long& violations_;
};

void run_trial(const FuzzConfig& cfg, long trial, FuzzSummary& out) {
    const std::uint64_t trial_seed = cfg.seed + static_cast<std::uint64_t>(trial);
    const TrialInstance inst = build_instance(cfg, trial_seed);
    ++out.trials;
    if (inst.rank_one) {
        ++out.rank_one_trials;
    }

    const ProbabilityDistribution p_m = outcome_distribution(inst.m, inst.rho);
    const ProbabilityDistribution p_n = outcome_distribution(inst.n, inst.rho);

    const double overlap = cross_overlap(inst.m, inst.n, inst.rho);
    const double norm_major = max_cross_norm(inst.m, inst.n);
    const double overlap_bound = -2.0 * std::log2(overlap);
    const double pair_norm_bound = -2.0 * std::log2(norm_major);
    const double prob_bound_m = max_probability_bound(inst.m, inst.rho);
    const double prob_bound_n = max_probability_bound(inst.n, inst.rho);
    const double uncoupled = prob_bound_m + prob_bound_n;
    const double norm_bound_m = element_norm_bound(inst.m);
    const double norm_bound_n = element_norm_bound(inst.n);

    bool ok = true;

    // Overlap never exceeds its state-independent majorant.
    {
        SlackTracker tracker(out.min_overlap_norm_gap, out.violations.overlap_ordering);
        ok &= tracker.observe(norm_major - overlap);
    }
    if (inst.rank_one) {
        const double gap = std::abs(norm_major - overlap);
        out.max_saturation_gap = std::max(out.max_saturation_gap, gap);
        if (cfg.rank_one_only && gap > 1e-9) {
            ++out.violations.saturation;
            ok = false;
        }
    }
    // State-dependent bounds dominate their state-independent weakenings.
    {
        SlackTracker tracker(out.min_pair_dominance_gap, out.violations.dominance);
        ok &= tracker.observe(overlap_bound - pair_norm_bound);
    }
    {
        SlackTracker tracker(out.min_single_dominance_gap, out.violations.dominance);
        ok &= tracker.observe(prob_bound_m - norm_bound_m);
        ok &= tracker.observe(prob_bound_n - norm_bound_n);
    }

    // Conjugate-pair bounds.
    for (double a : cfg.pair_alphas) {
        const ConjugatePair pair = ConjugatePair::of(RenyiOrder::of(a));
        const double sum = renyi_entropy(p_m, pair.alpha()) + renyi_entropy(p_n, pair.beta());
        SlackTracker overlap_tracker(out.min_overlap_slack, out.violations.overlap_bound);
        ok &= overlap_tracker.observe(sum - overlap_bound);
        SlackTracker norm_tracker(out.min_cross_norm_slack, out.violations.cross_norm);
        ok &= norm_tracker.observe(sum - pair_norm_bound);
    }

    // Single-measurement and uncoupled bounds, arbitrary positive orders.
    std::vector<double> h_m, h_n;
    h_m.reserve(cfg.single_alphas.size());
    h_n.reserve(cfg.single_alphas.size());
    for (double a : cfg.single_alphas) {
        const RenyiOrder order = RenyiOrder::of(a);
        h_m.push_back(renyi_entropy(p_m, order));
        h_n.push_back(renyi_entropy(p_n, order));
    }
    for (std::size_t i = 0; i < cfg.single_alphas.size(); ++i) {
        SlackTracker prob_tracker(out.min_max_probability_slack, out.violations.max_probability);
        ok &= prob_tracker.observe(h_m[i] - prob_bound_m);
        ok &= prob_tracker.observe(h_n[i] - prob_bound_n);
        SlackTracker norm_tracker(out.min_element_norm_slack, out.violations.element_norm);
        ok &= norm_tracker.observe(h_m[i] - norm_bound_m);
        ok &= norm_tracker.observe(h_n[i] - norm_bound_n);
        for (std::size_t j = 0; j < cfg.single_alphas.size(); ++j) {
            SlackTracker unc_tracker(out.min_uncoupled_slack, out.violations.uncoupled);
            ok &= unc_tracker.observe(h_m[i] + h_n[j] - uncoupled);
        }
    }

    if (overlap_bound > uncoupled) {
        ++out.overlap_bound_stronger;
    } else if (uncoupled > overlap_bound) {
        ++out.uncoupled_bound_stronger;
    }

    if (!ok && !out.first_violation_seed) {
        out.first_violation_seed = trial_seed;
        out.first_violation_trial = trial;
    }
}

void validate_config(const FuzzConfig& cfg) {
    std::ostringstream msg;
    if (cfg.trials < 1) {
        throw ValidationError("fuzz: trials must be >= 1");
    }
    if (cfg.dim_lo < 1 || cfg.dim_hi < cfg.dim_lo) {
        msg << "fuzz: invalid dim range " << cfg.dim_lo << ".." << cfg.dim_hi;
        throw ValidationError(msg.str());
    }
    if (cfg.outcomes_lo < 1 || cfg.outcomes_hi < cfg.outcomes_lo) {
        msg << "fuzz: invalid outcome range " << cfg.outcomes_lo << ".." << cfg.outcomes_hi;
        throw ValidationError(msg.str());
    }
    if (cfg.rank_one_only && cfg.outcomes_hi < cfg.dim_lo) {
        msg << "fuzz: rank-one measurements need outcomes up to at least the smallest dimension ("
            << cfg.outcomes_hi << " < " << cfg.dim_lo << ")";
        throw ValidationError(msg.str());
    }
    if (cfg.jobs < 1) {
        throw ValidationError("fuzz: jobs must be >= 1");
    }
    for (double a : cfg.pair_alphas) {
        if (!(a > 0.5)) {
            msg << "fuzz: conjugate-pair order " << a << " must exceed 1/2";
            throw ValidationError(msg.str());
        }
    }
    for (double a : cfg.single_alphas) {
        if (!(a > 0.0)) {
            msg << "fuzz: order " << a << " must be positive";
            throw ValidationError(msg.str());
        }
    }
}

} // namespace

void FuzzSummary::merge(const FuzzSummary& other) {
    trials += other.trials;
    violations.overlap_bound += other.violations.overlap_bound;
    violations.max_probability += other.violations.max_probability;
    violations.uncoupled += other.violations.uncoupled;
    violations.cross_norm += other.violations.cross_norm;
    violations.element_norm += other.violations.element_norm;
    violations.overlap_ordering += other.violations.overlap_ordering;
    violations.saturation += other.violations.saturation;
    violations.dominance += other.violations.dominance;
    if (other.first_violation_trial &&
        (!first_violation_trial || *other.first_violation_trial < *first_violation_trial)) {
        first_violation_trial = other.first_violation_trial;
        first_violation_seed = other.first_violation_seed;
    }
    min_overlap_slack = std::min(min_overlap_slack, other.min_overlap_slack);
    min_max_probability_slack = std::min(min_max_probability_slack, other.min_max_probability_slack);
    min_uncoupled_slack = std::min(min_uncoupled_slack, other.min_uncoupled_slack);
    min_cross_norm_slack = std::min(min_cross_norm_slack, other.min_cross_norm_slack);
    min_element_norm_slack = std::min(min_element_norm_slack, other.min_element_norm_slack);
    min_overlap_norm_gap = std::min(min_overlap_norm_gap, other.min_overlap_norm_gap);
    max_saturation_gap = std::max(max_saturation_gap, other.max_saturation_gap);
    rank_one_trials += other.rank_one_trials;
    min_pair_dominance_gap = std::min(min_pair_dominance_gap, other.min_pair_dominance_gap);
    min_single_dominance_gap = std::min(min_single_dominance_gap, other.min_single_dominance_gap);
    overlap_bound_stronger += other.overlap_bound_stronger;
    uncoupled_bound_stronger += other.uncoupled_bound_stronger;
}

FuzzSummary run_fuzz(const FuzzConfig& config) {
    validate_config(config);
    const int jobs = static_cast<int>(std::min<long>(config.jobs, config.trials));

    if (jobs <= 1) {
        FuzzSummary summary;
        for (long t = 0; t < config.trials; ++t) {
            run_trial(config, t, summary);
        }
        return summary;
    }

    std::vector<FuzzSummary> partials(static_cast<std::size_t>(jobs));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            try {
                // Static contiguous partition; trials are independent, so any
                // split yields the same merged summary.
                const long lo = config.trials * w / jobs;
                const long hi = config.trials * (w + 1) / jobs;
                for (long t = lo; t < hi; ++t) {
                    run_trial(config, t, partials[static_cast<std::size_t>(w)]);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (std::thread& worker : workers) {
        worker.join();
    }
    for (const std::exception_ptr& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    FuzzSummary summary = partials.front();
    for (std::size_t w = 1; w < partials.size(); ++w) {
        summary.merge(partials[w]);
    }
    return summary;
}

} // namespace povmbound
