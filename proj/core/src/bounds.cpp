#include "povmbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace povmbound {

namespace {

void require_same_dim(const Povm& m, const Povm& n) {
    if (m.dim() != n.dim()) {
        std::ostringstream msg;
        msg << "measurement dimensions differ (" << m.dim() << " vs " << n.dim() << ")";
        throw DimensionMismatchError(msg.str());
    }
}

void require_same_dim(const Povm& m, const DensityMatrix& rho) {
    if (m.dim() != rho.dim()) {
        std::ostringstream msg;
        msg << "measurement dim " << m.dim() << " vs state dim " << rho.dim();
        throw DimensionMismatchError(msg.str());
    }
}

double clamp_unit(double x) {
    return x > 1.0 ? 1.0 : x;
}

} // namespace

double cross_overlap(const Povm& m, const Povm& n, const Ket& psi) {
    require_same_dim(m, n);
    if (m.dim() != psi.dim()) {
        std::ostringstream msg;
        msg << "measurement dim " << m.dim() << " vs state dim " << psi.dim();
        throw DimensionMismatchError(msg.str());
    }

    const ComplexVector& v = psi.amplitudes();
    std::vector<ComplexVector> mv(m.size()), nv(n.size());
    std::vector<double> mnorm(m.size()), nnorm(n.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        mv[i] = m[i] * v;
        // ||M^{1/2} psi||^2 = <psi|M|psi>
        mnorm[i] = std::sqrt(std::max(0.0, v.dot(mv[i]).real()));
    }
    for (std::size_t j = 0; j < n.size(); ++j) {
        nv[j] = n[j] * v;
        nnorm[j] = std::sqrt(std::max(0.0, v.dot(nv[j]).real()));
    }

    double best = -1.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < n.size(); ++j) {
            const double denominator = mnorm[i] * nnorm[j];
            if (denominator <= tol::denominator_cutoff) {
                continue;
            }
            // <psi|M_i N_j|psi> = (M_i psi)^dagger (N_j psi)
            const double numerator = std::abs(mv[i].dot(nv[j]));
            best = std::max(best, numerator / denominator);
        }
    }
    if (best < 0.0) {
        throw Error("cross_overlap: no outcome pair with nonzero denominator");
    }
    if (best > 1.0 + 1e-9) {
        std::ostringstream msg;
        msg << "cross_overlap: ratio " << best << " exceeds one beyond round-off";
        throw Error(msg.str());
    }
    return clamp_unit(best);
}

double cross_overlap(const Povm& m, const Povm& n, const DensityMatrix& rho) {
    require_same_dim(m, n);
    require_same_dim(m, rho);
    double best = 0.0;
    for (const auto& [weight, vector] : spectral_decompose(rho)) {
        best = std::max(best, cross_overlap(m, n, vector));
    }
    return best;
}

double max_outcome_probability(const Povm& m, const DensityMatrix& rho) {
    const ProbabilityDistribution p = outcome_distribution(m, rho);
    double best = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        best = std::max(best, p[i]);
    }
    return clamp_unit(best);
}

double overlap_entropy_bound(const Povm& m, const Povm& n, const DensityMatrix& rho) {
    return -2.0 * std::log2(cross_overlap(m, n, rho));
}

double max_probability_bound(const Povm& m, const DensityMatrix& rho) {
    return -std::log2(max_outcome_probability(m, rho));
}

double uncoupled_entropy_bound(const Povm& m, const Povm& n, const DensityMatrix& rho) {
    return max_probability_bound(m, rho) + max_probability_bound(n, rho);
}

double max_cross_norm(const Povm& m, const Povm& n) {
    require_same_dim(m, n);
    std::vector<ComplexMatrix> m_roots(m.size()), n_roots(n.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        m_roots[i] = psd_sqrt(m[i]);
    }
    for (std::size_t j = 0; j < n.size(); ++j) {
        n_roots[j] = psd_sqrt(n[j]);
    }
    double best = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < n.size(); ++j) {
            best = std::max(best, operator_norm(m_roots[i] * n_roots[j]));
        }
    }
    return clamp_unit(best);
}

double cross_norm_bound(const Povm& m, const Povm& n) {
    return -2.0 * std::log2(max_cross_norm(m, n));
}

double element_norm_bound(const Povm& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        best = std::max(best, operator_norm(m[i]));
    }
    return -std::log2(clamp_unit(best));
}

namespace {

// Order set for one measurement: the pair order (when given) plus extras,
// deduplicated; Shannon when nothing was requested.
std::vector<RenyiOrder> effective_orders(const std::optional<RenyiOrder>& pair_order,
                                         const std::vector<RenyiOrder>& extra_orders) {
    std::vector<RenyiOrder> orders;
    auto push_unique = [&orders](RenyiOrder o) {
        if (std::find(orders.begin(), orders.end(), o) == orders.end()) {
            orders.push_back(o);
        }
    };
    if (pair_order) {
        push_unique(*pair_order);
    }
    for (RenyiOrder o : extra_orders) {
        push_unique(o);
    }
    if (orders.empty()) {
        orders.push_back(RenyiOrder::shannon());
    }
    return orders;
}

MeasurementReport measure(const Povm& m, const DensityMatrix& rho, std::string label,
                          const std::vector<RenyiOrder>& orders) {
    MeasurementReport rep;
    rep.label = std::move(label);
    const ProbabilityDistribution p = outcome_distribution(m, rho);
    rep.outcome_probabilities.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        rep.outcome_probabilities[i] = p[i];
    }
    for (RenyiOrder o : orders) {
        rep.entropies.push_back({o, renyi_entropy(p, o)});
    }
    rep.max_probability_bound = max_probability_bound(m, rho);
    rep.element_norm_bound = element_norm_bound(m);
    double min_entropy = std::numeric_limits<double>::infinity();
    for (const OrderEntropy& oe : rep.entropies) {
        min_entropy = std::min(min_entropy, oe.entropy);
    }
    rep.max_probability_slack = min_entropy - rep.max_probability_bound;
    rep.element_norm_slack = min_entropy - rep.element_norm_bound;
    return rep;
}

} // namespace

BoundReport check_instance(const Povm& m, const std::optional<Povm>& n,
                           const DensityMatrix& rho,
                           const std::optional<ConjugatePair>& pair,
                           const std::vector<RenyiOrder>& extra_orders) {
    require_same_dim(m, rho);
    if (n) {
        require_same_dim(*n, rho);
        require_same_dim(m, *n);
    }

    std::optional<RenyiOrder> alpha, beta;
    if (pair) {
        alpha = pair->alpha();
        beta = pair->beta();
    }
    const std::vector<RenyiOrder> orders_m = effective_orders(alpha, extra_orders);
    const std::vector<RenyiOrder> orders_n = effective_orders(beta, extra_orders);

    BoundReport report;
    report.first = measure(m, rho, "M", orders_m);
    if (pair) {
        report.alpha = pair->alpha().value();
        report.beta = pair->beta().value();
    }

    std::vector<std::pair<std::string, double>> slacks;
    slacks.emplace_back("max-probability bound (" + report.first.label + ")",
                        report.first.max_probability_slack);
    slacks.emplace_back("element-norm bound (" + report.first.label + ")",
                        report.first.element_norm_slack);

    if (n) {
        report.second = measure(*n, rho, "N", orders_n);
        slacks.emplace_back("max-probability bound (N)", report.second->max_probability_slack);
        slacks.emplace_back("element-norm bound (N)", report.second->element_norm_slack);

        PairReport pr;
        pr.overlap = cross_overlap(m, *n, rho);
        pr.max_cross_norm = max_cross_norm(m, *n);
        pr.uncoupled_bound = report.first.max_probability_bound + report.second->max_probability_bound;

        // Valid for arbitrary positive orders: minimize over every combination.
        double min_sum = std::numeric_limits<double>::infinity();
        for (const OrderEntropy& a : report.first.entropies) {
            for (const OrderEntropy& b : report.second->entropies) {
                min_sum = std::min(min_sum, a.entropy + b.entropy);
            }
        }
        pr.uncoupled_slack = min_sum - pr.uncoupled_bound;
        slacks.emplace_back("uncoupled bound", pr.uncoupled_slack);

        if (pair) {
            const double h_alpha = report.first.entropies.front().entropy;
            const double h_beta = report.second->entropies.front().entropy;
            pr.entropy_sum = h_alpha + h_beta;
            pr.overlap_bound = -2.0 * std::log2(pr.overlap);
            pr.overlap_slack = *pr.entropy_sum - *pr.overlap_bound;
            pr.cross_norm_bound = -2.0 * std::log2(pr.max_cross_norm);
            pr.cross_norm_slack = *pr.entropy_sum - *pr.cross_norm_bound;
            slacks.emplace_back("overlap bound", *pr.overlap_slack);
            slacks.emplace_back("cross-norm bound", *pr.cross_norm_slack);
        }
        report.pair = std::move(pr);
    }

    report.min_slack = std::numeric_limits<double>::infinity();
    for (const auto& [name, slack] : slacks) {
        report.min_slack = std::min(report.min_slack, slack);
        if (slack < tol::violation) {
            std::ostringstream msg;
            msg << name << " violated by " << -slack << " bits";
            report.violations.push_back(msg.str());
        }
    }
    return report;
}

} // namespace povmbound
