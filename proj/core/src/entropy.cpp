#include "povmbound/entropy.hpp"

#include <cmath>
#include <sstream>

namespace povmbound {

RenyiOrder RenyiOrder::of(double alpha) {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        std::ostringstream msg;
        msg << "RenyiOrder: order must be a positive finite real, got " << alpha;
        throw InvalidOrderError(msg.str());
    }
    if (alpha == 1.0) {
        return shannon();
    }
    return RenyiOrder(alpha, false);
}

ConjugatePair ConjugatePair::of(RenyiOrder alpha) {
    return ConjugatePair(alpha, conjugate_order(alpha));
}

ConjugatePair ConjugatePair::of(RenyiOrder alpha, RenyiOrder beta) {
    if (alpha.value() <= 0.5 || beta.value() <= 0.5) {
        throw OutOfRangeError("ConjugatePair: both orders must exceed 1/2");
    }
    const double defect = std::abs(1.0 / alpha.value() + 1.0 / beta.value() - 2.0);
    if (defect > tol::conjugacy) {
        std::ostringstream msg;
        msg << "ConjugatePair: orders are not conjugate, |1/alpha + 1/beta - 2| = " << defect;
        throw OutOfRangeError(msg.str());
    }
    return ConjugatePair(alpha, beta);
}

double renyi_entropy(const ProbabilityDistribution& p, RenyiOrder order) {
    if (order.is_shannon()) {
        return shannon_entropy(p);
    }
    const double alpha = order.value();
    double power_sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double pi = p[i];
        if (pi > tol::entropy_term_cutoff) {
            power_sum += std::pow(pi, alpha);
        }
    }
    const double h = std::log2(power_sum) / (1.0 - alpha);
    return h > 0.0 ? h : 0.0; // tiny negatives are pure round-off
}

double shannon_entropy(const ProbabilityDistribution& p) {
    double h = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double pi = p[i];
        if (pi > tol::entropy_term_cutoff) {
            h -= pi * std::log2(pi);
        }
    }
    return h > 0.0 ? h : 0.0;
}

RenyiOrder conjugate_order(RenyiOrder alpha) {
    if (alpha.is_shannon()) {
        return RenyiOrder::shannon();
    }
    const double a = alpha.value();
    if (a <= 0.5) {
        std::ostringstream msg;
        msg << "conjugate_order: no finite conjugate for order " << a << " <= 1/2";
        throw OutOfRangeError(msg.str());
    }
    return RenyiOrder::of(a / (2.0 * a - 1.0));
}

} // namespace povmbound
