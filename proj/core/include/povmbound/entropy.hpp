#pragma once

#include "povmbound/quantum.hpp"

namespace povmbound {

/// Entropy order: a positive real, with alpha = 1 represented by a distinguished
/// Shannon marker rather than a nearby value (the 1/(1-alpha) prefactor is
/// singular there).
class RenyiOrder {
public:
    static RenyiOrder shannon() { return RenyiOrder(1.0, true); }

    /// Throws InvalidOrderError unless 0 < alpha < inf. Exactly 1.0 yields the
    /// Shannon marker.
    static RenyiOrder of(double alpha);

    bool is_shannon() const { return shannon_; }
    double value() const { return value_; }

    friend bool operator==(const RenyiOrder& a, const RenyiOrder& b) {
        return a.shannon_ == b.shannon_ && a.value_ == b.value_;
    }

private:
    RenyiOrder(double value, bool shannon) : value_(value), shannon_(shannon) {}

    double value_;
    bool shannon_;
};

/// Orders satisfying 1/alpha + 1/beta = 2 (within 1e-12), both above 1/2.
/// Shannon pairs with Shannon.
class ConjugatePair {
public:
    /// beta is derived: conjugate_order(alpha).
    static ConjugatePair of(RenyiOrder alpha);

    /// Validates the conjugacy constraint on the supplied pair; throws
    /// OutOfRangeError when it fails or either order is <= 1/2.
    static ConjugatePair of(RenyiOrder alpha, RenyiOrder beta);

    RenyiOrder alpha() const { return alpha_; }
    RenyiOrder beta() const { return beta_; }

private:
    ConjugatePair(RenyiOrder alpha, RenyiOrder beta) : alpha_(alpha), beta_(beta) {}

    RenyiOrder alpha_;
    RenyiOrder beta_;
};

/// H_alpha(p) = log2(sum_i p_i^alpha) / (1 - alpha) in bits; Shannon entropy at
/// the marker. Zero-probability terms contribute nothing for every order.
double renyi_entropy(const ProbabilityDistribution& p, RenyiOrder order);

/// -sum_i p_i log2 p_i with 0 log 0 = 0.
double shannon_entropy(const ProbabilityDistribution& p);

/// beta = alpha / (2 alpha - 1), the involution pairing orders across
/// 1/alpha + 1/beta = 2. Rejects alpha <= 1/2 (no finite conjugate).
RenyiOrder conjugate_order(RenyiOrder alpha);

} // namespace povmbound
