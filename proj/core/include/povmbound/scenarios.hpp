#pragma once

#include "povmbound/bounds.hpp"

namespace povmbound {

/// Two-state discrimination setup: a sender picks |psi1> = |0> or
/// |psi2> = |+> and the receiver measures, either with the minimum-error
/// projective strategy or with the three-outcome unambiguous strategy.
struct DiscriminationScenario {
    Ket psi1;
    Ket psi2;
    Povm helstrom;     // {|x><x|, |y><y|}, minimum average error
    Povm unambiguous;  // {c|-><-|, c|1><1|, rest}, zero mis-identification
    double overlap;    // |<psi1|psi2>| = 1/sqrt(2)
};

/// Minimum-error projective measurement for the pair: |x> = cos(pi/8)|0> -
/// sin(pi/8)|1>, |y> = sin(pi/8)|0> + cos(pi/8)|1>.
Povm helstrom_pvm();

/// Unambiguous discrimination measurement: M_1 = sqrt(2)/(sqrt(2)+1)|-><-|,
/// M_2 = sqrt(2)/(sqrt(2)+1)|1><1|, M_3 the completion.
Povm unambiguous_povm();

DiscriminationScenario discrimination_scenario();

/// Average mis-identification probability of the projective strategy on
/// equiprobable inputs: (sqrt(2)-1) 2^{-3/2}.
double helstrom_error_probability(const DiscriminationScenario& scenario);

/// Probability of the inconclusive outcome of the unambiguous strategy,
/// identical for both inputs: 1/sqrt(2).
double inconclusive_probability(const DiscriminationScenario& scenario);

/// One checked quantity of the reference report: a computed value against its
/// closed form.
struct ExampleRow {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 1e-9;
    bool pass = false;
};

/// Every number of the discrimination example, each compared to its closed
/// form, plus the full bound report on (unambiguous, helstrom, |psi1>).
struct ExampleReport {
    std::vector<ExampleRow> rows;
    BoundReport report;
    bool all_pass = false;
};

/// Builds the scenario and checks each quantity at 1e-9 against closed forms
/// evaluated in double precision. The conjugate pair defaults to (2, 2/3);
/// the pair bounds themselves do not depend on it.
ExampleReport reference_example_report(
    const ConjugatePair& pair = ConjugatePair::of(RenyiOrder::of(2.0)));

} // namespace povmbound
