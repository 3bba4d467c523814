#include "povmbound/scenarios.hpp"

#include <cmath>
#include <numbers>

namespace povmbound {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

ComplexMatrix projector(const ComplexVector& v) {
    return v * v.adjoint();
}

double expectation(const ComplexMatrix& op, const Ket& psi) {
    return psi.amplitudes().dot(op * psi.amplitudes()).real();
}

} // namespace

Povm helstrom_pvm() {
    ComplexVector x(2), y(2);
    x << std::cos(pi / 8.0), -std::sin(pi / 8.0);
    y << std::sin(pi / 8.0), std::cos(pi / 8.0);
    return Povm::validate({projector(x), projector(y)}, tol::completeness, {"psi1", "psi2"});
}

Povm unambiguous_povm() {
    const double c = sqrt2 / (sqrt2 + 1.0);
    ComplexVector minus(2), one(2);
    minus << 1.0 / sqrt2, -1.0 / sqrt2;
    one << 0.0, 1.0;
    const ComplexMatrix m1 = c * projector(minus);
    const ComplexMatrix m2 = c * projector(one);
    const ComplexMatrix m3 = ComplexMatrix::Identity(2, 2) - m1 - m2;
    return Povm::validate({m1, m2, m3}, tol::completeness, {"psi1", "psi2", "inconclusive"});
}

DiscriminationScenario discrimination_scenario() {
    ComplexVector plus(2);
    plus << 1.0 / sqrt2, 1.0 / sqrt2;
    Ket psi1 = Ket::basis_state(2, 0);
    Ket psi2{plus};
    const double overlap = std::abs(psi1.amplitudes().dot(psi2.amplitudes()));
    return DiscriminationScenario{std::move(psi1), std::move(psi2), helstrom_pvm(),
                                  unambiguous_povm(), overlap};
}

double helstrom_error_probability(const DiscriminationScenario& scenario) {
    return 0.5 * (expectation(scenario.helstrom[1], scenario.psi1) +
                  expectation(scenario.helstrom[0], scenario.psi2));
}

double inconclusive_probability(const DiscriminationScenario& scenario) {
    return expectation(scenario.unambiguous[2], scenario.psi1);
}

ExampleReport reference_example_report(const ConjugatePair& pair) {
    const DiscriminationScenario scenario = discrimination_scenario();
    const DensityMatrix rho = pure_density(scenario.psi1);

    ExampleReport out;
    out.report = check_instance(scenario.unambiguous, scenario.helstrom, rho, pair,
                                {RenyiOrder::shannon()});

    const double overlap = cross_overlap(scenario.unambiguous, scenario.helstrom, rho);
    const double phi_m = max_outcome_probability(scenario.unambiguous, rho);
    const double phi_n = max_outcome_probability(scenario.helstrom, rho);
    const double overlap_bound = overlap_entropy_bound(scenario.unambiguous, scenario.helstrom, rho);
    const double uncoupled = uncoupled_entropy_bound(scenario.unambiguous, scenario.helstrom, rho);
    const double log2_silver = std::log2(sqrt2 + 1.0);

    auto add = [&out](std::string name, double computed, double expected) {
        ExampleRow row;
        row.name = std::move(name);
        row.computed = computed;
        row.expected = expected;
        row.pass = std::abs(computed - expected) <= row.tolerance;
        out.rows.push_back(std::move(row));
    };

    add("state overlap |<psi1|psi2>|", scenario.overlap, 1.0 / sqrt2);
    add("cross overlap squared", overlap * overlap, 0.5);
    add("pair overlap bound [bits]", overlap_bound, 1.0);
    add("uncoupled bound on |psi1> [bits]", uncoupled, 2.0 - log2_silver);
    add("bound gap (overlap - uncoupled) [bits]", overlap_bound - uncoupled, log2_silver - 1.0);
    add("max outcome probability, unambiguous", phi_m, std::pow(2.0, -0.5));
    add("max outcome probability, helstrom", phi_n, std::pow(2.0, -1.5) * (sqrt2 + 1.0));
    add("max-probability bound, unambiguous [bits]",
        max_probability_bound(scenario.unambiguous, rho), 0.5);
    add("element-norm bound, unambiguous [bits]", element_norm_bound(scenario.unambiguous),
        log2_silver - 1.0);
    add("element-norm bound, helstrom [bits]", element_norm_bound(scenario.helstrom), 0.0);
    add("cross-norm bound [bits]", cross_norm_bound(scenario.unambiguous, scenario.helstrom), 1.0);
    add("helstrom error probability", helstrom_error_probability(scenario),
        (sqrt2 - 1.0) * std::pow(2.0, -1.5));
    add("inconclusive probability", inconclusive_probability(scenario), 1.0 / sqrt2);

    out.all_pass = !out.report.has_violation();
    for (const ExampleRow& row : out.rows) {
        out.all_pass = out.all_pass && row.pass;
    }
    return out;
}

} // namespace povmbound
