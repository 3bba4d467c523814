#include <doctest.h>

#include "povmbound/linalg.hpp"
#include "povmbound/scenarios.hpp"
#include "test_helpers.hpp"

using namespace povmbound;
using test_helpers::max_abs_diff;
using test_helpers::random_hermitian;
using test_helpers::random_matrix;
using test_helpers::random_psd;
using test_helpers::random_unit_vector;

TEST_CASE("hermitian_eig: identity spectrum") {
    const EigenDecomposition eig = hermitian_eig(ComplexMatrix::Identity(3, 3));
    for (Eigen::Index k = 0; k < 3; ++k) {
        CHECK_NEAR(eig.eigenvalues[k], 1.0, 1e-14);
    }
    CHECK(max_abs_diff(eig.eigenvectors.adjoint() * eig.eigenvectors,
                       ComplexMatrix::Identity(3, 3)) <= 1e-10);
}

TEST_CASE("hermitian_eig: Pauli-X spectrum and phase convention") {
    ComplexMatrix x(2, 2);
    x << 0, 1, 1, 0;
    const EigenDecomposition eig = hermitian_eig(x);
    CHECK_NEAR(eig.eigenvalues[0], 1.0, 1e-14);
    CHECK_NEAR(eig.eigenvalues[1], -1.0, 1e-14);
    // first sizeable component of each eigenvector is real positive
    for (Eigen::Index k = 0; k < 2; ++k) {
        CHECK(eig.eigenvectors(0, k).real() > 0.0);
        CHECK_NEAR(eig.eigenvectors(0, k).imag(), 0.0, 1e-14);
    }
}

TEST_CASE("hermitian_eig: reconstruction oracle on random Hermitian, dim 6") {
    SplitMix64 rng(11);
    const ComplexMatrix a = random_hermitian(rng, 6);
    const EigenDecomposition eig = hermitian_eig(a);
    CHECK(max_abs_diff(eig.reconstruct(), a) <= 1e-10);
    CHECK(max_abs_diff(eig.eigenvectors.adjoint() * eig.eigenvectors,
                       ComplexMatrix::Identity(6, 6)) <= 1e-10);
    for (Eigen::Index k = 1; k < 6; ++k) {
        CHECK(eig.eigenvalues[k - 1] >= eig.eigenvalues[k]);
    }
}

TEST_CASE("hermitian_eig: deterministic output for identical input") {
    SplitMix64 rng(12);
    const ComplexMatrix a = random_hermitian(rng, 5);
    const EigenDecomposition first = hermitian_eig(a);
    const EigenDecomposition second = hermitian_eig(a);
    CHECK(first.eigenvalues == second.eigenvalues);
    CHECK(first.eigenvectors == second.eigenvectors);
}

TEST_CASE("hermitian_eig: rejects non-Hermitian, non-square, non-finite") {
    ComplexMatrix upper(2, 2);
    upper << 0, 1, 0, 0;
    CHECK_THROWS_AS(hermitian_eig(upper), NonHermitianError);
    try {
        hermitian_eig(upper);
    } catch (const NonHermitianError& e) {
        CHECK_NEAR(e.defect(), 1.0, 1e-14);
    }

    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::Zero(2, 3)), DimensionMismatchError);

    ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS(hermitian_eig(bad), ValidationError);
}

TEST_CASE("psd_sqrt: identity and diagonal cases") {
    CHECK(max_abs_diff(psd_sqrt(ComplexMatrix::Identity(4, 4)), ComplexMatrix::Identity(4, 4)) <=
          1e-12);

    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 4.0;
    d(1, 1) = 9.0;
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = 2.0;
    expected(1, 1) = 3.0;
    CHECK(max_abs_diff(psd_sqrt(d), expected) <= 1e-12);
}

TEST_CASE("psd_sqrt: scaled rank-one projector") {
    // c |-><-| with c = sqrt(2)/(sqrt(2)+1); the root scales the projector by sqrt(c).
    const double c = std::sqrt(2.0) / (std::sqrt(2.0) + 1.0);
    ComplexVector minus(2);
    minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
    const ComplexMatrix a = c * (minus * minus.adjoint());
    const ComplexMatrix s = psd_sqrt(a);
    CHECK(max_abs_diff(s, std::sqrt(c) * (minus * minus.adjoint())) <= 1e-12);
    CHECK(max_abs_diff(s * s, a) <= 1e-9);
}

TEST_CASE("psd_sqrt: clamps round-off negatives, rejects genuine ones") {
    ComplexMatrix nearly = ComplexMatrix::Zero(2, 2);
    nearly(0, 0) = 1.0;
    nearly(1, 1) = -5e-11;
    const ComplexMatrix s = psd_sqrt(nearly);
    CHECK_NEAR(s(1, 1).real(), 0.0, 1e-12);

    ComplexMatrix indefinite = ComplexMatrix::Zero(2, 2);
    indefinite(0, 0) = 1.0;
    indefinite(1, 1) = -1.0;
    CHECK_THROWS_AS(psd_sqrt(indefinite), NotPositiveError);
}

TEST_CASE("operator_norm: identity") {
    for (Eigen::Index n : {1, 2, 5}) {
        CHECK_NEAR(operator_norm(ComplexMatrix::Identity(n, n)), 1.0, 1e-12);
    }
}

TEST_CASE("operator_norm: discrimination cross products have norm sqrt(1/2)") {
    const Povm m = unambiguous_povm();
    const Povm n = helstrom_pvm();
    CHECK_NEAR(operator_norm(psd_sqrt(m[0]) * psd_sqrt(n[0])), std::sqrt(0.5), 1e-9);
    CHECK_NEAR(operator_norm(psd_sqrt(m[1]) * psd_sqrt(n[1])), std::sqrt(0.5), 1e-9);
}

TEST_CASE("operator_norm: random probes never exceed it; power iteration matches") {
    SplitMix64 rng(21);
    const ComplexMatrix q = random_matrix(rng, 5);
    const double norm = operator_norm(q);

    double probe_max = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const ComplexVector u = random_unit_vector(rng, 5);
        probe_max = std::max(probe_max, (q * u).norm());
    }
    CHECK(probe_max <= norm + 1e-6);

    // independent lower pin: power iteration on Q^dagger Q
    const ComplexMatrix gram = q.adjoint() * q;
    ComplexVector v = random_unit_vector(rng, 5);
    for (int it = 0; it < 500; ++it) {
        v = gram * v;
        v /= v.norm();
    }
    const double rayleigh = std::sqrt(v.dot(gram * v).real());
    CHECK_NEAR(rayleigh, norm, 1e-8);
}

TEST_CASE("trace_product: identities, orthogonal projectors, random oracle") {
    CHECK_NEAR(trace_product(ComplexMatrix::Identity(4, 4), ComplexMatrix::Identity(4, 4)).real(),
               4.0, 1e-12);

    ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    CHECK_NEAR(std::abs(trace_product(p0, p1)), 0.0, 1e-15);

    SplitMix64 rng(31);
    const ComplexMatrix a = random_matrix(rng, 4);
    const ComplexMatrix b = random_matrix(rng, 4);
    const std::complex<double> direct = (a * b).trace();
    CHECK(std::abs(trace_product(a, b) - direct) <= 1e-12);

    CHECK_THROWS_AS(trace_product(a, ComplexMatrix::Identity(3, 3)), DimensionMismatchError);
}

TEST_CASE("property: eigenvalue sum equals trace") {
    SplitMix64 rng(41);
    for (Eigen::Index n = 2; n <= 8; ++n) {
        const ComplexMatrix a = random_hermitian(rng, n);
        const EigenDecomposition eig = hermitian_eig(a);
        CHECK_NEAR(eig.eigenvalues.sum(), a.trace().real(), 1e-10);
    }
}

TEST_CASE("property: fourth power of the double square root restores the input") {
    SplitMix64 rng(42);
    for (Eigen::Index n = 2; n <= 8; ++n) {
        const ComplexMatrix a = random_psd(rng, n);
        const ComplexMatrix quarter = psd_sqrt(psd_sqrt(a));
        const ComplexMatrix squared = quarter * quarter;
        CHECK(max_abs_diff(squared * squared, a) <= 1e-8);
    }
}

TEST_CASE("property: operator norm is submultiplicative") {
    SplitMix64 rng(43);
    for (int k = 0; k < 20; ++k) {
        const auto n = static_cast<Eigen::Index>(rng.uniform_int(2, 6));
        const ComplexMatrix a = random_matrix(rng, n);
        const ComplexMatrix b = random_matrix(rng, n);
        CHECK(operator_norm(a * b) <= operator_norm(a) * operator_norm(b) + 1e-9);
    }
}

TEST_CASE("property: norm of a PSD operator is its top eigenvalue") {
    SplitMix64 rng(44);
    for (int k = 0; k < 20; ++k) {
        const auto n = static_cast<Eigen::Index>(rng.uniform_int(2, 6));
        const ComplexMatrix a = random_psd(rng, n);
        CHECK_NEAR(operator_norm(a), hermitian_eig(a).eigenvalues[0], 1e-10);
    }
}
