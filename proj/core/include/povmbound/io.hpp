#pragma once

#include <optional>
#include <string>
#include <vector>

#include "povmbound/bounds.hpp"
#include "povmbound/fuzz.hpp"
#include "povmbound/scenarios.hpp"

namespace povmbound {

/// One named measurement as read from an instance file.
struct InstanceMeasurement {
    std::string name;
    std::vector<ComplexMatrix> elements;
};

/// Raw content of an instance file: a state (vector or matrix form), one or
/// two measurements, and optional entropy orders. Complex scalars are encoded
/// as [re, im]; matrices as row-major nested arrays.
struct Instance {
    Eigen::Index dim = 0;
    std::optional<ComplexVector> ket;
    std::optional<ComplexMatrix> rho;
    std::vector<InstanceMeasurement> povms;
    std::vector<double> orders;
    /// Empty, [alpha] (conjugate derived), or [alpha, beta].
    std::vector<double> pair;
};

/// Parses the JSON text of an instance file. Structural problems (bad JSON,
/// wrong complex encoding, inconsistent dims, missing fields) throw ParseError
/// naming the offending path.
Instance parse_instance(const std::string& json_text);

/// Reads and parses a file; missing/unreadable files throw ParseError.
Instance load_instance(const std::string& path);

/// Inverse of parse_instance: doubles survive a round trip bit-exactly.
std::string serialize_instance(const Instance& instance, int indent = 2);

/// Instance promoted to validated domain values.
struct CheckedInstance {
    DensityMatrix rho;
    Povm m;
    std::optional<Povm> n;
    std::string m_name;
    std::string n_name;
    std::optional<ConjugatePair> pair;
    std::vector<RenyiOrder> orders;
};

/// Runs every domain gate (state invariants, measurement validation at
/// `povm_tolerance`, order constraints). Domain errors propagate unchanged.
CheckedInstance validate_instance(const Instance& instance,
                                  double povm_tolerance = tol::completeness);

std::string render_report_text(const BoundReport& report);
std::string render_report_json(const BoundReport& report, int indent = 2);

std::string render_example_text(const ExampleReport& example);
std::string render_example_json(const ExampleReport& example, int indent = 2);

std::string render_fuzz_text(const FuzzSummary& summary, const FuzzConfig& config);
std::string render_fuzz_json(const FuzzSummary& summary, const FuzzConfig& config, int indent = 2);

} // namespace povmbound
