#include "povmbound/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace povmbound {

namespace {

using nlohmann::ordered_json;

std::complex<double> parse_complex(const ordered_json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(path + ": complex scalars are two-element arrays [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

ComplexVector parse_vector(const ordered_json& j, Eigen::Index dim, const std::string& path) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim) {
        std::ostringstream msg;
        msg << path << ": expected an array of " << dim << " complex entries";
        throw ParseError(msg.str());
    }
    ComplexVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v[i] = parse_complex(j[static_cast<std::size_t>(i)],
                             path + "[" + std::to_string(i) + "]");
    }
    return v;
}

ComplexMatrix parse_matrix(const ordered_json& j, Eigen::Index dim, const std::string& path) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim) {
        std::ostringstream msg;
        msg << path << ": expected " << dim << " rows";
        throw ParseError(msg.str());
    }
    ComplexMatrix m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        const ordered_json& row = j[static_cast<std::size_t>(r)];
        const std::string row_path = path + "[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
            std::ostringstream msg;
            msg << row_path << ": expected " << dim << " complex entries";
            throw ParseError(msg.str());
        }
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = parse_complex(row[static_cast<std::size_t>(c)],
                                    row_path + "[" + std::to_string(c) + "]");
        }
    }
    return m;
}

ordered_json complex_json(const std::complex<double>& z) {
    return ordered_json::array({z.real(), z.imag()});
}

ordered_json vector_json(const ComplexVector& v) {
    ordered_json out = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(complex_json(v[i]));
    }
    return out;
}

ordered_json matrix_json(const ComplexMatrix& m) {
    ordered_json out = ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(complex_json(m(r, c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

// Fixed 9-decimal rendering, per the reporting tolerance.
std::string num9(double x) {
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    std::ostringstream out;
    out << std::fixed << std::setprecision(9) << x;
    return out.str();
}

std::string order_name(const RenyiOrder& order) {
    if (order.is_shannon()) {
        return "H_1 (Shannon)";
    }
    std::ostringstream out;
    out << "H_" << order.value();
    return out.str();
}

ordered_json order_json(const RenyiOrder& order) {
    return ordered_json{{"alpha", order.value()}, {"shannon", order.is_shannon()}};
}

ordered_json measurement_json(const MeasurementReport& m) {
    ordered_json entropies = ordered_json::array();
    for (const OrderEntropy& oe : m.entropies) {
        ordered_json entry = order_json(oe.order);
        entry["entropy"] = oe.entropy;
        entropies.push_back(std::move(entry));
    }
    return ordered_json{{"label", m.label},
                        {"outcomes", m.outcome_probabilities},
                        {"entropies", std::move(entropies)},
                        {"max_probability_bound", m.max_probability_bound},
                        {"max_probability_slack", m.max_probability_slack},
                        {"element_norm_bound", m.element_norm_bound},
                        {"element_norm_slack", m.element_norm_slack}};
}

void render_measurement_text(std::ostream& out, const MeasurementReport& m) {
    out << "measurement " << m.label << " (" << m.outcome_probabilities.size() << " outcomes)\n";
    out << "  outcome probabilities  [";
    for (std::size_t i = 0; i < m.outcome_probabilities.size(); ++i) {
        out << (i ? ", " : "") << num9(m.outcome_probabilities[i]);
    }
    out << "]\n";
    for (const OrderEntropy& oe : m.entropies) {
        out << "  " << order_name(oe.order) << " = " << num9(oe.entropy) << " bits\n";
    }
    out << "  max-probability bound  " << num9(m.max_probability_bound)
        << " bits   slack " << num9(m.max_probability_slack) << "\n";
    out << "  element-norm bound     " << num9(m.element_norm_bound)
        << " bits   slack " << num9(m.element_norm_slack) << "\n";
}

ordered_json optional_json(const std::optional<double>& v) {
    if (v) {
        return *v;
    }
    return nullptr;
}

} // namespace

Instance parse_instance(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("instance: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ParseError("instance: top level must be an object");
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
        throw ParseError("instance: missing integer field 'dim'");
    }
    Instance inst;
    inst.dim = j["dim"].get<Eigen::Index>();
    if (inst.dim < 1) {
        throw ParseError("instance: 'dim' must be positive");
    }

    if (!j.contains("state") || !j["state"].is_object()) {
        throw ParseError("instance: missing object field 'state'");
    }
    const ordered_json& state = j["state"];
    const bool has_ket = state.contains("ket");
    const bool has_rho = state.contains("rho");
    if (has_ket == has_rho) {
        throw ParseError("instance: 'state' must contain exactly one of 'ket' or 'rho'");
    }
    if (has_ket) {
        inst.ket = parse_vector(state["ket"], inst.dim, "state.ket");
    } else {
        inst.rho = parse_matrix(state["rho"], inst.dim, "state.rho");
    }

    if (!j.contains("povms") || !j["povms"].is_array() || j["povms"].empty()) {
        throw ParseError("instance: missing nonempty array field 'povms'");
    }
    for (std::size_t k = 0; k < j["povms"].size(); ++k) {
        const ordered_json& p = j["povms"][k];
        const std::string path = "povms[" + std::to_string(k) + "]";
        if (!p.is_object() || !p.contains("elements") || !p["elements"].is_array() ||
            p["elements"].empty()) {
            throw ParseError(path + ": expected an object with a nonempty 'elements' array");
        }
        InstanceMeasurement m;
        m.name = p.value("name", k == 0 ? std::string("M") : std::string("N"));
        for (std::size_t e = 0; e < p["elements"].size(); ++e) {
            m.elements.push_back(parse_matrix(p["elements"][e], inst.dim,
                                              path + ".elements[" + std::to_string(e) + "]"));
        }
        inst.povms.push_back(std::move(m));
    }

    if (j.contains("orders")) {
        if (!j["orders"].is_array()) {
            throw ParseError("instance: 'orders' must be an array of numbers");
        }
        for (const ordered_json& o : j["orders"]) {
            if (!o.is_number()) {
                throw ParseError("instance: 'orders' must be an array of numbers");
            }
            inst.orders.push_back(o.get<double>());
        }
    }
    if (j.contains("pair")) {
        if (!j["pair"].is_array() || j["pair"].empty() || j["pair"].size() > 2) {
            throw ParseError("instance: 'pair' must be [alpha] or [alpha, beta]");
        }
        for (const ordered_json& o : j["pair"]) {
            if (!o.is_number()) {
                throw ParseError("instance: 'pair' entries must be numbers");
            }
            inst.pair.push_back(o.get<double>());
        }
    }
    return inst;
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("instance: cannot open '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_instance(text.str());
}

std::string serialize_instance(const Instance& instance, int indent) {
    ordered_json j;
    j["dim"] = instance.dim;
    if (instance.ket) {
        j["state"] = ordered_json{{"ket", vector_json(*instance.ket)}};
    } else if (instance.rho) {
        j["state"] = ordered_json{{"rho", matrix_json(*instance.rho)}};
    } else {
        throw ValidationError("serialize_instance: instance carries no state");
    }
    j["povms"] = ordered_json::array();
    for (const InstanceMeasurement& m : instance.povms) {
        ordered_json elements = ordered_json::array();
        for (const ComplexMatrix& e : m.elements) {
            elements.push_back(matrix_json(e));
        }
        j["povms"].push_back(ordered_json{{"name", m.name}, {"elements", std::move(elements)}});
    }
    if (!instance.orders.empty()) {
        j["orders"] = instance.orders;
    }
    if (!instance.pair.empty()) {
        j["pair"] = instance.pair;
    }
    return j.dump(indent);
}

CheckedInstance validate_instance(const Instance& instance, double povm_tolerance) {
    if (instance.povms.empty() || instance.povms.size() > 2) {
        std::ostringstream msg;
        msg << "instance: expected 1 or 2 measurements, got " << instance.povms.size();
        throw ValidationError(msg.str());
    }

    std::optional<DensityMatrix> rho;
    if (instance.ket) {
        rho = pure_density(Ket(*instance.ket));
    } else if (instance.rho) {
        rho = DensityMatrix(*instance.rho);
    } else {
        throw ValidationError("instance: no state given");
    }

    Povm m = Povm::validate(instance.povms[0].elements, povm_tolerance);
    std::optional<Povm> n;
    std::string n_name;
    if (instance.povms.size() == 2) {
        n = Povm::validate(instance.povms[1].elements, povm_tolerance);
        n_name = instance.povms[1].name;
    }

    std::optional<ConjugatePair> pair;
    if (instance.pair.size() == 1) {
        pair = ConjugatePair::of(RenyiOrder::of(instance.pair[0]));
    } else if (instance.pair.size() == 2) {
        pair = ConjugatePair::of(RenyiOrder::of(instance.pair[0]),
                                 RenyiOrder::of(instance.pair[1]));
    }

    std::vector<RenyiOrder> orders;
    orders.reserve(instance.orders.size());
    for (double a : instance.orders) {
        orders.push_back(RenyiOrder::of(a));
    }

    return CheckedInstance{std::move(*rho), std::move(m),     std::move(n),
                           instance.povms[0].name,            std::move(n_name),
                           pair,                              std::move(orders)};
}

std::string render_report_text(const BoundReport& report) {
    std::ostringstream out;
    render_measurement_text(out, report.first);
    if (report.second) {
        render_measurement_text(out, *report.second);
    }
    if (report.pair) {
        const PairReport& pr = *report.pair;
        out << "measurement pair\n";
        out << "  cross overlap          " << num9(pr.overlap) << "\n";
        out << "  max cross norm         " << num9(pr.max_cross_norm) << "\n";
        if (report.alpha) {
            out << "  conjugate orders       (" << *report.alpha << ", " << *report.beta << ")\n";
            out << "  entropy sum            " << num9(*pr.entropy_sum) << " bits\n";
            out << "  overlap bound          " << num9(*pr.overlap_bound) << " bits   slack "
                << num9(*pr.overlap_slack) << "\n";
            out << "  cross-norm bound       " << num9(*pr.cross_norm_bound) << " bits   slack "
                << num9(*pr.cross_norm_slack) << "\n";
        }
        out << "  uncoupled bound        " << num9(pr.uncoupled_bound) << " bits   slack "
            << num9(pr.uncoupled_slack) << "\n";
    }
    out << "min slack " << num9(report.min_slack) << "\n";
    if (report.has_violation()) {
        for (const std::string& v : report.violations) {
            out << "VIOLATION: " << v << "\n";
        }
    } else {
        out << "all bounds hold\n";
    }
    return out.str();
}

std::string render_report_json(const BoundReport& report, int indent) {
    ordered_json j;
    ordered_json measurements = ordered_json::array();
    measurements.push_back(measurement_json(report.first));
    if (report.second) {
        measurements.push_back(measurement_json(*report.second));
    }
    j["measurements"] = std::move(measurements);
    if (report.alpha) {
        j["conjugate_pair"] = ordered_json{{"alpha", *report.alpha}, {"beta", *report.beta}};
    } else {
        j["conjugate_pair"] = nullptr;
    }
    if (report.pair) {
        const PairReport& pr = *report.pair;
        j["pair"] = ordered_json{{"overlap", pr.overlap},
                                 {"max_cross_norm", pr.max_cross_norm},
                                 {"entropy_sum", optional_json(pr.entropy_sum)},
                                 {"overlap_bound", optional_json(pr.overlap_bound)},
                                 {"overlap_slack", optional_json(pr.overlap_slack)},
                                 {"cross_norm_bound", optional_json(pr.cross_norm_bound)},
                                 {"cross_norm_slack", optional_json(pr.cross_norm_slack)},
                                 {"uncoupled_bound", pr.uncoupled_bound},
                                 {"uncoupled_slack", pr.uncoupled_slack}};
    } else {
        j["pair"] = nullptr;
    }
    j["min_slack"] = report.min_slack;
    j["violations"] = report.violations;
    return j.dump(indent);
}

std::string render_example_text(const ExampleReport& example) {
    std::ostringstream out;
    std::size_t width = 0;
    for (const ExampleRow& row : example.rows) {
        width = std::max(width, row.name.size());
    }
    for (const ExampleRow& row : example.rows) {
        out << (row.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width))
            << row.name << std::right << "  computed " << num9(row.computed) << "  expected "
            << num9(row.expected) << "\n";
    }
    out << "\n" << render_report_text(example.report);
    out << (example.all_pass ? "example reproduced: all rows match closed forms\n"
                             : "example FAILED to reproduce\n");
    return out.str();
}

std::string render_example_json(const ExampleReport& example, int indent) {
    ordered_json rows = ordered_json::array();
    for (const ExampleRow& row : example.rows) {
        rows.push_back(ordered_json{{"name", row.name},
                                    {"computed", row.computed},
                                    {"expected", row.expected},
                                    {"tolerance", row.tolerance},
                                    {"pass", row.pass}});
    }
    ordered_json j;
    j["rows"] = std::move(rows);
    j["report"] = ordered_json::parse(render_report_json(example.report, indent));
    j["all_pass"] = example.all_pass;
    return j.dump(indent);
}

namespace {

ordered_json finite_or_null(double v) {
    if (std::isinf(v)) {
        return nullptr;
    }
    return v;
}

} // namespace

std::string render_fuzz_text(const FuzzSummary& summary, const FuzzConfig& config) {
    std::ostringstream out;
    out << "fuzz: " << summary.trials << " trials, seed " << config.seed << ", dims "
        << config.dim_lo << ".." << config.dim_hi << ", outcomes " << config.outcomes_lo << ".."
        << config.outcomes_hi << (config.rank_one_only ? ", rank-one only" : "") << "\n";
    out << "  rank-one trials              " << summary.rank_one_trials << "\n";
    out << "  violations                   " << summary.violations.total() << "\n";
    out << "  min overlap-bound slack      " << num9(summary.min_overlap_slack) << "\n";
    out << "  min max-probability slack    " << num9(summary.min_max_probability_slack) << "\n";
    out << "  min uncoupled slack          " << num9(summary.min_uncoupled_slack) << "\n";
    out << "  min cross-norm slack         " << num9(summary.min_cross_norm_slack) << "\n";
    out << "  min element-norm slack       " << num9(summary.min_element_norm_slack) << "\n";
    out << "  min overlap/norm gap         " << num9(summary.min_overlap_norm_gap) << "\n";
    out << "  min dominance gap (pair)     " << num9(summary.min_pair_dominance_gap) << "\n";
    out << "  min dominance gap (single)   " << num9(summary.min_single_dominance_gap) << "\n";
    if (summary.rank_one_trials > 0) {
        out << "  max rank-one saturation gap  " << num9(summary.max_saturation_gap) << "\n";
    }
    out << "  overlap bound stronger       " << summary.overlap_bound_stronger << " trials\n";
    out << "  uncoupled bound stronger     " << summary.uncoupled_bound_stronger << " trials\n";
    if (summary.first_violation_seed) {
        out << "  first violation: trial " << *summary.first_violation_trial << ", replay with --seed "
            << *summary.first_violation_seed << " --trials 1\n";
    }
    return out.str();
}

std::string render_fuzz_json(const FuzzSummary& summary, const FuzzConfig& config, int indent) {
    ordered_json j;
    j["config"] = ordered_json{{"seed", config.seed},
                               {"trials", config.trials},
                               {"dims", {config.dim_lo, config.dim_hi}},
                               {"outcomes", {config.outcomes_lo, config.outcomes_hi}},
                               {"rank_one", config.rank_one_only},
                               {"jobs", config.jobs},
                               {"pair_alphas", config.pair_alphas},
                               {"single_alphas", config.single_alphas}};
    j["trials"] = summary.trials;
    j["rank_one_trials"] = summary.rank_one_trials;
    j["violations"] = ordered_json{{"overlap_bound", summary.violations.overlap_bound},
                                   {"max_probability", summary.violations.max_probability},
                                   {"uncoupled", summary.violations.uncoupled},
                                   {"cross_norm", summary.violations.cross_norm},
                                   {"element_norm", summary.violations.element_norm},
                                   {"overlap_ordering", summary.violations.overlap_ordering},
                                   {"saturation", summary.violations.saturation},
                                   {"dominance", summary.violations.dominance},
                                   {"total", summary.violations.total()}};
    j["min_slacks"] = ordered_json{
        {"overlap_bound", finite_or_null(summary.min_overlap_slack)},
        {"max_probability", finite_or_null(summary.min_max_probability_slack)},
        {"uncoupled", finite_or_null(summary.min_uncoupled_slack)},
        {"cross_norm", finite_or_null(summary.min_cross_norm_slack)},
        {"element_norm", finite_or_null(summary.min_element_norm_slack)},
        {"overlap_norm_gap", finite_or_null(summary.min_overlap_norm_gap)},
        {"pair_dominance_gap", finite_or_null(summary.min_pair_dominance_gap)},
        {"single_dominance_gap", finite_or_null(summary.min_single_dominance_gap)}};
    j["saturation"] = ordered_json{{"rank_one_trials", summary.rank_one_trials},
                                   {"max_gap", summary.max_saturation_gap},
                                   {"asserted", config.rank_one_only}};
    j["independence"] = ordered_json{{"overlap_bound_stronger", summary.overlap_bound_stronger},
                                     {"uncoupled_bound_stronger", summary.uncoupled_bound_stronger}};
    if (summary.first_violation_seed) {
        j["first_violation"] =
            ordered_json{{"trial", *summary.first_violation_trial},
                         {"seed", *summary.first_violation_seed}};
    } else {
        j["first_violation"] = nullptr;
    }
    return j.dump(indent);
}

} // namespace povmbound
