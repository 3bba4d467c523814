// End-to-end tests of the installed command surface: real subprocesses, real
// files, asserting the exit-code contract (0 ok, 1 input error, 2 violation).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "povmbound/io.hpp"
#include "povmbound/sampling.hpp"
#include "povmbound/scenarios.hpp"

#ifndef POVMBOUND_CLI_PATH
#error "POVMBOUND_CLI_PATH must point at the povmbound executable"
#endif
#ifndef POVMBOUND_TEST_DATA_DIR
#error "POVMBOUND_TEST_DATA_DIR must point at the fixture directory"
#endif

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "povmbound_cli_tests";
    fs::create_directories(dir);
    return dir;
}

CliResult run_cli(const std::string& args) {
    const fs::path out_path = scratch_dir() / "last_output.txt";
    std::ostringstream command;
    command << POVMBOUND_CLI_PATH << " " << args << " > " << out_path << " 2>&1";
    const int status = std::system(command.str().c_str());

    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream text;
    text << in.rdbuf();
    result.output = text.str();
    return result;
}

std::string write_scenario_instance() {
    const povmbound::DiscriminationScenario s = povmbound::discrimination_scenario();
    povmbound::Instance inst;
    inst.dim = 2;
    inst.ket = s.psi1.amplitudes();
    inst.povms.push_back({"unambiguous", s.unambiguous.elements()});
    inst.povms.push_back({"helstrom", s.helstrom.elements()});
    inst.orders = {0.3, 1.0, 2.0, 10.0};
    inst.pair = {2.0};

    const fs::path path = scratch_dir() / "scenario_instance.json";
    std::ofstream out(path);
    out << povmbound::serialize_instance(inst) << "\n";
    return path.string();
}

std::string fixture(const char* name) {
    return (fs::path(POVMBOUND_TEST_DATA_DIR) / name).string();
}

} // namespace

TEST_CASE("cli: paper-example passes with exit 0") {
    const CliResult result = run_cli("paper-example");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("PASS") != std::string::npos);
    CHECK(result.output.find("FAIL") == std::string::npos);
    CHECK(result.output.find("0.728446697") != std::string::npos);
}

TEST_CASE("cli: paper-example with the Shannon pair keeps the one-bit bound") {
    const CliResult result = run_cli("paper-example --pair 1 1");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("overlap bound          1.000000000") != std::string::npos);
}

TEST_CASE("cli: paper-example --json is machine readable") {
    const CliResult result = run_cli("paper-example --json");
    CHECK(result.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(result.output);
    CHECK(j["all_pass"] == true);
    CHECK(j["report"]["pair"]["overlap_bound"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

    // schema-stable across runs
    const CliResult again = run_cli("paper-example --json");
    CHECK(again.output == result.output);
}

TEST_CASE("cli: paper-example rejects a non-conjugate pair as input error") {
    const CliResult result = run_cli("paper-example --pair 2 0.7");
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("error") != std::string::npos);
}

TEST_CASE("cli: check accepts the scenario instance") {
    const std::string path = write_scenario_instance();
    const CliResult result = run_cli("check " + path);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("all bounds hold") != std::string::npos);
    CHECK(result.output.find("unambiguous") != std::string::npos);

    const CliResult json_result = run_cli("check " + path + " --json");
    CHECK(json_result.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(json_result.output);
    CHECK(j["violations"].empty());
    CHECK(j["pair"]["overlap_bound"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("cli: check accepts random valid instances") {
    for (std::uint64_t seed = 400; seed < 404; ++seed) {
        const povmbound::DensityMatrix rho =
            povmbound::random_density_matrix({seed, 3, 0, false, 2});
        povmbound::Instance inst;
        inst.dim = 3;
        inst.rho = rho.matrix();
        inst.povms.push_back(
            {"A", povmbound::random_povm({seed + 1000, 3, 4, false, 1}).elements()});
        inst.povms.push_back(
            {"B", povmbound::random_povm({seed + 2000, 3, 2, false, 1}).elements()});
        inst.orders = {0.3, 2.0};
        inst.pair = {2.0};

        const fs::path path = scratch_dir() / ("random_instance_" + std::to_string(seed) + ".json");
        std::ofstream out(path);
        out << povmbound::serialize_instance(inst) << "\n";
        out.close();

        const CliResult result = run_cli("check " + path.string());
        CHECK(result.exit_code == 0);
        CHECK(result.output.find("all bounds hold") != std::string::npos);
    }
}

TEST_CASE("cli: check rejects an incomplete measurement with exit 1") {
    const CliResult result = run_cli("check " + fixture("incomplete_povm.json"));
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("incomplete") != std::string::npos);
}

TEST_CASE("cli: check input errors all exit 1") {
    CHECK(run_cli("check " + fixture("malformed.json")).exit_code == 1);
    CHECK(run_cli("check /nonexistent/file.json").exit_code == 1);
    CHECK(run_cli("check").exit_code == 1); // missing argument
}

TEST_CASE("cli: check with a loosened tolerance accepts a slightly off measurement") {
    const CliResult strict = run_cli("check " + fixture("slightly_incomplete_povm.json"));
    CHECK(strict.exit_code == 1);
    const CliResult loose =
        run_cli("check " + fixture("slightly_incomplete_povm.json") + " --tol 1e-4");
    CHECK(loose.exit_code == 0);
}

TEST_CASE("cli: fuzz runs clean and is deterministic across job counts") {
    const CliResult serial = run_cli("fuzz --seed 11 --trials 120 --dims 2..4");
    CHECK(serial.exit_code == 0);
    CHECK(serial.output.find("violations                   0") != std::string::npos);

    const CliResult parallel = run_cli("fuzz --seed 11 --trials 120 --dims 2..4 --jobs 3");
    CHECK(parallel.exit_code == 0);
    // identical summaries modulo the echoed job count
    const CliResult serial_json = run_cli("fuzz --seed 11 --trials 120 --dims 2..4 --json");
    const CliResult parallel_json =
        run_cli("fuzz --seed 11 --trials 120 --dims 2..4 --jobs 3 --json");
    nlohmann::json a = nlohmann::json::parse(serial_json.output);
    nlohmann::json b = nlohmann::json::parse(parallel_json.output);
    a["config"].erase("jobs");
    b["config"].erase("jobs");
    CHECK(a == b);
}

TEST_CASE("cli: fuzz rank-one mode reports saturation") {
    const CliResult result = run_cli("fuzz --seed 4 --trials 60 --dims 2..4 --rank-one");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("saturation") != std::string::npos);
    CHECK(result.output.find("rank-one only") != std::string::npos);
}

TEST_CASE("cli: fuzz usage errors exit 1") {
    CHECK(run_cli("fuzz --seed 1 --trials 0 --dims 2..4").exit_code == 1);
    CHECK(run_cli("fuzz --seed 1 --trials 10 --dims nonsense").exit_code == 1);
    CHECK(run_cli("fuzz --seed 1 --trials 10 --dims 4..2").exit_code == 1);
    CHECK(run_cli("fuzz --trials 10 --dims 2..4").exit_code == 1); // seed required
}

TEST_CASE("cli: top-level usage") {
    CHECK(run_cli("").exit_code == 1);
    CHECK(run_cli("unknown-subcommand").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
}
