// SPDX-License-Identifier: Apache-2.0
//
// End-to-end runs: build the schedule and circuit, simulate, sample, and
// assemble a machine-readable report. File formats are documented in the
// project README.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpqs/qasm.hpp"
#include "fpqs/sampling.hpp"
#include "fpqs/schedule.hpp"
#include "fpqs/search.hpp"

namespace fpqs {

struct RunConfig {
    int qubits = 2;
    std::vector<std::string> targets = {"00"};
    int iterations = 1;
    double delta = 1.0;
    int shots = 8192;
    std::uint64_t seed = 0;
    OracleMode oracle_mode = OracleMode::Direct;
    std::optional<NoiseModel> noise;
    bool tomography = false;
    std::optional<int> grover_baseline;
    std::string out_json; // empty = do not write
    std::string out_csv;
    std::string out_qasm;
    QasmLayout layout = QasmLayout::Logical;
};

struct CircuitStats {
    int gate_count = 0;
    int depth = 0;
};

struct GroverSection {
    int iterations = 0;
    double predicted_probability = 0.0;
    std::map<std::string, double> ideal_probabilities;
    std::map<std::string, int> histogram;
    CircuitStats circuit;
};

struct TomographySection {
    std::map<std::string, double> pauli_expectations;
    std::vector<std::vector<double>> rho_real;
    std::vector<std::vector<double>> rho_imag;
    double fidelity = 0.0;
    int discarded_shots = 0; // ancilla post-selection only
};

struct RunReport {
    RunConfig config;
    AngleSchedule schedule;
    double predicted_probability = 0.0;
    std::map<std::string, double> ideal_probabilities; // search-register outcomes
    std::map<std::string, int> histogram;
    std::optional<std::map<std::string, int>> noisy_histogram;
    std::optional<TomographySection> tomography;
    std::optional<GroverSection> grover;
    CircuitStats circuit;
};

/// Validates the configuration, runs every requested stage, and returns the
/// report. Performs no file I/O. Throws std::invalid_argument on bad
/// parameter combinations.
RunReport run(const RunConfig& config);

nlohmann::json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::json& j);

/// One row per outcome: bitstring, ideal_probability, count, noisy_count
/// (empty when no noise was configured).
std::string to_csv(const RunReport& report);

/// Rebuilds the run's main circuit and exports it (used for --qasm).
std::string qasm_for_config(const RunConfig& config);

/// Writes whichever of out_json / out_csv / out_qasm are set. Contents are
/// deterministic functions of the config. Throws std::runtime_error if a
/// file cannot be opened.
void write_outputs(const RunReport& report, const RunConfig& config);

} // namespace fpqs
