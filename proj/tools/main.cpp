// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: builds the schedule and circuit for one search
// configuration, simulates it, and writes JSON/CSV/QASM outputs.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fpqs/report.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            parts.push_back(item);
        }
    }
    return parts;
}

// "p1=..,p2=..,ro=.." with the stand-in defaults for missing keys;
// "default" selects all three defaults.
fpqs::NoiseModel parse_noise(const std::string& text) {
    fpqs::NoiseModel noise{0.001, 0.01, 0.02};
    if (text == "default" || text == "defaults") {
        return noise;
    }
    for (const std::string& part : split_commas(text)) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("bad --noise entry (expected key=value): " + part);
        }
        const std::string key = part.substr(0, eq);
        const double value = std::stod(part.substr(eq + 1));
        if (key == "p1") {
            noise.p1 = value;
        } else if (key == "p2") {
            noise.p2 = value;
        } else if (key == "ro") {
            noise.readout_flip = value;
        } else {
            throw std::invalid_argument("unknown --noise key: " + key);
        }
    }
    return noise;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fixed-point quantum search simulator"};

    fpqs::RunConfig config;
    std::string targets = "00";
    std::string oracle_mode = "direct";
    std::string noise_spec;
    std::string layout = "logical";
    int grover_baseline = -1;

    app.add_option("--qubits", config.qubits, "Search register size")->capture_default_str();
    app.add_option("--targets", targets, "Comma-separated marked bitstrings")
        ->capture_default_str();
    app.add_option("--iterations", config.iterations, "Number of search iterations l")
        ->capture_default_str();
    app.add_option("--delta", config.delta, "Failure-amplitude bound in (0, 1]")->required();
    app.add_option("--shots", config.shots, "Shots per histogram")->capture_default_str();
    app.add_option("--seed", config.seed, "64-bit RNG seed")->capture_default_str();
    app.add_option("--oracle-mode", oracle_mode, "direct | ancilla")->capture_default_str();
    app.add_option("--noise", noise_spec,
                   "Depolarizing + readout noise, e.g. p1=0.001,p2=0.01,ro=0.02 or 'default'");
    app.add_flag("--tomography", config.tomography, "Reconstruct the search-register state");
    app.add_option("--grover-baseline", grover_baseline,
                   "Also run a plain Grover baseline with this iteration count");
    app.add_option("--out", config.out_json, "JSON report path");
    app.add_option("--csv", config.out_csv, "CSV report path");
    app.add_option("--qasm", config.out_qasm, "OpenQASM 2.0 export path");
    app.add_option("--layout", layout, "QASM wire layout: logical | reversed_hardware")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        config.targets = split_commas(targets);
        if (oracle_mode == "direct") {
            config.oracle_mode = fpqs::OracleMode::Direct;
        } else if (oracle_mode == "ancilla") {
            config.oracle_mode = fpqs::OracleMode::Ancilla;
        } else {
            throw std::invalid_argument("unknown --oracle-mode: " + oracle_mode);
        }
        if (layout == "logical") {
            config.layout = fpqs::QasmLayout::Logical;
        } else if (layout == "reversed_hardware") {
            config.layout = fpqs::QasmLayout::ReversedHardware;
        } else {
            throw std::invalid_argument("unknown --layout: " + layout);
        }
        if (!noise_spec.empty()) {
            config.noise = parse_noise(noise_spec);
        }
        if (grover_baseline >= 0) {
            config.grover_baseline = grover_baseline;
        }

        const fpqs::RunReport report = fpqs::run(config);
        fpqs::write_outputs(report, config);
        if (config.out_json.empty()) {
            std::cout << fpqs::to_json(report).dump(2) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
