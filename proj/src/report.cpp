// SPDX-License-Identifier: Apache-2.0

#include "fpqs/report.hpp"

#include <fstream>
#include <stdexcept>

#include "fpqs/tomography.hpp"

namespace fpqs {

namespace {

// Substream indices of the run seed. Tomography settings use 16 + index.
constexpr std::uint64_t kStreamIdealHistogram = 1;
constexpr std::uint64_t kStreamNoisyHistogram = 2;
constexpr std::uint64_t kStreamGroverHistogram = 3;
constexpr std::uint64_t kStreamTomographyBase = 16;

SearchParams params_of(const RunConfig& config) {
    SearchParams params;
    params.n_qubits = config.qubits;
    params.targets = config.targets;
    params.iterations = config.iterations;
    params.delta = config.delta;
    return params;
}

std::vector<int> search_register(int n_qubits) {
    std::vector<int> qubits(static_cast<std::size_t>(n_qubits));
    for (int q = 0; q < n_qubits; ++q) {
        qubits[static_cast<std::size_t>(q)] = q;
    }
    return qubits;
}

std::map<std::string, double> probabilities_map(const Statevector& state,
                                                std::span<const int> qubits) {
    const std::vector<double> dist = marginal_distribution(state, qubits);
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        out[bits_of_index(i, static_cast<int>(qubits.size()))] = dist[i];
    }
    return out;
}

// All 2^n outcome keys appear, observed or not.
std::map<std::string, int> full_counts(const ShotHistogram& hist, int n_bits) {
    std::map<std::string, int> out;
    for (std::size_t i = 0; i < (std::size_t{1} << n_bits); ++i) {
        out[bits_of_index(i, n_bits)] = 0;
    }
    for (const auto& [bits, count] : hist.counts) {
        out[bits] = count;
    }
    return out;
}

Statevector ideal_search_state(const Statevector& final_state, const RunConfig& config) {
    if (config.oracle_mode == OracleMode::Ancilla) {
        return project_qubit(final_state, config.qubits, 0);
    }
    return final_state;
}

TomographySection run_tomography(const SearchCircuit& sc, const RunConfig& config,
                                 const Statevector& reference) {
    const int n = config.qubits;
    const std::vector<std::string> settings = tomography_settings(n);

    std::map<std::string, ShotHistogram> counts;
    int discarded = 0;
    for (std::size_t i = 0; i < settings.size(); ++i) {
        const std::string& setting = settings[i];
        const std::uint64_t stream = derive_stream(config.seed, kStreamTomographyBase + i);
        if (config.noise) {
            Circuit measured = sc.circuit;
            for (int q = 0; q < n; ++q) {
                switch (setting[static_cast<std::size_t>(q)]) {
                case 'X':
                    measured.h(q);
                    break;
                case 'Y':
                    measured.sdg(q).h(q);
                    break;
                default:
                    break;
                }
            }
            std::vector<int> wires = search_register(measured.n_qubits);
            ShotHistogram hist = run_noisy(measured, *config.noise, config.shots, stream, wires);
            if (config.oracle_mode == OracleMode::Ancilla) {
                PostselectResult sel = postselect_bit(hist, n, '0');
                discarded += sel.discarded;
                counts.emplace(setting, std::move(sel.kept));
            } else {
                counts.emplace(setting, std::move(hist));
            }
        } else {
            const Statevector rotated = apply_circuit(reference, basis_change_circuit(setting));
            counts.emplace(setting, sample(rotated, search_register(n), config.shots, stream));
        }
    }

    const TomographyResult result = reconstruct(counts, n, reference);
    TomographySection section;
    section.pauli_expectations = result.pauli_expectations;
    section.fidelity = result.fidelity;
    section.discarded_shots = discarded;
    const auto dim = static_cast<std::size_t>(result.rho.entries.rows());
    section.rho_real.assign(dim, std::vector<double>(dim, 0.0));
    section.rho_imag.assign(dim, std::vector<double>(dim, 0.0));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const Complex v = result.rho.entries(r, c);
            section.rho_real[r][c] = v.real();
            section.rho_imag[r][c] = v.imag();
        }
    }
    return section;
}

} // namespace

RunReport run(const RunConfig& config) {
    SearchParams params = params_of(config);
    params.validate();
    if (config.shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    if (config.oracle_mode == OracleMode::Ancilla && config.qubits != 2) {
        throw std::invalid_argument("ancilla oracle mode supports a 2-qubit search register");
    }
    if (config.noise) {
        config.noise->validate();
    }
    if (config.grover_baseline && *config.grover_baseline < 0) {
        throw std::invalid_argument("grover baseline iteration count must be >= 0");
    }

    const SearchCircuit sc = build_ofpqs_circuit(params, config.oracle_mode);
    const Statevector final_state =
        apply_circuit(Statevector::zero_state(sc.circuit.n_qubits), sc.circuit);
    const std::vector<int> register_qubits = search_register(config.qubits);

    RunReport report;
    report.config = config;
    report.schedule = sc.schedule;
    report.predicted_probability = sc.predicted_probability;
    report.ideal_probabilities = probabilities_map(final_state, register_qubits);
    report.circuit = CircuitStats{sc.circuit.gate_count(), sc.circuit.depth()};
    report.histogram =
        full_counts(sample(final_state, register_qubits, config.shots,
                           derive_stream(config.seed, kStreamIdealHistogram)),
                    config.qubits);

    if (config.noise) {
        report.noisy_histogram =
            full_counts(run_noisy(sc.circuit, *config.noise, config.shots,
                                  derive_stream(config.seed, kStreamNoisyHistogram),
                                  register_qubits),
                        config.qubits);
    }

    if (config.grover_baseline) {
        const SearchCircuit gc = build_grover_circuit(config.qubits, config.targets,
                                                      *config.grover_baseline, config.oracle_mode);
        const Statevector grover_state =
            apply_circuit(Statevector::zero_state(gc.circuit.n_qubits), gc.circuit);
        GroverSection section;
        section.iterations = *config.grover_baseline;
        section.predicted_probability = gc.predicted_probability;
        section.ideal_probabilities = probabilities_map(grover_state, register_qubits);
        section.histogram =
            full_counts(sample(grover_state, register_qubits, config.shots,
                               derive_stream(config.seed, kStreamGroverHistogram)),
                        config.qubits);
        section.circuit = CircuitStats{gc.circuit.gate_count(), gc.circuit.depth()};
        report.grover = std::move(section);
    }

    if (config.tomography) {
        const Statevector reference = ideal_search_state(final_state, config);
        report.tomography = run_tomography(sc, config, reference);
    }
    return report;
}

namespace {

nlohmann::json config_json(const RunConfig& c) {
    nlohmann::json j{
        {"qubits", c.qubits},
        {"targets", c.targets},
        {"iterations", c.iterations},
        {"delta", c.delta},
        {"shots", c.shots},
        {"seed", c.seed},
        {"oracle_mode", c.oracle_mode == OracleMode::Ancilla ? "ancilla" : "direct"},
        {"tomography", c.tomography},
        {"layout", c.layout == QasmLayout::ReversedHardware ? "reversed_hardware" : "logical"},
        {"out", c.out_json},
        {"csv", c.out_csv},
        {"qasm", c.out_qasm},
    };
    if (c.noise) {
        j["noise"] = {{"p1", c.noise->p1}, {"p2", c.noise->p2}, {"readout", c.noise->readout_flip}};
    } else {
        j["noise"] = nullptr;
    }
    if (c.grover_baseline) {
        j["grover_baseline"] = *c.grover_baseline;
    } else {
        j["grover_baseline"] = nullptr;
    }
    return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig c;
    c.qubits = j.at("qubits").get<int>();
    c.targets = j.at("targets").get<std::vector<std::string>>();
    c.iterations = j.at("iterations").get<int>();
    c.delta = j.at("delta").get<double>();
    c.shots = j.at("shots").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.oracle_mode =
        j.at("oracle_mode").get<std::string>() == "ancilla" ? OracleMode::Ancilla : OracleMode::Direct;
    c.tomography = j.at("tomography").get<bool>();
    c.layout = j.at("layout").get<std::string>() == "reversed_hardware"
                   ? QasmLayout::ReversedHardware
                   : QasmLayout::Logical;
    c.out_json = j.at("out").get<std::string>();
    c.out_csv = j.at("csv").get<std::string>();
    c.out_qasm = j.at("qasm").get<std::string>();
    if (!j.at("noise").is_null()) {
        NoiseModel noise;
        noise.p1 = j.at("noise").at("p1").get<double>();
        noise.p2 = j.at("noise").at("p2").get<double>();
        noise.readout_flip = j.at("noise").at("readout").get<double>();
        c.noise = noise;
    }
    if (!j.at("grover_baseline").is_null()) {
        c.grover_baseline = j.at("grover_baseline").get<int>();
    }
    return c;
}

nlohmann::json stats_json(const CircuitStats& s) {
    return {{"gate_count", s.gate_count}, {"depth", s.depth}};
}

CircuitStats stats_from_json(const nlohmann::json& j) {
    return CircuitStats{j.at("gate_count").get<int>(), j.at("depth").get<int>()};
}

} // namespace

nlohmann::json to_json(const RunReport& report) {
    nlohmann::json j;
    j["config"] = config_json(report.config);
    j["schedule"] = {{"L", report.schedule.reflections},
                     {"gamma", report.schedule.gamma},
                     {"alphas", report.schedule.alphas},
                     {"betas", report.schedule.betas}};
    j["predicted_probability"] = report.predicted_probability;
    j["ideal_probabilities"] = report.ideal_probabilities;
    j["histogram"] = report.histogram;
    j["noisy_histogram"] = report.noisy_histogram ? nlohmann::json(*report.noisy_histogram)
                                                  : nlohmann::json(nullptr);
    if (report.tomography) {
        j["tomography"] = {{"pauli_expectations", report.tomography->pauli_expectations},
                           {"rho_real", report.tomography->rho_real},
                           {"rho_imag", report.tomography->rho_imag},
                           {"fidelity", report.tomography->fidelity},
                           {"discarded_shots", report.tomography->discarded_shots}};
    } else {
        j["tomography"] = nullptr;
    }
    if (report.grover) {
        j["grover"] = {{"iterations", report.grover->iterations},
                       {"predicted_probability", report.grover->predicted_probability},
                       {"ideal_probabilities", report.grover->ideal_probabilities},
                       {"histogram", report.grover->histogram},
                       {"circuit", stats_json(report.grover->circuit)}};
    } else {
        j["grover"] = nullptr;
    }
    j["circuit"] = stats_json(report.circuit);
    return j;
}

RunReport report_from_json(const nlohmann::json& j) {
    RunReport report;
    report.config = config_from_json(j.at("config"));
    report.schedule.reflections = j.at("schedule").at("L").get<int>();
    report.schedule.gamma = j.at("schedule").at("gamma").get<double>();
    report.schedule.alphas = j.at("schedule").at("alphas").get<std::vector<double>>();
    report.schedule.betas = j.at("schedule").at("betas").get<std::vector<double>>();
    report.predicted_probability = j.at("predicted_probability").get<double>();
    report.ideal_probabilities = j.at("ideal_probabilities").get<std::map<std::string, double>>();
    report.histogram = j.at("histogram").get<std::map<std::string, int>>();
    if (!j.at("noisy_histogram").is_null()) {
        report.noisy_histogram = j.at("noisy_histogram").get<std::map<std::string, int>>();
    }
    if (!j.at("tomography").is_null()) {
        const nlohmann::json& t = j.at("tomography");
        TomographySection section;
        section.pauli_expectations = t.at("pauli_expectations").get<std::map<std::string, double>>();
        section.rho_real = t.at("rho_real").get<std::vector<std::vector<double>>>();
        section.rho_imag = t.at("rho_imag").get<std::vector<std::vector<double>>>();
        section.fidelity = t.at("fidelity").get<double>();
        section.discarded_shots = t.at("discarded_shots").get<int>();
        report.tomography = std::move(section);
    }
    if (!j.at("grover").is_null()) {
        const nlohmann::json& g = j.at("grover");
        GroverSection section;
        section.iterations = g.at("iterations").get<int>();
        section.predicted_probability = g.at("predicted_probability").get<double>();
        section.ideal_probabilities = g.at("ideal_probabilities").get<std::map<std::string, double>>();
        section.histogram = g.at("histogram").get<std::map<std::string, int>>();
        section.circuit = stats_from_json(g.at("circuit"));
        report.grover = std::move(section);
    }
    report.circuit = stats_from_json(j.at("circuit"));
    return report;
}

std::string to_csv(const RunReport& report) {
    std::string text = "bitstring,ideal_probability,count,noisy_count\n";
    for (const auto& [bits, p] : report.ideal_probabilities) {
        text += bits;
        text += ",";
        text += nlohmann::json(p).dump();
        text += ",";
        text += std::to_string(report.histogram.at(bits));
        text += ",";
        if (report.noisy_histogram) {
            text += std::to_string(report.noisy_histogram->at(bits));
        }
        text += "\n";
    }
    return text;
}

std::string qasm_for_config(const RunConfig& config) {
    SearchParams params = params_of(config);
    params.validate();
    const SearchCircuit sc = build_ofpqs_circuit(params, config.oracle_mode);
    return export_qasm(sc.circuit, config.layout);
}

void write_outputs(const RunReport& report, const RunConfig& config) {
    auto write_file = [](const std::string& path, const std::string& contents) {
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot open output file: " + path);
        }
        out << contents;
    };
    if (!config.out_json.empty()) {
        write_file(config.out_json, to_json(report).dump(2) + "\n");
    }
    if (!config.out_csv.empty()) {
        write_file(config.out_csv, to_csv(report));
    }
    if (!config.out_qasm.empty()) {
        write_file(config.out_qasm, qasm_for_config(config));
    }
}

} // namespace fpqs
