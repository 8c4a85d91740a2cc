// SPDX-License-Identifier: Apache-2.0

#include "fpqs/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace fpqs {

namespace {

void validate_targets(int n_qubits, const std::vector<std::string>& targets) {
    if (n_qubits < 1) {
        throw std::invalid_argument("n_qubits must be >= 1");
    }
    if (targets.empty()) {
        throw std::invalid_argument("empty target set");
    }
    std::set<std::string> seen;
    for (const std::string& t : targets) {
        if (static_cast<int>(t.size()) != n_qubits) {
            throw std::invalid_argument("target length does not match n_qubits: " + t);
        }
        for (char c : t) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument("malformed target bitstring: " + t);
            }
        }
        if (!seen.insert(t).second) {
            throw std::invalid_argument("duplicate target: " + t);
        }
    }
}

// Phase e^{i theta} on the all-ones pattern of `wires` via a controlled-phase
// ladder (Barenco-style halving; C^2X steps use Toffoli). Supports up to four
// wires, which covers the register sizes the builders accept.
void append_phase_on_all_ones(Circuit& c, const std::vector<int>& wires, double theta) {
    switch (wires.size()) {
    case 1:
        c.phase(wires[0], theta);
        return;
    case 2:
        c.cphase(wires[0], wires[1], theta);
        return;
    case 3:
        c.cphase(wires[1], wires[2], theta / 2.0);
        c.cnot(wires[0], wires[1]);
        c.cphase(wires[1], wires[2], -theta / 2.0);
        c.cnot(wires[0], wires[1]);
        c.cphase(wires[0], wires[2], theta / 2.0);
        return;
    case 4:
        c.cphase(wires[2], wires[3], theta / 2.0);
        c.toffoli(wires[0], wires[1], wires[2]);
        c.cphase(wires[2], wires[3], -theta / 2.0);
        c.toffoli(wires[0], wires[1], wires[2]);
        append_phase_on_all_ones(c, {wires[0], wires[1], wires[3]}, theta / 2.0);
        return;
    default:
        throw std::invalid_argument("direct selective phase supports at most 4 qubits");
    }
}

void append_direct_selective_phase(Circuit& c, int n_qubits,
                                   const std::vector<std::string>& targets, double theta) {
    std::vector<int> all_wires(n_qubits);
    for (int q = 0; q < n_qubits; ++q) {
        all_wires[q] = q;
    }
    for (const std::string& target : targets) {
        std::vector<int> flips;
        for (int q = 0; q < n_qubits; ++q) {
            if (target[static_cast<std::size_t>(q)] == '0') {
                flips.push_back(q);
            }
        }
        for (int q : flips) {
            c.x(q);
        }
        append_phase_on_all_ones(c, all_wires, theta);
        for (int q : flips) {
            c.x(q);
        }
    }
}

void append_ancilla_selective_phase(Circuit& c, int n_qubits,
                                    const std::vector<std::string>& targets, double theta) {
    if (n_qubits != 2) {
        throw std::invalid_argument("ancilla oracle mode supports a 2-qubit search register");
    }
    const int ancilla = n_qubits;
    for (const std::string& target : targets) {
        if (target == "00") {
            c.zc_toffoli(0, 1, ancilla);
            c.phase(ancilla, theta);
            c.zc_toffoli(0, 1, ancilla);
            continue;
        }
        std::vector<int> flips;
        for (int q = 0; q < n_qubits; ++q) {
            if (target[static_cast<std::size_t>(q)] == '0') {
                flips.push_back(q);
            }
        }
        for (int q : flips) {
            c.x(q);
        }
        c.toffoli(0, 1, ancilla);
        c.phase(ancilla, theta);
        c.toffoli(0, 1, ancilla);
        for (int q : flips) {
            c.x(q);
        }
    }
}

void append_selective_phase(Circuit& c, int n_qubits, const std::vector<std::string>& targets,
                            double theta, OracleMode mode) {
    if (mode == OracleMode::Direct) {
        append_direct_selective_phase(c, n_qubits, targets, theta);
    } else {
        append_ancilla_selective_phase(c, n_qubits, targets, theta);
    }
}

void append_diffusion(Circuit& c, int n_qubits, double theta, OracleMode mode) {
    for (int q = 0; q < n_qubits; ++q) {
        c.h(q);
    }
    append_selective_phase(c, n_qubits, {std::string(static_cast<std::size_t>(n_qubits), '0')},
                           theta, mode);
    for (int q = 0; q < n_qubits; ++q) {
        c.h(q);
    }
}

Circuit make_prepared_circuit(int n_qubits, OracleMode mode) {
    Circuit c(mode == OracleMode::Ancilla ? n_qubits + 1 : n_qubits);
    for (int q = 0; q < n_qubits; ++q) {
        c.h(q);
    }
    return c;
}

} // namespace

Circuit build_selective_phase(int n_qubits, const std::vector<std::string>& targets, double theta,
                              OracleMode mode) {
    validate_targets(n_qubits, targets);
    std::vector<std::string> sorted = targets;
    std::sort(sorted.begin(), sorted.end());
    Circuit c(mode == OracleMode::Ancilla ? n_qubits + 1 : n_qubits);
    append_selective_phase(c, n_qubits, sorted, theta, mode);
    return c;
}

SearchCircuit build_ofpqs_circuit(const SearchParams& params, OracleMode mode) {
    params.validate();
    const int n = params.n_qubits;
    const int l = params.iterations;

    SearchCircuit sc;
    sc.params = params;
    std::sort(sc.params.targets.begin(), sc.params.targets.end());
    sc.schedule = compute_schedule(l, params.delta);
    sc.mode = mode;
    sc.circuit = make_prepared_circuit(n, mode);

    // Round j phases the targets by -beta_j and the all-zeros string by
    // alpha_j; only this pairing of the two angle lists produces the
    // Chebyshev response T_L (checked against the closed form in tests).
    for (int j = 0; j < l; ++j) {
        append_selective_phase(sc.circuit, n, sc.params.targets, -sc.schedule.betas[j], mode);
        append_diffusion(sc.circuit, n, sc.schedule.alphas[j], mode);
    }
    sc.predicted_probability =
        predict_success_probability(params.marked_fraction(), l, params.delta);
    return sc;
}

double predict_success_probability(double lambda, int iterations, double delta) {
    if (!(lambda > 0.0) || lambda > 1.0) {
        throw std::invalid_argument("lambda must lie in (0, 1]");
    }
    if (iterations < 1) {
        throw std::invalid_argument("iterations must be >= 1");
    }
    if (!(delta > 0.0) || delta > 1.0) {
        throw std::invalid_argument("delta must lie in (0, 1]");
    }
    const int big_l = 2 * iterations + 1;
    const double inv_gamma = chebyshev_t(1.0 / big_l, 1.0 / delta);
    const double response = chebyshev_t(big_l, inv_gamma * std::sqrt(1.0 - lambda));
    return std::clamp(1.0 - delta * delta * response * response, 0.0, 1.0);
}

SearchCircuit build_grover_circuit(int n_qubits, const std::vector<std::string>& targets,
                                   int grover_iterations, OracleMode mode) {
    validate_targets(n_qubits, targets);
    if (grover_iterations < 0) {
        throw std::invalid_argument("grover iteration count must be >= 0");
    }
    SearchCircuit sc;
    sc.params.n_qubits = n_qubits;
    sc.params.targets = targets;
    std::sort(sc.params.targets.begin(), sc.params.targets.end());
    sc.params.iterations = grover_iterations;
    sc.params.delta = 1.0;
    // All phases are pi; the schedule view mirrors that.
    sc.schedule.reflections = 2 * grover_iterations + 1;
    sc.schedule.gamma = 1.0;
    sc.schedule.alphas.assign(static_cast<std::size_t>(grover_iterations), std::numbers::pi);
    sc.schedule.betas.assign(static_cast<std::size_t>(grover_iterations), -std::numbers::pi);
    sc.mode = mode;
    sc.circuit = make_prepared_circuit(n_qubits, mode);
    for (int k = 0; k < grover_iterations; ++k) {
        append_selective_phase(sc.circuit, n_qubits, sc.params.targets, std::numbers::pi, mode);
        append_diffusion(sc.circuit, n_qubits, std::numbers::pi, mode);
    }
    sc.predicted_probability = grover_success_probability(
        static_cast<double>(sc.params.targets.size()) /
            static_cast<double>(std::size_t{1} << n_qubits),
        grover_iterations);
    return sc;
}

double grover_success_probability(double lambda, int grover_iterations) {
    if (!(lambda > 0.0) || lambda > 1.0) {
        throw std::invalid_argument("lambda must lie in (0, 1]");
    }
    if (grover_iterations < 0) {
        throw std::invalid_argument("grover iteration count must be >= 0");
    }
    const double theta = std::asin(std::sqrt(lambda));
    const double s = std::sin((2.0 * grover_iterations + 1.0) * theta);
    return s * s;
}

} // namespace fpqs
