// SPDX-License-Identifier: Apache-2.0
//
// Oracle, diffusion and full search-circuit builders, plus the analytic
// success-probability predictors.

#pragma once

#include <string>
#include <vector>

#include "fpqs/schedule.hpp"
#include "fpqs/statevector.hpp"

namespace fpqs {

/// How the selective phase is realized:
///  - Direct: a diagonal construction on the search register alone.
///  - Ancilla: one extra qubit (wire n_qubits) is flipped by a Toffoli
///    variant, phased, and unflipped; it returns to |0> after every call.
///    Supported for 2-qubit search registers.
enum class OracleMode { Direct, Ancilla };

/// A built search circuit together with the problem it encodes and the
/// analytic success probability of measuring a marked state.
struct SearchCircuit {
    Circuit circuit;
    SearchParams params;
    AngleSchedule schedule;
    OracleMode mode = OracleMode::Direct;
    double predicted_probability = 0.0;
};

/// Circuit multiplying every marked basis state by e^{i theta}.
///
/// Direct mode emits, per target, an X-conjugated controlled-phase ladder
/// (supported for 1..4 qubits). Ancilla mode emits, per target, the Toffoli
/// variant selecting the pattern, Phase(theta) on the ancilla, and the same
/// variant again; the all-zeros pattern uses the zero-controlled Toffoli.
/// On states with the ancilla in |0>, the ancilla construction acts exactly
/// as the direct one (tensored with identity on the ancilla).
Circuit build_selective_phase(int n_qubits, const std::vector<std::string>& targets, double theta,
                              OracleMode mode);

/// Full fixed-point search circuit: Hadamards prepare the uniform state over
/// the search register (ancilla, if any, stays |0>), then l rounds each
/// consisting of a selective phase on the targets followed by the diffusion
/// H^n . S_{0..0} . H^n. Round j (1-based) phases the targets by -beta_j and
/// the all-zeros string by alpha_j; this pairing realizes the Chebyshev
/// response T_L and is validated against the closed form in the tests.
SearchCircuit build_ofpqs_circuit(const SearchParams& params, OracleMode mode);

/// Exact success probability of the L = 2l+1 reflection sequence on marked
/// fraction lambda:
///   P_L(lambda) = 1 - delta^2 * T_L(T_{1/L}(1/delta) * sqrt(1-lambda))^2.
/// Equals 1 - delta^2 at lambda = 1 - gamma^2 and 1 at lambda = 1.
double predict_success_probability(double lambda, int iterations, double delta);

/// Standard Grover circuit: preparation plus `grover_iterations` repetitions
/// of [phase-pi on targets; H^n; phase-pi on all-zeros; H^n].
SearchCircuit build_grover_circuit(int n_qubits, const std::vector<std::string>& targets,
                                   int grover_iterations, OracleMode mode);

/// sin^2((2k+1) * asin(sqrt(lambda))).
double grover_success_probability(double lambda, int grover_iterations);

} // namespace fpqs
