// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fpqs/search.hpp"
#include "helpers.hpp"

using namespace fpqs;
using namespace fpqs::testing;

namespace {

const double kDeltaPaper = 1.0 / std::sqrt(5.0);

double simulated_target_probability(const SearchCircuit& sc) {
    const Statevector out =
        apply_circuit(Statevector::zero_state(sc.circuit.n_qubits), sc.circuit);
    std::vector<int> search(static_cast<std::size_t>(sc.params.n_qubits));
    for (int q = 0; q < sc.params.n_qubits; ++q) {
        search[static_cast<std::size_t>(q)] = q;
    }
    double total = 0.0;
    for (const std::string& t : sc.params.targets) {
        total += probability(out, search, t);
    }
    return total;
}

// First `count` bitstrings of length n in index order.
std::vector<std::string> synthetic_targets(int n, int count) {
    std::vector<std::string> targets;
    for (int i = 0; i < count; ++i) {
        targets.push_back(bits_of_index(static_cast<std::size_t>(i), n));
    }
    return targets;
}

} // namespace

TEST_CASE("selective phase about |00> with angle pi") {
    const Circuit c = build_selective_phase(2, {"00"}, std::numbers::pi, OracleMode::Direct);
    Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(4, 4);
    expected(0, 0) = -1.0;
    CHECK((unitary_from_simulation(c) - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("zero-angle selective phase is the identity") {
    const Circuit c = build_selective_phase(2, {"11"}, 0.0, OracleMode::Direct);
    CHECK((unitary_from_simulation(c) - Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() <
          1e-12);
}

TEST_CASE("direct selective phase is diagonal on marked states") {
    for (int n : {1, 2, 3, 4}) {
        const std::vector<std::string> targets = synthetic_targets(n, std::min(3, 1 << n));
        const double theta = 1.234;
        const Circuit c = build_selective_phase(n, targets, theta, OracleMode::Direct);
        const Eigen::MatrixXcd u = unitary_from_simulation(c);
        Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(1 << n, 1 << n);
        for (const std::string& t : targets) {
            const auto i = static_cast<Eigen::Index>(index_of_bits(t));
            expected(i, i) = std::polar(1.0, theta);
        }
        CHECK((u - expected).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("selective phase input validation") {
    CHECK_THROWS_AS(build_selective_phase(2, {}, 1.0, OracleMode::Direct), std::invalid_argument);
    CHECK_THROWS_AS(build_selective_phase(2, {"0"}, 1.0, OracleMode::Direct),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_selective_phase(2, {"00", "00"}, 1.0, OracleMode::Direct),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_selective_phase(3, {"000"}, 1.0, OracleMode::Ancilla),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_selective_phase(5, {"00000"}, 1.0, OracleMode::Direct),
                    std::invalid_argument);
}

TEST_CASE("ancilla oracle equals the direct one on the ancilla-|0> block") {
    for (const char* target : {"00", "01", "10", "11"}) {
        for (double theta : {std::numbers::pi, 4.4597, 1.7156}) {
            const Circuit direct = build_selective_phase(2, {target}, theta, OracleMode::Direct);
            const Circuit ancilla = build_selective_phase(2, {target}, theta, OracleMode::Ancilla);
            const Eigen::MatrixXcd u_direct = unitary_from_simulation(direct);
            const Eigen::MatrixXcd u_ancilla = unitary_from_simulation(ancilla);
            // Ancilla = qubit 2, so the |0>-ancilla block is the top-left 4x4.
            CHECK((u_ancilla.topLeftCorner(4, 4) - u_direct).cwiseAbs().maxCoeff() < 1e-10);
            // No leakage out of the block.
            CHECK(u_ancilla.bottomLeftCorner(4, 4).cwiseAbs().maxCoeff() < 1e-10);
        }
    }
}

TEST_CASE("single iteration hits the derived probability") {
    SearchParams params{2, {"00"}, 1, kDeltaPaper};
    const SearchCircuit sc = build_ofpqs_circuit(params, OracleMode::Direct);
    const double sim = simulated_target_probability(sc);
    // Exact value 229/256, double-checked against the closed form below.
    CHECK(std::abs(sim - 0.89453125) < 1e-9);
    CHECK(std::abs(sim - 0.894535) < 1e-5);
    CHECK(std::abs(sim - predict_success_probability(0.25, 1, kDeltaPaper)) < 1e-9);
    CHECK(std::abs(sc.predicted_probability - sim) < 1e-9);
    CHECK(sim > 0.8);
}

TEST_CASE("double iteration hits the derived probability") {
    SearchParams params{2, {"00"}, 2, kDeltaPaper};
    const SearchCircuit sc = build_ofpqs_circuit(params, OracleMode::Direct);
    const double sim = simulated_target_probability(sc);
    CHECK(std::abs(sim - 0.92540834973066473) < 1e-9);
    CHECK(std::abs(sim - predict_success_probability(0.25, 2, kDeltaPaper)) < 1e-9);
    CHECK(sim > 0.8);
}

TEST_CASE("everything marked gives certainty") {
    SearchParams params{2, {"00", "01", "10", "11"}, 1, 0.79};
    const SearchCircuit sc = build_ofpqs_circuit(params, OracleMode::Direct);
    CHECK(simulated_target_probability(sc) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sc.predicted_probability == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("predictor special points") {
    CHECK(std::abs(predict_success_probability(0.25, 1, kDeltaPaper) - 0.89453125) < 1e-12);
    CHECK(predict_success_probability(1.0, 3, 0.3) == 1.0);
    for (int l : {1, 2, 3}) {
        for (double delta : {0.2, kDeltaPaper, 0.6}) {
            const double gamma = compute_gamma(delta, 2 * l + 1);
            const double saturation =
                predict_success_probability(1.0 - gamma * gamma, l, delta);
            CHECK(std::abs(saturation - (1.0 - delta * delta)) < 1e-12);
        }
    }
    CHECK_THROWS_AS(predict_success_probability(0.0, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(predict_success_probability(0.5, 0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(predict_success_probability(0.5, 1, 1.5), std::invalid_argument);
}

TEST_CASE("fixed-point floor and predictor agreement across the grid") {
    for (double delta : {0.2, kDeltaPaper, 0.6}) {
        for (int l = 1; l <= 4; ++l) {
            const double gamma = compute_gamma(delta, 2 * l + 1);
            for (int i = 1; i <= 16; ++i) {
                const double lambda = i / 16.0;
                SearchParams params{4, synthetic_targets(4, i), l, delta};
                const SearchCircuit sc = build_ofpqs_circuit(params, OracleMode::Direct);
                const double sim = simulated_target_probability(sc);
                const double predicted = predict_success_probability(lambda, l, delta);
                CHECK(std::abs(sim - predicted) <= 1e-9);
                if (lambda >= 1.0 - gamma * gamma) {
                    CHECK(sim >= 1.0 - delta * delta - 1e-9);
                }
            }
        }
    }
}

TEST_CASE("predictor agreement on smaller registers") {
    for (int n : {2, 3}) {
        const int size = 1 << n;
        for (int i = 1; i <= size; ++i) {
            SearchParams params{n, synthetic_targets(n, i), 2, kDeltaPaper};
            const SearchCircuit sc = build_ofpqs_circuit(params, OracleMode::Direct);
            const double sim = simulated_target_probability(sc);
            const double predicted =
                predict_success_probability(static_cast<double>(i) / size, 2, kDeltaPaper);
            CHECK(std::abs(sim - predicted) <= 1e-9);
        }
    }
}

TEST_CASE("grover baseline and the overshoot") {
    const SearchCircuit k1 = build_grover_circuit(2, {"00"}, 1, OracleMode::Direct);
    CHECK(std::abs(simulated_target_probability(k1) - 1.0) < 1e-12);
    CHECK(std::abs(grover_success_probability(0.25, 1) - 1.0) < 1e-12);

    const SearchCircuit k2 = build_grover_circuit(2, {"00"}, 2, OracleMode::Direct);
    const double p2 = simulated_target_probability(k2);
    CHECK(std::abs(p2 - 0.25) < 1e-12);
    CHECK(std::abs(grover_success_probability(0.25, 2) - 0.25) < 1e-12);

    const SearchCircuit k0 = build_grover_circuit(2, {"00"}, 0, OracleMode::Direct);
    CHECK(std::abs(simulated_target_probability(k0) - 0.25) < 1e-12);

    // Souffle contrast: the fixed-point run does not fall off.
    CHECK(p2 < simulated_target_probability(k1));
    SearchParams params{2, {"00"}, 2, kDeltaPaper};
    CHECK(simulated_target_probability(build_ofpqs_circuit(params, OracleMode::Direct)) >=
          1.0 - kDeltaPaper * kDeltaPaper);

    CHECK_THROWS_AS(build_grover_circuit(2, {"00"}, -1, OracleMode::Direct),
                    std::invalid_argument);
}

TEST_CASE("grover closed form matches simulation for several k") {
    for (int k = 0; k <= 4; ++k) {
        const SearchCircuit sc = build_grover_circuit(3, {"010"}, k, OracleMode::Direct);
        CHECK(std::abs(simulated_target_probability(sc) -
                       grover_success_probability(1.0 / 8.0, k)) < 1e-9);
    }
}

TEST_CASE("delta = 1 reduces to plain Grover") {
    SearchParams params{2, {"00"}, 1, 1.0};
    const SearchCircuit fixed_point = build_ofpqs_circuit(params, OracleMode::Direct);
    const double p = simulated_target_probability(fixed_point);
    CHECK(std::abs(p - 1.0) < 1e-10);
    const SearchCircuit grover = build_grover_circuit(2, {"00"}, 1, OracleMode::Direct);
    CHECK(std::abs(p - simulated_target_probability(grover)) < 1e-10);
}

TEST_CASE("ancilla returns to |0> after the full circuit") {
    for (int l : {1, 2}) {
        SearchParams params{2, {"00"}, l, kDeltaPaper};
        const SearchCircuit sc = build_ofpqs_circuit(params, OracleMode::Ancilla);
        CHECK(sc.circuit.n_qubits == 3);
        const Statevector out =
            apply_circuit(Statevector::zero_state(3), sc.circuit);
        CHECK(probability(out, std::vector<int>{2}, "1") <= 1e-10);
        // Probabilities agree with the direct-mode circuit.
        const SearchCircuit direct = build_ofpqs_circuit(params, OracleMode::Direct);
        CHECK(std::abs(simulated_target_probability(sc) -
                       simulated_target_probability(direct)) < 1e-10);
    }
}

TEST_CASE("predicted probability respects the floor whenever lambda is large enough") {
    for (int l : {1, 2, 3}) {
        for (double delta : {0.2, kDeltaPaper, 0.6}) {
            const double gamma = compute_gamma(delta, 2 * l + 1);
            for (int i = 1; i <= 8; ++i) {
                const double lambda = i / 8.0;
                if (lambda < 1.0 - gamma * gamma) {
                    continue;
                }
                SearchParams params{3, synthetic_targets(3, i), l, delta};
                const SearchCircuit sc = build_ofpqs_circuit(params, OracleMode::Direct);
                CHECK(sc.predicted_probability >= 1.0 - delta * delta - 1e-9);
            }
        }
    }
}
