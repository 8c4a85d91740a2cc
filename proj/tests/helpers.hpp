// SPDX-License-Identifier: Apache-2.0
//
// Shared test utilities. Everything here is independent of the simulation
// path it is used to check: matrices are embedded and composed directly.

#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fpqs/sampling.hpp"
#include "fpqs/statevector.hpp"

namespace fpqs::testing {

// Embeds a k-wire gate matrix into the full 2^n space from gate_matrix alone.
inline Eigen::MatrixXcd embed_gate(const GateOp& op, int n_qubits) {
    const Eigen::MatrixXcd small = gate_matrix(op);
    const std::size_t dim = std::size_t{1} << n_qubits;
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t sub = 0;
        for (std::size_t j = 0; j < op.wires.size(); ++j) {
            sub |= ((col >> op.wires[j]) & 1u) << j;
        }
        for (std::size_t sub_out = 0; sub_out < static_cast<std::size_t>(small.rows()); ++sub_out) {
            std::size_t row = col;
            for (std::size_t j = 0; j < op.wires.size(); ++j) {
                const std::size_t bit = std::size_t{1} << op.wires[j];
                row = (row & ~bit) | (((sub_out >> j) & 1u) ? bit : 0u);
            }
            full(row, col) += small(sub_out, sub);
        }
    }
    return full;
}

// Full unitary from gate matrices (not from apply_gate).
inline Eigen::MatrixXcd unitary_from_matrices(const Circuit& c) {
    const std::size_t dim = std::size_t{1} << c.n_qubits;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const GateOp& op : c.ops) {
        u = embed_gate(op, c.n_qubits) * u;
    }
    return u;
}

// Full unitary via the simulator, column by column.
inline Eigen::MatrixXcd unitary_from_simulation(const Circuit& c) {
    const std::size_t dim = std::size_t{1} << c.n_qubits;
    Eigen::MatrixXcd u(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        Statevector basis;
        basis.n_qubits = c.n_qubits;
        basis.amplitudes.assign(dim, Complex{0.0, 0.0});
        basis.amplitudes[col] = Complex{1.0, 0.0};
        const Statevector out = apply_circuit(std::move(basis), c);
        for (std::size_t row = 0; row < dim; ++row) {
            u(row, col) = out.amplitudes[row];
        }
    }
    return u;
}

// Max entrywise deviation after aligning the global phase on the largest
// entry of `reference`.
inline double phase_aligned_distance(const Eigen::MatrixXcd& reference,
                                     const Eigen::MatrixXcd& actual) {
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    reference.cwiseAbs().maxCoeff(&r, &c);
    const Complex phase = reference(r, c) / actual(r, c);
    return (actual * phase - reference).cwiseAbs().maxCoeff();
}

// Deterministic random circuit over the full gate set (arities capped by n).
inline Circuit random_circuit(SplitMix64& rng, int n_qubits, int n_ops) {
    const std::vector<GateKind> kinds = {
        GateKind::H,    GateKind::X,    GateKind::Z,
        GateKind::S,    GateKind::Sdg,  GateKind::T,
        GateKind::Tdg,  GateKind::Phase, GateKind::RotZ,
        GateKind::CNOT, GateKind::ControlledPhase,
        GateKind::Toffoli, GateKind::ZeroControlledToffoli,
    };
    Circuit c(n_qubits);
    while (c.gate_count() < n_ops) {
        const GateKind kind = kinds[static_cast<std::size_t>(rng.next_index(static_cast<int>(kinds.size())))];
        if (arity(kind) > n_qubits) {
            continue;
        }
        std::vector<int> wires;
        while (static_cast<int>(wires.size()) < arity(kind)) {
            const int w = rng.next_index(n_qubits);
            if (std::find(wires.begin(), wires.end(), w) == wires.end()) {
                wires.push_back(w);
            }
        }
        const double angle = has_angle(kind) ? rng.next_double() * 6.283185307179586 : 0.0;
        c.add(kind, wires, angle);
    }
    return c;
}

// Pearson chi-square statistic of observed counts against expected
// probabilities (bins with expected probability 0 must be unobserved).
inline double chi_square(const std::map<std::string, int>& counts,
                         const std::vector<double>& expected_probs, int shots, int n_bits) {
    double stat = 0.0;
    for (std::size_t i = 0; i < expected_probs.size(); ++i) {
        const std::string bits = bits_of_index(i, n_bits);
        const auto it = counts.find(bits);
        const double observed = it == counts.end() ? 0.0 : it->second;
        const double expected = expected_probs[i] * shots;
        if (expected > 0.0) {
            stat += (observed - expected) * (observed - expected) / expected;
        }
    }
    return stat;
}

} // namespace fpqs::testing
