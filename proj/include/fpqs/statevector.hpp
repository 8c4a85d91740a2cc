// SPDX-License-Identifier: Apache-2.0
//
// Dense statevector simulation of pure-state quantum circuits over a small
// number of qubits. Basis indexing is little-endian: qubit 0 is the least
// significant bit of an amplitude index, and character k of a bitstring
// labels qubit k.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace fpqs {

using Complex = std::complex<double>;

enum class GateKind {
    H,
    X,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    Phase,                 // diag(1, e^{i theta})
    RotZ,                  // diag(e^{-i theta/2}, e^{i theta/2})
    CNOT,                  // wires = {control, target}
    ControlledPhase,       // diag(1,1,1,e^{i theta}) on {wire0, wire1}
    Toffoli,               // wires = {control, control, target}
    ZeroControlledToffoli, // fires when both controls are |0>
};

/// Number of wires the gate kind acts on (1, 2 or 3).
int arity(GateKind kind);

/// True for the parameterized kinds (Phase, RotZ, ControlledPhase).
bool has_angle(GateKind kind);

/// Stable lowercase name, e.g. "cnot", "zero_controlled_toffoli".
std::string_view kind_name(GateKind kind);

struct GateOp {
    GateKind kind;
    std::vector<int> wires; // distinct indices, size == arity(kind)
    double angle = 0.0;     // radians; ignored unless has_angle(kind)
};

/// An ordered gate list over `n_qubits` named wires.
struct Circuit {
    int n_qubits = 0;
    std::vector<GateOp> ops;

    explicit Circuit(int n = 0) : n_qubits(n) {}

    Circuit& add(GateKind kind, std::vector<int> wires, double angle = 0.0);
    Circuit& h(int q) { return add(GateKind::H, {q}); }
    Circuit& x(int q) { return add(GateKind::X, {q}); }
    Circuit& z(int q) { return add(GateKind::Z, {q}); }
    Circuit& s(int q) { return add(GateKind::S, {q}); }
    Circuit& sdg(int q) { return add(GateKind::Sdg, {q}); }
    Circuit& t(int q) { return add(GateKind::T, {q}); }
    Circuit& tdg(int q) { return add(GateKind::Tdg, {q}); }
    Circuit& phase(int q, double theta) { return add(GateKind::Phase, {q}, theta); }
    Circuit& rotz(int q, double theta) { return add(GateKind::RotZ, {q}, theta); }
    Circuit& cnot(int control, int target) { return add(GateKind::CNOT, {control, target}); }
    Circuit& cphase(int a, int b, double theta) { return add(GateKind::ControlledPhase, {a, b}, theta); }
    Circuit& toffoli(int c1, int c2, int target) { return add(GateKind::Toffoli, {c1, c2, target}); }
    Circuit& zc_toffoli(int c1, int c2, int target) { return add(GateKind::ZeroControlledToffoli, {c1, c2, target}); }

    /// Appends another circuit of the same width.
    Circuit& append(const Circuit& other);

    int gate_count() const { return static_cast<int>(ops.size()); }

    /// Longest wire-dependency chain of gates.
    int depth() const;
};

/// Dense amplitude vector over 2^n basis states.
struct Statevector {
    int n_qubits = 0;
    std::vector<Complex> amplitudes;

    /// |0...0> on n qubits (1 <= n <= 24).
    static Statevector zero_state(int n_qubits);

    std::size_t dim() const { return amplitudes.size(); }
    double norm_sq() const;
};

/// Index of a bitstring under the little-endian convention (char k = qubit k).
std::size_t index_of_bits(std::string_view bits);

/// Inverse of index_of_bits.
std::string bits_of_index(std::size_t index, int n_qubits);

/// Applies one gate. The returned state is the input with the gate's unitary
/// applied; norms are preserved. Throws std::invalid_argument on out-of-range
/// or duplicate wires.
Statevector apply_gate(Statevector state, const GateOp& op);

/// Left-to-right fold of apply_gate. Throws on width mismatch.
Statevector apply_circuit(Statevector state, const Circuit& circuit);

/// Probability of measuring `bits` on all qubits.
double probability(const Statevector& state, std::string_view bits);

/// Marginal probability of `bits` on the listed qubits (char i of `bits`
/// corresponds to qubits[i]).
double probability(const Statevector& state, std::span<const int> qubits, std::string_view bits);

/// Marginal outcome distribution over the listed qubits; entry m corresponds
/// to the outcome whose bit i equals bit i of m (qubits[i] little-endian).
std::vector<double> marginal_distribution(const Statevector& state, std::span<const int> qubits);

/// Projects `qubit` onto |value> and removes it, renormalizing. The remaining
/// qubits keep their relative order. Throws if the projected weight is ~0.
Statevector project_qubit(const Statevector& state, int qubit, int value);

/// Exact unitary of a gate on its own wires, 2^k x 2^k for k = arity(kind).
/// Bit j of a subspace index corresponds to wires[j].
Eigen::MatrixXcd gate_matrix(const GateOp& op);

enum class ToffoliVariant { Standard, ZeroControlled };

/// Canonical elementary-gate expansion of the Toffoli variants over
/// {H, T, Tdg, CNOT, X}, on wires {0,1} (controls) and 2 (target). Equals the
/// exact gate up to global phase.
Circuit decompose_toffoli(ToffoliVariant variant);

} // namespace fpqs
