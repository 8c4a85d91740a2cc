// SPDX-License-Identifier: Apache-2.0

#include "fpqs/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fpqs {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

const Complex kPhaseT{std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0}; // e^{i pi/4}

void check_wires(int n_qubits, const GateOp& op) {
    if (static_cast<int>(op.wires.size()) != arity(op.kind)) {
        throw std::invalid_argument("gate arity mismatch for " + std::string(kind_name(op.kind)));
    }
    for (std::size_t i = 0; i < op.wires.size(); ++i) {
        int w = op.wires[i];
        if (w < 0 || w >= n_qubits) {
            throw std::invalid_argument("wire index out of range: " + std::to_string(w));
        }
        for (std::size_t j = i + 1; j < op.wires.size(); ++j) {
            if (op.wires[j] == w) {
                throw std::invalid_argument("duplicate wires in one op");
            }
        }
    }
}

// Applies a diagonal (1, phase) factor on one qubit.
void apply_phase_on_set_bit(std::vector<Complex>& a, int q, Complex phase) {
    const std::size_t mask = std::size_t{1} << q;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i & mask) {
            a[i] *= phase;
        }
    }
}

} // namespace

int arity(GateKind kind) {
    switch (kind) {
    case GateKind::CNOT:
    case GateKind::ControlledPhase:
        return 2;
    case GateKind::Toffoli:
    case GateKind::ZeroControlledToffoli:
        return 3;
    default:
        return 1;
    }
}

bool has_angle(GateKind kind) {
    return kind == GateKind::Phase || kind == GateKind::RotZ || kind == GateKind::ControlledPhase;
}

std::string_view kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Phase: return "phase";
    case GateKind::RotZ: return "rotz";
    case GateKind::CNOT: return "cnot";
    case GateKind::ControlledPhase: return "cphase";
    case GateKind::Toffoli: return "toffoli";
    case GateKind::ZeroControlledToffoli: return "zero_controlled_toffoli";
    }
    return "?";
}

Circuit& Circuit::add(GateKind kind, std::vector<int> wires, double angle) {
    GateOp op{kind, std::move(wires), angle};
    check_wires(n_qubits, op);
    ops.push_back(std::move(op));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.n_qubits != n_qubits) {
        throw std::invalid_argument("circuit width mismatch in append");
    }
    ops.insert(ops.end(), other.ops.begin(), other.ops.end());
    return *this;
}

int Circuit::depth() const {
    std::vector<int> wire_depth(n_qubits, 0);
    int total = 0;
    for (const GateOp& op : ops) {
        int d = 0;
        for (int w : op.wires) {
            d = std::max(d, wire_depth[w]);
        }
        ++d;
        for (int w : op.wires) {
            wire_depth[w] = d;
        }
        total = std::max(total, d);
    }
    return total;
}

Statevector Statevector::zero_state(int n_qubits) {
    if (n_qubits < 1 || n_qubits > 24) {
        throw std::invalid_argument("qubit count out of supported range [1, 24]");
    }
    Statevector s;
    s.n_qubits = n_qubits;
    s.amplitudes.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    s.amplitudes[0] = Complex{1.0, 0.0};
    return s;
}

double Statevector::norm_sq() const {
    double total = 0.0;
    for (const Complex& a : amplitudes) {
        total += std::norm(a);
    }
    return total;
}

std::size_t index_of_bits(std::string_view bits) {
    std::size_t index = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1') {
            index |= std::size_t{1} << k;
        } else if (bits[k] != '0') {
            throw std::invalid_argument("malformed bitstring: " + std::string(bits));
        }
    }
    return index;
}

std::string bits_of_index(std::size_t index, int n_qubits) {
    std::string bits(static_cast<std::size_t>(n_qubits), '0');
    for (int k = 0; k < n_qubits; ++k) {
        if (index & (std::size_t{1} << k)) {
            bits[static_cast<std::size_t>(k)] = '1';
        }
    }
    return bits;
}

Statevector apply_gate(Statevector state, const GateOp& op) {
    check_wires(state.n_qubits, op);
    std::vector<Complex>& a = state.amplitudes;
    const std::size_t dim = a.size();

    switch (op.kind) {
    case GateKind::H: {
        const std::size_t mask = std::size_t{1} << op.wires[0];
        for (std::size_t base = 0; base < dim; base += 2 * mask) {
            for (std::size_t off = 0; off < mask; ++off) {
                const std::size_t i0 = base + off;
                const std::size_t i1 = i0 + mask;
                const Complex lo = a[i0];
                const Complex hi = a[i1];
                a[i0] = (lo + hi) * kInvSqrt2;
                a[i1] = (lo - hi) * kInvSqrt2;
            }
        }
        break;
    }
    case GateKind::X: {
        const std::size_t mask = std::size_t{1} << op.wires[0];
        for (std::size_t i = 0; i < dim; ++i) {
            if (!(i & mask)) {
                std::swap(a[i], a[i | mask]);
            }
        }
        break;
    }
    case GateKind::Z:
        apply_phase_on_set_bit(a, op.wires[0], Complex{-1.0, 0.0});
        break;
    case GateKind::S:
        apply_phase_on_set_bit(a, op.wires[0], Complex{0.0, 1.0});
        break;
    case GateKind::Sdg:
        apply_phase_on_set_bit(a, op.wires[0], Complex{0.0, -1.0});
        break;
    case GateKind::T:
        apply_phase_on_set_bit(a, op.wires[0], kPhaseT);
        break;
    case GateKind::Tdg:
        apply_phase_on_set_bit(a, op.wires[0], std::conj(kPhaseT));
        break;
    case GateKind::Phase:
        apply_phase_on_set_bit(a, op.wires[0], std::polar(1.0, op.angle));
        break;
    case GateKind::RotZ: {
        const Complex lo = std::polar(1.0, -op.angle / 2.0);
        const Complex hi = std::polar(1.0, op.angle / 2.0);
        const std::size_t mask = std::size_t{1} << op.wires[0];
        for (std::size_t i = 0; i < dim; ++i) {
            a[i] *= (i & mask) ? hi : lo;
        }
        break;
    }
    case GateKind::CNOT: {
        const std::size_t control = std::size_t{1} << op.wires[0];
        const std::size_t target = std::size_t{1} << op.wires[1];
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & control) && !(i & target)) {
                std::swap(a[i], a[i | target]);
            }
        }
        break;
    }
    case GateKind::ControlledPhase: {
        const std::size_t both = (std::size_t{1} << op.wires[0]) | (std::size_t{1} << op.wires[1]);
        const Complex phase = std::polar(1.0, op.angle);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & both) == both) {
                a[i] *= phase;
            }
        }
        break;
    }
    case GateKind::Toffoli: {
        const std::size_t controls =
            (std::size_t{1} << op.wires[0]) | (std::size_t{1} << op.wires[1]);
        const std::size_t target = std::size_t{1} << op.wires[2];
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & controls) == controls && !(i & target)) {
                std::swap(a[i], a[i | target]);
            }
        }
        break;
    }
    case GateKind::ZeroControlledToffoli: {
        const std::size_t controls =
            (std::size_t{1} << op.wires[0]) | (std::size_t{1} << op.wires[1]);
        const std::size_t target = std::size_t{1} << op.wires[2];
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & controls) == 0 && !(i & target)) {
                std::swap(a[i], a[i | target]);
            }
        }
        break;
    }
    }
    return state;
}

Statevector apply_circuit(Statevector state, const Circuit& circuit) {
    if (circuit.n_qubits != state.n_qubits) {
        throw std::invalid_argument("circuit width does not match state width");
    }
    for (const GateOp& op : circuit.ops) {
        state = apply_gate(std::move(state), op);
    }
    return state;
}

double probability(const Statevector& state, std::string_view bits) {
    if (static_cast<int>(bits.size()) != state.n_qubits) {
        throw std::invalid_argument("bitstring length does not match qubit count");
    }
    return std::norm(state.amplitudes[index_of_bits(bits)]);
}

double probability(const Statevector& state, std::span<const int> qubits, std::string_view bits) {
    if (bits.size() != qubits.size()) {
        throw std::invalid_argument("bitstring length does not match qubit list");
    }
    std::size_t mask = 0;
    std::size_t want = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        const int q = qubits[i];
        if (q < 0 || q >= state.n_qubits) {
            throw std::invalid_argument("qubit index out of range: " + std::to_string(q));
        }
        const std::size_t bit = std::size_t{1} << q;
        if (mask & bit) {
            throw std::invalid_argument("duplicate qubit in marginal");
        }
        mask |= bit;
        if (bits[i] == '1') {
            want |= bit;
        } else if (bits[i] != '0') {
            throw std::invalid_argument("malformed bitstring: " + std::string(bits));
        }
    }
    double total = 0.0;
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
        if ((i & mask) == want) {
            total += std::norm(state.amplitudes[i]);
        }
    }
    return total;
}

std::vector<double> marginal_distribution(const Statevector& state, std::span<const int> qubits) {
    std::size_t seen = 0;
    for (int q : qubits) {
        if (q < 0 || q >= state.n_qubits) {
            throw std::invalid_argument("qubit index out of range: " + std::to_string(q));
        }
        const std::size_t bit = std::size_t{1} << q;
        if (seen & bit) {
            throw std::invalid_argument("duplicate qubit in marginal");
        }
        seen |= bit;
    }
    std::vector<double> dist(std::size_t{1} << qubits.size(), 0.0);
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
        std::size_t m = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            m |= ((i >> qubits[j]) & 1u) << j;
        }
        dist[m] += std::norm(state.amplitudes[i]);
    }
    return dist;
}

Statevector project_qubit(const Statevector& state, int qubit, int value) {
    if (qubit < 0 || qubit >= state.n_qubits) {
        throw std::invalid_argument("qubit index out of range");
    }
    if (value != 0 && value != 1) {
        throw std::invalid_argument("projection value must be 0 or 1");
    }
    if (state.n_qubits < 2) {
        throw std::invalid_argument("cannot remove the only qubit");
    }
    const std::size_t bit = std::size_t{1} << qubit;
    const std::size_t low_mask = bit - 1;
    Statevector out;
    out.n_qubits = state.n_qubits - 1;
    out.amplitudes.assign(std::size_t{1} << out.n_qubits, Complex{0.0, 0.0});
    double weight = 0.0;
    for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
        if (((i >> qubit) & 1u) != static_cast<std::size_t>(value)) {
            continue;
        }
        const std::size_t reduced = (i & low_mask) | ((i >> 1) & ~low_mask);
        out.amplitudes[reduced] = state.amplitudes[i];
        weight += std::norm(state.amplitudes[i]);
    }
    if (weight < 1e-12) {
        throw std::invalid_argument("projection onto a ~zero-probability branch");
    }
    const double scale = 1.0 / std::sqrt(weight);
    for (Complex& a : out.amplitudes) {
        a *= scale;
    }
    return out;
}

Eigen::MatrixXcd gate_matrix(const GateOp& op) {
    const int k = arity(op.kind);
    if (static_cast<int>(op.wires.size()) != k) {
        throw std::invalid_argument("gate arity mismatch for " + std::string(kind_name(op.kind)));
    }
    const std::size_t dim = std::size_t{1} << k;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);

    auto diag = [&](Complex on_set) {
        m(0, 0) = 1.0;
        m(1, 1) = on_set;
    };

    switch (op.kind) {
    case GateKind::H:
        m(0, 0) = m(0, 1) = m(1, 0) = kInvSqrt2;
        m(1, 1) = -kInvSqrt2;
        break;
    case GateKind::X:
        m(0, 1) = m(1, 0) = 1.0;
        break;
    case GateKind::Z:
        diag(Complex{-1.0, 0.0});
        break;
    case GateKind::S:
        diag(Complex{0.0, 1.0});
        break;
    case GateKind::Sdg:
        diag(Complex{0.0, -1.0});
        break;
    case GateKind::T:
        diag(kPhaseT);
        break;
    case GateKind::Tdg:
        diag(std::conj(kPhaseT));
        break;
    case GateKind::Phase:
        diag(std::polar(1.0, op.angle));
        break;
    case GateKind::RotZ:
        m(0, 0) = std::polar(1.0, -op.angle / 2.0);
        m(1, 1) = std::polar(1.0, op.angle / 2.0);
        break;
    case GateKind::CNOT:
        // bit 0 = control, bit 1 = target
        m(0, 0) = m(2, 2) = 1.0;
        m(3, 1) = m(1, 3) = 1.0;
        break;
    case GateKind::ControlledPhase:
        m.setIdentity();
        m(3, 3) = std::polar(1.0, op.angle);
        break;
    case GateKind::Toffoli:
        m.setIdentity();
        m(3, 3) = m(7, 7) = 0.0;
        m(7, 3) = m(3, 7) = 1.0; // |110> <-> |111> with controls on bits 0,1
        break;
    case GateKind::ZeroControlledToffoli:
        m.setIdentity();
        m(0, 0) = m(4, 4) = 0.0;
        m(4, 0) = m(0, 4) = 1.0;
        break;
    }
    return m;
}

Circuit decompose_toffoli(ToffoliVariant variant) {
    Circuit body(3);
    body.h(2)
        .cnot(1, 2)
        .tdg(2)
        .cnot(0, 2)
        .t(2)
        .cnot(1, 2)
        .tdg(2)
        .cnot(0, 2)
        .t(1)
        .t(2)
        .h(2)
        .cnot(0, 1)
        .t(0)
        .tdg(1)
        .cnot(0, 1);
    if (variant == ToffoliVariant::Standard) {
        return body;
    }
    Circuit wrapped(3);
    wrapped.x(0).x(1);
    wrapped.append(body);
    wrapped.x(0).x(1);
    return wrapped;
}

} // namespace fpqs
