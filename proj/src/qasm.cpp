// SPDX-License-Identifier: Apache-2.0

#include "fpqs/qasm.hpp"

#include <cstdio>
#include <stdexcept>

namespace fpqs {

namespace {

std::string format_angle(double theta) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", theta);
    return buf;
}

const char* qasm_name(GateKind kind) {
    switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Phase: return "u1";
    case GateKind::RotZ: return "rz";
    case GateKind::CNOT: return "cx";
    case GateKind::ControlledPhase: return "cu1";
    default: throw std::invalid_argument("gate kind not expressible in OpenQASM 2.0");
    }
}

} // namespace

Circuit expand_for_qasm(const Circuit& circuit) {
    Circuit out(circuit.n_qubits);
    for (const GateOp& op : circuit.ops) {
        if (op.kind != GateKind::Toffoli && op.kind != GateKind::ZeroControlledToffoli) {
            out.ops.push_back(op);
            continue;
        }
        const Circuit body = decompose_toffoli(op.kind == GateKind::Toffoli
                                                   ? ToffoliVariant::Standard
                                                   : ToffoliVariant::ZeroControlled);
        for (GateOp g : body.ops) {
            for (int& w : g.wires) {
                w = op.wires[static_cast<std::size_t>(w)];
            }
            out.ops.push_back(std::move(g));
        }
    }
    return out;
}

std::string export_qasm(const Circuit& circuit, QasmLayout layout) {
    const Circuit expanded = expand_for_qasm(circuit);
    const int width = expanded.n_qubits;
    auto wire = [&](int q) { return layout == QasmLayout::ReversedHardware ? width - 1 - q : q; };

    std::string text;
    text += "OPENQASM 2.0;\n";
    text += "include \"qelib1.inc\";\n";
    text += "qreg q[" + std::to_string(width) + "];\n";
    text += "creg c[" + std::to_string(width) + "];\n";
    for (const GateOp& op : expanded.ops) {
        text += qasm_name(op.kind);
        if (has_angle(op.kind)) {
            text += "(" + format_angle(op.angle) + ")";
        }
        text += " ";
        for (std::size_t i = 0; i < op.wires.size(); ++i) {
            if (i > 0) {
                text += ",";
            }
            text += "q[" + std::to_string(wire(op.wires[i])) + "]";
        }
        text += ";\n";
    }
    return text;
}

} // namespace fpqs
