// SPDX-License-Identifier: Apache-2.0
//
// OpenQASM 2.0 export.

#pragma once

#include <string>

#include "fpqs/statevector.hpp"

namespace fpqs {

/// Physical wire assignment in the emitted program. ReversedHardware maps
/// logical qubit i to wire (width-1-i) so that every CNOT control sits on a
/// higher-index register wire.
enum class QasmLayout { Logical, ReversedHardware };

/// Expands Toffoli variants into the canonical elementary decomposition;
/// all other gates pass through unchanged.
Circuit expand_for_qasm(const Circuit& circuit);

/// Emits OpenQASM 2.0 text (standard header plus the qelib include) for the
/// circuit with Toffoli variants expanded. Angles are printed with %.15g.
std::string export_qasm(const Circuit& circuit, QasmLayout layout);

} // namespace fpqs
