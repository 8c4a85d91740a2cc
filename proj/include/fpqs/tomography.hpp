// SPDX-License-Identifier: Apache-2.0
//
// Full quantum state tomography by linear inversion: measure every Pauli
// basis combination, assemble the density matrix from Pauli expectations,
// and project the estimate onto the physical (PSD, trace-1) set.

#pragma once

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fpqs/sampling.hpp"
#include "fpqs/statevector.hpp"

namespace fpqs {

/// Reconstructed 2^n x 2^n state.
struct DensityMatrix {
    int n_qubits = 0;
    Eigen::MatrixXcd entries;
};

struct TomographyResult {
    DensityMatrix rho;
    std::map<std::string, double> pauli_expectations; // all 4^n strings over {I,X,Y,Z}
    double fidelity = 0.0;                            // <ref|rho|ref> for the reference state
};

/// All 3^n measurement settings over {X, Y, Z} (char k = qubit k), in
/// lexicographic order with X < Y < Z.
std::vector<std::string> tomography_settings(int n_qubits);

/// Pre-measurement basis change for a setting: per qubit, X -> H,
/// Y -> Sdg then H, Z -> nothing; Z-basis measurement follows.
Circuit basis_change_circuit(const std::string& setting);

/// Pauli-string operator (char k = qubit k, little-endian indexing).
Eigen::MatrixXcd pauli_matrix(const std::string& pauli);

/// Nearest (Frobenius) positive-semidefinite trace-1 matrix: eigenvalues are
/// projected onto the probability simplex (clip-and-redistribute) in the
/// eigenbasis of the Hermitian part.
DensityMatrix project_to_physical(const DensityMatrix& raw);

/// Linear inversion from exact outcome distributions, one per setting
/// (outcome bitstrings over the n measured qubits). Pauli strings containing
/// I are estimated by marginalizing the lexicographically first compatible
/// setting (I replaced by X). The raw estimate is projected to the physical
/// set, and fidelity <ref|rho|ref> is reported against `reference`.
/// Throws std::invalid_argument if a setting is missing or malformed.
TomographyResult reconstruct(const std::map<std::string, std::map<std::string, double>>& probs_per_setting,
                             int n_qubits, const Statevector& reference);

/// Same, from sampled counts; each histogram is normalized by its shot total.
TomographyResult reconstruct(const std::map<std::string, ShotHistogram>& counts_per_setting,
                             int n_qubits, const Statevector& reference);

/// Diagonal element <t|rho|t> for a basis-state target, clipped to [0, 1].
double fidelity_pure(const DensityMatrix& rho, const std::string& target_bits);

/// <psi|rho|psi> for a pure reference state, clipped to [0, 1].
double fidelity_with_state(const DensityMatrix& rho, const Statevector& reference);

} // namespace fpqs
