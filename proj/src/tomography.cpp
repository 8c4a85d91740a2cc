// SPDX-License-Identifier: Apache-2.0

#include "fpqs/tomography.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fpqs {

namespace {

constexpr const char* kBases = "XYZ";
constexpr const char* kPaulis = "IXYZ";

void check_letters(const std::string& s, const char* alphabet, const char* what) {
    for (char c : s) {
        if (std::string_view(alphabet).find(c) == std::string_view::npos) {
            throw std::invalid_argument(std::string("invalid ") + what + " string: " + s);
        }
    }
}

// Entry of a single-qubit Pauli, row/col in {0,1}.
Complex pauli_entry(char p, int row, int col) {
    switch (p) {
    case 'I': return row == col ? Complex{1, 0} : Complex{0, 0};
    case 'X': return row != col ? Complex{1, 0} : Complex{0, 0};
    case 'Y':
        if (row == col) return {0, 0};
        return row == 1 ? Complex{0, 1} : Complex{0, -1};
    case 'Z': return row != col ? Complex{0, 0} : (row == 0 ? Complex{1, 0} : Complex{-1, 0});
    default: throw std::invalid_argument("invalid Pauli letter");
    }
}

// Normalized outcome distribution with validated keys.
std::vector<double> distribution_vector(const std::map<std::string, double>& probs, int n_qubits,
                                        const std::string& setting) {
    std::vector<double> dist(std::size_t{1} << n_qubits, 0.0);
    double total = 0.0;
    for (const auto& [bits, p] : probs) {
        if (static_cast<int>(bits.size()) != n_qubits) {
            throw std::invalid_argument("outcome width mismatch in setting " + setting);
        }
        if (p < 0.0) {
            throw std::invalid_argument("negative outcome weight in setting " + setting);
        }
        dist[index_of_bits(bits)] += p;
        total += p;
    }
    if (total <= 0.0) {
        throw std::invalid_argument("setting " + setting + " carries no weight");
    }
    for (double& p : dist) {
        p /= total;
    }
    return dist;
}

double expectation_from(const std::vector<double>& dist, const std::string& pauli) {
    std::size_t mask = 0;
    for (std::size_t k = 0; k < pauli.size(); ++k) {
        if (pauli[k] != 'I') {
            mask |= std::size_t{1} << k;
        }
    }
    double value = 0.0;
    for (std::size_t outcome = 0; outcome < dist.size(); ++outcome) {
        const int parity = std::popcount(outcome & mask) & 1;
        value += parity ? -dist[outcome] : dist[outcome];
    }
    return value;
}

TomographyResult reconstruct_from_distributions(
    const std::map<std::string, std::vector<double>>& dist_per_setting, int n_qubits,
    const Statevector& reference) {
    const std::size_t dim = std::size_t{1} << n_qubits;

    TomographyResult result;
    result.rho.n_qubits = n_qubits;
    Eigen::MatrixXcd raw = Eigen::MatrixXcd::Zero(dim, dim);

    const std::size_t n_paulis = std::size_t{1} << (2 * n_qubits); // 4^n
    for (std::size_t code = 0; code < n_paulis; ++code) {
        std::string pauli(static_cast<std::size_t>(n_qubits), 'I');
        std::size_t rest = code;
        for (int k = n_qubits - 1; k >= 0; --k) {
            pauli[static_cast<std::size_t>(k)] = kPaulis[rest & 3];
            rest >>= 2;
        }
        double value;
        if (pauli == std::string(static_cast<std::size_t>(n_qubits), 'I')) {
            value = 1.0;
        } else {
            std::string setting = pauli;
            std::replace(setting.begin(), setting.end(), 'I', 'X');
            const auto it = dist_per_setting.find(setting);
            if (it == dist_per_setting.end()) {
                throw std::invalid_argument("missing tomography setting: " + setting);
            }
            value = expectation_from(it->second, pauli);
        }
        result.pauli_expectations[pauli] = value;
        raw += value * pauli_matrix(pauli);
    }
    raw /= static_cast<double>(dim);

    result.rho = project_to_physical(DensityMatrix{n_qubits, raw});
    result.fidelity = fidelity_with_state(result.rho, reference);
    return result;
}

} // namespace

std::vector<std::string> tomography_settings(int n_qubits) {
    if (n_qubits < 1) {
        throw std::invalid_argument("n_qubits must be >= 1");
    }
    std::size_t total = 1;
    for (int k = 0; k < n_qubits; ++k) {
        total *= 3;
    }
    std::vector<std::string> settings;
    settings.reserve(total);
    for (std::size_t m = 0; m < total; ++m) {
        std::string s(static_cast<std::size_t>(n_qubits), 'X');
        std::size_t rest = m;
        for (int k = n_qubits - 1; k >= 0; --k) {
            s[static_cast<std::size_t>(k)] = kBases[rest % 3];
            rest /= 3;
        }
        settings.push_back(std::move(s));
    }
    return settings;
}

Circuit basis_change_circuit(const std::string& setting) {
    check_letters(setting, kBases, "measurement-basis");
    Circuit c(static_cast<int>(setting.size()));
    for (int q = 0; q < c.n_qubits; ++q) {
        switch (setting[static_cast<std::size_t>(q)]) {
        case 'X':
            c.h(q);
            break;
        case 'Y':
            c.sdg(q);
            c.h(q);
            break;
        default:
            break;
        }
    }
    return c;
}

Eigen::MatrixXcd pauli_matrix(const std::string& pauli) {
    check_letters(pauli, kPaulis, "Pauli");
    const int n = static_cast<int>(pauli.size());
    const std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            Complex value{1.0, 0.0};
            for (int k = 0; k < n && value != Complex{0.0, 0.0}; ++k) {
                value *= pauli_entry(pauli[static_cast<std::size_t>(k)],
                                     static_cast<int>((i >> k) & 1), static_cast<int>((j >> k) & 1));
            }
            m(i, j) = value;
        }
    }
    return m;
}

DensityMatrix project_to_physical(const DensityMatrix& raw) {
    const Eigen::MatrixXcd herm = (raw.entries + raw.entries.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
    Eigen::VectorXd values = solver.eigenvalues();

    // Euclidean projection of the spectrum onto the probability simplex.
    std::vector<double> sorted(values.data(), values.data() + values.size());
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    double cumulative = 0.0;
    double shift = 0.0;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        cumulative += sorted[k];
        const double candidate = (1.0 - cumulative) / static_cast<double>(k + 1);
        if (sorted[k] + candidate > 0.0) {
            shift = candidate;
        }
    }
    Eigen::VectorXd clipped = values;
    for (Eigen::Index i = 0; i < clipped.size(); ++i) {
        clipped(i) = std::max(values(i) + shift, 0.0);
    }

    DensityMatrix out;
    out.n_qubits = raw.n_qubits;
    out.entries = solver.eigenvectors() * clipped.asDiagonal() * solver.eigenvectors().adjoint();
    return out;
}

TomographyResult reconstruct(
    const std::map<std::string, std::map<std::string, double>>& probs_per_setting, int n_qubits,
    const Statevector& reference) {
    if (reference.n_qubits != n_qubits) {
        throw std::invalid_argument("reference state width mismatch");
    }
    std::map<std::string, std::vector<double>> dists;
    for (const auto& [setting, probs] : probs_per_setting) {
        check_letters(setting, kBases, "measurement-basis");
        dists.emplace(setting, distribution_vector(probs, n_qubits, setting));
    }
    return reconstruct_from_distributions(dists, n_qubits, reference);
}

TomographyResult reconstruct(const std::map<std::string, ShotHistogram>& counts_per_setting,
                             int n_qubits, const Statevector& reference) {
    std::map<std::string, std::map<std::string, double>> probs;
    for (const auto& [setting, hist] : counts_per_setting) {
        if (hist.shots < 1) {
            throw std::invalid_argument("setting " + setting + " has no shots");
        }
        std::map<std::string, double> freq;
        for (const auto& [bits, count] : hist.counts) {
            freq[bits] = static_cast<double>(count) / static_cast<double>(hist.shots);
        }
        probs.emplace(setting, std::move(freq));
    }
    return reconstruct(probs, n_qubits, reference);
}

double fidelity_pure(const DensityMatrix& rho, const std::string& target_bits) {
    if (static_cast<int>(target_bits.size()) != rho.n_qubits) {
        throw std::invalid_argument("target length does not match density matrix");
    }
    const std::size_t i = index_of_bits(target_bits);
    return std::clamp(rho.entries(i, i).real(), 0.0, 1.0);
}

double fidelity_with_state(const DensityMatrix& rho, const Statevector& reference) {
    if (reference.n_qubits != rho.n_qubits) {
        throw std::invalid_argument("reference state width mismatch");
    }
    Eigen::Map<const Eigen::VectorXcd> psi(reference.amplitudes.data(),
                                           static_cast<Eigen::Index>(reference.amplitudes.size()));
    const Complex value = (psi.adjoint() * rho.entries * psi)(0, 0);
    return std::clamp(value.real(), 0.0, 1.0);
}

} // namespace fpqs
