// SPDX-License-Identifier: Apache-2.0

#include "fpqs/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace fpqs {

int SplitMix64::next_index(int k) {
    const int i = static_cast<int>(next_double() * k);
    return std::min(i, k - 1);
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
    return g.next();
}

void NoiseModel::validate() const {
    for (double p : {p1, p2, readout_flip}) {
        if (!(p >= 0.0) || p > 1.0) {
            throw std::invalid_argument("noise probabilities must lie in [0, 1]");
        }
    }
}

namespace {

void check_measured(int n_qubits, std::span<const int> measured_qubits) {
    if (measured_qubits.empty()) {
        throw std::invalid_argument("no measured qubits");
    }
    std::size_t seen = 0;
    for (int q : measured_qubits) {
        if (q < 0 || q >= n_qubits) {
            throw std::invalid_argument("measured qubit out of range: " + std::to_string(q));
        }
        const std::size_t bit = std::size_t{1} << q;
        if (seen & bit) {
            throw std::invalid_argument("duplicate measured qubit");
        }
        seen |= bit;
    }
}

std::size_t draw_from_cdf(const std::vector<double>& cdf, double u) {
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t i = static_cast<std::size_t>(it - cdf.begin());
    return std::min(i, cdf.size() - 1);
}

std::vector<double> cumulative(const std::vector<double>& dist) {
    std::vector<double> cdf(dist.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += dist[i];
        cdf[i] = acc;
    }
    return cdf;
}

std::string outcome_string(std::size_t outcome, std::size_t width) {
    std::string bits(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if (outcome & (std::size_t{1} << i)) {
            bits[i] = '1';
        }
    }
    return bits;
}

// Pauli insertion on one wire; Y is Z then X (trajectory probabilities do
// not see the dropped global phase).
Statevector apply_pauli(Statevector state, int wire, int which) {
    if (which == 2 || which == 1) { // Z component of Z and Y
        state = apply_gate(std::move(state), GateOp{GateKind::Z, {wire}});
    }
    if (which == 0 || which == 1) { // X component of X and Y
        state = apply_gate(std::move(state), GateOp{GateKind::X, {wire}});
    }
    return state;
}

} // namespace

ShotHistogram sample(const Statevector& state, std::span<const int> measured_qubits, int shots,
                     std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    check_measured(state.n_qubits, measured_qubits);
    const std::vector<double> cdf = cumulative(marginal_distribution(state, measured_qubits));

    ShotHistogram hist;
    hist.shots = shots;
    hist.seed = seed;
    for (int shot = 0; shot < shots; ++shot) {
        SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(shot)));
        const std::size_t outcome = draw_from_cdf(cdf, rng.next_double());
        ++hist.counts[outcome_string(outcome, measured_qubits.size())];
    }
    return hist;
}

ShotHistogram run_noisy(const Circuit& circuit, const NoiseModel& noise, int shots,
                        std::uint64_t seed, std::span<const int> measured_qubits) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    noise.validate();
    check_measured(circuit.n_qubits, measured_qubits);

    ShotHistogram hist;
    hist.shots = shots;
    hist.seed = seed;
    for (int shot = 0; shot < shots; ++shot) {
        SplitMix64 rng(derive_stream(seed, static_cast<std::uint64_t>(shot)));
        Statevector state = Statevector::zero_state(circuit.n_qubits);
        for (const GateOp& op : circuit.ops) {
            state = apply_gate(std::move(state), op);
            const double p = arity(op.kind) == 1 ? noise.p1 : noise.p2;
            for (int wire : op.wires) {
                if (rng.next_double() < p) {
                    state = apply_pauli(std::move(state), wire, rng.next_index(3));
                }
            }
        }
        const std::vector<double> cdf = cumulative(marginal_distribution(state, measured_qubits));
        std::size_t outcome = draw_from_cdf(cdf, rng.next_double());
        for (std::size_t i = 0; i < measured_qubits.size(); ++i) {
            if (rng.next_double() < noise.readout_flip) {
                outcome ^= std::size_t{1} << i;
            }
        }
        ++hist.counts[outcome_string(outcome, measured_qubits.size())];
    }
    return hist;
}

PostselectResult postselect_bit(const ShotHistogram& histogram, int position, char required) {
    PostselectResult result;
    result.kept.seed = histogram.seed;
    for (const auto& [bits, count] : histogram.counts) {
        if (position < 0 || position >= static_cast<int>(bits.size())) {
            throw std::invalid_argument("post-selection position out of range");
        }
        if (bits[static_cast<std::size_t>(position)] == required) {
            std::string reduced = bits;
            reduced.erase(static_cast<std::size_t>(position), 1);
            result.kept.counts[reduced] += count;
            result.kept.shots += count;
        } else {
            result.discarded += count;
        }
    }
    return result;
}

} // namespace fpqs
