// SPDX-License-Identifier: Apache-2.0
//
// Seeded shot sampling and Monte-Carlo noise trajectories. All randomness
// comes from an explicitly specified generator so histograms are
// byte-identical across platforms and independent of shot-level parallelism.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "fpqs/statevector.hpp"

namespace fpqs {

/// SplitMix64 (Steele, Lea & Flood): 64-bit state advanced by the golden
/// ratio increment, output mixed by two xor-shift-multiply rounds. Fully
/// specified, so sequences are identical on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1): top 53 bits of next() scaled by 2^-53.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform index in [0, k).
    int next_index(int k);

  private:
    std::uint64_t state_;
};

/// Substream derivation rule: stream `index` of `seed` is seeded with
/// SplitMix64(seed ^ 0x9E3779B97F4A7C15 * (index + 1)).next(). Shots (and
/// tomography settings) each get their own substream, so evaluation order
/// cannot change results.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t index);

/// Measurement outcomes aggregated over repeated prepare-and-measure shots.
struct ShotHistogram {
    int shots = 0;
    std::map<std::string, int> counts; // outcome bitstring -> occurrences
    std::uint64_t seed = 0;
};

/// Stochastic error channel: depolarizing probability per touched wire for
/// one-qubit (p1) and multi-qubit (p2) gates, plus a classical readout
/// bit-flip probability applied independently per measured bit.
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;
    double readout_flip = 0.0;

    void validate() const; // all probabilities in [0, 1]
    bool is_zero() const { return p1 == 0.0 && p2 == 0.0 && readout_flip == 0.0; }
};

/// Draws `shots` i.i.d. outcomes from the marginal distribution of `state`
/// on `measured_qubits` (outcome char i = measured_qubits[i]). Shot k uses
/// substream k of `seed`: one uniform per shot, inverted through the CDF.
ShotHistogram sample(const Statevector& state, std::span<const int> measured_qubits, int shots,
                     std::uint64_t seed);

/// Monte-Carlo trajectories: per shot, the circuit is simulated gate by gate;
/// after each gate every touched wire independently suffers a uniformly
/// random Pauli (X, Y or Z) with probability p1 or p2. Measurement draws one
/// outcome from the final trajectory state and then flips each outcome bit
/// with probability readout_flip.
///
/// Draw order within a shot's substream: for each gate in circuit order, one
/// uniform per wire in listed order (plus one index draw when the error
/// fires); then one uniform for the outcome; then one uniform per measured
/// bit. Pauli Y is realized as Z followed by X (global phase is irrelevant
/// inside a trajectory).
ShotHistogram run_noisy(const Circuit& circuit, const NoiseModel& noise, int shots,
                        std::uint64_t seed, std::span<const int> measured_qubits);

/// Drops shots whose outcome char at `position` differs from `required` and
/// removes that char from the remaining keys.
struct PostselectResult {
    ShotHistogram kept;
    int discarded = 0;
};
PostselectResult postselect_bit(const ShotHistogram& histogram, int position, char required);

} // namespace fpqs
