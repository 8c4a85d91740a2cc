// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fpqs/sampling.hpp"
#include "fpqs/search.hpp"
#include "helpers.hpp"

using namespace fpqs;
using namespace fpqs::testing;

namespace {

const double kDeltaPaper = 1.0 / std::sqrt(5.0);
const std::vector<int> kTwoQubits{0, 1};

int total(const ShotHistogram& h) {
    int n = 0;
    for (const auto& [bits, count] : h.counts) {
        n += count;
    }
    return n;
}

Circuit ofpqs_circuit(int l) {
    SearchParams params{2, {"00"}, l, kDeltaPaper};
    return build_ofpqs_circuit(params, OracleMode::Direct).circuit;
}

} // namespace

TEST_CASE("deterministic state samples deterministically") {
    const Statevector s = Statevector::zero_state(2);
    const ShotHistogram h = sample(s, kTwoQubits, 8192, 1);
    CHECK(h.counts.size() == 1);
    CHECK(h.counts.at("00") == 8192);
}

TEST_CASE("uniform state counts stay within five sigma") {
    Circuit c(2);
    c.h(0).h(1);
    const Statevector s = apply_circuit(Statevector::zero_state(2), c);
    const ShotHistogram h = sample(s, kTwoQubits, 8192, 7);
    CHECK(total(h) == 8192);
    const double sigma = std::sqrt(8192 * 0.25 * 0.75);
    for (const char* bits : {"00", "01", "10", "11"}) {
        CHECK(std::abs(h.counts.at(bits) - 2048.0) < 5.0 * sigma);
    }
}

TEST_CASE("same seed twice gives identical histograms") {
    Circuit c(2);
    c.h(0).cnot(0, 1);
    const Statevector s = apply_circuit(Statevector::zero_state(2), c);
    const ShotHistogram a = sample(s, kTwoQubits, 4096, 123);
    const ShotHistogram b = sample(s, kTwoQubits, 4096, 123);
    CHECK(a.counts == b.counts);
    const ShotHistogram other = sample(s, kTwoQubits, 4096, 124);
    CHECK(a.counts != other.counts);
}

TEST_CASE("sampling argument validation") {
    const Statevector s = Statevector::zero_state(2);
    CHECK_THROWS_AS(sample(s, kTwoQubits, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample(s, std::vector<int>{0, 2}, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(sample(s, std::vector<int>{0, 0}, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_noisy(Circuit(2), NoiseModel{-0.1, 0, 0}, 10, 1, kTwoQubits),
                    std::invalid_argument);
}

TEST_CASE("histogram totals equal shots") {
    const Circuit c = ofpqs_circuit(1);
    const NoiseModel noise{0.001, 0.01, 0.02};
    for (int shots : {1, 17, 1024}) {
        CHECK(total(run_noisy(c, noise, shots, 5, kTwoQubits)) == shots);
    }
}

TEST_CASE("zero noise matches ideal sampling statistically") {
    const Circuit c = ofpqs_circuit(1);
    const Statevector ideal = apply_circuit(Statevector::zero_state(2), c);
    const std::vector<double> expected = marginal_distribution(ideal, kTwoQubits);
    const ShotHistogram h = run_noisy(c, NoiseModel{}, 8192, 11, kTwoQubits);
    // 3 degrees of freedom; chi-square critical value at alpha = 0.001.
    CHECK(chi_square(h.counts, expected, 8192, 2) < 16.266);

    Circuit uniform(2);
    uniform.h(0).h(1);
    const Statevector u = apply_circuit(Statevector::zero_state(2), uniform);
    const ShotHistogram hu = run_noisy(uniform, NoiseModel{}, 8192, 12, kTwoQubits);
    CHECK(chi_square(hu.counts, marginal_distribution(u, kTwoQubits), 8192, 2) < 16.266);
}

TEST_CASE("fully randomized readout is uniform") {
    const Circuit c = ofpqs_circuit(1);
    const ShotHistogram h = run_noisy(c, NoiseModel{0.0, 0.0, 0.5}, 8192, 21, kTwoQubits);
    const double sigma = std::sqrt(8192 * 0.25 * 0.75);
    for (const char* bits : {"00", "01", "10", "11"}) {
        CHECK(std::abs(h.counts.at(bits) - 2048.0) < 5.0 * sigma);
    }
}

TEST_CASE("noisy runs are seed-deterministic") {
    const Circuit c = ofpqs_circuit(2);
    const NoiseModel noise{0.001, 0.01, 0.02};
    const ShotHistogram a = run_noisy(c, noise, 2048, 99, kTwoQubits);
    const ShotHistogram b = run_noisy(c, noise, 2048, 99, kTwoQubits);
    CHECK(a.counts == b.counts);
}

TEST_CASE("success degrades monotonically with gate noise") {
    const Circuit c = ofpqs_circuit(1);
    double previous = 1.0;
    for (double p2 : {0.0, 0.005, 0.01, 0.02}) {
        double mean = 0.0;
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const ShotHistogram h =
                run_noisy(c, NoiseModel{0.001, p2, 0.0}, 2048, seed, kTwoQubits);
            const auto it = h.counts.find("00");
            mean += (it == h.counts.end() ? 0 : it->second) / 2048.0;
        }
        mean /= 20.0;
        CHECK(mean <= previous);
        previous = mean;
    }
}

TEST_CASE("two iterations suffer more than one under default noise") {
    const NoiseModel noise{0.001, 0.01, 0.02};
    double p_l1 = 0.0;
    double p_l2 = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        p_l1 += run_noisy(ofpqs_circuit(1), noise, 2048, seed, kTwoQubits).counts.at("00");
        p_l2 += run_noisy(ofpqs_circuit(2), noise, 2048, seed, kTwoQubits).counts.at("00");
    }
    CHECK(p_l2 < p_l1);
}

TEST_CASE("postselection splits and reindexes") {
    ShotHistogram h;
    h.shots = 10;
    h.counts = {{"000", 4}, {"010", 3}, {"001", 2}, {"111", 1}};
    const PostselectResult r = postselect_bit(h, 2, '0');
    CHECK(r.discarded == 3);
    CHECK(r.kept.shots == 7);
    CHECK(r.kept.counts.at("00") == 4);
    CHECK(r.kept.counts.at("01") == 3);
    CHECK_THROWS_AS(postselect_bit(h, 5, '0'), std::invalid_argument);
}

TEST_CASE("substreams differ and are reproducible") {
    CHECK(derive_stream(1, 0) != derive_stream(1, 1));
    CHECK(derive_stream(1, 0) != derive_stream(2, 0));
    CHECK(derive_stream(123, 45) == derive_stream(123, 45));
    SplitMix64 rng(0);
    const double u = rng.next_double();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
}
