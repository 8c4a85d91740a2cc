// SPDX-License-Identifier: Apache-2.0

#include "fpqs/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

namespace fpqs {

void SearchParams::validate() const {
    if (n_qubits < 1) {
        throw std::invalid_argument("n_qubits must be >= 1");
    }
    if (targets.empty()) {
        throw std::invalid_argument("empty target set");
    }
    std::set<std::string> seen;
    for (const std::string& t : targets) {
        if (static_cast<int>(t.size()) != n_qubits) {
            throw std::invalid_argument("target length does not match n_qubits: " + t);
        }
        for (char c : t) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument("malformed target bitstring: " + t);
            }
        }
        if (!seen.insert(t).second) {
            throw std::invalid_argument("duplicate target: " + t);
        }
    }
    if (iterations < 1) {
        throw std::invalid_argument("iterations must be >= 1");
    }
    if (!(delta > 0.0) || delta > 1.0) {
        throw std::invalid_argument("delta must lie in (0, 1]");
    }
}

double SearchParams::marked_fraction() const {
    return static_cast<double>(targets.size()) / static_cast<double>(std::size_t{1} << n_qubits);
}

double chebyshev_t(double order, double x) {
    const bool integer_order = order == std::floor(order);
    if (!integer_order && x < 1.0) {
        throw std::domain_error("fractional-order Chebyshev requires x >= 1");
    }
    if (x > 1.0) {
        return std::cosh(order * std::acosh(x));
    }
    if (x >= -1.0) {
        return std::cos(order * std::acos(x));
    }
    // Integer order below -1: T_n(-x) = (-1)^n T_n(x).
    const double magnitude = std::cosh(order * std::acosh(-x));
    const bool odd = std::fmod(std::abs(order), 2.0) == 1.0;
    return odd ? -magnitude : magnitude;
}

double compute_gamma(double delta, int reflections) {
    if (!(delta > 0.0) || delta > 1.0) {
        throw std::invalid_argument("delta must lie in (0, 1]");
    }
    if (reflections < 1 || reflections % 2 == 0) {
        throw std::invalid_argument("reflection count L must be odd and >= 1");
    }
    return 1.0 / chebyshev_t(1.0 / reflections, 1.0 / delta);
}

AngleSchedule compute_schedule(int iterations, double delta) {
    if (iterations < 1) {
        throw std::invalid_argument("iterations must be >= 1");
    }
    const int big_l = 2 * iterations + 1;
    AngleSchedule schedule;
    schedule.reflections = big_l;
    schedule.gamma = compute_gamma(delta, big_l);
    const double damping = std::sqrt(1.0 - schedule.gamma * schedule.gamma);

    schedule.alphas.resize(iterations);
    schedule.betas.resize(iterations);
    for (int j = 1; j <= iterations; ++j) {
        const double t = std::tan(2.0 * std::numbers::pi * j / big_l);
        // arccot valued in (0, pi) keeps the doubled angle inside (0, 2*pi).
        const double arccot = std::numbers::pi / 2.0 - std::atan(t * damping);
        schedule.alphas[j - 1] = 2.0 * arccot;
    }
    for (int j = 1; j <= iterations; ++j) {
        schedule.betas[iterations - j] = -schedule.alphas[j - 1];
    }
    return schedule;
}

} // namespace fpqs
