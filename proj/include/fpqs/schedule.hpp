// SPDX-License-Identifier: Apache-2.0
//
// Chebyshev phase schedules for fixed-point quantum search.

#pragma once

#include <string>
#include <vector>

namespace fpqs {

/// A search problem instance: n-qubit register, marked bitstrings, number of
/// generalized Grover iterations l, and the failure-amplitude bound delta
/// (the success floor is 1 - delta^2).
struct SearchParams {
    int n_qubits = 0;
    std::vector<std::string> targets; // unique bitstrings of length n_qubits
    int iterations = 1;               // l >= 1
    double delta = 1.0;               // in (0, 1]

    /// Throws std::invalid_argument on any violated constraint; sorts and
    /// checks the target set.
    void validate() const;

    /// Marked fraction M / 2^n.
    double marked_fraction() const;
};

/// Phase sequence derived from (l, delta): L = 2l+1 reflections, the
/// Chebyshev parameter gamma, and the paired angles with
/// beta_{l+1-j} = -alpha_j.
struct AngleSchedule {
    int reflections = 0; // L = 2l + 1
    double gamma = 1.0;
    std::vector<double> alphas; // alpha_1..alpha_l, radians, each in (0, 2*pi)
    std::vector<double> betas;  // beta_j = -alpha_{l+1-j}
};

/// Chebyshev polynomial of the first kind, T_order(x):
///   cos(order*acos(x))   for |x| <= 1,
///   cosh(order*acosh(x)) for x > 1 (continuous at x = 1),
/// and the parity extension for integer order when x < -1. Fractional order
/// requires x >= 1; violations throw std::domain_error.
double chebyshev_t(double order, double x);

/// gamma = 1 / T_{1/L}(1/delta). Requires delta in (0, 1] and odd L >= 1;
/// gamma is in (0, 1] and equals 1 exactly when delta = 1.
double compute_gamma(double delta, int reflections);

/// Full schedule for l iterations:
///   alpha_j = 2*arccot(tan(2*pi*j/L) * sqrt(1 - gamma^2)),  j = 1..l,
/// with arccot valued in (0, pi), and beta_{l+1-j} = -alpha_j.
AngleSchedule compute_schedule(int iterations, double delta);

} // namespace fpqs
