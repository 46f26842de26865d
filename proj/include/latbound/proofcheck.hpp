#pragma once

#include <string>
#include <vector>

#include "json.hpp"

// Re-executes every finite numeric step behind the two linear-bound
// derivations shipped in hermite_bounds (LinearNew) and kz_bounds (New):
// grid positivity of
//     ln phi(t) = t ln(pi (t+8.5)/8.5) - ln Gamma(t+2),
// positivity of the derivative lower bound
//     rho(t) = ln(t+8.5) - 8.5/(t+8.5) - ln(t + e^(1-g)) + ln(pi e / 8.5)
// (g ranges over the Euler-constant enclosure), the exact product identity
// over gamma_2..gamma_8, the 79.06 product bound, the two integral bounds
// used to telescope the k >= 109 tail, convexity of
//     omega(t) = ln((t+18)/8.5) / t,
// and the final 8.1 constant.
//
// Everything is double precision backed by explicit slack tolerances;
// grid checks are evidence, not proof.
namespace latbound::proofcheck {

struct CheckResult {
    std::string name;
    bool passed = false;
    double computed = 0.0;    // the audited quantity
    double threshold = 0.0;   // the claimed bound it is compared against
    double margin = 0.0;      // signed slack in the passing direction
    double tolerance = 0.0;   // numerical slack; passed <=> margin > tolerance
};

struct ProofReport {
    std::vector<CheckResult> results;
    bool all_passed = false;
};

// min over t in {0.5, 1.0, ..., 310.0} of ln phi(t); must stay above 0.
// The grid deliberately includes t = 1.0.
CheckResult check_phi_grid();

// rho(310) evaluated at the enclosure endpoint g = 0.57 (the endpoint that
// minimizes rho); claimed > 7.96e-5.
CheckResult check_rho_at_310();

// min over a dense grid of [t_lo, t_hi] of the numerator
// e^(1-g) t - (72.25 - 17 e^(1-g)) of rho'(t), at g = 0.58 (worst case);
// must stay above 0.
CheckResult check_rho_derivative_positivity(double t_lo = 31.0,
                                            double t_hi = 1000.0);

// |prod_{k=2..8} gamma_k^(1/(k-1)) - 2^(827/420) 3^(-8/15)| below 1e-10.
CheckResult check_product_2_8();

// prod_{k=9..108} (k/8 + 6/5)^(1/(k-1)) below threshold. The threshold is
// injectable so the harness self-test can flip the check.
CheckResult check_product_9_108(double threshold = 79.06);

// Quadrature audit of
//   int_a^b ln(1 + c/t)/t dt <= (9/8) ln(b(3a+2c)/(a(3b+2c))) + c(b-a)/(4ab)
// for 0 < a < b, c > 0. Throws std::invalid_argument outside that domain.
CheckResult check_log_integral_bound(double a, double b, double c);

// (b-a) f((a+b)/2) <= int_a^b f, for a convex sample f.
enum class MidpointSample { Square, Exp, Omega };
CheckResult check_midpoint_rule(MidpointSample sample, double a, double b);

// min over a dense grid of the closed form
//   omega''(t) = (2 (t+18)^2 ln((t+18)/8.5) - (3t^2 + 36t)) / (t^3 (t+18)^2)
// on [t_lo, t_hi], t_lo >= 107.5, together with the slack chain
// ln(125.5/8.5) >= 2 and t^2 + 108t + 1296 > 0 it is reduced to.
CheckResult check_omega_convexity(double t_lo = 107.5, double t_hi = 2000.0);

// exp(int_{107.5}^{n-0.5} ln(1 + 18/t)/t dt) <= (119.5/107.5)^(9/8) e^(9/215),
// the n-independent constant the first tail factor is flattened to.
CheckResult check_first_factor_bound(int n);

// Antiderivative identity behind the second tail factor:
// int_{107.5}^{n-0.5} ln(t/8.5)/t dt = (ln^2((n-0.5)/8.5) - ln^2(107.5/8.5))/2
// to within 1e-10.
CheckResult check_second_factor_identity(int n);

// C = 79.06 * 2^(827/420) 3^(-8/15) * (119.5/107.5)^(9/8) e^(9/215)
//       * (8.5/107.5)^(ln(107.5/8.5)/2);
// must land in [8.0905, 8.0920] and below 8.1.
CheckResult check_final_constant();

// All checks above, parameterized ones over their documented default
// instantiations, in fixed registration order. Sequential so margins are
// bit-for-bit reproducible.
ProofReport run_all();

// JSON forms: a CheckResult is {name, passed, computed, threshold, margin,
// tolerance} with that key order; a ProofReport is the bare array.
nlohmann::ordered_json to_json(const CheckResult& r);
nlohmann::ordered_json to_json(const ProofReport& r);

}  // namespace latbound::proofcheck
