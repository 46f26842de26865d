#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "json.hpp"

#include "latbound/lattice.hpp"

namespace latbound::validate {

struct TrialConfig {
    int n = 2;
    int trials = 200;
    std::uint64_t seed = 0;
    int entry_range = 10;   // entries uniform in [-B, B]
};

struct TrialRow {
    int trial;
    double ratio;
    double bound;
    bool violation;
};

struct ValidationReport {
    TrialConfig config;
    std::optional<double> max_hermite_ratio;
    std::optional<double> max_kz_ratio;
    double bound_used = 0.0;
    int violations = 0;   // trials with ratio > bound_used + 1e-9
    std::vector<TrialRow> per_trial;
};

// Deterministic function of (seed, trial_index); redraws within the trial's
// stream until the matrix has full column rank.
lattice::Basis random_basis(const TrialConfig& config, int trial_index);

// Hermite ratios of raw random bases against exact gamma_n (n <= 8) or
// best_upper_bound(n) otherwise.
ValidationReport run_hermite_trials(const TrialConfig& config);

// KZ-reduces every random basis, verifies the reduction postcondition
// (throws std::logic_error if it ever fails), and compares kz_ratio against
// gamma_n prod_{k=2..n} gamma_k^(1/(k-1)) (n <= 8) or the proven upper
// bounds otherwise.
ValidationReport run_kz_trials(const TrialConfig& config);

// JSON with stable key order; per-trial rows included only when present.
nlohmann::ordered_json to_json(const ValidationReport& report);

// CSV: header `trial,ratio,bound,violation`, 12 significant digits.
void write_trials_csv(std::ostream& out, const ValidationReport& report);

}  // namespace latbound::validate
