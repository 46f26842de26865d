#include "latbound/validate.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "latbound/errors.hpp"
#include "latbound/format.hpp"
#include "latbound/hermite_bounds.hpp"
#include "latbound/kz_bounds.hpp"
#include "latbound/rng.hpp"

namespace latbound::validate {

namespace {

constexpr double kViolationSlack = 1e-9;

void check_config(const TrialConfig& config) {
    if (config.n < 1 || config.n > lattice::default_dimension_cap) {
        throw std::invalid_argument("trial dimension out of range");
    }
    if (config.trials < 1) {
        throw std::invalid_argument("trial count must be positive");
    }
    if (config.entry_range < 1) {
        throw std::invalid_argument("entry range must be positive");
    }
}

double hermite_reference_bound(int n) {
    if (auto exact = hermite::exact_gamma(n); exact && n <= 8) {
        return *exact;
    }
    return hermite::best_upper_bound(n);
}

// For n <= 8 the sharpest computable cap on lambda^2 / r_nn^2 chains the
// exact Hermite values: gamma_n prod_{k=2..n} gamma_k^(1/(k-1)). Beyond
// the exact table the proven bounds take over.
double kz_reference_bound(int n) {
    if (n == 1) {
        return 1.0;
    }
    if (n <= 8) {
        double log_b = std::log(*hermite::exact_gamma(n));
        for (int k = 2; k <= n; ++k) {
            log_b += std::log(*hermite::exact_gamma(k)) / (k - 1);
        }
        return std::exp(log_b);
    }
    double bound = kz::wc18_bound(n);
    if (n >= 109) {
        bound = std::min(bound, kz::new_bound(n));
    }
    return bound;
}

}  // namespace

lattice::Basis random_basis(const TrialConfig& config, int trial_index) {
    check_config(config);
    if (trial_index < 0) {
        throw std::invalid_argument("trial index must be nonnegative");
    }
    SplitMix64 rng = stream_rng(config.seed,
                                static_cast<std::uint64_t>(trial_index));
    const int n = config.n;
    const long long lo = -static_cast<long long>(config.entry_range);
    const long long hi = static_cast<long long>(config.entry_range);
    lattice::Basis basis;
    basis.A.resize(n, n);
    while (true) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                basis.A(i, j) =
                    static_cast<double>(rng.uniform_int(lo, hi));
            }
        }
        try {
            lattice::qr_decompose(basis);
            return basis;
        } catch (const RankDeficientError&) {
            // Singular draw; the stream continues, so the redraw stays a
            // pure function of (seed, trial_index).
        }
    }
}

ValidationReport run_hermite_trials(const TrialConfig& config) {
    check_config(config);
    ValidationReport report;
    report.config = config;
    report.bound_used = hermite_reference_bound(config.n);
    double max_ratio = 0.0;
    for (int t = 0; t < config.trials; ++t) {
        lattice::Basis basis = random_basis(config, t);
        double ratio = lattice::hermite_ratio(basis);
        max_ratio = std::max(max_ratio, ratio);
        bool violation = ratio > report.bound_used + kViolationSlack;
        if (violation) {
            ++report.violations;
        }
        report.per_trial.push_back({t, ratio, report.bound_used, violation});
    }
    report.max_hermite_ratio = max_ratio;
    return report;
}

ValidationReport run_kz_trials(const TrialConfig& config) {
    check_config(config);
    ValidationReport report;
    report.config = config;
    report.bound_used = kz_reference_bound(config.n);
    double max_ratio = 0.0;
    for (int t = 0; t < config.trials; ++t) {
        lattice::Basis basis = random_basis(config, t);
        auto [reduced, transform] = lattice::kz_reduce(basis);
        if (!lattice::is_unimodular(transform.Z)) {
            throw std::logic_error("kz transform lost unimodularity");
        }
        if (!lattice::is_kz_reduced(reduced)) {
            throw std::logic_error("kz reduction postcondition failed");
        }
        double ratio = lattice::kz_ratio(reduced);
        max_ratio = std::max(max_ratio, ratio);
        bool violation = ratio > report.bound_used + kViolationSlack;
        if (violation) {
            ++report.violations;
        }
        report.per_trial.push_back({t, ratio, report.bound_used, violation});
    }
    report.max_kz_ratio = max_ratio;
    return report;
}

nlohmann::ordered_json to_json(const ValidationReport& report) {
    nlohmann::ordered_json j;
    j["config"] = {
        {"n", report.config.n},
        {"trials", report.config.trials},
        {"seed", report.config.seed},
        {"entry_range", report.config.entry_range},
    };
    j["mode"] = report.max_hermite_ratio ? "hermite" : "kz";
    j["bound_used"] = report.bound_used;
    if (report.max_hermite_ratio) {
        j["max_hermite_ratio"] = *report.max_hermite_ratio;
    }
    if (report.max_kz_ratio) {
        j["max_kz_ratio"] = *report.max_kz_ratio;
    }
    j["violations"] = report.violations;
    return j;
}

void write_trials_csv(std::ostream& out, const ValidationReport& report) {
    out << "trial,ratio,bound,violation\n";
    for (const TrialRow& row : report.per_trial) {
        out << row.trial << "," << fmt12(row.ratio) << ","
            << fmt12(row.bound) << "," << (row.violation ? 1 : 0) << "\n";
    }
}

}  // namespace latbound::validate
