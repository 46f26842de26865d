#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

namespace latbound::hermite {

enum class BoundKind {
    Blichfeldt,   // (2/pi) * Gamma(2 + n/2)^(2/n),            n >= 1
    LinearLLS,    // 2n/3,                                     n >= 2
    LinearNV,     // 1 + n/4,                                  n >= 1
    LinearNeu,    // (n + 6)/7,                                n >= 3
    LinearWC18,   // n/8 + 6/5,                                n >= 1
    LinearNew,    // n/8.5 + 2,                                n >= 1
};

struct BoundEvaluation {
    int n = 0;
    BoundKind kind = BoundKind::Blichfeldt;
    double value = 0.0;   // meaningful only when valid
    bool valid = false;
};

// gamma_n^n is known exactly for n in {1..8}; the n = 24 entry is
// literature-sourced (not verifiable by desk-scale enumeration).
struct ExactEntry {
    int n;
    long long num;   // gamma_n^n = num/den
    long long den;
    bool literature_sourced;
};

const std::vector<ExactEntry>& exact_gamma_table();

// gamma_n for n in {1..8, 24}; empty otherwise.
std::optional<double> exact_gamma(int n);

// Log-domain evaluation; finite up to n ~ 1e6.
double blichfeldt_bound(int n);

// Evaluates any kind, including Blichfeldt; valid = false below the kind's
// validity threshold.
BoundEvaluation evaluate_bound(BoundKind kind, int n);

// min over Blichfeldt and all valid linear bounds, unless gamma_n is known
// exactly (the exact value always wins).
double best_upper_bound(int n);

// Smallest n with LinearNew < LinearWC18. Equals 109 (the two lines cross
// at n = 108.8).
int hermite_crossover();

struct Figure1Row {
    int n;
    double ratio1;   // (n/8 + 6/5)   / blichfeldt_bound(n)
    double ratio2;   // (n/8.5 + 2)   / blichfeldt_bound(n)
};

std::vector<Figure1Row> figure1_series(int n_max);

// CSV: header `n,ratio1,ratio2`, 12 significant digits, LF endings.
void write_figure1_csv(std::ostream& out, const std::vector<Figure1Row>& rows);

}  // namespace latbound::hermite
