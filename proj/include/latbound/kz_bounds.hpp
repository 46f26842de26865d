#pragma once

#include <iosfwd>
#include <vector>

namespace latbound::kz {

enum class BoundKind {
    Schnorr,        // n^(1 + ln n),                                   n >= 1
    HanrotStehle,   // n * prod_{k=2..n} k^(1/(k-1)),                  n >= 2
    WC18,           // 7 (n/8 + 6/5) ((n-1)/8)^(ln((n-1)/8)/2),        n >= 9
    New,            // 8.1 (n/8.5 + 2) ((2n-1)/17)^(ln((2n-1)/17)/2),  n >= 109
};

// All four evaluate in log domain; X^(ln(X)/2) is computed as
// exp(ln(X)^2/2) to avoid overflow and cancellation. Each throws
// ValidityError below its range: the inequalities are proven only there.
double schnorr_bound(int n);
double hanrot_stehle_bound(int n);
double wc18_bound(int n);
double new_bound(int n);

// Smallest n >= 109 with new_bound(n) < wc18_bound(n). Equals 111; the new
// bound is valid from 109 but only undercuts the other from 111 on.
int kz_crossover();

struct Figure2Row {
    int n;
    double ratio;   // new_bound(n) / wc18_bound(n)
};

std::vector<Figure2Row> figure2_series(int n_lo = 111, int n_hi = 1000);

// CSV: header `n,ratio`, 12 significant digits, LF endings.
void write_figure2_csv(std::ostream& out, const std::vector<Figure2Row>& rows);

}  // namespace latbound::kz
