#include "latbound/hermite_bounds.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "latbound/format.hpp"
#include "latbound/specfun.hpp"

namespace latbound::hermite {

const std::vector<ExactEntry>& exact_gamma_table() {
    // gamma_n^n held as exact rationals; only the n = 24 value is taken on
    // faith from tables rather than re-derivable by enumeration here.
    static const std::vector<ExactEntry> table = {
        {1, 1, 1, false},
        {2, 4, 3, false},
        {3, 2, 1, false},
        {4, 4, 1, false},
        {5, 8, 1, false},
        {6, 64, 3, false},
        {7, 64, 1, false},
        {8, 256, 1, false},
        {24, 281474976710656LL, 1, true},   // 4^24
    };
    return table;
}

std::optional<double> exact_gamma(int n) {
    for (const auto& e : exact_gamma_table()) {
        if (e.n == n) {
            return std::pow(static_cast<double>(e.num) / e.den, 1.0 / n);
        }
    }
    return std::nullopt;
}

double blichfeldt_bound(int n) {
    if (n < 1) {
        throw std::domain_error("blichfeldt_bound: requires n >= 1");
    }
    return 2.0 / std::numbers::pi *
           std::exp(2.0 / n * specfun::log_gamma(2.0 + n / 2.0));
}

BoundEvaluation evaluate_bound(BoundKind kind, int n) {
    if (n < 1) {
        throw std::domain_error("evaluate_bound: requires n >= 1");
    }
    BoundEvaluation ev;
    ev.n = n;
    ev.kind = kind;
    switch (kind) {
        case BoundKind::Blichfeldt:
            ev.valid = true;
            ev.value = blichfeldt_bound(n);
            break;
        case BoundKind::LinearLLS:
            ev.valid = n >= 2;
            ev.value = 2.0 * n / 3.0;
            break;
        case BoundKind::LinearNV:
            ev.valid = true;
            ev.value = 1.0 + n / 4.0;
            break;
        case BoundKind::LinearNeu:
            // (2+6)/7 < gamma_2, so the line only bounds from n = 3 up
            // (equality at n = 8).
            ev.valid = n >= 3;
            ev.value = (n + 6.0) / 7.0;
            break;
        case BoundKind::LinearWC18:
            ev.valid = true;
            ev.value = n / 8.0 + 6.0 / 5.0;
            break;
        case BoundKind::LinearNew:
            ev.valid = true;
            ev.value = n / 8.5 + 2.0;
            break;
    }
    if (!ev.valid) {
        ev.value = 0.0;
    }
    return ev;
}

double best_upper_bound(int n) {
    if (auto g = exact_gamma(n)) {
        return *g;
    }
    // Blichfeldt first: ties between bounds resolve toward it.
    double best = blichfeldt_bound(n);
    for (BoundKind kind : {BoundKind::LinearLLS, BoundKind::LinearNV,
                           BoundKind::LinearNeu, BoundKind::LinearWC18,
                           BoundKind::LinearNew}) {
        BoundEvaluation ev = evaluate_bound(kind, n);
        if (ev.valid && ev.value < best) {
            best = ev.value;
        }
    }
    return best;
}

int hermite_crossover() {
    // n/8.5 + 2 < n/8 + 6/5 rearranges to n/136 > 4/5; first integer is 109.
    for (int n = 1; n <= 1000000; ++n) {
        if (n / 8.5 + 2.0 < n / 8.0 + 6.0 / 5.0) {
            return n;
        }
    }
    throw std::logic_error("hermite_crossover: no crossover found");
}

std::vector<Figure1Row> figure1_series(int n_max) {
    if (n_max < 1) {
        throw std::domain_error("figure1_series: requires n_max >= 1");
    }
    std::vector<Figure1Row> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        double b = blichfeldt_bound(n);
        rows.push_back({n, (n / 8.0 + 6.0 / 5.0) / b, (n / 8.5 + 2.0) / b});
    }
    return rows;
}

void write_figure1_csv(std::ostream& out,
                       const std::vector<Figure1Row>& rows) {
    out << "n,ratio1,ratio2\n";
    for (const auto& r : rows) {
        out << r.n << ',' << fmt12(r.ratio1) << ',' << fmt12(r.ratio2)
            << '\n';
    }
}

}  // namespace latbound::hermite
