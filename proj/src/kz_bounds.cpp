#include "latbound/kz_bounds.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "latbound/errors.hpp"
#include "latbound/format.hpp"

namespace latbound::kz {

namespace {

// X^(ln(X)/2) without cancellation or overflow.
double half_log_power(double x) {
    double lx = std::log(x);
    return std::exp(0.5 * lx * lx);
}

}  // namespace

double schnorr_bound(int n) {
    if (n < 1) {
        throw ValidityError("schnorr_bound: proven only for n >= 1");
    }
    double ln = std::log(static_cast<double>(n));
    return std::exp((1.0 + ln) * ln);
}

double hanrot_stehle_bound(int n) {
    if (n < 2) {
        throw ValidityError("hanrot_stehle_bound: proven only for n >= 2");
    }
    double s = 0.0;
    for (int k = 2; k <= n; ++k) {
        s += std::log(static_cast<double>(k)) / (k - 1);
    }
    return n * std::exp(s);
}

double wc18_bound(int n) {
    if (n < 9) {
        throw ValidityError("wc18_bound: proven only for n >= 9");
    }
    return 7.0 * (n / 8.0 + 6.0 / 5.0) * half_log_power((n - 1) / 8.0);
}

double new_bound(int n) {
    if (n < 109) {
        throw ValidityError("new_bound: proven only for n >= 109");
    }
    return 8.1 * (n / 8.5 + 2.0) * half_log_power((2.0 * n - 1.0) / 17.0);
}

int kz_crossover() {
    for (int n = 109; n <= 1000000; ++n) {
        if (new_bound(n) < wc18_bound(n)) {
            return n;
        }
    }
    throw std::logic_error("kz_crossover: no crossover found");
}

std::vector<Figure2Row> figure2_series(int n_lo, int n_hi) {
    if (n_lo < 111 || n_lo > n_hi) {
        throw std::domain_error(
            "figure2_series: requires 111 <= n_lo <= n_hi");
    }
    std::vector<Figure2Row> rows;
    rows.reserve(n_hi - n_lo + 1);
    for (int n = n_lo; n <= n_hi; ++n) {
        rows.push_back({n, new_bound(n) / wc18_bound(n)});
    }
    return rows;
}

void write_figure2_csv(std::ostream& out,
                       const std::vector<Figure2Row>& rows) {
    out << "n,ratio\n";
    for (const auto& r : rows) {
        out << r.n << ',' << fmt12(r.ratio) << '\n';
    }
}

}  // namespace latbound::kz
