#include "latbound/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace latbound::specfun {

namespace {

// Lanczos approximation, g = 7, 9 terms.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double log_gamma_lanczos(double x) {
    // valid for x >= 0.5
    double series = kLanczos[0];
    for (int k = 1; k < 9; ++k) {
        series += kLanczos[k] / (x - 1.0 + k);
    }
    double t = x + 6.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) +
           (x - 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: requires x > 0");
    }
    if (x < 0.5) {
        // ln Gamma(x) = ln Gamma(x+1) - ln x
        return log_gamma_lanczos(x + 1.0) - std::log(x);
    }
    return log_gamma_lanczos(x);
}

double digamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("digamma: requires x > 0");
    }
    // psi(x) = psi(x+1) - 1/x until the asymptotic region.
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // Asymptotic series through x^-14; next term < 5e-17 at x = 10.
    double u = 1.0 / (x * x);
    double series = u * (1.0 / 12.0 +
                    u * (-1.0 / 120.0 +
                    u * (1.0 / 252.0 +
                    u * (-1.0 / 240.0 +
                    u * (1.0 / 132.0 +
                    u * (-691.0 / 32760.0 +
                    u * (1.0 / 12.0)))))));
    return acc + std::log(x) - 0.5 / x - series;
}

}  // namespace latbound::specfun
