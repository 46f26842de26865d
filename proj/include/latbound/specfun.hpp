#pragma once

namespace latbound::specfun {

// The Euler-Mascheroni constant enters the bound derivations only through
// the enclosure 0.57 < gamma < 0.58; checks use the endpoints, never the
// full-precision value.
struct EulerGammaInterval {
    double lower = 0.57;
    double upper = 0.58;
};

// Reference value, for oracle tests only.
inline constexpr double euler_gamma_reference = 0.5772156649015329;

// ln Gamma(x). Relative error <= 1e-13 on [0.5, 1e4] (measured against the
// half-integer closed forms and lgamma); throws std::domain_error for x <= 0.
double log_gamma(double x);

// psi(x) = Gamma'(x)/Gamma(x). Absolute error <= 1e-12 on [1, 1e4];
// throws std::domain_error for x <= 0.
double digamma(double x);

}  // namespace latbound::specfun
