#pragma once

#include <functional>

namespace latbound::quadrature {

// Adaptive Simpson with Richardson correction. abs_tol is an absolute
// target for the whole interval; max_depth caps bisection. a == b gives 0.
// Intended for smooth integrands; this toolkit only feeds it those.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, int max_depth = 60);

}  // namespace latbound::quadrature
